#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bihom/error.hpp"
#include "bihom/field.hpp"
#include "bihom/linalg.hpp"

namespace bihom {

namespace detail {

inline void append_term(std::string& out, const FieldScalar& coeff,
                        const std::string& monomial) {
    bool negative = coeff.str().front() == '-';
    std::string mag = negative ? coeff.str().substr(1) : coeff.str();
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    if (mag != "1") out += mag + "*";
    out += monomial;
}

} // namespace detail

inline std::string render_vec(const Vec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        detail::append_term(out, v[i], "e" + std::to_string(i));
    }
    return out.empty() ? "0" : out;
}

/// Element of the two-fold tensor power of the underlying space;
/// at(i, j) is the coefficient of e_i # e_j.
class Tensor2 {
public:
    Tensor2() = default;
    Tensor2(std::size_t dim, const FieldDescriptor& field)
        : dim_(dim), field_(field),
          data_(dim * dim, FieldScalar::zero(field)) {}

    std::size_t dim() const { return dim_; }
    const FieldDescriptor& field() const { return field_; }

    FieldScalar& at(std::size_t i, std::size_t j) {
        return data_.at(i * dim_ + j);
    }
    const FieldScalar& at(std::size_t i, std::size_t j) const {
        return data_.at(i * dim_ + j);
    }

    /// Second legs of the canonical decomposition r = sum_i e_i # row(i).
    Vec row(std::size_t i) const {
        Vec out = zero_vec(dim_, field_);
        for (std::size_t j = 0; j < dim_; ++j) out[j] = at(i, j);
        return out;
    }

    bool operator==(const Tensor2& o) const {
        return dim_ == o.dim_ && data_ == o.data_;
    }
    bool operator!=(const Tensor2& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Tensor2 operator+(const Tensor2& o) const {
        check_shape(o);
        Tensor2 out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
        return out;
    }

    Tensor2 operator-(const Tensor2& o) const {
        check_shape(o);
        Tensor2 out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
        return out;
    }

    static Tensor2 outer(const Vec& x, const Vec& y, const FieldDescriptor& field) {
        Tensor2 out(x.size(), field);
        if (x.size() != y.size()) throw DimMismatch("outer product legs differ");
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < y.size(); ++j)
                out.at(i, j) = x[i] * y[j];
        }
        return out;
    }

    /// Applies A to the first leg and B to the second.
    Tensor2 map_legs(const LinearOperator& A, const LinearOperator& B) const {
        Tensor2 out(dim_, field_);
        for (std::size_t p = 0; p < dim_; ++p)
            for (std::size_t q = 0; q < dim_; ++q) {
                if (at(p, q).is_zero()) continue;
                for (std::size_t i = 0; i < dim_; ++i) {
                    if (A.at(i, p).is_zero()) continue;
                    for (std::size_t j = 0; j < dim_; ++j)
                        out.at(i, j) += at(p, q) * A.at(i, p) * B.at(j, q);
                }
            }
        return out;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                if (at(i, j).is_zero()) continue;
                detail::append_term(out, at(i, j),
                                    "e" + std::to_string(i) + " # e" +
                                        std::to_string(j));
            }
        return out.empty() ? "0" : out;
    }

private:
    void check_shape(const Tensor2& o) const {
        if (dim_ != o.dim_) throw DimMismatch("tensor dimensions differ");
        if (field_ != o.field_) throw FieldMismatch("tensor fields differ");
    }

    std::size_t dim_ = 0;
    FieldDescriptor field_ = FieldDescriptor::rationals();
    std::vector<FieldScalar> data_;
};

/// Element of the three-fold tensor power of the underlying space.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t dim, const FieldDescriptor& field)
        : dim_(dim), field_(field),
          data_(dim * dim * dim, FieldScalar::zero(field)) {}

    std::size_t dim() const { return dim_; }
    const FieldDescriptor& field() const { return field_; }

    FieldScalar& at(std::size_t i, std::size_t j, std::size_t k) {
        return data_.at((i * dim_ + j) * dim_ + k);
    }
    const FieldScalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return data_.at((i * dim_ + j) * dim_ + k);
    }

    bool operator==(const Tensor3& o) const {
        return dim_ == o.dim_ && data_ == o.data_;
    }
    bool operator!=(const Tensor3& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Tensor3 operator+(const Tensor3& o) const {
        check_shape(o);
        Tensor3 out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
        return out;
    }

    Tensor3 operator-(const Tensor3& o) const {
        check_shape(o);
        Tensor3 out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
        return out;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) {
                    if (at(i, j, k).is_zero()) continue;
                    detail::append_term(out, at(i, j, k),
                                        "e" + std::to_string(i) + " # e" +
                                            std::to_string(j) + " # e" +
                                            std::to_string(k));
                }
        return out.empty() ? "0" : out;
    }

private:
    void check_shape(const Tensor3& o) const {
        if (dim_ != o.dim_) throw DimMismatch("tensor dimensions differ");
        if (field_ != o.field_) throw FieldMismatch("tensor fields differ");
    }

    std::size_t dim_ = 0;
    FieldDescriptor field_ = FieldDescriptor::rationals();
    std::vector<FieldScalar> data_;
};

/// Structure constants of a bilinear product: at(i, j, k) is the coefficient
/// of e_k in e_i * e_j.
class BilinearProduct {
public:
    BilinearProduct() = default;
    BilinearProduct(std::size_t dim, const FieldDescriptor& field)
        : dim_(dim), field_(field),
          data_(dim * dim * dim, FieldScalar::zero(field)) {}

    static BilinearProduct from_rule(
        std::size_t dim, const FieldDescriptor& field,
        const std::function<Vec(std::size_t, std::size_t)>& rule) {
        BilinearProduct out(dim, field);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                Vec v = rule(i, j);
                if (v.size() != dim) throw DimMismatch("product rule output size");
                for (std::size_t k = 0; k < dim; ++k) out.at(i, j, k) = v[k];
            }
        return out;
    }

    std::size_t dim() const { return dim_; }
    const FieldDescriptor& field() const { return field_; }

    FieldScalar& at(std::size_t i, std::size_t j, std::size_t k) {
        return data_.at((i * dim_ + j) * dim_ + k);
    }
    const FieldScalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return data_.at((i * dim_ + j) * dim_ + k);
    }

    bool operator==(const BilinearProduct& o) const {
        return dim_ == o.dim_ && data_ == o.data_;
    }
    bool operator!=(const BilinearProduct& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Vec mul(const Vec& x, const Vec& y) const {
        if (x.size() != dim_ || y.size() != dim_)
            throw DimMismatch("product argument size");
        Vec out = zero_vec(dim_, field_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                FieldScalar c = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k)
                    out[k] += c * at(i, j, k);
            }
        }
        return out;
    }

    /// Structure constants of (x, y) -> (A x) * (B y).
    BilinearProduct twist(const LinearOperator& A, const LinearOperator& B) const {
        check_map(A);
        check_map(B);
        BilinearProduct out(dim_, field_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                Vec v = mul(A.apply(basis_vec(dim_, i, field_)),
                            B.apply(basis_vec(dim_, j, field_)));
                for (std::size_t k = 0; k < dim_; ++k) out.at(i, j, k) = v[k];
            }
        return out;
    }

    BilinearProduct operator+(const BilinearProduct& o) const {
        if (dim_ != o.dim_) throw DimMismatch("product dimensions differ");
        BilinearProduct out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
        return out;
    }

    /// Opposite in the twisted sense used throughout: (x, y) -> y * x.
    BilinearProduct flipped() const {
        BilinearProduct out(dim_, field_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    out.at(i, j, k) = at(j, i, k);
        return out;
    }

private:
    void check_map(const LinearOperator& A) const {
        if (A.rows() != dim_ || A.cols() != dim_)
            throw DimMismatch("twist map shape");
        if (A.field() != field_) throw FieldMismatch("twist map field");
    }

    std::size_t dim_ = 0;
    FieldDescriptor field_ = FieldDescriptor::rationals();
    std::vector<FieldScalar> data_;
};

/// Structure constants of a comultiplication: at(i, j, k) is the coefficient
/// of e_j # e_k in Delta(e_i).
class Comultiplication {
public:
    Comultiplication() = default;
    Comultiplication(std::size_t dim, const FieldDescriptor& field)
        : dim_(dim), field_(field),
          data_(dim * dim * dim, FieldScalar::zero(field)) {}

    static Comultiplication from_rule(
        std::size_t dim, const FieldDescriptor& field,
        const std::function<Tensor2(std::size_t)>& rule) {
        Comultiplication out(dim, field);
        for (std::size_t i = 0; i < dim; ++i) {
            Tensor2 t = rule(i);
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k)
                    out.at(i, j, k) = t.at(j, k);
        }
        return out;
    }

    std::size_t dim() const { return dim_; }
    const FieldDescriptor& field() const { return field_; }

    FieldScalar& at(std::size_t i, std::size_t j, std::size_t k) {
        return data_.at((i * dim_ + j) * dim_ + k);
    }
    const FieldScalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return data_.at((i * dim_ + j) * dim_ + k);
    }

    bool operator==(const Comultiplication& o) const {
        return dim_ == o.dim_ && data_ == o.data_;
    }
    bool operator!=(const Comultiplication& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Tensor2 apply(const Vec& x) const {
        if (x.size() != dim_) throw DimMismatch("comultiplication argument size");
        Tensor2 out(dim_, field_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    out.at(j, k) += x[i] * at(i, j, k);
        }
        return out;
    }

    /// Structure constants of (A # B) o Delta.
    Comultiplication twist(const LinearOperator& A, const LinearOperator& B) const {
        check_map(A);
        check_map(B);
        Comultiplication out(dim_, field_);
        for (std::size_t i = 0; i < dim_; ++i) {
            Tensor2 t = apply(basis_vec(dim_, i, field_)).map_legs(A, B);
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    out.at(i, j, k) = t.at(j, k);
        }
        return out;
    }

    /// Structure constants of Delta o f.
    Comultiplication precompose(const LinearOperator& f) const {
        check_map(f);
        Comultiplication out(dim_, field_);
        for (std::size_t i = 0; i < dim_; ++i) {
            Tensor2 t = apply(f.apply(basis_vec(dim_, i, field_)));
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    out.at(i, j, k) = t.at(j, k);
        }
        return out;
    }

private:
    void check_map(const LinearOperator& A) const {
        if (A.rows() != dim_ || A.cols() != dim_)
            throw DimMismatch("twist map shape");
        if (A.field() != field_) throw FieldMismatch("twist map field");
    }

    std::size_t dim_ = 0;
    FieldDescriptor field_ = FieldDescriptor::rationals();
    std::vector<FieldScalar> data_;
};

/// Applies arbitrary linear rules (given as Vec -> Vec evaluations on basis
/// vectors) to the two legs of a tensor.
template <typename Fn1, typename Fn2>
Tensor2 transform_legs(const Tensor2& t, Fn1 leg1, Fn2 leg2) {
    std::size_t n = t.dim();
    Tensor2 out(n, t.field());
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (t.at(p, q).is_zero()) continue;
            Vec a = leg1(basis_vec(n, p, t.field()));
            Vec b = leg2(basis_vec(n, q, t.field()));
            for (std::size_t i = 0; i < n; ++i) {
                if (a[i].is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j)
                    out.at(i, j) += t.at(p, q) * a[i] * b[j];
            }
        }
    return out;
}

/// (Delta # f) applied to t.
inline Tensor3 expand_first(const Tensor2& t, const Comultiplication& comul,
                            const LinearOperator& f) {
    std::size_t n = t.dim();
    Tensor3 out(n, t.field());
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (t.at(p, q).is_zero()) continue;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    if (comul.at(p, a, b).is_zero()) continue;
                    FieldScalar lead = t.at(p, q) * comul.at(p, a, b);
                    for (std::size_t c = 0; c < n; ++c)
                        out.at(a, b, c) += lead * f.at(c, q);
                }
        }
    return out;
}

/// (f # Delta) applied to t.
inline Tensor3 expand_second(const Tensor2& t, const LinearOperator& f,
                             const Comultiplication& comul) {
    std::size_t n = t.dim();
    Tensor3 out(n, t.field());
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (t.at(p, q).is_zero()) continue;
            for (std::size_t a = 0; a < n; ++a) {
                if (f.at(a, p).is_zero()) continue;
                FieldScalar lead = t.at(p, q) * f.at(a, p);
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t c = 0; c < n; ++c)
                        out.at(a, b, c) += lead * comul.at(q, b, c);
            }
        }
    return out;
}

inline void accumulate_outer3(Tensor3& out, const Vec& a, const Vec& b,
                              const Vec& c, const FieldScalar& scale) {
    std::size_t n = out.dim();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            FieldScalar ab = scale * a[i] * b[j];
            for (std::size_t k = 0; k < n; ++k) {
                if (c[k].is_zero()) continue;
                out.at(i, j, k) += ab * c[k];
            }
        }
    }
}

/// f(x * y) == f(x) * f(y) on all basis pairs.
inline bool is_multiplicative(const LinearOperator& f, const BilinearProduct& mul) {
    std::size_t n = mul.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec ei = basis_vec(n, i, mul.field());
            Vec ej = basis_vec(n, j, mul.field());
            if (f.apply(mul.mul(ei, ej)) != mul.mul(f.apply(ei), f.apply(ej)))
                return false;
        }
    return true;
}

/// (f # f) o Delta == Delta o f on all basis vectors.
inline bool is_comultiplicative(const LinearOperator& f,
                                const Comultiplication& comul) {
    return comul.twist(f, f) == comul.precompose(f);
}

inline LinearOperator kron(const LinearOperator& A, const LinearOperator& B) {
    if (A.field() != B.field()) throw FieldMismatch("kron factor fields");
    LinearOperator out(A.rows() * B.rows(), A.cols() * B.cols(), A.field());
    for (std::size_t ar = 0; ar < A.rows(); ++ar)
        for (std::size_t ac = 0; ac < A.cols(); ++ac) {
            if (A.at(ar, ac).is_zero()) continue;
            for (std::size_t br = 0; br < B.rows(); ++br)
                for (std::size_t bc = 0; bc < B.cols(); ++bc)
                    out.at(ar * B.rows() + br, ac * B.cols() + bc) =
                        A.at(ar, ac) * B.at(br, bc);
        }
    return out;
}

} // namespace bihom
