#pragma once

#include <cstddef>
#include <vector>

#include "bihom/error.hpp"
#include "bihom/field.hpp"

namespace bihom {

using Vec = std::vector<FieldScalar>;

inline Vec zero_vec(std::size_t n, const FieldDescriptor& field) {
    return Vec(n, FieldScalar::zero(field));
}

inline Vec basis_vec(std::size_t n, std::size_t i, const FieldDescriptor& field) {
    Vec v = zero_vec(n, field);
    v.at(i) = FieldScalar::one(field);
    return v;
}

inline bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimMismatch("vector sizes differ");
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimMismatch("vector sizes differ");
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

inline Vec vec_scale(const FieldScalar& c, const Vec& v) {
    Vec out = v;
    for (auto& x : out) x *= c;
    return out;
}

/// Dense matrix over a fixed field, row-major.  Square instances double as
/// linear operators on the underlying space; rectangular instances are used
/// for solving linear systems.
class LinearOperator {
public:
    LinearOperator() = default;

    LinearOperator(std::size_t rows, std::size_t cols, const FieldDescriptor& field)
        : rows_(rows), cols_(cols), field_(field),
          data_(rows * cols, FieldScalar::zero(field)) {}

    static LinearOperator zero(std::size_t rows, std::size_t cols,
                               const FieldDescriptor& field) {
        return LinearOperator(rows, cols, field);
    }

    static LinearOperator identity(std::size_t n, const FieldDescriptor& field) {
        LinearOperator m(n, n, field);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldScalar::one(field);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldDescriptor& field() const { return field_; }

    FieldScalar& at(std::size_t r, std::size_t c) {
        return data_.at(r * cols_ + c);
    }
    const FieldScalar& at(std::size_t r, std::size_t c) const {
        return data_.at(r * cols_ + c);
    }

    bool operator==(const LinearOperator& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) return false;
        for (std::size_t i = 0; i < data_.size(); ++i)
            if (data_[i] != other.data_[i]) return false;
        return true;
    }
    bool operator!=(const LinearOperator& other) const { return !(*this == other); }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        return *this == identity(rows_, field_);
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw DimMismatch("operator/vector size mismatch");
        Vec out = zero_vec(rows_, field_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                out[r] += at(r, c) * v[c];
        return out;
    }

    /// Matrix product, so compose(g) applies g first and *this second.
    LinearOperator compose(const LinearOperator& g) const {
        if (cols_ != g.rows_) throw DimMismatch("operator composition mismatch");
        LinearOperator out(rows_, g.cols_, field_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(r, k).is_zero()) continue;
                for (std::size_t c = 0; c < g.cols_; ++c)
                    out.at(r, c) += at(r, k) * g.at(k, c);
            }
        return out;
    }

    LinearOperator operator*(const LinearOperator& g) const { return compose(g); }

    LinearOperator operator+(const LinearOperator& g) const {
        if (rows_ != g.rows_ || cols_ != g.cols_)
            throw DimMismatch("operator sum mismatch");
        LinearOperator out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += g.data_[i];
        return out;
    }

    LinearOperator operator-(const LinearOperator& g) const {
        if (rows_ != g.rows_ || cols_ != g.cols_)
            throw DimMismatch("operator difference mismatch");
        LinearOperator out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= g.data_[i];
        return out;
    }

    LinearOperator pow(unsigned k) const {
        if (rows_ != cols_) throw DimMismatch("power of non-square operator");
        LinearOperator out = identity(rows_, field_);
        for (unsigned i = 0; i < k; ++i) out = out.compose(*this);
        return out;
    }

    bool commutes_with(const LinearOperator& g) const {
        return compose(g) == g.compose(*this);
    }

    /// Exact Gauss-Jordan inverse; throws Singular when no inverse exists.
    LinearOperator inverse() const {
        if (rows_ != cols_) throw Singular("non-square operator");
        std::size_t n = rows_;
        LinearOperator work = *this;
        LinearOperator inv = identity(n, field_);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
            if (pivot == n) throw Singular("operator is not invertible");
            if (pivot != col) {
                work.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            FieldScalar scale = work.at(col, col).inverse();
            work.scale_row(col, scale);
            inv.scale_row(col, scale);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || work.at(r, col).is_zero()) continue;
                FieldScalar factor = work.at(r, col);
                work.add_scaled_row(r, col, -factor);
                inv.add_scaled_row(r, col, -factor);
            }
        }
        return inv;
    }

    bool is_invertible() const {
        if (rows_ != cols_) return false;
        LinearOperator work = *this;
        return work.rref().size() == rows_;
    }

    /// In-place reduced row echelon form; returns the pivot columns in order.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t pivot = row;
            while (pivot < rows_ && at(pivot, col).is_zero()) ++pivot;
            if (pivot == rows_) continue;
            if (pivot != row) swap_rows(pivot, row);
            scale_row(row, at(row, col).inverse());
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row || at(r, col).is_zero()) continue;
                add_scaled_row(r, col, -at(r, col));
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        LinearOperator work = *this;
        return work.rref().size();
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap(at(a, c), at(b, c));
    }
    void scale_row(std::size_t r, const FieldScalar& s) {
        for (std::size_t c = 0; c < cols_; ++c) at(r, c) *= s;
    }
    void add_scaled_row(std::size_t target, std::size_t source,
                        const FieldScalar& s) {
        for (std::size_t c = 0; c < cols_; ++c)
            at(target, c) += s * at(source, c);
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    FieldDescriptor field_ = FieldDescriptor::rationals();
    std::vector<FieldScalar> data_;
};

/// Basis of the kernel of `m`, one vector per free column, ordered by free
/// column index.  Each basis vector has entry 1 at its free column.
inline std::vector<Vec> nullspace(const LinearOperator& m) {
    LinearOperator work = m;
    std::vector<std::size_t> pivots = work.rref();
    const FieldDescriptor& field = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(m.cols(), field);
        v[free] = FieldScalar::one(field);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -work.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace bihom
