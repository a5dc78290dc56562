#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "bihom/error.hpp"
#include "bihom/field.hpp"
#include "bihom/linalg.hpp"
#include "bihom/tensors.hpp"

namespace bihom {

/// Shape-tagged value of one side of an identity instance.
struct TensorValue {
    std::variant<Vec, Tensor2, Tensor3> value;

    static TensorValue of(Vec v) { return TensorValue{std::move(v)}; }
    static TensorValue of(Tensor2 t) { return TensorValue{std::move(t)}; }
    static TensorValue of(Tensor3 t) { return TensorValue{std::move(t)}; }

    bool operator==(const TensorValue& o) const { return value == o.value; }
    bool operator!=(const TensorValue& o) const { return !(*this == o); }

    std::string str() const {
        if (const auto* v = std::get_if<Vec>(&value)) return render_vec(*v);
        if (const auto* t = std::get_if<Tensor2>(&value)) return t->str();
        return std::get<Tensor3>(value).str();
    }
};

/// One failed identity instance: which identity, on which basis tuple, and
/// the two sides that disagree.
struct Violation {
    std::string identity;
    std::vector<std::size_t> witness;
    TensorValue lhs;
    TensorValue rhs;

    std::string str() const {
        std::string out = identity + " at (";
        for (std::size_t i = 0; i < witness.size(); ++i) {
            if (i) out += ",";
            out += "e" + std::to_string(witness[i]);
        }
        out += "): lhs = " + lhs.str() + ", rhs = " + rhs.str();
        return out;
    }
};

struct CheckReport {
    bool passed = true;
    std::vector<Violation> violations;

    void merge(CheckReport other) {
        passed = passed && other.passed;
        for (auto& v : other.violations) violations.push_back(std::move(v));
    }
};

/// A finite-dimensional structure given by exact structure constants over a
/// fixed field: any number of named products, comultiplications, linear maps
/// and canonical tensors on one underlying space.
struct StructureBundle {
    FieldDescriptor field = FieldDescriptor::rationals();
    std::size_t dim = 0;
    std::string kind;
    std::map<std::string, BilinearProduct> products;
    std::map<std::string, Comultiplication> comuls;
    std::map<std::string, LinearOperator> maps;
    std::map<std::string, Tensor2> tensors;
    std::vector<std::string> provenance;

    bool has_product(const std::string& name) const { return products.count(name); }
    bool has_comul(const std::string& name) const { return comuls.count(name); }
    bool has_map(const std::string& name) const { return maps.count(name); }
    bool has_tensor(const std::string& name) const { return tensors.count(name); }

    const BilinearProduct& product(const std::string& name) const {
        auto it = products.find(name);
        if (it == products.end()) throw MissingComponent("product '" + name + "'");
        return it->second;
    }
    const Comultiplication& comul(const std::string& name) const {
        auto it = comuls.find(name);
        if (it == comuls.end())
            throw MissingComponent("comultiplication '" + name + "'");
        return it->second;
    }
    const LinearOperator& map(const std::string& name) const {
        auto it = maps.find(name);
        if (it == maps.end()) throw MissingComponent("map '" + name + "'");
        return it->second;
    }
    const Tensor2& tensor(const std::string& name) const {
        auto it = tensors.find(name);
        if (it == tensors.end()) throw MissingComponent("tensor '" + name + "'");
        return it->second;
    }

    Vec basis(std::size_t i) const { return basis_vec(dim, i, field); }

    /// Structural consistency of every component against dim and field.
    void validate() const {
        for (const auto& [name, p] : products) {
            if (p.dim() != dim)
                throw InvariantViolation("product '" + name + "' dimension");
            if (p.field() != field)
                throw InvariantViolation("product '" + name + "' field");
        }
        for (const auto& [name, c] : comuls) {
            if (c.dim() != dim)
                throw InvariantViolation("comultiplication '" + name + "' dimension");
            if (c.field() != field)
                throw InvariantViolation("comultiplication '" + name + "' field");
        }
        for (const auto& [name, m] : maps) {
            if (m.rows() != dim || m.cols() != dim)
                throw InvariantViolation("map '" + name + "' shape");
            if (m.field() != field)
                throw InvariantViolation("map '" + name + "' field");
        }
        for (const auto& [name, t] : tensors) {
            if (t.dim() != dim)
                throw InvariantViolation("tensor '" + name + "' dimension");
            if (t.field() != field)
                throw InvariantViolation("tensor '" + name + "' field");
        }
    }

    /// Equality of all mathematical content; provenance and kind are ignored.
    bool same_content(const StructureBundle& o) const {
        return field == o.field && dim == o.dim && products == o.products &&
               comuls == o.comuls && maps == o.maps && tensors == o.tensors;
    }
};

/// A module (M, alpha_m, beta_m) over a bundle's algebra, with optional left
/// and right actions given by structure constants.
struct ModuleData {
    std::size_t dim_a = 0;
    std::size_t dim_m = 0;
    FieldDescriptor field = FieldDescriptor::rationals();
    LinearOperator alpha_m;
    LinearOperator beta_m;
    bool has_left = false;
    bool has_right = false;
    std::vector<FieldScalar> left;   // ((a * dim_m) + i) * dim_m + k
    std::vector<FieldScalar> right;  // ((i * dim_a) + a) * dim_m + k

    static ModuleData make(std::size_t dim_a, std::size_t dim_m,
                           const FieldDescriptor& field) {
        ModuleData md;
        md.dim_a = dim_a;
        md.dim_m = dim_m;
        md.field = field;
        md.alpha_m = LinearOperator::identity(dim_m, field);
        md.beta_m = LinearOperator::identity(dim_m, field);
        md.left.assign(dim_a * dim_m * dim_m, FieldScalar::zero(field));
        md.right.assign(dim_m * dim_a * dim_m, FieldScalar::zero(field));
        return md;
    }

    FieldScalar& left_at(std::size_t a, std::size_t i, std::size_t k) {
        return left.at((a * dim_m + i) * dim_m + k);
    }
    const FieldScalar& left_at(std::size_t a, std::size_t i, std::size_t k) const {
        return left.at((a * dim_m + i) * dim_m + k);
    }
    FieldScalar& right_at(std::size_t i, std::size_t a, std::size_t k) {
        return right.at((i * dim_a + a) * dim_m + k);
    }
    const FieldScalar& right_at(std::size_t i, std::size_t a, std::size_t k) const {
        return right.at((i * dim_a + a) * dim_m + k);
    }

    Vec act_left(const Vec& a, const Vec& m) const {
        if (!has_left) throw MissingComponent("left action");
        if (a.size() != dim_a || m.size() != dim_m)
            throw DimMismatch("module action argument size");
        Vec out = zero_vec(dim_m, field);
        for (std::size_t p = 0; p < dim_a; ++p) {
            if (a[p].is_zero()) continue;
            for (std::size_t i = 0; i < dim_m; ++i) {
                if (m[i].is_zero()) continue;
                FieldScalar c = a[p] * m[i];
                for (std::size_t k = 0; k < dim_m; ++k)
                    out[k] += c * left_at(p, i, k);
            }
        }
        return out;
    }

    Vec act_right(const Vec& m, const Vec& a) const {
        if (!has_right) throw MissingComponent("right action");
        if (a.size() != dim_a || m.size() != dim_m)
            throw DimMismatch("module action argument size");
        Vec out = zero_vec(dim_m, field);
        for (std::size_t i = 0; i < dim_m; ++i) {
            if (m[i].is_zero()) continue;
            for (std::size_t p = 0; p < dim_a; ++p) {
                if (a[p].is_zero()) continue;
                FieldScalar c = m[i] * a[p];
                for (std::size_t k = 0; k < dim_m; ++k)
                    out[k] += c * right_at(i, p, k);
            }
        }
        return out;
    }
};

namespace detail {

inline Vec outer_flat(const std::vector<Vec>& legs, const FieldDescriptor& field) {
    Vec out{FieldScalar::one(field)};
    for (const Vec& leg : legs) {
        Vec next(out.size() * leg.size(), FieldScalar::zero(field));
        for (std::size_t s = 0; s < out.size(); ++s) {
            if (out[s].is_zero()) continue;
            for (std::size_t t = 0; t < leg.size(); ++t)
                next[s * leg.size() + t] = out[s] * leg[t];
        }
        out = std::move(next);
    }
    return out;
}

inline std::vector<std::size_t> unflatten(std::size_t flat, std::size_t dim,
                                          unsigned n) {
    std::vector<std::size_t> idx(n);
    for (unsigned pos = n; pos-- > 0;) {
        idx[pos] = flat % dim;
        flat /= dim;
    }
    return idx;
}

} // namespace detail

/// The algebra acting on itself by its own product on both sides.
inline ModuleData make_regular_bimodule(const BilinearProduct& mul,
                                        const LinearOperator& alpha,
                                        const LinearOperator& beta) {
    std::size_t dim = mul.dim();
    ModuleData md = ModuleData::make(dim, dim, mul.field());
    md.has_left = true;
    md.has_right = true;
    md.alpha_m = alpha;
    md.beta_m = beta;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                md.left_at(i, j, k) = mul.at(i, j, k);
                md.right_at(i, j, k) = mul.at(i, j, k);
            }
    return md;
}

/// The n-fold tensor power of the algebra as a module: the left action sends
/// a # (b1 # ... # bn) to alpha(a)*b1 # beta(b2) # ... # beta(bn), the right
/// action sends (b1 # ... # bn) # a to alpha(b1) # ... # alpha(b_{n-1}) #
/// bn*beta(a).  Supported for 2 <= n <= 4.
inline ModuleData make_tensor_power_module(const BilinearProduct& mul,
                                           const LinearOperator& alpha,
                                           const LinearOperator& beta,
                                           unsigned n) {
    if (n < 2 || n > 4)
        throw InvariantViolation("tensor power order must be between 2 and 4");
    std::size_t dim = mul.dim();
    const FieldDescriptor& field = mul.field();
    std::size_t dim_m = 1;
    for (unsigned i = 0; i < n; ++i) dim_m *= dim;
    ModuleData md = ModuleData::make(dim, dim_m, field);
    md.has_left = true;
    md.has_right = true;

    LinearOperator alpha_m = LinearOperator::identity(1, field);
    LinearOperator beta_m = LinearOperator::identity(1, field);
    for (unsigned i = 0; i < n; ++i) {
        alpha_m = kron(alpha_m, alpha);
        beta_m = kron(beta_m, beta);
    }
    md.alpha_m = alpha_m;
    md.beta_m = beta_m;

    for (std::size_t a = 0; a < dim; ++a) {
        Vec alpha_a = alpha.apply(basis_vec(dim, a, field));
        Vec beta_a = beta.apply(basis_vec(dim, a, field));
        for (std::size_t m = 0; m < dim_m; ++m) {
            auto idx = detail::unflatten(m, dim, n);
            std::vector<Vec> left_legs, right_legs;
            left_legs.push_back(mul.mul(alpha_a, basis_vec(dim, idx[0], field)));
            for (unsigned pos = 1; pos < n; ++pos)
                left_legs.push_back(beta.apply(basis_vec(dim, idx[pos], field)));
            for (unsigned pos = 0; pos + 1 < n; ++pos)
                right_legs.push_back(alpha.apply(basis_vec(dim, idx[pos], field)));
            right_legs.push_back(
                mul.mul(basis_vec(dim, idx[n - 1], field), beta_a));
            Vec lv = detail::outer_flat(left_legs, field);
            Vec rv = detail::outer_flat(right_legs, field);
            for (std::size_t k = 0; k < dim_m; ++k) {
                md.left_at(a, m, k) = lv[k];
                md.right_at(m, a, k) = rv[k];
            }
        }
    }
    return md;
}

/// The two-fold tensor power with the comultiplication-compatible actions:
/// a # (b # c) goes to omega(a)*b # beta(c) and (b # c) # a goes to
/// alpha(b) # c*psi(a).
inline ModuleData make_inf_bimodule(const BilinearProduct& mul,
                                    const LinearOperator& alpha,
                                    const LinearOperator& beta,
                                    const LinearOperator& psi,
                                    const LinearOperator& omega) {
    std::size_t dim = mul.dim();
    const FieldDescriptor& field = mul.field();
    std::size_t dim_m = dim * dim;
    ModuleData md = ModuleData::make(dim, dim_m, field);
    md.has_left = true;
    md.has_right = true;
    md.alpha_m = kron(alpha, alpha);
    md.beta_m = kron(beta, beta);
    for (std::size_t a = 0; a < dim; ++a) {
        Vec omega_a = omega.apply(basis_vec(dim, a, field));
        Vec psi_a = psi.apply(basis_vec(dim, a, field));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                std::size_t m = i * dim + j;
                Vec lv = detail::outer_flat(
                    {mul.mul(omega_a, basis_vec(dim, i, field)),
                     beta.apply(basis_vec(dim, j, field))},
                    field);
                Vec rv = detail::outer_flat(
                    {alpha.apply(basis_vec(dim, i, field)),
                     mul.mul(basis_vec(dim, j, field), psi_a)},
                    field);
                for (std::size_t k = 0; k < dim_m; ++k) {
                    md.left_at(a, m, k) = lv[k];
                    md.right_at(m, a, k) = rv[k];
                }
            }
    }
    return md;
}

} // namespace bihom
