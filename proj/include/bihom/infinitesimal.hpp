#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bihom/bundle.hpp"
#include "bihom/checkers.hpp"
#include "bihom/constructions.hpp"
#include "bihom/error.hpp"
#include "bihom/linalg.hpp"
#include "bihom/tensors.hpp"

namespace bihom {

namespace detail {

inline Vec flatten2(const Tensor2& t) {
    std::size_t n = t.dim();
    Vec out = zero_vec(n * n, t.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = t.at(i, j);
    return out;
}

inline Tensor2 unflatten2(const Vec& v, std::size_t n,
                          const FieldDescriptor& field) {
    Tensor2 out(n, field);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = v[i * n + j];
    return out;
}

} // namespace detail

/// Delta as a derivation into the two-fold tensor power carrying the
/// compatibility actions: the bimodule axioms for those actions, plus
/// Delta(a*b) == a . Delta(b) + Delta(a) . b.
inline CheckReport delta_is_bimodule_derivation(const StructureBundle& b) {
    detail::require_hypotheses(validate_inf_bialgebra(b),
                               "input is not an infinitesimal bundle");
    const BilinearProduct& mul = b.product("mul");
    const Comultiplication& comul = b.comul("Delta");
    ModuleData md = make_inf_bimodule(mul, b.map("alpha"), b.map("beta"),
                                      b.map("psi"), b.map("omega"));
    CheckReport report = check_bimodule(b, md);
    report.merge(detail::finish(detail::check_tuples(
        {b.dim, b.dim}, "inf-delta-deriv",
        [&](const std::vector<std::size_t>& idx) {
            Vec a = b.basis(idx[0]), c = b.basis(idx[1]);
            Tensor2 lhs = comul.apply(mul.mul(a, c));
            Vec rhs = vec_add(md.act_left(a, detail::flatten2(comul.apply(c))),
                              md.act_right(detail::flatten2(comul.apply(a)), c));
            return std::pair(lhs, detail::unflatten2(rhs, b.dim, b.field));
        })));
    report.passed = report.violations.empty();
    return report;
}

/// The contraction D = mu o Delta, i.e. D(a) = a1*a2.  In verify mode D is
/// checked to be a twisted derivation with tau = beta o psi and
/// sigma = alpha o omega.
inline LinearOperator mu_delta_operator(const StructureBundle& b,
                                        bool verify = true) {
    const BilinearProduct& mul = b.product("mul");
    const Comultiplication& comul = b.comul("Delta");
    LinearOperator D(b.dim, b.dim, b.field);
    for (std::size_t i = 0; i < b.dim; ++i) {
        Vec col = zero_vec(b.dim, b.field);
        for (std::size_t p = 0; p < b.dim; ++p)
            for (std::size_t q = 0; q < b.dim; ++q) {
                if (comul.at(i, p, q).is_zero()) continue;
                col = vec_add(col, vec_scale(comul.at(i, p, q),
                                             mul.mul(b.basis(p), b.basis(q))));
            }
        for (std::size_t k = 0; k < b.dim; ++k) D.at(k, i) = col[k];
    }
    if (verify) {
        LinearOperator tau = b.map("beta").compose(b.map("psi"));
        LinearOperator sigma = b.map("alpha").compose(b.map("omega"));
        detail::require_conclusion(check_derivation(b, D, tau, sigma),
                                   "inf-mu-delta");
    }
    return D;
}

/// The derived product a*b = alphabeta^2psi(b1) * (alpha(a) * alpha^2omega(b2))
/// of an infinitesimal bundle, a left pre-Lie bundle with structure maps
/// alpha^2beta and alpha^2beta^2psiomega.
inline ConstructionResult inf_prelie(const StructureBundle& b,
                                     bool verify = true) {
    const std::string theorem_id = "inf-prelie";
    if (verify)
        detail::require_hypotheses(validate_inf_bialgebra(b),
                                   "input is not an infinitesimal bundle");
    const BilinearProduct& mul = b.product("mul");
    const Comultiplication& comul = b.comul("Delta");
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    const LinearOperator& ps = b.map("psi");
    const LinearOperator& om = b.map("omega");
    LinearOperator outer_map = al.compose(be).compose(be).compose(ps);
    LinearOperator inner_map = al.compose(al).compose(om);
    BilinearProduct star = BilinearProduct::from_rule(
        b.dim, b.field, [&](std::size_t i, std::size_t j) {
            Vec out = zero_vec(b.dim, b.field);
            Vec ai = al.apply(b.basis(i));
            for (std::size_t p = 0; p < b.dim; ++p)
                for (std::size_t q = 0; q < b.dim; ++q) {
                    if (comul.at(j, p, q).is_zero()) continue;
                    Vec term = mul.mul(
                        outer_map.apply(b.basis(p)),
                        mul.mul(ai, inner_map.apply(b.basis(q))));
                    out = vec_add(out, vec_scale(comul.at(j, p, q), term));
                }
            return out;
        });
    StructureBundle out;
    out.field = b.field;
    out.dim = b.dim;
    out.kind = "left-prelie";
    out.products["mul"] = std::move(star);
    out.maps["alpha"] = al.compose(al).compose(be);
    out.maps["beta"] =
        al.compose(al).compose(be).compose(be).compose(ps).compose(om);
    out.provenance = b.provenance;
    out.provenance.push_back("derived product via " + theorem_id);
    if (verify)
        detail::require_conclusion(check_left_bihom_prelie(out), theorem_id);
    return ConstructionResult{std::move(out), theorem_id};
}

/// The two displayed forms of the derived product agree:
/// alphabeta^2psi(b1) * (alpha(a) * alpha^2omega(b2)) ==
/// (beta^2psi(b1) * alpha(a)) * alpha^2betaomega(b2).
inline CheckReport bihomify_equal_formula(const StructureBundle& b) {
    detail::require_hypotheses(validate_inf_bialgebra(b),
                               "input is not an infinitesimal bundle");
    const BilinearProduct& mul = b.product("mul");
    const Comultiplication& comul = b.comul("Delta");
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    const LinearOperator& ps = b.map("psi");
    const LinearOperator& om = b.map("omega");
    LinearOperator first_outer = al.compose(be).compose(be).compose(ps);
    LinearOperator first_inner = al.compose(al).compose(om);
    LinearOperator second_left = be.compose(be).compose(ps);
    LinearOperator second_right = al.compose(al).compose(be).compose(om);
    return detail::finish(detail::check_tuples(
        {b.dim, b.dim}, "inf-star-forms",
        [&](const std::vector<std::size_t>& idx) {
            Vec a = al.apply(b.basis(idx[0]));
            Vec lhs = zero_vec(b.dim, b.field);
            Vec rhs = zero_vec(b.dim, b.field);
            for (std::size_t p = 0; p < b.dim; ++p)
                for (std::size_t q = 0; q < b.dim; ++q) {
                    const FieldScalar& c = comul.at(idx[1], p, q);
                    if (c.is_zero()) continue;
                    lhs = vec_add(
                        lhs, vec_scale(c, mul.mul(first_outer.apply(b.basis(p)),
                                                  mul.mul(a, first_inner.apply(
                                                                 b.basis(q))))));
                    rhs = vec_add(
                        rhs,
                        vec_scale(c, mul.mul(mul.mul(second_left.apply(
                                                         b.basis(p)),
                                                     a),
                                             second_right.apply(b.basis(q)))));
                }
            return std::pair(lhs, rhs);
        }));
}

} // namespace bihom
