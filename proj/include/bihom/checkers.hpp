#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bihom/bundle.hpp"
#include "bihom/parallel.hpp"
#include "bihom/tensors.hpp"

namespace bihom {

enum class Side { Left, Right };

namespace detail {

inline std::size_t tuple_count(const std::vector<std::size_t>& dims) {
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    return total;
}

inline std::vector<std::size_t> unflatten_mixed(
    std::size_t flat, const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> idx(dims.size());
    for (std::size_t pos = dims.size(); pos-- > 0;) {
        idx[pos] = flat % dims[pos];
        flat /= dims[pos];
    }
    return idx;
}

/// Evaluates fn on every tuple drawn from the given index ranges and records
/// a violation wherever the two returned sides differ.
template <typename Fn>
std::vector<Violation> check_tuples(const std::vector<std::size_t>& dims,
                                    const std::string& id, Fn fn) {
    return parallel_tuples(
        tuple_count(dims), [&](std::size_t flat, std::vector<Violation>& out) {
            std::vector<std::size_t> idx = unflatten_mixed(flat, dims);
            auto [lhs, rhs] = fn(idx);
            if (lhs != rhs)
                out.push_back(Violation{id, idx, TensorValue::of(std::move(lhs)),
                                        TensorValue::of(std::move(rhs))});
        });
}

inline std::vector<Violation> commute_core(const StructureBundle& b,
                                           const LinearOperator& f,
                                           const LinearOperator& g,
                                           const std::string& id) {
    return check_tuples({b.dim}, id, [&](const std::vector<std::size_t>& idx) {
        Vec e = b.basis(idx[0]);
        return std::pair(f.apply(g.apply(e)), g.apply(f.apply(e)));
    });
}

inline std::vector<Violation> mult_core(const StructureBundle& b,
                                        const std::string& map_name,
                                        const std::string& prod_name) {
    const LinearOperator& f = b.map(map_name);
    const BilinearProduct& mul = b.product(prod_name);
    return check_tuples({b.dim, b.dim}, "mult:" + map_name + ":" + prod_name,
                        [&](const std::vector<std::size_t>& idx) {
                            Vec x = b.basis(idx[0]), y = b.basis(idx[1]);
                            return std::pair(f.apply(mul.mul(x, y)),
                                             mul.mul(f.apply(x), f.apply(y)));
                        });
}

inline std::vector<Violation> comorph_core(const StructureBundle& b,
                                           const std::string& map_name,
                                           const std::string& comul_name) {
    const LinearOperator& f = b.map(map_name);
    const Comultiplication& comul = b.comul(comul_name);
    return check_tuples({b.dim}, "comorph:" + map_name + ":" + comul_name,
                        [&](const std::vector<std::size_t>& idx) {
                            Vec e = b.basis(idx[0]);
                            return std::pair(comul.apply(e).map_legs(f, f),
                                             comul.apply(f.apply(e)));
                        });
}

inline std::vector<Violation> hyp_commute(const StructureBundle& b,
                                          const std::string& n1,
                                          const std::string& n2) {
    return commute_core(b, b.map(n1), b.map(n2), "commute:" + n1 + "," + n2);
}

/// alpha(x)*(y*z) == (x*y)*beta(z).
inline std::vector<Violation> assoc_core(const StructureBundle& b,
                                         const std::string& prod,
                                         const std::string& id) {
    const BilinearProduct& mul = b.product(prod);
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    return check_tuples({b.dim, b.dim, b.dim}, id,
                        [&](const std::vector<std::size_t>& idx) {
                            Vec x = b.basis(idx[0]), y = b.basis(idx[1]),
                                z = b.basis(idx[2]);
                            return std::pair(mul.mul(al.apply(x), mul.mul(y, z)),
                                             mul.mul(mul.mul(x, y), be.apply(z)));
                        });
}

/// beta(x)*alpha(y) == beta(y)*alpha(x).
inline std::vector<Violation> comm_core(const StructureBundle& b,
                                        const std::string& prod,
                                        const std::string& id) {
    const BilinearProduct& mul = b.product(prod);
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    return check_tuples({b.dim, b.dim}, id,
                        [&](const std::vector<std::size_t>& idx) {
                            Vec x = b.basis(idx[0]), y = b.basis(idx[1]);
                            return std::pair(mul.mul(be.apply(x), al.apply(y)),
                                             mul.mul(be.apply(y), al.apply(x)));
                        });
}

/// alphabeta(x)*(alpha(y)*z) - (beta(x)*alpha(y))*beta(z) is symmetric in
/// x and y.
inline std::vector<Violation> prelie_core(const StructureBundle& b,
                                          const std::string& prod,
                                          const std::string& id) {
    const BilinearProduct& mul = b.product(prod);
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    LinearOperator ab = al.compose(be);
    auto side = [&](const Vec& x, const Vec& y, const Vec& z) {
        return vec_sub(mul.mul(ab.apply(x), mul.mul(al.apply(y), z)),
                       mul.mul(mul.mul(be.apply(x), al.apply(y)), be.apply(z)));
    };
    return check_tuples({b.dim, b.dim, b.dim}, id,
                        [&](const std::vector<std::size_t>& idx) {
                            Vec x = b.basis(idx[0]), y = b.basis(idx[1]),
                                z = b.basis(idx[2]);
                            return std::pair(side(x, y, z), side(y, x, z));
                        });
}

/// (x*beta(y))*alphabeta(z) == (x*beta(z))*alphabeta(y).
inline std::vector<Violation> novikov_core(const StructureBundle& b,
                                           const std::string& prod,
                                           const std::string& id) {
    const BilinearProduct& mul = b.product(prod);
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    LinearOperator ab = al.compose(be);
    return check_tuples(
        {b.dim, b.dim, b.dim}, id, [&](const std::vector<std::size_t>& idx) {
            Vec x = b.basis(idx[0]), y = b.basis(idx[1]), z = b.basis(idx[2]);
            return std::pair(
                mul.mul(mul.mul(x, be.apply(y)), ab.apply(z)),
                mul.mul(mul.mul(x, be.apply(z)), ab.apply(y)));
        });
}

inline CheckReport finish(std::vector<Violation> violations) {
    CheckReport report;
    report.violations = std::move(violations);
    report.passed = report.violations.empty();
    return report;
}

inline void extend(std::vector<Violation>& into, std::vector<Violation> more) {
    for (auto& v : more) into.push_back(std::move(v));
}

} // namespace detail

/// Commutation of every pair among the named maps plus multiplicativity of
/// each for the named product.
inline CheckReport check_commuting_multiplicative(
    const StructureBundle& b, const std::vector<std::string>& map_names,
    const std::string& prod_name) {
    std::vector<Violation> vs;
    for (std::size_t i = 0; i < map_names.size(); ++i)
        for (std::size_t j = i + 1; j < map_names.size(); ++j)
            detail::extend(vs, detail::hyp_commute(b, map_names[i], map_names[j]));
    for (const auto& name : map_names)
        detail::extend(vs, detail::mult_core(b, name, prod_name));
    return detail::finish(std::move(vs));
}

inline CheckReport check_bihom_associative(const StructureBundle& b,
                                           const std::string& prod = "mul") {
    std::vector<Violation> vs;
    detail::extend(vs, detail::hyp_commute(b, "alpha", "beta"));
    detail::extend(vs, detail::mult_core(b, "alpha", prod));
    detail::extend(vs, detail::mult_core(b, "beta", prod));
    detail::extend(vs, detail::assoc_core(b, prod, "assoc"));
    return detail::finish(std::move(vs));
}

/// (Delta # psi) o Delta == (omega # Delta) o Delta with the coalgebra
/// structure-map hypotheses.
inline CheckReport check_bihom_coassociative(const StructureBundle& b,
                                             const std::string& comul_name = "Delta",
                                             const std::string& psi = "psi",
                                             const std::string& omega = "omega") {
    std::vector<Violation> vs;
    detail::extend(vs, detail::hyp_commute(b, psi, omega));
    detail::extend(vs, detail::comorph_core(b, psi, comul_name));
    detail::extend(vs, detail::comorph_core(b, omega, comul_name));
    const Comultiplication& comul = b.comul(comul_name);
    const LinearOperator& p = b.map(psi);
    const LinearOperator& w = b.map(omega);
    detail::extend(vs, detail::check_tuples(
                           {b.dim}, "coassoc",
                           [&](const std::vector<std::size_t>& idx) {
                               Tensor2 t = comul.apply(b.basis(idx[0]));
                               return std::pair(expand_first(t, comul, p),
                                                expand_second(t, w, comul));
                           }));
    return detail::finish(std::move(vs));
}

inline CheckReport check_bihom_commutative(const StructureBundle& b,
                                           const std::string& prod = "mul") {
    CheckReport report = check_bihom_associative(b, prod);
    report.merge(detail::finish(detail::comm_core(b, prod, "comm")));
    report.passed = report.violations.empty();
    return report;
}

inline CheckReport check_left_bihom_prelie(const StructureBundle& b,
                                           const std::string& prod = "mul") {
    std::vector<Violation> vs;
    detail::extend(vs, detail::hyp_commute(b, "alpha", "beta"));
    detail::extend(vs, detail::mult_core(b, "alpha", prod));
    detail::extend(vs, detail::mult_core(b, "beta", prod));
    detail::extend(vs, detail::prelie_core(b, prod, "left-prelie"));
    return detail::finish(std::move(vs));
}

inline CheckReport check_bihom_novikov(const StructureBundle& b,
                                       const std::string& prod = "mul") {
    std::vector<Violation> vs;
    detail::extend(vs, detail::hyp_commute(b, "alpha", "beta"));
    detail::extend(vs, detail::mult_core(b, "alpha", prod));
    detail::extend(vs, detail::mult_core(b, "beta", prod));
    detail::extend(vs, detail::prelie_core(b, prod, "left-prelie"));
    detail::extend(vs, detail::novikov_core(b, prod, "novikov"));
    return detail::finish(std::move(vs));
}

inline CheckReport check_bihom_leibniz(const StructureBundle& b, Side side,
                                       const std::string& prod = "bracket") {
    const BilinearProduct& br = b.product(prod);
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    LinearOperator ab = al.compose(be);
    std::vector<Violation> vs;
    detail::extend(vs, detail::hyp_commute(b, "alpha", "beta"));
    detail::extend(vs, detail::mult_core(b, "alpha", prod));
    detail::extend(vs, detail::mult_core(b, "beta", prod));
    if (side == Side::Left) {
        detail::extend(vs, detail::check_tuples(
            {b.dim, b.dim, b.dim}, "leibniz-left",
            [&](const std::vector<std::size_t>& idx) {
                Vec x = b.basis(idx[0]), y = b.basis(idx[1]), z = b.basis(idx[2]);
                Vec lhs = br.mul(ab.apply(x), br.mul(y, z));
                Vec rhs = vec_add(
                    br.mul(br.mul(be.apply(x), y), be.apply(z)),
                    br.mul(be.apply(y), br.mul(al.apply(x), z)));
                return std::pair(lhs, rhs);
            }));
    } else {
        detail::extend(vs, detail::check_tuples(
            {b.dim, b.dim, b.dim}, "leibniz-right",
            [&](const std::vector<std::size_t>& idx) {
                Vec x = b.basis(idx[0]), y = b.basis(idx[1]), z = b.basis(idx[2]);
                Vec lhs = br.mul(br.mul(x, y), ab.apply(z));
                Vec rhs = vec_add(
                    br.mul(br.mul(x, be.apply(z)), al.apply(y)),
                    br.mul(al.apply(x), br.mul(y, al.apply(z))));
                return std::pair(lhs, rhs);
            }));
    }
    return detail::finish(std::move(vs));
}

inline CheckReport check_bihom_lie(const StructureBundle& b, Side side,
                                   const std::string& prod = "bracket") {
    CheckReport report = check_bihom_leibniz(b, side, prod);
    const BilinearProduct& br = b.product(prod);
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    report.merge(detail::finish(detail::check_tuples(
        {b.dim, b.dim}, "skewsym", [&](const std::vector<std::size_t>& idx) {
            Vec x = b.basis(idx[0]), y = b.basis(idx[1]);
            Vec rhs = br.mul(be.apply(y), al.apply(x));
            for (auto& c : rhs) c = -c;
            return std::pair(br.mul(be.apply(x), al.apply(y)), rhs);
        })));
    report.passed = report.violations.empty();
    return report;
}

inline CheckReport check_bihom_dendriform(const StructureBundle& b) {
    const BilinearProduct& prec = b.product("prec");
    const BilinearProduct& succ = b.product("succ");
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    std::vector<Violation> vs;
    detail::extend(vs, detail::hyp_commute(b, "alpha", "beta"));
    detail::extend(vs, detail::mult_core(b, "alpha", "prec"));
    detail::extend(vs, detail::mult_core(b, "alpha", "succ"));
    detail::extend(vs, detail::mult_core(b, "beta", "prec"));
    detail::extend(vs, detail::mult_core(b, "beta", "succ"));
    auto both = [&](const Vec& x, const Vec& y) {
        return vec_add(prec.mul(x, y), succ.mul(x, y));
    };
    detail::extend(vs, detail::check_tuples(
        {b.dim, b.dim, b.dim}, "dend-prec",
        [&](const std::vector<std::size_t>& idx) {
            Vec x = b.basis(idx[0]), y = b.basis(idx[1]), z = b.basis(idx[2]);
            return std::pair(prec.mul(prec.mul(x, y), be.apply(z)),
                             prec.mul(al.apply(x), both(y, z)));
        }));
    detail::extend(vs, detail::check_tuples(
        {b.dim, b.dim, b.dim}, "dend-mid",
        [&](const std::vector<std::size_t>& idx) {
            Vec x = b.basis(idx[0]), y = b.basis(idx[1]), z = b.basis(idx[2]);
            return std::pair(prec.mul(succ.mul(x, y), be.apply(z)),
                             succ.mul(al.apply(x), prec.mul(y, z)));
        }));
    detail::extend(vs, detail::check_tuples(
        {b.dim, b.dim, b.dim}, "dend-succ",
        [&](const std::vector<std::size_t>& idx) {
            Vec x = b.basis(idx[0]), y = b.basis(idx[1]), z = b.basis(idx[2]);
            return std::pair(succ.mul(al.apply(x), succ.mul(y, z)),
                             succ.mul(both(x, y), be.apply(z)));
        }));
    return detail::finish(std::move(vs));
}

/// Raw compatibility identity (x*beta(y)) star alphabeta(z) ==
/// (x star beta(z)) * alphabeta(y), without hypotheses.
inline CheckReport check_np_exchange(const StructureBundle& b,
                                     const std::string& mul_name = "mul",
                                     const std::string& star_name = "star") {
    const BilinearProduct& mul = b.product(mul_name);
    const BilinearProduct& star = b.product(star_name);
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    LinearOperator ab = al.compose(be);
    return detail::finish(detail::check_tuples(
        {b.dim, b.dim, b.dim}, "np-exchange",
        [&](const std::vector<std::size_t>& idx) {
            Vec x = b.basis(idx[0]), y = b.basis(idx[1]), z = b.basis(idx[2]);
            return std::pair(star.mul(mul.mul(x, be.apply(y)), ab.apply(z)),
                             mul.mul(star.mul(x, be.apply(z)), ab.apply(y)));
        }));
}

/// Raw compatibility identity alpha(x)*(y star z) == (x*y) star beta(z),
/// without hypotheses.
inline CheckReport check_np_mixed_assoc(const StructureBundle& b,
                                        const std::string& mul_name = "mul",
                                        const std::string& star_name = "star") {
    const BilinearProduct& mul = b.product(mul_name);
    const BilinearProduct& star = b.product(star_name);
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    return detail::finish(detail::check_tuples(
        {b.dim, b.dim, b.dim}, "np-mixed-assoc",
        [&](const std::vector<std::size_t>& idx) {
            Vec x = b.basis(idx[0]), y = b.basis(idx[1]), z = b.basis(idx[2]);
            return std::pair(mul.mul(al.apply(x), star.mul(y, z)),
                             star.mul(mul.mul(x, y), be.apply(z)));
        }));
}

inline CheckReport check_novikov_poisson(const StructureBundle& b) {
    const BilinearProduct& mul = b.product("mul");
    const BilinearProduct& star = b.product("star");
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    LinearOperator ab = al.compose(be);
    std::vector<Violation> vs;
    detail::extend(vs, detail::hyp_commute(b, "alpha", "beta"));
    detail::extend(vs, detail::mult_core(b, "alpha", "mul"));
    detail::extend(vs, detail::mult_core(b, "beta", "mul"));
    detail::extend(vs, detail::mult_core(b, "alpha", "star"));
    detail::extend(vs, detail::mult_core(b, "beta", "star"));
    detail::extend(vs, detail::assoc_core(b, "mul", "assoc:mul"));
    detail::extend(vs, detail::comm_core(b, "mul", "comm:mul"));
    detail::extend(vs, detail::prelie_core(b, "star", "left-prelie:star"));
    detail::extend(vs, detail::novikov_core(b, "star", "novikov:star"));
    detail::extend(vs, detail::check_tuples(
        {b.dim, b.dim, b.dim}, "np-symm",
        [&](const std::vector<std::size_t>& idx) {
            Vec x = b.basis(idx[0]), y = b.basis(idx[1]), z = b.basis(idx[2]);
            auto side = [&](const Vec& u, const Vec& v) {
                return vec_sub(
                    mul.mul(star.mul(be.apply(u), al.apply(v)), be.apply(z)),
                    star.mul(ab.apply(u), mul.mul(al.apply(v), z)));
            };
            return std::pair(side(x, y), side(y, x));
        }));
    detail::extend(vs, check_np_exchange(b).violations);
    detail::extend(vs, check_np_mixed_assoc(b).violations);
    return detail::finish(std::move(vs));
}

/// Module axioms for the action(s) carried by md over the algebra (product
/// prod, maps alpha/beta) of b.  Witness tuples list algebra indices and
/// module indices in the order the identity's arguments appear.
inline CheckReport check_module(const StructureBundle& b, const ModuleData& md,
                                Side side, const std::string& prod = "mul") {
    const BilinearProduct& mul = b.product(prod);
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    std::vector<Violation> vs;
    auto em = [&](std::size_t i) { return basis_vec(md.dim_m, i, md.field); };
    detail::extend(vs, detail::check_tuples(
        {md.dim_m}, "commute:alphaM,betaM",
        [&](const std::vector<std::size_t>& idx) {
            Vec e = em(idx[0]);
            return std::pair(md.alpha_m.apply(md.beta_m.apply(e)),
                             md.beta_m.apply(md.alpha_m.apply(e)));
        }));
    if (side == Side::Left) {
        detail::extend(vs, detail::check_tuples(
            {b.dim, md.dim_m}, "lmod-alpha",
            [&](const std::vector<std::size_t>& idx) {
                Vec a = b.basis(idx[0]);
                Vec m = em(idx[1]);
                return std::pair(md.alpha_m.apply(md.act_left(a, m)),
                                 md.act_left(al.apply(a), md.alpha_m.apply(m)));
            }));
        detail::extend(vs, detail::check_tuples(
            {b.dim, md.dim_m}, "lmod-beta",
            [&](const std::vector<std::size_t>& idx) {
                Vec a = b.basis(idx[0]);
                Vec m = em(idx[1]);
                return std::pair(md.beta_m.apply(md.act_left(a, m)),
                                 md.act_left(be.apply(a), md.beta_m.apply(m)));
            }));
        detail::extend(vs, detail::check_tuples(
            {b.dim, b.dim, md.dim_m}, "lmod-assoc",
            [&](const std::vector<std::size_t>& idx) {
                Vec a = b.basis(idx[0]), a2 = b.basis(idx[1]);
                Vec m = em(idx[2]);
                return std::pair(
                    md.act_left(al.apply(a), md.act_left(a2, m)),
                    md.act_left(mul.mul(a, a2), md.beta_m.apply(m)));
            }));
    } else {
        detail::extend(vs, detail::check_tuples(
            {md.dim_m, b.dim}, "rmod-alpha",
            [&](const std::vector<std::size_t>& idx) {
                Vec m = em(idx[0]);
                Vec a = b.basis(idx[1]);
                return std::pair(md.alpha_m.apply(md.act_right(m, a)),
                                 md.act_right(md.alpha_m.apply(m), al.apply(a)));
            }));
        detail::extend(vs, detail::check_tuples(
            {md.dim_m, b.dim}, "rmod-beta",
            [&](const std::vector<std::size_t>& idx) {
                Vec m = em(idx[0]);
                Vec a = b.basis(idx[1]);
                return std::pair(md.beta_m.apply(md.act_right(m, a)),
                                 md.act_right(md.beta_m.apply(m), be.apply(a)));
            }));
        detail::extend(vs, detail::check_tuples(
            {md.dim_m, b.dim, b.dim}, "rmod-assoc",
            [&](const std::vector<std::size_t>& idx) {
                Vec m = em(idx[0]);
                Vec a = b.basis(idx[1]), a2 = b.basis(idx[2]);
                return std::pair(
                    md.act_right(md.alpha_m.apply(m), mul.mul(a, a2)),
                    md.act_right(md.act_right(m, a), be.apply(a2)));
            }));
    }
    return detail::finish(std::move(vs));
}

inline CheckReport check_bimodule(const StructureBundle& b, const ModuleData& md,
                                  const std::string& prod = "mul") {
    CheckReport report = check_module(b, md, Side::Left, prod);
    CheckReport right = check_module(b, md, Side::Right, prod);
    // The shared map-commutation hypothesis appears once.
    std::size_t skip = 0;
    while (skip < right.violations.size() &&
           right.violations[skip].identity == "commute:alphaM,betaM")
        ++skip;
    right.violations.erase(right.violations.begin(),
                           right.violations.begin() + skip);
    report.merge(std::move(right));
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    auto em = [&](std::size_t i) { return basis_vec(md.dim_m, i, md.field); };
    report.merge(detail::finish(detail::check_tuples(
        {b.dim, md.dim_m, b.dim}, "bimod-mixed",
        [&](const std::vector<std::size_t>& idx) {
            Vec a = b.basis(idx[0]);
            Vec m = em(idx[1]);
            Vec a2 = b.basis(idx[2]);
            return std::pair(md.act_left(al.apply(a), md.act_right(m, a2)),
                             md.act_right(md.act_left(a, m), be.apply(a2)));
        })));
    report.passed = report.violations.empty();
    return report;
}

/// D(a*b) == D(a)*tau(b) + sigma(a)*D(b).  Empty map names mean the identity.
inline CheckReport check_derivation(const StructureBundle& b,
                                    const LinearOperator& D,
                                    const LinearOperator& tau,
                                    const LinearOperator& sigma,
                                    const std::string& prod = "mul") {
    const BilinearProduct& mul = b.product(prod);
    return detail::finish(detail::check_tuples(
        {b.dim, b.dim}, "deriv", [&](const std::vector<std::size_t>& idx) {
            Vec x = b.basis(idx[0]), y = b.basis(idx[1]);
            Vec lhs = D.apply(mul.mul(x, y));
            Vec rhs = vec_add(mul.mul(D.apply(x), tau.apply(y)),
                              mul.mul(sigma.apply(x), D.apply(y)));
            return std::pair(lhs, rhs);
        }));
}

inline CheckReport check_derivation(const StructureBundle& b,
                                    const std::string& d_name = "D",
                                    const std::string& tau_name = "",
                                    const std::string& sigma_name = "",
                                    const std::string& prod = "mul") {
    LinearOperator id = LinearOperator::identity(b.dim, b.field);
    const LinearOperator& tau = tau_name.empty() ? id : b.map(tau_name);
    const LinearOperator& sigma = sigma_name.empty() ? id : b.map(sigma_name);
    return check_derivation(b, b.map(d_name), tau, sigma, prod);
}

/// Structure-map compatibilities of an infinitesimal bundle: alpha and beta
/// commute with psi and omega, Delta is twisted by alpha and beta, and psi
/// and omega are multiplicative.
inline CheckReport check_coalgebra_morphism_data(const StructureBundle& b) {
    std::vector<Violation> vs;
    detail::extend(vs, detail::hyp_commute(b, "alpha", "psi"));
    detail::extend(vs, detail::hyp_commute(b, "alpha", "omega"));
    detail::extend(vs, detail::hyp_commute(b, "beta", "psi"));
    detail::extend(vs, detail::hyp_commute(b, "beta", "omega"));
    detail::extend(vs, detail::comorph_core(b, "alpha", "Delta"));
    detail::extend(vs, detail::comorph_core(b, "beta", "Delta"));
    detail::extend(vs, detail::mult_core(b, "psi", "mul"));
    detail::extend(vs, detail::mult_core(b, "omega", "mul"));
    return detail::finish(std::move(vs));
}

/// Delta(a*b) == omega(a)*b1 # beta(b2) + alpha(a1) # a2*psi(b).
inline CheckReport check_infinitesimal_compat(const StructureBundle& b) {
    const BilinearProduct& mul = b.product("mul");
    const Comultiplication& comul = b.comul("Delta");
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    const LinearOperator& ps = b.map("psi");
    const LinearOperator& om = b.map("omega");
    return detail::finish(detail::check_tuples(
        {b.dim, b.dim}, "inf-compat", [&](const std::vector<std::size_t>& idx) {
            Vec a = b.basis(idx[0]), c = b.basis(idx[1]);
            Tensor2 lhs = comul.apply(mul.mul(a, c));
            Vec om_a = om.apply(a);
            Vec ps_c = ps.apply(c);
            Tensor2 t1 = transform_legs(
                comul.apply(c),
                [&](const Vec& u) { return mul.mul(om_a, u); },
                [&](const Vec& u) { return be.apply(u); });
            Tensor2 t2 = transform_legs(
                comul.apply(a),
                [&](const Vec& u) { return al.apply(u); },
                [&](const Vec& u) { return mul.mul(u, ps_c); });
            return std::pair(lhs, t1 + t2);
        }));
}

/// All axioms of an infinitesimal bundle (product "mul", comultiplication
/// "Delta", maps alpha/beta/psi/omega): twisted associativity and
/// coassociativity, the structure-map compatibilities, and the element-level
/// compatibility of Delta with the product.
inline CheckReport validate_inf_bialgebra(const StructureBundle& b) {
    CheckReport report = check_bihom_associative(b);
    report.merge(check_bihom_coassociative(b));
    report.merge(check_coalgebra_morphism_data(b));
    report.merge(check_infinitesimal_compat(b));
    report.passed = report.violations.empty();
    return report;
}

/// R(alphabeta(a))*R(alphabeta(b)) == R(alphabeta(a)*R(b) + R(a)*alphabeta(b)),
/// with R required to commute with alpha and beta.
inline CheckReport check_rota_baxter(const StructureBundle& b,
                                     const std::string& r_name = "R",
                                     const std::string& prod = "mul") {
    const BilinearProduct& mul = b.product(prod);
    const LinearOperator& R = b.map(r_name);
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    LinearOperator ab = al.compose(be);
    std::vector<Violation> vs;
    detail::extend(vs, detail::hyp_commute(b, r_name, "alpha"));
    detail::extend(vs, detail::hyp_commute(b, r_name, "beta"));
    detail::extend(vs, detail::check_tuples(
        {b.dim, b.dim}, "rb", [&](const std::vector<std::size_t>& idx) {
            Vec x = b.basis(idx[0]), y = b.basis(idx[1]);
            Vec abx = ab.apply(x), aby = ab.apply(y);
            Vec lhs = mul.mul(R.apply(abx), R.apply(aby));
            Vec rhs = R.apply(vec_add(mul.mul(abx, R.apply(y)),
                                      mul.mul(R.apply(x), aby)));
            return std::pair(lhs, rhs);
        }));
    return detail::finish(std::move(vs));
}

} // namespace bihom
