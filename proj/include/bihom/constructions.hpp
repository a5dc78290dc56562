#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bihom/bundle.hpp"
#include "bihom/checkers.hpp"
#include "bihom/error.hpp"
#include "bihom/linalg.hpp"
#include "bihom/tensors.hpp"

namespace bihom {

/// Output of a constructive theorem: the produced bundle plus the stable
/// identifier of the construction that made it.
struct ConstructionResult {
    StructureBundle bundle;
    std::string theorem_id;
};

namespace detail {

template <typename Exc>
void require_pass(const CheckReport& report, const std::string& context) {
    if (report.passed) return;
    throw Exc(context + ": " + report.violations.front().str());
}

inline void require_hypotheses(const CheckReport& report,
                               const std::string& context) {
    require_pass<HypothesisFailed>(report, context);
}

inline void require_conclusion(const CheckReport& report,
                               const std::string& theorem_id) {
    if (report.passed) return;
    throw InvariantViolation("verified conclusion failed for " + theorem_id +
                             ": " + report.violations.front().str());
}

inline LinearOperator require_inverse(const LinearOperator& m,
                                      const std::string& name) {
    if (!m.is_invertible()) throw Singular(name + " not invertible");
    return m.inverse();
}

inline void require_morphism(const StructureBundle& b, const std::string& map_name,
                             const std::string& prod_name) {
    std::vector<Violation> vs = mult_core(b, map_name, prod_name);
    if (!vs.empty())
        throw NotAMorphism("map '" + map_name + "' is not multiplicative for '" +
                           prod_name + "': " + vs.front().str());
}

inline void require_comorphism(const StructureBundle& b,
                               const std::string& map_name,
                               const std::string& comul_name) {
    std::vector<Violation> vs = comorph_core(b, map_name, comul_name);
    if (!vs.empty())
        throw NotAMorphism("map '" + map_name + "' is not a morphism for '" +
                           comul_name + "': " + vs.front().str());
}

inline void require_commuting(const StructureBundle& b, const std::string& n1,
                              const std::string& n2) {
    std::vector<Violation> vs = hyp_commute(b, n1, n2);
    if (!vs.empty())
        throw NonCommutingMaps("maps '" + n1 + "' and '" + n2 +
                               "' do not commute: " + vs.front().str());
}

} // namespace detail

enum class TwistKind { Assoc, Commutative, Novikov, NovikovPoisson, InfBialgebra };

inline std::string twist_kind_name(TwistKind kind) {
    switch (kind) {
        case TwistKind::Assoc: return "assoc";
        case TwistKind::Commutative: return "commutative";
        case TwistKind::Novikov: return "novikov";
        case TwistKind::NovikovPoisson: return "novikov-poisson";
        case TwistKind::InfBialgebra: return "inf-bialgebra";
    }
    return "assoc";
}

inline CheckReport check_for_kind(const StructureBundle& b, TwistKind kind) {
    switch (kind) {
        case TwistKind::Assoc: return check_bihom_associative(b);
        case TwistKind::Commutative: return check_bihom_commutative(b);
        case TwistKind::Novikov: return check_bihom_novikov(b);
        case TwistKind::NovikovPoisson: return check_novikov_poisson(b);
        case TwistKind::InfBialgebra: return validate_inf_bialgebra(b);
    }
    return check_bihom_associative(b);
}

/// Twist of a whole bundle along a pair of structure-compatible maps: each
/// product becomes (x, y) -> At(x)*Bt(y), each comultiplication becomes
/// (Bt # At) o Delta, and the structure maps pick up the twisting maps on
/// the matching side (alpha o At, beta o Bt, psi o At, omega o Bt).  In
/// verify mode the input must satisfy the axioms for the given kind, both
/// maps must preserve every product and comultiplication, and the twisting
/// maps must commute with all structure maps and with each other.
inline ConstructionResult yau_twist_ops(const StructureBundle& b, TwistKind kind,
                                        const LinearOperator& At,
                                        const LinearOperator& Bt,
                                        const std::string& at_label,
                                        const std::string& bt_label,
                                        bool verify = true) {
    std::string theorem_id = "yau-" + twist_kind_name(kind);
    if (verify) {
        detail::require_hypotheses(check_for_kind(b, kind),
                                   "input is not " + twist_kind_name(kind));
        StructureBundle probe = b;
        probe.maps[at_label] = At;
        probe.maps[bt_label] = Bt;
        for (const auto& [prod_name, prod] : b.products) {
            (void)prod;
            detail::require_morphism(probe, at_label, prod_name);
            detail::require_morphism(probe, bt_label, prod_name);
        }
        for (const auto& [comul_name, comul] : b.comuls) {
            (void)comul;
            detail::require_comorphism(probe, at_label, comul_name);
            detail::require_comorphism(probe, bt_label, comul_name);
        }
        std::vector<std::string> structural = {"alpha", "beta"};
        if (b.has_map("psi")) structural.push_back("psi");
        if (b.has_map("omega")) structural.push_back("omega");
        for (const auto& s : structural) {
            detail::require_commuting(probe, at_label, s);
            detail::require_commuting(probe, bt_label, s);
        }
        detail::require_commuting(probe, at_label, bt_label);
    }

    StructureBundle out;
    out.field = b.field;
    out.dim = b.dim;
    out.kind = twist_kind_name(kind);
    for (const auto& [name, prod] : b.products)
        out.products[name] = prod.twist(At, Bt);
    for (const auto& [name, comul] : b.comuls)
        out.comuls[name] = comul.twist(Bt, At);
    out.maps = b.maps;
    out.maps["alpha"] = b.map("alpha").compose(At);
    out.maps["beta"] = b.map("beta").compose(Bt);
    if (b.has_map("psi")) out.maps["psi"] = b.map("psi").compose(At);
    if (b.has_map("omega")) out.maps["omega"] = b.map("omega").compose(Bt);
    out.tensors = b.tensors;
    out.provenance = b.provenance;
    out.provenance.push_back("twisted by " + theorem_id + " along (" + at_label +
                             ", " + bt_label + ")");
    if (verify)
        detail::require_conclusion(check_for_kind(out, kind), theorem_id);
    return ConstructionResult{std::move(out), std::move(theorem_id)};
}

inline ConstructionResult yau_twist(const StructureBundle& b, TwistKind kind,
                                    const std::string& at_name = "At",
                                    const std::string& bt_name = "Bt",
                                    bool verify = true) {
    return yau_twist_ops(b, kind, b.map(at_name), b.map(bt_name), at_name,
                         bt_name, verify);
}

/// Derived product a*b = lambda(a) * xi(D(b)) on a commutative bundle with a
/// twisted derivation D, giving a Novikov bundle with structure maps
/// lambda o alpha and xi o beta o gamma.
inline ConstructionResult gelfand_dorfman_ops(
    const StructureBundle& b, const LinearOperator& gamma,
    const LinearOperator& lambda, const LinearOperator& xi,
    const LinearOperator& D, const std::string& theorem_id,
    bool verify = true) {
    if (verify) {
        detail::require_hypotheses(check_bihom_commutative(b),
                                   "input is not commutative");
        StructureBundle probe = b;
        probe.maps["gd:gamma"] = gamma;
        probe.maps["gd:lambda"] = lambda;
        probe.maps["gd:xi"] = xi;
        probe.maps["gd:D"] = D;
        for (const auto& name : {"gd:gamma", "gd:lambda", "gd:xi"})
            detail::require_hypotheses(
                detail::finish(detail::mult_core(probe, name, "mul")),
                std::string("map '") + name + "' is not multiplicative");
        std::vector<std::string> all = {"alpha",     "beta",  "gd:gamma",
                                        "gd:lambda", "gd:xi", "gd:D"};
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                detail::require_hypotheses(
                    detail::finish(detail::hyp_commute(probe, all[i], all[j])),
                    "maps '" + all[i] + "' and '" + all[j] +
                        "' do not commute");
        detail::require_hypotheses(check_derivation(b, D, gamma, gamma),
                                   "D is not a twisted derivation");
    }
    const BilinearProduct& mul = b.product("mul");
    BilinearProduct star = BilinearProduct::from_rule(
        b.dim, b.field, [&](std::size_t i, std::size_t j) {
            return mul.mul(lambda.apply(b.basis(i)),
                           xi.apply(D.apply(b.basis(j))));
        });
    StructureBundle out;
    out.field = b.field;
    out.dim = b.dim;
    out.kind = "novikov";
    out.products["mul"] = std::move(star);
    out.maps["alpha"] = lambda.compose(b.map("alpha"));
    out.maps["beta"] = xi.compose(b.map("beta")).compose(gamma);
    out.provenance = b.provenance;
    out.provenance.push_back("derived product via " + theorem_id);
    if (verify)
        detail::require_conclusion(check_bihom_novikov(out), theorem_id);
    return ConstructionResult{std::move(out), theorem_id};
}

/// The general form with all four auxiliary maps taken from the bundle by
/// their standard names gamma, lambda, xi, D.
inline ConstructionResult gelfand_dorfman(const StructureBundle& b,
                                          bool verify = true) {
    return gelfand_dorfman_ops(b, b.map("gamma"), b.map("lambda"), b.map("xi"),
                               b.map("D"), "gd-general", verify);
}

/// Specialization lambda = alpha^p, gamma = beta^r, xi = id, so the output
/// carries maps alpha^{p+1} and beta^{r+1}.
inline ConstructionResult gd_cor_p_r(const StructureBundle& b, unsigned p,
                                     unsigned r, bool verify = true) {
    LinearOperator id = LinearOperator::identity(b.dim, b.field);
    return gelfand_dorfman_ops(b, b.map("beta").pow(r), b.map("alpha").pow(p),
                               id, b.map("D"), "gd-cor-p-r", verify);
}

/// Specialization with gamma = lambda = xi = id: an ordinary derivation on a
/// commutative bundle yields a Novikov bundle with the same structure maps.
inline ConstructionResult gd_commhom(const StructureBundle& b,
                                     bool verify = true) {
    LinearOperator id = LinearOperator::identity(b.dim, b.field);
    return gelfand_dorfman_ops(b, id, id, id, b.map("D"), "gd-commhom", verify);
}

/// Keeps the commutative product and adjoins the derived Novikov product
/// a star b = a * D(b), giving a Novikov-Poisson bundle.
inline ConstructionResult np_from_gd(const StructureBundle& b,
                                     const std::string& d_name = "D",
                                     bool verify = true) {
    const std::string theorem_id = "np-from-gd";
    const LinearOperator& D = b.map(d_name);
    if (verify) {
        detail::require_hypotheses(check_bihom_commutative(b),
                                   "input is not commutative");
        LinearOperator id = LinearOperator::identity(b.dim, b.field);
        detail::require_hypotheses(check_derivation(b, D, id, id),
                                   "'" + d_name + "' is not a derivation");
        detail::require_hypotheses(
            detail::finish(detail::hyp_commute(b, d_name, "alpha")),
            "'" + d_name + "' does not commute with alpha");
        detail::require_hypotheses(
            detail::finish(detail::hyp_commute(b, d_name, "beta")),
            "'" + d_name + "' does not commute with beta");
    }
    const BilinearProduct& mul = b.product("mul");
    BilinearProduct star = BilinearProduct::from_rule(
        b.dim, b.field, [&](std::size_t i, std::size_t j) {
            return mul.mul(b.basis(i), D.apply(b.basis(j)));
        });
    StructureBundle out;
    out.field = b.field;
    out.dim = b.dim;
    out.kind = "novikov-poisson";
    out.products["mul"] = mul;
    out.products["star"] = std::move(star);
    out.maps["alpha"] = b.map("alpha");
    out.maps["beta"] = b.map("beta");
    out.provenance = b.provenance;
    out.provenance.push_back("adjoined derived product via " + theorem_id);
    if (verify)
        detail::require_conclusion(check_novikov_poisson(out), theorem_id);
    return ConstructionResult{std::move(out), theorem_id};
}

/// From a classical commutative associative product with commuting morphisms
/// alpha, beta and a commuting ordinary derivation D: the twisted product
/// x bullet y = alpha(x)*beta(y) together with x star y = alpha(x)*D(beta(y))
/// forms a Novikov-Poisson bundle with maps alpha, beta.
inline ConstructionResult np_morphism_pair(const StructureBundle& b,
                                   const std::string& d_name = "D",
                                   bool verify = true) {
    const std::string theorem_id = "np-morphism-pair";
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    const LinearOperator& D = b.map(d_name);
    if (verify) {
        StructureBundle classical = b;
        LinearOperator id = LinearOperator::identity(b.dim, b.field);
        classical.maps["alpha"] = id;
        classical.maps["beta"] = id;
        detail::require_hypotheses(
            check_bihom_commutative(classical),
            "input is not classically commutative associative");
        detail::require_hypotheses(
            detail::finish(detail::mult_core(b, "alpha", "mul")),
            "alpha is not multiplicative");
        detail::require_hypotheses(
            detail::finish(detail::mult_core(b, "beta", "mul")),
            "beta is not multiplicative");
        detail::require_hypotheses(
            detail::finish(detail::hyp_commute(b, "alpha", "beta")),
            "alpha and beta do not commute");
        detail::require_hypotheses(check_derivation(b, D, id, id),
                                   "'" + d_name + "' is not a derivation");
        detail::require_hypotheses(
            detail::finish(detail::hyp_commute(b, d_name, "alpha")),
            "'" + d_name + "' does not commute with alpha");
        detail::require_hypotheses(
            detail::finish(detail::hyp_commute(b, d_name, "beta")),
            "'" + d_name + "' does not commute with beta");
    }
    const BilinearProduct& mul = b.product("mul");
    StructureBundle out;
    out.field = b.field;
    out.dim = b.dim;
    out.kind = "novikov-poisson";
    out.products["mul"] = mul.twist(al, be);
    out.products["star"] = BilinearProduct::from_rule(
        b.dim, b.field, [&](std::size_t i, std::size_t j) {
            return mul.mul(al.apply(b.basis(i)),
                           D.apply(be.apply(b.basis(j))));
        });
    out.maps["alpha"] = al;
    out.maps["beta"] = be;
    out.provenance = b.provenance;
    out.provenance.push_back("twisted pair of products via " + theorem_id);
    if (verify)
        detail::require_conclusion(check_novikov_poisson(out), theorem_id);
    return ConstructionResult{std::move(out), theorem_id};
}

/// Candidate Novikov product built from a bracket and a compatible map f:
/// x star y = [f(x), y] on the left, x star y = [x, f(y)] on the right.
/// The right-hand form needs invertible structure maps.  No conclusion is
/// verified; pair with lie_star_conditions for the exact criterion.
inline ConstructionResult lie_star(const StructureBundle& b, Side side,
                                   const std::string& f_name = "f") {
    const std::string theorem_id =
        side == Side::Left ? "lie-star-left" : "lie-star-right";
    const BilinearProduct& br = b.product("bracket");
    const LinearOperator& f = b.map(f_name);
    detail::require_commuting(b, f_name, "alpha");
    detail::require_commuting(b, f_name, "beta");
    if (side == Side::Right) {
        detail::require_inverse(b.map("alpha"), "alpha");
        detail::require_inverse(b.map("beta"), "beta");
    }
    BilinearProduct star = BilinearProduct::from_rule(
        b.dim, b.field, [&](std::size_t i, std::size_t j) {
            return side == Side::Left
                       ? br.mul(f.apply(b.basis(i)), b.basis(j))
                       : br.mul(b.basis(i), f.apply(b.basis(j)));
        });
    StructureBundle out;
    out.field = b.field;
    out.dim = b.dim;
    out.kind = "star-candidate";
    out.products["mul"] = std::move(star);
    out.maps["alpha"] = b.map("alpha");
    out.maps["beta"] = b.map("beta");
    out.provenance = b.provenance;
    out.provenance.push_back("candidate product via " + theorem_id);
    return ConstructionResult{std::move(out), theorem_id};
}

/// The exact criterion for the lie_star candidate to be Novikov, expressed
/// through centralizer membership and one closed identity per side.  For the
/// left form: f([f(beta(x)), alpha(y)] + [beta(x), f(alpha(y))]) -
/// [f(beta(x)), f(alpha(y))] must commute with every beta(z), and
/// [f([f(x), beta(y)]), alphabeta(z)] must be symmetric in y and z.  For the
/// right form (invertible maps): the closed identity of the right candidate
/// must vanish and [f(beta(x)), f(alpha(y))] must annihilate every alpha(z)
/// from the right.
inline CheckReport lie_star_conditions(const StructureBundle& b, Side side,
                                       const std::string& f_name = "f") {
    const BilinearProduct& br = b.product("bracket");
    const LinearOperator& f = b.map(f_name);
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    LinearOperator ab = al.compose(be);
    detail::require_commuting(b, f_name, "alpha");
    detail::require_commuting(b, f_name, "beta");
    std::vector<Violation> vs;
    if (side == Side::Left) {
        detail::extend(vs, detail::check_tuples(
            {b.dim, b.dim, b.dim}, "lie-star-central-left",
            [&](const std::vector<std::size_t>& idx) {
                Vec x = b.basis(idx[0]), y = b.basis(idx[1]), z = b.basis(idx[2]);
                Vec bx = be.apply(x), ay = al.apply(y);
                Vec inner = vec_add(br.mul(f.apply(bx), ay),
                                    br.mul(bx, f.apply(ay)));
                Vec mem = vec_sub(f.apply(inner),
                                  br.mul(f.apply(bx), f.apply(ay)));
                return std::pair(br.mul(mem, be.apply(z)),
                                 zero_vec(b.dim, b.field));
            }));
        detail::extend(vs, detail::check_tuples(
            {b.dim, b.dim, b.dim}, "lie-star-novikov-left",
            [&](const std::vector<std::size_t>& idx) {
                Vec x = b.basis(idx[0]), y = b.basis(idx[1]), z = b.basis(idx[2]);
                auto expr = [&](const Vec& u, const Vec& v) {
                    return br.mul(f.apply(br.mul(f.apply(x), be.apply(u))),
                                  ab.apply(v));
                };
                return std::pair(expr(y, z), expr(z, y));
            }));
    } else {
        detail::require_inverse(al, "alpha");
        detail::require_inverse(be, "beta");
        detail::extend(vs, detail::check_tuples(
            {b.dim, b.dim, b.dim}, "lie-star-novikov-right",
            [&](const std::vector<std::size_t>& idx) {
                Vec x = b.basis(idx[0]), y = b.basis(idx[1]), z = b.basis(idx[2]);
                Vec bx = be.apply(x), ay = al.apply(y);
                Vec first = br.mul(
                    vec_add(br.mul(bx, f.apply(ay)), br.mul(f.apply(bx), ay)),
                    f.apply(be.apply(z)));
                Vec second = br.mul(
                    ab.apply(x), f.apply(br.mul(ay, f.apply(z))));
                Vec third = br.mul(
                    ab.apply(y), f.apply(br.mul(al.apply(x), f.apply(z))));
                return std::pair(vec_add(vec_sub(first, second), third),
                                 zero_vec(b.dim, b.field));
            }));
        detail::extend(vs, detail::check_tuples(
            {b.dim, b.dim, b.dim}, "lie-star-central-right",
            [&](const std::vector<std::size_t>& idx) {
                Vec x = b.basis(idx[0]), y = b.basis(idx[1]), z = b.basis(idx[2]);
                Vec mem = br.mul(f.apply(be.apply(x)), f.apply(al.apply(y)));
                return std::pair(br.mul(al.apply(z), mem),
                                 zero_vec(b.dim, b.field));
            }));
    }
    return detail::finish(std::move(vs));
}

/// Basis of the one-sided centralizer: on the left, all x with
/// [x, beta(y)] = 0 for every y; on the right, all x with [alpha(y), x] = 0.
inline std::vector<Vec> centralizer(const StructureBundle& b, Side side,
                                    const std::string& bracket_name = "bracket") {
    const BilinearProduct& br = b.product(bracket_name);
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    std::size_t n = b.dim;
    LinearOperator system(n * n, n, b.field);
    for (std::size_t j = 0; j < n; ++j) {
        Vec other = side == Side::Left ? be.apply(b.basis(j))
                                       : al.apply(b.basis(j));
        for (std::size_t i = 0; i < n; ++i) {
            Vec out = side == Side::Left ? br.mul(b.basis(i), other)
                                         : br.mul(other, b.basis(i));
            for (std::size_t k = 0; k < n; ++k)
                system.at(j * n + k, i) = out[k];
        }
    }
    return nullspace(system);
}

/// x star y = x succ y - (alpha^{-1}beta(y)) prec (alphabeta^{-1}(x)) turns a
/// dendriform bundle with invertible structure maps into a left pre-Lie one,
/// keeping the same maps.
inline ConstructionResult prelie_from_dendriform(const StructureBundle& b,
                                                 bool verify = true) {
    const std::string theorem_id = "prelie-from-dend";
    if (verify)
        detail::require_hypotheses(check_bihom_dendriform(b),
                                   "input is not dendriform");
    const BilinearProduct& prec = b.product("prec");
    const BilinearProduct& succ = b.product("succ");
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    LinearOperator al_inv = detail::require_inverse(al, "alpha");
    LinearOperator be_inv = detail::require_inverse(be, "beta");
    LinearOperator first = al_inv.compose(be);
    LinearOperator second = al.compose(be_inv);
    BilinearProduct star = BilinearProduct::from_rule(
        b.dim, b.field, [&](std::size_t i, std::size_t j) {
            return vec_sub(succ.mul(b.basis(i), b.basis(j)),
                           prec.mul(first.apply(b.basis(j)),
                                    second.apply(b.basis(i))));
        });
    StructureBundle out;
    out.field = b.field;
    out.dim = b.dim;
    out.kind = "left-prelie";
    out.products["mul"] = std::move(star);
    out.maps["alpha"] = al;
    out.maps["beta"] = be;
    out.provenance = b.provenance;
    out.provenance.push_back("combined product via " + theorem_id);
    if (verify)
        detail::require_conclusion(check_left_bihom_prelie(out), theorem_id);
    return ConstructionResult{std::move(out), theorem_id};
}

/// Splitting of the product through a twisted Rota-Baxter operator R and an
/// auxiliary morphism eta: x prec y = alphabeta(x) * R(eta(y)) and
/// x succ y = R(x) * alphabeta(eta(y)) form a dendriform bundle with maps
/// alpha^2 beta and alpha beta^2 eta.
inline ConstructionResult dendriform_from_rb_ops(const StructureBundle& b,
                                                 const LinearOperator& eta,
                                                 const std::string& eta_label,
                                                 bool verify = true) {
    const std::string theorem_id = "dend-from-rb";
    const BilinearProduct& mul = b.product("mul");
    const LinearOperator& R = b.map("R");
    const LinearOperator& al = b.map("alpha");
    const LinearOperator& be = b.map("beta");
    if (verify) {
        detail::require_hypotheses(check_rota_baxter(b),
                                   "R is not a twisted Rota-Baxter operator");
        StructureBundle probe = b;
        probe.maps["rb:eta"] = eta;
        detail::require_hypotheses(
            detail::finish(detail::hyp_commute(probe, "rb:eta", "alpha")),
            "'" + eta_label + "' does not commute with alpha");
        detail::require_hypotheses(
            detail::finish(detail::hyp_commute(probe, "rb:eta", "beta")),
            "'" + eta_label + "' does not commute with beta");
        detail::require_hypotheses(
            detail::finish(detail::hyp_commute(probe, "rb:eta", "R")),
            "'" + eta_label + "' does not commute with R");
        detail::require_hypotheses(
            detail::finish(detail::mult_core(probe, "rb:eta", "mul")),
            "'" + eta_label + "' is not multiplicative");
    }
    LinearOperator ab = al.compose(be);
    BilinearProduct prec = BilinearProduct::from_rule(
        b.dim, b.field, [&](std::size_t i, std::size_t j) {
            return mul.mul(ab.apply(b.basis(i)),
                           R.apply(eta.apply(b.basis(j))));
        });
    BilinearProduct succ = BilinearProduct::from_rule(
        b.dim, b.field, [&](std::size_t i, std::size_t j) {
            return mul.mul(R.apply(b.basis(i)),
                           ab.apply(eta.apply(b.basis(j))));
        });
    StructureBundle out;
    out.field = b.field;
    out.dim = b.dim;
    out.kind = "dendriform";
    out.products["prec"] = std::move(prec);
    out.products["succ"] = std::move(succ);
    out.maps["alpha"] = al.compose(al).compose(be);
    out.maps["beta"] = al.compose(be).compose(be).compose(eta);
    out.provenance = b.provenance;
    out.provenance.push_back("split product via " + theorem_id);
    if (verify)
        detail::require_conclusion(check_bihom_dendriform(out), theorem_id);
    return ConstructionResult{std::move(out), theorem_id};
}

inline ConstructionResult dendriform_from_rb(const StructureBundle& b,
                                             const std::string& eta_name = "",
                                             bool verify = true) {
    if (eta_name.empty())
        return dendriform_from_rb_ops(
            b, LinearOperator::identity(b.dim, b.field), "id", verify);
    return dendriform_from_rb_ops(b, b.map(eta_name), eta_name, verify);
}

} // namespace bihom
