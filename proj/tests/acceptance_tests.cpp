// Acceptance harness: runs the ten gate suites and prints one PASS/FAIL line
// per suite.  Exits nonzero if any suite fails.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "oracle.hpp"

using namespace bihom;
using fixtures::fs;

namespace {

int failures = 0;

void report(int n, const std::string& label, bool ok,
            const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << ": criterion " << n << ": "
              << label;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

LinearOperator ident(std::size_t n, const FieldDescriptor& f) {
    return LinearOperator::identity(n, f);
}

StructureBundle truncated_quartic(const FieldDescriptor& f) {
    StructureBundle b;
    b.dim = 4;
    b.field = f;
    BilinearProduct mul(4, f);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i + j < 4) mul.at(i, j, i + j) = fs(1, f);
    b.products["mul"] = mul;
    b.maps["alpha"] = ident(4, f);
    b.maps["beta"] = ident(4, f);
    b.kind = "commutative";
    return b;
}

// Conjugation of the 2x2 matrix-unit basis (e11,e12,e21,e22) by [[1,u],[0,1]].
LinearOperator conj_upper(const FieldDescriptor& f, const FieldScalar& u) {
    LinearOperator m(4, 4, f);
    m.at(0, 0) = fs(1, f);
    m.at(1, 0) = -u;
    m.at(1, 1) = fs(1, f);
    m.at(0, 2) = u;
    m.at(1, 2) = -(u * u);
    m.at(2, 2) = fs(1, f);
    m.at(3, 2) = -u;
    m.at(1, 3) = u;
    m.at(3, 3) = fs(1, f);
    return m;
}

LinearOperator diag_op(const FieldDescriptor& f,
                       const std::vector<long long>& entries) {
    LinearOperator m(entries.size(), entries.size(), f);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.at(i, i) = fs(entries[i], f);
    return m;
}

Tensor2 scaled_tensor(const Tensor2& t, const FieldScalar& c, std::size_t dim,
                      const FieldDescriptor& f) {
    Tensor2 out(dim, f);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) out.at(i, j) = c * t.at(i, j);
    return out;
}

BilinearProduct product_from_code(unsigned code, const FieldDescriptor& f) {
    BilinearProduct mul(2, f);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                if (code >> ((i * 2 + j) * 2 + k) & 1u)
                    mul.at(i, j, k) = fs(1, f);
    return mul;
}

LinearOperator matrix_from_code(unsigned code, const FieldDescriptor& f) {
    LinearOperator m(2, 2, f);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            if (code >> (r * 2 + c) & 1u) m.at(r, c) = fs(1, f);
    return m;
}

bool ops_commute(const LinearOperator& a, const LinearOperator& b) {
    FieldDescriptor f = a.field();
    for (std::size_t j = 0; j < a.cols(); ++j) {
        Vec e = basis_vec(a.cols(), j, f);
        if (oracle::ev_op(a, oracle::ev_op(b, e)) !=
            oracle::ev_op(b, oracle::ev_op(a, e)))
            return false;
    }
    return true;
}

bool op_multiplicative(const LinearOperator& m, const BilinearProduct& p) {
    FieldDescriptor f = p.field();
    std::size_t d = p.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec x = basis_vec(d, i, f), y = basis_vec(d, j, f);
            if (oracle::ev_op(m, oracle::ev_mul(p, x, y)) !=
                oracle::ev_mul(p, oracle::ev_op(m, x), oracle::ev_op(m, y)))
                return false;
        }
    return true;
}

bool invertible2(const LinearOperator& m) {
    return !(m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0)).is_zero();
}

std::string render_report(const CheckReport& rep) {
    std::string out;
    for (const auto& v : rep.violations) {
        out += v.identity + "(";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(v.witness[i]);
        }
        out += ");";
    }
    return out;
}

// ---------------------------------------------------------------------------

void criterion1() {
    const std::string label =
        "pre-Lie products derived from corpus, coboundary, and twisted "
        "bundles";
    try {
        auto t0 = std::chrono::steady_clock::now();
        std::mt19937_64 rng(101);
        std::vector<StructureBundle> inputs;
        std::size_t n_corpus = 0, n_cob = 0, n_twist = 0;

        for (const char* name :
             {"m2_coboundary", "m2_twisted_inf", "trivial_delta0"}) {
            inputs.push_back(fixtures::load_corpus(name));
            ++n_corpus;
        }

        FieldDescriptor Q = FieldDescriptor::rationals();
        FieldDescriptor F3 = FieldDescriptor::prime(3);

        struct Family {
            StructureBundle alg;
            Tensor2 r;
        };
        auto families = [&](const FieldDescriptor& f) {
            std::vector<Family> fams;
            {
                StructureBundle t2 = fixtures::truncated_square(f);
                Tensor2 r(2, f);
                r.at(0, 1) = fs(1, f);
                r.at(1, 0) = fs(-1, f);
                fams.push_back({t2, r});
            }
            {
                StructureBundle t3 = fixtures::truncated_cube(f);
                Tensor2 r(3, f);
                r.at(1, 2) = fs(1, f);
                r.at(2, 1) = fs(-1, f);
                fams.push_back({t3, r});
            }
            {
                StructureBundle t4 = truncated_quartic(f);
                Tensor2 r(4, f);
                r.at(2, 3) = fs(1, f);
                r.at(3, 2) = fs(-1, f);
                fams.push_back({t4, r});
            }
            {
                StructureBundle m2 = fixtures::matrix2(f);
                Tensor2 r(4, f);
                r.at(1, 1) = fs(1, f);
                fams.push_back({m2, r});
            }
            return fams;
        };

        for (const Family& fam : families(Q))
            for (long long k = 1; k <= 25; ++k) {
                Tensor2 scaled = scaled_tensor(fam.r, fs(k, Q), fam.alg.dim, Q);
                auto cob =
                    coboundary_bialgebra(fam.alg, make_rmatrix(fam.alg, scaled));
                inputs.push_back(cob.bundle);
                ++n_cob;
            }
        for (const Family& fam : families(F3))
            for (long long k = 1; k <= 2; ++k) {
                Tensor2 scaled =
                    scaled_tensor(fam.r, fs(k, F3), fam.alg.dim, F3);
                auto cob =
                    coboundary_bialgebra(fam.alg, make_rmatrix(fam.alg, scaled));
                inputs.push_back(cob.bundle);
                ++n_cob;
            }
        for (const char* name : {"t2", "t3"}) {
            StructureBundle alg = std::string(name) == "t2"
                                      ? fixtures::truncated_square(F3)
                                      : fixtures::truncated_cube(F3);
            auto central = enumerate_r(alg, RSearchMode::Central);
            std::size_t cap = 0;
            for (const RMatrix& rm : central) {
                inputs.push_back(coboundary_bialgebra(alg, rm).bundle);
                ++n_cob;
                if (++cap == 20) break;
            }
        }

        // Twists of the coboundary bundles by commuting morphism pairs.
        auto base_cob = [&](const FieldDescriptor& f, std::size_t which) {
            Family fam = families(f)[which];
            return coboundary_bialgebra(fam.alg, make_rmatrix(fam.alg, fam.r))
                .bundle;
        };
        {
            StructureBundle m2cob = base_cob(Q, 3);
            std::uniform_int_distribution<long long> small(-9, 9);
            for (int i = 0; i < 40; ++i) {
                LinearOperator At = conj_upper(Q, fs(small(rng), Q));
                LinearOperator Bt = conj_upper(Q, fs(small(rng), Q));
                inputs.push_back(yau_twist_ops(m2cob,
                                               TwistKind::InfBialgebra, At, Bt,
                                               "At", "Bt")
                                     .bundle);
                ++n_twist;
            }
            StructureBundle m2cob3 = base_cob(F3, 3);
            for (long long u = 0; u < 3; ++u)
                for (long long v = 0; v < 3; ++v) {
                    inputs.push_back(
                        yau_twist_ops(m2cob3, TwistKind::InfBialgebra,
                                      conj_upper(F3, fs(u, F3)),
                                      conj_upper(F3, fs(v, F3)), "At", "Bt")
                            .bundle);
                    ++n_twist;
                }
        }
        {
            auto shear3 = [&](const FieldDescriptor& f, const FieldScalar& s) {
                LinearOperator m = ident(3, f);
                m.at(2, 1) = s;
                return m;
            };
            StructureBundle t3cob = base_cob(Q, 1);
            std::uniform_int_distribution<long long> small(-9, 9);
            for (int i = 0; i < 40; ++i) {
                LinearOperator At = shear3(Q, fs(small(rng), Q));
                LinearOperator Bt = shear3(Q, fs(small(rng), Q));
                inputs.push_back(yau_twist_ops(t3cob,
                                               TwistKind::InfBialgebra, At, Bt,
                                               "At", "Bt")
                                     .bundle);
                ++n_twist;
            }
            StructureBundle t3cob3 = base_cob(F3, 1);
            for (long long u = 0; u < 3; ++u)
                for (long long v = 0; v < 3; ++v) {
                    inputs.push_back(
                        yau_twist_ops(t3cob3, TwistKind::InfBialgebra,
                                      shear3(F3, fs(u, F3)),
                                      shear3(F3, fs(v, F3)), "At", "Bt")
                            .bundle);
                    ++n_twist;
                }
        }
        for (const FieldDescriptor& f : {Q, F3}) {
            StructureBundle t2cob = base_cob(f, 0);
            for (long long t = 0; t < 2; ++t)
                for (long long s = 0; s < 2; ++s) {
                    inputs.push_back(
                        yau_twist_ops(t2cob, TwistKind::InfBialgebra,
                                      diag_op(f, {1, t}), diag_op(f, {1, s}),
                                      "At", "Bt")
                            .bundle);
                    ++n_twist;
                }
        }

        if (n_cob < 100 || n_twist < 100)
            throw InvariantViolation("generation produced too few bundles");

        for (const StructureBundle& b : inputs) {
            if (!validate_inf_bialgebra(b).passed)
                throw InvariantViolation("generated bundle is not valid");
            ConstructionResult derived = inf_prelie(b);
            CheckReport rep = check_left_bihom_prelie(derived.bundle);
            if (!rep.passed || !rep.violations.empty())
                throw InvariantViolation("derived product failed: " +
                                         render_report(rep));
        }

        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        bool ok = ms < 10000;
        report(1, label, ok,
               std::to_string(n_corpus) + " corpus + " +
                   std::to_string(n_cob) + " coboundary + " +
                   std::to_string(n_twist) + " twisted in " +
                   std::to_string(ms) + " ms");
    } catch (const std::exception& e) {
        report(1, label, false, e.what());
    }
}

void criterion2() {
    const std::string label =
        "Novikov products from every derivation-space assembly at p,r in "
        "{0,1,2}";
    try {
        std::size_t produced = 0;
        for (const char* name : {"gd_gf2", "t2_rational", "trunc3_gf3"}) {
            StructureBundle b = fixtures::load_corpus(name);
            LinearOperator id = ident(b.dim, b.field);
            auto basis = derivation_space(b, id, id);
            if (basis.empty())
                throw InvariantViolation(std::string(name) +
                                         " has no derivations");

            std::vector<LinearOperator> ds;
            if (b.field.kind == FieldKind::Rationals) {
                for (long long c : {1, 2, -3})
                    for (const auto& op : basis) {
                        LinearOperator scaled(b.dim, b.dim, b.field);
                        for (std::size_t r = 0; r < b.dim; ++r)
                            for (std::size_t cc = 0; cc < b.dim; ++cc)
                                scaled.at(r, cc) = fs(c, b.field) * op.at(r, cc);
                        ds.push_back(scaled);
                    }
            } else {
                std::uint64_t p = b.field.characteristic;
                std::uint64_t total = 1;
                for (std::size_t i = 0; i < basis.size(); ++i) total *= p;
                for (std::uint64_t code = 0; code < total; ++code) {
                    LinearOperator combo(b.dim, b.dim, b.field);
                    std::uint64_t rest = code;
                    for (const auto& op : basis) {
                        FieldScalar c = fs(static_cast<long long>(rest % p),
                                           b.field);
                        rest /= p;
                        for (std::size_t r = 0; r < b.dim; ++r)
                            for (std::size_t cc = 0; cc < b.dim; ++cc)
                                combo.at(r, cc) += c * op.at(r, cc);
                    }
                    ds.push_back(combo);
                }
            }

            for (const LinearOperator& D : ds)
                for (unsigned p = 0; p <= 2; ++p)
                    for (unsigned r = 0; r <= 2; ++r) {
                        StructureBundle c = b;
                        c.maps["D"] = D;
                        ConstructionResult res = gd_cor_p_r(c, p, r);
                        CheckReport rep = check_bihom_novikov(res.bundle);
                        if (!rep.passed)
                            throw InvariantViolation(
                                std::string(name) + " p=" + std::to_string(p) +
                                " r=" + std::to_string(r) + ": " +
                                render_report(rep));
                        ++produced;
                    }
        }

        // Twisted-derivation assembly with nontrivial gamma, lambda, xi.
        StructureBundle t2 = fixtures::load_corpus("t2_rational");
        auto gspace = derivation_space(t2, t2.map("gamma"), t2.map("gamma"));
        if (gspace.size() != 1)
            throw InvariantViolation("gamma-twisted space has dim " +
                                     std::to_string(gspace.size()));
        StructureBundle t2g = t2;
        t2g.maps["D"] = gspace[0];
        ConstructionResult gen = gelfand_dorfman(t2g);
        if (!check_bihom_novikov(gen.bundle).passed)
            throw InvariantViolation("general assembly failed");
        ++produced;

        report(2, label, true, std::to_string(produced) + " assemblies");
    } catch (const std::exception& e) {
        report(2, label, false, e.what());
    }
}

void criterion3() {
    const std::string label =
        "Novikov-Poisson bundles from commutative inputs and their twists";
    try {
        std::size_t produced = 0;
        for (const char* name : {"gd_gf2", "t2_rational", "trunc3_gf3"}) {
            StructureBundle b = fixtures::load_corpus(name);
            ConstructionResult np = np_from_gd(b);
            if (!check_novikov_poisson(np.bundle).passed)
                throw InvariantViolation(std::string(name) +
                                         ": derived bundle is not NP");
            ++produced;
        }

        StructureBundle t2 = fixtures::load_corpus("t2_rational");
        t2.maps["alpha"] = diag_op(t2.field, {1, 2});
        t2.maps["beta"] = diag_op(t2.field, {1, 3});
        ConstructionResult c46 = np_morphism_pair(t2);
        if (!check_novikov_poisson(c46.bundle).passed)
            throw InvariantViolation("morphism-twisted NP bundle failed");
        ++produced;

        for (unsigned n = 0; n <= 3; ++n) {
            LinearOperator At = c46.bundle.map("alpha").pow(n);
            LinearOperator Bt = c46.bundle.map("beta").pow(n);
            ConstructionResult tw =
                yau_twist_ops(c46.bundle, TwistKind::NovikovPoisson, At, Bt,
                              "alpha^" + std::to_string(n),
                              "beta^" + std::to_string(n));
            if (!check_novikov_poisson(tw.bundle).passed)
                throw InvariantViolation("power twist n=" + std::to_string(n) +
                                         " failed");
            ++produced;
        }

        report(3, label, true, std::to_string(produced) + " bundles");
    } catch (const std::exception& e) {
        report(3, label, false, e.what());
    }
}

void criterion4() {
    const std::string label =
        "exchange and mixed associativity coincide over all GF(2) pairs";
    try {
        FieldDescriptor f = FieldDescriptor::prime(2);
        std::vector<LinearOperator> inv;
        for (unsigned code = 0; code < 16; ++code) {
            LinearOperator m = matrix_from_code(code, f);
            if (invertible2(m)) inv.push_back(m);
        }

        std::size_t base_bundles = 0, star_cases = 0, mismatches = 0,
                    both_hold = 0;
        for (unsigned mul_code = 0; mul_code < 256; ++mul_code) {
            BilinearProduct mul = product_from_code(mul_code, f);
            for (const LinearOperator& al : inv)
                for (const LinearOperator& be : inv) {
                    if (!ops_commute(al, be)) continue;
                    StructureBundle b;
                    b.dim = 2;
                    b.field = f;
                    b.products["mul"] = mul;
                    b.maps["alpha"] = al;
                    b.maps["beta"] = be;
                    if (!check_bihom_commutative(b).passed) continue;
                    ++base_bundles;
                    for (unsigned star_code = 0; star_code < 256;
                         ++star_code) {
                        BilinearProduct star = product_from_code(star_code, f);
                        if (!op_multiplicative(al, star) ||
                            !op_multiplicative(be, star))
                            continue;
                        ++star_cases;
                        StructureBundle c = b;
                        c.products["star"] = star;
                        bool ex = check_np_exchange(c).passed;
                        bool mx = check_np_mixed_assoc(c).passed;
                        if (ex != mx) ++mismatches;
                        if (ex && mx) ++both_hold;
                    }
                }
        }

        bool ok = mismatches == 0 && base_bundles > 0 && both_hold > 0;
        report(4, label, ok,
               std::to_string(base_bundles) + " commutative bundles, " +
                   std::to_string(star_cases) + " star products, " +
                   std::to_string(mismatches) + " mismatches");
    } catch (const std::exception& e) {
        report(4, label, false, e.what());
    }
}

void criterion5() {
    const std::string label =
        "coboundary coassociativity coincides with centrality";
    try {
        std::size_t cases = 0, true_cases = 0, mismatches = 0;
        auto compare = [&](const StructureBundle& b, const Tensor2& r) {
            RMatrix rm = make_rmatrix(b, r);
            StructureBundle probe = b;
            probe.comuls["Delta"] = delta_r(b, rm);
            probe.maps["psi"] = b.map("beta");
            probe.maps["omega"] = b.map("alpha");
            bool co = check_bihom_coassociative(probe).passed;
            bool ce = check_centrality(b, rm).passed;
            ++cases;
            if (co) ++true_cases;
            if (co != ce) ++mismatches;
        };

        StructureBundle u = fixtures::load_corpus("upper2_gf2");
        for (unsigned code = 0; code < 16; ++code) {
            Tensor2 r(2, u.field);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    if (code >> (i * 2 + j) & 1u) r.at(i, j) = fs(1, u.field);
            compare(u, r);
        }

        StructureBundle m2 = fixtures::load_corpus("m2_rational");
        std::mt19937_64 rng(505);
        for (int i = 0; i < 1000; ++i)
            compare(m2, fixtures::random_tensor2(rng, m2.dim, m2.field));
        for (long long k = 0; k <= 40; ++k) {
            Tensor2 r(4, m2.field);
            r.at(1, 1) = fs(k, m2.field);
            compare(m2, r);
        }

        bool ok = mismatches == 0 && true_cases > 0;
        report(5, label, ok,
               std::to_string(cases) + " tensors, " +
                   std::to_string(true_cases) + " coassociative, " +
                   std::to_string(mismatches) + " mismatches");
    } catch (const std::exception& e) {
        report(5, label, false, e.what());
    }
}

void criterion6() {
    const std::string label =
        "full quasitriangular pipeline on every enumerated AYBE solution";
    try {
        std::size_t solutions = 0;
        auto pipeline = [&](const StructureBundle& b, const RMatrix& rm) {
            ConstructionResult cob = coboundary_bialgebra(b, rm);
            if (!validate_inf_bialgebra(cob.bundle).passed)
                throw InvariantViolation("coboundary output invalid");
            CheckReport qt =
                check_quasitriangular_characterization(cob.bundle, rm);
            if (!qt.passed)
                throw InvariantViolation("characterization failed: " +
                                         render_report(qt));
            StructureBundle withR = b;
            withR.maps["R"] = rb_from_r(b, rm);
            if (!check_rota_baxter(withR).passed)
                throw InvariantViolation("operator is not Rota-Baxter");
            ConstructionResult dend = dendriform_from_rb(withR);
            if (!check_bihom_dendriform(dend.bundle).passed)
                throw InvariantViolation("dendriform pair failed");
            CheckReport coin = coincidence_check(b, rm);
            if (!coin.passed)
                throw InvariantViolation("coincidence failed: " +
                                         render_report(coin));
            ++solutions;
        };

        for (const char* name : {"upper2_gf2", "gd_gf2", "trunc3_gf3"}) {
            StructureBundle b = fixtures::load_corpus(name);
            for (const RMatrix& rm : enumerate_r(b, RSearchMode::Aybe))
                pipeline(b, rm);
        }
        StructureBundle m2 = fixtures::load_corpus("m2_r_e12e12");
        pipeline(m2, make_rmatrix(m2, m2.tensor("r")));

        report(6, label, true, std::to_string(solutions) + " solutions");
    } catch (const std::exception& e) {
        report(6, label, false, e.what());
    }
}

void criterion7() {
    const std::string label =
        "star conditions match Novikov verdicts over all GF(2) Lie bundles";
    try {
        FieldDescriptor f = FieldDescriptor::prime(2);
        std::vector<LinearOperator> inv;
        for (unsigned code = 0; code < 16; ++code) {
            LinearOperator m = matrix_from_code(code, f);
            if (invertible2(m)) inv.push_back(m);
        }

        std::size_t lie_bundles = 0, cases = 0, mismatches = 0,
                    positive = 0;
        for (unsigned br_code = 0; br_code < 256; ++br_code) {
            BilinearProduct br = product_from_code(br_code, f);
            for (const LinearOperator& al : inv)
                for (const LinearOperator& be : inv) {
                    if (!ops_commute(al, be)) continue;
                    StructureBundle b;
                    b.dim = 2;
                    b.field = f;
                    b.products["bracket"] = br;
                    b.maps["alpha"] = al;
                    b.maps["beta"] = be;
                    bool left = check_bihom_lie(b, Side::Left).passed;
                    bool right = check_bihom_lie(b, Side::Right).passed;
                    if (!left && !right) continue;
                    ++lie_bundles;
                    for (unsigned f_code = 0; f_code < 16; ++f_code) {
                        LinearOperator F = matrix_from_code(f_code, f);
                        if (!ops_commute(F, al) || !ops_commute(F, be))
                            continue;
                        StructureBundle c = b;
                        c.maps["f"] = F;
                        for (Side side : {Side::Left, Side::Right}) {
                            if (side == Side::Left ? !left : !right) continue;
                            bool conds =
                                lie_star_conditions(c, side).passed;
                            bool nov = check_bihom_novikov(
                                           lie_star(c, side).bundle)
                                           .passed;
                            ++cases;
                            if (conds != nov) ++mismatches;
                            if (conds && nov) ++positive;
                        }
                    }
                }
        }

        bool ok = mismatches == 0 && lie_bundles > 0 && positive > 0;
        report(7, label, ok,
               std::to_string(lie_bundles) + " Lie bundles, " +
                   std::to_string(cases) + " verdict pairs, " +
                   std::to_string(mismatches) + " mismatches");
    } catch (const std::exception& e) {
        report(7, label, false, e.what());
    }
}

void criterion8() {
    const std::string label =
        "checkers agree with the random full-space oracle";
    try {
        std::mt19937_64 rng(808);
        std::size_t checked = 0;
        auto expect = [&](const StructureBundle& b, const CheckReport& rep,
                          const std::vector<oracle::Identity>& ids) {
            auto res = oracle::agree(rep, ids, b.field, rng, 100);
            if (!res.ok) throw InvariantViolation(res.detail);
            ++checked;
        };
        auto run = [&](const StructureBundle& b, const std::string& kind) {
            CheckReport rep;
            std::vector<oracle::Identity> ids;
            try {
                if (kind == "assoc") rep = check_bihom_associative(b);
                else if (kind == "coassoc") rep = check_bihom_coassociative(b);
                else if (kind == "commutative") rep = check_bihom_commutative(b);
                else if (kind == "prelie") rep = check_left_bihom_prelie(b);
                else if (kind == "novikov") rep = check_bihom_novikov(b);
                else if (kind == "lie-left") rep = check_bihom_lie(b, Side::Left);
                else if (kind == "lie-right") rep = check_bihom_lie(b, Side::Right);
                else if (kind == "leibniz-left") rep = check_bihom_leibniz(b, Side::Left);
                else if (kind == "leibniz-right") rep = check_bihom_leibniz(b, Side::Right);
                else if (kind == "dendriform") rep = check_bihom_dendriform(b);
                else if (kind == "novikov-poisson") rep = check_novikov_poisson(b);
                else if (kind == "inf-bialgebra") rep = validate_inf_bialgebra(b);
                else if (kind == "rota-baxter") rep = check_rota_baxter(b);
                else throw InvariantViolation("bad kind");
                ids = oracle::identities(b, kind);
            } catch (const MissingComponent&) {
                return;
            }
            expect(b, rep, ids);
        };

        const char* corpus[] = {"gd_gf2",        "t2_rational",
                                "trunc3_gf3",    "m2_rational",
                                "upper2_gf2",    "dend_zero_gf2",
                                "m2_coboundary", "m2_twisted_inf",
                                "trivial_delta0", "m2_r_e12e12"};
        const char* kinds[] = {"assoc",        "coassoc",
                               "commutative",  "prelie",
                               "novikov",      "lie-left",
                               "lie-right",    "leibniz-left",
                               "leibniz-right", "dendriform",
                               "novikov-poisson", "inf-bialgebra",
                               "rota-baxter"};
        for (const char* name : corpus) {
            StructureBundle b = fixtures::load_corpus(name);
            for (const char* kind : kinds) run(b, kind);
        }

        // Bracket bundles.
        {
            StructureBundle m2 = fixtures::load_corpus("m2_rational");
            StructureBundle lie;
            lie.dim = m2.dim;
            lie.field = m2.field;
            BilinearProduct br(m2.dim, m2.field);
            const BilinearProduct& mul = m2.product("mul");
            for (std::size_t i = 0; i < m2.dim; ++i)
                for (std::size_t j = 0; j < m2.dim; ++j)
                    for (std::size_t k = 0; k < m2.dim; ++k)
                        br.at(i, j, k) = mul.at(i, j, k) - mul.at(j, i, k);
            lie.products["bracket"] = br;
            lie.maps["alpha"] = ident(m2.dim, m2.field);
            lie.maps["beta"] = ident(m2.dim, m2.field);
            for (const char* kind :
                 {"lie-left", "lie-right", "leibniz-left", "leibniz-right"})
                run(lie, kind);

            StructureBundle sym =
                fixtures::truncated_square(FieldDescriptor::rationals());
            sym.products["bracket"] = sym.product("mul");
            run(sym, "lie-left");
            run(sym, "lie-right");
        }

        // Modules and bimodules.
        {
            StructureBundle m2 = fixtures::load_corpus("m2_rational");
            ModuleData md = make_regular_bimodule(
                m2.product("mul"), m2.map("alpha"), m2.map("beta"));
            expect(m2, check_bimodule(m2, md),
                   oracle::bimodule_identities(m2, md));

            StructureBundle t2 = fixtures::load_corpus("t2_rational");
            ModuleData tp = make_tensor_power_module(
                t2.product("mul"), t2.map("alpha"), t2.map("beta"), 2);
            expect(t2, check_module(t2, tp, Side::Left),
                   oracle::module_identities(t2, tp, Side::Left));
            expect(t2, check_module(t2, tp, Side::Right),
                   oracle::module_identities(t2, tp, Side::Right));

            StructureBundle na;
            na.dim = 2;
            na.field = FieldDescriptor::rationals();
            BilinearProduct mul(2, na.field);
            mul.at(0, 0, 1) = fs(1, na.field);
            mul.at(1, 1, 0) = fs(1, na.field);
            na.products["mul"] = mul;
            na.maps["alpha"] = ident(2, na.field);
            na.maps["beta"] = ident(2, na.field);
            ModuleData bad = make_regular_bimodule(
                na.product("mul"), na.map("alpha"), na.map("beta"));
            expect(na, check_module(na, bad, Side::Left),
                   oracle::module_identities(na, bad, Side::Left));
        }

        // Derivations.
        {
            StructureBundle t2 = fixtures::load_corpus("t2_rational");
            LinearOperator id = ident(t2.dim, t2.field);
            expect(t2, check_derivation(t2),
                   oracle::derivation_identity(t2, t2.map("D"), id, id));
            expect(t2, check_derivation(t2, "D", "gamma", "gamma"),
                   oracle::derivation_identity(t2, t2.map("D"),
                                               t2.map("gamma"),
                                               t2.map("gamma")));
            LinearOperator broken(t2.dim, t2.dim, t2.field);
            broken.at(1, 0) = fs(1, t2.field);
            expect(t2, check_derivation(t2, broken, id, id),
                   oracle::derivation_identity(t2, broken, id, id));
        }

        // Rota-Baxter, derived NP, derived dendriform, and tensor reports.
        {
            StructureBundle m2 = fixtures::load_corpus("m2_r_e12e12");
            RMatrix rm = make_rmatrix(m2, m2.tensor("r"));
            StructureBundle withR = m2;
            withR.maps["R"] = rb_from_r(m2, rm);
            run(withR, "rota-baxter");
            StructureBundle badR = m2;
            badR.maps["R"] = ident(m2.dim, m2.field);
            run(badR, "rota-baxter");

            StructureBundle np =
                np_from_gd(fixtures::load_corpus("t2_rational")).bundle;
            run(np, "novikov-poisson");
            StructureBundle badnp = np;
            badnp.products["star"].at(0, 0, 0) = fs(1, badnp.field);
            run(badnp, "novikov-poisson");

            StructureBundle dend = dendriform_from_rb(withR).bundle;
            run(dend, "dendriform");

            expect(m2, check_aybe(m2, rm),
                   oracle::tensor_identities(m2, m2.tensor("r"), "aybe"));
            expect(m2, check_centrality(m2, rm),
                   oracle::tensor_identities(m2, m2.tensor("r"), "centrality"));
            Tensor2 defective(m2.dim, m2.field);
            defective.at(0, 0) = fs(1, m2.field);
            RMatrix badrm = make_rmatrix(m2, defective);
            expect(m2, check_aybe(m2, badrm),
                   oracle::tensor_identities(m2, defective, "aybe"));
            expect(m2, check_centrality(m2, badrm),
                   oracle::tensor_identities(m2, defective, "centrality"));
        }

        report(8, label, true, std::to_string(checked) + " reports");
    } catch (const std::exception& e) {
        report(8, label, false, e.what());
    }
}

void criterion9() {
    const std::string label = "derivation spaces have the expected dimensions";
    try {
        StructureBundle tq =
            fixtures::truncated_square(FieldDescriptor::rationals());
        auto rational = derivation_space(tq, ident(2, tq.field),
                                         ident(2, tq.field));
        StructureBundle t2 =
            fixtures::truncated_square(FieldDescriptor::prime(2));
        auto binary = derivation_space(t2, ident(2, t2.field),
                                       ident(2, t2.field));
        bool ok = rational.size() == 1 && binary.size() == 2;
        for (const auto& D : rational)
            ok = ok && check_derivation(tq, D, ident(2, tq.field),
                                        ident(2, tq.field))
                           .passed;
        for (const auto& D : binary)
            ok = ok && check_derivation(t2, D, ident(2, t2.field),
                                        ident(2, t2.field))
                           .passed;
        report(9, label, ok,
               "rational dim " + std::to_string(rational.size()) +
                   ", gf2 dim " + std::to_string(binary.size()));
    } catch (const std::exception& e) {
        report(9, label, false, e.what());
    }
}

void criterion10() {
    const std::string label =
        "serialization stability, worker determinism, exit codes";
    try {
        const char* names[] = {"dend_zero_gf2", "gd_gf2",        "m2_coboundary",
                               "m2_r_e12e12",   "m2_rational",   "m2_twisted_inf",
                               "t2_rational",   "trivial_delta0", "trunc3_gf3",
                               "upper2_gf2"};
        for (const char* name : names) {
            std::string path = fixtures::corpus_path(name);
            std::ifstream in(path, std::ios::binary);
            std::stringstream raw;
            raw << in.rdbuf();
            StructureBundle b = load_bundle(path);
            if (save_bundle_text(b) != raw.str())
                throw InvariantViolation(std::string(name) +
                                         " does not round-trip");
        }

        StructureBundle m2 = fixtures::load_corpus("m2_rational");
        for (const char* kind : {"commutative", "novikov"}) {
            std::string base;
            for (const char* workers : {"1", "2", "8"}) {
                setenv("BIHOM_WORKERS", workers, 1);
                CheckReport rep = std::string(kind) == "commutative"
                                      ? check_bihom_commutative(m2)
                                      : check_bihom_novikov(m2);
                std::string rendered = render_report(rep);
                if (base.empty()) base = rendered;
                if (rendered != base)
                    throw InvariantViolation(
                        std::string(kind) +
                        " ordering changed with BIHOM_WORKERS=" + workers);
            }
            unsetenv("BIHOM_WORKERS");
        }

        auto exit_code = [](const std::string& cmd) {
            int status = std::system((cmd + " > /dev/null 2>&1").c_str());
            return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        };
        std::string cli = BIHOM_CLI_PATH;
        std::string m2path = fixtures::corpus_path("m2_rational");
        std::string bad_path = "/tmp/bihom_acceptance_bad.bundle";
        {
            std::ofstream out(bad_path);
            out << "field gf 2\ndim 1\nproduct mul {\n  0 0 0 x5\n}\n";
        }
        struct ExitCase {
            std::string cmd;
            int expected;
        };
        const ExitCase table[] = {
            {cli + " check assoc " + m2path, 0},
            {cli + " check commutative " + m2path, 1},
            {cli + " check dendriform " + m2path, 2},
            {cli + " check assoc " + bad_path, 3},
        };
        for (const auto& c : table) {
            int got = exit_code(c.cmd);
            if (got != c.expected)
                throw InvariantViolation("'" + c.cmd + "' exited " +
                                         std::to_string(got) + ", expected " +
                                         std::to_string(c.expected));
        }

        report(10, label, true, "");
    } catch (const std::exception& e) {
        report(10, label, false, e.what());
    }
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
