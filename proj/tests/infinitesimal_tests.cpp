#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace bihom;
using fixtures::fs;

TEST_CASE("derived pre-Lie product on the matrix coboundary bundle") {
    StructureBundle b = fixtures::load_corpus("m2_coboundary");
    auto result = inf_prelie(b);
    REQUIRE(result.theorem_id == "inf-prelie");
    REQUIRE(result.bundle.kind == "left-prelie");
    const auto& star = result.bundle.product("mul");
    // e21 * e22 = e12, e11 * e22 = 0.
    REQUIRE(star.at(2, 3, 1) == fs(1, b.field));
    for (std::size_t k = 0; k < 4; ++k)
        REQUIRE(star.at(0, 3, k) == fs(0, b.field));
    REQUIRE(result.bundle.map("alpha") == LinearOperator::identity(4, b.field));
    REQUIRE(check_left_bihom_prelie(result.bundle).passed);
}

TEST_CASE("derived pre-Lie product survives nontrivial structure maps") {
    StructureBundle b = fixtures::load_corpus("m2_twisted_inf");
    auto result = inf_prelie(b);
    REQUIRE(check_left_bihom_prelie(result.bundle).passed);
    REQUIRE_FALSE(result.bundle.map("alpha") ==
                  LinearOperator::identity(4, b.field));
}

TEST_CASE("mu compose Delta is a twisted derivation") {
    StructureBundle b = fixtures::load_corpus("m2_coboundary");
    LinearOperator D = mu_delta_operator(b);
    REQUIRE(D == LinearOperator::zero(4, 4, b.field));

    StructureBundle tiny = fixtures::load_corpus("trivial_delta0");
    REQUIRE(mu_delta_operator(tiny) ==
            LinearOperator::zero(1, 1, tiny.field));

    StructureBundle twisted = fixtures::load_corpus("m2_twisted_inf");
    REQUIRE_NOTHROW(mu_delta_operator(twisted));
}

TEST_CASE("Delta is a derivation into the tensor-square bimodule") {
    for (const char* name : {"trivial_delta0", "m2_coboundary", "m2_twisted_inf"}) {
        StructureBundle b = fixtures::load_corpus(name);
        REQUIRE(delta_is_bimodule_derivation(b).passed);
        REQUIRE(bihomify_equal_formula(b).passed);
    }

    StructureBundle broken = fixtures::load_corpus("m2_coboundary");
    broken.comuls["Delta"].at(0, 0, 0) = fs(1, broken.field);
    REQUIRE_THROWS_AS(delta_is_bimodule_derivation(broken), HypothesisFailed);
}

TEST_CASE("the tensor-square actions form a bimodule") {
    for (const char* name : {"m2_coboundary", "m2_twisted_inf"}) {
        StructureBundle b = fixtures::load_corpus(name);
        ModuleData md = make_inf_bimodule(b.product("mul"), b.map("alpha"),
                                          b.map("beta"), b.map("psi"),
                                          b.map("omega"));
        REQUIRE(check_bimodule(b, md).passed);
    }
}

TEST_CASE("coboundary comultiplication on the truncated algebra") {
    StructureBundle t2 = fixtures::truncated_square(FieldDescriptor::rationals());
    Tensor2 r(2, t2.field);
    r.at(0, 1) = fs(1, t2.field);
    r.at(1, 0) = fs(-1, t2.field);
    RMatrix rm = make_rmatrix(t2, r);
    REQUIRE(check_centrality(t2, rm).passed);

    auto cob = coboundary_bialgebra(t2, rm);
    REQUIRE(cob.theorem_id == "coboundary");
    const auto& delta = cob.bundle.comul("Delta");
    REQUIRE(delta.at(1, 1, 1) == fs(-2, t2.field));
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) {
            REQUIRE(delta.at(0, p, q) == fs(0, t2.field));
            if (p != 1 || q != 1) REQUIRE(delta.at(1, p, q) == fs(0, t2.field));
        }

    // With identity maps and a commutative product the derived product
    // collapses to a * b = mul(a, D(b)) for D = mu compose Delta.
    LinearOperator D = mu_delta_operator(cob.bundle);
    auto star = inf_prelie(cob.bundle).bundle.product("mul");
    const auto& mul = cob.bundle.product("mul");
    auto collapsed = BilinearProduct::from_rule(
        2, t2.field, [&](std::size_t i, std::size_t j) {
            return mul.mul(cob.bundle.basis(i), D.apply(cob.bundle.basis(j)));
        });
    REQUIRE(star == collapsed);
}
