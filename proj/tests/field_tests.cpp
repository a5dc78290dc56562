#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bihom/field.hpp"

using namespace bihom;

namespace {

FieldScalar random_scalar(std::mt19937_64& rng, const FieldDescriptor& f) {
    if (f.kind == FieldKind::Rationals) {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 4);
        return FieldScalar::from_rational(Rational(num(rng), den(rng)));
    }
    std::uniform_int_distribution<std::int64_t> d(0, f.characteristic - 1);
    return FieldScalar::from_int(d(rng), f);
}

} // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    auto Q = FieldDescriptor::rationals();
    auto half = FieldScalar::parse("1/2", Q);
    auto third = FieldScalar::parse("1/3", Q);
    REQUIRE((half + third).str() == "5/6");
    REQUIRE((half - half).is_zero());
    REQUIRE((half * FieldScalar::from_int(2, Q)).is_one());
    REQUIRE(FieldScalar::parse("3/6", Q).str() == "1/2");
    REQUIRE(FieldScalar::parse("-4/6", Q).str() == "-2/3");
}

TEST_CASE("prime field arithmetic is canonical") {
    auto F3 = FieldDescriptor::prime(3);
    auto two = FieldScalar::from_int(2, F3);
    REQUIRE((two * two).str() == "1");
    REQUIRE((two + two).str() == "1");
    REQUIRE((-two).str() == "1");
    REQUIRE(FieldScalar::parse("5", F3).str() == "2");
    REQUIRE(FieldScalar::parse("1/2", F3).str() == "2");
    REQUIRE(FieldScalar::from_int(-7, F3).str() == "2");
}

TEST_CASE("division errors") {
    auto Q = FieldDescriptor::rationals();
    auto F3 = FieldDescriptor::prime(3);
    REQUIRE_THROWS_AS(FieldScalar::one(Q) / FieldScalar::zero(Q),
                      DivisionByZero);
    REQUIRE_THROWS_AS(FieldScalar::parse("1/3", F3), DivisionByZero);
    REQUIRE_THROWS_AS(FieldScalar::parse("1/0", Q), DivisionByZero);
}

TEST_CASE("field descriptor validation") {
    REQUIRE_THROWS_AS(FieldDescriptor::prime(4), InvariantViolation);
    REQUIRE_THROWS_AS(FieldDescriptor::prime(1), InvariantViolation);
    REQUIRE(FieldDescriptor::prime(2147483647).characteristic == 2147483647u);
    REQUIRE(FieldDescriptor::prime(2) != FieldDescriptor::prime(3));
}

TEST_CASE("mixed-field arithmetic is rejected") {
    auto a = FieldScalar::one(FieldDescriptor::rationals());
    auto b = FieldScalar::one(FieldDescriptor::prime(5));
    REQUIRE_THROWS_AS(a + b, FieldMismatch);
    REQUIRE_THROWS_AS(a == b, FieldMismatch);
}

TEST_CASE("scalar parse rejects malformed text") {
    auto Q = FieldDescriptor::rationals();
    REQUIRE_THROWS_AS(FieldScalar::parse("", Q), ParseError);
    REQUIRE_THROWS_AS(FieldScalar::parse("1/", Q), ParseError);
    REQUIRE_THROWS_AS(FieldScalar::parse("a", Q), ParseError);
    REQUIRE_THROWS_AS(FieldScalar::parse("1.5", Q), ParseError);
    REQUIRE_THROWS_AS(FieldScalar::parse("+1", Q), ParseError);
}

TEST_CASE("field axioms on randomized triples") {
    std::mt19937_64 rng(20240517);
    for (auto f : {FieldDescriptor::rationals(), FieldDescriptor::prime(2),
                   FieldDescriptor::prime(3), FieldDescriptor::prime(101)}) {
        for (int trial = 0; trial < 200; ++trial) {
            auto a = random_scalar(rng, f);
            auto b = random_scalar(rng, f);
            auto c = random_scalar(rng, f);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            REQUIRE(a + (-a) == FieldScalar::zero(f));
            if (!b.is_zero())
                REQUIRE(b * b.inverse() == FieldScalar::one(f));
        }
    }
}

TEST_CASE("parse of formatted scalars is the identity") {
    std::mt19937_64 rng(991);
    for (auto f : {FieldDescriptor::rationals(), FieldDescriptor::prime(7)}) {
        for (int trial = 0; trial < 200; ++trial) {
            auto a = random_scalar(rng, f);
            REQUIRE(FieldScalar::parse(a.str(), f) == a);
        }
    }
}
