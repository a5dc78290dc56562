// Shared builders for the test suite: small reference algebras and
// randomized scalars/vectors with reproducible seeds.
#pragma once

#include <random>
#include <string>

#include "bihom/bihom.hpp"

namespace fixtures {

using namespace bihom;

inline std::string corpus_path(const std::string& name) {
    return std::string(BIHOM_CORPUS_DIR) + "/" + name + ".bundle";
}

inline StructureBundle load_corpus(const std::string& name) {
    return load_bundle(corpus_path(name));
}

inline FieldScalar fs(long long n, const FieldDescriptor& f) {
    return FieldScalar::from_int(n, f);
}

inline LinearOperator diag(const FieldDescriptor& f,
                           const std::vector<long long>& entries) {
    LinearOperator m(entries.size(), entries.size(), f);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.at(i, i) = fs(entries[i], f);
    return m;
}

/// k[x]/(x^2) with basis (1, x) and identity structure maps.
inline StructureBundle truncated_square(const FieldDescriptor& f) {
    StructureBundle b;
    b.field = f;
    b.dim = 2;
    b.kind = "commutative";
    BilinearProduct mul(2, f);
    mul.at(0, 0, 0) = fs(1, f);
    mul.at(0, 1, 1) = fs(1, f);
    mul.at(1, 0, 1) = fs(1, f);
    b.products["mul"] = mul;
    b.maps["alpha"] = LinearOperator::identity(2, f);
    b.maps["beta"] = LinearOperator::identity(2, f);
    return b;
}

/// k[x]/(x^3) with basis (1, x, x^2) and identity structure maps.
inline StructureBundle truncated_cube(const FieldDescriptor& f) {
    StructureBundle b;
    b.field = f;
    b.dim = 3;
    b.kind = "commutative";
    BilinearProduct mul(3, f);
    mul.at(0, 0, 0) = fs(1, f);
    mul.at(0, 1, 1) = fs(1, f);
    mul.at(1, 0, 1) = fs(1, f);
    mul.at(0, 2, 2) = fs(1, f);
    mul.at(2, 0, 2) = fs(1, f);
    mul.at(1, 1, 2) = fs(1, f);
    b.products["mul"] = mul;
    b.maps["alpha"] = LinearOperator::identity(3, f);
    b.maps["beta"] = LinearOperator::identity(3, f);
    return b;
}

/// 2x2 matrix algebra on the basis (e11, e12, e21, e22).
inline StructureBundle matrix2(const FieldDescriptor& f) {
    StructureBundle b;
    b.field = f;
    b.dim = 4;
    b.kind = "assoc";
    BilinearProduct mul(4, f);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t p = 0; p < 2; ++p)
            for (std::size_t q = 0; q < 2; ++q)
                mul.at(2 * a + p, 2 * p + q, 2 * a + q) = fs(1, f);
    b.products["mul"] = mul;
    b.maps["alpha"] = LinearOperator::identity(4, f);
    b.maps["beta"] = LinearOperator::identity(4, f);
    return b;
}

/// Two-dimensional Lie algebra [e0, e1] = e0 as a "bracket" bundle.
inline StructureBundle affine_lie(const FieldDescriptor& f) {
    StructureBundle b;
    b.field = f;
    b.dim = 2;
    b.kind = "lie";
    BilinearProduct br(2, f);
    br.at(0, 1, 0) = fs(1, f);
    br.at(1, 0, 0) = fs(-1, f);
    b.products["bracket"] = br;
    b.maps["alpha"] = LinearOperator::identity(2, f);
    b.maps["beta"] = LinearOperator::identity(2, f);
    return b;
}

inline FieldScalar random_scalar(std::mt19937_64& rng,
                                 const FieldDescriptor& f) {
    if (f.kind == FieldKind::Rationals) {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 4);
        return FieldScalar::from_rational(Rational(num(rng), den(rng)));
    }
    std::uniform_int_distribution<std::int64_t> d(0, f.characteristic - 1);
    return FieldScalar::from_int(d(rng), f);
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t n,
                      const FieldDescriptor& f) {
    Vec v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(rng, f));
    return v;
}

inline Tensor2 random_tensor2(std::mt19937_64& rng, std::size_t n,
                              const FieldDescriptor& f) {
    Tensor2 t(n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.at(i, j) = random_scalar(rng, f);
    return t;
}

} // namespace fixtures
