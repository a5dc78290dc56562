// Regenerates the corpus/ fixtures.  Usage: make_corpus OUTPUT_DIR
//
// Every file is produced through save_bundle, so the checked-in fixtures
// are canonical serializer output and round-trip byte-for-byte.

#include <bihom/bihom.hpp>

#include <filesystem>
#include <iostream>
#include <string>

using namespace bihom;

namespace {

FieldScalar fs(long long n, const FieldDescriptor& f) {
    return FieldScalar::from_int(n, f);
}

LinearOperator diag(const FieldDescriptor& f,
                    const std::vector<long long>& entries) {
    LinearOperator m(entries.size(), entries.size(), f);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.at(i, i) = fs(entries[i], f);
    return m;
}

// Dim-1 unital algebra with zero comultiplication: the smallest bundle that
// satisfies every infinitesimal bialgebra axiom.
StructureBundle trivial_delta0() {
    StructureBundle b;
    b.field = FieldDescriptor::rationals();
    b.dim = 1;
    b.kind = "inf-bialgebra";
    BilinearProduct mul(1, b.field);
    mul.at(0, 0, 0) = fs(1, b.field);
    b.products["mul"] = mul;
    b.comuls["Delta"] = Comultiplication(1, b.field);
    LinearOperator id = LinearOperator::identity(1, b.field);
    b.maps["alpha"] = id;
    b.maps["beta"] = id;
    b.maps["psi"] = id;
    b.maps["omega"] = id;
    return b;
}

// Truncated polynomials k[x]/(x^2) with basis (1, x).
StructureBundle truncated_square(const FieldDescriptor& f) {
    StructureBundle b;
    b.field = f;
    b.dim = 2;
    b.kind = "commutative";
    BilinearProduct mul(2, f);
    mul.at(0, 0, 0) = fs(1, f);
    mul.at(0, 1, 1) = fs(1, f);
    mul.at(1, 0, 1) = fs(1, f);
    b.products["mul"] = mul;
    LinearOperator id = LinearOperator::identity(2, f);
    b.maps["alpha"] = id;
    b.maps["beta"] = id;
    return b;
}

// Rational k[x]/(x^2) carrying the Euler derivation D = x d/dx plus a pair
// of diagonal algebra morphisms, enough to exercise the general derived
// Novikov product with distinct gamma, lambda, xi.
StructureBundle t2_rational() {
    StructureBundle b = truncated_square(FieldDescriptor::rationals());
    b.maps["D"] = diag(b.field, {0, 1});
    b.maps["lambda"] = diag(b.field, {1, 2});
    b.maps["gamma"] = diag(b.field, {1, 3});
    b.maps["xi"] = LinearOperator::identity(2, b.field);
    return b;
}

// GF(2)[x]/(x^2) with the formal derivative D(x) = 1, which is only a
// derivation because the characteristic is 2.
StructureBundle gd_gf2() {
    StructureBundle b = truncated_square(FieldDescriptor::prime(2));
    LinearOperator D(2, 2, b.field);
    D.at(0, 1) = fs(1, b.field);
    b.maps["D"] = D;
    return b;
}

// GF(3)[x]/(x^3) with basis (1, x, x^2) and the formal derivative.
StructureBundle trunc3_gf3() {
    StructureBundle b;
    b.field = FieldDescriptor::prime(3);
    b.dim = 3;
    b.kind = "commutative";
    BilinearProduct mul(3, b.field);
    mul.at(0, 0, 0) = fs(1, b.field);
    mul.at(0, 1, 1) = fs(1, b.field);
    mul.at(1, 0, 1) = fs(1, b.field);
    mul.at(0, 2, 2) = fs(1, b.field);
    mul.at(2, 0, 2) = fs(1, b.field);
    mul.at(1, 1, 2) = fs(1, b.field);
    b.products["mul"] = mul;
    LinearOperator id = LinearOperator::identity(3, b.field);
    b.maps["alpha"] = id;
    b.maps["beta"] = id;
    LinearOperator D(3, 3, b.field);
    D.at(0, 1) = fs(1, b.field);
    D.at(1, 2) = fs(2, b.field);
    b.maps["D"] = D;
    return b;
}

// 2x2 rational matrix algebra on the matrix-unit basis
// (e11, e12, e21, e22): e_ab e_cd = [b == c] e_ad.
StructureBundle m2_rational() {
    StructureBundle b;
    b.field = FieldDescriptor::rationals();
    b.dim = 4;
    b.kind = "assoc";
    BilinearProduct mul(4, b.field);
    auto unit = [](std::size_t a, std::size_t c) { return 2 * a + c; };
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t p = 0; p < 2; ++p)
            for (std::size_t q = 0; q < 2; ++q)
                mul.at(unit(a, p), unit(p, q), unit(a, q)) = fs(1, b.field);
    b.products["mul"] = mul;
    LinearOperator id = LinearOperator::identity(4, b.field);
    b.maps["alpha"] = id;
    b.maps["beta"] = id;
    return b;
}

// m2_rational plus the coefficient tensor r = e12 (x) e12.
StructureBundle m2_r_e12e12() {
    StructureBundle b = m2_rational();
    Tensor2 r(4, b.field);
    r.at(1, 1) = fs(1, b.field);
    b.tensors["r"] = r;
    return b;
}

// Conjugation by [[1, u], [0, 1]] on the matrix-unit basis.
LinearOperator m2_conjugation(const FieldDescriptor& f, long long u) {
    LinearOperator m(4, 4, f);
    // e11 -> e11 - u e12
    m.at(0, 0) = fs(1, f);
    m.at(1, 0) = fs(-u, f);
    // e12 -> e12
    m.at(1, 1) = fs(1, f);
    // e21 -> u e11 - u^2 e12 + e21 - u e22
    m.at(0, 2) = fs(u, f);
    m.at(1, 2) = fs(-u * u, f);
    m.at(2, 2) = fs(1, f);
    m.at(3, 2) = fs(-u, f);
    // e22 -> u e12 + e22
    m.at(1, 3) = fs(u, f);
    m.at(3, 3) = fs(1, f);
    return m;
}

// Strictly upper-triangular slice span(e11, e12) of M2 over GF(2):
// e0 e0 = e0, e0 e1 = e1, e1 e0 = e1 e1 = 0.
StructureBundle upper2_gf2() {
    StructureBundle b;
    b.field = FieldDescriptor::prime(2);
    b.dim = 2;
    b.kind = "assoc";
    BilinearProduct mul(2, b.field);
    mul.at(0, 0, 0) = fs(1, b.field);
    mul.at(0, 1, 1) = fs(1, b.field);
    b.products["mul"] = mul;
    LinearOperator id = LinearOperator::identity(2, b.field);
    b.maps["alpha"] = id;
    b.maps["beta"] = id;
    return b;
}

// Degenerate dendriform bundle whose alpha is the zero map, so the pre-Lie
// construction must refuse it with a Singular error.
StructureBundle dend_zero_gf2() {
    StructureBundle b;
    b.field = FieldDescriptor::prime(2);
    b.dim = 2;
    b.kind = "dendriform";
    b.products["prec"] = BilinearProduct(2, b.field);
    b.products["succ"] = BilinearProduct(2, b.field);
    b.maps["alpha"] = LinearOperator::zero(2, 2, b.field);
    b.maps["beta"] = LinearOperator::identity(2, b.field);
    return b;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_corpus OUTPUT_DIR\n";
        return 2;
    }
    std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);

    auto emit = [&](const std::string& name, const StructureBundle& b) {
        b.validate();
        save_bundle(b, (dir / (name + ".bundle")).string());
        std::cout << name << ".bundle\n";
    };

    emit("trivial_delta0", trivial_delta0());
    emit("t2_rational", t2_rational());
    emit("gd_gf2", gd_gf2());
    emit("trunc3_gf3", trunc3_gf3());
    emit("m2_rational", m2_rational());

    StructureBundle with_r = m2_r_e12e12();
    emit("m2_r_e12e12", with_r);

    RMatrix rm = make_rmatrix(with_r, with_r.tensor("r"));
    StructureBundle cob = coboundary_bialgebra(with_r, rm).bundle;
    emit("m2_coboundary", cob);

    StructureBundle twisted =
        yau_twist_ops(cob, TwistKind::InfBialgebra,
                      m2_conjugation(cob.field, 1), m2_conjugation(cob.field, 2),
                      "conj1", "conj2")
            .bundle;
    emit("m2_twisted_inf", twisted);

    emit("upper2_gf2", upper2_gf2());
    emit("dend_zero_gf2", dend_zero_gf2());
    return 0;
}
