#include <catch2/catch_amalgamated.hpp>

#include "gghlab/clifford.hpp"

#include <random>

using namespace gghlab;

namespace {

CliffordElement random_clifford(unsigned n, unsigned L, std::mt19937_64& rng) {
    CliffordElement x(n, L);
    std::uniform_int_distribution<std::uint32_t> mask(0, (1u << n) - 1);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (int t = 0; t < 4; ++t) x.add_term(mask(rng), Rat(coeff(rng)) * Scalar::one(L));
    return x;
}

} // namespace

TEST_CASE("clifford generator relations") {
    const unsigned n = 4, L = 1;
    CliffordElement one = CliffordElement::unit(n, L);
    for (unsigned i = 1; i <= n; ++i) {
        CliffordElement ei = CliffordElement::generator(n, L, i);
        CHECK(ei * ei == -one);
        for (unsigned j = i + 1; j <= n; ++j) {
            CliffordElement ej = CliffordElement::generator(n, L, j);
            CHECK(ei * ej == -(ej * ei));
        }
    }
    CliffordElement e1 = CliffordElement::generator(n, L, 1);
    CliffordElement e2 = CliffordElement::generator(n, L, 2);
    CHECK((e1 * e2) * (e1 * e2) == -one);
    CHECK_THROWS_AS(CliffordElement::generator(n, L, 5), std::invalid_argument);
}

TEST_CASE("clifford ring axioms") {
    std::mt19937_64 rng(0xC11F);
    const unsigned n = 4, L = 2;
    CliffordElement one = CliffordElement::unit(n, L);
    for (int iter = 0; iter < 60; ++iter) {
        CliffordElement a = random_clifford(n, L, rng);
        CliffordElement b = random_clifford(n, L, rng);
        CliffordElement c = random_clifford(n, L, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * one == a);
        CHECK(one * a == a);
    }
}

TEST_CASE("grading and transpose structure maps") {
    std::mt19937_64 rng(0x66EE);
    const unsigned n = 4, L = 1;
    for (int iter = 0; iter < 40; ++iter) {
        CliffordElement a = random_clifford(n, L, rng);
        CliffordElement b = random_clifford(n, L, rng);
        CHECK((a * b).graded() == a.graded() * b.graded());       // automorphism
        CHECK((a * b).transposed() == b.transposed() * a.transposed()); // anti-automorphism
        CHECK(a.graded().graded() == a);
        CHECK(a.transposed().transposed() == a);
    }
    // frozen monomial signs under transpose: |S| = 0,1,2,3 give +,-,-,+
    auto mono = [&](std::uint32_t mask) {
        return CliffordElement::monomial(n, L, mask, Scalar::one(L));
    };
    CHECK(mono(0b0000).transposed() == mono(0b0000));
    CHECK(mono(0b0001).transposed() == -mono(0b0001));
    CHECK(mono(0b0011).transposed() == -mono(0b0011));
    CHECK(mono(0b0111).transposed() == mono(0b0111));
    CHECK(mono(0b1111).transposed() == mono(0b1111));
    // graded flips exactly the odd part
    CHECK(mono(0b0001).graded() == -mono(0b0001));
    CHECK(mono(0b0011).graded() == mono(0b0011));
}

TEST_CASE("left regular matrix is a faithful homomorphism") {
    std::mt19937_64 rng(0x1EF7);
    const unsigned n = 3, L = 1;
    const Rat kappa(1, 2);
    for (int iter = 0; iter < 25; ++iter) {
        CliffordElement a = random_clifford(n, L, rng);
        CliffordElement b = random_clifford(n, L, rng);
        CHECK(clifford_left_matrix(a * b, kappa) ==
              clifford_left_matrix(a, kappa) * clifford_left_matrix(b, kappa));
        CHECK(clifford_left_matrix(a + b, kappa) ==
              clifford_left_matrix(a, kappa) + clifford_left_matrix(b, kappa));
    }
    CHECK(clifford_left_matrix(CliffordElement::unit(n, L), kappa) == Matrix::identity(L, 8));
    // e_1 squares to minus the identity matrix
    Matrix m1 = clifford_left_matrix(CliffordElement::generator(n, L, 1), kappa);
    CHECK(m1 * m1 == -Matrix::identity(L, 8));
    // deformation coefficients evaluate at the given parameter value
    CliffordElement scaled = CliffordElement::monomial(n, L, 0, Scalar::kappa(L, 2));
    CHECK(clifford_left_matrix(scaled, kappa) ==
          Cyclotomic(L, Rat(1, 4)) * Matrix::identity(L, 8));
}

TEST_CASE("two-form assembly") {
    const unsigned n = 3, L = 1;
    auto B = [&](unsigned i, unsigned j) -> Scalar {
        return Rat(long(i) - long(j)) * Scalar::one(L); // antisymmetric seed values
    };
    CliffordElement k = clifford_two_form(n, L, B);
    CHECK(k.coeff(0b011) == Rat(-2) * Scalar::one(L)); // 2 B(1,2)
    CHECK(k.coeff(0b101) == Rat(-4) * Scalar::one(L)); // 2 B(1,3)
    CHECK(k.coeff(0b110) == Rat(-2) * Scalar::one(L)); // 2 B(2,3)
    CHECK(k.terms().size() == 3);
    // degree-two elements are fixed by transpose with these signs: |S| = 2 gives -
    CHECK(k.transposed() == -k);
}
