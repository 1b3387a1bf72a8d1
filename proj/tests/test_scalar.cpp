/*
 * Exact coefficient arithmetic: cyclotomic fields and kappa-polynomials.
 * Frozen expected values were computed by hand (cyclotomic polynomial
 * tables, golden-ratio minimal polynomial, small norms).
 */

#include <catch2/catch_amalgamated.hpp>

#include "gghlab/cyclotomic.hpp"
#include "gghlab/scalar.hpp"

#include <random>

using namespace gghlab;

namespace {

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return Rat(num(rng), den(rng));
}

Cyclotomic random_cyc(unsigned L, std::mt19937_64& rng) {
    Cyclotomic x(L);
    unsigned phi = euler_phi(L);
    Cyclotomic z = Cyclotomic::zeta(L);
    Cyclotomic p(L, Rat(1));
    for (unsigned j = 0; j < phi; ++j) {
        x += random_rat(rng) * p;
        p *= z;
    }
    return x;
}

Scalar random_scalar(unsigned L, std::mt19937_64& rng) {
    Scalar s(L);
    std::uniform_int_distribution<int> deg(0, 3);
    int d = deg(rng);
    for (int j = 0; j <= d; ++j) s += Scalar(random_cyc(L, rng)) * Scalar::kappa(L, unsigned(j));
    return s;
}

std::vector<Rat> rats(std::initializer_list<int> xs) {
    std::vector<Rat> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(3) == 2);
    CHECK(euler_phi(4) == 2);
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(36) == 12);
}

TEST_CASE("cyclotomic polynomials match the classical table") {
    using detail::cyclotomic_polynomial;
    CHECK(cyclotomic_polynomial(1) == rats({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == rats({1, 1}));
    CHECK(cyclotomic_polynomial(3) == rats({1, 1, 1}));
    CHECK(cyclotomic_polynomial(4) == rats({1, 0, 1}));
    CHECK(cyclotomic_polynomial(5) == rats({1, 1, 1, 1, 1}));
    CHECK(cyclotomic_polynomial(6) == rats({1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == rats({1, 0, -1, 0, 1}));
}

TEST_CASE("zeta powers reduce canonically") {
    // 1 + zeta_3 + zeta_3^2 = 0
    Cyclotomic one(3, Rat(1));
    CHECK((one + Cyclotomic::zeta(3, 1) + Cyclotomic::zeta(3, 2)).is_zero());
    // zeta_L^L = 1
    for (unsigned L : {1u, 2u, 3u, 4u, 5u, 6u, 12u}) {
        Cyclotomic p(L, Rat(1));
        for (unsigned j = 0; j < L; ++j) p *= Cyclotomic::zeta(L);
        CHECK(p == Cyclotomic(L, Rat(1)));
    }
    CHECK(Cyclotomic::zeta(4) * Cyclotomic::zeta(4) == Cyclotomic(4, Rat(-1)));
    CHECK(Cyclotomic::zeta(2) == Cyclotomic(2, Rat(-1)));
}

TEST_CASE("order mismatch is an error, embedding fixes it") {
    Cyclotomic a(3, Rat(1)), b(4, Rat(1));
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK(a.embedded(12) + b.embedded(12) == Cyclotomic(12, Rat(2)));
    // zeta_3 = zeta_12^4 under the canonical embedding
    CHECK(Cyclotomic::zeta(3).embedded(12) == Cyclotomic::zeta(12, 4));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(0xC0FFEE);
    for (unsigned L : {1u, 2u, 3u, 4u, 5u, 6u, 12u}) {
        for (int iter = 0; iter < 10000; ++iter) {
            Cyclotomic a = random_cyc(L, rng), b = random_cyc(L, rng), c = random_cyc(L, rng);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a * b == b * a);
            REQUIRE(a - a == Cyclotomic(L));
        }
    }
}

TEST_CASE("multiplicative inverses") {
    std::mt19937_64 rng(0xBEEF);
    Cyclotomic one3(3, Rat(1));
    CHECK(Cyclotomic::zeta(3).inverse() == Cyclotomic::zeta(3, 2));
    CHECK_THROWS_AS(Cyclotomic(5).inverse(), std::domain_error);
    for (unsigned L : {1u, 2u, 3u, 4u, 5u, 6u, 12u}) {
        Cyclotomic one(L, Rat(1));
        for (int iter = 0; iter < 300; ++iter) {
            Cyclotomic a = random_cyc(L, rng);
            if (a.is_zero()) continue;
            REQUIRE(a * a.inverse() == one);
        }
    }
}

TEST_CASE("conjugation and automorphisms") {
    CHECK(Cyclotomic::zeta(5).conj() == Cyclotomic::zeta(5, 4));
    CHECK(Cyclotomic::zeta(12).automorphism(5) == Cyclotomic::zeta(12, 5));
    std::mt19937_64 rng(0xABCD);
    for (int iter = 0; iter < 200; ++iter) {
        Cyclotomic a = random_cyc(12, rng), b = random_cyc(12, rng);
        REQUIRE((a * b).automorphism(7) == a.automorphism(7) * b.automorphism(7));
        REQUIRE((a + b).conj() == a.conj() + b.conj());
        REQUIRE(a.conj().conj() == a);
    }
}

TEST_CASE("norm is multiplicative and rational") {
    std::mt19937_64 rng(0x5EED);
    for (unsigned L : {3u, 5u, 12u}) {
        for (int iter = 0; iter < 50; ++iter) {
            Cyclotomic a = random_cyc(L, rng), b = random_cyc(L, rng);
            REQUIRE(a.norm() * b.norm() == (a * b).norm());
        }
    }
    // N(1 - zeta_5) = Phi_5(1) = 5
    Cyclotomic x = Cyclotomic(5, Rat(1)) - Cyclotomic::zeta(5);
    CHECK(x.norm() == Rat(5));
}

TEST_CASE("certified real sign") {
    // zeta_5 + zeta_5^4 = 2 cos(72 deg) > 0; its minimal polynomial is x^2 + x - 1
    Cyclotomic s = Cyclotomic::zeta(5) + Cyclotomic::zeta(5, 4);
    CHECK(s.is_real());
    CHECK(s.real_sign() == 1);
    CHECK((s * s + s - Cyclotomic(5, Rat(1))).is_zero());
    // zeta_5^2 + zeta_5^3 = 2 cos(144 deg) < 0
    CHECK((Cyclotomic::zeta(5, 2) + Cyclotomic::zeta(5, 3)).real_sign() == -1);
    // zeta_12 + zeta_12^{-1} = sqrt(3): positive, and squares to 3 exactly
    Cyclotomic t = Cyclotomic::zeta(12) + Cyclotomic::zeta(12, 11);
    CHECK(t.real_sign() == 1);
    CHECK(t * t == Cyclotomic(12, Rat(3)));
    CHECK((-t).real_sign() == -1);
    CHECK(Cyclotomic(12).real_sign() == 0);
    CHECK(Cyclotomic(7, Rat(-3)).real_sign() == -1);
    CHECK_THROWS_AS(Cyclotomic::zeta(5).real_sign(), std::domain_error);
    // precision escalation: s minus its own 60-digit decimal truncation is
    // positive but only at the 61st digit
    Int num("618033988749894848204586834365638117720309179805762862135448");
    Cyclotomic tiny = s - Cyclotomic(5, Rat(num, int_pow(Int(10), 60)));
    CHECK(tiny.real_sign() == 1);
    CHECK((-tiny).real_sign() == -1);
}

TEST_CASE("scalar ring arithmetic") {
    std::mt19937_64 rng(0xF00D);
    for (unsigned L : {1u, 2u, 3u}) {
        for (int iter = 0; iter < 1000; ++iter) {
            Scalar a = random_scalar(L, rng), b = random_scalar(L, rng), c = random_scalar(L, rng);
            REQUIRE((a + b) * c == a * c + b * c);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * b == b * a);
            REQUIRE(a - a == Scalar(L));
        }
    }
    Scalar k = Scalar::kappa(2);
    CHECK(k.degree() == 1);
    CHECK((k * k).degree() == 2);
    CHECK(k.eval(Rat(3)) == Cyclotomic(2, Rat(3)));
    CHECK((k * k - Scalar(2, Rat(9))).eval(Rat(3)).is_zero());
}

TEST_CASE("scalar literals parse and round-trip") {
    Scalar s = Scalar::parse(12, "(1/2)*z^2*k - 3");
    CHECK(s.degree() == 1);
    CHECK(s.coeff(1) == Rat(1, 2) * Cyclotomic::zeta(12, 2));
    CHECK(s.coeff(0) == Cyclotomic(12, Rat(-3)));
    CHECK(Scalar::parse(12, s.to_string()) == s);

    CHECK(Scalar::parse(3, "1 + z + z^2").is_zero());
    CHECK(Scalar::parse(1, "2^10") == Scalar(1, Rat(1024)));
    CHECK(Scalar::parse(2, "-(1+k)*(1-k)") == Scalar::kappa(2, 2) - Scalar::one(2));
    CHECK(Scalar::parse(4, "1/2 * k") == Rat(1, 2) * Scalar::kappa(4));
    CHECK(Scalar::parse(2, "k/2") == Rat(1, 2) * Scalar::kappa(2));
    CHECK_THROWS_AS(Scalar::parse(2, "1/k"), std::domain_error);
    CHECK_THROWS_AS(Scalar::parse(2, "1 +"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse(2, "q"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse(2, "(1"), std::invalid_argument);

    std::mt19937_64 rng(0xAA11);
    for (unsigned L : {1u, 2u, 3u, 12u})
        for (int iter = 0; iter < 400; ++iter) {
            Scalar s2 = random_scalar(L, rng);
            REQUIRE(Scalar::parse(L, s2.to_string()) == s2);
        }
}

TEST_CASE("scalar division and embedding") {
    Scalar z3 = Scalar::zeta_value(3);
    CHECK(Scalar::one(3) / z3 == Scalar::zeta_value(3, 2));
    Scalar s = Scalar::parse(3, "(1+z)*k") / Scalar::parse(3, "1+z");
    CHECK(s == Scalar::kappa(3));
    CHECK(Scalar::kappa(3).embedded(12) == Scalar::kappa(12));
    CHECK(Scalar::zeta_value(3).embedded(12) == Scalar::zeta_value(12, 4).embedded(12));
}
