#include <catch2/catch_amalgamated.hpp>

#include "gghlab/dirac.hpp"

#include <random>

using namespace gghlab;

namespace {

HCElement random_hc(const GGHDescriptor& d, std::mt19937& rng) {
    HCElement out(d);
    const unsigned nterms = 1 + unsigned(rng() % 2);
    for (unsigned t = 0; t < nterms; ++t) {
        DOElement a = random_element(d, rng);
        const std::uint32_t mask = std::uint32_t(rng() % (1u << d.n));
        for (const auto& [k, c] : a.terms()) out.add_term(k.g, k.zdeg, mask, c);
    }
    return out;
}

} // namespace

TEST_CASE("dirac element matches its expansion at small rank") {
    SECTION("n = 1: no corrections") {
        const GGHDescriptor d = dunkl_opdam_descriptor(1, 1);
        HCElement D = dirac_element(d);
        REQUIRE(D.term_count() == 1);
        CHECK(D.coeff(g_identity(1, 1), {1}, 0b1u) == Scalar::one(1));
    }
    SECTION("m = 1, n = 2") {
        const GGHDescriptor d = dunkl_opdam_descriptor(1, 2);
        const Scalar half_k = Rat(1, 2) * Scalar::kappa(1);
        HCElement D = dirac_element(d);
        const GmnElement s = g_simple(1, 2, 0), e = g_identity(1, 2);
        CHECK(D.coeff(e, {1, 0}, 0b01u) == Scalar::one(1));
        CHECK(D.coeff(e, {0, 1}, 0b10u) == Scalar::one(1));
        CHECK(D.coeff(s, {0, 0}, 0b01u) == half_k);
        CHECK(D.coeff(s, {0, 0}, 0b10u) == -half_k);
        CHECK(D.term_count() == 4);
    }
    SECTION("m = 2, n = 2: torus-dressed transpositions") {
        const GGHDescriptor d = dunkl_opdam_descriptor(2, 2);
        const Scalar half_k = Rat(1, 2) * Scalar::kappa(2);
        HCElement D = dirac_element(d);
        GmnElement s0 = g_simple(2, 2, 0), s1 = g_simple(2, 2, 0);
        s1.torus = {1, 1};
        for (const GmnElement& g : {s0, s1}) {
            CHECK(D.coeff(g, {0, 0}, 0b01u) == half_k);
            CHECK(D.coeff(g, {0, 0}, 0b10u) == -half_k);
        }
        CHECK(D.term_count() == 6);
    }
}

TEST_CASE("tensor product carries no extra sign") {
    const GGHDescriptor d = dunkl_opdam_descriptor(1, 2);
    const CliffordElement e1 = CliffordElement::generator(2, 1, 1);
    const CliffordElement e2 = CliffordElement::generator(2, 1, 2);
    const DOElement z1 = DOElement::z_generator(d, 1);
    const DOElement z2 = DOElement::z_generator(d, 2);

    HCElement a = HCElement::tensor(z1, e1);
    HCElement b = HCElement::tensor(z2, e2);
    CHECK(hc_mul(a, b) == HCElement::tensor(nf_mul(z1, z2), e1 * e2));
    CHECK(hc_mul(b, a) == HCElement::tensor(nf_mul(z1, z2), e2 * e1));
    CHECK(hc_mul(a, a) == HCElement::tensor(nf_mul(z1, z1), e1 * e1));
    CHECK(hc_mul(a, b) + hc_mul(b, a) == HCElement(d));
}

TEST_CASE("dirac square: two-form expansion is exact") {
    for (auto [m, n] : {std::pair<unsigned, unsigned>{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
        const GGHDescriptor d = dunkl_opdam_descriptor(m, n);
        DiracReport rep = dirac_square_check(d);
        INFO("m=" << m << " n=" << n << " lemma residual: "
                  << rep.lemma_residual.to_string());
        CHECK(rep.lemma_residual.is_zero());
        CHECK(rep.casimir_applicable);
        CHECK(rep.casimir_residual.is_zero());
        CHECK(rep.pass());
    }
}

TEST_CASE("dirac square at n = 2 is minus the square sum") {
    for (unsigned m : {1u, 2u, 3u}) {
        const GGHDescriptor d = dunkl_opdam_descriptor(m, 2);
        const HCElement D = dirac_element(d);
        DOElement h(d);
        for (unsigned i = 1; i <= 2; ++i) {
            DOElement zi = build_family(d, Family::ztilde, i);
            h += nf_mul(zi, zi);
        }
        CHECK(hc_mul(D, D) == -HCElement::of_algebra(h));
    }
    /* frozen scalar part at m = 1: h = z1^2 + z2^2 - kappa^2/2 */
    const GGHDescriptor d = dunkl_opdam_descriptor(1, 2);
    DOElement h(d);
    for (unsigned i = 1; i <= 2; ++i) h += nf_pow(build_family(d, Family::ztilde, i), 2);
    CHECK(h.coeff(g_identity(1, 2), {0, 0}) == Rat(-1, 2) * Scalar::kappa(1, 2));
    CHECK(h.coeff(g_identity(1, 2), {2, 0}) == Scalar::one(1));
}

TEST_CASE("twisted derivation") {
    const GGHDescriptor d = dunkl_opdam_descriptor(2, 2);

    CHECK(dirac_derivation(HCElement::unit(d)).is_zero());

    const HCElement D = dirac_element(d);
    CHECK(dirac_derivation(D) == Rat(2) * hc_mul(D, D));

    /* twisted Leibniz rule on seeded pairs */
    std::mt19937 rng(4242);
    for (int t = 0; t < 10; ++t) {
        HCElement a = random_hc(d, rng);
        HCElement b = random_hc(d, rng);
        HCElement lhs = dirac_derivation(hc_mul(a, b));
        HCElement rhs = hc_mul(dirac_derivation(a), b) + hc_mul(hc_grading(a), dirac_derivation(b));
        CHECK(lhs == rhs);
    }

    /* grading is an involution and multiplicative */
    for (int t = 0; t < 5; ++t) {
        HCElement a = random_hc(d, rng);
        HCElement b = random_hc(d, rng);
        CHECK(hc_grading(hc_grading(a)) == a);
        CHECK(hc_grading(hc_mul(a, b)) == hc_mul(hc_grading(a), hc_grading(b)));
    }
}

TEST_CASE("dirac element is invariant under the diagonal action") {
    for (auto [m, n] : {std::pair<unsigned, unsigned>{2, 2}, {1, 3}, {2, 3}, {3, 2}}) {
        const GGHDescriptor d = dunkl_opdam_descriptor(m, n);
        CheckReport rep = dirac_invariance(d);
        INFO("m=" << m << " n=" << n);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("clifford permutation helper respects products") {
    const unsigned n = 4, L = 1;
    std::vector<unsigned> perm = {2, 0, 3, 1};
    std::mt19937_64 rng(0xD17A);
    for (int t = 0; t < 12; ++t) {
        CliffordElement a(n, L), b(n, L);
        for (int u = 0; u < 3; ++u) {
            a.add_term(std::uint32_t(rng() % 16), Rat(long(rng() % 5) - 2) * Scalar::one(L));
            b.add_term(std::uint32_t(rng() % 16), Rat(long(rng() % 5) - 2) * Scalar::one(L));
        }
        CHECK(clifford_permute(a * b, perm) == clifford_permute(a, perm) * clifford_permute(b, perm));
    }
    CliffordElement e1 = CliffordElement::generator(n, L, 1);
    CHECK(clifford_permute(e1, perm) == CliffordElement::generator(n, L, 3));
}
