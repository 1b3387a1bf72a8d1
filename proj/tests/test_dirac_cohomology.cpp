#include <catch2/catch_amalgamated.hpp>

#include "gghlab/dirac_cohomology.hpp"

#include <random>

using namespace gghlab;

namespace {

HModule character_module(unsigned L, const Rat& c, const Rat& z1) {
    HModule U = module_shell(1, 1, L, c, 1);
    U.z[0] = Matrix::scalar(L, 1, Cyclotomic(L, z1));
    return U;
}

HModule induced_from_characters(const Rat& l1, const Rat& l2, const Rat& kappa) {
    std::vector<HModule> factors{character_module(1, Rat(2) * kappa, l1),
                                 character_module(1, Rat(2) * kappa, l2)};
    return parabolic_induce(pullback_from_typeA(factors, {1, 1}, kappa, 2));
}

} // namespace

TEST_CASE("rank one Dirac matrix is the rotation by the character value") {
    HModule X = character_module(1, Rat(2), Rat(7));
    Matrix D = dirac_matrix(X);
    REQUIRE(D.rows() == 2);
    Matrix expected(1, 2, 2);
    expected.at(0, 1) = Cyclotomic(1, Rat(-7));
    expected.at(1, 0) = Cyclotomic(1, Rat(7));
    REQUIRE(D == expected);
    REQUIRE(dirac_cohomology(X).dim == 0);

    HModule Y = character_module(1, Rat(2), Rat(0));
    REQUIRE(dirac_matrix(Y) == Matrix(1, 2, 2));
    DiracCohomology hy = dirac_cohomology(Y);
    REQUIRE(hy.dim == 2);
    REQUIRE(hy.torus_characters == std::vector<std::vector<unsigned>>{{0}, {0}});
}

TEST_CASE("element matrices respect multiplication") {
    HModule X = induced_from_characters(Rat(3), Rat(5), Rat(1));
    GGHDescriptor d = dunkl_opdam_descriptor(2, 2, 2);
    std::mt19937 rng(20260815);
    for (unsigned trial = 0; trial < 4; ++trial) {
        HCElement A = HCElement::tensor(random_element(d, rng),
                                        CliffordElement::generator(2, 2, 1 + trial % 2));
        HCElement B = HCElement::tensor(random_element(d, rng),
                                        CliffordElement::unit(2, 2) );
        REQUIRE(hc_matrix(hc_mul(A, B), X) == hc_matrix(A, X) * hc_matrix(B, X));
    }
}

TEST_CASE("torus action commutes with the Dirac matrix") {
    HModule X = induced_from_characters(Rat(3), Rat(5), Rat(1));
    Matrix D = dirac_matrix(X);
    for (unsigned i = 0; i < X.n; ++i) {
        Matrix T = kron(X.g[i], Matrix::identity(X.L, 4));
        REQUIRE(T * D == D * T);
    }
}

TEST_CASE("vanishing parameters give the full cohomology with matched characters") {
    std::vector<HModule> factors{character_module(1, Rat(2), Rat(0)),
                                 character_module(1, Rat(2), Rat(0))};
    HModule X = parabolic_induce(pullback_from_typeA(factors, {1, 1}, Rat(1), 2));
    REQUIRE(dirac_matrix(X) == Matrix(2, 8, 8));

    BlockCohomologyComparison cmp = compare_block_cohomology(factors, {1, 1}, Rat(1), 2);
    REQUIRE(cmp.lhs_dim == 8);
    REQUIRE(cmp.rhs_dim == 8);
    REQUIRE(cmp.pass());
    unsigned count01 = 0, count10 = 0;
    for (const auto& ch : cmp.lhs_characters) {
        if (ch == std::vector<unsigned>{0, 1}) ++count01;
        if (ch == std::vector<unsigned>{1, 0}) ++count10;
    }
    REQUIRE(count01 == 4);
    REQUIRE(count10 == 4);
}

TEST_CASE("one sided blocks: Steinberg pullback") {
    HModule st = typeA_one_dim(2, -1, Rat(1), Rat(2));
    std::vector<HModule> factors{st, module_shell(1, 0, 1, Rat(2), 1)};
    BlockCohomologyComparison cmp = compare_block_cohomology(factors, {2, 0}, Rat(1), 2);
    REQUIRE(cmp.lhs_dim == 4);
    REQUIRE(cmp.rhs_dim == 4);
    REQUIRE(cmp.pass());
    for (const auto& ch : cmp.lhs_characters) REQUIRE(ch == std::vector<unsigned>{0, 0});
}

TEST_CASE("one sided blocks: principal series pullback has no cohomology") {
    HModule ps0 = typeA_principal_series(2, {Rat(0), Rat(0)}, Rat(2));
    std::vector<HModule> factors{ps0, module_shell(1, 0, 1, Rat(2), 1)};
    BlockCohomologyComparison cmp = compare_block_cohomology(factors, {2, 0}, Rat(1), 2);
    REQUIRE(cmp.lhs_dim == 0);
    REQUIRE(cmp.rhs_dim == 0);
    REQUIRE(cmp.pass());
}

TEST_CASE("weight space restriction equals the block Dirac operator") {
    HModule X0 = induced_from_characters(Rat(0), Rat(0), Rat(1));
    CheckReport r0 = weight_space_dirac_report(X0, {1, 1});
    REQUIRE(r0.all_pass());

    HModule Xg = induced_from_characters(Rat(3), Rat(5), Rat(1));
    CheckReport rg = weight_space_dirac_report(Xg, {1, 1});
    REQUIRE(rg.all_pass());

    HModule st = typeA_one_dim(2, -1, Rat(1), Rat(2));
    std::vector<HModule> f20{st, module_shell(1, 0, 1, Rat(2), 1)};
    HModule X20 = parabolic_induce(pullback_from_typeA(f20, {2, 0}, Rat(1), 2));
    REQUIRE(weight_space_dirac_report(X20, {2, 0}).all_pass());

    HModule ps0 = typeA_principal_series(2, {Rat(0), Rat(0)}, Rat(2));
    std::vector<HModule> fps{ps0, module_shell(1, 0, 1, Rat(2), 1)};
    HModule Xps = parabolic_induce(pullback_from_typeA(fps, {2, 0}, Rat(1), 2));
    REQUIRE(weight_space_dirac_report(Xps, {2, 0}).all_pass());

    REQUIRE_THROWS_AS(weight_space_dirac_report(X0, {2, 0}), std::domain_error);
}

TEST_CASE("cohomology is invariant under change of basis") {
    HModule X = induced_from_characters(Rat(0), Rat(0), Rat(1));
    Matrix P = Matrix::identity(2, 2), Pinv = Matrix::identity(2, 2);
    P.at(0, 1) = Cyclotomic(2, Rat(1));
    Pinv.at(0, 1) = Cyclotomic(2, Rat(-1));
    HModule Y = X;
    for (auto& [j, M] : Y.s) M = P * M * Pinv;
    for (auto& M : Y.g) M = P * M * Pinv;
    for (auto& M : Y.z) M = P * M * Pinv;
    REQUIRE(validate_module(Y).all_pass());
    DiracCohomology hx = dirac_cohomology(X), hy = dirac_cohomology(Y);
    REQUIRE(hx.dim == hy.dim);
    REQUIRE(hx.torus_characters == hy.torus_characters);
}
