#include <catch2/catch_amalgamated.hpp>

#include "gghlab/reps.hpp"

using namespace gghlab;

namespace {

Cyclotomic cyc(unsigned L, long num, long den = 1) { return Cyclotomic(L, Rat(num, den)); }

HModule character_module(unsigned L, const Rat& c, const Rat& z1) {
    HModule U = module_shell(1, 1, L, c, 1);
    U.z[0] = Matrix::scalar(L, 1, Cyclotomic(L, z1));
    return U;
}

HModule direct_sum(const HModule& X, const HModule& Y) {
    HModule Z = module_shell(X.m, X.n, X.L, X.kappa, X.dim + Y.dim);
    Z.pi = X.pi;
    auto blockdiag = [&](const Matrix& A, const Matrix& B) {
        Matrix M(X.L, X.dim + Y.dim, X.dim + Y.dim);
        for (unsigned i = 0; i < X.dim; ++i)
            for (unsigned j = 0; j < X.dim; ++j) M.at(i, j) = A.at(i, j);
        for (unsigned i = 0; i < Y.dim; ++i)
            for (unsigned j = 0; j < Y.dim; ++j) M.at(X.dim + i, X.dim + j) = B.at(i, j);
        return M;
    };
    for (unsigned j : X.pi) Z.s[j] = blockdiag(X.s.at(j), Y.s.at(j));
    for (unsigned i = 0; i < X.n; ++i) Z.g[i] = blockdiag(X.g[i], Y.g[i]);
    for (unsigned i = 0; i < X.n; ++i) Z.z[i] = blockdiag(X.z[i], Y.z[i]);
    return Z;
}

} // namespace

TEST_CASE("staircase characters and stabilisers") {
    BlockCharacter bc = mu_character({1, 1, 3}, 3, 5);
    REQUIRE(bc.exponent == std::vector<unsigned>{0, 1, 2, 2, 2});
    REQUIRE(mu_character({1, 1}, 2, 2).exponent == std::vector<unsigned>{0, 1});
    REQUIRE_THROWS_AS(mu_character({1, 1}, 3, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(mu_character({1, 2}, 2, 2), std::invalid_argument);

    ParabolicDatum d113 = stab_subalgebra({1, 1, 3});
    REQUIRE(d113.pi == std::vector<unsigned>{3, 4});
    REQUIRE(d113.blocks == std::vector<std::pair<unsigned, unsigned>>{{0, 1}, {1, 2}, {2, 5}});
    REQUIRE(stab_subalgebra({2, 2}).pi == std::vector<unsigned>{1, 3});
    REQUIRE(stab_subalgebra({1, 1}).pi.empty());

    REQUIRE(runs_composition(5, {3, 4}) == std::vector<unsigned>{1, 1, 3});
    REQUIRE(runs_composition(2, {}) == std::vector<unsigned>{1, 1});
    REQUIRE(runs_composition(3, {1, 2}) == std::vector<unsigned>{3});

    auto labels = all_block_labels(2, 2);
    REQUIRE(labels ==
            std::vector<std::vector<unsigned>>{{2, 0}, {1, 1}, {0, 2}});
    REQUIRE(all_block_labels(2, 3).size() == 4);
}

TEST_CASE("type A one dimensional modules") {
    HModule st = typeA_one_dim(2, -1, Rat(1), Rat(2));
    REQUIRE(validate_module(st).all_pass());
    REQUIRE(st.z[0].at(0, 0) == cyc(1, 1));
    REQUIRE(st.z[1].at(0, 0) == cyc(1, -1));

    HModule triv = typeA_one_dim(3, 1, Rat(0), Rat(2));
    REQUIRE(validate_module(triv).all_pass());
    REQUIRE(triv.z[2].at(0, 0) == cyc(1, 4));
    REQUIRE_THROWS_AS(typeA_one_dim(2, 0, Rat(0), Rat(1)), std::invalid_argument);
}

TEST_CASE("pullback from type A factors") {
    std::vector<HModule> factors{character_module(1, Rat(2), Rat(3)),
                                 character_module(1, Rat(2), Rat(5))};
    HModule W = pullback_from_typeA(factors, {1, 1}, Rat(1), 2);
    REQUIRE(W.dim == 1);
    REQUIRE(W.pi.empty());
    REQUIRE(validate_module(W).all_pass());
    REQUIRE(W.z[0].at(0, 0) == cyc(2, 3));
    REQUIRE(W.z[1].at(0, 0) == cyc(2, 5));
    REQUIRE(W.g[0].at(0, 0) == cyc(2, 1));
    REQUIRE(W.g[1].at(0, 0) == Cyclotomic::zeta(2, 1));

    CheckReport eps = eps_dichotomy_report(W, {1, 1});
    REQUIRE(eps.all_pass());

    std::vector<HModule> bad{character_module(1, Rat(1), Rat(3)),
                             character_module(1, Rat(2), Rat(5))};
    REQUIRE_THROWS_AS(pullback_from_typeA(bad, {1, 1}, Rat(1), 2), std::invalid_argument);
}

TEST_CASE("pullback with a genuine tensor block") {
    HModule st = typeA_one_dim(2, -1, Rat(1), Rat(2));
    std::vector<HModule> factors{st, character_module(1, Rat(2), Rat(7))};
    HModule W = pullback_from_typeA(factors, {2, 1}, Rat(1), 2);
    REQUIRE(W.dim == 1);
    REQUIRE(W.pi == std::vector<unsigned>{1});
    REQUIRE(validate_module(W).all_pass());
    REQUIRE(W.s.at(1).at(0, 0) == cyc(2, -1));
    REQUIRE(W.z[2].at(0, 0) == cyc(2, 7));
    REQUIRE(eps_dichotomy_report(W, {2, 1}).all_pass());
}

TEST_CASE("parabolic induction at the smallest wreath product") {
    std::vector<HModule> factors{character_module(1, Rat(2), Rat(3)),
                                 character_module(1, Rat(2), Rat(5))};
    HModule W = pullback_from_typeA(factors, {1, 1}, Rat(1), 2);
    HModule X = parabolic_induce(W);
    REQUIRE(X.dim == 2);
    REQUIRE(X.is_full());
    REQUIRE(validate_module(X).all_pass());

    /* hand checked action on the basis {e tensor u, s tensor u} */
    Matrix z1(2, 2, 2), s1(2, 2, 2);
    z1.at(0, 0) = cyc(2, 3);
    z1.at(1, 1) = cyc(2, 5);
    s1.at(0, 1) = cyc(2, 1);
    s1.at(1, 0) = cyc(2, 1);
    REQUIRE(X.z[0] == z1);
    REQUIRE(X.s.at(1) == s1);
    /* the sum of the z generators is central, hence acts by the scalar 8 */
    REQUIRE(X.z[0] + X.z[1] == Matrix::scalar(2, 2, cyc(2, 8)));

    auto wd = weight_decomposition(X);
    REQUIRE(wd.size() == 2);
    REQUIRE(wd[0].first == std::vector<unsigned>{0, 1});
    REQUIRE(wd[1].first == std::vector<unsigned>{1, 0});
    REQUIRE(wd[0].second.dim() == 1);

    REQUIRE(block_label(X) == std::vector<unsigned>{1, 1});

    HModule back = restrict_to_weight(X, {1, 1});
    REQUIRE(back.dim == 1);
    REQUIRE(back.pi.empty());
    REQUIRE(hom_dimension(W, back) == 1);
    REQUIRE(iso_between(W, back).has_value());
}

TEST_CASE("induced module dimension matches the coset count") {
    HModule st = typeA_one_dim(2, -1, Rat(1), Rat(2));
    std::vector<HModule> factors{st, character_module(1, Rat(2), Rat(7))};
    HModule W = pullback_from_typeA(factors, {2, 1}, Rat(1), 2);
    HModule X = parabolic_induce(W);
    REQUIRE(X.dim == 3); /* 3! / (2! 1!) cosets */
    REQUIRE(validate_module(X).all_pass());
    REQUIRE(block_label(X) == std::vector<unsigned>{2, 1});
}

TEST_CASE("validation pinpoints a corrupted entry") {
    std::vector<HModule> factors{character_module(1, Rat(2), Rat(3)),
                                 character_module(1, Rat(2), Rat(5))};
    HModule X = parabolic_induce(pullback_from_typeA(factors, {1, 1}, Rat(1), 2));
    X.z[0].at(0, 1) += cyc(2, 1);
    CheckReport rep = validate_module(X);
    REQUIRE_FALSE(rep.all_pass());
    bool witnessed = false;
    for (const auto& it : rep.items)
        if (!it.pass) {
            REQUIRE_FALSE(it.witness.empty());
            REQUIRE(it.witness.find("row") != std::string::npos);
            witnessed = true;
        }
    REQUIRE(witnessed);
}

TEST_CASE("principal series of the rank two symmetric group") {
    const Rat c(2);
    HModule ps = typeA_principal_series(2, {Rat(-1), Rat(1)}, c);
    REQUIRE(ps.dim == 2);
    REQUIRE(validate_module(ps).all_pass());
    REQUIRE_FALSE(is_irreducible(ps));
    auto factors = composition_factors(ps);
    REQUIRE(factors.size() == 2);
    std::vector<Cyclotomic> taus;
    for (const auto& f : factors) {
        REQUIRE(f.dim == 1);
        taus.push_back(f.s.at(1).at(0, 0));
    }
    std::sort(taus.begin(), taus.end());
    REQUIRE(taus[0] == cyc(1, -1));
    REQUIRE(taus[1] == cyc(1, 1));

    HModule ps0 = typeA_principal_series(2, {Rat(0), Rat(0)}, c);
    REQUIRE(ps0.dim == 2);
    REQUIRE(is_irreducible(ps0));
    REQUIRE(hom_dimension(ps0, ps0) == 1);
    REQUIRE(composition_factors(ps0).size() == 1);

    auto gw = generalized_weights(ps0);
    REQUIRE(gw.size() == 1);
    REQUIRE(gw[0].zvals[0].is_zero());
    REQUIRE(gw[0].zvals[1].is_zero());
    REQUIRE(gw[0].space.dim() == 2);
}

TEST_CASE("principal series of the rank three symmetric group") {
    const Rat c(1);
    HModule ps0 = typeA_principal_series(3, {Rat(0), Rat(0), Rat(0)}, c);
    REQUIRE(ps0.dim == 6);
    REQUIRE(validate_module(ps0).all_pass());
    REQUIRE(is_irreducible(ps0));

    HModule ps = typeA_principal_series(3, {Rat(-1), Rat(0), Rat(1)}, c);
    auto factors = composition_factors(ps);
    unsigned total = 0;
    for (const auto& f : factors) total += f.dim;
    REQUIRE(total == 6);
    REQUIRE(factors.size() >= 2);
}

TEST_CASE("direct sums are detected as reducible") {
    HModule ps0 = typeA_principal_series(2, {Rat(0), Rat(0)}, Rat(2));
    HModule XX = direct_sum(ps0, ps0);
    REQUIRE(validate_module(XX).all_pass());
    REQUIRE(hom_dimension(XX, XX) == 4);
    REQUIRE_FALSE(is_irreducible(XX));
    auto factors = composition_factors(XX);
    REQUIRE(factors.size() == 2);
    REQUIRE(factors[0].dim == 2);
    REQUIRE(factors[1].dim == 2);
    REQUIRE(hom_dimension(factors[0], ps0) == 1);
}

TEST_CASE("modules in different blocks admit no intertwiners") {
    std::vector<HModule> f11{character_module(1, Rat(2), Rat(3)),
                             character_module(1, Rat(2), Rat(5))};
    HModule X11 = parabolic_induce(pullback_from_typeA(f11, {1, 1}, Rat(1), 2));

    /* the second block is empty: its factor is the trivial rank zero module */
    HModule st = typeA_one_dim(2, -1, Rat(1), Rat(2));
    std::vector<HModule> f20b{st, module_shell(1, 0, 1, Rat(2), 1)};
    HModule X20 = parabolic_induce(pullback_from_typeA(f20b, {2, 0}, Rat(1), 2));
    REQUIRE(X20.dim == 1);
    REQUIRE(block_label(X20) == std::vector<unsigned>{2, 0});

    REQUIRE(hom_dimension(X11, X20) == 0);
    REQUIRE(hom_dimension(X20, X11) == 0);
}

TEST_CASE("quotients preserve relation checking") {
    HModule ps = typeA_principal_series(2, {Rat(-1), Rat(1)}, Rat(2));
    auto analysis = detail::analyze_simplicity(ps);
    REQUIRE_FALSE(analysis.simple);
    REQUIRE(analysis.proper.has_value());
    HModule sub = submodule_on(ps, *analysis.proper);
    HModule quot = quotient_module(ps, *analysis.proper);
    REQUIRE(validate_module(sub).all_pass());
    REQUIRE(validate_module(quot).all_pass());
    REQUIRE(sub.dim + quot.dim == ps.dim);
}

TEST_CASE("torus cross sum dichotomy fails off the parabolic") {
    /* on the full induced module the cross sum is neither m nor 0 */
    std::vector<HModule> factors{character_module(1, Rat(2), Rat(3)),
                                 character_module(1, Rat(2), Rat(5))};
    HModule W = pullback_from_typeA(factors, {1, 1}, Rat(1), 2);
    HModule X = parabolic_induce(W);
    Matrix E = eps_matrix(X, 1);
    REQUIRE(E == Matrix(2, 2, 2)); /* both weights are cross block here */

    HModule st = typeA_one_dim(2, -1, Rat(1), Rat(2));
    std::vector<HModule> f20{st, module_shell(1, 0, 1, Rat(2), 1)};
    HModule W20 = pullback_from_typeA(f20, {2, 0}, Rat(1), 2);
    REQUIRE(eps_matrix(W20, 1) == Rat(2) * Matrix::identity(2, 1));
}
