#include <catch2/catch_amalgamated.hpp>

#include "gghlab/linalg.hpp"

#include <map>
#include <random>
#include <set>

using namespace gghlab;

namespace {

Cyclotomic cyc(unsigned L, long num, long den = 1) { return Cyclotomic(L, Rat(num, den)); }

Cyclotomic random_cyc(unsigned L, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    Cyclotomic out(L);
    for (unsigned j = 0; j < euler_phi(L); ++j)
        out += Cyclotomic::zeta(L, j) * Cyclotomic(L, Rat(num(rng), den(rng)));
    return out;
}

Matrix random_matrix(unsigned L, unsigned rows, unsigned cols, std::mt19937_64& rng, int sparsity = 2) {
    std::uniform_int_distribution<int> keep(0, sparsity);
    Matrix m(L, rows, cols);
    for (unsigned i = 0; i < rows; ++i)
        for (unsigned j = 0; j < cols; ++j)
            if (keep(rng) == 0) m.at(i, j) = random_cyc(L, rng);
    return m;
}

Matrix diag(unsigned L, const std::vector<Cyclotomic>& d) {
    Matrix m(L, unsigned(d.size()), unsigned(d.size()));
    for (unsigned i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

poly::KPoly kp(unsigned L, const std::vector<Rat>& coeffs) {
    poly::KPoly p;
    for (const Rat& c : coeffs) p.push_back(Cyclotomic(L, c));
    return poly::trim(std::move(p));
}

std::vector<Cyclotomic> unit_vec(unsigned L, unsigned n, unsigned i) {
    std::vector<Cyclotomic> v(n, Cyclotomic(L));
    v[i] = cyc(L, 1);
    return v;
}

bool all_zero(const std::vector<Cyclotomic>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace

TEST_CASE("polynomial division, gcd, squarefree part") {
    const unsigned L = 1;
    poly::KPoly a = kp(L, {Rat(-1), Rat(0), Rat(1)});          // x^2 - 1
    poly::KPoly b = kp(L, {Rat(-1), Rat(1)});                  // x - 1
    auto [q, r] = poly::divmod(a, b);
    CHECK(q == kp(L, {Rat(1), Rat(1)}));
    CHECK(poly::is_zero(r));

    poly::KPoly c = kp(L, {Rat(1), Rat(-2), Rat(1)});          // (x-1)^2
    CHECK(poly::gcd(a, c) == b);

    // (x-1)^2 (x+2) has squarefree part (x-1)(x+2)
    poly::KPoly p = poly::mul(c, kp(L, {Rat(2), Rat(1)}));
    CHECK(poly::squarefree_part(p) == poly::mul(b, kp(L, {Rat(2), Rat(1)})));

    poly::KPoly five = kp(L, {Rat(5)});
    CHECK(poly::degree(five) == 0);
    CHECK(poly::degree(poly::KPoly{}) == -1);
    CHECK(poly::eval(a, cyc(L, 3)) == cyc(L, 8));
}

TEST_CASE("rref, rank and kernel satisfy rank-nullity") {
    std::mt19937_64 rng(0x11CE);
    for (unsigned L : {1u, 3u, 4u}) {
        for (int iter = 0; iter < 25; ++iter) {
            Matrix m = random_matrix(L, 3, 4, rng);
            Matrix r = m;
            auto pivots = rref(r);
            Subspace ker = kernel(m);
            CHECK(pivots.size() + ker.dim() == m.cols());
            CHECK(row_space(m).dim() == pivots.size());
            CHECK(column_space(m).dim() == pivots.size());
            for (unsigned i = 0; i < ker.dim(); ++i)
                CHECK(all_zero(m.apply(ker.basis().row(i))));
            // canonical form is stable under re-canonicalization
            CHECK(Subspace::from_span(r) == row_space(m));
        }
    }
}

TEST_CASE("kernel of an invertible antisymmetric pair matrix is zero") {
    const unsigned L = 3;
    Cyclotomic gamma = Cyclotomic::zeta(L, 1) - Cyclotomic::zeta(L, 2);
    Matrix m(L, 2, 2);
    m.at(0, 1) = -gamma;
    m.at(1, 0) = gamma;
    CHECK(kernel(m).dim() == 0);
    CHECK(determinant(m) == gamma * gamma);
}

TEST_CASE("linear solve finds solutions and detects inconsistency") {
    std::mt19937_64 rng(0x5017);
    for (unsigned L : {1u, 4u}) {
        for (int iter = 0; iter < 25; ++iter) {
            Matrix A = random_matrix(L, 3, 3, rng);
            std::vector<Cyclotomic> x(3, Cyclotomic(L));
            for (auto& e : x) e = random_cyc(L, rng);
            std::vector<Cyclotomic> b = A.apply(x);
            auto sol = solve(A, b);
            REQUIRE(sol.has_value());
            CHECK(A.apply(*sol) == b);
        }
    }
    // inconsistent system
    Matrix A(1, 2, 2);
    A.at(0, 0) = cyc(1, 1);
    A.at(1, 0) = cyc(1, 1);
    CHECK_FALSE(solve(A, {cyc(1, 0), cyc(1, 1)}).has_value());
}

TEST_CASE("subspace lattice: sum, intersection, containment") {
    std::mt19937_64 rng(0x1A77);
    for (unsigned L : {1u, 3u}) {
        for (int iter = 0; iter < 20; ++iter) {
            Subspace a = row_space(random_matrix(L, 2, 4, rng));
            Subspace b = row_space(random_matrix(L, 2, 4, rng));
            Subspace meet = intersect(a, b);
            Subspace join = sum_spaces(a, b);
            CHECK(a.dim() + b.dim() == meet.dim() + join.dim());
            CHECK(a.contains(meet));
            CHECK(b.contains(meet));
            CHECK(join.contains(a));
            CHECK(join.contains(b));
            // annihilator round trip
            Matrix q = annihilator(a);
            CHECK(kernel(q) == a);
        }
    }
}

TEST_CASE("subspace coordinates certify membership") {
    const unsigned L = 1;
    Matrix span(L, 2, 3);
    span.at(0, 0) = cyc(L, 1);
    span.at(0, 1) = cyc(L, 2);
    span.at(1, 1) = cyc(L, 1);
    span.at(1, 2) = cyc(L, 1);
    Subspace s = Subspace::from_span(span);
    REQUIRE(s.dim() == 2);
    std::vector<Cyclotomic> inside{cyc(L, 1), cyc(L, 5), cyc(L, 3)}; // row0 + 3*row1
    auto coords = s.coordinates(inside);
    REQUIRE(coords.has_value());
    // rebuild from coordinates
    std::vector<Cyclotomic> rebuilt(3, Cyclotomic(L));
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 3; ++j) rebuilt[j] += (*coords)[i] * s.basis().at(i, j);
    CHECK(rebuilt == inside);
    CHECK_FALSE(s.contains(unit_vec(L, 3, 0)));
}

TEST_CASE("preimage and restriction") {
    std::mt19937_64 rng(0xFACE);
    const unsigned L = 4;
    for (int iter = 0; iter < 15; ++iter) {
        Matrix op = random_matrix(L, 4, 4, rng);
        Subspace s = row_space(random_matrix(L, 2, 4, rng));
        Subspace pre = preimage(op, s);
        for (unsigned i = 0; i < pre.dim(); ++i)
            CHECK(s.contains(op.apply(pre.basis().row(i))));
        // the kernel is always contained in any preimage
        CHECK(pre.contains(kernel(op)));
    }

    // restriction to an invariant subspace reproduces the action in coordinates
    Matrix op(L, 3, 3);
    op.at(0, 0) = cyc(L, 2);
    op.at(0, 1) = cyc(L, 1);
    op.at(1, 1) = cyc(L, 2);
    op.at(2, 2) = Cyclotomic::zeta(L, 1);
    Matrix span(L, 2, 3);
    span.at(0, 0) = cyc(L, 1);
    span.at(1, 1) = cyc(L, 1);
    Subspace s = Subspace::from_span(span); // e1, e2 invariant under the upper block
    Matrix r = restrict_to(op, s);
    for (unsigned i = 0; i < s.dim(); ++i) {
        auto lhs = s.coordinates(op.apply(s.basis().row(i)));
        REQUIRE(lhs.has_value());
        CHECK(*lhs == r.apply(*s.coordinates(s.basis().row(i))));
    }
    // multiplicativity of restriction
    Matrix op2 = op * op;
    CHECK(restrict_to(op2, s) == r * r);

    Matrix bad(L, 3, 3);
    bad.at(2, 0) = cyc(L, 1); // sends e1 out of span{e1,e2}... columns: e1 -> e3
    CHECK_THROWS_AS(restrict_to(bad, s), std::domain_error);
}

TEST_CASE("largest invariant subspace fixpoint") {
    const unsigned L = 1;
    Matrix op(L, 2, 2);
    op.at(0, 1) = cyc(L, 1); // e2 -> e1, e1 -> 0
    Subspace k1 = Subspace::from_span([&] {
        Matrix m(L, 1, 2);
        m.at(0, 0) = cyc(L, 1);
        return m;
    }());
    Subspace k2 = Subspace::from_span([&] {
        Matrix m(L, 1, 2);
        m.at(0, 1) = cyc(L, 1);
        return m;
    }());
    CHECK(largest_invariant_subspace({op}, k1) == k1);           // span{e1} is already invariant
    CHECK(largest_invariant_subspace({op}, k2).dim() == 0);      // span{e2} contains no invariant line
    CHECK(largest_invariant_subspace({op}, Subspace::full(L, 2)) == Subspace::full(L, 2));
}

TEST_CASE("determinant is multiplicative and detects singularity") {
    std::mt19937_64 rng(0xDE7);
    for (unsigned L : {1u, 3u}) {
        for (int iter = 0; iter < 15; ++iter) {
            Matrix a = random_matrix(L, 3, 3, rng);
            Matrix b = random_matrix(L, 3, 3, rng);
            CHECK(determinant(a * b) == determinant(a) * determinant(b));
            CHECK((determinant(a).is_zero()) == (kernel(a).dim() > 0));
        }
    }
    CHECK(determinant(Matrix::identity(4, 5)) == cyc(4, 1));
}

TEST_CASE("kronecker product is multiplicative") {
    std::mt19937_64 rng(0x12AB);
    const unsigned L = 3;
    Matrix a = random_matrix(L, 2, 2, rng), b = random_matrix(L, 3, 3, rng);
    Matrix c = random_matrix(L, 2, 2, rng), d = random_matrix(L, 3, 3, rng);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    CHECK(kron(a, b).rows() == 6);
    CHECK(kron(Matrix::identity(L, 2), Matrix::identity(L, 3)) == Matrix::identity(L, 6));
}

TEST_CASE("minimal polynomials of model operators") {
    // diagonal with repeated and cyclotomic entries
    {
        const unsigned L = 3;
        Matrix m = diag(L, {cyc(L, 1), cyc(L, 1), Cyclotomic::zeta(L, 1)});
        poly::KPoly mu = min_poly(m);
        poly::KPoly expected = poly::mul(kp(L, {Rat(-1), Rat(1)}),
                                         poly::KPoly{-Cyclotomic::zeta(L, 1), cyc(L, 1)});
        CHECK(mu == expected);
    }
    // nilpotent Jordan block: mu = x^3
    {
        const unsigned L = 1;
        Matrix m(L, 3, 3);
        m.at(0, 1) = cyc(L, 1);
        m.at(1, 2) = cyc(L, 1);
        CHECK(min_poly(m) == kp(L, {Rat(0), Rat(0), Rat(0), Rat(1)}));
    }
    // companion matrix of x^3 - 2x + 5
    {
        const unsigned L = 1;
        Matrix m(L, 3, 3);
        m.at(1, 0) = cyc(L, 1);
        m.at(2, 1) = cyc(L, 1);
        m.at(0, 2) = cyc(L, -5);
        m.at(1, 2) = cyc(L, 2);
        CHECK(min_poly(m) == kp(L, {Rat(5), Rat(-2), Rat(0), Rat(1)}));
    }
    // random matrices are killed by their minimal polynomial
    std::mt19937_64 rng(0xF1E1D);
    for (unsigned L : {1u, 4u}) {
        for (int iter = 0; iter < 10; ++iter) {
            Matrix m = random_matrix(L, 4, 4, rng);
            poly::KPoly mu = min_poly(m);
            Matrix acc(L, 4, 4);
            for (std::size_t j = 0; j < mu.size(); ++j)
                if (!mu[j].is_zero()) acc = acc + mu[j] * m.pow(unsigned(j));
            CHECK(acc.is_zero());
            CHECK(poly::degree(mu) <= 4);
        }
    }
}

TEST_CASE("field root search over cyclotomic fields") {
    // golden-ratio polynomial splits over the fifth cyclotomic field
    {
        const unsigned L = 5;
        poly::KPoly p = kp(L, {Rat(-1), Rat(1), Rat(1)}); // x^2 + x - 1
        FieldRoots fr = roots_in_field(p);
        REQUIRE(fr.split);
        REQUIRE(fr.roots.size() == 2);
        Cyclotomic r1 = Cyclotomic::zeta(L, 1) + Cyclotomic::zeta(L, 4);
        Cyclotomic r2 = Cyclotomic::zeta(L, 2) + Cyclotomic::zeta(L, 3);
        std::set<Cyclotomic> got, want{r1, r2};
        for (const auto& [root, mult] : fr.roots) {
            CHECK(mult == 1);
            got.insert(root);
        }
        CHECK(got == want);
    }
    // the same polynomial has no rational roots
    {
        poly::KPoly p = kp(1, {Rat(-1), Rat(1), Rat(1)});
        FieldRoots fr = roots_in_field(p);
        CHECK_FALSE(fr.split);
        CHECK(fr.roots.empty());
        CHECK(poly::degree(fr.leftover) == 2);
    }
    // rational roots with multiplicities: (x - 1/2)(x + 3)^2
    {
        const unsigned L = 1;
        poly::KPoly p = poly::mul(kp(L, {Rat(-1, 2), Rat(1)}),
                                  poly::mul(kp(L, {Rat(3), Rat(1)}), kp(L, {Rat(3), Rat(1)})));
        FieldRoots fr = roots_in_field(p);
        REQUIRE(fr.split);
        std::map<Rat, unsigned> got;
        for (const auto& [root, mult] : fr.roots) got[root.rational_value()] = mult;
        CHECK(got == std::map<Rat, unsigned>{{Rat(1, 2), 1}, {Rat(-3), 2}});
    }
    // x^2 + 1 over the fourth cyclotomic field
    {
        const unsigned L = 4;
        FieldRoots fr = roots_in_field(kp(L, {Rat(1), Rat(0), Rat(1)}));
        REQUIRE(fr.split);
        std::set<Cyclotomic> got;
        for (const auto& [root, mult] : fr.roots) got.insert(root);
        CHECK(got == std::set<Cyclotomic>{Cyclotomic::zeta(L, 1), -Cyclotomic::zeta(L, 1)});
    }
    // x^2 - zeta_3 splits inside the third cyclotomic field: (zeta_3^2)^2 = zeta_3
    {
        const unsigned L = 3;
        poly::KPoly p{-Cyclotomic::zeta(L, 1), Cyclotomic(L), Cyclotomic(L, Rat(1))};
        FieldRoots fr = roots_in_field(p);
        REQUIRE(fr.split);
        std::set<Cyclotomic> got;
        for (const auto& [root, mult] : fr.roots) got.insert(root);
        CHECK(got == std::set<Cyclotomic>{Cyclotomic::zeta(L, 2), -Cyclotomic::zeta(L, 2)});
    }
    // mixed multiplicities with cyclotomic and rational roots
    {
        const unsigned L = 4;
        Cyclotomic i = Cyclotomic::zeta(L, 1);
        poly::KPoly p{cyc(L, 1)};
        auto lin = [&](const Cyclotomic& r) { return poly::KPoly{-r, cyc(L, 1)}; };
        p = poly::mul(p, lin(i));
        p = poly::mul(p, lin(i));
        for (int rep = 0; rep < 3; ++rep) p = poly::mul(p, lin(cyc(L, 2)));
        p = poly::mul(p, lin(-i));
        FieldRoots fr = roots_in_field(p);
        REQUIRE(fr.split);
        std::map<Cyclotomic, unsigned> got(fr.roots.begin(), fr.roots.end());
        CHECK(got == std::map<Cyclotomic, unsigned>{{i, 2}, {cyc(L, 2), 3}, {-i, 1}});
    }
    // large rational roots force the wider reconstruction primes
    {
        const unsigned L = 1;
        Rat big(Int("1000000000000"), Int(7));
        poly::KPoly p = poly::mul(poly::KPoly{Cyclotomic(L, -big), cyc(L, 1)}, kp(L, {Rat(-3), Rat(1)}));
        FieldRoots fr = roots_in_field(p);
        REQUIRE(fr.split);
        std::set<Rat> got;
        for (const auto& [root, mult] : fr.roots) got.insert(root.rational_value());
        CHECK(got == std::set<Rat>{big, Rat(3)});
    }
    // non-monic input is handled
    {
        FieldRoots fr = roots_in_field(kp(1, {Rat(-2), Rat(0), Rat(2)}));
        REQUIRE(fr.split);
        std::set<Rat> got;
        for (const auto& [root, mult] : fr.roots) got.insert(root.rational_value());
        CHECK(got == std::set<Rat>{Rat(1), Rat(-1)});
    }
    // partial split: (x - 2)(x^2 - 2) over the rationals
    {
        poly::KPoly p = poly::mul(kp(1, {Rat(-2), Rat(1)}), kp(1, {Rat(-2), Rat(0), Rat(1)}));
        FieldRoots fr = roots_in_field(p);
        CHECK_FALSE(fr.split);
        REQUIRE(fr.roots.size() == 1);
        CHECK(fr.roots[0].first.rational_value() == Rat(2));
        CHECK(poly::degree(fr.leftover) == 2);
    }
}

TEST_CASE("eigenvalues of split and non-split operators") {
    // permutation 3-cycle over the third cyclotomic field
    {
        const unsigned L = 3;
        Matrix m(L, 3, 3);
        m.at(1, 0) = cyc(L, 1);
        m.at(2, 1) = cyc(L, 1);
        m.at(0, 2) = cyc(L, 1);
        auto eigs = eigenvalues_of(m, "cycle");
        std::set<Cyclotomic> got;
        for (const auto& [v, mult] : eigs) {
            CHECK(mult == 1);
            got.insert(v);
        }
        CHECK(got == std::set<Cyclotomic>{cyc(L, 1), Cyclotomic::zeta(L, 1), Cyclotomic::zeta(L, 2)});
    }
    // rotation matrix is non-split over the rationals
    {
        Matrix m(1, 2, 2);
        m.at(0, 1) = cyc(1, -1);
        m.at(1, 0) = cyc(1, 1);
        CHECK_THROWS_AS(eigenvalues_of(m, "rotation"), std::domain_error);
    }
}

TEST_CASE("simultaneous generalized eigenspaces refine commuting families") {
    const unsigned L = 3;
    Matrix a = diag(L, {cyc(L, 1), cyc(L, 1), Cyclotomic::zeta(L, 1)});
    Matrix b = diag(L, {cyc(L, 2), cyc(L, 3), cyc(L, 3)});
    auto comps = simultaneous_generalized_eigenspaces({a, b}, "diag pair");
    REQUIRE(comps.size() == 3);
    std::set<std::pair<Cyclotomic, Cyclotomic>> got;
    for (const auto& c : comps) {
        CHECK(c.space.dim() == 1);
        got.insert({c.value[0], c.value[1]});
    }
    std::set<std::pair<Cyclotomic, Cyclotomic>> want{
        {cyc(L, 1), cyc(L, 2)}, {cyc(L, 1), cyc(L, 3)}, {Cyclotomic::zeta(L, 1), cyc(L, 3)}};
    CHECK(got == want);

    // non-commuting pairs are rejected
    Matrix n1(L, 2, 2), n2(L, 2, 2);
    n1.at(0, 1) = cyc(L, 1);
    n2.at(0, 0) = cyc(L, 1);
    n2.at(1, 1) = cyc(L, 2);
    CHECK_THROWS_AS(simultaneous_generalized_eigenspaces({n1, n2}, "bad pair"), std::invalid_argument);

    // Jordan block: generalized flavor exhausts, true flavor does not
    Matrix j(1, 2, 2);
    j.at(0, 0) = cyc(1, 5);
    j.at(0, 1) = cyc(1, 1);
    j.at(1, 1) = cyc(1, 5);
    auto gen = simultaneous_decomposition({j}, true, "jordan");
    REQUIRE(gen.components.size() == 1);
    CHECK(gen.components[0].space.dim() == 2);
    CHECK(gen.complete);
    auto tru = simultaneous_decomposition({j}, false, "jordan");
    REQUIRE(tru.components.size() == 1);
    CHECK(tru.components[0].space.dim() == 1);
    CHECK_FALSE(tru.complete);
}

TEST_CASE("generalized eigenspaces of a block triangular operator") {
    // two Jordan blocks: eigenvalue 2 with index 2, eigenvalue 7 simple
    const unsigned L = 1;
    Matrix m(L, 3, 3);
    m.at(0, 0) = cyc(L, 2);
    m.at(0, 1) = cyc(L, 1);
    m.at(1, 1) = cyc(L, 2);
    m.at(2, 2) = cyc(L, 7);
    auto comps = simultaneous_generalized_eigenspaces({m}, "two blocks");
    REQUIRE(comps.size() == 2);
    std::map<Rat, unsigned> dims;
    for (const auto& c : comps) dims[c.value[0].rational_value()] = c.space.dim();
    CHECK(dims == std::map<Rat, unsigned>{{Rat(2), 2}, {Rat(7), 1}});
}
