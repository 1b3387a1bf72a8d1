/*
 * dirac_cohomology.hpp
 *
 * The Dirac operator on a concrete module: the matrix of any element
 * of H (x) C(V) acting on X (x) C(V), kernels, images, cohomology
 * with its torus character multiset, the blockwise comparison of a
 * parabolically induced module against its type A tensor factors, and
 * the exact identification of the weight space restriction of the
 * Dirac operator with the block Dirac operator of the stabiliser
 * parabolic.
 */

#pragma once

#include "gghlab/dirac.hpp"
#include "gghlab/reps.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace gghlab {

/* ------------------------------------------------------------------ */
/* matrices on X (x) C(V)                                             */
/* ------------------------------------------------------------------ */

/*
 * Basis of X (x) C(V): index = x_index * 2^n + clifford mask.  The
 * deformation parameter is specialized to the module's kappa.
 */
inline Matrix hc_matrix(const HCElement& x, const HModule& X) {
    const GGHDescriptor& d = x.descriptor();
    if (d.m != X.m || d.n != X.n || d.L != X.L)
        throw std::invalid_argument("hc_matrix: element and module live over different algebras");
    if (!X.is_full())
        throw std::invalid_argument("hc_matrix: module must live over the full algebra");
    const unsigned cdim = 1u << X.n;
    Matrix out(X.L, X.dim * cdim, X.dim * cdim);
    for (const auto& [k, c] : x.terms()) {
        Matrix A = detail::parabolic_action(X, k.g) * detail::z_monomial_action(X, k.zdeg);
        const Cyclotomic gamma = c.eval(X.kappa);
        for (std::uint32_t t = 0; t < cdim; ++t) {
            const std::uint32_t target = k.cl ^ t;
            Cyclotomic v = gamma;
            if (clifford_sign(k.cl, t) < 0) v = -v;
            for (unsigned r = 0; r < X.dim; ++r)
                for (unsigned cc = 0; cc < X.dim; ++cc)
                    if (!A.at(r, cc).is_zero())
                        out.at(r * cdim + target, cc * cdim + t) += v * A.at(r, cc);
        }
    }
    return out;
}

inline Matrix dirac_matrix(const HModule& X) {
    if (X.n == 0) return Matrix(X.L, X.dim, X.dim);
    GGHDescriptor d = dunkl_opdam_descriptor(X.m, X.n, X.L);
    return hc_matrix(dirac_element(d), X);
}

/* ------------------------------------------------------------------ */
/* cohomology                                                          */
/* ------------------------------------------------------------------ */

namespace detail {

/*
 * Character multiset of commuting order-m matrices: one exponent
 * vector per dimension, sorted.  Throws if the joint action is not
 * diagonalisable with eigenvalues among the m-th roots of unity.
 */
inline std::vector<std::vector<unsigned>> torus_character_multiset(const std::vector<Matrix>& gs,
                                                                   unsigned m, unsigned L,
                                                                   unsigned dim) {
    std::vector<std::pair<std::vector<unsigned>, Subspace>> spaces;
    spaces.push_back({{}, Subspace::full(L, dim)});
    for (const Matrix& G : gs) {
        std::vector<std::pair<std::vector<unsigned>, Subspace>> next;
        unsigned covered = 0;
        for (const auto& [chars, S] : spaces) {
            for (unsigned k = 0; k < m; ++k) {
                Matrix shift = G - Matrix::scalar(L, dim, Cyclotomic::zeta(L, long((L / m) * k)));
                Subspace E = intersect(S, kernel(shift));
                if (E.dim() == 0) continue;
                auto c = chars;
                c.push_back(k);
                covered += E.dim();
                next.push_back({std::move(c), std::move(E)});
            }
        }
        if (covered != dim)
            throw std::domain_error("torus_character_multiset: action is not semisimple of order m");
        spaces = std::move(next);
    }
    std::vector<std::vector<unsigned>> out;
    for (const auto& [chars, S] : spaces)
        for (unsigned i = 0; i < S.dim(); ++i) out.push_back(chars);
    std::sort(out.begin(), out.end());
    return out;
}

/* The operator induced on ambient/S, in the pivot complement basis. */
inline Matrix quotient_operator(const Matrix& op, const Subspace& S) {
    std::vector<unsigned> rest;
    for (unsigned j = 0; j < op.cols(); ++j)
        if (std::find(S.pivots().begin(), S.pivots().end(), j) == S.pivots().end())
            rest.push_back(j);
    Matrix Q(op.order(), unsigned(rest.size()), unsigned(rest.size()));
    for (unsigned cj = 0; cj < rest.size(); ++cj) {
        auto col = reduce_mod(S, matrix_column(op, rest[cj]));
        for (unsigned ri = 0; ri < rest.size(); ++ri) Q.at(ri, cj) = col[rest[ri]];
    }
    return Q;
}

} // namespace detail

struct DiracCohomology {
    unsigned dim = 0;
    Subspace kernel_space;                              // Ker D inside X (x) C(V)
    Subspace boundary_space;                            // Im D intersected with Ker D
    std::vector<std::vector<unsigned>> torus_characters; // one exponent vector per dimension
};

inline DiracCohomology dirac_cohomology(const HModule& X) {
    DiracCohomology out;
    const unsigned cdim = X.n == 0 ? 1u : (1u << X.n);
    Matrix D = dirac_matrix(X);
    out.kernel_space = kernel(D);
    out.boundary_space = intersect(out.kernel_space, column_space(D));
    out.dim = out.kernel_space.dim() - out.boundary_space.dim();

    /* torus action g_j (x) 1 descends to the cohomology */
    if (out.dim > 0) {
        std::vector<Matrix> gs;
        for (unsigned i = 0; i < X.n; ++i) {
            Matrix T = kron(X.g[i], Matrix::identity(X.L, cdim));
            Matrix onK = restrict_to(T, out.kernel_space);
            if (out.boundary_space.dim() == 0) {
                gs.push_back(std::move(onK));
                continue;
            }
            /* express the boundary space in kernel coordinates */
            Matrix bc(X.L, out.boundary_space.dim(), out.kernel_space.dim());
            for (unsigned r = 0; r < out.boundary_space.dim(); ++r) {
                auto coords = out.kernel_space.coordinates(out.boundary_space.basis().row(r));
                if (!coords)
                    throw std::logic_error("dirac_cohomology: boundary escapes the kernel");
                bc.set_row(r, *coords);
            }
            Subspace Bk = Subspace::from_span(std::move(bc));
            gs.push_back(detail::quotient_operator(onK, Bk));
        }
        out.torus_characters = detail::torus_character_multiset(gs, X.m, X.L, out.dim);
    }
    return out;
}

/* ------------------------------------------------------------------ */
/* blockwise comparison against the type A tensor factors              */
/* ------------------------------------------------------------------ */

struct BlockCohomologyComparison {
    std::vector<unsigned> block;
    unsigned lhs_dim = 0, rhs_dim = 0;
    std::vector<std::vector<unsigned>> lhs_characters, rhs_characters;
    bool pass() const { return lhs_dim == rhs_dim && lhs_characters == rhs_characters; }
};

/*
 * LHS: Dirac cohomology of the module induced from the tensor factor
 * pullback.  RHS: one copy of the product of the factors' type A
 * Dirac cohomologies per coset, carrying the coset-translated
 * staircase character.
 */
inline BlockCohomologyComparison compare_block_cohomology(const std::vector<HModule>& factors,
                                                          const std::vector<unsigned>& a,
                                                          const Rat& kappa, unsigned L) {
    BlockCohomologyComparison out;
    out.block = a;
    HModule W = pullback_from_typeA(factors, a, kappa, L);
    HModule X = parabolic_induce(W);
    DiracCohomology lhs = dirac_cohomology(X);
    out.lhs_dim = lhs.dim;
    out.lhs_characters = lhs.torus_characters;

    unsigned prod = 1;
    for (const HModule& F : factors) prod *= dirac_cohomology(F).dim;
    BlockCharacter bc = mu_character(a, unsigned(a.size()), X.n);
    const auto reps = min_coset_reps(X.n, a);
    out.rhs_dim = unsigned(reps.size()) * prod;
    for (const auto& perm : reps) {
        std::vector<unsigned> inv(perm.size());
        for (unsigned i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
        std::vector<unsigned> chars(X.n);
        for (unsigned j = 0; j < X.n; ++j) chars[j] = bc.exponent[inv[j]];
        for (unsigned t = 0; t < prod; ++t) out.rhs_characters.push_back(chars);
    }
    std::sort(out.rhs_characters.begin(), out.rhs_characters.end());
    return out;
}

/* ------------------------------------------------------------------ */
/* the weight space restriction is the block Dirac operator            */
/* ------------------------------------------------------------------ */

/*
 * On the staircase weight space the cross block parts of the dressed
 * sums act by zero and the in block parts collapse to m times a plain
 * transposition, so the restriction of the Dirac operator must equal
 * the block Dirac operator of the stabiliser parabolic at parameter
 * m * kappa, assembled independently from the restricted module.
 */
inline CheckReport weight_space_dirac_report(const HModule& X, const std::vector<unsigned>& a) {
    CheckReport rep;
    BlockCharacter bc = mu_character(a, X.m, X.n);
    std::optional<Subspace> weight;
    for (auto& [chars, S] : weight_decomposition(X))
        if (chars == bc.exponent) weight = S;
    if (!weight) throw std::domain_error("weight_space_dirac_report: staircase weight absent");
    const unsigned cdim = 1u << X.n;
    const unsigned wdim = weight->dim();

    /* product basis rows v_r (x) e_t, already reduced row echelon */
    Matrix stack(X.L, wdim * cdim, X.dim * cdim);
    for (unsigned r = 0; r < wdim; ++r)
        for (std::uint32_t t = 0; t < cdim; ++t)
            for (unsigned x = 0; x < X.dim; ++x)
                stack.at(r * cdim + t, x * cdim + t) = weight->basis().at(r, x);
    Subspace Sprod = Subspace::from_span(std::move(stack));

    Matrix D = dirac_matrix(X);
    Matrix lhs(X.L, 0, 0);
    try {
        lhs = restrict_to(D, Sprod);
        rep.add("Dirac operator preserves the staircase weight space", true);
    } catch (const std::domain_error&) {
        rep.add("Dirac operator preserves the staircase weight space", false,
                "image leaves the weight space");
        return rep;
    }

    HModule U = restrict_to_weight(X, a);
    ParabolicDatum datum = stab_subalgebra(a);
    const Rat coef = Rat(long(X.m), 2) * X.kappa;
    Matrix rhs(X.L, wdim * cdim, wdim * cdim);
    for (unsigned i = 0; i < X.n; ++i) {
        unsigned blk = 0;
        while (!(datum.blocks[blk].first <= i && i < datum.blocks[blk].second)) ++blk;
        auto [lo, hi] = datum.blocks[blk];
        Matrix zt = U.z[i];
        for (unsigned k = i + 1; k < hi; ++k) {
            Matrix T = detail::parabolic_action(U, g_transposition(X.m, X.n, i, k));
            zt = zt + Cyclotomic(X.L, coef) * T;
        }
        for (unsigned k = lo; k < i; ++k) {
            Matrix T = detail::parabolic_action(U, g_transposition(X.m, X.n, k, i));
            zt = zt - Cyclotomic(X.L, coef) * T;
        }
        Matrix CL = clifford_left_matrix(CliffordElement::generator(X.n, X.L, i + 1), X.kappa);
        rhs = rhs + kron(zt, CL);
    }
    rep.add("weight space restriction equals the block Dirac operator", lhs == rhs,
            detail::entry_witness(lhs - rhs));
    return rep;
}

} // namespace gghlab
