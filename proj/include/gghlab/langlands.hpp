#pragma once

/*
 * Langlands classification layer: standard-form decomposition of weight
 * vectors, temperedness tests, and the quotient-of-induced construction
 * that matches an irreducible module with a parabolic datum.
 *
 * Weights live in a rank n type A coordinate frame.  The standard form
 * x = sum_{j not in F} c_j beta_j - sum_{i in F} d_i acheck_i is located
 * by brute force over all 2^(n-1) subsets F with one exact solve each;
 * exactly one subset may pass the sign constraints (c_j > 0 strictly,
 * d_i >= 0), anything else is a hard failure.  Both sign conventions for
 * d_i circulate; the solver enforces d_i >= 0, which is the one the
 * uniqueness argument needs, and sf_sign_note() records the choice for
 * report output.
 */

#include "gghlab/reps.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gghlab {

/* ------------------------------------------------------------------ */
/* coordinate frame                                                    */

/*
 * Simple coroots, their dual basis inside the root span, and the
 * fundamental coweights (orthogonal to the center line (1,...,1)).
 * In this frame roots and coroots coincide, so duals == coweights;
 * both fields are kept because callers use them in different roles.
 * flipped == false picks alpha_i = e_{i+1} - e_i.
 */
struct RootFrame {
    unsigned n = 0;
    bool flipped = false;
    std::vector<std::vector<Rat>> coroots;
    std::vector<std::vector<Rat>> duals;
    std::vector<std::vector<Rat>> coweights;
};

inline RootFrame root_frame(unsigned n, bool flipped = false) {
    if (n == 0) throw std::invalid_argument("root frame needs rank at least one");
    RootFrame f;
    f.n = n;
    f.flipped = flipped;
    const unsigned r = n - 1;
    for (unsigned i = 0; i < r; ++i) {
        std::vector<Rat> v(n, Rat(0));
        v[i] = flipped ? Rat(1) : Rat(-1);
        v[i + 1] = flipped ? Rat(-1) : Rat(1);
        f.coroots.push_back(std::move(v));
    }
    Matrix gram(1, r, r);
    for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j < r; ++j) {
            Rat dot(0);
            for (unsigned k = 0; k < n; ++k) dot += f.coroots[i][k] * f.coroots[j][k];
            gram.at(i, j) = Cyclotomic(1, dot);
        }
    for (unsigned j = 0; j < r; ++j) {
        std::vector<Cyclotomic> e(r, Cyclotomic(1));
        e[j] = Cyclotomic(1, Rat(1));
        auto coeff = solve(gram, e);
        if (!coeff) throw std::logic_error("coroot Gram matrix is singular");
        std::vector<Rat> beta(n, Rat(0));
        for (unsigned k = 0; k < r; ++k)
            for (unsigned t = 0; t < n; ++t) beta[t] += (*coeff)[k].rational_value() * f.coroots[k][t];
        f.duals.push_back(std::move(beta));
    }
    f.coweights = f.duals;
    return f;
}

inline bool in_root_span(const std::vector<Rat>& x) {
    Rat s(0);
    for (const Rat& v : x) s += v;
    return s == 0;
}

/* Kill the center-line component: subtract the coordinate mean. */
inline std::vector<Rat> root_span_projection(const std::vector<Rat>& x) {
    if (x.empty()) return x;
    Rat s(0);
    for (const Rat& v : x) s += v;
    const Rat mean = Rat(s / Rat(long(x.size())));
    std::vector<Rat> out;
    for (const Rat& v : x) out.push_back(Rat(v - mean));
    return out;
}

/*
 * Coordinates of x in the coroot basis.  With alpha_i = e_{i+1} - e_i
 * the k-th coordinate is minus the k-th partial sum of x; the flipped
 * convention negates them.  Defined only on the root span.
 */
inline std::vector<Rat> coroot_coordinates(const std::vector<Rat>& x, const RootFrame& f) {
    if (x.size() != f.n) throw std::invalid_argument("coroot coordinates: dimension mismatch");
    if (!in_root_span(x)) throw std::invalid_argument("coroot coordinates need a vector in the root span");
    std::vector<Rat> t;
    Rat partial(0);
    for (unsigned k = 0; k + 1 < f.n; ++k) {
        partial += x[k];
        t.push_back(f.flipped ? partial : Rat(-partial));
    }
    return t;
}

/* Sum of coroot coordinates; the height functional used to order weights. */
inline Rat rho_height(const std::vector<Rat>& x, const RootFrame& f) {
    Rat s(0);
    for (const Rat& t : coroot_coordinates(x, f)) s += t;
    return s;
}

inline Rat rho_height(const std::vector<Rat>& x) {
    return rho_height(x, root_frame(unsigned(x.size())));
}

/* ------------------------------------------------------------------ */
/* standard form                                                       */

struct SFDecomposition {
    std::vector<unsigned> F;   // 1-based simple indices, sorted
    std::map<unsigned, Rat> c; // j outside F: strictly positive coefficient on duals[j-1]
    std::map<unsigned, Rat> d; // i inside F: nonnegative coefficient on -coroots[i-1]
};

/* Report-facing note for the d_i sign choice. */
inline const char* sf_sign_note() {
    return "standard form solved with d_i >= 0 on the F side; "
           "the opposite sign breaks uniqueness and is treated as a typo";
}

inline SFDecomposition sf_decompose(const std::vector<Rat>& x, const RootFrame& f) {
    if (x.size() != f.n) throw std::invalid_argument("standard form: dimension mismatch");
    if (!in_root_span(x)) throw std::invalid_argument("standard form needs a vector in the root span");
    const unsigned r = f.n - 1;
    std::vector<Cyclotomic> b;
    for (const Rat& v : x) b.push_back(Cyclotomic(1, v));
    std::vector<SFDecomposition> found;
    for (unsigned long mask = 0; mask < (1ul << r); ++mask) {
        Matrix A(1, f.n, r);
        for (unsigned q = 0; q < r; ++q) {
            const bool in_f = (mask >> q) & 1ul;
            for (unsigned t = 0; t < f.n; ++t) {
                Rat val = f.duals[q][t];
                if (in_f) val = Rat(-f.coroots[q][t]);
                A.at(t, q) = Cyclotomic(1, val);
            }
        }
        auto sol = solve(A, b);
        if (!sol) continue;
        SFDecomposition cand;
        bool ok = true;
        for (unsigned q = 0; q < r && ok; ++q) {
            const Rat v = (*sol)[q].rational_value();
            if ((mask >> q) & 1ul) {
                if (v < 0) ok = false;
                else {
                    cand.F.push_back(q + 1);
                    cand.d[q + 1] = v;
                }
            } else {
                if (v <= 0) ok = false;
                else cand.c[q + 1] = v;
            }
        }
        if (ok) found.push_back(std::move(cand));
    }
    if (found.size() != 1)
        throw std::logic_error("standard form: expected exactly one admissible subset, found " +
                               std::to_string(found.size()));
    return found[0];
}

/* ------------------------------------------------------------------ */
/* temperedness                                                        */

enum class Temperedness { tempered, essentially_tempered, neither };

namespace detail {

/* Exact sign of Re<v, lambda> for a rational vector v. */
inline int real_pairing_sign(const std::vector<Rat>& v, const std::vector<Cyclotomic>& lambda,
                             unsigned L) {
    Cyclotomic w(L);
    for (unsigned k = 0; k < lambda.size(); ++k) w = w + Cyclotomic(L, v[k]) * lambda[k];
    Cyclotomic re2 = w + w.conj();
    return re2.real_sign();
}

/* Internal fundamental coweights of each run-block of pi, embedded in Q^n. */
inline std::vector<std::vector<Rat>> block_coweights(unsigned n, const std::vector<unsigned>& pi,
                                                     bool flipped) {
    std::vector<std::vector<Rat>> out;
    for (const auto& blk : composition_blocks(runs_composition(n, pi))) {
        const unsigned b = blk.second - blk.first;
        if (b < 2) continue;
        RootFrame sub = root_frame(b, flipped);
        for (const auto& xw : sub.coweights) {
            std::vector<Rat> v(n, Rat(0));
            for (unsigned t = 0; t < b; ++t) v[blk.first + t] = xw[t];
            out.push_back(std::move(v));
        }
    }
    return out;
}

} // namespace detail

/*
 * Three-state temperedness for a module over the full algebra: every
 * generalized weight must pair nonpositively (real part) with every
 * fundamental coweight; tempered additionally needs the real part to
 * vanish on the center line.  All sign decisions are exact.
 */
inline Temperedness is_tempered(const HModule& X, const RootFrame& frame) {
    if (!X.is_full())
        throw std::invalid_argument("temperedness is defined for modules over the full algebra");
    if (X.n == 0) return Temperedness::tempered;
    if (frame.n != X.n) throw std::invalid_argument("temperedness: frame rank mismatch");
    bool central_real_zero = true;
    const std::vector<Rat> ones(X.n, Rat(1));
    for (const auto& w : generalized_weights(X)) {
        for (const auto& xw : frame.coweights)
            if (detail::real_pairing_sign(xw, w.zvals, X.L) > 0) return Temperedness::neither;
        if (detail::real_pairing_sign(ones, w.zvals, X.L) != 0) central_real_zero = false;
    }
    return central_real_zero ? Temperedness::tempered : Temperedness::essentially_tempered;
}

inline Temperedness is_tempered(const HModule& X) {
    return is_tempered(X, root_frame(X.n == 0 ? 1 : X.n));
}

/* ------------------------------------------------------------------ */
/* parabolic data and the quotient construction                        */

struct LanglandsDatum {
    std::vector<unsigned> P;  // 1-based simple indices of the parabolic
    std::vector<Rat> nu;      // one real central value per block, in block order
    HModule tempered_factor;  // parabolic module with block-centered z spectrum
    bool verified_unique = false;
};

/*
 * Shift each z_i by nu[block(i)].  The defining relations only ever see
 * in-block differences of the z, so the twist stays a module.
 */
inline HModule twist_by_center(const HModule& U, const std::vector<Rat>& nu) {
    const auto blocks = composition_blocks(runs_composition(U.n, U.pi));
    if (nu.size() != blocks.size())
        throw std::invalid_argument("central twist: one value per block expected");
    HModule out = U;
    for (unsigned bi = 0; bi < blocks.size(); ++bi) {
        const Matrix shift = Cyclotomic(U.L, nu[bi]) * Matrix::identity(U.L, U.dim);
        for (unsigned i = blocks[bi].first; i < blocks[bi].second; ++i)
            out.z[i] = out.z[i] + shift;
    }
    return out;
}

namespace detail {

inline std::vector<Rat> rational_real_part(const std::vector<Cyclotomic>& zvals) {
    std::vector<Rat> out;
    for (const auto& v : zvals) {
        Cyclotomic re2 = v + v.conj();
        if (!re2.is_rational()) throw std::domain_error("weight real part is not rational");
        out.push_back(Rat(re2.rational_value() / 2));
    }
    return out;
}

/* Height of the root-span projection of the real part of a weight. */
inline Rat weight_height(const ModuleWeight& w, const RootFrame& frame) {
    return rho_height(root_span_projection(rational_real_part(w.zvals)), frame);
}

/*
 * Index of the height-maximal weight.  generalized_weights sorts its
 * output, so taking the first maximizer picks the lexicographically
 * least one among ties.
 */
inline unsigned pick_max_weight(const std::vector<ModuleWeight>& ws, const RootFrame& frame) {
    if (ws.empty()) throw std::invalid_argument("weight selection on an empty module");
    unsigned best = 0;
    Rat best_height = weight_height(ws[0], frame);
    for (unsigned i = 1; i < ws.size(); ++i) {
        Rat h = weight_height(ws[i], frame);
        if (h > best_height) {
            best = i;
            best_height = h;
        }
    }
    return best;
}

} // namespace detail

/*
 * Quotient of the induced module attached to a parabolic datum.  The
 * input carries the central twist inside its z action; its block parts
 * must be tempered and the block centers strictly dominant.  Induce,
 * pick the height-maximal weight, remove the largest submodule living
 * inside the other generalized weight components, and certify that the
 * quotient is irreducible and still contains the chosen weight.
 */
inline HModule langlands_quotient(const HModule& U, const RootFrame& frame) {
    if (U.n == 0 || U.dim == 0) throw std::invalid_argument("langlands quotient: empty input");
    if (frame.n != U.n) throw std::invalid_argument("langlands quotient: frame rank mismatch");
    {
        CheckReport rep = validate_module(U);
        if (!rep.all_pass()) {
            for (const auto& item : rep.items)
                if (!item.pass)
                    throw std::invalid_argument("langlands quotient: input fails relation: " + item.name);
        }
    }
    const auto uw = generalized_weights(U);
    const auto blocks = composition_blocks(runs_composition(U.n, U.pi));
    const auto bw = detail::block_coweights(U.n, U.pi, frame.flipped);
    std::vector<Rat> nu(blocks.size(), Rat(0));
    for (unsigned wi = 0; wi < uw.size(); ++wi) {
        const auto re = detail::rational_real_part(uw[wi].zvals);
        for (unsigned bi = 0; bi < blocks.size(); ++bi) {
            Rat s(0);
            for (unsigned t = blocks[bi].first; t < blocks[bi].second; ++t) s += re[t];
            const Rat avg = Rat(s / Rat(long(blocks[bi].second - blocks[bi].first)));
            if (wi == 0) nu[bi] = avg;
            else if (nu[bi] != avg)
                throw std::invalid_argument("langlands quotient: weights disagree on the block centers");
        }
        for (const auto& v : bw)
            if (detail::real_pairing_sign(v, uw[wi].zvals, U.L) > 0)
                throw std::invalid_argument("langlands quotient: the parabolic factor is not tempered");
    }
    for (unsigned bi = 0; bi + 1 < blocks.size(); ++bi) {
        const Rat gap = frame.flipped ? Rat(nu[bi] - nu[bi + 1]) : Rat(nu[bi + 1] - nu[bi]);
        if (!(gap > 0))
            throw std::invalid_argument("langlands quotient: the central character is not strictly dominant");
    }
    const unsigned chosen = detail::pick_max_weight(uw, frame);
    HModule X = parabolic_induce(U);
    Subspace others(X.L, X.dim);
    bool seen_chosen = false;
    for (const auto& w : generalized_weights(X)) {
        if (w.torus == uw[chosen].torus && w.zvals == uw[chosen].zvals) {
            seen_chosen = true;
            continue;
        }
        others = sum_spaces(others, w.space);
    }
    if (!seen_chosen)
        throw std::logic_error("langlands quotient: chosen weight missing from the induced module");
    Subspace imax = largest_invariant_subspace(module_operators(X), others);
    HModule J = quotient_module(X, imax);
    if (!detail::analyze_simplicity(J).simple)
        throw std::logic_error("langlands quotient: quotient is not irreducible");
    bool kept = false;
    for (const auto& w : generalized_weights(J))
        if (w.torus == uw[chosen].torus && w.zvals == uw[chosen].zvals) kept = true;
    if (!kept) throw std::logic_error("langlands quotient: quotient lost the chosen weight");
    return J;
}

inline HModule langlands_quotient(const HModule& U) {
    return langlands_quotient(U, root_frame(U.n == 0 ? 1 : U.n));
}

inline HModule langlands_quotient(const LanglandsDatum& datum, const RootFrame& frame) {
    return langlands_quotient(twist_by_center(datum.tempered_factor, datum.nu), frame);
}

inline HModule langlands_quotient(const LanglandsDatum& datum) {
    unsigned n = datum.tempered_factor.n;
    return langlands_quotient(datum, root_frame(n == 0 ? 1 : n));
}

/*
 * Classification data of an irreducible module over the full algebra:
 * locate the height-maximal weight, read the parabolic off the standard
 * form of its real part, close its generalized weight space under the
 * parabolic operators to get the standard-module input, split off the
 * block-central values, and verify the match by rebuilding the quotient
 * and testing for an isomorphism.
 */
inline LanglandsDatum langlands_data(const HModule& X, const RootFrame& frame) {
    if (!X.is_full())
        throw std::invalid_argument("classification expects a module over the full algebra");
    if (X.n == 0 || X.dim == 0) throw std::invalid_argument("classification: empty input");
    if (frame.n != X.n) throw std::invalid_argument("classification: frame rank mismatch");
    if (!detail::analyze_simplicity(X).simple)
        throw std::invalid_argument("classification expects an irreducible module");
    const auto xw = generalized_weights(X);
    const unsigned chosen = detail::pick_max_weight(xw, frame);
    const auto re = detail::rational_real_part(xw[chosen].zvals);
    const SFDecomposition sf = sf_decompose(root_span_projection(re), frame);

    LanglandsDatum out;
    out.P = sf.F;

    std::vector<Matrix> pops;
    for (unsigned j : out.P) pops.push_back(X.s.at(j));
    for (const auto& gm : X.g) pops.push_back(gm);
    for (const auto& zm : X.z) pops.push_back(zm);
    Subspace span = xw[chosen].space;
    std::vector<std::vector<Cyclotomic>> frontier;
    for (unsigned i = 0; i < span.dim(); ++i) frontier.push_back(span.basis().row(i));
    while (!frontier.empty()) {
        std::vector<std::vector<Cyclotomic>> next;
        for (const Matrix& op : pops)
            for (const auto& v : frontier) {
                auto u = op.apply(v);
                if (!span.contains(u)) {
                    span = sum_spaces(span, detail::span_of_vector(X.L, u));
                    next.push_back(std::move(u));
                }
            }
        frontier = std::move(next);
    }
    HModule U = module_shell(X.m, X.n, X.L, X.kappa, span.dim());
    U.pi = out.P;
    for (unsigned j : out.P) U.s[j] = restrict_to(X.s.at(j), span);
    for (unsigned i = 0; i < X.n; ++i) U.g[i] = restrict_to(X.g[i], span);
    for (unsigned i = 0; i < X.n; ++i) U.z[i] = restrict_to(X.z[i], span);

    for (const auto& blk : composition_blocks(runs_composition(X.n, out.P))) {
        Rat s(0);
        for (unsigned t = blk.first; t < blk.second; ++t) s += re[t];
        out.nu.push_back(Rat(s / Rat(long(blk.second - blk.first))));
    }
    std::vector<Rat> minus;
    for (const Rat& v : out.nu) minus.push_back(Rat(-v));
    out.tempered_factor = twist_by_center(U, minus);

    HModule J = langlands_quotient(U, frame);
    out.verified_unique = (J.dim == X.dim) && iso_between(X, J).has_value();
    return out;
}

inline LanglandsDatum langlands_data(const HModule& X) {
    return langlands_data(X, root_frame(X.n == 0 ? 1 : X.n));
}

} // namespace gghlab
