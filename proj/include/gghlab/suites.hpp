/*
 * suites.hpp
 *
 * Named verification suites behind the command line front end.  Each
 * suite packs exact identity checks into a CheckReport; run_suite
 * dispatches on the suite name.  The negative-control runner re-runs
 * selected suites on a deliberately corrupted descriptor (cross sum
 * starting at l = 1 instead of l = 0) and passes only when the
 * corrupted run actually fails, so a report full of green cannot be
 * mistaken for a vacuous one.
 */

#pragma once

#include "gghlab/check.hpp"
#include "gghlab/dirac.hpp"
#include "gghlab/ggh.hpp"
#include "gghlab/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gghlab {

inline const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> names = {
        "group", "jm", "phi", "presentations", "drinfeld", "jacobi", "dirac"};
    return names;
}

namespace detail {

inline GmnElement random_group_element(unsigned m, unsigned n, std::mt19937& rng) {
    GmnElement g = g_identity(m, n);
    std::shuffle(g.perm.begin(), g.perm.end(), rng);
    if (m > 1) {
        std::uniform_int_distribution<unsigned> tor(0, m - 1);
        for (unsigned i = 0; i < n; ++i) g.torus[i] = tor(rng);
    }
    return g;
}

/* All compositions of n into positive parts (2^(n-1) of them). */
inline std::vector<std::vector<unsigned>> positive_compositions(unsigned n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned)> rec = [&](unsigned left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (unsigned first = 1; first <= left; ++first) {
            cur.push_back(first);
            rec(left - first);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

inline unsigned long long factorial_ull(unsigned n) {
    unsigned long long f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace detail

/*
 * Group layer: order count, axioms, reduced words, and minimal coset
 * representatives with their unique factorization.
 */
inline CheckReport suite_group(unsigned m, unsigned n, unsigned seed) {
    CheckReport rep;

    {
        unsigned long long expect = detail::factorial_ull(n);
        for (unsigned i = 0; i < n; ++i) expect *= m;
        const bool ok = all_elements(m, n).size() == expect;
        rep.add("full enumeration matches the wreath product order", ok,
                "expected " + std::to_string(expect));
    }

    {
        std::mt19937 rng(seed);
        bool ok = true;
        std::string wit;
        const GmnElement e = g_identity(m, n);
        for (unsigned t = 0; t < 200 && ok; ++t) {
            const GmnElement a = detail::random_group_element(m, n, rng);
            const GmnElement b = detail::random_group_element(m, n, rng);
            const GmnElement c = detail::random_group_element(m, n, rng);
            if (g_mul(g_mul(a, b), c) != g_mul(a, g_mul(b, c))) {
                ok = false;
                wit = "associativity, triple #" + std::to_string(t);
            } else if (g_mul(a, e) != a || g_mul(e, a) != a) {
                ok = false;
                wit = "identity laws at " + g_to_string(a);
            } else if (g_mul(a, g_inverse(a)) != e || g_mul(g_inverse(a), a) != e) {
                ok = false;
                wit = "inverse laws at " + g_to_string(a);
            }
        }
        rep.add("group axioms on 200 seeded triples", ok, wit);
    }

    {
        std::mt19937 rng(seed + 1);
        bool ok = true;
        std::string wit;
        for (unsigned t = 0; t < 100 && ok; ++t) {
            const GmnElement a = detail::random_group_element(m, n, rng);
            if (g_parse(m, g_to_string(a)) != a) {
                ok = false;
                wit = "round trip failed at " + g_to_string(a);
            }
        }
        rep.add("canonical text form round trips", ok, wit);
    }

    {
        bool ok = true;
        std::string wit;
        std::vector<unsigned> perm(n);
        std::iota(perm.begin(), perm.end(), 0u);
        do {
            const std::vector<unsigned> word = reduced_word(perm);
            GmnElement prod = g_identity(m, n);
            for (unsigned k : word) prod = g_mul(prod, g_simple(m, n, k));
            if (prod.perm != perm || word.size() != coxeter_length(perm)) {
                ok = false;
                GmnElement w = g_identity(m, n);
                w.perm = perm;
                wit = "permutation " + g_to_string(w);
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        rep.add("reduced words rebuild every permutation at inversion length", ok, wit);
    }

    {
        bool ok = true;
        std::string wit;
        std::vector<std::vector<unsigned>> comps = detail::positive_compositions(n);
        if (m > 1) {
            /* block labels with zero parts exercise empty blocks */
            std::vector<unsigned> label(m, 0);
            label[0] = n;
            comps.push_back(label);
        }
        for (const auto& comp : comps) {
            unsigned long long expect = detail::factorial_ull(n);
            for (unsigned a : comp) expect /= detail::factorial_ull(a);
            const auto reps = min_coset_reps(n, comp);
            if (reps.size() != expect) {
                ok = false;
                wit = "representative count, expected " + std::to_string(expect) + ", got " +
                      std::to_string(reps.size());
                break;
            }
            const auto blocks = composition_blocks(comp);
            for (const auto& r : reps) {
                for (auto [lo, hi] : blocks)
                    for (unsigned i = lo; ok && i + 1 < hi; ++i)
                        if (r[i] > r[i + 1]) ok = false;
                if (!ok) {
                    wit = "a representative inverts a parabolic positive root";
                    break;
                }
            }
            if (!ok) break;

            std::vector<unsigned> perm(n);
            std::iota(perm.begin(), perm.end(), 0u);
            do {
                const auto [c, p] = coset_factorize(perm, comp);
                std::vector<unsigned> prod(n);
                for (unsigned i = 0; i < n; ++i) prod[i] = c[p[i]];
                if (prod != perm || !preserves_blocks(p, comp) ||
                    std::find(reps.begin(), reps.end(), c) == reps.end() ||
                    coxeter_length(perm) != coxeter_length(c) + coxeter_length(p)) {
                    ok = false;
                    GmnElement w = g_identity(m, n);
                    w.perm = perm;
                    wit = "factorization at " + g_to_string(w);
                    break;
                }
            } while (ok && std::next_permutation(perm.begin(), perm.end()));
            if (!ok) break;
        }
        rep.add("minimal coset representatives factor the group with additive length", ok, wit);
    }

    return rep;
}

/*
 * The two commuting families of torus-dressed transposition sums and
 * their recursion across a simple reflection.
 */
inline CheckReport suite_jm(unsigned m, unsigned n, unsigned L) {
    CheckReport rep;

    {
        bool ok = jm_element(m, n, L, 1).is_zero() && jm_bar_element(m, n, L, n).is_zero();
        std::string wit = ok ? "" : "boundary sums are not empty";
        for (unsigned i = 1; i <= n && ok; ++i) {
            const GroupAlgebraElement M = jm_element(m, n, L, i);
            const GroupAlgebraElement Mb = jm_bar_element(m, n, L, i);
            if (M.support_size() != std::size_t(i - 1) * m ||
                Mb.support_size() != std::size_t(n - i) * m) {
                ok = false;
                wit = "term count at index " + std::to_string(i);
                break;
            }
            for (const auto& [g, c] : M.terms())
                if (!(c == Scalar::one(L))) {
                    ok = false;
                    wit = "coefficient at " + g_to_string(g);
                    break;
                }
        }
        rep.add("boundary sums vanish and term counts match", ok, wit);
    }

    {
        bool ok = true;
        std::string wit;
        for (unsigned i = 1; i <= n && ok; ++i)
            for (unsigned j = i + 1; j <= n && ok; ++j) {
                const GroupAlgebraElement Mi = jm_element(m, n, L, i);
                const GroupAlgebraElement Mj = jm_element(m, n, L, j);
                const GroupAlgebraElement Bi = jm_bar_element(m, n, L, i);
                const GroupAlgebraElement Bj = jm_bar_element(m, n, L, j);
                if (!(Mi * Mj - Mj * Mi).is_zero() || !(Bi * Bj - Bj * Bi).is_zero()) {
                    ok = false;
                    wit = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
        rep.add("each family commutes internally", ok, wit);
    }

    {
        bool ok = true;
        std::string wit;
        for (unsigned i = 1; i < n && ok; ++i) {
            const GroupAlgebraElement si = GroupAlgebraElement::of(g_simple(m, n, i - 1), L);
            const GroupAlgebraElement eps = eps_element(m, n, L, i, i + 1);
            const GroupAlgebraElement lhs =
                si * jm_element(m, n, L, i) - jm_element(m, n, L, i + 1) * si;
            const GroupAlgebraElement lhs_bar =
                si * jm_bar_element(m, n, L, i) - jm_bar_element(m, n, L, i + 1) * si;
            if (lhs != -eps || lhs_bar != eps) {
                ok = false;
                wit = "simple index " + std::to_string(i);
            }
        }
        rep.add("simple reflections shift the sums by the torus cross term", ok, wit);
    }

    return rep;
}

/*
 * The order-two automorphism that mirrors indices: generator images,
 * involutivity, multiplicativity, and the swap of the two families.
 */
inline CheckReport suite_phi(const GGHDescriptor& d, unsigned seed) {
    if (d.mode != GGHMode::dunkl_opdam)
        throw std::invalid_argument("suite_phi: the flip involution lives on the wreath algebra");
    CheckReport rep;
    const unsigned n = d.n;

    {
        bool ok = true;
        std::string wit;
        for (unsigned i = 1; i <= n && ok; ++i) {
            if (flip_involution(DOElement::z_generator(d, i)) !=
                -DOElement::z_generator(d, n + 1 - i)) {
                ok = false;
                wit = "degree one generator " + std::to_string(i);
                break;
            }
            if (d.m > 1) {
                const DOElement gi = DOElement::of_group(d, g_torus(d.m, n, i - 1, 1));
                const DOElement gm = DOElement::of_group(d, g_torus(d.m, n, n - i, 1));
                if (flip_involution(gi) != gm) {
                    ok = false;
                    wit = "torus generator " + std::to_string(i);
                    break;
                }
            }
        }
        for (unsigned k = 1; k < n && ok; ++k) {
            const DOElement sk = DOElement::of_group(d, g_simple(d.m, n, k - 1));
            const DOElement sm = DOElement::of_group(d, g_simple(d.m, n, n - k - 1));
            if (flip_involution(sk) != sm) {
                ok = false;
                wit = "simple reflection " + std::to_string(k);
            }
        }
        rep.add("each generator maps to its mirror", ok, wit);
    }

    {
        std::mt19937 rng(seed);
        bool ok = true;
        std::string wit;
        for (unsigned t = 0; t < 20 && ok; ++t) {
            const DOElement a = random_element(d, rng);
            if (flip_involution(flip_involution(a)) != a) {
                ok = false;
                wit = "seeded element #" + std::to_string(t);
            }
        }
        rep.add("squares to the identity on 20 seeded elements", ok, wit);
    }

    {
        std::mt19937 rng(seed + 1);
        bool ok = true;
        std::string wit;
        for (unsigned t = 0; t < 20 && ok; ++t) {
            const DOElement a = random_element(d, rng);
            const DOElement b = random_element(d, rng);
            if (flip_involution(nf_mul(a, b)) !=
                nf_mul(flip_involution(a), flip_involution(b))) {
                ok = false;
                wit = "seeded pair #" + std::to_string(t);
            }
        }
        rep.add("respects products on 20 seeded pairs", ok, wit);
    }

    {
        bool ok = true;
        std::string wit;
        for (unsigned i = 1; i <= n && ok; ++i) {
            const DOElement lhs = flip_involution(
                DOElement::of_group_algebra(d, jm_element(d.m, n, d.L, i)));
            const DOElement rhs =
                DOElement::of_group_algebra(d, jm_bar_element(d.m, n, d.L, n + 1 - i));
            if (lhs != rhs) {
                ok = false;
                wit = "index " + std::to_string(i);
            }
        }
        rep.add("swaps the increasing and decreasing transposition sums", ok, wit);
    }

    return rep;
}

/*
 * Both closed forms of the squared Dirac element, reported item by
 * item, plus invariance under the diagonal group action.
 */
inline CheckReport suite_dirac(const GGHDescriptor& d) {
    CheckReport rep;
    const DiracReport dr = dirac_square_check(d);
    rep.add("dirac square: residual 1 against the two-form expansion is exactly zero",
            dr.lemma_residual.is_zero(), clip_witness(dr.lemma_residual.to_string()));
    if (dr.casimir_applicable) {
        rep.add("dirac square: residual 2 against the casimir cover is exactly zero",
                dr.casimir_residual.is_zero(), clip_witness(dr.casimir_residual.to_string()));
    } else {
        rep.add("dirac square: casimir cover inapplicable, " +
                    std::to_string(dr.skipped.size()) + " support elements lack cover pairs",
                true);
    }
    rep.merge(dirac_invariance(d));
    return rep;
}

/* Dispatch by suite name.  Unknown names throw. */
inline CheckReport run_suite(const std::string& name, const GGHDescriptor& d, unsigned seed) {
    if (name == "group") return suite_group(d.m, d.n, seed);
    if (name == "jm") return suite_jm(d.m, d.n, d.L);
    if (name == "phi") return suite_phi(d, seed);
    if (name == "presentations") return verify_presentations(d);
    if (name == "drinfeld") return drinfeld_conditions(d, extract_bforms(d));
    if (name == "jacobi") return jacobi_pbw_check(d, seed);
    if (name == "dirac") return suite_dirac(d);
    throw std::invalid_argument("unknown suite: " + name);
}

/*
 * Deliberate-corruption companions.  The corrupted descriptor starts
 * the cross-parameter sum at l = 1 while the transposition sums keep
 * the full residue range; the presentation and PBW layers must notice
 * the mismatch.  Suites without a meaningful corruption return an
 * empty report.
 */
inline CheckReport suite_negative_controls(const std::string& name, const GGHDescriptor& d,
                                           unsigned seed) {
    CheckReport rep;
    if (d.mode != GGHMode::dunkl_opdam) return rep;
    GGHDescriptor bad = d;
    bad.cross_sum_from = 1;
    if (name == "presentations") {
        const CheckReport r = verify_presentations(bad);
        rep.add("negative control: mismatched cross-parameter range fails the presentations",
                !r.all_pass(), "the corrupted descriptor passed all " +
                                   std::to_string(r.items.size()) + " items");
    } else if (name == "jacobi") {
        const CheckReport r = jacobi_pbw_check(bad, seed);
        rep.add("negative control: mismatched cross-parameter range fails the pbw checks",
                !r.all_pass(), "the corrupted descriptor passed all " +
                                   std::to_string(r.items.size()) + " items");
    }
    return rep;
}

} // namespace gghlab
