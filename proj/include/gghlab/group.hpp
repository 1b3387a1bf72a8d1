/*
 * group.hpp
 *
 * The wreath product G(m,1,n) = S_n acting on (Z/m)^n, its group
 * algebra with Scalar coefficients, Jucys-Murphy sums, minimal coset
 * representatives for parabolic subgroups, and the reflection-style
 * permutation representation used by the Drinfeld condition checks.
 *
 * Elements are stored in the normal form  s_w g^a : multiplying two
 * of them gives (w,a)(u,b) = (wu, u*a + b) where (u*a)_i = a_{u(i)}
 * and wu means "apply u first".  Indices are 0-based internally; the
 * text form is 1-based: "[2,1];[0,1]" is s_1 g_2.
 */

#pragma once

#include "gghlab/linalg.hpp"
#include "gghlab/scalar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace gghlab {

struct GmnElement {
    unsigned m = 1;
    std::vector<unsigned> perm;  // perm[i] = w(i)
    std::vector<unsigned> torus; // exponents in Z/m

    unsigned n() const { return unsigned(perm.size()); }

    bool is_identity() const {
        for (unsigned i = 0; i < perm.size(); ++i)
            if (perm[i] != i || torus[i] != 0) return false;
        return true;
    }
    bool is_torus() const {
        for (unsigned i = 0; i < perm.size(); ++i)
            if (perm[i] != i) return false;
        return true;
    }

    friend bool operator==(const GmnElement& a, const GmnElement& b) {
        return a.perm == b.perm && a.torus == b.torus;
    }
    friend bool operator!=(const GmnElement& a, const GmnElement& b) { return !(a == b); }
    friend bool operator<(const GmnElement& a, const GmnElement& b) {
        if (a.perm != b.perm) return a.perm < b.perm;
        return a.torus < b.torus;
    }
};

inline GmnElement g_identity(unsigned m, unsigned n) {
    GmnElement e;
    e.m = m;
    e.perm.resize(n);
    std::iota(e.perm.begin(), e.perm.end(), 0u);
    e.torus.assign(n, 0u);
    return e;
}

/* The transposition (i j), 0-based. */
inline GmnElement g_transposition(unsigned m, unsigned n, unsigned i, unsigned j) {
    GmnElement e = g_identity(m, n);
    std::swap(e.perm[i], e.perm[j]);
    return e;
}

/* The simple reflection s_{k+1} = (k, k+1), 0-based k. */
inline GmnElement g_simple(unsigned m, unsigned n, unsigned k) { return g_transposition(m, n, k, k + 1); }

/* g_i^e, 0-based i. */
inline GmnElement g_torus(unsigned m, unsigned n, unsigned i, long e) {
    GmnElement el = g_identity(m, n);
    long r = e % long(m);
    el.torus[i] = unsigned(r < 0 ? r + long(m) : r);
    return el;
}

inline GmnElement g_mul(const GmnElement& a, const GmnElement& b) {
    if (a.m != b.m || a.n() != b.n()) throw std::invalid_argument("group element mismatch");
    GmnElement out;
    out.m = a.m;
    const unsigned n = a.n();
    out.perm.resize(n);
    out.torus.resize(n);
    for (unsigned i = 0; i < n; ++i) {
        out.perm[i] = a.perm[b.perm[i]];
        out.torus[i] = (a.torus[b.perm[i]] + b.torus[i]) % a.m;
    }
    return out;
}

inline GmnElement g_inverse(const GmnElement& a) {
    GmnElement out;
    out.m = a.m;
    const unsigned n = a.n();
    out.perm.resize(n);
    out.torus.resize(n);
    for (unsigned i = 0; i < n; ++i) out.perm[a.perm[i]] = i;
    for (unsigned i = 0; i < n; ++i) {
        unsigned t = a.torus[out.perm[i]];
        out.torus[i] = t == 0 ? 0 : a.m - t;
    }
    return out;
}

inline std::string g_to_string(const GmnElement& a) {
    std::ostringstream os;
    os << '[';
    for (unsigned i = 0; i < a.n(); ++i) os << (i ? "," : "") << a.perm[i] + 1;
    os << "];[";
    for (unsigned i = 0; i < a.n(); ++i) os << (i ? "," : "") << a.torus[i];
    os << ']';
    return os.str();
}

inline GmnElement g_parse(unsigned m, const std::string& text) {
    auto fail = [&] { throw std::invalid_argument("bad group element literal: " + text); };
    std::vector<unsigned> nums[2];
    std::size_t pos = 0;
    auto skip = [&](char c) {
        if (pos >= text.size() || text[pos] != c) fail();
        ++pos;
    };
    for (int part = 0; part < 2; ++part) {
        if (part) skip(';');
        skip('[');
        while (true) {
            if (pos >= text.size()) fail();
            if (text[pos] == ']' && nums[part].empty()) break;
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) fail();
            nums[part].push_back(unsigned(std::stoul(text.substr(start, pos - start))));
            if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
            break;
        }
        skip(']');
    }
    if (pos != text.size() || nums[0].size() != nums[1].size() || nums[0].empty()) fail();
    const unsigned n = unsigned(nums[0].size());
    GmnElement e;
    e.m = m;
    e.perm.resize(n);
    e.torus.resize(n);
    std::vector<bool> seen(n, false);
    for (unsigned i = 0; i < n; ++i) {
        if (nums[0][i] < 1 || nums[0][i] > n || seen[nums[0][i] - 1]) fail();
        seen[nums[0][i] - 1] = true;
        e.perm[i] = nums[0][i] - 1;
        if (nums[1][i] >= m) fail();
        e.torus[i] = nums[1][i];
    }
    return e;
}

/* Number of inversions = Coxeter length of the underlying permutation. */
inline unsigned coxeter_length(const std::vector<unsigned>& perm) {
    unsigned len = 0;
    for (unsigned i = 0; i < perm.size(); ++i)
        for (unsigned j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++len;
    return len;
}

/*
 * Canonical reduced word for a permutation: the returned indices
 * k_1,...,k_l (0-based) satisfy  w = s_{k_1} ... s_{k_l}  in the
 * apply-rightmost-first convention, with l = inversion count.
 */
inline std::vector<unsigned> reduced_word(std::vector<unsigned> perm) {
    std::vector<unsigned> word;
    bool progress = true;
    while (progress) {
        progress = false;
        for (unsigned k = 0; k + 1 < perm.size(); ++k) {
            if (perm[k] > perm[k + 1]) { // right descent: w = (w s_k) s_k
                word.push_back(k);
                std::swap(perm[k], perm[k + 1]);
                progress = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

/* All n! m^n elements, deterministic order. */
inline std::vector<GmnElement> all_elements(unsigned m, unsigned n) {
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<GmnElement> out;
    do {
        GmnElement e;
        e.m = m;
        e.perm = perm;
        e.torus.assign(n, 0u);
        while (true) {
            out.push_back(e);
            unsigned i = 0;
            while (i < n && e.torus[i] + 1 == m) e.torus[i++] = 0;
            if (i == n) break;
            ++e.torus[i];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

/*
 * Blocks of a composition (c_1,...,c_r) of n: consecutive index
 * ranges.  The parabolic subgroup keeps each block stable.
 */
inline std::vector<std::pair<unsigned, unsigned>> composition_blocks(const std::vector<unsigned>& comp) {
    std::vector<std::pair<unsigned, unsigned>> blocks;
    unsigned start = 0;
    for (unsigned c : comp) {
        blocks.push_back({start, start + c});
        start += c;
    }
    return blocks;
}

inline bool preserves_blocks(const std::vector<unsigned>& perm, const std::vector<unsigned>& comp) {
    for (auto [lo, hi] : composition_blocks(comp))
        for (unsigned i = lo; i < hi; ++i)
            if (perm[i] < lo || perm[i] >= hi) return false;
    return true;
}

/*
 * Minimal length representatives of the cosets w S_comp: the
 * permutations increasing on every block of the composition.
 */
inline std::vector<std::vector<unsigned>> min_coset_reps(unsigned n, const std::vector<unsigned>& comp) {
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    auto blocks = composition_blocks(comp);
    std::vector<std::vector<unsigned>> out;
    do {
        bool ok = true;
        for (auto [lo, hi] : blocks)
            for (unsigned i = lo; ok && i + 1 < hi; ++i)
                if (perm[i] > perm[i + 1]) ok = false;
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/*
 * Unique factorization w = c * p with c a minimal coset
 * representative and p block-preserving: sort the values of w on
 * each block.  Lengths add: l(w) = l(c) + l(p).
 */
inline std::pair<std::vector<unsigned>, std::vector<unsigned>> coset_factorize(
    const std::vector<unsigned>& perm, const std::vector<unsigned>& comp) {
    const unsigned n = unsigned(perm.size());
    std::vector<unsigned> c(n), p(n);
    for (auto [lo, hi] : composition_blocks(comp)) {
        std::vector<unsigned> idx(hi - lo);
        std::iota(idx.begin(), idx.end(), lo);
        std::sort(idx.begin(), idx.end(), [&](unsigned a, unsigned b) { return perm[a] < perm[b]; });
        for (unsigned t = 0; t < idx.size(); ++t) {
            p[idx[t]] = lo + t;       // p sends the position of the t-th smallest value to slot t
            c[lo + t] = perm[idx[t]]; // c increasing on the block
        }
    }
    return {c, p};
}

/* rho(s_w g^a) e_i = zeta_m^{a_i} e_{w(i)}, realized over Q(zeta_L) with m | L. */
inline Matrix rho_matrix(const GmnElement& g, unsigned L) {
    if (g.m == 0 || L % g.m != 0) throw std::invalid_argument("rho_matrix: field does not contain zeta_m");
    const unsigned n = g.n();
    Matrix out(L, n, n);
    for (unsigned i = 0; i < n; ++i)
        out.at(g.perm[i], i) = Cyclotomic::zeta(L, (L / g.m) * g.torus[i]);
    return out;
}

/*
 * The conjugation action on the span of the degree-one generators:
 * the torus acts trivially, permutations permute coordinates.
 */
inline Matrix perm_matrix(const GmnElement& g, unsigned L) {
    const unsigned n = g.n();
    Matrix out(L, n, n);
    for (unsigned i = 0; i < n; ++i) out.at(g.perm[i], i) = Cyclotomic(L, Rat(1));
    return out;
}

/* Longest element of the underlying symmetric group (trivial torus part). */
inline GmnElement g_longest(unsigned m, unsigned n) {
    GmnElement e = g_identity(m, n);
    for (unsigned i = 0; i < n; ++i) e.perm[i] = n - 1 - i;
    return e;
}

/* Finite formal sums of group elements with Scalar coefficients. */
class GroupAlgebraElement {
public:
    GroupAlgebraElement() : m_(1), n_(0), L_(1) {}
    GroupAlgebraElement(unsigned m, unsigned n, unsigned L) : m_(m), n_(n), L_(L) {}

    static GroupAlgebraElement unit(unsigned m, unsigned n, unsigned L) {
        GroupAlgebraElement x(m, n, L);
        x.add_term(g_identity(m, n), Scalar::one(L));
        return x;
    }
    static GroupAlgebraElement of(const GmnElement& g, unsigned L) {
        GroupAlgebraElement x(g.m, g.n(), L);
        x.add_term(g, Scalar::one(L));
        return x;
    }

    unsigned m() const { return m_; }
    unsigned n() const { return n_; }
    unsigned order() const { return L_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    const std::map<GmnElement, Scalar>& terms() const { return terms_; }

    Scalar coeff(const GmnElement& g) const {
        auto it = terms_.find(g);
        return it == terms_.end() ? Scalar(L_) : it->second;
    }

    void add_term(const GmnElement& g, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(g, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return !(a == b); }

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
        for (const auto& [g, c] : o.terms_) add_term(g, c);
        return *this;
    }
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) {
        for (const auto& [g, c] : o.terms_) add_term(g, -c);
        return *this;
    }
    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
    GroupAlgebraElement operator-() const {
        GroupAlgebraElement out(m_, n_, L_);
        for (const auto& [g, c] : terms_) out.terms_.emplace(g, -c);
        return out;
    }

    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        GroupAlgebraElement out(a.m_, a.n_, a.L_);
        for (const auto& [g, c] : a.terms_)
            for (const auto& [h, d] : b.terms_) out.add_term(g_mul(g, h), c * d);
        return out;
    }
    friend GroupAlgebraElement operator*(const Scalar& s, const GroupAlgebraElement& a) {
        GroupAlgebraElement out(a.m_, a.n_, a.L_);
        for (const auto& [g, c] : a.terms_) out.add_term(g, s * c);
        return out;
    }
    friend GroupAlgebraElement operator*(const Rat& r, const GroupAlgebraElement& a) {
        return (r * Scalar::one(a.L_)) * a;
    }

    /* g x g^{-1} */
    GroupAlgebraElement conjugate_by(const GmnElement& g) const {
        GroupAlgebraElement out(m_, n_, L_);
        GmnElement gi = g_inverse(g);
        for (const auto& [h, c] : terms_) out.add_term(g_mul(g, g_mul(h, gi)), c);
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [g, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << '(' << c.to_string() << ")*" << g_to_string(g);
        }
        return os.str();
    }

private:
    unsigned m_, n_, L_;
    std::map<GmnElement, Scalar> terms_;
};

/*
 * Jucys-Murphy sums.  With 1-based labels:
 *   M_i    = sum_{k<i} sum_{s mod m} (k i) g_k^{-s} g_i^{s},   M_1 = 0,
 *   Mbar_i = sum_{k>i} sum_{s mod m} (i k) g_i^{-s} g_k^{s},   Mbar_n = 0.
 */
inline GroupAlgebraElement jm_element(unsigned m, unsigned n, unsigned L, unsigned i1) {
    GroupAlgebraElement out(m, n, L);
    const unsigned i = i1 - 1;
    for (unsigned k = 0; k < i; ++k)
        for (unsigned s = 0; s < m; ++s) {
            GmnElement g = g_transposition(m, n, k, i);
            g.torus[k] = (m - s) % m;
            g.torus[i] = s;
            out.add_term(g, Scalar::one(L));
        }
    return out;
}

inline GroupAlgebraElement jm_bar_element(unsigned m, unsigned n, unsigned L, unsigned i1) {
    GroupAlgebraElement out(m, n, L);
    const unsigned i = i1 - 1;
    for (unsigned k = i + 1; k < n; ++k)
        for (unsigned s = 0; s < m; ++s) {
            GmnElement g = g_transposition(m, n, i, k);
            g.torus[i] = (m - s) % m;
            g.torus[k] = s;
            out.add_term(g, Scalar::one(L));
        }
    return out;
}

/* eps_{ij} = sum_{l mod m} g_i^l g_j^{-l} (torus only, includes l = 0). */
inline GroupAlgebraElement eps_element(unsigned m, unsigned n, unsigned L, unsigned i1, unsigned j1) {
    GroupAlgebraElement out(m, n, L);
    for (unsigned l = 0; l < m; ++l) {
        GmnElement g = g_identity(m, n);
        g.torus[i1 - 1] = l;
        g.torus[j1 - 1] = (m - l) % m;
        out.add_term(g, Scalar::one(L));
    }
    return out;
}

/* epshat_{ij} = sum_{s mod m} (i j) g_i^{-s} g_j^{s}. */
inline GroupAlgebraElement eps_hat_element(unsigned m, unsigned n, unsigned L, unsigned i1, unsigned j1) {
    GroupAlgebraElement out(m, n, L);
    for (unsigned s = 0; s < m; ++s) {
        GmnElement g = g_transposition(m, n, i1 - 1, j1 - 1);
        g.torus[i1 - 1] = (m - s) % m;
        g.torus[j1 - 1] = s;
        out.add_term(g, Scalar::one(L));
    }
    return out;
}

} // namespace gghlab
