/*
 * clifford.hpp
 *
 * The Clifford algebra C(n) on generators e_1,...,e_n with
 * e_i^2 = -1 and e_i e_j = -e_j e_i.  Basis monomials e_S are stored
 * as bitmasks (bit i-1 set means e_i present, factors in increasing
 * index order), so the algebra has dimension 2^n.  Coefficients are
 * Scalars to let deformation-parameter expressions ride along.
 */

#pragma once

#include "gghlab/linalg.hpp"
#include "gghlab/scalar.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>

namespace gghlab {

/* sign of e_S e_T = sign * e_{S xor T}: reordering swaps plus e_i^2 = -1. */
inline int clifford_sign(std::uint32_t s, std::uint32_t t) {
    int swaps = 0;
    for (std::uint32_t bits = t; bits; bits &= bits - 1) {
        std::uint32_t lowest = bits & ~(bits - 1);
        swaps += __builtin_popcount(s & ~(lowest | (lowest - 1)));
    }
    int squares = __builtin_popcount(s & t);
    return ((swaps + squares) & 1) ? -1 : 1;
}

class CliffordElement {
public:
    CliffordElement() : n_(0), L_(1) {}
    CliffordElement(unsigned n, unsigned L) : n_(n), L_(L) {}

    static CliffordElement unit(unsigned n, unsigned L) {
        CliffordElement x(n, L);
        x.add_term(0, Scalar::one(L));
        return x;
    }
    /* e_i, 1-based. */
    static CliffordElement generator(unsigned n, unsigned L, unsigned i1) {
        if (i1 < 1 || i1 > n) throw std::invalid_argument("clifford generator index out of range");
        CliffordElement x(n, L);
        x.add_term(std::uint32_t(1) << (i1 - 1), Scalar::one(L));
        return x;
    }
    static CliffordElement monomial(unsigned n, unsigned L, std::uint32_t mask, const Scalar& c) {
        CliffordElement x(n, L);
        x.add_term(mask, c);
        return x;
    }

    unsigned n() const { return n_; }
    unsigned order() const { return L_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::uint32_t, Scalar>& terms() const { return terms_; }

    Scalar coeff(std::uint32_t mask) const {
        auto it = terms_.find(mask);
        return it == terms_.end() ? Scalar(L_) : it->second;
    }

    void add_term(std::uint32_t mask, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(mask, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const CliffordElement& a, const CliffordElement& b) { return !(a == b); }

    CliffordElement& operator+=(const CliffordElement& o) {
        for (const auto& [mask, c] : o.terms_) add_term(mask, c);
        return *this;
    }
    CliffordElement& operator-=(const CliffordElement& o) {
        for (const auto& [mask, c] : o.terms_) add_term(mask, -c);
        return *this;
    }
    friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
    friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
    CliffordElement operator-() const {
        CliffordElement out(n_, L_);
        for (const auto& [mask, c] : terms_) out.terms_.emplace(mask, -c);
        return out;
    }

    friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
        CliffordElement out(a.n_, a.L_);
        for (const auto& [s, c] : a.terms_)
            for (const auto& [t, d] : b.terms_) {
                Scalar prod = c * d;
                if (clifford_sign(s, t) < 0) prod = -prod;
                out.add_term(s ^ t, prod);
            }
        return out;
    }
    friend CliffordElement operator*(const Scalar& s, const CliffordElement& a) {
        CliffordElement out(a.n_, a.L_);
        for (const auto& [mask, c] : a.terms_) out.add_term(mask, s * c);
        return out;
    }
    friend CliffordElement operator*(const Rat& r, const CliffordElement& a) {
        return (r * Scalar::one(a.L_)) * a;
    }

    /* The grading automorphism e_S -> (-1)^{|S|} e_S. */
    CliffordElement graded() const {
        CliffordElement out(n_, L_);
        for (const auto& [mask, c] : terms_)
            out.terms_.emplace(mask, (__builtin_popcount(mask) & 1) ? -c : c);
        return out;
    }

    /* The anti-automorphism with e_i -> -e_i: e_S -> (-1)^{|S|(|S|+1)/2} e_S. */
    CliffordElement transposed() const {
        CliffordElement out(n_, L_);
        for (const auto& [mask, c] : terms_) {
            int k = __builtin_popcount(mask);
            out.terms_.emplace(mask, ((k * (k + 1) / 2) & 1) ? -c : c);
        }
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [mask, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << '(' << c.to_string() << ')';
            for (unsigned i = 0; i < n_; ++i)
                if (mask & (std::uint32_t(1) << i)) os << "*e" << i + 1;
        }
        return os.str();
    }

private:
    unsigned n_, L_;
    std::map<std::uint32_t, Scalar> terms_;
};

/*
 * Left multiplication by x on C(n) in the monomial basis (masks in
 * increasing order), with the deformation parameter evaluated.
 */
inline Matrix clifford_left_matrix(const CliffordElement& x, const Rat& kappa) {
    const unsigned dim = 1u << x.n();
    Matrix out(x.order(), dim, dim);
    for (const auto& [s, c] : x.terms()) {
        Cyclotomic value = c.eval(kappa);
        for (std::uint32_t t = 0; t < dim; ++t) {
            Cyclotomic v = value;
            if (clifford_sign(s, t) < 0) v = -v;
            out.at(s ^ t, t) += v;
        }
    }
    return out;
}

/*
 * Relabel generators along a permutation: e_i -> e_{perm[i]} (0-based),
 * re-sorting each monomial with the sign the anticommutation relations
 * dictate.
 */
inline CliffordElement clifford_permute(const CliffordElement& x, const std::vector<unsigned>& perm) {
    CliffordElement out(x.n(), x.order());
    for (const auto& [mask, c] : x.terms()) {
        std::vector<unsigned> mapped;
        for (unsigned i = 0; i < x.n(); ++i)
            if (mask & (std::uint32_t(1) << i)) mapped.push_back(perm[i]);
        unsigned inv = 0;
        std::uint32_t nm = 0;
        for (std::size_t a = 0; a < mapped.size(); ++a) {
            nm |= std::uint32_t(1) << mapped[a];
            for (std::size_t b = a + 1; b < mapped.size(); ++b)
                if (mapped[a] > mapped[b]) ++inv;
        }
        out.add_term(nm, (inv & 1) ? -c : c);
    }
    return out;
}

/*
 * The degree-two element attached to an antisymmetric coefficient
 * array: kappa_of(B) = sum_{i<j} 2 B(i,j) e_i e_j, with B given as a
 * callback over 1-based index pairs.
 */
inline CliffordElement clifford_two_form(unsigned n, unsigned L,
                                         const std::function<Scalar(unsigned, unsigned)>& B) {
    CliffordElement out(n, L);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j) {
            Scalar c = Rat(2) * B(i, j);
            out.add_term((std::uint32_t(1) << (i - 1)) | (std::uint32_t(1) << (j - 1)), c);
        }
    return out;
}

} // namespace gghlab
