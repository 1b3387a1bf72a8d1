/*
 * dirac.hpp
 *
 * The Dirac element D = sum_i ztilde_i (x) e_i inside H (x) C(V),
 * exact verification of both closed forms of D^2 (the two-form sum
 * over the support, and the Casimir form through the cover data), and
 * the twisted derivation d(a) = D a - eps(a) D.  The tensor product
 * is the plain one: (a (x) c)(a' (x) c') = a a' (x) c c', no Koszul
 * sign; the grading enters only through eps.
 *
 * Module-level Dirac matrices and Dirac cohomology are layered on top
 * of the representation machinery in reps.hpp.
 */

#pragma once

#include "gghlab/clifford.hpp"
#include "gghlab/ggh.hpp"

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gghlab {

/* ------------------------------------------------------------------ */
/* elements of H (x) C(V)                                             */
/* ------------------------------------------------------------------ */

struct HCKey {
    GmnElement g;
    std::vector<unsigned> zdeg;
    std::uint32_t cl = 0;

    friend bool operator==(const HCKey& a, const HCKey& b) {
        return a.cl == b.cl && a.g == b.g && a.zdeg == b.zdeg;
    }
    friend bool operator<(const HCKey& a, const HCKey& b) {
        if (!(a.g == b.g)) return a.g < b.g;
        if (a.zdeg != b.zdeg) return a.zdeg < b.zdeg;
        return a.cl < b.cl;
    }
};

class HCElement {
public:
    HCElement() = default;
    explicit HCElement(const GGHDescriptor& d) : desc_(d) {}

    static HCElement unit(const GGHDescriptor& d) {
        HCElement x(d);
        x.add_term(g_identity(d.m, d.n), std::vector<unsigned>(d.n, 0), 0, Scalar::one(d.L));
        return x;
    }
    /* a (x) 1 */
    static HCElement of_algebra(const DOElement& a) {
        HCElement x(a.descriptor());
        for (const auto& [k, c] : a.terms()) x.add_term(k.g, k.zdeg, 0, c);
        return x;
    }
    /* 1 (x) c */
    static HCElement of_clifford(const GGHDescriptor& d, const CliffordElement& c) {
        return tensor(DOElement::unit(d), c);
    }
    static HCElement tensor(const DOElement& a, const CliffordElement& c) {
        const GGHDescriptor& d = a.descriptor();
        if (c.n() != d.n || c.order() != d.L)
            throw std::invalid_argument("tensor: clifford factor outside descriptor");
        HCElement x(d);
        for (const auto& [k, ca] : a.terms())
            for (const auto& [mask, cc] : c.terms()) x.add_term(k.g, k.zdeg, mask, ca * cc);
        return x;
    }

    const GGHDescriptor& descriptor() const { return desc_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<HCKey, Scalar>& terms() const { return terms_; }

    Scalar coeff(const GmnElement& g, const std::vector<unsigned>& zdeg, std::uint32_t cl) const {
        auto it = terms_.find(HCKey{g, zdeg, cl});
        return it == terms_.end() ? Scalar(desc_.L) : it->second;
    }

    void add_term(const GmnElement& g, const std::vector<unsigned>& zdeg, std::uint32_t cl,
                  const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(HCKey{g, zdeg, cl}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const HCElement& a, const HCElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const HCElement& a, const HCElement& b) { return !(a == b); }

    HCElement& operator+=(const HCElement& o) {
        check_desc(o);
        for (const auto& [k, c] : o.terms_) add_term(k.g, k.zdeg, k.cl, c);
        return *this;
    }
    HCElement& operator-=(const HCElement& o) {
        check_desc(o);
        for (const auto& [k, c] : o.terms_) add_term(k.g, k.zdeg, k.cl, -c);
        return *this;
    }
    friend HCElement operator+(HCElement a, const HCElement& b) { return a += b; }
    friend HCElement operator-(HCElement a, const HCElement& b) { return a -= b; }
    HCElement operator-() const {
        HCElement out(desc_);
        for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
        return out;
    }
    friend HCElement operator*(const Scalar& s, const HCElement& a) {
        HCElement out(a.desc_);
        if (s.is_zero()) return out;
        for (const auto& [k, c] : a.terms_) out.add_term(k.g, k.zdeg, k.cl, s * c);
        return out;
    }
    friend HCElement operator*(const Rat& r, const HCElement& a) {
        return (r * Scalar::one(a.desc_.L)) * a;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << '(' << c.to_string() << ")*" << g_to_string(k.g);
            for (unsigned i = 0; i < k.zdeg.size(); ++i) {
                if (k.zdeg[i] == 0) continue;
                os << "*z" << i + 1;
                if (k.zdeg[i] > 1) os << '^' << k.zdeg[i];
            }
            os << "(x)";
            if (k.cl == 0) os << '1';
            for (unsigned i = 0; i < desc_.n; ++i)
                if (k.cl & (std::uint32_t(1) << i)) os << 'e' << i + 1;
        }
        return os.str();
    }

private:
    void check_desc(const HCElement& o) const {
        if (!(desc_ == o.desc_)) throw std::invalid_argument("descriptor mismatch between operands");
    }

    GGHDescriptor desc_;
    std::map<HCKey, Scalar> terms_;
};

/* plain tensor-algebra product: H side through the normal form, C side by masks */
inline HCElement hc_mul(const HCElement& A, const HCElement& B) {
    const GGHDescriptor& d = A.descriptor();
    if (!(d == B.descriptor())) throw std::invalid_argument("descriptor mismatch between operands");
    HCElement out(d);
    for (const auto& [ka, ca] : A.terms())
        for (const auto& [kb, cb] : B.terms()) {
            Scalar c = ca * cb;
            if (clifford_sign(ka.cl, kb.cl) < 0) c = -c;
            const std::uint32_t cl = ka.cl ^ kb.cl;
            DOElement mid = z_monomial_times_group(d, ka.zdeg, kb.g);
            for (const auto& [km, cm] : mid.terms()) {
                std::vector<unsigned> deg = km.zdeg;
                for (unsigned u = 0; u < d.n; ++u) deg[u] += kb.zdeg[u];
                out.add_term(g_mul(ka.g, km.g), deg, cl, c * cm);
            }
        }
    return out;
}

/* eps = identity on H, grading automorphism on C(V) */
inline HCElement hc_grading(const HCElement& x) {
    HCElement out(x.descriptor());
    for (const auto& [k, c] : x.terms())
        out.add_term(k.g, k.zdeg, k.cl, (__builtin_popcount(k.cl) & 1) ? -c : c);
    return out;
}

/*
 * Diagonal group twist: conjugate the algebra leg by the permutation
 * part of w and relabel the Clifford generators the same way.  The
 * Dirac element is a fixed point.
 */
inline HCElement hc_group_twist(const HCElement& x, const GmnElement& w) {
    const GGHDescriptor& d = x.descriptor();
    HCElement out(d);
    for (const auto& [k, c] : x.terms()) {
        DOElement a(d);
        a.add_term(k.g, k.zdeg, c);
        DOElement conj = conjugate(a, w);
        CliffordElement cl = clifford_permute(
            CliffordElement::monomial(d.n, d.L, k.cl, Scalar::one(d.L)), w.perm);
        for (const auto& [kc, cc] : conj.terms())
            for (const auto& [mask, cm] : cl.terms()) out.add_term(kc.g, kc.zdeg, mask, cc * cm);
    }
    return out;
}

/* ------------------------------------------------------------------ */
/* the Dirac element and its square                                   */
/* ------------------------------------------------------------------ */

inline HCElement dirac_element(const GGHDescriptor& d) {
    HCElement out(d);
    for (unsigned i = 1; i <= d.n; ++i)
        out += HCElement::tensor(build_family(d, Family::ztilde, i),
                                 CliffordElement::generator(d.n, d.L, i));
    return out;
}

/* d(a) = D a - eps(a) D; twisted Leibniz d(ab) = d(a) b + eps(a) d(b) */
inline HCElement dirac_derivation(const HCElement& a) {
    const HCElement D = dirac_element(a.descriptor());
    return hc_mul(D, a) - hc_mul(hc_grading(a), D);
}

struct DiracReport {
    HCElement lemma_residual;   /* D^2 + h (x) 1 - (1/2) sum_g g (x) kappa_g */
    bool casimir_applicable = false;
    HCElement casimir_residual; /* D^2 + omega_H (x) 1 - sum of cover terms */
    std::vector<std::pair<GmnElement, unsigned>> skipped; /* ineligible support elements */

    bool pass() const {
        return lemma_residual.is_zero() && (!casimir_applicable || casimir_residual.is_zero());
    }
};

/*
 * Verifies both closed forms of D^2 exactly, kappa kept formal:
 *
 *   D^2 = -h (x) 1 + (1/2) sum_{g in supp b} g (x) kappa_g,
 *       with kappa_g the Clifford two-form of b_g, and
 *   D^2 = -omega_H (x) 1 + sum over the Casimir cover of c (g (x) word),
 *       when every support element admits a cover pair (the kernel of
 *       rho carries no form, so its correction term is absent).
 */
inline DiracReport dirac_square_check(const GGHDescriptor& d) {
    DiracReport rep;

    const HCElement D = dirac_element(d);
    const HCElement D2 = hc_mul(D, D);
    const BForms b = extract_bforms(d);
    const CasimirData cd = casimirs(d, b);

    HCElement lemma = D2 + HCElement::of_algebra(cd.h);
    for (const GmnElement& g : b.support()) {
        CliffordElement kg = clifford_two_form(
            d.n, d.L, [&](unsigned i1, unsigned j1) { return b.value(g, i1 - 1, j1 - 1); });
        lemma -= Rat(1, 2) * HCElement::tensor(DOElement::of_group(d, g), kg);
    }
    rep.lemma_residual = lemma;

    rep.skipped = cd.skipped;
    rep.casimir_applicable = cd.skipped.empty();
    if (rep.casimir_applicable) {
        HCElement cas = D2 + HCElement::of_algebra(cd.omega_H);
        for (const CoverTerm& t : cd.cover)
            cas -= t.c_coeff * HCElement::tensor(DOElement::of_group(d, t.g), t.word);
        rep.casimir_residual = cas;
    } else {
        rep.casimir_residual = HCElement(d);
    }

    return rep;
}

/*
 * D is invariant under the diagonal action of the group: conjugation
 * on the algebra leg combined with the index relabeling on the
 * Clifford leg fixes it (torus elements act trivially on both legs).
 */
inline CheckReport dirac_invariance(const GGHDescriptor& d) {
    CheckReport rep;
    const HCElement D = dirac_element(d);
    bool ok = true;
    std::string wit;
    std::vector<GmnElement> gens;
    for (unsigned k = 0; k + 1 < d.n; ++k) gens.push_back(g_simple(d.m, d.n, k));
    if (d.m > 1)
        for (unsigned i = 0; i < d.n; ++i) gens.push_back(g_torus(d.m, d.n, i, 1));
    for (const GmnElement& g : gens)
        if (hc_group_twist(D, g) != D) {
            ok = false;
            wit = "generator " + g_to_string(g);
            break;
        }
    rep.add("dirac element is fixed by the diagonal group action", ok, wit);
    return rep;
}

} // namespace gghlab
