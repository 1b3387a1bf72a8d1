/*
 * ggh.hpp
 *
 * PBW arithmetic for generalized graded Hecke algebras attached to
 * G(m,1,n) = S_n wr Z/m.  The algebra is C[G] twisted against a
 * commutative polynomial part C[z_1..z_n] by the cross relations
 *
 *   z_i s_j = s_j z_{s_j(i)} + (delta_{i,j+1} - delta_{i,j}) ctilde(j),
 *   z_i g_k = g_k z_i,
 *
 * where ctilde(j) is a torus-algebra parameter: kappa * eps_{j,j+1}
 * in Dunkl-Opdam mode, a constant scalar in type-A graded Hecke mode.
 * Normal form: group element on the left, commuting z-monomial on the
 * right.  Everything here is exact.
 *
 * Besides the multiplication engine this header provides the three
 * distinguished commuting families (y, ybar and the balanced family
 * ztilde), the flip involution, extraction of the alternating forms
 * b_g from the commutators of the balanced family, the Drinfeld-type
 * condition evaluator on those forms, and the Casimir / cover data
 * used by the Dirac layer.
 */

#pragma once

#include "gghlab/check.hpp"
#include "gghlab/clifford.hpp"
#include "gghlab/group.hpp"
#include "gghlab/linalg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gghlab {

/* ------------------------------------------------------------------ */
/* descriptors                                                        */
/* ------------------------------------------------------------------ */

enum class GGHMode { dunkl_opdam, typeA_hecke };

struct GGHDescriptor {
    unsigned m = 1;
    unsigned n = 1;
    unsigned L = 1;                    /* coefficients live in Q(zeta_L)[kappa]; m | L */
    GGHMode mode = GGHMode::dunkl_opdam;
    Scalar typeA_c{1u};                /* cross parameter in type-A mode */
    unsigned cross_sum_from = 0;       /* lower bound of the l-sum in eps_{j,j+1};
                                        * 0 is the consistent choice, 1 gives the
                                        * deliberately mismatched negative control */

    /* kappa in Dunkl-Opdam mode, the constant c in type-A mode */
    Scalar family_coefficient() const {
        return mode == GGHMode::dunkl_opdam ? Scalar::kappa(L) : typeA_c;
    }

    /* ctilde(alpha_k), 0-based simple index k */
    GroupAlgebraElement cross_parameter(unsigned k) const {
        if (k + 1 >= n) throw std::invalid_argument("cross_parameter: simple index out of range");
        if (mode == GGHMode::typeA_hecke)
            return typeA_c * GroupAlgebraElement::unit(m, n, L);
        GroupAlgebraElement eps(m, n, L);
        for (unsigned l = cross_sum_from; l < m; ++l) {
            GmnElement g = g_identity(m, n);
            g.torus[k] = l;
            g.torus[k + 1] = (m - l) % m;
            eps.add_term(g, Scalar::one(L));
        }
        return Scalar::kappa(L) * eps;
    }

    friend bool operator==(const GGHDescriptor& a, const GGHDescriptor& b) {
        if (a.m != b.m || a.n != b.n || a.L != b.L || a.mode != b.mode ||
            a.cross_sum_from != b.cross_sum_from)
            return false;
        return a.mode == GGHMode::dunkl_opdam || a.typeA_c == b.typeA_c;
    }
    friend bool operator!=(const GGHDescriptor& a, const GGHDescriptor& b) { return !(a == b); }
};

inline GGHDescriptor dunkl_opdam_descriptor(unsigned m, unsigned n, unsigned L = 0) {
    if (m == 0 || n == 0) throw std::invalid_argument("descriptor needs m, n >= 1");
    if (L == 0) L = m;
    if (L % m != 0) throw std::invalid_argument("descriptor needs m | L");
    GGHDescriptor d;
    d.m = m;
    d.n = n;
    d.L = L;
    d.mode = GGHMode::dunkl_opdam;
    return d;
}

inline GGHDescriptor type_a_descriptor(unsigned n, const Scalar& c) {
    if (n == 0) throw std::invalid_argument("descriptor needs n >= 1");
    GGHDescriptor d;
    d.m = 1;
    d.n = n;
    d.L = c.order();
    d.mode = GGHMode::typeA_hecke;
    d.typeA_c = c;
    return d;
}

/* ------------------------------------------------------------------ */
/* elements in PBW normal form                                        */
/* ------------------------------------------------------------------ */

struct DOKey {
    GmnElement g;
    std::vector<unsigned> zdeg; /* multidegree of the right z-monomial */

    friend bool operator==(const DOKey& a, const DOKey& b) {
        return a.g == b.g && a.zdeg == b.zdeg;
    }
    friend bool operator<(const DOKey& a, const DOKey& b) {
        if (a.g != b.g) return a.g < b.g;
        return a.zdeg < b.zdeg;
    }
};

inline unsigned zdeg_total(const std::vector<unsigned>& d) {
    unsigned t = 0;
    for (unsigned e : d) t += e;
    return t;
}

class DOElement {
public:
    DOElement() = default;
    explicit DOElement(const GGHDescriptor& d) : desc_(d) {}

    static DOElement unit(const GGHDescriptor& d) {
        DOElement x(d);
        x.add_term(g_identity(d.m, d.n), std::vector<unsigned>(d.n, 0), Scalar::one(d.L));
        return x;
    }
    static DOElement of_group(const GGHDescriptor& d, const GmnElement& g) {
        if (g.m != d.m || g.n() != d.n) throw std::invalid_argument("of_group: element outside descriptor group");
        DOElement x(d);
        x.add_term(g, std::vector<unsigned>(d.n, 0), Scalar::one(d.L));
        return x;
    }
    static DOElement of_group_algebra(const GGHDescriptor& d, const GroupAlgebraElement& a) {
        if (a.m() != d.m || a.n() != d.n || a.order() != d.L)
            throw std::invalid_argument("of_group_algebra: group algebra outside descriptor");
        DOElement x(d);
        for (const auto& [g, c] : a.terms()) x.add_term(g, std::vector<unsigned>(d.n, 0), c);
        return x;
    }
    /* z_{i1}, 1-based */
    static DOElement z_generator(const GGHDescriptor& d, unsigned i1) {
        if (i1 < 1 || i1 > d.n) throw std::invalid_argument("z_generator index out of range");
        DOElement x(d);
        std::vector<unsigned> deg(d.n, 0);
        deg[i1 - 1] = 1;
        x.add_term(g_identity(d.m, d.n), deg, Scalar::one(d.L));
        return x;
    }

    const GGHDescriptor& descriptor() const { return desc_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<DOKey, Scalar>& terms() const { return terms_; }

    unsigned z_degree() const {
        unsigned d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, zdeg_total(k.zdeg));
        return d;
    }

    Scalar coeff(const GmnElement& g, const std::vector<unsigned>& zdeg) const {
        auto it = terms_.find(DOKey{g, zdeg});
        return it == terms_.end() ? Scalar(desc_.L) : it->second;
    }

    void add_term(const GmnElement& g, const std::vector<unsigned>& zdeg, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(DOKey{g, zdeg}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /* group algebra part of a z-free element; throws if z-degree > 0 */
    GroupAlgebraElement group_part() const {
        GroupAlgebraElement out(desc_.m, desc_.n, desc_.L);
        for (const auto& [k, c] : terms_) {
            if (zdeg_total(k.zdeg) != 0)
                throw std::domain_error("group_part: element has positive z-degree");
            out.add_term(k.g, c);
        }
        return out;
    }

    friend bool operator==(const DOElement& a, const DOElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const DOElement& a, const DOElement& b) { return !(a == b); }

    DOElement& operator+=(const DOElement& o) {
        check_desc(o);
        for (const auto& [k, c] : o.terms_) add_term(k.g, k.zdeg, c);
        return *this;
    }
    DOElement& operator-=(const DOElement& o) {
        check_desc(o);
        for (const auto& [k, c] : o.terms_) add_term(k.g, k.zdeg, -c);
        return *this;
    }
    friend DOElement operator+(DOElement a, const DOElement& b) { return a += b; }
    friend DOElement operator-(DOElement a, const DOElement& b) { return a -= b; }
    DOElement operator-() const {
        DOElement out(desc_);
        for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
        return out;
    }
    friend DOElement operator*(const Scalar& s, const DOElement& a) {
        DOElement out(a.desc_);
        if (s.is_zero()) return out;
        for (const auto& [k, c] : a.terms_) out.add_term(k.g, k.zdeg, s * c);
        return out;
    }
    friend DOElement operator*(const Rat& r, const DOElement& a) {
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
        }
        return os.str();
    }

private:
    void check_desc(const DOElement& o) const {
        if (!(desc_ == o.desc_)) throw std::invalid_argument("descriptor mismatch between operands");
    }

    GGHDescriptor desc_;
    std::map<DOKey, Scalar> terms_;
};

/* ------------------------------------------------------------------ */
/* normal form multiplication                                         */
/* ------------------------------------------------------------------ */

/*
 * z_i * K for a single group element K = s_w g^a, 0-based i.  Walking a
 * reduced word of w from the left, the cross relation either lets the
 * letter pass (relabeling the z-index) or additionally emits a z-free
 * correction prefix * (+-ctilde) * suffix * g^a.
 */
inline DOElement push_z(const GGHDescriptor& d, unsigned i, const GmnElement& K) {
    DOElement out(d);
    const std::vector<unsigned> word = reduced_word(K.perm);
    const std::vector<unsigned> zero(d.n, 0);

    GmnElement torus_tail = g_identity(d.m, d.n);
    torus_tail.torus = K.torus;

    unsigned cur = i;
    GmnElement prefix = g_identity(d.m, d.n);
    for (std::size_t t = 0; t < word.size(); ++t) {
        const unsigned k = word[t];
        if (cur == k || cur == k + 1) {
            const bool positive = (cur == k + 1);
            GmnElement suffix = g_identity(d.m, d.n);
            for (std::size_t u = t + 1; u < word.size(); ++u)
                suffix = g_mul(suffix, g_simple(d.m, d.n, word[u]));
            GroupAlgebraElement corr = GroupAlgebraElement::of(prefix, d.L) *
                                       d.cross_parameter(k) *
                                       GroupAlgebraElement::of(g_mul(suffix, torus_tail), d.L);
            for (const auto& [g, c] : corr.terms()) out.add_term(g, zero, positive ? c : -c);
        }
        cur = (cur == k) ? k + 1 : (cur == k + 1 ? k : cur);
        prefix = g_mul(prefix, g_simple(d.m, d.n, k));
    }

    std::vector<unsigned> deg(d.n, 0);
    deg[cur] = 1;
    out.add_term(K, deg, Scalar::one(d.L));
    return out;
}

/* z_i * X, 0-based i */
inline DOElement z_left_mul(unsigned i, const DOElement& X) {
    const GGHDescriptor& d = X.descriptor();
    DOElement out(d);
    for (const auto& [k, c] : X.terms()) {
        DOElement pushed = push_z(d, i, k.g);
        for (const auto& [pk, pc] : pushed.terms()) {
            std::vector<unsigned> deg = pk.zdeg;
            for (unsigned u = 0; u < d.n; ++u) deg[u] += k.zdeg[u];
            out.add_term(pk.g, deg, c * pc);
        }
    }
    return out;
}

/* z^a * K in normal form */
inline DOElement z_monomial_times_group(const GGHDescriptor& d, const std::vector<unsigned>& a,
                                        const GmnElement& K) {
    DOElement acc = DOElement::of_group(d, K);
    for (unsigned i = d.n; i-- > 0;)
        for (unsigned rep = 0; rep < a[i]; ++rep) acc = z_left_mul(i, acc);
    return acc;
}

inline DOElement nf_mul(const DOElement& A, const DOElement& B) {
    const GGHDescriptor& d = A.descriptor();
    if (!(d == B.descriptor())) throw std::invalid_argument("descriptor mismatch between operands");
    DOElement out(d);
    for (const auto& [ka, ca] : A.terms())
        for (const auto& [kb, cb] : B.terms()) {
            const Scalar c = ca * cb;
            DOElement mid = z_monomial_times_group(d, ka.zdeg, kb.g);
            for (const auto& [km, cm] : mid.terms()) {
                std::vector<unsigned> deg = km.zdeg;
                for (unsigned u = 0; u < d.n; ++u) deg[u] += kb.zdeg[u];
                out.add_term(g_mul(ka.g, km.g), deg, c * cm);
            }
        }
    return out;
}

inline DOElement commutator(const DOElement& a, const DOElement& b) {
    return nf_mul(a, b) - nf_mul(b, a);
}

inline DOElement conjugate(const DOElement& x, const GmnElement& g) {
    const GGHDescriptor& d = x.descriptor();
    return nf_mul(DOElement::of_group(d, g), nf_mul(x, DOElement::of_group(d, g_inverse(g))));
}

inline DOElement nf_pow(const DOElement& x, unsigned e) {
    DOElement out = DOElement::unit(x.descriptor());
    for (unsigned i = 0; i < e; ++i) out = nf_mul(out, x);
    return out;
}

/* ------------------------------------------------------------------ */
/* distinguished families and the flip involution                     */
/* ------------------------------------------------------------------ */

enum class Family { z, y, ybar, ztilde };

/*
 * 1-based i:
 *   y_i      = z_i - coef * M_i,
 *   ybar_i   = z_i + coef * Mbar_i,
 *   ztilde_i = z_i + (coef/2) * (Mbar_i - M_i),
 * with coef = kappa (Dunkl-Opdam) or the constant c (type A).
 */
inline DOElement build_family(const GGHDescriptor& d, Family f, unsigned i1) {
    DOElement z = DOElement::z_generator(d, i1);
    if (f == Family::z) return z;
    const Scalar coef = d.family_coefficient();
    const GroupAlgebraElement M = jm_element(d.m, d.n, d.L, i1);
    const GroupAlgebraElement Mbar = jm_bar_element(d.m, d.n, d.L, i1);
    switch (f) {
    case Family::y:
        return z - DOElement::of_group_algebra(d, coef * M);
    case Family::ybar:
        return z + DOElement::of_group_algebra(d, coef * Mbar);
    case Family::ztilde:
        return z + DOElement::of_group_algebra(d, (Rat(1, 2) * coef) * (Mbar - M));
    default:
        return z;
    }
}

/*
 * The flip involution: z_i -> -z_{n+1-i} together with conjugation by
 * the longest group element (s_i -> s_{n-i}, g_i -> g_{n+1-i}).  It is
 * an algebra automorphism of order two and swaps the y and ybar
 * families up to sign.
 */
inline DOElement flip_involution(const DOElement& x) {
    const GGHDescriptor& d = x.descriptor();
    const GmnElement w0 = g_longest(d.m, d.n);
    DOElement out(d);
    for (const auto& [k, c] : x.terms()) {
        GmnElement g = g_mul(w0, g_mul(k.g, w0));
        std::vector<unsigned> deg(k.zdeg.rbegin(), k.zdeg.rend());
        const Scalar cc = (zdeg_total(k.zdeg) % 2 == 0) ? c : -c;
        out.add_term(g, deg, cc);
    }
    return out;
}

/*
 * Quotient by the torus augmentation g_i -> 1.  Lands in the type-A
 * graded Hecke algebra with parameter m * kappa over the same
 * coefficient field.
 */
inline GGHDescriptor torus_augmentation_target(const GGHDescriptor& d) {
    if (d.mode != GGHMode::dunkl_opdam)
        throw std::invalid_argument("torus augmentation applies to Dunkl-Opdam descriptors");
    return type_a_descriptor(d.n, Rat(long(d.m)) * Scalar::kappa(d.L));
}

inline DOElement torus_augmentation(const DOElement& x) {
    const GGHDescriptor& d = x.descriptor();
    const GGHDescriptor target = torus_augmentation_target(d);
    DOElement out(target);
    for (const auto& [k, c] : x.terms()) {
        GmnElement g;
        g.m = 1;
        g.perm = k.g.perm;
        g.torus.assign(d.n, 0u);
        out.add_term(g, k.zdeg, c);
    }
    return out;
}

/* ------------------------------------------------------------------ */
/* alternating forms from commutators of the balanced family          */
/* ------------------------------------------------------------------ */

class BForms {
public:
    BForms() = default;
    BForms(unsigned m, unsigned n, unsigned L) : m_(m), n_(n), L_(L) {}

    unsigned m() const { return m_; }
    unsigned n() const { return n_; }
    unsigned order() const { return L_; }

    const std::map<GmnElement, std::vector<Scalar>>& forms() const { return forms_; }

    std::vector<GmnElement> support() const {
        std::vector<GmnElement> out;
        for (const auto& [g, mat] : forms_) out.push_back(g);
        return out;
    }

    /* b_g(v_{i+1}, v_{j+1}); 0-based i, j */
    Scalar value(const GmnElement& g, unsigned i, unsigned j) const {
        auto it = forms_.find(g);
        if (it == forms_.end()) return Scalar(L_);
        return it->second[i * n_ + j];
    }

    void accumulate(const GmnElement& g, unsigned i, unsigned j, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = forms_.try_emplace(g, std::vector<Scalar>(std::size_t(n_) * n_, Scalar(L_)));
        it->second[i * n_ + j] += c;
        it->second[j * n_ + i] -= c;
    }

    void prune() {
        for (auto it = forms_.begin(); it != forms_.end();) {
            bool zero = true;
            for (const auto& s : it->second)
                if (!s.is_zero()) { zero = false; break; }
            it = zero ? forms_.erase(it) : std::next(it);
        }
    }

private:
    unsigned m_ = 1, n_ = 0, L_ = 1;
    std::map<GmnElement, std::vector<Scalar>> forms_;
};

/*
 * Reads off b_g(v_i, v_j) as the coefficient of g in the commutator
 * [ztilde_i, ztilde_j] for i < j, filled antisymmetrically.  Throws if
 * any commutator fails to be z-free or if a torus element carries a
 * nonzero form; both would contradict the structure this read-off
 * relies on.
 */
inline BForms extract_bforms(const GGHDescriptor& d) {
    BForms out(d.m, d.n, d.L);
    for (unsigned i = 0; i < d.n; ++i)
        for (unsigned j = i + 1; j < d.n; ++j) {
            DOElement com = commutator(build_family(d, Family::ztilde, i + 1),
                                       build_family(d, Family::ztilde, j + 1));
            for (const auto& [k, c] : com.terms()) {
                if (zdeg_total(k.zdeg) != 0)
                    throw std::domain_error(
                        "extract_bforms: commutator of the balanced family has positive z-degree");
                out.accumulate(k.g, i, j, c);
            }
        }
    out.prune();
    for (const auto& [g, mat] : out.forms())
        if (g.is_torus())
            throw std::domain_error("extract_bforms: nonzero form on a torus element " + g_to_string(g));
    return out;
}

/* ------------------------------------------------------------------ */
/* internal consistency suite                                         */
/* ------------------------------------------------------------------ */

inline GmnElement random_group_element(const GGHDescriptor& d, std::mt19937& rng) {
    GmnElement g = g_identity(d.m, d.n);
    for (unsigned i = d.n; i > 1; --i) {
        unsigned j = unsigned(rng() % i);
        std::swap(g.perm[i - 1], g.perm[j]);
    }
    for (unsigned i = 0; i < d.n; ++i) g.torus[i] = unsigned(rng() % d.m);
    return g;
}

inline DOElement random_element(const GGHDescriptor& d, std::mt19937& rng) {
    DOElement out(d);
    const unsigned nterms = 1 + unsigned(rng() % 3);
    for (unsigned t = 0; t < nterms; ++t) {
        GmnElement g = random_group_element(d, rng);
        std::vector<unsigned> deg(d.n, 0);
        const unsigned total = unsigned(rng() % 3);
        for (unsigned u = 0; u < total; ++u) deg[rng() % d.n] += 1;
        long p = long(rng() % 7) - 3;
        if (p == 0) p = 1;
        Scalar c = Rat(p, long(1 + rng() % 2)) * Scalar::one(d.L);
        if (rng() % 2) c = c * Scalar::kappa(d.L);
        if (d.L > 1 && rng() % 2) c = c * Scalar::zeta_value(d.L, unsigned(rng() % d.L));
        out.add_term(g, deg, c);
    }
    if (out.is_zero()) return DOElement::unit(d);
    return out;
}

/*
 * Structural sanity of the normal form product: Jacobi identity on the
 * commutators of the balanced family, conjugation equivariance, seeded
 * associativity, and the reflection relation of the y family (the one
 * check a mismatched eps range breaks).
 */
inline CheckReport jacobi_pbw_check(const GGHDescriptor& d, unsigned seed = 20260815,
                                    unsigned triples = 100) {
    CheckReport rep;

    std::vector<DOElement> zt;
    for (unsigned i = 1; i <= d.n; ++i) zt.push_back(build_family(d, Family::ztilde, i));

    {
        bool ok = true;
        std::string wit;
        for (unsigned i = 0; i < d.n && ok; ++i)
            for (unsigned j = i + 1; j < d.n && ok; ++j)
                for (unsigned k = j + 1; k < d.n && ok; ++k) {
                    DOElement cyc = commutator(commutator(zt[i], zt[j]), zt[k]) +
                                    commutator(commutator(zt[j], zt[k]), zt[i]) +
                                    commutator(commutator(zt[k], zt[i]), zt[j]);
                    if (!cyc.is_zero()) {
                        ok = false;
                        std::ostringstream os;
                        os << "triple (" << i + 1 << ',' << j + 1 << ',' << k + 1
                           << "): " << clip_witness(cyc.to_string());
                        wit = os.str();
                    }
                }
        rep.add("jacobi identity on balanced commutators", ok, wit);
    }

    {
        std::vector<GmnElement> gens;
        for (unsigned k = 0; k + 1 < d.n; ++k) gens.push_back(g_simple(d.m, d.n, k));
        if (d.m > 1)
            for (unsigned i = 0; i < d.n; ++i) gens.push_back(g_torus(d.m, d.n, i, 1));
        bool ok = true;
        std::string wit;
        for (const GmnElement& g : gens) {
            for (unsigned i = 0; i < d.n && ok; ++i)
                for (unsigned j = i + 1; j < d.n && ok; ++j) {
                    DOElement lhs = conjugate(commutator(zt[i], zt[j]), g);
                    DOElement rhs = commutator(conjugate(zt[i], g), conjugate(zt[j], g));
                    if (lhs != rhs) {
                        ok = false;
                        wit = "generator " + g_to_string(g) + ", pair (" + std::to_string(i + 1) +
                              "," + std::to_string(j + 1) + ")";
                    }
                }
            if (!ok) break;
        }
        rep.add("conjugation equivariance of balanced commutators", ok, wit);
    }

    {
        std::mt19937 rng(seed);
        bool ok = true;
        std::string wit;
        for (unsigned t = 0; t < triples && ok; ++t) {
            DOElement a = random_element(d, rng);
            DOElement b = random_element(d, rng);
            DOElement c = random_element(d, rng);
            if (nf_mul(nf_mul(a, b), c) != nf_mul(a, nf_mul(b, c))) {
                ok = false;
                wit = "seeded triple #" + std::to_string(t);
            }
        }
        rep.add("associativity on " + std::to_string(triples) + " seeded triples", ok, wit);
    }

    {
        /* cross-check against the independently constructed y family */
        bool ok = true;
        std::string wit;
        for (unsigned j = 0; j + 1 < d.n && ok; ++j)
            for (unsigned i = 0; i < d.n && ok; ++i) {
                unsigned si = (i == j) ? j + 1 : (i == j + 1 ? j : i);
                DOElement lhs = nf_mul(DOElement::of_group(d, g_simple(d.m, d.n, j)),
                                       build_family(d, Family::y, i + 1));
                DOElement rhs = nf_mul(build_family(d, Family::y, si + 1),
                                       DOElement::of_group(d, g_simple(d.m, d.n, j)));
                if (lhs != rhs) {
                    ok = false;
                    wit = "s_" + std::to_string(j + 1) + " y_" + std::to_string(i + 1) +
                          " != y_" + std::to_string(si + 1) + " s_" + std::to_string(j + 1) +
                          ": " + clip_witness((lhs - rhs).to_string());
                }
            }
        rep.add("reflection relation of the y family", ok, wit);
    }

    return rep;
}

/* ------------------------------------------------------------------ */
/* presentation suite                                                 */
/* ------------------------------------------------------------------ */

/*
 * Machine checks of the defining relations and of the three commuting
 * families.  Every identity is checked exactly, over all admissible
 * index combinations.  The two commutator placements record that the
 * group algebra factor epshat may stand on either side, with opposite
 * signs.
 */
inline CheckReport verify_presentations(const GGHDescriptor& d) {
    CheckReport rep;
    const unsigned m = d.m, n = d.n, L = d.L;
    const Scalar coef = d.family_coefficient();

    std::vector<DOElement> z, y, yb, zt;
    for (unsigned i = 1; i <= n; ++i) {
        z.push_back(build_family(d, Family::z, i));
        y.push_back(build_family(d, Family::y, i));
        yb.push_back(build_family(d, Family::ybar, i));
        zt.push_back(build_family(d, Family::ztilde, i));
    }
    std::vector<DOElement> s, gt;
    for (unsigned k = 0; k + 1 < n; ++k) s.push_back(DOElement::of_group(d, g_simple(m, n, k)));
    for (unsigned i = 0; i < n; ++i) gt.push_back(DOElement::of_group(d, g_torus(m, n, i, 1)));

    auto sweep = [&](const std::string& name, auto&& body) {
        bool ok = true;
        std::string wit;
        body(ok, wit);
        rep.add(name, ok, wit);
    };
    auto witness_pair = [](unsigned i, unsigned j, const DOElement& res) {
        return "(i,j)=(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               "): " + clip_witness(res.to_string());
    };

    sweep("polynomial generators commute", [&](bool& ok, std::string& wit) {
        for (unsigned i = 0; i < n && ok; ++i)
            for (unsigned j = i + 1; j < n && ok; ++j) {
                DOElement r = commutator(z[i], z[j]);
                if (!r.is_zero()) { ok = false; wit = witness_pair(i, j, r); }
            }
    });

    sweep("polynomial generators commute with the torus", [&](bool& ok, std::string& wit) {
        for (unsigned i = 0; i < n && ok; ++i)
            for (unsigned k = 0; k < n && ok; ++k) {
                DOElement r = commutator(z[i], gt[k]);
                if (!r.is_zero()) { ok = false; wit = witness_pair(i, k, r); }
            }
    });

    sweep("polynomial generators commute with distant reflections", [&](bool& ok, std::string& wit) {
        for (unsigned j = 0; j + 1 < n && ok; ++j)
            for (unsigned i = 0; i < n && ok; ++i) {
                if (i == j || i == j + 1) continue;
                DOElement r = commutator(z[i], s[j]);
                if (!r.is_zero()) { ok = false; wit = witness_pair(i, j, r); }
            }
    });

    sweep("cross relation z_j s_j = s_j z_{j+1} - ctilde_j", [&](bool& ok, std::string& wit) {
        for (unsigned j = 0; j + 1 < n && ok; ++j) {
            DOElement r = nf_mul(z[j], s[j]) - nf_mul(s[j], z[j + 1]) +
                          DOElement::of_group_algebra(d, d.cross_parameter(j));
            if (!r.is_zero()) { ok = false; wit = witness_pair(j, j, r); }
        }
    });

    /* Jucys-Murphy layer, checked in the group algebra itself */
    auto M = [&](unsigned i1) { return jm_element(m, n, L, i1); };
    auto Mb = [&](unsigned i1) { return jm_bar_element(m, n, L, i1); };
    auto S = [&](unsigned k0) { return GroupAlgebraElement::of(g_simple(m, n, k0), L); };

    sweep("jm sums commute pairwise", [&](bool& ok, std::string& wit) {
        for (unsigned i = 1; i <= n && ok; ++i)
            for (unsigned j = i + 1; j <= n && ok; ++j) {
                GroupAlgebraElement a = M(i) * M(j) - M(j) * M(i);
                GroupAlgebraElement b = Mb(i) * Mb(j) - Mb(j) * Mb(i);
                if (!a.is_zero() || !b.is_zero()) {
                    ok = false;
                    wit = "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
    });

    sweep("jm cross relations against simple reflections", [&](bool& ok, std::string& wit) {
        for (unsigned j = 0; j + 1 < n && ok; ++j) {
            GroupAlgebraElement eps = eps_element(m, n, L, j + 1, j + 2);
            GroupAlgebraElement a = S(j) * M(j + 1) - M(j + 2) * S(j) + eps;
            GroupAlgebraElement b = S(j) * Mb(j + 1) - Mb(j + 2) * S(j) - eps;
            if (!a.is_zero() || !b.is_zero()) {
                ok = false;
                wit = "j=" + std::to_string(j + 1) + ": " +
                      clip_witness((a.is_zero() ? b : a).to_string());
            }
        }
    });

    sweep("jm sums commute with distant reflections and the torus", [&](bool& ok, std::string& wit) {
        for (unsigned i = 1; i <= n && ok; ++i) {
            for (unsigned j = 0; j + 1 < n && ok; ++j) {
                if (i == j + 1 || i == j + 2) continue;
                GroupAlgebraElement a = S(j) * M(i) - M(i) * S(j);
                GroupAlgebraElement b = S(j) * Mb(i) - Mb(i) * S(j);
                if (!a.is_zero() || !b.is_zero()) {
                    ok = false;
                    wit = "reflection j=" + std::to_string(j + 1) + ", i=" + std::to_string(i);
                }
            }
            for (unsigned k = 0; k < n && ok; ++k) {
                GroupAlgebraElement t = GroupAlgebraElement::of(g_torus(m, n, k, 1), L);
                GroupAlgebraElement a = t * M(i) - M(i) * t;
                GroupAlgebraElement b = t * Mb(i) - Mb(i) * t;
                if (!a.is_zero() || !b.is_zero()) {
                    ok = false;
                    wit = "torus k=" + std::to_string(k + 1) + ", i=" + std::to_string(i);
                }
            }
        }
    });

    sweep("eps products: eps^2 = m eps, epshat^2 = m eps, epshat eps = m epshat",
          [&](bool& ok, std::string& wit) {
              for (unsigned i = 1; i <= n && ok; ++i)
                  for (unsigned j = i + 1; j <= n && ok; ++j) {
                      GroupAlgebraElement e = eps_element(m, n, L, i, j);
                      GroupAlgebraElement eh = eps_hat_element(m, n, L, i, j);
                      const Rat mm = Rat(long(m));
                      bool good = (e * e == mm * e) && (eh * eh == mm * e) &&
                                  (eh * e == mm * eh) && (e * eh == mm * eh);
                      if (!good) {
                          ok = false;
                          wit = "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
                      }
                  }
          });

    /* first commuting family */
    auto sweep_family = [&](const std::string& label, const std::vector<DOElement>& fam) {
        sweep(label + ": reflections permute the family", [&](bool& ok, std::string& wit) {
            for (unsigned j = 0; j + 1 < n && ok; ++j)
                for (unsigned i = 0; i < n && ok; ++i) {
                    unsigned si = (i == j) ? j + 1 : (i == j + 1 ? j : i);
                    DOElement r = nf_mul(s[j], fam[i]) - nf_mul(fam[si], s[j]);
                    if (!r.is_zero()) { ok = false; wit = witness_pair(i, j, r); }
                }
        });
        sweep(label + ": torus commutes with the family", [&](bool& ok, std::string& wit) {
            for (unsigned k = 0; k < n && ok; ++k)
                for (unsigned i = 0; i < n && ok; ++i) {
                    DOElement r = commutator(gt[k], fam[i]);
                    if (!r.is_zero()) { ok = false; wit = witness_pair(i, k, r); }
                }
        });
    };
    sweep_family("y family", y);
    sweep_family("ybar family", yb);

    auto eps_hat_do = [&](unsigned i0, unsigned j0) {
        if (d.mode == GGHMode::typeA_hecke)
            return DOElement::of_group(d, g_transposition(m, n, i0, j0));
        return DOElement::of_group_algebra(d, eps_hat_element(m, n, L, i0 + 1, j0 + 1));
    };

    sweep("y family: commutators, group factor on the left", [&](bool& ok, std::string& wit) {
        for (unsigned i = 0; i < n && ok; ++i)
            for (unsigned j = i + 1; j < n && ok; ++j) {
                DOElement r = commutator(y[i], y[j]) -
                              coef * nf_mul(eps_hat_do(i, j), y[i] - y[j]);
                if (!r.is_zero()) { ok = false; wit = witness_pair(i, j, r); }
            }
    });
    sweep("y family: commutators, group factor on the right", [&](bool& ok, std::string& wit) {
        for (unsigned i = 0; i < n && ok; ++i)
            for (unsigned j = i + 1; j < n && ok; ++j) {
                DOElement r = commutator(y[i], y[j]) -
                              coef * nf_mul(y[j] - y[i], eps_hat_do(i, j));
                if (!r.is_zero()) { ok = false; wit = witness_pair(i, j, r); }
            }
    });
    sweep("ybar family: commutators, group factor on the left", [&](bool& ok, std::string& wit) {
        for (unsigned i = 0; i < n && ok; ++i)
            for (unsigned j = i + 1; j < n && ok; ++j) {
                DOElement r = commutator(yb[i], yb[j]) +
                              coef * nf_mul(eps_hat_do(i, j), yb[i] - yb[j]);
                if (!r.is_zero()) { ok = false; wit = witness_pair(i, j, r); }
            }
    });
    sweep("ybar family: commutators, group factor on the right", [&](bool& ok, std::string& wit) {
        for (unsigned i = 0; i < n && ok; ++i)
            for (unsigned j = i + 1; j < n && ok; ++j) {
                DOElement r = commutator(yb[i], yb[j]) -
                              coef * nf_mul(yb[i] - yb[j], eps_hat_do(i, j));
                if (!r.is_zero()) { ok = false; wit = witness_pair(i, j, r); }
            }
    });

    /* balanced family: group-equivariant, commutators land in the group algebra */
    sweep("balanced family: conjugation permutes the family", [&](bool& ok, std::string& wit) {
        for (unsigned j = 0; j + 1 < n && ok; ++j)
            for (unsigned i = 0; i < n && ok; ++i) {
                unsigned si = (i == j) ? j + 1 : (i == j + 1 ? j : i);
                DOElement r = conjugate(zt[i], g_simple(m, n, j)) - zt[si];
                if (!r.is_zero()) { ok = false; wit = witness_pair(i, j, r); }
            }
        for (unsigned k = 0; k < n && ok; ++k)
            for (unsigned i = 0; i < n && ok; ++i) {
                DOElement r = commutator(gt[k], zt[i]);
                if (!r.is_zero()) { ok = false; wit = witness_pair(i, k, r); }
            }
    });

    sweep("balanced family: commutators are z-free", [&](bool& ok, std::string& wit) {
        for (unsigned i = 0; i < n && ok; ++i)
            for (unsigned j = i + 1; j < n && ok; ++j) {
                DOElement r = commutator(zt[i], zt[j]);
                if (r.z_degree() != 0) { ok = false; wit = witness_pair(i, j, r); }
            }
    });

    /* flip involution */
    if (d.mode == GGHMode::dunkl_opdam) {
        sweep("flip involution: squares to the identity and respects products",
              [&](bool& ok, std::string& wit) {
                  std::mt19937 rng(777);
                  for (unsigned t = 0; t < 12 && ok; ++t) {
                      DOElement a = random_element(d, rng);
                      DOElement b = random_element(d, rng);
                      if (flip_involution(flip_involution(a)) != a) {
                          ok = false;
                          wit = "square roundtrip failed on a random element";
                          break;
                      }
                      if (flip_involution(nf_mul(a, b)) !=
                          nf_mul(flip_involution(a), flip_involution(b))) {
                          ok = false;
                          wit = "multiplicativity failed on a random pair";
                      }
                  }
              });

        sweep("flip involution: swaps the jm sums and the two families",
              [&](bool& ok, std::string& wit) {
                  const Scalar kap = Scalar::kappa(L);
                  for (unsigned i = 1; i <= n && ok; ++i) {
                      DOElement lhs = flip_involution(DOElement::of_group_algebra(d, kap * M(i)));
                      DOElement rhs = DOElement::of_group_algebra(d, kap * Mb(n + 1 - i));
                      if (lhs != rhs) {
                          ok = false;
                          wit = "jm sum i=" + std::to_string(i);
                          break;
                      }
                      if (flip_involution(y[i - 1]) != -yb[n - i]) {
                          ok = false;
                          wit = "y family i=" + std::to_string(i);
                          break;
                      }
                      if (flip_involution(zt[i - 1]) != -zt[n - i]) {
                          ok = false;
                          wit = "balanced family i=" + std::to_string(i);
                      }
                  }
              });

        sweep("torus augmentation is multiplicative onto type A at parameter m kappa",
              [&](bool& ok, std::string& wit) {
                  std::vector<DOElement> gens;
                  for (unsigned i = 0; i < n; ++i) gens.push_back(z[i]);
                  for (unsigned k = 0; k + 1 < n; ++k) gens.push_back(s[k]);
                  for (unsigned k = 0; k < n; ++k) gens.push_back(gt[k]);
                  for (const DOElement& a : gens) {
                      for (const DOElement& b : gens) {
                          if (torus_augmentation(nf_mul(a, b)) !=
                              nf_mul(torus_augmentation(a), torus_augmentation(b))) {
                              ok = false;
                              wit = "generator pair " + clip_witness(a.to_string(), 60) + " , " +
                                    clip_witness(b.to_string(), 60);
                              return;
                          }
                      }
                  }
              });
    }

    return rep;
}

/* ------------------------------------------------------------------ */
/* Drinfeld-type conditions on the extracted forms                    */
/* ------------------------------------------------------------------ */

/*
 * Evaluates, exactly, the three conditions under which a family of
 * alternating forms b_g defines a PBW deformation supported on the
 * codimension-two subvariety:
 *
 *   (1) b_{g^{-1} h g}(u, v) = b_h(rho(g) u, rho(g) v) for group
 *       generators g and all h in the support;
 *   (2) for g in the support acting nontrivially, the radical of b_g
 *       is exactly the fixed space of rho(g), which has codimension 2;
 *   (3) for such g and every h centralizing g, the action of h on the
 *       moved plane of rho(g) has determinant 1.
 *
 * rho is the n-dimensional monomial representation with the torus
 * acting trivially (the permutation action).  The report records what
 * holds; it attaches no interpretation.
 */
inline CheckReport drinfeld_conditions(const GGHDescriptor& d, const BForms& b) {
    CheckReport rep;
    const unsigned m = d.m, n = d.n, L = d.L;

    std::vector<GmnElement> gens;
    for (unsigned k = 0; k + 1 < n; ++k) gens.push_back(g_simple(m, n, k));
    if (m > 1)
        for (unsigned i = 0; i < n; ++i) gens.push_back(g_torus(m, n, i, 1));

    {
        bool ok = true;
        std::string wit;
        for (const GmnElement& h : b.support()) {
            for (const GmnElement& g : gens) {
                const GmnElement hc = g_mul(g_inverse(g), g_mul(h, g));
                for (unsigned u = 0; u < n && ok; ++u)
                    for (unsigned v = 0; v < n && ok; ++v)
                        if (b.value(hc, u, v) != b.value(h, g.perm[u], g.perm[v])) {
                            ok = false;
                            wit = "h=" + g_to_string(h) + ", g=" + g_to_string(g);
                        }
                if (!ok) break;
            }
            if (!ok) break;
        }
        rep.add("condition 1: conjugation equivariance of the forms", ok, wit);
    }

    for (const GmnElement& g : b.support()) {
        if (g.is_torus()) continue;
        const Matrix P = perm_matrix(g, L);
        const Matrix I = Matrix::identity(L, n);
        const Subspace fix = kernel(P - I);

        bool codim_ok = (fix.dim() == n - 2);
        rep.add("condition 2a: fixed space of " + g_to_string(g) + " has codimension 2", codim_ok,
                codim_ok ? "" : "dim = " + std::to_string(fix.dim()));

        {
            bool ok = true;
            std::string wit;
            for (unsigned r = 0; r < fix.dim() && ok; ++r) {
                for (unsigned row = 0; row < n && ok; ++row) {
                    Scalar acc(L);
                    for (unsigned col = 0; col < n; ++col) {
                        const Cyclotomic& uc = fix.basis().at(r, col);
                        if (uc.is_zero()) continue;
                        acc += b.value(g, row, col) * Scalar(uc);
                    }
                    if (!acc.is_zero()) {
                        ok = false;
                        wit = "fixed vector #" + std::to_string(r) + " escapes the radical";
                    }
                }
            }
            /* rank <= 2 for an alternating matrix == all 4x4 sub-Pfaffians vanish */
            for (unsigned i = 0; i < n && ok; ++i)
                for (unsigned j = i + 1; j < n && ok; ++j)
                    for (unsigned k = j + 1; k < n && ok; ++k)
                        for (unsigned l = k + 1; l < n && ok; ++l) {
                            Scalar pf = b.value(g, i, j) * b.value(g, k, l) -
                                        b.value(g, i, k) * b.value(g, j, l) +
                                        b.value(g, i, l) * b.value(g, j, k);
                            if (!pf.is_zero()) {
                                ok = false;
                                wit = "a 4x4 sub-Pfaffian is nonzero";
                            }
                        }
            rep.add("condition 2b: radical of the form at " + g_to_string(g) +
                        " equals the fixed space",
                    ok, wit);
        }

        {
            const Subspace moved = column_space(I - P);
            bool ok = true;
            std::string wit;
            for (const GmnElement& h : all_elements(m, n)) {
                if (g_mul(h, g) != g_mul(g, h)) continue;
                const Matrix Q = perm_matrix(h, L);
                bool invariant = true;
                for (unsigned r = 0; r < moved.dim() && invariant; ++r)
                    invariant = moved.contains(Q.apply(moved.basis().row(r)));
                if (!invariant) {
                    ok = false;
                    wit = "centralizing h=" + g_to_string(h) + " does not preserve the moved plane";
                    break;
                }
                Cyclotomic det = determinant(restrict_to(Q, moved));
                if (det != Cyclotomic(L, Rat(1))) {
                    ok = false;
                    wit = "centralizing h=" + g_to_string(h) + " has determinant " + "!= 1 on the moved plane";
                    break;
                }
            }
            rep.add("condition 3: centralizer of " + g_to_string(g) +
                        " acts with determinant 1 on the moved plane",
                    ok, wit);
        }
    }

    return rep;
}

/* ------------------------------------------------------------------ */
/* Casimir and cover data for the Dirac layer                         */
/* ------------------------------------------------------------------ */

struct CoverTerm {
    GmnElement g;
    std::vector<long> alpha_hat, beta_hat; /* integer roots, squared length 2 */
    Scalar b_ab;                           /* form value on the unit-normalized pair */
    Rat inner;                             /* pairing of the unit-normalized pair */
    Scalar c_coeff;                        /* coefficient of g (x) word in the lifted Casimir */
    Scalar e_coeff;                        /* scalar shift subtracted in omega_H */
    CliffordElement word;                  /* product alpha beta in the Clifford algebra */
};

struct CasimirData {
    DOElement h;       /* sum of squares of the balanced family */
    DOElement omega_H; /* h minus the scalar shifts over the support */
    std::vector<CoverTerm> cover;
    std::vector<std::pair<GmnElement, unsigned>> skipped; /* (element, fixed-space dim) */
};

namespace detail {

inline std::vector<std::vector<unsigned>> nontrivial_cycles(const std::vector<unsigned>& perm) {
    std::vector<std::vector<unsigned>> out;
    std::vector<bool> seen(perm.size(), false);
    for (unsigned a = 0; a < perm.size(); ++a) {
        if (seen[a] || perm[a] == a) continue;
        std::vector<unsigned> cyc;
        unsigned cur = a;
        while (!seen[cur]) {
            seen[cur] = true;
            cyc.push_back(cur);
            cur = perm[cur];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

} // namespace detail

/*
 * For each support element whose permutation part moves exactly a
 * codimension-two subspace (one 3-cycle, or two disjoint
 * transpositions), pick the canonical integer root pair alpha_hat,
 * beta_hat whose reflections compose to the permutation, and package
 * the lifted Casimir coefficients
 *
 *   c = b(alpha, beta) / (1 - <alpha, beta>^2),
 *   e = c <alpha, beta>,
 *
 * on the unit-normalized pair alpha = alpha_hat / sqrt(2).  Support
 * elements outside these two shapes are reported as skipped.
 */
inline CasimirData casimirs(const GGHDescriptor& d, const BForms& b) {
    CasimirData out;
    out.h = DOElement(d);
    for (unsigned i = 1; i <= d.n; ++i) {
        DOElement zi = build_family(d, Family::ztilde, i);
        out.h += nf_mul(zi, zi);
    }
    out.omega_H = out.h;

    for (const GmnElement& g : b.support()) {
        if (g.is_torus()) continue;
        const auto cycles = detail::nontrivial_cycles(g.perm);
        unsigned moved = 0;
        for (const auto& c : cycles) moved += unsigned(c.size()) - 1;

        std::vector<long> ah(d.n, 0), bh(d.n, 0);
        if (cycles.size() == 1 && cycles[0].size() == 3) {
            const auto& c = cycles[0];
            ah[c[0]] = 1; ah[c[1]] = -1;
            bh[c[1]] = 1; bh[c[2]] = -1;
        } else if (cycles.size() == 2 && cycles[0].size() == 2 && cycles[1].size() == 2) {
            ah[cycles[0][0]] = 1; ah[cycles[0][1]] = -1;
            bh[cycles[1][0]] = 1; bh[cycles[1][1]] = -1;
        } else {
            out.skipped.emplace_back(g, d.n - moved);
            continue;
        }

        CoverTerm term;
        term.g = g;
        term.alpha_hat = ah;
        term.beta_hat = bh;

        Scalar raw(d.L);
        long dot = 0;
        for (unsigned u = 0; u < d.n; ++u) {
            dot += ah[u] * bh[u];
            if (ah[u] == 0) continue;
            for (unsigned v = 0; v < d.n; ++v) {
                if (bh[v] == 0) continue;
                raw += Rat(ah[u] * bh[v]) * b.value(g, u, v);
            }
        }
        term.b_ab = Rat(1, 2) * raw;
        term.inner = Rat(dot, 2);

        const Rat denom = Rat(1) - term.inner * term.inner;
        term.c_coeff = (Rat(1) / denom) * term.b_ab;
        term.e_coeff = term.inner * term.c_coeff;

        CliffordElement va(d.n, d.L), vb(d.n, d.L);
        for (unsigned u = 0; u < d.n; ++u) {
            if (ah[u] != 0) va += Rat(ah[u]) * CliffordElement::generator(d.n, d.L, u + 1);
            if (bh[u] != 0) vb += Rat(bh[u]) * CliffordElement::generator(d.n, d.L, u + 1);
        }
        term.word = Rat(1, 2) * (va * vb);

        out.omega_H -= term.e_coeff * DOElement::of_group(d, g);
        out.cover.push_back(std::move(term));
    }

    return out;
}

} // namespace gghlab
