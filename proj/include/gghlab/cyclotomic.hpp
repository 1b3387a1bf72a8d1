/*
 * cyclotomic.hpp
 *
 * Exact arithmetic in the cyclotomic field Q(zeta_L).
 *
 * An element is stored as a rational coefficient vector of length
 * phi(L) representing a polynomial in zeta of degree < phi(L), the
 * canonical representative modulo the L-th cyclotomic polynomial
 * Phi_L.  Phi_L itself is obtained by exact division of x^L - 1 by
 * the Phi_d of the proper divisors d of L.
 *
 * Equality is coefficient equality of canonical representatives.
 * Mixing orders is an error; callers embed into a common order first
 * (see Cyclotomic::embedded).
 *
 * real_sign() decides the sign of a conjugation-fixed element exactly:
 * zero is decided by the canonical form, and a nonzero value is
 * separated from zero by interval evaluation at escalating precision,
 * with a terminating floor derived from the field norm.
 */

#pragma once

#include "gghlab/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <vector>

namespace gghlab {

inline unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace detail {

/* Quotient of exact polynomial division; requires divisor monic and remainder zero. */
inline std::vector<Rat> poly_divide_exact(std::vector<Rat> num, const std::vector<Rat>& den) {
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) throw std::logic_error("poly_divide_exact: degree underflow");
    std::vector<Rat> quot(num.size() - dn);
    for (std::size_t k = num.size(); k-- > dn;) {
        Rat q = num[k];
        quot[k - dn] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= q * den[j];
    }
    for (const Rat& r : num)
        if (!r.is_zero()) throw std::logic_error("poly_divide_exact: nonzero remainder");
    return quot;
}

inline const std::vector<Rat>& cyclotomic_polynomial(unsigned L) {
    static std::map<unsigned, std::vector<Rat>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);

    // Non-recursive worklist so the cache lock stays simple.
    std::vector<unsigned> need{L};
    while (!need.empty()) {
        unsigned n = need.back();
        if (cache.count(n)) { need.pop_back(); continue; }
        bool ready = true;
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0 && !cache.count(d)) { need.push_back(d); ready = false; }
        if (!ready) continue;
        need.pop_back();
        std::vector<Rat> poly(n + 1);      // x^n - 1
        poly[0] = Rat(-1);
        poly[n] = Rat(1);
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0) poly = poly_divide_exact(std::move(poly), cache.at(d));
        cache.emplace(n, std::move(poly));
    }
    return cache.at(L);
}

} // namespace detail

class Cyclotomic {
public:
    Cyclotomic() : L_(1), c_(1, Rat(0)) {}
    explicit Cyclotomic(unsigned L) : L_(check_order(L)), c_(euler_phi(L), Rat(0)) {}
    Cyclotomic(unsigned L, const Rat& r) : Cyclotomic(L) { c_[0] = r; }

    /* zeta_L^k */
    static Cyclotomic zeta(unsigned L, long k = 1) {
        Cyclotomic out(L);
        long e = ((k % long(L)) + long(L)) % long(L);
        std::vector<Rat> poly(std::size_t(e) + 1);
        poly[std::size_t(e)] = Rat(1);
        out.c_ = reduce(L, std::move(poly));
        return out;
    }

    unsigned order() const { return L_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r.is_zero(); });
    }
    bool is_rational() const {
        for (std::size_t j = 1; j < c_.size(); ++j)
            if (!c_[j].is_zero()) return false;
        return true;
    }
    /* Rational value; requires is_rational(). */
    Rat rational_value() const {
        if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
        return c_[0];
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        check_same(a, b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
    /* Lexicographic order on (L, coefficients); used for canonical sorting only. */
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.L_ != b.L_) return a.L_ < b.L_;
        return a.c_ < b.c_;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        check_same(a, b);
        Cyclotomic out = a;
        for (std::size_t j = 0; j < out.c_.size(); ++j) out.c_[j] += b.c_[j];
        return out;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        check_same(a, b);
        Cyclotomic out = a;
        for (std::size_t j = 0; j < out.c_.size(); ++j) out.c_[j] -= b.c_[j];
        return out;
    }
    Cyclotomic operator-() const {
        Cyclotomic out = *this;
        for (Rat& r : out.c_) r = -r;
        return out;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        check_same(a, b);
        std::vector<Rat> prod(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                prod[i + j] += a.c_[i] * b.c_[j];
            }
        }
        Cyclotomic out(a.L_);
        out.c_ = reduce(a.L_, std::move(prod));
        return out;
    }
    friend Cyclotomic operator*(const Rat& r, const Cyclotomic& a) {
        Cyclotomic out = a;
        for (Rat& x : out.c_) x *= r;
        return out;
    }
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

    /* Multiplicative inverse via the extended Euclidean algorithm against Phi_L. */
    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero cyclotomic");
        // r0 = Phi_L, r1 = this; maintain r_k = t_k * this (mod Phi_L).
        std::vector<Rat> r0 = detail::cyclotomic_polynomial(L_), r1 = trimmed(c_);
        std::vector<Rat> t0, t1{Rat(1)};
        while (true) {
            if (r1.size() == 1) { // unit remainder: scale t1 by 1/r1
                Cyclotomic out(L_);
                Rat inv_lead = Rat(1) / r1[0];
                out.c_ = reduce(L_, std::move(t1));
                for (Rat& x : out.c_) x *= inv_lead;
                return out;
            }
            // divide r0 by r1
            std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0);
            std::vector<Rat> rem = r0;
            for (std::size_t k = rem.size(); k-- > r1.size() - 1;) {
                if (k + 1 < r1.size()) break;
                Rat f = rem[k] / r1.back();
                q[k - (r1.size() - 1)] = f;
                if (f.is_zero()) continue;
                for (std::size_t j = 0; j < r1.size(); ++j) rem[k - (r1.size() - 1) + j] -= f * r1[j];
            }
            rem = trimmed(rem);
            if (rem.size() == 1 && rem[0].is_zero())
                throw std::logic_error("cyclotomic inverse: common factor with Phi_L");
            // t_next = t0 - q * t1
            std::vector<Rat> tn(std::max(t0.size(), q.size() + t1.size() - 1));
            for (std::size_t j = 0; j < t0.size(); ++j) tn[j] = t0[j];
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (q[i].is_zero()) continue;
                for (std::size_t j = 0; j < t1.size(); ++j) tn[i + j] -= q[i] * t1[j];
            }
            r0 = std::move(r1); r1 = std::move(rem);
            t0 = std::move(t1); t1 = trimmed(tn);
        }
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    /* Field automorphism zeta -> zeta^a, gcd(a, L) = 1. */
    Cyclotomic automorphism(unsigned a) const {
        if (std::gcd(a, L_) != 1) throw std::invalid_argument("automorphism exponent not coprime to order");
        std::vector<Rat> poly(L_ ? L_ : 1);
        if (poly.size() < c_.size()) poly.resize(c_.size());
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (c_[j].is_zero()) continue;
            poly[(j * a) % L_] += c_[j];
        }
        Cyclotomic out(L_);
        out.c_ = reduce(L_, std::move(poly));
        return out;
    }

    /* Complex conjugation, zeta -> zeta^{-1}. */
    Cyclotomic conj() const { return L_ == 1 ? *this : automorphism(L_ - 1); }

    bool is_real() const { return *this == conj(); }

    /* Canonical image in Q(zeta_M) for L | M. */
    Cyclotomic embedded(unsigned M) const {
        if (M % L_ != 0)
            throw std::invalid_argument("cyclotomic embed: target order not a multiple of source order");
        if (M == L_) return *this;
        unsigned step = M / L_;
        std::vector<Rat> poly(M);
        for (std::size_t j = 0; j < c_.size(); ++j) poly[j * step] = c_[j];
        Cyclotomic out(M);
        out.c_ = reduce(M, std::move(poly));
        return out;
    }

    /* Field norm down to Q (product over all automorphisms). */
    Rat norm() const {
        Cyclotomic prod(L_, Rat(1));
        for (unsigned a = 1; a <= L_; ++a)
            if (std::gcd(a, L_) == 1) prod *= automorphism(a % L_ == 0 ? 1 : a);
        return prod.rational_value();
    }

    /*
     * Sign (-1, 0, +1) of a conjugation-fixed element.  Exact zero test
     * first; otherwise certified interval evaluation of
     * sum_j c_j cos(2 pi j / L) with escalating precision.  The loop is
     * guaranteed to terminate: |x| is bounded below by
     * |Norm(x)| / prod_{a != 1} (sum |coeffs of automorphism image|).
     */
    int real_sign() const {
        if (is_zero()) return 0;
        if (!is_real()) throw std::domain_error("real_sign of an element not fixed by conjugation");
        if (is_rational()) return c_[0].sign();

        Rat conj_bound(1);
        for (unsigned a = 2; a < L_; ++a) {
            if (std::gcd(a, L_) != 1) continue;
            Rat s(0);
            for (const Rat& r : automorphism(a).c_) s += rat_abs(r);
            conj_bound *= s;
        }
        Rat floor_rat = rat_abs(norm()) / conj_bound; // |x| >= floor_rat > 0

        Rat coeff_sum(1);
        for (const Rat& r : c_) coeff_sum += rat_abs(r);
        const Rat slack = coeff_sum * Rat(L_ + 8 * unsigned(c_.size()) + 64) * Rat(1000000);

        if (auto s = try_sign<std::int64_t, 50>(slack, floor_rat)) return *s;
        if (auto s = try_sign<std::int64_t, 120>(slack, floor_rat)) return *s;
        if (auto s = try_sign<std::int64_t, 300>(slack, floor_rat)) return *s;
        if (auto s = try_sign<std::int64_t, 800>(slack, floor_rat)) return *s;
        if (auto s = try_sign<std::int64_t, 2000>(slack, floor_rat)) return *s;
        throw std::logic_error("real_sign: precision escalation exhausted"); // unreachable: floor triggers first
    }

private:
    unsigned L_;
    std::vector<Rat> c_;

    static unsigned check_order(unsigned L) {
        if (L == 0) throw std::invalid_argument("cyclotomic order must be positive");
        return L;
    }
    static void check_same(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.L_ != b.L_)
            throw std::invalid_argument("cyclotomic order mismatch; embed both into the lcm order first");
    }
    static std::vector<Rat> trimmed(std::vector<Rat> v) {
        while (v.size() > 1 && v.back().is_zero()) v.pop_back();
        if (v.empty()) v.assign(1, Rat(0));
        return v;
    }

    /* Remainder of poly modulo Phi_L, padded to length phi(L). */
    static std::vector<Rat> reduce(unsigned L, std::vector<Rat> poly) {
        const std::vector<Rat>& phi_poly = detail::cyclotomic_polynomial(L);
        const std::size_t deg = phi_poly.size() - 1;
        for (std::size_t k = poly.size(); k-- > deg;) {
            Rat f = poly[k];
            if (f.is_zero()) continue;
            poly[k] = Rat(0);
            for (std::size_t j = 0; j < deg; ++j) poly[k - deg + j] -= f * phi_poly[j];
        }
        poly.resize(deg, Rat(0));
        return poly;
    }

    template <typename Tag, unsigned Digits>
    std::optional<int> try_sign(const Rat& slack, const Rat& floor_rat) const {
        using F = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>>;
        const F two_pi = 2 * boost::math::constants::pi<F>();
        F v(0);
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (c_[j].is_zero()) continue;
            v += F(c_[j]) * cos(two_pi * F(j) / F(L_));
        }
        const Rat bound_rat = slack / rat_pow(Rat(10), Digits);
        const F bound(bound_rat);
        if (v > bound) return 1;
        if (v < -bound) return -1;
        // |x| >= floor_rat and |v - x| <= bound < floor_rat / 2 would force |v| > bound
        if (bound_rat * 2 < floor_rat)
            throw std::logic_error("real_sign: certified bounds inconsistent");
        return std::nullopt;
    }
};

} // namespace gghlab
