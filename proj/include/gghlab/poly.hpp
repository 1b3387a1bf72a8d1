/*
 * poly.hpp
 *
 * Dense univariate polynomials over Q(zeta_L), represented as
 * coefficient vectors (index = degree, trimmed, empty = zero).
 * Supplies the division/gcd/squarefree machinery used by minimal
 * polynomials and the field root finder.
 */

#pragma once

#include "gghlab/cyclotomic.hpp"

#include <vector>

namespace gghlab {
namespace poly {

using KPoly = std::vector<Cyclotomic>;

inline KPoly trim(KPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}
inline int degree(const KPoly& p) { return int(p.size()) - 1; }
inline bool is_zero(const KPoly& p) { return p.empty(); }

inline KPoly constant(unsigned L, const Rat& r) {
    if (r.is_zero()) return {};
    return {Cyclotomic(L, r)};
}

inline KPoly add(const KPoly& a, const KPoly& b) {
    KPoly out = a.size() >= b.size() ? a : b;
    const KPoly& small = a.size() >= b.size() ? b : a;
    for (std::size_t j = 0; j < small.size(); ++j) out[j] += small[j];
    return trim(std::move(out));
}

inline KPoly sub(const KPoly& a, const KPoly& b) {
    KPoly out = a;
    if (out.size() < b.size()) out.resize(b.size(), Cyclotomic(b[0].order()));
    for (std::size_t j = 0; j < b.size(); ++j) out[j] -= b[j];
    return trim(std::move(out));
}

inline KPoly mul(const KPoly& a, const KPoly& b) {
    if (a.empty() || b.empty()) return {};
    KPoly out(a.size() + b.size() - 1, Cyclotomic(a[0].order()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return trim(std::move(out));
}

inline KPoly scale(const Cyclotomic& c, const KPoly& a) {
    KPoly out = a;
    for (auto& x : out) x *= c;
    return trim(std::move(out));
}

/* Quotient and remainder; divisor must be nonzero. */
inline std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    if (a.size() < b.size()) return {{}, a};
    Cyclotomic lead_inv = b.back().inverse();
    KPoly rem = a, quot(a.size() - b.size() + 1, Cyclotomic(b[0].order()));
    for (std::size_t k = rem.size(); k-- > b.size() - 1;) {
        Cyclotomic f = rem[k] * lead_inv;
        quot[k - (b.size() - 1)] = f;
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) rem[k - (b.size() - 1) + j] -= f * b[j];
    }
    return {trim(std::move(quot)), trim(std::move(rem))};
}

inline KPoly monic(const KPoly& a) {
    if (a.empty()) return a;
    return scale(a.back().inverse(), a);
}

/* Monic gcd. */
inline KPoly gcd(KPoly a, KPoly b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        KPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : monic(a);
}

inline KPoly derivative(const KPoly& a) {
    if (a.size() <= 1) return {};
    KPoly out(a.size() - 1, Cyclotomic(a[0].order()));
    for (std::size_t j = 1; j < a.size(); ++j) out[j - 1] = Rat(long(j)) * a[j];
    return trim(std::move(out));
}

inline Cyclotomic eval(const KPoly& a, const Cyclotomic& x) {
    Cyclotomic acc(x.order());
    for (std::size_t j = a.size(); j-- > 0;) acc = acc * x + a[j];
    return acc;
}

/* Largest squarefree divisor (monic). */
inline KPoly squarefree_part(const KPoly& a) {
    if (degree(a) <= 1) return a.empty() ? a : monic(a);
    KPoly g = gcd(a, derivative(a));
    return monic(divmod(a, g).first);
}

inline KPoly coefficient_automorphism(const KPoly& a, unsigned e) {
    KPoly out = a;
    for (auto& c : out) c = c.automorphism(e);
    return out;
}

inline std::string to_string(const KPoly& a) {
    if (a.empty()) return "0";
    std::string out;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j].is_zero()) continue;
        std::string coeff = "(";
        const auto& cs = a[j].coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (i) coeff += ",";
            coeff += gghlab::to_string(cs[i]);
        }
        coeff += ")";
        if (!out.empty()) out += " + ";
        out += coeff + (j == 0 ? "" : "*x^" + std::to_string(j));
    }
    return out;
}

} // namespace poly
} // namespace gghlab
