/*
 * rootfind.hpp
 *
 * Exact root search in Q(zeta_L) for polynomials with coefficients in
 * the field.  This is the engine behind eigenvalue extraction: all
 * operators handled by the library have split characteristic
 * polynomials by construction, and anything else must surface as a
 * hard error, never as an approximation.
 *
 * Method: reduce the squarefree part modulo a random prime p = 1
 * (mod L) under every embedding zeta -> w^a (w a primitive L-th root
 * in F_p, a ranging over the units of Z/L).  Roots in the field have
 * coordinate vectors obtained from a tuple of per-embedding residues
 * through a Vandermonde solve; coordinates are lifted by rational
 * reconstruction and every candidate is verified exactly in the field
 * before it is accepted.  Verified multiplicities are obtained by
 * exact division.  Larger primes are tried when reconstruction
 * heights fail; a genuinely non-split polynomial keeps a nonlinear
 * leftover factor, which is reported.
 */

#pragma once

#include "gghlab/poly.hpp"

#include <numeric>
#include <random>
#include <set>

namespace gghlab {
namespace modular {

inline Int mod(Int a, const Int& p) {
    a %= p;
    if (a < 0) a += p;
    return a;
}

inline Int pow_mod(Int base, Int e, const Int& p) {
    base = mod(base, p);
    Int acc{1};
    while (e > 0) {
        if ((e & 1) != 0) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return acc;
}

/* Inverse mod p, or 0 when the gcd is not 1 (callers treat as retry). */
inline Int inv_mod(const Int& a, const Int& p) {
    Int r0 = p, r1 = mod(a, p), t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1; r1 = r2; t0 = t1; t1 = t2;
    }
    if (r0 != 1) return Int(0);
    return mod(t0, p);
}

inline bool miller_rabin(const Int& n) {
    if (n < 2) return false;
    for (int sp : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == sp) return true;
        if (n % sp == 0) return false;
    }
    Int d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = pow_mod(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

inline Int random_bits(unsigned bits, std::mt19937_64& rng) {
    Int x = 0;
    for (unsigned got = 0; got < bits; got += 32) x = (x << 32) | unsigned(rng() & 0xFFFFFFFFu);
    x &= (Int(1) << bits) - 1;
    x |= Int(1) << (bits - 1);
    return x;
}

inline Int find_prime_one_mod(unsigned L, unsigned bits, std::mt19937_64& rng) {
    while (true) {
        Int k = random_bits(bits, rng) / L;
        Int p = k * L + 1;
        if (p > 2 && miller_rabin(p)) return p;
    }
}

/* Dense polynomials over F_p: index = degree, entries in [0, p). */
using FPoly = std::vector<Int>;

inline FPoly fp_trim(FPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

inline FPoly fp_mul(const FPoly& a, const FPoly& b, const Int& p) {
    if (a.empty() || b.empty()) return {};
    FPoly out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    return fp_trim(std::move(out));
}

/* Remainder modulo monic f. */
inline FPoly fp_rem(FPoly a, const FPoly& f, const Int& p) {
    if (a.size() < f.size()) return fp_trim(std::move(a));
    for (std::size_t k = a.size(); k-- > f.size() - 1;) {
        Int c = a[k];
        if (c == 0) continue;
        for (std::size_t j = 0; j < f.size(); ++j)
            a[k - (f.size() - 1) + j] = mod(a[k - (f.size() - 1) + j] - c * f[j], p);
    }
    return fp_trim(std::move(a));
}

inline FPoly fp_monic(FPoly f, const Int& p) {
    f = fp_trim(std::move(f));
    if (f.empty()) return f;
    Int inv = inv_mod(f.back(), p);
    for (Int& c : f) c = c * inv % p;
    return f;
}

inline FPoly fp_gcd(FPoly a, FPoly b, const Int& p) {
    a = fp_monic(std::move(a), p);
    b = fp_monic(std::move(b), p);
    while (!b.empty()) {
        FPoly r = fp_rem(std::move(a), b, p);
        a = std::move(b);
        b = fp_monic(std::move(r), p);
    }
    return a;
}

/* base^e modulo monic f. */
inline FPoly fp_pow_mod(FPoly base, Int e, const FPoly& f, const Int& p) {
    FPoly acc{Int(1)};
    base = fp_rem(std::move(base), f, p);
    while (e > 0) {
        if ((e & 1) != 0) acc = fp_rem(fp_mul(acc, base, p), f, p);
        base = fp_rem(fp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return acc;
}

inline FPoly poly_quotient(const FPoly& a, const FPoly& f, const Int& p) {
    // quotient of a by monic f
    FPoly rem = a, quot(a.size() >= f.size() ? a.size() - f.size() + 1 : 0, Int(0));
    for (std::size_t k = rem.size(); k-- > f.size() - 1;) {
        Int c = rem[k];
        if (c == 0) continue;
        quot[k - (f.size() - 1)] = c;
        for (std::size_t j = 0; j < f.size(); ++j)
            rem[k - (f.size() - 1) + j] = mod(rem[k - (f.size() - 1) + j] - c * f[j], p);
    }
    return fp_trim(std::move(quot));
}

inline void fp_split_linear(const FPoly& g, const Int& p, std::mt19937_64& rng, std::vector<Int>& out) {
    if (g.size() <= 1) return;
    if (g.size() == 2) { // monic x + c
        out.push_back(mod(-g[0], p));
        return;
    }
    std::uniform_int_distribution<std::uint64_t> dist;
    while (true) {
        Int t = mod(Int(dist(rng)), p);
        FPoly shifted{t, Int(1)};
        FPoly h = fp_pow_mod(shifted, (p - 1) / 2, g, p);
        if (h.empty()) h = FPoly{Int(0)};
        h[0] = mod(h[0] - 1, p);
        FPoly d = fp_gcd(h, g, p);
        if (!d.empty() && d.size() > 1 && d.size() < g.size()) {
            fp_split_linear(d, p, rng, out);
            fp_split_linear(fp_monic(poly_quotient(g, d, p), p), p, rng, out);
            return;
        }
    }
}

/* All roots in F_p of f (not necessarily squarefree). */
inline std::vector<Int> fp_roots(FPoly f, const Int& p, std::mt19937_64& rng) {
    f = fp_monic(std::move(f), p);
    if (f.size() <= 1) return {};
    FPoly df(f.size() - 1);
    for (std::size_t j = 1; j < f.size(); ++j) df[j - 1] = Int(long(j)) % p * f[j] % p;
    FPoly g = fp_gcd(f, fp_trim(std::move(df)), p);
    if (g.size() > 1) f = fp_monic(poly_quotient(f, g, p), p);
    // keep only the part that splits into linear factors
    FPoly xp = fp_pow_mod(FPoly{Int(0), Int(1)}, p, f, p);
    if (xp.size() < 2) xp.resize(2, Int(0));
    xp[1] = mod(xp[1] - 1, p);
    FPoly lin = fp_gcd(fp_trim(std::move(xp)), f, p);
    std::vector<Int> out;
    fp_split_linear(lin, p, rng, out);
    return out;
}

/* n/d = r (mod p) with |n|, d <= sqrt((p-1)/2), or nothing. */
inline std::optional<Rat> rational_reconstruct(const Int& r, const Int& p) {
    Int bound = boost::multiprecision::sqrt(Int((p - 1) / 2));
    Int u0 = p, u1 = 0, v0 = mod(r, p), v1 = 1;
    while (v0 > bound) {
        Int q = u0 / v0;
        Int w0 = u0 - q * v0, w1 = u1 - q * v1;
        u0 = v0; u1 = v1; v0 = w0; v1 = w1;
    }
    if (v1 == 0) return std::nullopt;
    if (v1 < 0) { v0 = -v0; v1 = -v1; }
    Rat value(v0, v1); // normalizes the gcd
    Int num = rat_num(value), den = rat_den(value);
    if (den > bound || (num < 0 ? -num : num) > bound) return std::nullopt;
    Int den_inv = inv_mod(den, p);
    if (den_inv == 0) return std::nullopt;
    if (mod(num % p * den_inv, p) != mod(r, p)) return std::nullopt;
    return value;
}

} // namespace modular

struct FieldRoots {
    std::vector<std::pair<Cyclotomic, unsigned>> roots; // (root, multiplicity)
    poly::KPoly leftover;                               // monic factor with no roots in the field
    bool split = false;
};

namespace detail {

inline std::vector<unsigned> units_mod(unsigned L) {
    if (L == 1) return {1};
    std::vector<unsigned> out;
    for (unsigned a = 1; a < L; ++a)
        if (std::gcd(a, L) == 1) out.push_back(a);
    return out;
}

inline std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::optional<Int> primitive_root_of_unity(unsigned L, const Int& p, std::mt19937_64& rng) {
    if (L == 1) return Int(1);
    std::vector<unsigned> qs = prime_factors(L);
    std::uniform_int_distribution<std::uint64_t> dist;
    for (int tries = 0; tries < 200; ++tries) {
        Int u = modular::mod(Int(dist(rng)), p);
        if (u < 2) continue;
        Int w = modular::pow_mod(u, (p - 1) / L, p);
        if (w == 1) continue;
        bool ok = true;
        for (unsigned q : qs)
            if (modular::pow_mod(w, Int(L / q), p) == 1) { ok = false; break; }
        if (ok) return w;
    }
    return std::nullopt;
}

/* Coefficient vector of c evaluated at zeta -> zpow, mod p; nullopt when a denominator vanishes. */
inline std::optional<Int> reduce_cyclotomic(const Cyclotomic& c, const Int& zpow, const Int& p) {
    Int acc = 0, power = 1;
    for (const Rat& r : c.coeffs()) {
        if (!r.is_zero()) {
            Int den_inv = modular::inv_mod(rat_den(r) % p, p);
            if (den_inv == 0) return std::nullopt;
            acc = modular::mod(acc + rat_num(r) % p * den_inv % p * power, p);
        }
        power = power * zpow % p;
    }
    return acc;
}

} // namespace detail

/* Roots of P inside Q(zeta_L), with verified multiplicities. */
inline FieldRoots roots_in_field(const poly::KPoly& P) {
    using namespace poly;
    FieldRoots result;
    KPoly p0 = trim(P);
    if (degree(p0) <= 0) {
        result.split = true;
        return result;
    }
    const unsigned L = p0[0].order();
    p0 = monic(p0);
    KPoly sqf = squarefree_part(p0);

    std::set<Cyclotomic> found;
    if (degree(sqf) == 1) {
        found.insert(-sqf[0]);
    } else {
        std::mt19937_64 rng(0x9E3779B97F4A7C15ull ^ (std::uint64_t(L) << 32) ^ std::uint64_t(degree(p0)));
        const std::vector<unsigned> units = detail::units_mod(L);
        const std::size_t phi = units.size();
        for (unsigned bits : {60u, 60u, 61u, 124u, 240u}) {
            Int q = modular::find_prime_one_mod(L, bits, rng);
            auto wOpt = detail::primitive_root_of_unity(L, q, rng);
            if (!wOpt) continue;
            Int w = *wOpt;

            // per-embedding reductions and their F_q roots
            bool bad = false;
            std::vector<std::vector<Int>> emb_roots(phi);
            std::vector<Int> wpow(phi);
            for (std::size_t ai = 0; ai < phi && !bad; ++ai) {
                wpow[ai] = modular::pow_mod(w, Int(units[ai]), q);
                modular::FPoly fbar(sqf.size());
                for (std::size_t j = 0; j < sqf.size(); ++j) {
                    auto c = detail::reduce_cyclotomic(sqf[j], wpow[ai], q);
                    if (!c) { bad = true; break; }
                    fbar[j] = *c;
                }
                if (!bad) emb_roots[ai] = modular::fp_roots(std::move(fbar), q, rng);
            }
            if (bad) continue;

            // enumeration guard
            double combos = double(emb_roots[0].size());
            for (std::size_t ai = 1; ai < phi; ++ai) combos *= double(std::max<std::size_t>(emb_roots[ai].size(), 1));
            if (combos > 2e6) throw std::overflow_error("root search: embedding tuple enumeration too large");

            // Vandermonde matrix V[ai][j] = wpow[ai]^j
            std::vector<std::vector<Int>> V(phi, std::vector<Int>(phi));
            for (std::size_t ai = 0; ai < phi; ++ai) {
                Int pw = 1;
                for (std::size_t j = 0; j < phi; ++j) { V[ai][j] = pw; pw = pw * wpow[ai] % q; }
            }

            std::vector<std::size_t> idx(phi, 0);
            for (const Int& r1 : emb_roots[0]) {
                std::fill(idx.begin(), idx.end(), 0);
                while (true) {
                    std::vector<Int> rhs(phi);
                    rhs[0] = r1;
                    for (std::size_t ai = 1; ai < phi; ++ai) {
                        if (emb_roots[ai].empty()) { rhs.clear(); break; }
                        rhs[ai] = emb_roots[ai][idx[ai]];
                    }
                    if (rhs.empty()) break;

                    // solve V b = rhs mod q
                    std::vector<std::vector<Int>> A = V;
                    std::vector<Int> b = rhs;
                    bool singular = false;
                    for (std::size_t col = 0; col < phi && !singular; ++col) {
                        std::size_t piv = col;
                        while (piv < phi && A[piv][col] == 0) ++piv;
                        if (piv == phi) { singular = true; break; }
                        std::swap(A[piv], A[col]);
                        std::swap(b[piv], b[col]);
                        Int inv = modular::inv_mod(A[col][col], q);
                        for (std::size_t j = col; j < phi; ++j) A[col][j] = A[col][j] * inv % q;
                        b[col] = b[col] * inv % q;
                        for (std::size_t row = 0; row < phi; ++row) {
                            if (row == col || A[row][col] == 0) continue;
                            Int f = A[row][col];
                            for (std::size_t j = col; j < phi; ++j) A[row][j] = modular::mod(A[row][j] - f * A[col][j], q);
                            b[row] = modular::mod(b[row] - f * b[col], q);
                        }
                    }
                    if (!singular) {
                        bool ok = true;
                        Cyclotomic beta(L);
                        for (std::size_t j = 0; j < phi && ok; ++j) {
                            auto coord = modular::rational_reconstruct(b[j], q);
                            if (!coord) ok = false;
                            else beta += *coord * Cyclotomic::zeta(L, long(j));
                        }
                        if (ok && !found.count(beta) && eval(sqf, beta).is_zero()) found.insert(beta);
                    }

                    // advance tuple (positions 1..phi-1)
                    std::size_t ai = 1;
                    for (; ai < phi; ++ai) {
                        if (++idx[ai] < emb_roots[ai].size()) break;
                        idx[ai] = 0;
                    }
                    if (ai == phi || phi == 1) break;
                }
            }

            // verified multiplicities by exact division
            KPoly rem_poly = p0;
            std::vector<std::pair<Cyclotomic, unsigned>> roots;
            for (const Cyclotomic& beta : found) {
                KPoly lin{-beta, Cyclotomic(L, Rat(1))};
                unsigned mult = 0;
                while (true) {
                    auto [quot, rem] = divmod(rem_poly, lin);
                    if (!is_zero(rem)) break;
                    rem_poly = quot;
                    ++mult;
                }
                if (mult) roots.emplace_back(beta, mult);
            }
            if (degree(rem_poly) == 0) {
                result.roots = std::move(roots);
                result.leftover = {};
                result.split = true;
                return result;
            }
            if (!result.split && roots.size() >= result.roots.size()) {
                result.roots = std::move(roots);
                result.leftover = rem_poly;
            }
        }
        return result; // attempts exhausted without full split
    }

    // single distinct root fast path
    KPoly rem_poly = p0;
    const Cyclotomic& beta = *found.begin();
    KPoly lin{-beta, Cyclotomic(L, Rat(1))};
    unsigned mult = 0;
    while (true) {
        auto [quot, rem] = poly::divmod(rem_poly, lin);
        if (!poly::is_zero(rem)) break;
        rem_poly = quot;
        ++mult;
    }
    if (mult) result.roots.emplace_back(beta, mult);
    result.leftover = poly::degree(rem_poly) == 0 ? poly::KPoly{} : rem_poly;
    result.split = poly::degree(rem_poly) <= 0;
    return result;
}

} // namespace gghlab
