/*
 * rational.hpp
 *
 * Exact integer and rational arithmetic used everywhere in the library.
 * Thin aliases over boost::multiprecision plus a few helpers that the
 * higher layers need (parsing, printing, integer powers, sign).
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gghlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rat& r) { return r.sign(); }
inline int sign(const Int& n) { return n.sign(); }

inline Int int_pow(Int base, std::uint64_t e) {
    Int acc{1};
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline Rat rat_pow(const Rat& base, std::uint64_t e) {
    return Rat(int_pow(rat_num(base), e), int_pow(rat_den(base), e));
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline std::string to_string(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

/* Parses "p" or "p/q" with optional leading minus. */
inline Rat parse_rational(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("bad rational literal: " + s); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) bad();
        return Rat(num, den);
    } catch (const std::exception&) {
        bad();
    }
    return Rat(); // unreachable
}

} // namespace gghlab
