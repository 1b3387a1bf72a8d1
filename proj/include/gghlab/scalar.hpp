/*
 * scalar.hpp
 *
 * Coefficient ring for the symbolic layer: polynomials in the formal
 * deformation parameter k (kappa) with coefficients in Q(zeta_L).
 * Kappa is never specialized here; modules evaluate it to a rational
 * via eval().
 *
 * A canonical text form is provided, together with a parser for the
 * same grammar (used by module files and reports):
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := factor (('*' | '/') factor)*
 *   factor := '-'* atom ('^' nat)?
 *   atom   := nat | 'k' | 'z' | '(' expr ')'
 *
 * 'z' is zeta_L for the ambient order L; division requires a k-free
 * divisor.  parse(to_string(x)) == x holds for every Scalar x.
 */

#pragma once

#include "gghlab/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <string>

namespace gghlab {

class Scalar {
public:
    Scalar() : L_(1) {}
    explicit Scalar(unsigned L) : L_(L) {}
    Scalar(unsigned L, const Rat& r) : L_(L) { add_coeff(0, Cyclotomic(L, r)); }
    explicit Scalar(const Cyclotomic& c) : L_(c.order()) { add_coeff(0, c); }

    static Scalar kappa(unsigned L, unsigned deg = 1) {
        Scalar s(L);
        s.add_coeff(deg, Cyclotomic(L, Rat(1)));
        return s;
    }
    static Scalar zeta_value(unsigned L, long k = 1) { return Scalar(Cyclotomic::zeta(L, k)); }
    static Scalar one(unsigned L) { return Scalar(L, Rat(1)); }

    unsigned order() const { return L_; }
    bool is_zero() const { return c_.empty(); }
    unsigned degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }
    bool is_kappa_free() const { return c_.empty() || c_.rbegin()->first == 0; }

    Cyclotomic coeff(unsigned d) const {
        auto it = c_.find(d);
        return it == c_.end() ? Cyclotomic(L_) : it->second;
    }
    const std::map<unsigned, Cyclotomic>& terms() const { return c_; }

    bool is_rational_constant() const {
        return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_rational());
    }
    Rat rational_value() const {
        if (c_.empty()) return Rat(0);
        if (!is_rational_constant()) throw std::domain_error("scalar is not a rational constant");
        return c_.begin()->second.rational_value();
    }

    Cyclotomic eval(const Rat& kappa_value) const {
        Cyclotomic acc(L_);
        for (const auto& [d, coeff] : c_) acc += rat_pow(kappa_value, d) * coeff;
        return acc;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        check_same(a, b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        check_same(a, b);
        Scalar out = a;
        for (const auto& [d, coeff] : b.c_) out.add_coeff(d, coeff);
        return out;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        check_same(a, b);
        Scalar out = a;
        for (const auto& [d, coeff] : b.c_) out.add_coeff(d, -coeff);
        return out;
    }
    Scalar operator-() const {
        Scalar out(L_);
        for (const auto& [d, coeff] : c_) out.c_.emplace(d, -coeff);
        return out;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        check_same(a, b);
        Scalar out(a.L_);
        for (const auto& [da, ca] : a.c_)
            for (const auto& [db, cb] : b.c_) out.add_coeff(da + db, ca * cb);
        return out;
    }
    friend Scalar operator*(const Rat& r, const Scalar& a) {
        Scalar out(a.L_);
        if (r.is_zero()) return out;
        for (const auto& [d, coeff] : a.c_) out.c_.emplace(d, r * coeff);
        return out;
    }
    /* Division by a k-free scalar. */
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        check_same(a, b);
        if (!b.is_kappa_free() || b.is_zero())
            throw std::domain_error("scalar division requires a nonzero k-free divisor");
        Cyclotomic inv = b.coeff(0).inverse();
        Scalar out(a.L_);
        for (const auto& [d, coeff] : a.c_) out.add_coeff(d, coeff * inv);
        return out;
    }
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    Scalar pow(unsigned e) const {
        Scalar acc = one(L_), base = *this;
        while (e) {
            if (e & 1) acc *= base;
            if (e >>= 1) base *= base;
        }
        return acc;
    }

    Scalar embedded(unsigned M) const {
        Scalar out(M);
        for (const auto& [d, coeff] : c_) out.c_.emplace(d, coeff.embedded(M));
        return out;
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (const auto& [d, coeff] : c_) {
            auto [body, negative] = render_coeff(coeff, d);
            if (out.empty())
                out = negative ? "-" + body : body;
            else
                out += (negative ? " - " : " + ") + body;
        }
        return out;
    }

    static Scalar parse(unsigned L, const std::string& text) {
        Parser p{L, text, 0};
        Scalar v = p.expr();
        p.skip_ws();
        if (p.pos != text.size()) p.fail("trailing input");
        return v;
    }

private:
    unsigned L_;
    std::map<unsigned, Cyclotomic> c_;

    static void check_same(const Scalar& a, const Scalar& b) {
        if (a.L_ != b.L_)
            throw std::invalid_argument("scalar order mismatch; embed both into the lcm order first");
    }
    void add_coeff(unsigned d, const Cyclotomic& v) {
        auto it = c_.find(d);
        if (it == c_.end()) {
            if (!v.is_zero()) c_.emplace(d, v);
            return;
        }
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }

    /* Renders one term; returns (text, leading-minus). */
    std::pair<std::string, bool> render_coeff(const Cyclotomic& coeff, unsigned d) const {
        std::string kpart = d == 0 ? "" : (d == 1 ? "k" : "k^" + std::to_string(d));
        if (coeff.is_rational()) {
            Rat r = coeff.rational_value();
            bool neg = r < 0;
            Rat a = rat_abs(r);
            std::string body;
            if (d == 0) body = gghlab::to_string(a);
            else if (a == 1) body = kpart;
            else if (rat_den(a) == 1) body = rat_num(a).str() + "*" + kpart;
            else body = "(" + gghlab::to_string(a) + ")*" + kpart;
            return {body, neg};
        }
        std::string inner;
        const auto& cs = coeff.coeffs();
        for (std::size_t j = 0; j < cs.size(); ++j) {
            if (cs[j].is_zero()) continue;
            bool neg = cs[j] < 0;
            Rat a = rat_abs(cs[j]);
            std::string zpart = j == 0 ? "" : (j == 1 ? "z" : "z^" + std::to_string(j));
            std::string body;
            if (j == 0) body = gghlab::to_string(a);
            else if (a == 1) body = zpart;
            else if (rat_den(a) == 1) body = rat_num(a).str() + "*" + zpart;
            else body = "(" + gghlab::to_string(a) + ")*" + zpart;
            if (inner.empty()) inner = (neg ? "-" : "") + body;
            else inner += (neg ? " - " : " + ") + body;
        }
        std::string body = "(" + inner + ")";
        if (!kpart.empty()) body += "*" + kpart;
        return {body, false};
    }

    struct Parser {
        unsigned L;
        const std::string& s;
        std::size_t pos;

        [[noreturn]] void fail(const std::string& why) const {
            throw std::invalid_argument("scalar literal error at offset " + std::to_string(pos) + ": " + why +
                                        " in \"" + s + "\"");
        }
        void skip_ws() {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        bool eat(char c) {
            skip_ws();
            if (pos < s.size() && s[pos] == c) { ++pos; return true; }
            return false;
        }
        unsigned natural() {
            skip_ws();
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
            unsigned long long v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                v = v * 10 + unsigned(s[pos] - '0');
                if (v > 1000000000ULL) fail("integer too large");
                ++pos;
            }
            return unsigned(v);
        }
        Scalar expr() {
            Scalar v = term();
            while (true) {
                if (eat('+')) v += term();
                else if (eat('-')) v -= term();
                else return v;
            }
        }
        Scalar term() {
            Scalar v = factor();
            while (true) {
                if (eat('*')) v *= factor();
                else if (eat('/')) v = v / factor();
                else return v;
            }
        }
        Scalar factor() {
            bool neg = false;
            while (eat('-')) neg = !neg;
            Scalar v = atom();
            skip_ws();
            if (eat('^')) v = v.pow(natural());
            return neg ? -v : v;
        }
        Scalar atom() {
            skip_ws();
            if (pos >= s.size()) fail("unexpected end of input");
            char c = s[pos];
            if (c == '(') {
                ++pos;
                Scalar v = expr();
                if (!eat(')')) fail("expected ')'");
                return v;
            }
            if (c == 'k') { ++pos; return Scalar::kappa(L); }
            if (c == 'z') { ++pos; return Scalar::zeta_value(L); }
            if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(L, Rat(natural()));
            fail("unexpected character");
        }
    };
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace gghlab
