#pragma once

// Text grammar for polynomial input and the matching canonical printer.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | power
//   power  := atom ('^' INT)?
//   atom   := INT | INT '/' INT | 'x' | 'y' | '(' expr ')'
//
// Implicit multiplication is rejected; exponents are nonnegative decimal
// integers; '/' appears only inside rational literals.

#include <cctype>
#include <sstream>
#include <string>

#include "tamesym/polynomial.hpp"

namespace tamesym {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Coefficient builders: turn an integer literal a/b into a field element.
struct RationalField {
    using Scalar = Rational;
    Rational from_literal(const Integer& num, const Integer& den) const {
        if (sign(den) == 0) throw std::domain_error("zero denominator in literal");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
};

struct PrimeField {
    using Scalar = Fp;
    std::uint64_t p;
    Fp from_literal(const Integer& num, const Integer& den) const {
        Fp d(den, p);
        if (d.is_zero()) throw std::domain_error("coefficient not in field: denominator divisible by " + std::to_string(p));
        return Fp(num, p) / d;
    }
};

namespace detail {

template <class Field>
class PolyParser {
public:
    using K = typename Field::Scalar;

    PolyParser(std::string_view text, const Field& field) : s_(text), field_(field) {}

    Polynomial<K> run() {
        Polynomial<K> p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    Integer integer_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected integer", pos_);
        return Integer(std::string(s_.substr(start, pos_ - start)), 10);
    }

    Polynomial<K> expr() {
        Polynomial<K> acc = term();
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    Polynomial<K> term() {
        Polynomial<K> acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    Polynomial<K> factor() {
        if (accept('-')) return -factor();
        return power();
    }

    Polynomial<K> power() {
        Polynomial<K> base = atom();
        if (accept('^')) {
            Integer e = integer_literal();
            if (sign(e) < 0 || e > 64) throw ParseError("exponent out of range", pos_);
            if (sign(e) == 0) return Polynomial<K>::constant(field_.from_literal(1, 1));
            return base.pow(e.get_ui());
        }
        return base;
    }

    Polynomial<K> atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial<K> p = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (c == 'x' || c == 'y') {
            ++pos_;
            return Polynomial<K>::variable(c == 'x' ? Var::x : Var::y, field_.from_literal(1, 1));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = integer_literal();
            Integer den = 1;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                den = integer_literal();
            }
            try {
                return Polynomial<K>::constant(field_.from_literal(num, den));
            } catch (const std::domain_error& e) {
                throw ParseError(e.what(), pos_);
            }
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    const Field& field_;
};

inline bool coeff_negative(const Rational& c) { return sign(c) < 0; }
inline bool coeff_negative(const Fp&) { return false; }
inline Rational coeff_abs(const Rational& c) { return sign(c) < 0 ? Rational(-c) : c; }
inline Fp coeff_abs(const Fp& c) { return c; }
inline bool coeff_is_one(const Rational& c) { return c == 1; }
inline bool coeff_is_one(const Fp& c) { return c.value() == 1; }

template <class K>
std::string coeff_string(const K& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

} // namespace detail

template <class Field>
Polynomial<typename Field::Scalar> parse_polynomial(std::string_view text, const Field& field) {
    return detail::PolyParser<Field>(text, field).run();
}

inline PolyQ parse_poly_q(std::string_view text) { return parse_polynomial(text, RationalField{}); }
inline PolyFp parse_poly_fp(std::string_view text, std::uint64_t p) {
    return parse_polynomial(text, PrimeField{p});
}

// Canonical form: terms by descending total degree, ties broken by descending
// x-exponent. parse_polynomial(to_string(p)) == p.
template <class K>
std::string to_string(const Polynomial<K>& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<std::pair<int, int>, K>> ts(p.terms().begin(), p.terms().end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : ts) {
        bool neg = detail::coeff_negative(c);
        K a = detail::coeff_abs(c);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool havevar = k.first > 0 || k.second > 0;
        bool printed = false;
        if (!havevar || !detail::coeff_is_one(a)) {
            os << detail::coeff_string(a);
            printed = true;
        }
        auto put = [&](char v, int e) {
            if (e == 0) return;
            if (printed) os << "*";
            os << v;
            if (e > 1) os << "^" << e;
            printed = true;
        };
        put('x', k.first);
        put('y', k.second);
    }
    return os.str();
}

} // namespace tamesym
