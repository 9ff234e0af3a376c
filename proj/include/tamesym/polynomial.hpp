#pragma once

// Polynomials in at most the two variables x, y over an exact coefficient
// field K (Rational or Fp). Sparse exponent-map representation with a dense
// univariate view; the dense helpers in `uni` carry the heavy univariate
// algorithms (division, gcd, modular powers).

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tamesym/fp.hpp"

namespace tamesym {

enum class Var { x = 0, y = 1 };

inline Var other(Var v) { return v == Var::x ? Var::y : Var::x; }
inline char var_name(Var v) { return v == Var::x ? 'x' : 'y'; }

namespace uni {

// Dense univariate polynomials: c[i] is the coefficient of t^i, no trailing zeros.

template <class K>
void trim(std::vector<K>& c) {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
}

template <class K>
long degree(const std::vector<K>& c) {
    return static_cast<long>(c.size()) - 1; // -1 for the zero polynomial
}

template <class K>
std::vector<K> add(const std::vector<K>& a, const std::vector<K>& b) {
    std::vector<K> r = a;
    if (b.size() > r.size()) r.resize(b.size(), field_zero(b[0]));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = K(r[i] + b[i]);
    trim(r);
    return r;
}

template <class K>
std::vector<K> negate(std::vector<K> a) {
    for (auto& c : a) c = K(-c);
    return a;
}

template <class K>
std::vector<K> sub(const std::vector<K>& a, const std::vector<K>& b) {
    return add(a, negate(b));
}

template <class K>
std::vector<K> mul(const std::vector<K>& a, const std::vector<K>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<K> r(a.size() + b.size() - 1, field_zero(a[0]));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = K(r[i + j] + a[i] * b[j]);
    }
    trim(r);
    return r;
}

template <class K>
std::vector<K> scale(std::vector<K> a, const K& s) {
    for (auto& c : a) c = K(c * s);
    trim(a);
    return a;
}

template <class K>
std::pair<std::vector<K>, std::vector<K>> divmod(const std::vector<K>& a, const std::vector<K>& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    std::vector<K> r = a;
    if (r.size() < b.size()) return {{}, r};
    K lcinv = field_inv(b.back());
    std::vector<K> q(r.size() - b.size() + 1, field_zero(b.back()));
    for (std::size_t k = q.size(); k-- > 0;) {
        if (r.size() < b.size() + k || is_zero(r[b.size() - 1 + k])) continue;
        K f = K(r[b.size() - 1 + k] * lcinv);
        q[k] = f;
        for (std::size_t i = 0; i < b.size(); ++i) r[k + i] = K(r[k + i] - f * b[i]);
    }
    trim(q);
    trim(r);
    return {q, r};
}

template <class K>
std::vector<K> mod(const std::vector<K>& a, const std::vector<K>& b) {
    return divmod(a, b).second;
}

template <class K>
std::vector<K> make_monic(std::vector<K> a) {
    if (a.empty()) return a;
    K leadinv = field_inv(a.back());
    return scale(std::move(a), leadinv);
}

// Monic gcd; gcd(0, 0) = 0.
template <class K>
std::vector<K> gcd(std::vector<K> a, std::vector<K> b) {
    while (!b.empty()) {
        std::vector<K> r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a));
}

template <class K>
std::vector<K> derivative(const std::vector<K>& a) {
    if (a.size() <= 1) return {};
    std::vector<K> r(a.size() - 1, field_zero(a[0]));
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = K(a[i] * field_from_int(static_cast<long>(i), a[0]));
    trim(r);
    return r;
}

template <class K>
K eval(const std::vector<K>& a, const K& t) {
    K acc = field_zero(t);
    for (std::size_t i = a.size(); i-- > 0;) acc = K(acc * t + a[i]);
    return acc;
}

template <class K>
std::vector<K> pow_mod(std::vector<K> base, Integer e, const std::vector<K>& m) {
    std::vector<K> acc{field_one(m.back())};
    base = mod(base, m);
    while (sign(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = mod(mul(acc, base), m);
        base = mod(mul(base, base), m);
        e >>= 1;
    }
    return acc;
}

} // namespace uni

template <class K>
class Polynomial {
public:
    using Key = std::pair<int, int>; // (x exponent, y exponent)

    Polynomial() = default;

    static Polynomial constant(const K& c) {
        Polynomial p;
        if (!tamesym::is_zero(c)) p.terms_[{0, 0}] = c;
        return p;
    }
    static Polynomial monomial(const K& c, int ex, int ey) {
        Polynomial p;
        if (!tamesym::is_zero(c)) p.terms_[{ex, ey}] = c;
        return p;
    }
    static Polynomial variable(Var v, const K& one) {
        return monomial(one, v == Var::x ? 1 : 0, v == Var::x ? 0 : 1);
    }
    static Polynomial from_univariate(Var v, const std::vector<K>& c) {
        Polynomial p;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!tamesym::is_zero(c[i]))
                p.terms_[{v == Var::x ? static_cast<int>(i) : 0, v == Var::x ? 0 : static_cast<int>(i)}] = c[i];
        }
        return p;
    }

    const std::map<Key, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
    }
    // Constant term (needs a field witness for the zero polynomial).
    K constant_value(const K& sample) const {
        auto it = terms_.find({0, 0});
        return it == terms_.end() ? field_zero(sample) : it->second;
    }

    bool uses(Var v) const {
        for (const auto& [k, c] : terms_)
            if ((v == Var::x ? k.first : k.second) > 0) return true;
        return false;
    }
    bool is_univariate_in(Var v) const { return !uses(other(v)); }

    long degree(Var v) const {
        long d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, static_cast<long>(v == Var::x ? k.first : k.second));
        return d;
    }
    long total_degree() const {
        long d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, static_cast<long>(k.first + k.second));
        return d;
    }
    // Smallest total degree of a term (order of vanishing at the origin).
    long order_at_origin() const {
        long d = -1;
        for (const auto& [k, c] : terms_) {
            long t = k.first + k.second;
            if (d < 0 || t < d) d = t;
        }
        return d;
    }

    K coeff(int ex, int ey, const K& sample) const {
        auto it = terms_.find({ex, ey});
        return it == terms_.end() ? field_zero(sample) : it->second;
    }

    // Some nonzero coefficient, usable as a field witness.
    const K& witness() const {
        if (terms_.empty()) throw std::logic_error("witness() on zero polynomial");
        return terms_.begin()->second;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, K(-c));
        return r;
    }
    Polynomial operator-() const {
        Polynomial r;
        for (const auto& [k, c] : terms_) r.terms_[k] = K(-c);
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, K(ca * cb));
        return r;
    }
    Polynomial scaled(const K& s) const {
        Polynomial r;
        if (tamesym::is_zero(s)) return r;
        for (const auto& [k, c] : terms_) r.add_term(k, K(c * s));
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        return lex_less(a.terms_, b.terms_);
    }

    Polynomial pow(unsigned long e) const {
        if (e == 0) {
            if (is_zero()) throw std::domain_error("0^0");
            return constant(field_one(witness()));
        }
        Polynomial acc = *this, base = *this;
        --e;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    std::vector<K> univariate(Var v) const {
        if (!is_univariate_in(v)) throw std::domain_error("polynomial is not univariate");
        std::vector<K> c;
        for (const auto& [k, coeffv] : terms_) {
            std::size_t e = static_cast<std::size_t>(v == Var::x ? k.first : k.second);
            if (c.size() <= e) c.resize(e + 1, field_zero(coeffv));
            c[e] = coeffv;
        }
        uni::trim(c);
        return c;
    }

    // Coefficients with respect to a main variable, as polynomials in the other.
    std::vector<Polynomial> coefficients_in(Var main) const {
        std::vector<Polynomial> c(static_cast<std::size_t>(std::max(0l, degree(main) + 1)));
        for (const auto& [k, coeffv] : terms_) {
            int e = main == Var::x ? k.first : k.second;
            int o = main == Var::x ? k.second : k.first;
            c[static_cast<std::size_t>(e)].add_term(
                {other(main) == Var::x ? o : 0, other(main) == Var::x ? 0 : o}, coeffv);
        }
        return c;
    }
    static Polynomial from_coefficients_in(Var main, const std::vector<Polynomial>& c) {
        Polynomial r;
        for (std::size_t e = 0; e < c.size(); ++e) {
            for (const auto& [k, coeffv] : c[e].terms_) {
                Key kk = k;
                (main == Var::x ? kk.first : kk.second) += static_cast<int>(e);
                r.add_term(kk, coeffv);
            }
        }
        return r;
    }

    K eval(const K& vx, const K& vy) const {
        K acc = field_zero(vx);
        for (const auto& [k, c] : terms_) {
            K t = c;
            for (int i = 0; i < k.first; ++i) t = K(t * vx);
            for (int i = 0; i < k.second; ++i) t = K(t * vy);
            acc = K(acc + t);
        }
        return acc;
    }

    // Substitute a polynomial for one variable.
    Polynomial substitute(Var v, const Polynomial& value) const {
        Polynomial r;
        for (const auto& [k, c] : terms_) {
            int ev = v == Var::x ? k.first : k.second;
            int eo = v == Var::x ? k.second : k.first;
            Polynomial t = monomial(c, other(v) == Var::x ? eo : 0, other(v) == Var::x ? 0 : eo);
            if (ev > 0) t = t * value.pow(static_cast<unsigned long>(ev));
            r += t;
        }
        return r;
    }

    Polynomial derivative(Var v) const {
        Polynomial r;
        for (const auto& [k, c] : terms_) {
            int e = v == Var::x ? k.first : k.second;
            if (e == 0) continue;
            Key kk = k;
            (v == Var::x ? kk.first : kk.second) -= 1;
            r.add_term(kk, K(c * field_from_int(e, c)));
        }
        return r;
    }

    // Division with remainder in a main variable; the divisor's leading
    // coefficient must be an invertible constant.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b, Var main) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        long db = b.degree(main);
        std::vector<Polynomial> bc = b.coefficients_in(main);
        if (!bc[static_cast<std::size_t>(db)].is_constant())
            throw std::domain_error("divmod: leading coefficient is not invertible");
        K lcinv = field_inv(bc[static_cast<std::size_t>(db)].witness());
        Polynomial q, r = a;
        while (!r.is_zero() && r.degree(main) >= db) {
            long dr = r.degree(main);
            std::vector<Polynomial> rc = r.coefficients_in(main);
            Polynomial lead = rc[static_cast<std::size_t>(dr)].scaled(lcinv);
            Polynomial shift = monomial(field_one(lcinv), main == Var::x ? static_cast<int>(dr - db) : 0,
                                        main == Var::x ? 0 : static_cast<int>(dr - db));
            Polynomial qterm = lead * shift;
            q += qterm;
            r -= qterm * b;
        }
        return {q, r};
    }

    // Monic gcd of univariate polynomials over the field.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() && b.is_zero()) return Polynomial();
        Var v = Var::y;
        if (!a.uses(Var::y) && !b.uses(Var::y) && (a.uses(Var::x) || b.uses(Var::x))) v = Var::x;
        if (!a.is_univariate_in(v) || !b.is_univariate_in(v))
            throw std::domain_error("gcd: multivariate input");
        std::vector<K> g = uni::gcd(a.univariate(v), b.univariate(v));
        return from_univariate(v, g);
    }

    Polynomial make_monic(Var main) const {
        if (is_zero()) return *this;
        std::vector<Polynomial> c = coefficients_in(main);
        if (!c.back().is_constant()) throw std::domain_error("make_monic: leading coefficient not constant");
        return scaled(field_inv(c.back().witness()));
    }

private:
    static bool lex_less(const std::map<Key, K>& a, const std::map<Key, K>& b) {
        auto ia = a.begin();
        auto ib = b.begin();
        for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first < ib->first;
            if (!(ia->second == ib->second)) return coeff_less(ia->second, ib->second);
        }
        return a.size() < b.size();
    }
    static bool coeff_less(const Fp& a, const Fp& b) { return a.value() < b.value(); }
    static bool coeff_less(const Rational& a, const Rational& b) { return a < b; }

    void add_term(const Key& k, const K& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!tamesym::is_zero(c)) terms_.emplace(k, c);
        } else {
            it->second = K(it->second + c);
            if (tamesym::is_zero(it->second)) terms_.erase(it);
        }
    }

    std::map<Key, K> terms_;
};

using PolyQ = Polynomial<Rational>;
using PolyFp = Polynomial<Fp>;

} // namespace tamesym
