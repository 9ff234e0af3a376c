#pragma once

// Q(theta), theta^2 = s for a non-square rational s: arithmetic and exact squareness.

#include <ostream>
#include <sstream>

#include "tamesym/numeric.hpp"

namespace tamesym {

struct QuadraticFieldElement {
    Rational c, d; // c + d*theta
    Rational s;    // theta^2

    bool is_zero() const { return sign(c) == 0 && sign(d) == 0; }

    friend bool operator==(const QuadraticFieldElement& a, const QuadraticFieldElement& b) {
        return a.c == b.c && a.d == b.d && a.s == b.s;
    }

    friend QuadraticFieldElement operator*(const QuadraticFieldElement& a, const QuadraticFieldElement& b) {
        return {Rational(a.c * b.c + a.d * b.d * a.s), Rational(a.c * b.d + a.d * b.c), a.s};
    }
    friend QuadraticFieldElement operator+(const QuadraticFieldElement& a, const QuadraticFieldElement& b) {
        return {Rational(a.c + b.c), Rational(a.d + b.d), a.s};
    }

    // norm c^2 - s d^2, multiplicative to Q
    Rational norm() const { return Rational(c * c - s * d * d); }

    QuadraticFieldElement inv() const {
        Rational n = norm();
        if (sign(n) == 0) throw std::domain_error("quadratic field: division by zero");
        return {Rational(c / n), Rational(-d / n), s};
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadraticFieldElement& a) {
        os << a.c;
        if (sign(a.d) != 0) os << (sign(a.d) > 0 ? " + " : " - ") << abs(Rational(a.d)) << "*theta";
        return os;
    }
};

// Squareness of c + d*theta. For d = 0 the element is a square iff c or c/s
// is a rational square; otherwise (a + b*theta)^2 = gamma forces
// a^2 = (c +- r)/2 with r^2 = c^2 - s d^2 and b = d/(2a), which is verified
// before reporting true.
inline bool is_square_quadratic_field(const QuadraticFieldElement& g) {
    if (g.is_zero()) return true;
    if (sign(g.d) == 0) {
        if (is_square_rational(g.c)) return true;
        return sign(g.s) != 0 && is_square_rational(Rational(g.c / g.s));
    }
    Rational r;
    if (!sqrt_rational(g.norm(), r)) return false;
    for (int which = 0; which < 2; ++which) {
        Rational cand = which == 0 ? Rational((g.c + r) / 2) : Rational((g.c - r) / 2);
        Rational a;
        if (!sqrt_rational(cand, a) || sign(a) == 0) continue;
        Rational b = Rational(g.d / (2 * a));
        QuadraticFieldElement root{a, b, g.s};
        if (root * root == g) return true;
    }
    return false;
}

// q = 2 is the only degree needed at quadratic residue fields.
inline bool is_qth_power_quadratic_field(const QuadraticFieldElement& g, unsigned q) {
    if (q != 2) throw std::domain_error("unsupported degree at quadratic number field");
    return is_square_quadratic_field(g);
}

} // namespace tamesym
