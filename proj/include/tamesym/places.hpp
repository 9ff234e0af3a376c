#pragma once

// Places of the rational function field k(y): finite places given by monic
// irreducible polynomials, and the place at infinity with local parameter 1/y.
// Divisors are finitely supported integer-valued maps on places.

#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "tamesym/factor.hpp"
#include "tamesym/fq.hpp"
#include "tamesym/numeric.hpp"
#include "tamesym/quadratic.hpp"

namespace tamesym {

template <class K>
struct Place {
    enum class Kind { finite, infinite };
    Kind kind = Kind::infinite;
    Polynomial<K> prime; // monic irreducible over k when finite

    static Place infinite() { return Place{}; }
    static Place finite(Polynomial<K> p) { return Place{Kind::finite, std::move(p)}; }

    bool is_infinite() const { return kind == Kind::infinite; }
    long degree() const { return is_infinite() ? 1 : prime.degree(main_var(prime)); }

    static Var main_var(const Polynomial<K>& p) { return p.uses(Var::x) ? Var::x : Var::y; }

    friend bool operator==(const Place& a, const Place& b) {
        return a.kind == b.kind && a.prime == b.prime;
    }
    friend bool operator<(const Place& a, const Place& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.prime < b.prime;
    }
};

// What the residue classes at a place live in.
struct ResidueFieldDescriptor {
    enum class Kind { finite_field, rational_field, real_model, complex_model, quadratic_number_field };
    Kind kind = Kind::rational_field;
    std::uint64_t p = 0; // finite_field: the characteristic
    long degree = 1;     // finite_field: [k(x) : F_p]
    Rational s = 0;      // quadratic_number_field: theta^2 = s

    std::string text() const {
        switch (kind) {
            case Kind::finite_field:
                return degree == 1 ? "F_" + std::to_string(p)
                                   : "F_" + std::to_string(p) + "^" + std::to_string(degree);
            case Kind::rational_field: return "Q";
            case Kind::real_model: return "R";
            case Kind::complex_model: return "C";
            case Kind::quadratic_number_field: {
                std::ostringstream os;
                os << "Q(sqrt(" << s << "))";
                return os.str();
            }
        }
        return "?";
    }
};

inline ResidueFieldDescriptor residue_field_at(const Place<Fp>& place) {
    ResidueFieldDescriptor d;
    d.kind = ResidueFieldDescriptor::Kind::finite_field;
    if (place.is_infinite()) {
        d.degree = 1;
        d.p = 0; // unknown until a value is formed; callers fill it in
    } else {
        d.degree = place.degree();
        d.p = place.prime.witness().modulus();
    }
    return d;
}

// real_model selects how degree-1 and degree-2 places are read: residue
// fields of R(y) are R or C, of Q(y) are Q or a quadratic number field.
inline ResidueFieldDescriptor residue_field_at(const Place<Rational>& place, bool real_model) {
    ResidueFieldDescriptor d;
    if (place.is_infinite() || place.degree() == 1) {
        d.kind = real_model ? ResidueFieldDescriptor::Kind::real_model
                            : ResidueFieldDescriptor::Kind::rational_field;
        return d;
    }
    if (place.degree() == 2) {
        Var main = Place<Rational>::main_var(place.prime);
        std::vector<Rational> c = place.prime.univariate(main);
        Rational disc = Rational(c[1] * c[1] - 4 * c[0] * c[2]);
        if (real_model) {
            d.kind = sign(disc) < 0 ? ResidueFieldDescriptor::Kind::complex_model
                                    : ResidueFieldDescriptor::Kind::real_model;
        } else {
            d.kind = ResidueFieldDescriptor::Kind::quadratic_number_field;
            d.s = Rational(disc / 4);
        }
        return d;
    }
    throw std::domain_error("residue_field_at: unsupported place degree over Q");
}

template <class K>
struct Divisor {
    std::map<Place<K>, long> support; // no zero entries

    void add(const Place<K>& p, long n) {
        if (n == 0) return;
        long& v = support[p];
        v += n;
        if (v == 0) support.erase(p);
    }

    long degree() const {
        long d = 0;
        for (const auto& [p, n] : support) d += n * p.degree();
        return d;
    }
};

// Multiplicity of the monic polynomial pi in a; returns the multiplicity and
// the deflation a / pi^m.
template <class K>
std::pair<long, Polynomial<K>> remove_factor(const Polynomial<K>& a, const Polynomial<K>& pi, Var main) {
    long m = 0;
    Polynomial<K> cur = a;
    for (;;) {
        auto [q, r] = Polynomial<K>::divmod(cur, pi, main);
        if (!r.is_zero() || q.is_zero()) return {m, cur};
        cur = q;
        ++m;
    }
}

// Valuation of a nonzero polynomial at a place of k(y).
template <class K>
long valuation(const Polynomial<K>& a, const Place<K>& place) {
    if (a.is_zero()) throw std::domain_error("valuation of zero");
    if (place.is_infinite()) {
        Var v = a.uses(Var::x) && !a.uses(Var::y) ? Var::x : Var::y;
        return -a.degree(v);
    }
    Var main = Place<K>::main_var(place.prime);
    return remove_factor(a, place.prime, main).first;
}

// Valuation of the rational function num/den.
template <class K>
long valuation(const Polynomial<K>& num, const Polynomial<K>& den, const Place<K>& place) {
    return valuation(num, place) - valuation(den, place);
}

// --- residues -------------------------------------------------------------

// Residue of num/den at a finite place over F_p, as an element of the residue
// field F_p[t]/(pi); requires valuation 0.
inline Fq residue_fp(const PolyFp& num, const PolyFp& den, const Place<Fp>& place) {
    Var main = place.is_infinite() ? Var::y : Place<Fp>::main_var(place.prime);
    if (place.is_infinite()) {
        // rewrite in t = 1/y: residue is the ratio of leading coefficients
        if (num.is_zero() || den.is_zero()) throw std::domain_error("residue of zero");
        Var vn = num.uses(Var::x) && !num.uses(Var::y) ? Var::x : Var::y;
        if (num.degree(vn) != den.degree(vn)) throw std::domain_error("residue: nonzero valuation at infinity");
        Fp lc_num = num.univariate(vn).back();
        Fp lc_den = den.univariate(vn).back();
        auto ctx = std::make_shared<FqContext>(FqContext{lc_num.modulus(), {0, 1}});
        return Fq::from_scalar(ctx, (lc_num / lc_den).value());
    }
    auto [vn, n0] = remove_factor(num, place.prime, main);
    auto [vd, d0] = remove_factor(den, place.prime, main);
    if (vn != vd) throw std::domain_error("residue: nonzero valuation");
    std::vector<Fp> pi = place.prime.univariate(main);
    std::uint64_t p = pi[0].modulus();
    std::vector<std::uint64_t> mod;
    for (const Fp& c : pi) mod.push_back(c.value());
    auto ctx = std::make_shared<FqContext>(FqContext{p, mod});
    auto to_fq = [&](const PolyFp& a) {
        std::vector<Fp> r = uni::mod(a.univariate(main), pi);
        std::vector<std::uint64_t> cs;
        for (const Fp& c : r) cs.push_back(c.value());
        return Fq(ctx, cs);
    };
    return to_fq(n0) / to_fq(d0);
}

// Residue values over Q: either a rational (degree-1 place / infinity) or an
// element of the quadratic field Q[y]/(pi).
using QResidue = std::variant<Rational, QuadraticFieldElement>;

inline QResidue residue_q(const PolyQ& num, const PolyQ& den, const Place<Rational>& place) {
    if (place.is_infinite()) {
        Var vn = num.uses(Var::x) && !num.uses(Var::y) ? Var::x : Var::y;
        if (num.degree(vn) != den.degree(vn)) throw std::domain_error("residue: nonzero valuation at infinity");
        return Rational(num.univariate(vn).back() / den.univariate(vn).back());
    }
    Var main = Place<Rational>::main_var(place.prime);
    auto [vn, n0] = remove_factor(num, place.prime, main);
    auto [vd, d0] = remove_factor(den, place.prime, main);
    if (vn != vd) throw std::domain_error("residue: nonzero valuation");
    std::vector<Rational> pi = place.prime.univariate(main);
    long d = uni::degree(pi);
    if (d == 1) {
        Rational root = Rational(-pi[0] / pi[1]);
        Rational val = Rational(uni::eval(n0.univariate(main), root) /
                                uni::eval(d0.univariate(main), root));
        return val;
    }
    if (d == 2) {
        // theta = y + b/2, theta^2 = b^2/4 - c for pi = y^2 + b y + c
        Rational b = pi[1], c = pi[0];
        Rational s = Rational(b * b / 4 - c);
        auto embed = [&](const PolyQ& a) {
            std::vector<Rational> r = uni::mod(a.univariate(main), pi);
            Rational u = r.size() > 0 ? r[0] : Rational(0);
            Rational v = r.size() > 1 ? r[1] : Rational(0);
            return QuadraticFieldElement{Rational(u - v * b / 2), v, s};
        };
        return embed(n0) * embed(d0).inv();
    }
    throw std::domain_error("residue over Q: unsupported place degree " + std::to_string(d));
}

// Divisor of a nonzero polynomial over F_p: finite places from the complete
// factorization, plus infinity when the degree is positive.
inline Divisor<Fp> divisor_of(const PolyFp& a, std::uint64_t seed = 1) {
    if (a.is_zero()) throw std::domain_error("divisor of zero");
    Divisor<Fp> d;
    FactoredPolynomial<Fp> f = factor_fp(a, seed);
    for (const auto& [p, m] : f.factors) d.add(Place<Fp>::finite(p), m);
    Var v = a.uses(Var::x) && !a.uses(Var::y) ? Var::x : Var::y;
    d.add(Place<Fp>::infinite(), -a.degree(v));
    return d;
}

// Over Q the library factors only what the restricted shapes need: rational
// roots plus at most one residual quadratic factor.
inline Divisor<Rational> divisor_of(const PolyQ& a) {
    if (a.is_zero()) throw std::domain_error("divisor of zero");
    Divisor<Rational> d;
    Var v = a.uses(Var::x) && !a.uses(Var::y) ? Var::x : Var::y;
    std::vector<Rational> cur = a.univariate(v);
    long deg = uni::degree(cur);
    if (deg > 0) d.add(Place<Rational>::infinite(), -deg);
    // roots at 0 first, then rational roots p/q with p | constant and
    // q | leading coefficient of the primitive integer form
    {
        long m = 0;
        while (uni::degree(cur) >= 1 && sign(cur[0]) == 0) {
            cur.erase(cur.begin());
            ++m;
        }
        if (m > 0) d.add(Place<Rational>::finite(Polynomial<Rational>::variable(v, Rational(1))), m);
    }
    Integer lead_l = 1, const_l = 1;
    for (const Rational& c : cur) lead_l = lcm(lead_l, denominator(c));
    std::vector<Integer> ic;
    for (const Rational& c : cur) ic.push_back(Integer(numerator(c) * (lead_l / denominator(c))));
    auto divisors = [](const Integer& n) {
        std::vector<Integer> out;
        Integer a0 = abs(n);
        for (Integer i = 1; i * i <= a0; ++i) {
            if (mpz_divisible_p(a0.get_mpz_t(), i.get_mpz_t())) {
                out.push_back(i);
                out.push_back(a0 / i);
            }
        }
        return out;
    };
    if (uni::degree(cur) >= 1) {
        std::vector<Integer> ps = divisors(ic.front());
        std::vector<Integer> qs = divisors(ic.back());
        for (const Integer& pn : ps) {
            for (const Integer& qn : qs) {
                for (int sgn : {1, -1}) {
                    Rational cand(sgn * pn, qn);
                    cand.canonicalize();
                    while (uni::degree(cur) >= 1 && sign(uni::eval(cur, cand)) == 0) {
                        std::vector<Rational> lin{Rational(-cand), Rational(1)};
                        cur = uni::divmod(cur, lin).first;
                        Polynomial<Rational> prime =
                            Polynomial<Rational>::from_univariate(v, lin);
                        d.add(Place<Rational>::finite(prime), 1);
                    }
                }
            }
        }
    }
    if (uni::degree(cur) == 2) {
        d.add(Place<Rational>::finite(Polynomial<Rational>::from_univariate(v, uni::make_monic(cur))), 1);
    } else if (uni::degree(cur) > 2) {
        throw std::domain_error("unfactorable input in the R model");
    }
    return d;
}

} // namespace tamesym
