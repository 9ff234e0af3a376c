#pragma once

// The number-field side: Legendre symbols, Hilbert symbols over Q at odd
// primes, at the real place, and at the wild prime 2 (closed form on unit
// parts and 2-adic valuations), and the product-formula reciprocity check.

#include <optional>
#include <vector>

#include "tamesym/fp.hpp"
#include "tamesym/numeric.hpp"

namespace tamesym {

struct QPlace {
    enum class Kind { prime, real };
    Kind kind = Kind::real;
    Integer p; // kind == prime

    static QPlace real() { return QPlace{}; }
    static QPlace prime(Integer p) { return QPlace{Kind::prime, std::move(p)}; }

    bool is_real() const { return kind == Kind::real; }
    friend bool operator==(const QPlace& a, const QPlace& b) { return a.kind == b.kind && a.p == b.p; }
    friend bool operator<(const QPlace& a, const QPlace& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.p < b.p;
    }
};

// Legendre symbol (a/p) for odd prime p: +1 square, -1 nonsquare, 0 if p | a.
inline int legendre(const Integer& a, const Integer& p) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    if (sign(r) == 0) return 0;
    Integer e = (p - 1) / 2;
    Integer x;
    mpz_powm(x.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return x == 1 ? 1 : -1;
}

// Tame symbol of two nonzero rationals at the prime p (unit there by construction).
inline Rational tame_symbol_rational(const Rational& a, const Rational& b, const Integer& p) {
    long va = valuation_rational(a, p);
    long vb = valuation_rational(b, p);
    Rational ua = unit_part_at(a, p), ub = unit_part_at(b, p);
    Rational v = 1;
    for (long i = 0; i < (vb >= 0 ? vb : -vb); ++i) v *= (vb >= 0 ? ua : Rational(1 / ua));
    for (long i = 0; i < (va >= 0 ? va : -va); ++i) v *= (va >= 0 ? Rational(1 / ub) : ub);
    if ((va * vb) % 2 != 0) v = -v;
    return v;
}

// Same, reduced into F_p.
inline Fp tame_symbol_mod_p(const Rational& a, const Rational& b, const Integer& p) {
    Rational v = tame_symbol_rational(a, b, p);
    std::uint64_t pu = p.get_ui();
    Fp num(numerator(v), pu), den(denominator(v), pu);
    return num / den;
}

// Residue of a rational with zero valuation at p in F_p.
inline Fp residue_mod_p(const Rational& r, const Integer& p) {
    if (valuation_rational(r, p) != 0) throw std::domain_error("residue: nonzero valuation");
    std::uint64_t pu = p.get_ui();
    return Fp(numerator(r), pu) / Fp(denominator(r), pu);
}

namespace detail {

// residue class of a 2-adic unit rational modulo 2^k
inline std::uint64_t unit_mod_pow2(const Rational& u, std::uint64_t mod) {
    Integer n = numerator(u), d = denominator(u);
    Integer m(static_cast<unsigned long>(mod));
    Integer dn;
    mpz_mod(dn.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    Integer dinv;
    if (mpz_invert(dinv.get_mpz_t(), dn.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("unit_mod_pow2: denominator even");
    Integer r;
    mpz_mod(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    r = r * dinv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return r.get_ui();
}

inline int eps_mod2(const Rational& u) { return unit_mod_pow2(u, 4) == 1 ? 0 : 1; } // (u-1)/2 mod 2
inline int omega_mod2(const Rational& u) {                                          // (u^2-1)/8 mod 2
    std::uint64_t m = unit_mod_pow2(u, 8);
    return (m == 1 || m == 7) ? 0 : 1;
}

} // namespace detail

// Hilbert symbol (a, b) at a place of Q. Odd p: Legendre symbol of the tame
// symbol. Real place: -1 iff both negative. p = 2: the wild closed form
// (-1)^(eps(u)eps(v) + alpha*omega(v) + beta*omega(u)) for a = 2^alpha u, b = 2^beta v.
inline int hilbert_symbol_Q(const Rational& a, const Rational& b, const QPlace& place) {
    if (sign(a) == 0 || sign(b) == 0) throw std::domain_error("hilbert symbol of zero");
    if (place.is_real()) return (sign(a) < 0 && sign(b) < 0) ? -1 : 1;
    if (place.p == 2) {
        long alpha = valuation_rational(a, 2), beta = valuation_rational(b, 2);
        Rational u = unit_part_at(a, 2), v = unit_part_at(b, 2);
        long e = static_cast<long>(detail::eps_mod2(u)) * detail::eps_mod2(v) +
                 alpha * detail::omega_mod2(v) + beta * detail::omega_mod2(u);
        return e % 2 == 0 ? 1 : -1;
    }
    Rational t = tame_symbol_rational(a, b, place.p);
    Integer tn = numerator(t) * denominator(t); // same square class mod p
    return legendre(tn, place.p);
}

struct HilbertDatum {
    QPlace place;
    int symbol = 1;
};

struct DerivedIdentity {
    Integer p, q;
    int legendre_pq = 1, legendre_qp = 1; // (p/q), (q/p)
    int expected = 1;                     // (-1)^((p-1)/2 (q-1)/2)
    bool ok = false;
};

struct QReciprocityReport {
    std::vector<HilbertDatum> data;
    int product = 1;
    bool satisfied = false;
    std::optional<DerivedIdentity> identity;
};

inline std::vector<Integer> odd_prime_support(const Rational& r) {
    std::vector<Integer> out;
    for (Integer part : {numerator(r), denominator(r)}) {
        Integer a = abs(part);
        if (!a.fits_ulong_p()) throw std::domain_error("reciprocity_check_Q: input too large to factor");
        for (const auto& [p, e] : factor_u64(a.get_ui()))
            if (p != 2) out.push_back(Integer(static_cast<unsigned long>(p)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Local Hilbert symbols at every place in the support of a and b, together
// with 2 and the real place; the product is the reciprocity constraint. When
// a and b are distinct odd primes the quadratic reciprocity identity is
// emitted alongside.
inline QReciprocityReport reciprocity_check_Q(const Rational& a, const Rational& b) {
    if (sign(a) == 0 || sign(b) == 0) throw std::domain_error("reciprocity_check_Q: zero input");
    std::vector<QPlace> places;
    std::vector<Integer> support = odd_prime_support(a);
    for (const Integer& p : odd_prime_support(b)) support.push_back(p);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    for (const Integer& p : support) places.push_back(QPlace::prime(p));
    places.push_back(QPlace::prime(2));
    places.push_back(QPlace::real());

    QReciprocityReport rep;
    for (const QPlace& pl : places) {
        int s = hilbert_symbol_Q(a, b, pl);
        rep.product *= s;
        rep.data.push_back({pl, s});
    }
    rep.satisfied = rep.product == 1;

    Integer an = numerator(a), bn = numerator(b);
    if (denominator(a) == 1 && denominator(b) == 1 && sign(an) > 0 && sign(bn) > 0 && an != bn &&
        mpz_odd_p(an.get_mpz_t()) && mpz_odd_p(bn.get_mpz_t()) && an > 1 && bn > 1 &&
        an.fits_ulong_p() && bn.fits_ulong_p() && is_prime_u64(an.get_ui()) && is_prime_u64(bn.get_ui())) {
        DerivedIdentity id;
        id.p = an;
        id.q = bn;
        id.legendre_pq = legendre(an, bn);
        id.legendre_qp = legendre(bn, an);
        Integer e = (an - 1) / 2 * ((bn - 1) / 2);
        id.expected = mpz_odd_p(e.get_mpz_t()) ? -1 : 1;
        id.ok = id.legendre_pq * id.legendre_qp == id.expected;
        rep.identity = id;
    }
    return rep;
}

} // namespace tamesym
