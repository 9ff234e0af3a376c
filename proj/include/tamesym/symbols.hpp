#pragma once

// Tame symbols, ramification of symbol algebras (alpha,beta)_q, q-th power
// residue symbols, and the finite-constant-field reciprocity check (norm
// product over all places) for k(y) with k = F_p, plus the Q(y) variant whose
// residue fields are Q or quadratic number fields.

#include <optional>
#include <set>
#include <vector>

#include "tamesym/places.hpp"

namespace tamesym {

namespace detail {

template <class T>
T pow_signed(const T& a, long e) {
    if (e >= 0) return a.pow(static_cast<std::uint64_t>(e));
    return a.inv().pow(static_cast<std::uint64_t>(-e));
}

} // namespace detail

// --- F_p(y) ----------------------------------------------------------------

// Residue of the unit part of alpha at the place: alpha / pi^v(alpha) mod pi,
// or the leading coefficient at infinity (alpha = t^(-deg) * unit in t = 1/y).
inline Fq unit_residue_fp(const PolyFp& alpha, const Place<Fp>& place) {
    Var v = alpha.uses(Var::x) && !alpha.uses(Var::y) ? Var::x : Var::y;
    if (place.is_infinite()) {
        Fp lc = alpha.univariate(v).back();
        auto ctx = std::make_shared<FqContext>(FqContext{lc.modulus(), {0, 1}});
        return Fq::from_scalar(ctx, lc.value());
    }
    Var main = Place<Fp>::main_var(place.prime);
    PolyFp unit = remove_factor(alpha, place.prime, main).second;
    PolyFp one = PolyFp::constant(field_one(alpha.witness()));
    return residue_fp(unit, one, place);
}

// (-1)^(v(a)v(b)) a^v(b) / b^v(a) reduced at the place; a unit there by construction.
inline Fq tame_symbol(const PolyFp& alpha, const PolyFp& beta, const Place<Fp>& place) {
    if (alpha.is_zero() || beta.is_zero()) throw std::domain_error("tame symbol of zero");
    long a = valuation(alpha, place);
    long b = valuation(beta, place);
    Fq ra = unit_residue_fp(alpha, place);
    Fq rb = unit_residue_fp(beta, place);
    Fq val = detail::pow_signed(ra, b) * detail::pow_signed(rb, -a);
    if ((a * b) % 2 != 0) val = -val;
    return val;
}

struct FpRamificationDatum {
    Place<Fp> place;
    Fq value;     // tame symbol (residue class)
    bool trivial; // value is a q-th power in the residue field
};

inline FpRamificationDatum ramifies(const PolyFp& alpha, const PolyFp& beta, unsigned q,
                                    const Place<Fp>& place) {
    Fq v = tame_symbol(alpha, beta, place);
    return {place, v, is_qth_power_fq(v, q)};
}

// Every place dividing alpha or beta, plus infinity: the superset outside
// which a symbol algebra cannot ramify.
inline std::vector<Place<Fp>> candidate_places(const PolyFp& alpha, const PolyFp& beta,
                                               std::uint64_t seed) {
    std::set<Place<Fp>> s;
    for (const auto& [p, m] : factor_fp(alpha, seed).factors) s.insert(Place<Fp>::finite(p));
    for (const auto& [p, m] : factor_fp(beta, seed + 1).factors) s.insert(Place<Fp>::finite(p));
    std::vector<Place<Fp>> out(s.begin(), s.end());
    out.push_back(Place<Fp>::infinite());
    return out;
}

inline std::vector<FpRamificationDatum> ramification_divisor(const PolyFp& alpha, const PolyFp& beta,
                                                             unsigned q, std::uint64_t seed) {
    std::vector<FpRamificationDatum> out;
    for (const Place<Fp>& pl : candidate_places(alpha, beta, seed)) {
        FpRamificationDatum d = ramifies(alpha, beta, q, pl);
        if (!d.trivial) out.push_back(std::move(d));
    }
    return out;
}

// +1 iff f is a q-th power modulo g. A repeated factor pi^e imposes no more
// than pi does: a unit solution mod pi lifts since q is invertible.
inline int qth_power_residue_fp(const PolyFp& f, const PolyFp& g, unsigned q, std::uint64_t seed) {
    if (g.is_zero()) throw std::domain_error("qth_power_residue: zero modulus");
    if (f.is_zero()) throw std::domain_error("qth_power_residue: zero argument");
    if (g.is_constant()) return 1;
    if (!PolyFp::gcd(f, g).is_constant()) throw std::domain_error("non-coprime pair");
    PolyFp one = PolyFp::constant(field_one(g.witness()));
    for (const auto& [pi, e] : factor_fp(g, seed).factors) {
        Fq res = residue_fp(f, one, Place<Fp>::finite(pi));
        if (!is_qth_power_fq(res, q)) return -1;
    }
    return 1;
}

struct WeilReciprocityReport {
    std::vector<FpRamificationDatum> data; // symbol at every candidate place
    Fp constraint;                         // product of norms down to F_p
    bool satisfied = false;
};

// Product over all places of N_{k(x)/F_p}(tame symbol); equals 1 identically.
inline WeilReciprocityReport weil_reciprocity_check(const PolyFp& alpha, const PolyFp& beta,
                                                    unsigned q, std::uint64_t seed) {
    WeilReciprocityReport rep;
    std::uint64_t p = alpha.witness().modulus();
    rep.constraint = Fp::raw(1 % p, p);
    for (const Place<Fp>& pl : candidate_places(alpha, beta, seed)) {
        FpRamificationDatum d = ramifies(alpha, beta, q, pl);
        rep.constraint *= d.value.norm_to_prime_field();
        rep.data.push_back(std::move(d));
    }
    rep.satisfied = rep.constraint.value() == 1;
    return rep;
}

// q-th powers in the polynomial ring F_p[t]: every multiplicity divisible by
// q and the leading unit a q-th power.
inline bool is_qth_power_polynomial_fp(const PolyFp& a, unsigned q, std::uint64_t seed) {
    if (a.is_zero()) return true;
    FactoredPolynomial<Fp> fa = factor_fp(a, seed);
    for (const auto& [pi, m] : fa.factors)
        if (m % static_cast<int>(q) != 0) return false;
    return is_qth_power_fp(fa.unit, q);
}

// Squareness in the rational function field F_p(x): every valuation even
// (infinity included) and the residual constant a square in F_p.
inline bool is_square_fp_rational_function(const PolyFp& num, const PolyFp& den, std::uint64_t seed) {
    if (num.is_zero() || den.is_zero()) throw std::domain_error("squareness of zero");
    FactoredPolynomial<Fp> fn = factor_fp(num, seed);
    FactoredPolynomial<Fp> fd = factor_fp(den, seed + 1);
    std::map<Polynomial<Fp>, long> ex;
    for (const auto& [pi, m] : fn.factors) ex[pi] += m;
    for (const auto& [pi, m] : fd.factors) ex[pi] -= m;
    for (const auto& [pi, m] : ex)
        if (m % 2 != 0) return false;
    Fp c = fn.unit / fd.unit;
    return is_qth_power_fp(c, 2);
}

// Squareness of u in the quadratic function field F_p(x)[y]/(y^2 - g):
// (a + b y)^2 forces ab = 0, so u is a square iff u or u*g is a square in F_p(x).
inline bool square_in_quadratic_function_field(const PolyFp& u, const PolyFp& g, std::uint64_t seed) {
    if (u.is_zero()) throw std::domain_error("squareness of zero");
    std::uint64_t p = g.witness().modulus();
    if (p == 2) throw std::domain_error("square_in_quadratic_function_field: p must be odd");
    FactoredPolynomial<Fp> fg = factor_fp(g, seed + 7);
    for (const auto& [pi, m] : fg.factors)
        if (m > 1) throw std::domain_error("square_in_quadratic_function_field: g not squarefree");
    PolyFp one = PolyFp::constant(field_one(g.witness()));
    if (is_square_fp_rational_function(u, one, seed)) return true;
    return is_square_fp_rational_function(u * g, one, seed);
}

struct ForcedReciprocityReport {
    PolyFp alpha, beta;
    unsigned q = 2;
    int residue = 1; // (alpha/beta)_q, asserted -1
    std::vector<FpRamificationDatum> divisor;
    bool unramified_at_infinity = false;
    bool unramified_at_one = false; // at the place y - 1
    bool ramified_over_beta = false;
    bool ok() const {
        return residue == -1 && unramified_at_infinity && unramified_at_one && ramified_over_beta;
    }
};

// The forced q-th degree reciprocity family: alpha = (y-1)^(q-1) (y - omega),
// beta = y + alpha f, with omega not a q-th power. alpha is never a q-th power
// modulo beta, and the symbol algebra must ramify over a prime divisor of
// beta while staying unramified at infinity and at y - 1.
inline ForcedReciprocityReport forced_reciprocity_family(unsigned q, std::uint64_t p, const Fp& omega,
                                                         const PolyFp& f, std::uint64_t seed) {
    if (!is_prime_u64(q) || !is_prime_u64(p)) throw std::domain_error("q and p must be prime");
    if ((p - 1) % q != 0) throw std::domain_error("no primitive q-th root of unity in F_p");
    find_qth_root_of_unity(p, q); // the standing hypothesis is checkable
    if (is_qth_power_fp(omega, q))
        throw std::domain_error("omega is a q-th power in F_p; the family needs a non-power");
    const Fp one = field_one(omega);
    PolyFp y = PolyFp::variable(Var::y, one);
    PolyFp alpha = (y - PolyFp::constant(one)).pow(q - 1) * (y - PolyFp::constant(omega));
    PolyFp beta = y + alpha * f;

    ForcedReciprocityReport rep;
    rep.alpha = alpha;
    rep.beta = beta;
    rep.q = q;
    rep.residue = qth_power_residue_fp(alpha, beta, q, seed);
    rep.divisor = ramification_divisor(alpha, beta, q, seed);
    rep.unramified_at_infinity = true;
    rep.unramified_at_one = true;
    PolyFp y_minus_one = y - PolyFp::constant(one);
    for (const auto& d : rep.divisor) {
        if (d.place.is_infinite()) rep.unramified_at_infinity = false;
        else if (d.place.prime == y_minus_one) rep.unramified_at_one = false;
        else if (valuation(beta, d.place) > 0) rep.ramified_over_beta = true;
    }
    return rep;
}

// --- Q(y) -------------------------------------------------------------------

inline QResidue unit_residue_q(const PolyQ& alpha, const Place<Rational>& place) {
    Var v = alpha.uses(Var::x) && !alpha.uses(Var::y) ? Var::x : Var::y;
    if (place.is_infinite()) return Rational(alpha.univariate(v).back());
    Var main = Place<Rational>::main_var(place.prime);
    PolyQ unit = remove_factor(alpha, place.prime, main).second;
    return residue_q(unit, PolyQ::constant(Rational(1)), place);
}

inline QResidue tame_symbol_q(const PolyQ& alpha, const PolyQ& beta, const Place<Rational>& place) {
    if (alpha.is_zero() || beta.is_zero()) throw std::domain_error("tame symbol of zero");
    long a = valuation(alpha, place);
    long b = valuation(beta, place);
    QResidue ra = unit_residue_q(alpha, place);
    QResidue rb = unit_residue_q(beta, place);
    bool flip = (a * b) % 2 != 0;
    if (std::holds_alternative<Rational>(ra)) {
        Rational x = std::get<Rational>(ra), y = std::get<Rational>(rb);
        Rational v = 1;
        for (long i = 0; i < (b >= 0 ? b : -b); ++i) v *= (b >= 0 ? x : Rational(1 / x));
        for (long i = 0; i < (a >= 0 ? a : -a); ++i) v *= (a >= 0 ? Rational(1 / y) : y);
        if (flip) v = -v;
        return v;
    }
    QuadraticFieldElement x = std::get<QuadraticFieldElement>(ra);
    QuadraticFieldElement y = std::get<QuadraticFieldElement>(rb);
    QuadraticFieldElement v{Rational(1), Rational(0), x.s};
    for (long i = 0; i < (b >= 0 ? b : -b); ++i) v = v * (b >= 0 ? x : x.inv());
    for (long i = 0; i < (a >= 0 ? a : -a); ++i) v = v * (a >= 0 ? y.inv() : y);
    if (flip) v = v * QuadraticFieldElement{Rational(-1), Rational(0), x.s};
    return v;
}

// q-th power test for rationals (q >= 2; sign respected for odd q).
inline bool is_qth_power_rational(const Rational& r, unsigned q) {
    if (sign(r) == 0) return true;
    if (q % 2 == 0 && sign(r) < 0) return false;
    auto root_exact = [&](const Integer& n) {
        Integer a = abs(n), root;
        int exact = mpz_root(root.get_mpz_t(), a.get_mpz_t(), q);
        return exact != 0;
    };
    return root_exact(numerator(r)) && root_exact(denominator(r));
}

inline bool qresidue_is_qth_power(const QResidue& v, unsigned q) {
    if (std::holds_alternative<Rational>(v)) return is_qth_power_rational(std::get<Rational>(v), q);
    return is_qth_power_quadratic_field(std::get<QuadraticFieldElement>(v), q);
}

struct QRamificationDatum {
    Place<Rational> place;
    QResidue value;
    bool trivial;
};

// +1 iff f is a q-th power modulo g over Q(y); g must factor into the
// restricted shapes (rational roots and at most one quadratic).
inline int qth_power_residue_q(const PolyQ& f, const PolyQ& g, unsigned q) {
    if (g.is_zero() || f.is_zero()) throw std::domain_error("qth_power_residue: zero input");
    if (g.is_constant()) return 1;
    if (!PolyQ::gcd(f, g).is_constant()) throw std::domain_error("non-coprime pair");
    PolyQ one = PolyQ::constant(Rational(1));
    for (const auto& [pl, m] : divisor_of(g).support) {
        if (pl.is_infinite()) continue;
        QResidue res = residue_q(f, one, pl);
        if (!qresidue_is_qth_power(res, q)) return -1;
    }
    return 1;
}

inline std::vector<QRamificationDatum> ramification_divisor_q(const PolyQ& alpha, const PolyQ& beta,
                                                              unsigned q) {
    std::set<Place<Rational>> s;
    for (const auto& [p, m] : divisor_of(alpha).support)
        if (!p.is_infinite()) s.insert(p);
    for (const auto& [p, m] : divisor_of(beta).support)
        if (!p.is_infinite()) s.insert(p);
    std::vector<Place<Rational>> places(s.begin(), s.end());
    places.push_back(Place<Rational>::infinite());
    std::vector<QRamificationDatum> out;
    for (const Place<Rational>& pl : places) {
        QResidue v = tame_symbol_q(alpha, beta, pl);
        bool triv = qresidue_is_qth_power(v, q);
        if (!triv) out.push_back({pl, v, triv});
    }
    return out;
}

} // namespace tamesym
