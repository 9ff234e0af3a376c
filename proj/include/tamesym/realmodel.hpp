#pragma once

// The exact model of R(y): rational-coefficient data analyzed by sign tests.
// Places with residue field R are rational points y - a or Sturm-isolated real
// roots; degree-2 primes with negative discriminant have residue field C and
// never carry ramification. Everything here is decided by exact signs.

#include <optional>
#include <vector>

#include "tamesym/places.hpp"
#include "tamesym/sturm.hpp"
#include "tamesym/symbols.hpp"

namespace tamesym {

// Squarefree (Yun) decomposition over Q: monic pairwise-coprime parts with
// their multiplicities, and the leading unit.
struct SquarefreeQ {
    Rational unit;
    std::vector<std::pair<std::vector<Rational>, int>> parts;
};

inline SquarefreeQ squarefree_decompose_q(const std::vector<Rational>& f) {
    if (f.empty()) throw std::domain_error("squarefree decomposition of zero");
    SquarefreeQ out;
    out.unit = f.back();
    std::vector<Rational> g = uni::make_monic(f);
    if (uni::degree(g) == 0) return out;
    std::vector<Rational> d = uni::derivative(g);
    std::vector<Rational> c = uni::gcd(g, d);
    std::vector<Rational> w = uni::divmod(g, c).first;
    int i = 1;
    while (uni::degree(w) > 0) {
        std::vector<Rational> y = uni::gcd(w, c);
        std::vector<Rational> part = uni::divmod(w, y).first;
        if (uni::degree(part) > 0) out.parts.emplace_back(part, i);
        w = std::move(y);
        c = uni::divmod(c, w).first;
        ++i;
    }
    return out;
}

// (multiplicity of the root in f, sign of the deflation f / (y - xi)^m at xi)
inline std::pair<long, int> multiplicity_and_deflated_sign(const SquarefreeQ& f,
                                                           const IsolatedRealRoot& xi) {
    long m = 0;
    int s = sign(f.unit);
    for (const auto& [part, e] : f.parts) {
        if (sign_at_root(part, xi) == 0) {
            m = e;
            // (part/(y-xi))(xi) equals part'(xi) at a simple root
            int ds = sign_at_root(uni::derivative(part), xi);
            if (e % 2 != 0) s *= ds;
        } else {
            if (e % 2 != 0) s *= sign_at_root(part, xi);
        }
    }
    return {m, s};
}

struct RealPlaceRef {
    enum class Kind { finite_prime, isolated_root, infinite };
    Kind kind = Kind::infinite;
    PolyQ prime;           // finite_prime: monic, degree 1 here (residue field R)
    IsolatedRealRoot root; // isolated_root

    static RealPlaceRef infinite() { return RealPlaceRef{}; }
    static RealPlaceRef at_rational(const Rational& a) {
        RealPlaceRef r;
        r.kind = Kind::finite_prime;
        r.prime = PolyQ::from_univariate(Var::y, {Rational(-a), Rational(1)});
        return r;
    }
    static RealPlaceRef at_root(IsolatedRealRoot rt) {
        RealPlaceRef r;
        r.kind = Kind::isolated_root;
        r.root = std::move(rt);
        return r;
    }
};

struct RealRamificationDatum {
    RealPlaceRef place;
    int symbol_sign = 1; // sign of the tame symbol at the real place
    bool trivial = true; // sign > 0, i.e. a square in R
    long mult_alpha = 0;
    long mult_beta = 0;
};

// Exact rational value of an isolated root, when it has one.
inline std::optional<Rational> rational_root_value(const IsolatedRealRoot& r) {
    const std::vector<Rational>& g = r.defining;
    Integer lead_l = 1;
    for (const Rational& c : g) lead_l = lcm(lead_l, denominator(c));
    std::vector<Integer> ic;
    for (const Rational& c : g) ic.push_back(Integer(numerator(c) * (lead_l / denominator(c))));
    if (sign(ic.front()) == 0) {
        // the defining polynomial is squarefree, so 0 is at most a simple root
        if (r.lo < 0 && 0 < r.hi) return Rational(0);
        ic.erase(ic.begin());
        if (ic.empty() || sign(ic.front()) == 0) return std::nullopt;
    }
    auto divisors = [](const Integer& n) {
        std::vector<Integer> out;
        Integer a0 = abs(n);
        for (Integer i = 1; i * i <= a0; ++i)
            if (mpz_divisible_p(a0.get_mpz_t(), i.get_mpz_t())) {
                out.push_back(i);
                out.push_back(a0 / i);
            }
        return out;
    };
    for (const Integer& pn : divisors(ic.front()))
        for (const Integer& qn : divisors(ic.back()))
            for (int sg : {1, -1}) {
                Rational cand(sg * pn, qn);
                cand.canonicalize();
                if (!(r.lo < cand && cand < r.hi)) continue;
                if (sign(uni::eval(g, cand)) == 0) return cand;
            }
    return std::nullopt;
}

// Ramification scan of (alpha, beta)_2 over the R model: one datum per real
// place in the Theorem-3 superset (real roots of alpha*beta and infinity).
// Complex places are omitted: H^1 vanishes there.
inline std::vector<RealRamificationDatum> real_ramification_scan(const PolyQ& alpha, const PolyQ& beta) {
    if (alpha.is_zero() || beta.is_zero()) throw std::domain_error("ramification of zero");
    bool in_x = (alpha.uses(Var::x) || beta.uses(Var::x)) && !alpha.uses(Var::y) && !beta.uses(Var::y);
    Var va = in_x ? Var::x : Var::y;
    std::vector<Rational> ua = alpha.univariate(va);
    std::vector<Rational> ub = beta.univariate(va);
    SquarefreeQ sa = squarefree_decompose_q(ua);
    SquarefreeQ sb = squarefree_decompose_q(ub);

    // radical of alpha*beta: product of all distinct parts, deduplicated by gcd
    std::vector<Rational> radical{Rational(1)};
    for (const auto& [part, e] : sa.parts) radical = uni::mul(radical, part);
    for (const auto& [part, e] : sb.parts) {
        std::vector<Rational> g = uni::gcd(radical, part);
        radical = uni::mul(radical, uni::divmod(part, g).first);
    }

    std::vector<RealRamificationDatum> out;
    for (const IsolatedRealRoot& xi : sturm_isolate(radical)) {
        auto [ma, da] = multiplicity_and_deflated_sign(sa, xi);
        auto [mb, db] = multiplicity_and_deflated_sign(sb, xi);
        int s = 1;
        if ((ma * mb) % 2 != 0) s = -s;
        if (mb % 2 != 0) s *= da;
        if (ma % 2 != 0) s *= db;
        RealRamificationDatum datum;
        std::optional<Rational> exact = rational_root_value(xi);
        datum.place = exact ? RealPlaceRef::at_rational(*exact) : RealPlaceRef::at_root(xi);
        datum.symbol_sign = s;
        datum.trivial = s > 0;
        datum.mult_alpha = ma;
        datum.mult_beta = mb;
        out.push_back(std::move(datum));
    }
    // infinity: residue field R, valuations -deg
    long ma = -uni::degree(ua), mb = -uni::degree(ub);
    int s = 1;
    if ((ma * mb) % 2 != 0) s = -s;
    if (mb % 2 != 0) s *= sign(ua.back());
    if (ma % 2 != 0) s *= sign(ub.back());
    out.push_back({RealPlaceRef::infinite(), s, s > 0, ma, mb});
    return out;
}

inline std::vector<RealRamificationDatum> ramification_divisor_real(const PolyQ& alpha,
                                                                    const PolyQ& beta) {
    std::vector<RealRamificationDatum> out;
    for (auto& d : real_ramification_scan(alpha, beta))
        if (!d.trivial) out.push_back(std::move(d));
    return out;
}

// Is the given place the rational point y = a?
inline bool real_place_is_at(const RealRamificationDatum& d, const Rational& a) {
    if (d.place.kind == RealPlaceRef::Kind::finite_prime) {
        std::vector<Rational> c = d.place.prime.univariate(Var::y);
        return uni::degree(c) == 1 && Rational(-c[0] / c[1]) == a;
    }
    if (d.place.kind == RealPlaceRef::Kind::isolated_root)
        return sign_at_root(std::vector<Rational>{Rational(-a), Rational(1)}, d.place.root) == 0;
    return false;
}

// +1 iff f is a square modulo g over the R model, i.e. f > 0 at every real
// root of g (distinct roots suffice: 2 is invertible, so solvability lifts
// through repeated factors). Odd q: every real is a q-th power.
inline int qth_power_residue_real(const PolyQ& f, const PolyQ& g, unsigned q) {
    if (g.is_zero() || f.is_zero()) throw std::domain_error("qth_power_residue: zero input");
    if (g.is_constant()) return 1;
    if (!PolyQ::gcd(f, g).is_constant()) throw std::domain_error("non-coprime pair");
    if (q != 2) return 1;
    Var v = g.uses(Var::x) && !g.uses(Var::y) ? Var::x : Var::y;
    std::vector<Rational> fu = f.is_constant() ? std::vector<Rational>{f.constant_value(Rational(0))}
                                               : f.univariate(v);
    for (const IsolatedRealRoot& xi : sturm_isolate(g.univariate(v))) {
        if (sign_at_root(fu, xi) < 0) return -1;
    }
    return 1;
}

struct RealReciprocityReport {
    std::vector<RealRamificationDatum> data; // scan of (alpha, beta)_2
    int parity = 0;                          // nontrivial count mod 2; 0 is the law
    bool parity_ok = false;
    int legendre_ab = 1, legendre_ba = 1; // (alpha/beta), (beta/alpha)
    int expected_product = 1;             // (-1)^(deg alpha * deg beta)
    bool identity_ok = false;
};

inline bool is_real_model_prime(const PolyQ& g) {
    Var v = g.uses(Var::x) && !g.uses(Var::y) ? Var::x : Var::y;
    if (!g.is_univariate_in(v) || g.is_zero()) return false;
    std::vector<Rational> c = g.univariate(v);
    if (!(c.back() == Rational(1))) return false;
    if (uni::degree(c) == 1) return true;
    if (uni::degree(c) == 2) {
        Rational disc = Rational(c[1] * c[1] - 4 * c[0] * c[2]);
        return sign(disc) < 0;
    }
    return false;
}

// Checks the sum-to-zero law for (alpha,beta)_2 over R(y) and the derived
// identity (alpha/beta)(beta/alpha) = (-1)^(deg alpha deg beta) for distinct
// monic irreducible alpha, beta.
inline RealReciprocityReport reciprocity_check_real(const PolyQ& alpha, const PolyQ& beta) {
    if (!is_real_model_prime(alpha) || !is_real_model_prime(beta))
        throw std::domain_error("reciprocity_check_real: inputs must be monic irreducible over R "
                                "(degree 1, or degree 2 with negative discriminant)");
    if (alpha == beta) throw std::domain_error("distinct primes required");
    RealReciprocityReport rep;
    rep.data = real_ramification_scan(alpha, beta);
    int count = 0;
    for (const auto& d : rep.data)
        if (!d.trivial) ++count;
    rep.parity = count % 2;
    rep.parity_ok = rep.parity == 0;
    rep.legendre_ab = qth_power_residue_real(alpha, beta, 2);
    rep.legendre_ba = qth_power_residue_real(beta, alpha, 2);
    long da = alpha.degree(Place<Rational>::main_var(alpha));
    long db = beta.degree(Place<Rational>::main_var(beta));
    rep.expected_product = (da * db) % 2 == 0 ? 1 : -1;
    rep.identity_ok = rep.legendre_ab * rep.legendre_ba == rep.expected_product;
    return rep;
}

} // namespace tamesym
