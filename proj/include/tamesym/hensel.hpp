#pragma once

// Hensel lifting of coprime factorizations in the mixed rings k[x][[y]] and
// k[y][[x]]. Everything is phrased over "polynomials in the lifted variable
// with truncated-series coefficients"; the lifting is the quadratic two-factor
// step with Bezout cofactors, applied along a balanced factor tree.

#include <vector>

#include "tamesym/series.hpp"

namespace tamesym {

// Polynomial in `main` whose coefficients are series in the other variable.
template <class K>
struct SeriesPoly {
    Var main = Var::x;
    std::vector<PowerSeries<K>> c; // by main-variable degree

    long degree() const {
        for (std::size_t i = c.size(); i-- > 0;)
            if (!c[i].is_zero()) return static_cast<long>(i);
        return -1;
    }
    const K& sample() const { return c.at(0).zero_sample(); }
    int precision() const {
        int p = c.empty() ? 0 : c[0].precision();
        for (const auto& s : c) p = std::min(p, s.precision());
        return p;
    }

    static SeriesPoly from_polynomial(const Polynomial<K>& p, Var main, int prec, const K& sample) {
        SeriesPoly r;
        r.main = main;
        long d = std::max(0l, p.degree(main));
        for (long i = 0; i <= d; ++i) r.c.push_back(PowerSeries<K>::zero(prec, sample));
        if (!p.is_zero()) {
            std::vector<Polynomial<K>> cs = p.coefficients_in(main);
            for (std::size_t i = 0; i < cs.size(); ++i) {
                if (cs[i].is_zero()) continue;
                r.c[i] = PowerSeries<K>::from_polynomial(cs[i].univariate(other(main)), prec, sample);
            }
        }
        return r;
    }

    static SeriesPoly from_base(const std::vector<K>& dense, Var main, int prec, const K& sample) {
        SeriesPoly r;
        r.main = main;
        for (const K& v : dense) r.c.push_back(PowerSeries<K>::constant(v, prec).truncated(prec));
        if (r.c.empty()) r.c.push_back(PowerSeries<K>::zero(prec, sample));
        return r;
    }

    BiSeries<K> to_biseries(SeriesRing ring, int prec) const {
        BiSeries<K> out(ring, prec, sample());
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < c[i].coeffs().size(); ++j) {
                int mx = main == Var::x ? static_cast<int>(i) : static_cast<int>(j);
                int my = main == Var::x ? static_cast<int>(j) : static_cast<int>(i);
                out.add(mx, my, c[i].coeffs()[j]);
            }
        return out;
    }

    SeriesPoly truncated(int n) const {
        SeriesPoly r = *this;
        for (auto& s : r.c) s = s.truncated(n);
        r.trim();
        return r;
    }

    void trim() {
        while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    }

    friend SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b) {
        SeriesPoly r = a;
        if (b.c.size() > r.c.size()) r.c.resize(b.c.size(), PowerSeries<K>::zero(a.precision(), a.sample()));
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
        r.trim();
        return r;
    }
    friend SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b) {
        SeriesPoly nb = b;
        for (auto& s : nb.c) s = -s;
        return a + nb;
    }
    friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
        SeriesPoly r;
        r.main = a.main;
        int prec = std::min(a.precision(), b.precision());
        r.c.assign(a.c.size() + b.c.size() - 1, PowerSeries<K>::zero(prec, a.sample()));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        r.trim();
        return r;
    }

    bool is_monic() const {
        long d = degree();
        if (d < 0) return false;
        const PowerSeries<K>& lc = c[static_cast<std::size_t>(d)];
        return lc.order() == 0 && lc.coeffs().size() == 1 &&
               lc.coeffs()[0] == field_one(lc.zero_sample());
    }

    // Division by a monic divisor in the main variable.
    static std::pair<SeriesPoly, SeriesPoly> divmod(const SeriesPoly& a, const SeriesPoly& b) {
        long db = b.degree();
        if (db < 0 || !b.is_monic()) throw std::domain_error("series-poly division needs a monic divisor");
        SeriesPoly q;
        q.main = a.main;
        int prec = std::min(a.precision(), b.precision());
        SeriesPoly r = a.truncated(prec);
        long dr = r.degree();
        if (dr < db) return {SeriesPoly{a.main, {PowerSeries<K>::zero(prec, a.sample())}}, r};
        q.c.assign(static_cast<std::size_t>(dr - db + 1), PowerSeries<K>::zero(prec, a.sample()));
        while ((dr = r.degree()) >= db) {
            PowerSeries<K> f = r.c[static_cast<std::size_t>(dr)];
            q.c[static_cast<std::size_t>(dr - db)] = q.c[static_cast<std::size_t>(dr - db)] + f;
            for (long i = 0; i <= db; ++i) {
                std::size_t idx = static_cast<std::size_t>(dr - db + i);
                r.c[idx] = r.c[idx] - f * b.c[static_cast<std::size_t>(i)];
            }
            r.trim();
            if (r.degree() == dr) throw std::logic_error("series-poly division did not reduce degree");
        }
        q.trim();
        return {q, r};
    }

    bool is_zero_to_precision() const {
        for (const auto& s : c)
            if (!s.is_zero()) return false;
        return true;
    }
};

template <class K>
struct HenselFactorization {
    K unit;                          // g = unit * prod(factors) to the stated precision
    std::vector<SeriesPoly<K>> factors; // monic in the lifted variable
    SeriesRing ring;
    int precision = 0;
};

namespace hensel_detail {

// extended euclid in k[main]: s*a + t*b = 1 for coprime a, b
template <class K>
std::pair<std::vector<K>, std::vector<K>> bezout(const std::vector<K>& a, const std::vector<K>& b) {
    std::vector<K> r0 = a, r1 = b;
    const K one = field_one(a.empty() ? b[0] : a[0]);
    std::vector<K> s0{one}, s1{}, t0{}, t1{one};
    while (!r1.empty()) {
        auto [q, r2] = uni::divmod(r0, r1);
        std::vector<K> s2 = uni::sub(s0, uni::mul(q, s1));
        std::vector<K> t2 = uni::sub(t0, uni::mul(q, t1));
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (uni::degree(r0) != 0) throw std::domain_error("non-coprime base factors");
    K inv = field_inv(r0[0]);
    return {uni::scale(s0, inv), uni::scale(t0, inv)};
}

// One balanced split: H = F * G mod ideal^N with F, G monic lifting the given
// coprime monic base products fb, gb. Quadratic iteration (15.10-style).
template <class K>
std::pair<SeriesPoly<K>, SeriesPoly<K>> lift_pair(const SeriesPoly<K>& H, const std::vector<K>& fb,
                                                  const std::vector<K>& gb, int N) {
    const K sample = H.sample();
    auto [sb, tb] = bezout(fb, gb); // sb*fb + tb*gb = 1
    SeriesPoly<K> f = SeriesPoly<K>::from_base(fb, H.main, N, sample);
    SeriesPoly<K> g = SeriesPoly<K>::from_base(gb, H.main, N, sample);
    SeriesPoly<K> s = SeriesPoly<K>::from_base(sb, H.main, N, sample);
    SeriesPoly<K> t = SeriesPoly<K>::from_base(tb, H.main, N, sample);
    for (int m = 1; m < N; m *= 2) {
        // e = H - f g; (q, r) = divmod(s e, g);  g stays monic: corrections land in r
        SeriesPoly<K> e = H - f * g;
        auto [q, r] = SeriesPoly<K>::divmod(s * e, g);
        SeriesPoly<K> fstar = f + (t * e + q * f);
        SeriesPoly<K> gstar = g + r;
        f = fstar.truncated(N);
        g = gstar.truncated(N);
        // refresh Bezout cofactors: b = s f + t g - 1
        SeriesPoly<K> one = SeriesPoly<K>::from_base(std::vector<K>{field_one(sample)}, H.main, N, sample);
        SeriesPoly<K> b = s * f + t * g - one;
        auto [cq, cr] = SeriesPoly<K>::divmod(s * b, g);
        s = (s - cr).truncated(N);
        t = (t - (t * b + cq * f)).truncated(N);
    }
    return {f, g};
}

template <class K>
void lift_tree(const SeriesPoly<K>& H, const std::vector<std::vector<K>>& bases, int N,
               std::vector<SeriesPoly<K>>& out) {
    if (bases.size() == 1) {
        out.push_back(H.truncated(N));
        return;
    }
    std::size_t half = bases.size() / 2;
    std::vector<K> fb{field_one(H.sample())};
    for (std::size_t i = 0; i < half; ++i) fb = uni::mul(fb, bases[i]);
    std::vector<K> gb{field_one(H.sample())};
    for (std::size_t i = half; i < bases.size(); ++i) gb = uni::mul(gb, bases[i]);
    auto [F, G] = lift_pair(H, fb, gb, N);
    std::vector<std::vector<K>> left(bases.begin(), bases.begin() + static_cast<long>(half));
    std::vector<std::vector<K>> right(bases.begin() + static_cast<long>(half), bases.end());
    lift_tree(F, left, N, out);
    lift_tree(G, right, N, out);
}

} // namespace hensel_detail

// Lift a coprime monic base factorization of g modulo the adic ideal of the
// ring to precision N. ring selects k[x][[y]] (base in k[x], ideal (y)) or
// k[y][[x]] (base in k[y], ideal (x)). The leading main-variable coefficient
// of g must be a unit constant; it is returned as the factorization's unit.
template <class K>
HenselFactorization<K> hensel_factor_lift(const Polynomial<K>& g, SeriesRing ring,
                                          const std::vector<Polynomial<K>>& base, int N) {
    if (ring == SeriesRing::total_degree)
        throw std::domain_error("hensel_factor_lift: pick one of the mixed rings k[x][[y]] / k[y][[x]]");
    Var main = ring == SeriesRing::poly_x_adic_y ? Var::x : Var::y;
    Var ideal = other(main);
    if (g.is_zero()) throw std::domain_error("hensel_factor_lift: zero input");
    const K sample = g.witness();
    const K one = field_one(sample);

    std::vector<Polynomial<K>> gc = g.coefficients_in(main);
    if (!gc.back().is_constant())
        throw std::domain_error("hensel_factor_lift: leading structure not monic in the lifted variable");
    K unit = gc.back().constant_value(sample);
    Polynomial<K> gm = g.scaled(field_inv(unit));

    // base validation: monic, univariate in main, pairwise coprime, correct product mod ideal
    std::vector<std::vector<K>> bases;
    std::vector<K> prod{one};
    for (const Polynomial<K>& b : base) {
        if (!b.is_univariate_in(main) || b.is_zero() || b.degree(main) < 1)
            throw std::domain_error("hensel_factor_lift: base factors must be nonconstant polynomials in the lifted variable");
        std::vector<K> dense = b.univariate(main);
        if (!(dense.back() == one)) throw std::domain_error("hensel_factor_lift: base factors must be monic");
        bases.push_back(dense);
        prod = uni::mul(prod, dense);
    }
    for (std::size_t i = 0; i < bases.size(); ++i)
        for (std::size_t j = i + 1; j < bases.size(); ++j)
            if (uni::degree(uni::gcd(bases[i], bases[j])) != 0)
                throw std::domain_error("non-coprime base factors");
    Polynomial<K> g0 = gm.substitute(ideal, Polynomial<K>());
    if (!(g0 == Polynomial<K>::from_univariate(main, prod)))
        throw std::domain_error("hensel_factor_lift: base product does not match g modulo the ideal");

    HenselFactorization<K> out;
    out.unit = unit;
    out.ring = ring;
    out.precision = N;
    SeriesPoly<K> H = SeriesPoly<K>::from_polynomial(gm, main, N, sample);
    if (!H.is_monic())
        throw std::domain_error("hensel_factor_lift: leading structure not monic in the lifted variable");
    if (bases.size() == 1) {
        out.factors.push_back(H);
        return out;
    }
    hensel_detail::lift_tree(H, bases, N, out.factors);
    return out;
}

} // namespace tamesym
