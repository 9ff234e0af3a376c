#pragma once

// Explicit (s, t) certificates for q-th power congruences: f - s^q = g*t,
// either as truncated series in one of the three rings or as an exact
// rational-function identity (Laurent mode). Construction is structural:
// single-variable moduli, quadratic moduli y^2 - G(x) via the c + d*y ansatz,
// and split moduli in k[x][[y]] via Hensel lifting and Lagrange interpolation
// over k[[y]]. verify_certificate recomputes the congruence independently.

#include <string>

#include "tamesym/germ.hpp"
#include "tamesym/hensel.hpp"
#include "tamesym/parser.hpp"

namespace tamesym {

template <class K>
struct RationalFunction {
    Polynomial<K> num, den;
};

template <class K>
struct SeriesCertificate {
    Polynomial<K> f, g;
    unsigned q = 2;
    SeriesRing ring = SeriesRing::total_degree;
    int precision = 0;
    BiSeries<K> s, t;
    std::string orientation = "f - s^q = g*t";
};

template <class K>
struct LaurentCertificate {
    Polynomial<K> f, g;
    unsigned q = 2;
    RationalFunction<K> s, t;
    std::string orientation = "f - s^q = g*t";
};

struct CertificateRefusal : std::runtime_error {
    explicit CertificateRefusal(const std::string& w)
        : std::runtime_error("certificate refused: " + w), witness(w) {}
    std::string witness;
};

// f - s^q - g*t vanishes to the certificate's precision.
template <class K>
bool verify_certificate(const SeriesCertificate<K>& c) {
    const K sample = c.g.witness();
    int prec = std::min({c.precision, c.s.precision(), c.t.precision()});
    BiSeries<K> fb = BiSeries<K>::from_polynomial(c.f, c.ring, prec, sample);
    BiSeries<K> gb = BiSeries<K>::from_polynomial(c.g, c.ring, prec, sample);
    BiSeries<K> lhs = fb - c.s.with_precision(prec).pow(c.q) - gb * c.t.with_precision(prec);
    return lhs.is_zero_to_precision();
}

// Exact identity in the fraction field.
template <class K>
bool verify_certificate(const LaurentCertificate<K>& c) {
    if (c.s.den.is_zero() || c.t.den.is_zero()) return false;
    Polynomial<K> sdq = c.s.den.pow(c.q);
    Polynomial<K> snq = c.s.num.pow(c.q);
    // f sd^q td - sn^q td - g tn sd^q == 0
    Polynomial<K> lhs = c.f * sdq * c.t.den - snq * c.t.den - c.g * c.t.num * sdq;
    return lhs.is_zero();
}

namespace cert_detail {

// exact rewrite f = f0(x) + f1(x) y + gm * w with gm = y^2 - G(x) monic
template <class K>
void reduce_mod_quadratic(const Polynomial<K>& f, const Polynomial<K>& gm, Polynomial<K>& f0,
                          Polynomial<K>& f1, Polynomial<K>& w) {
    auto [quot, rem] = Polynomial<K>::divmod(f, gm, Var::y);
    w = quot;
    std::vector<Polynomial<K>> rc = rem.is_zero() ? std::vector<Polynomial<K>>() : rem.coefficients_in(Var::y);
    f0 = rc.size() > 0 ? rc[0] : Polynomial<K>();
    f1 = rc.size() > 1 ? rc[1] : Polynomial<K>();
}

template <class K>
BiSeries<K> biseries_from_series(const PowerSeries<K>& s, Var v, SeriesRing ring, int prec) {
    BiSeries<K> out(ring, prec, s.zero_sample());
    for (std::size_t i = 0; i < s.coeffs().size(); ++i)
        out.add(v == Var::x ? static_cast<int>(i) : 0, v == Var::x ? 0 : static_cast<int>(i),
                s.coeffs()[i]);
    return out;
}

template <class K>
SeriesPoly<K> series_poly_from_biseries(const BiSeries<K>& b, Var main, int prec) {
    SeriesPoly<K> out;
    out.main = main;
    long dmax = 0;
    for (const auto& [k, c] : b.terms()) dmax = std::max(dmax, static_cast<long>(main == Var::x ? k.first : k.second));
    for (long i = 0; i <= dmax; ++i) out.c.push_back(PowerSeries<K>::zero(prec, b.zero_sample()));
    for (const auto& [k, c] : b.terms()) {
        int e = main == Var::x ? k.first : k.second;
        int o = main == Var::x ? k.second : k.first;
        std::vector<K> single(static_cast<std::size_t>(o) + 1, field_zero(b.zero_sample()));
        single[static_cast<std::size_t>(o)] = c;
        out.c[static_cast<std::size_t>(e)] =
            out.c[static_cast<std::size_t>(e)] + PowerSeries<K>::from_polynomial(single, prec, b.zero_sample());
    }
    return out;
}

// quotient of a biseries by a single variable to the first power; every
// retained term must be divisible
template <class K>
BiSeries<K> divide_by_variable(const BiSeries<K>& b, Var v) {
    BiSeries<K> out(b.ring(), b.precision(), b.zero_sample());
    for (const auto& [k, c] : b.terms()) {
        int i = k.first, j = k.second;
        if ((v == Var::x ? i : j) < 1) throw std::logic_error("divide_by_variable: term not divisible");
        out.add(v == Var::x ? i - 1 : i, v == Var::x ? j : j - 1, c);
    }
    return out;
}

} // namespace cert_detail

// Build a certificate for "f is a q-th power modulo g" in the given ring, to
// precision N. Throws CertificateRefusal (with the failing branch or valuation
// as witness) when f is not a q-th power, and domain_error for modulus shapes
// outside the supported catalogue.
inline SeriesCertificate<Fp> residue_certificate(const PolyFp& f, const PolyFp& g, SeriesRing ring,
                                                 unsigned q, int N, std::uint64_t seed) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("residue_certificate: zero input");
    const Fp sample = g.witness();
    const Fp one = field_one(sample);
    SeriesCertificate<Fp> cert;
    cert.f = f;
    cert.g = g;
    cert.q = q;
    cert.ring = ring;
    cert.precision = N;

    const bool mixed = ring != SeriesRing::total_degree;
    Var main = ring == SeriesRing::poly_y_adic_x ? Var::y : Var::x;
    Var ideal = other(main);

    // unit modulus: f = s^q + g * (f - s^q)/g with s = 0
    bool g_unit = mixed ? g.substitute(ideal, PolyFp()).is_constant() &&
                              !g.substitute(ideal, PolyFp()).is_zero()
                        : !tamesym::is_zero(g.eval(field_zero(sample), field_zero(sample)));
    if (g_unit) {
        BiSeries<Fp> fb = BiSeries<Fp>::from_polynomial(f, ring, N, sample);
        BiSeries<Fp> gb = BiSeries<Fp>::from_polynomial(g, ring, N, sample);
        cert.s = BiSeries<Fp>(ring, N, sample);
        cert.t = fb * gb.invert();
        return cert;
    }

    // single-variable modulus g = c * v
    for (Var v : {Var::x, Var::y}) {
        if (g.degree(v) == 1 && g.degree(other(v)) == 0 &&
            tamesym::is_zero(g.eval(field_zero(sample), field_zero(sample)))) {
            Fp c = g.coeff(v == Var::x ? 1 : 0, v == Var::x ? 0 : 1, sample);
            PolyFp f0 = f.substitute(v, PolyFp());
            if (f0.is_zero()) throw std::domain_error("residue_certificate: f vanishes modulo g");
            Var w = other(v);
            std::vector<Fp> dense = f0.is_constant() ? std::vector<Fp>{f0.constant_value(sample)}
                                                     : f0.univariate(w);
            PowerSeries<Fp> u = PowerSeries<Fp>::from_polynomial(dense, N, sample);
            std::optional<PowerSeries<Fp>> root = u.qth_root_general(q);
            if (!root) {
                long o = u.order();
                throw CertificateRefusal(o % static_cast<long>(q) != 0
                                             ? "reduction modulo " + to_string(g) + " has order " +
                                                   std::to_string(o) + " in " + var_name(w) +
                                                   ", not divisible by " + std::to_string(q)
                                             : "unit constant of the reduction is not a q-th power in F_p");
            }
            if (mixed && v == ideal) {
                // quotient is the polynomial ring k[w]: the root must be polynomial
                PolyFp rp = PolyFp::from_univariate(w, root->coeffs());
                if (!(rp.pow(q) == f0))
                    throw CertificateRefusal("q-th root of the reduction is not polynomial in " +
                                             std::string(1, var_name(w)));
            }
            cert.s = cert_detail::biseries_from_series(*root, w, ring, N);
            BiSeries<Fp> fb = BiSeries<Fp>::from_polynomial(f, ring, N, sample);
            BiSeries<Fp> h = fb - cert.s.pow(q);
            cert.t = cert_detail::divide_by_variable(h, v) * BiSeries<Fp>(ring, N, sample).scalar(c.inv());
            return cert;
        }
    }

    // quadratic modulus c * (y^2 - G(x))
    std::vector<PolyFp> gy = g.coefficients_in(Var::y);
    bool quad = g.degree(Var::y) == 2 && gy[2].is_constant() && gy[1].is_zero();
    if (quad && (ring == SeriesRing::total_degree || ring == SeriesRing::poly_y_adic_x)) {
        Fp c = gy[2].constant_value(sample);
        PolyFp gm = g.scaled(c.inv()); // y^2 - G
        PolyFp G = -gm.substitute(Var::y, PolyFp());
        PolyFp f0, f1, w;
        cert_detail::reduce_mod_quadratic(f, gm, f0, f1, w);
        if (!f1.is_zero())
            throw std::domain_error("residue_certificate: f reduces with a y-component; unsupported shape");
        if (f0.is_zero()) throw std::domain_error("residue_certificate: f vanishes modulo g");
        std::vector<Fp> f0d = f0.is_constant() ? std::vector<Fp>{f0.constant_value(sample)}
                                               : f0.univariate(Var::x);
        std::vector<Fp> Gd = G.univariate(Var::x);
        int pad = static_cast<int>(uni::degree(Gd));
        PowerSeries<Fp> uf = PowerSeries<Fp>::from_polynomial(f0d, N + pad, sample);
        // route A: s = s(x) with s^q = f0 in k[[x]]; f = f0 + c gm (w/c)
        if (std::optional<PowerSeries<Fp>> root = uf.qth_root_general(q)) {
            cert.s = cert_detail::biseries_from_series(root->truncated(N), Var::x, ring, N);
            cert.t = BiSeries<Fp>::from_polynomial(w.scaled(c.inv()), ring, N, sample);
            return cert;
        }
        // route B (q = 2): s = d(x) y with d^2 = f0 / G
        if (q == 2) {
            PowerSeries<Fp> uG = PowerSeries<Fp>::from_polynomial(Gd, N + pad, sample);
            long og = uG.order(), of = uf.order();
            if (of >= og) {
                PowerSeries<Fp> ratio = uf.shifted(static_cast<int>(-og)) *
                                        uG.shifted(static_cast<int>(-og)).invert();
                if (std::optional<PowerSeries<Fp>> d = ratio.qth_root_general(2)) {
                    PowerSeries<Fp> dd = d->truncated(N);
                    cert.s = cert_detail::biseries_from_series(dd, Var::x, ring, N) *
                             BiSeries<Fp>::from_polynomial(PolyFp::variable(Var::y, one), ring, N, sample);
                    BiSeries<Fp> d2 = cert_detail::biseries_from_series((dd * dd).truncated(N), Var::x, ring, N);
                    cert.t = (BiSeries<Fp>::from_polynomial(w, ring, N, sample) - d2) *
                             BiSeries<Fp>(ring, N, sample).scalar(c.inv());
                    return cert;
                }
            }
        }
        // neither route: produce the honest witness from the germ analysis
        GermPowerResult<Fp> res = qth_power_in_germ(f, g, ring, q, N, seed);
        if (res.status == PowerStatus::power_in_local_ring)
            throw std::logic_error("residue_certificate: germ reports a power but no route applies");
        throw CertificateRefusal(res.witness);
    }
    if (quad && ring == SeriesRing::poly_x_adic_y) {
        // split modulus: Hensel factors x - r_i(y), then CRT by Lagrange
        // interpolation over k[[y]]
        std::vector<PolyFp> gx = g.coefficients_in(Var::x);
        if (!gx.back().is_constant())
            throw std::domain_error("residue_certificate: leading structure not monic in the lifted variable");
        Fp c = gx.back().constant_value(sample);
        PolyFp base = g.substitute(Var::y, PolyFp()).scaled(c.inv());
        FactoredPolynomial<Fp> bf = factor_fp(base, seed);
        bool split = true;
        for (const auto& [pi, m] : bf.factors)
            if (m != 1 || pi.degree(Var::x) != 1) split = false;
        if (!split) {
            GermPowerResult<Fp> res = qth_power_in_germ(f, g, ring, q, N, seed);
            if (res.status != PowerStatus::power_in_local_ring) throw CertificateRefusal(res.witness);
            throw std::domain_error("residue_certificate: non-split fiber in k[x][[y]] is unsupported");
        }
        std::vector<PolyFp> basefactors;
        for (const auto& [pi, m] : bf.factors) basefactors.push_back(pi);
        // padded working precision: extracting q-th roots of positive-order
        // pullbacks costs a few orders of y-precision
        const int W = 2 * N + 8;
        HenselFactorization<Fp> lift = hensel_factor_lift(g, ring, basefactors, W);
        std::vector<PowerSeries<Fp>> roots;
        for (const auto& fac : lift.factors) roots.push_back(-fac.c[0]);
        PowerSeries<Fp> t_id = PowerSeries<Fp>::identity(W, sample);
        SeriesPoly<Fp> s_poly{Var::x, {PowerSeries<Fp>::zero(W, sample)}};
        for (std::size_t i = 0; i < roots.size(); ++i) {
            PowerSeries<Fp> u = eval_at_series(f, roots[i], t_id);
            std::optional<PowerSeries<Fp>> si = u.qth_root_general(q);
            if (!si) {
                long o = u.order();
                std::string at = std::to_string(roots[i].at(0).value());
                throw CertificateRefusal(
                    o % static_cast<long>(q) != 0
                        ? "component at x = " + at + ": pullback has y-order " + std::to_string(o) +
                              ", not divisible by " + std::to_string(q)
                        : "component at x = " + at + ": unit constant is not a q-th power in F_p");
            }
            // Lagrange numerator prod_{j != i} (x - r_j) and scalar denominator
            SeriesPoly<Fp> num{Var::x, {PowerSeries<Fp>::constant(one, W)}};
            PowerSeries<Fp> den = PowerSeries<Fp>::constant(one, W);
            for (std::size_t j = 0; j < roots.size(); ++j) {
                if (j == i) continue;
                num = num * SeriesPoly<Fp>{Var::x, {-roots[j], PowerSeries<Fp>::constant(one, W)}};
                den = den * (roots[i] - roots[j]);
            }
            PowerSeries<Fp> coeff = *si * den.invert();
            for (auto& cc : num.c) cc = cc * coeff;
            s_poly = s_poly + num;
        }
        BiSeries<Fp> sw = s_poly.to_biseries(ring, s_poly.precision());
        BiSeries<Fp> fb = BiSeries<Fp>::from_polynomial(f, ring, s_poly.precision(), sample);
        BiSeries<Fp> h = fb - sw.pow(q);
        SeriesPoly<Fp> hs = cert_detail::series_poly_from_biseries(h, Var::x, h.precision());
        SeriesPoly<Fp> gs = SeriesPoly<Fp>::from_polynomial(g.scaled(c.inv()), Var::x, h.precision(), sample);
        auto [quot, rem] = SeriesPoly<Fp>::divmod(hs, gs);
        if (rem.truncated(N).is_zero_to_precision() == false)
            throw std::logic_error("residue_certificate: CRT division left a remainder");
        cert.s = sw.with_precision(N);
        cert.t = quot.to_biseries(ring, N) * BiSeries<Fp>(ring, N, sample).scalar(c.inv());
        return cert;
    }
    throw std::domain_error("residue_certificate: unsupported modulus shape");
}

} // namespace tamesym
