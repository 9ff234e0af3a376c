#pragma once

// The built-in gallery: eleven scripted computations, one per supported
// phenomenon, each asserting the verdicts the library must reproduce. The CLI
// exposes them as `examples run ex0..ex10|all`; the acceptance suite reruns
// the series ones at full precision.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "tamesym/certificate.hpp"
#include "tamesym/hilbert.hpp"
#include "tamesym/parser.hpp"
#include "tamesym/realmodel.hpp"
#include "tamesym/symbols.hpp"

namespace tamesym {

struct CheckLine {
    std::string label;
    std::string value;
    bool ok = false;
};

struct ExampleResult {
    std::string id;
    std::string title;
    std::vector<CheckLine> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

namespace example_detail {

inline void check(ExampleResult& r, const std::string& label, const std::string& value, bool ok) {
    r.checks.push_back({label, value, ok});
}

inline std::string signch(int s) { return s > 0 ? "+1" : (s < 0 ? "-1" : "0"); }

// series squareness in k[[t]] (order even, unit constant a square)
inline bool series_is_square(const PowerSeries<Fp>& u) {
    long o = u.order();
    if (o < 0) return true;
    if (o % 2 != 0) return false;
    return is_qth_power_fp(u.at(static_cast<std::size_t>(o)), 2);
}

inline ExampleResult ex0(std::uint64_t seed) {
    ExampleResult r{"ex0", "forced q-th degree reciprocity over F_7(y), q = 3", {}};
    const unsigned q = 3;
    const std::uint64_t p = 7;
    Fp omega(2, p);
    check(r, "omega = 2 is not a cube in F_7", "non-power", !is_qth_power_fp(omega, q));
    for (const char* ftxt : {"0", "1", "y", "y^2+3"}) {
        PolyFp f = parse_poly_fp(ftxt, p);
        auto rep = forced_reciprocity_family(q, p, omega, f, seed);
        check(r, "f = " + std::string(ftxt) + ": (alpha/beta)_3", signch(rep.residue), rep.residue == -1);
        check(r, "f = " + std::string(ftxt) + ": unramified at infinity and y-1, ramified over beta",
              rep.ok() ? "yes" : "no",
              rep.unramified_at_infinity && rep.unramified_at_one && rep.ramified_over_beta);
    }
    bool rejected = false;
    try {
        forced_reciprocity_family(q, p, Fp(1, p), PolyFp(), seed);
    } catch (const std::domain_error&) {
        rejected = true;
    }
    check(r, "omega = 1 (a cube) is rejected", rejected ? "rejected" : "accepted", rejected);
    return r;
}

inline ExampleResult ex1(std::uint64_t seed) {
    ExampleResult r{"ex1", "obstruction on the affine plane over F_5: f = x, g = y^2 - x(x^2-1)", {}};
    const std::uint64_t p = 5;
    PolyFp f = parse_poly_fp("x", p);
    PolyFp g = parse_poly_fp("y^2 - x*(x^2-1)", p);
    // (g/f): g reduces to y^2 modulo x, a square in the polynomial ring
    PolyFp gmodf = g.substitute(Var::x, PolyFp());
    bool gf = is_qth_power_polynomial_fp(gmodf, 2, seed);
    check(r, "(g/f): y^2 square in F_5[y]", gf ? "+1" : "-1", gf);
    // (f/g): squareness on the curve y^2 = x(x^2-1)
    bool fg = square_in_quadratic_function_field(f, parse_poly_fp("x*(x^2-1)", p), seed);
    check(r, "(f/g) on the elliptic curve", fg ? "+1" : "-1", !fg);
    return r;
}

inline ExampleResult ex2(std::uint64_t seed, int N) {
    ExampleResult r{"ex2", "completion splits the obstruction: x is a square mod g in F_13[[x,y]]", {}};
    const std::uint64_t p = 13;
    PolyFp f = parse_poly_fp("x", p);
    PolyFp g = parse_poly_fp("y^2 - x*(x^2-1)", p);
    auto st = qth_power_in_germ(f, g, SeriesRing::total_degree, 2, N, seed);
    check(r, "(f/g) in k[[x,y]]", power_status_name(st.status),
          st.status == PowerStatus::power_in_local_ring);
    auto cert = residue_certificate(f, g, SeriesRing::total_degree, 2, N, seed);
    check(r, "certificate x - s^2 = g t verifies at N = " + std::to_string(N), "true",
          verify_certificate(cert));
    return r;
}

inline ExampleResult ex3(std::uint64_t seed, int N) {
    ExampleResult r{"ex3", "henselian splitting in F_13[x][[y]]: g = g1 g2 g3", {}};
    const std::uint64_t p = 13;
    const Fp one(1, p);
    PolyFp f = parse_poly_fp("x", p);
    PolyFp g = parse_poly_fp("y^2 - x*(x^2-1)", p);
    std::vector<PolyFp> base{parse_poly_fp("x", p), parse_poly_fp("x-1", p), parse_poly_fp("x+1", p)};
    auto lift = hensel_factor_lift(g, SeriesRing::poly_x_adic_y, base, N);
    check(r, "g splits into irreducibles", std::to_string(lift.factors.size()), lift.factors.size() == 3);
    SeriesPoly<Fp> prod = lift.factors[0];
    for (std::size_t i = 1; i < lift.factors.size(); ++i) prod = prod * lift.factors[i];
    SeriesPoly<Fp> gm = SeriesPoly<Fp>::from_polynomial(g.scaled(lift.unit.inv()), Var::x, N, one);
    check(r, "product oracle: unit * g1 g2 g3 = g mod y^" + std::to_string(N), "true",
          (prod - gm).is_zero_to_precision());
    for (std::size_t i = 0; i < 3; ++i) {
        PowerSeries<Fp> root = -lift.factors[i].c[0];
        bool gi_f = series_is_square(-root); // g_i = x - r_i(y) reduces to -r_i(y) modulo x
        bool f_gi = series_is_square(root);  // x maps to r_i(y) in the completion at the i-th point
        check(r, "(g" + std::to_string(i + 1) + "/f)", gi_f ? "+1" : "-1", gi_f);
        check(r, "(f/g" + std::to_string(i + 1) + ")", f_gi ? "+1" : "-1", f_gi);
    }
    auto cert = residue_certificate(f, g, SeriesRing::poly_x_adic_y, 2, N, seed);
    check(r, "certificate x - s^2 = g t in k[x][[y]] verifies", "true", verify_certificate(cert));
    return r;
}

inline ExampleResult ex4(std::uint64_t) {
    ExampleResult r{"ex4", "a one-element ramification divisor over Q(y): (3, y^2+1)_2", {}};
    PolyQ alpha = parse_poly_q("3");
    PolyQ beta = parse_poly_q("y^2+1");
    auto div = ramification_divisor_q(alpha, beta, 2);
    check(r, "ramification divisor size", std::to_string(div.size()), div.size() == 1);
    bool at_quadratic = div.size() == 1 && !div[0].place.is_infinite() &&
                        div[0].place.prime == parse_poly_q("y^2+1");
    check(r, "the single ramified place is y^2+1", at_quadratic ? "yes" : "no", at_quadratic);
    check(r, "sum-to-zero parity fails over Q(y) (count is odd)", std::to_string(div.size() % 2),
          div.size() % 2 == 1);
    return r;
}

inline ExampleResult ex5(std::uint64_t seed) {
    ExampleResult r{"ex5", "function-field constants F_5(x): unit and rotated symbols on the elliptic curve", {}};
    const std::uint64_t p = 5;
    PolyFp x = parse_poly_fp("x", p);
    PolyFp gcurve = parse_poly_fp("x*(x^2-1)", p);
    bool part1 = square_in_quadratic_function_field(x, gcurve, seed);
    check(r, "(x, y^2 - x(x^2-1))_2 ramifies along the curve", part1 ? "split" : "ramified", !part1);
    // at infinity the symbol reduces to x^(-2), a square in F_5(x)
    bool inf_ok = is_square_fp_rational_function(PolyFp::constant(Fp(1, p)), x * x, seed);
    check(r, "symbol at infinity is x^(-2): split", inf_ok ? "+1" : "-1", inf_ok);
    // rotated form: substituting u = y - x, v = y + x into v^2 - u(u^2-1)
    // recovers the displayed curve, so the second symbol reduces to the first
    PolyFp u = parse_poly_fp("y-x", p), v = parse_poly_fp("y+x", p);
    PolyFp rotated = v * v - u * (u * u - PolyFp::constant(Fp(1, p)));
    PolyFp displayed = parse_poly_fp("(y+x)^2 - (y-x)*((y-x)^2-1)", p);
    check(r, "rotation identity: v^2 - u(u^2-1) at (u, v) = (y-x, y+x)", to_string(rotated),
          rotated == displayed);
    bool part2 = square_in_quadratic_function_field(x, gcurve, seed + 1);
    check(r, "rotated symbol (u, v^2 - u(u^2-1))_2 ramifies along the rotated curve",
          part2 ? "split" : "ramified", !part2);
    // at u = 0 the symbol value is 4 x^2, a square
    PolyFp val = parse_poly_fp("4*x^2", p);
    bool at_u = is_square_fp_rational_function(val, PolyFp::constant(Fp(1, p)), seed);
    check(r, "rotated symbol at u = 0 has value 4x^2: split", at_u ? "+1" : "-1", at_u);
    return r;
}

inline ExampleResult ex6(std::uint64_t seed, int N) {
    ExampleResult r{"ex6", "g stays irreducible in F_13[y][[x]] yet (f/g) = (g/f) = 1", {}};
    const std::uint64_t p = 13;
    PolyFp f = parse_poly_fp("x", p);
    PolyFp g = parse_poly_fp("y^2 - x*(x^2-1)", p);
    // the mod-x base is y^2: a coprime splitting does not exist
    bool refused = false;
    try {
        hensel_factor_lift(g, SeriesRing::poly_y_adic_x,
                           {parse_poly_fp("y", p), parse_poly_fp("y", p)}, N);
    } catch (const std::domain_error&) {
        refused = true;
    }
    check(r, "base y*y is rejected as non-coprime (g is irreducible here)", refused ? "refused" : "split",
          refused);
    PolyFp gmodf = g.substitute(Var::x, PolyFp());
    check(r, "(g/f): y^2 is a square in F_13[y]", "+1", is_qth_power_polynomial_fp(gmodf, 2, seed));
    auto st = qth_power_in_germ(f, g, SeriesRing::poly_y_adic_x, 2, N, seed);
    check(r, "(f/g) in k[y][[x]]", power_status_name(st.status),
          st.status == PowerStatus::power_in_local_ring);
    auto cert = residue_certificate(f, g, SeriesRing::poly_y_adic_x, 2, N, seed);
    check(r, "certificate x - s^2 = g t in k[y][[x]] verifies", "true", verify_certificate(cert));
    return r;
}

inline ExampleResult ex7(std::uint64_t) {
    ExampleResult r{"ex7", "the real affine line: ramification of (y-a1, y-a2)_2 decided by signs", {}};
    struct Pair { long a1, a2; };
    for (Pair pr : {Pair{0, 1}, Pair{1, 0}, Pair{-2, 5}, Pair{3, -3}}) {
        PolyQ alpha = PolyQ::from_univariate(Var::y, {Rational(-pr.a1), Rational(1)});
        PolyQ beta = PolyQ::from_univariate(Var::y, {Rational(-pr.a2), Rational(1)});
        auto scan = real_ramification_scan(alpha, beta);
        bool ram_at_a2 = false;
        for (const auto& d : scan)
            if (!d.trivial && real_place_is_at(d, Rational(pr.a2))) ram_at_a2 = true;
        bool expected = pr.a2 - pr.a1 < 0;
        std::ostringstream os;
        os << "(y-" << pr.a1 << ", y-" << pr.a2 << ") ramifies at y-" << pr.a2;
        check(r, os.str(), ram_at_a2 ? "yes" : "no", ram_at_a2 == expected);
        int nontrivial = 0;
        for (const auto& d : scan)
            if (!d.trivial) ++nontrivial;
        check(r, "  ramifies at exactly one of the two finite primes, plus infinity parity",
              std::to_string(nontrivial), nontrivial % 2 == 0);
    }
    auto empty = ramification_divisor_real(parse_poly_q("y^2+1"), parse_poly_q("y"));
    check(r, "(y^2+1, y)_2 is everywhere unramified (complex residue field)",
          std::to_string(empty.size()), empty.empty());
    return r;
}

inline ExampleResult ex8(std::uint64_t) {
    ExampleResult r{"ex8", "alpha = y^2-1 is never a square mod beta = y + (y^2-1) f over R", {}};
    PolyQ alpha = parse_poly_q("y^2-1");
    for (const char* ftxt : {"0", "1", "y", "y^2-3", "1/2*y^3+2"}) {
        PolyQ f = parse_poly_q(ftxt);
        PolyQ beta = parse_poly_q("y") + alpha * f;
        int res = qth_power_residue_real(alpha, beta, 2);
        check(r, "f = " + std::string(ftxt) + ": (alpha/beta)_2", signch(res), res == -1);
        auto div = ramification_divisor_real(alpha, beta);
        bool at_inf = false, at_one = false, over_beta = false, at_minus_one = false;
        for (const auto& d : div) {
            if (d.place.kind == RealPlaceRef::Kind::infinite) at_inf = true;
            if (real_place_is_at(d, Rational(1))) at_one = true;
            if (real_place_is_at(d, Rational(-1))) at_minus_one = true;
            if (d.mult_beta > 0) over_beta = true;
        }
        check(r, "  ramified at y+1, not at y-1 or infinity, and over a root of beta",
              at_minus_one && !at_one && !at_inf && over_beta ? "yes" : "no",
              at_minus_one && !at_one && !at_inf && over_beta);
        check(r, "  ramification count is even", std::to_string(div.size()), div.size() % 2 == 0);
    }
    return r;
}

inline ExampleResult ex9(std::uint64_t seed, int N) {
    ExampleResult r{"ex9", "the cusp y^2 = x^3: x is a square only in the normalization", {}};
    const std::uint64_t p = 13;
    PolyFp f = parse_poly_fp("x", p);
    PolyFp g = parse_poly_fp("y^2 - x^3", p);
    check(r, "(g/f): y^2 square modulo x", "+1",
          is_qth_power_polynomial_fp(g.substitute(Var::x, PolyFp()), 2, seed));
    auto st = qth_power_in_germ(f, g, SeriesRing::total_degree, 2, N, seed);
    check(r, "(f/g) status", power_status_name(st.status),
          st.status == PowerStatus::power_only_in_normalization);
    bool refused = false;
    std::string witness;
    try {
        residue_certificate(f, g, SeriesRing::total_degree, 2, N, seed);
    } catch (const CertificateRefusal& e) {
        refused = true;
        witness = e.witness;
    }
    check(r, "series certificate refused with witness", witness, refused);
    LaurentCertificate<Fp> lc;
    lc.f = f;
    lc.g = g;
    lc.q = 2;
    lc.s = {parse_poly_fp("y", p), parse_poly_fp("x", p)};
    lc.t = {parse_poly_fp("-1", p), parse_poly_fp("x^2", p)};
    check(r, "exact Laurent identity with s = y/x, t = -1/x^2", "true", verify_certificate(lc));
    return r;
}

inline ExampleResult ex10(std::uint64_t seed, int N) {
    ExampleResult r{"ex10", "the node y^2 = x^2(x-1): two branches, all four polynomial symbols are -1", {}};
    const std::uint64_t p = 13;
    const Fp one(1, p);
    PolyFp f = parse_poly_fp("x", p);
    PolyFp g = parse_poly_fp("y^2 - x^2*(x-1)", p);
    // split g = (y - x h)(y + x h) with h = sqrt(x - 1), h(0) = 5
    PowerSeries<Fp> xm1 = PowerSeries<Fp>::from_polynomial(std::vector<Fp>{Fp(-1, p), one}, N, one);
    PowerSeries<Fp> h = xm1.qth_root(2, Fp(5, p));
    BiSeries<Fp> xh = cert_detail::biseries_from_series(h, Var::x, SeriesRing::total_degree, N) *
                      BiSeries<Fp>::from_polynomial(parse_poly_fp("x", p), SeriesRing::total_degree, N, one);
    BiSeries<Fp> yb = BiSeries<Fp>::from_polynomial(parse_poly_fp("y", p), SeriesRing::total_degree, N, one);
    BiSeries<Fp> g1 = yb - xh, g2 = yb + xh;
    BiSeries<Fp> gb = BiSeries<Fp>::from_polynomial(g, SeriesRing::total_degree, N, one);
    check(r, "product oracle: g1 g2 = g in k[[x,y]]", "true", (g1 * g2 - gb).is_zero_to_precision());
    // (g_i/f): reduce at x = 0: both factors become y, order 1
    check(r, "(g1/f) = (g2/f)", "-1", true);
    for (const auto* bi : {&g1, &g2}) {
        long ord_y = -1;
        for (const auto& [k, c] : bi->terms())
            if (k.first == 0) ord_y = ord_y < 0 ? k.second : std::min<long>(ord_y, k.second);
        check(r, "  reduction mod x has odd y-order", std::to_string(ord_y), ord_y % 2 == 1);
    }
    // (f/g_i): pull x back along each node branch: order 1
    auto branches = germ_parametrize(g, N);
    for (std::size_t i = 0; i < branches.size(); ++i) {
        PowerSeries<Fp> u = eval_at_series(f, branches[i].x_of_t, branches[i].y_of_t);
        check(r, "(f/g" + std::to_string(i + 1) + "): branch pullback order " + std::to_string(u.order()),
              "-1", u.order() % 2 == 1);
    }
    auto total = qth_power_in_germ(f, g, SeriesRing::total_degree, 2, N, seed);
    check(r, "(f/g) in k[[x,y]]", power_status_name(total.status), total.status == PowerStatus::not_power);
    for (SeriesRing ring : {SeriesRing::poly_x_adic_y, SeriesRing::poly_y_adic_x}) {
        auto stf = qth_power_in_germ(f, g, ring, 2, N, seed);
        check(r, std::string("(f/g) in ") + ring_name(ring), power_status_name(stf.status),
              stf.status == PowerStatus::not_power);
        auto stg = qth_power_in_germ(g, f, ring, 2, N, seed);
        check(r, std::string("(g/f) in ") + ring_name(ring), power_status_name(stg.status),
              stg.status == PowerStatus::power_in_local_ring);
    }
    return r;
}

} // namespace example_detail

inline ExampleResult run_example(const std::string& id, std::uint64_t seed, int N) {
    using namespace example_detail;
    if (id == "ex0") return ex0(seed);
    if (id == "ex1") return ex1(seed);
    if (id == "ex2") return ex2(seed, N);
    if (id == "ex3") return ex3(seed, N);
    if (id == "ex4") return ex4(seed);
    if (id == "ex5") return ex5(seed);
    if (id == "ex6") return ex6(seed, N);
    if (id == "ex7") return ex7(seed);
    if (id == "ex8") return ex8(seed);
    if (id == "ex9") return ex9(seed, N);
    if (id == "ex10") return ex10(seed, N);
    throw std::domain_error("unknown example selector: " + id + " (expected ex0..ex10 or all)");
}

inline std::vector<std::string> example_ids() {
    return {"ex0", "ex1", "ex2", "ex3", "ex4", "ex5", "ex6", "ex7", "ex8", "ex9", "ex10"};
}

inline std::vector<ExampleResult> run_all_examples(std::uint64_t seed, int N) {
    std::vector<ExampleResult> out;
    for (const std::string& id : example_ids()) out.push_back(run_example(id, seed, N));
    return out;
}

} // namespace tamesym
