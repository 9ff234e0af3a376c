#include <catch2/catch_amalgamated.hpp>

#include "tamesym/certificate.hpp"
#include "tamesym/parser.hpp"

using namespace tamesym;

namespace {
const int N = 16;
const std::uint64_t p = 13;

SeriesCertificate<Fp> cert_for(const char* ftxt, const char* gtxt, SeriesRing ring, unsigned q = 2,
                               int prec = N) {
    return residue_certificate(parse_poly_fp(ftxt, p), parse_poly_fp(gtxt, p), ring, q, prec, 17);
}
} // namespace

TEST_CASE("certificates for the three rings of the elliptic germ") {
    auto total = cert_for("x", "y^2 - x*(x^2-1)", SeriesRing::total_degree);
    CHECK(verify_certificate(total));
    // s = d(x) y with d(0) = 5 or 8 (a square root of -1)
    Fp lead = total.s.terms().at({0, 1});
    CHECK((lead.value() == 5 || lead.value() == 8));

    auto xadic = cert_for("x", "y^2 - x*(x^2-1)", SeriesRing::poly_y_adic_x);
    CHECK(verify_certificate(xadic));

    auto yadic = cert_for("x", "y^2 - x*(x^2-1)", SeriesRing::poly_x_adic_y);
    CHECK(verify_certificate(yadic));
    // the y-adic certificate's s is an x-polynomial of degree <= 2 with series coefficients
    int max_x = 0;
    for (const auto& [k, c] : yadic.s.terms()) max_x = std::max(max_x, k.first);
    CHECK(max_x <= 2);
}

TEST_CASE("cusp: refusal with witness, exact Laurent data verifies") {
    CHECK_THROWS_AS(cert_for("x", "y^2 - x^3", SeriesRing::total_degree), CertificateRefusal);
    try {
        cert_for("x", "y^2 - x^3", SeriesRing::total_degree);
    } catch (const CertificateRefusal& e) {
        CHECK(e.witness.find("t^1") != std::string::npos);
    }
    LaurentCertificate<Fp> lc;
    lc.f = parse_poly_fp("x", p);
    lc.g = parse_poly_fp("y^2 - x^3", p);
    lc.q = 2;
    lc.s = {parse_poly_fp("y", p), parse_poly_fp("x", p)};
    lc.t = {parse_poly_fp("-1", p), parse_poly_fp("x^2", p)};
    CHECK(verify_certificate(lc));
    // perturb t: the identity must fail
    lc.t.num = parse_poly_fp("-2", p);
    CHECK_FALSE(verify_certificate(lc));
}

TEST_CASE("hand-built certificates verify; corrupted ones do not") {
    // f = g*t + s^q by construction
    PolyFp s = parse_poly_fp("1+x*y", p), t = parse_poly_fp("x-2", p), g = parse_poly_fp("y^3-x", p);
    PolyFp f = g * t + s * s;
    SeriesCertificate<Fp> cert;
    cert.f = f;
    cert.g = g;
    cert.q = 2;
    cert.ring = SeriesRing::total_degree;
    cert.precision = N;
    cert.s = BiSeries<Fp>::from_polynomial(s, cert.ring, N, Fp(0, p));
    cert.t = BiSeries<Fp>::from_polynomial(t, cert.ring, N, Fp(0, p));
    CHECK(verify_certificate(cert));

    SeriesCertificate<Fp> bad = cert;
    BiSeries<Fp> bump(cert.ring, N, Fp(0, p));
    bump.add(1, 1, Fp(1, p));
    bad.s = bad.s + bump;
    CHECK_FALSE(verify_certificate(bad));
}

TEST_CASE("unit and single-variable moduli") {
    auto unitcert = cert_for("y+3", "x-1", SeriesRing::total_degree);
    CHECK(verify_certificate(unitcert));

    auto ymod = cert_for("x^2*y^2 + x^2", "y", SeriesRing::total_degree); // f mod y = x^2
    CHECK(verify_certificate(ymod));
    CHECK_THROWS_AS(cert_for("x^2*y^2 + x", "y", SeriesRing::total_degree), CertificateRefusal);
}

TEST_CASE("single-variable modulus distinguishes polynomial and series quotients") {
    // modulus x in k[y][[x]]: the quotient is k[y], so 1 + y is not a square
    CHECK_THROWS_AS(cert_for("1+y", "x", SeriesRing::poly_y_adic_x), CertificateRefusal);
    // but in k[x][[y]] the quotient at the same modulus is k[[y]], where 1 + y is a square
    auto c = cert_for("1+y", "x", SeriesRing::poly_x_adic_y);
    CHECK(verify_certificate(c));
    // y^2 is a square mod x in both
    auto cc = cert_for("y^2 - x^2*(x-1)", "x", SeriesRing::poly_y_adic_x);
    CHECK(verify_certificate(cc));
}

TEST_CASE("refusals carry component witnesses in the split ring") {
    try {
        cert_for("x-1", "y^2 - x*(x^2-1)", SeriesRing::poly_x_adic_y);
        FAIL("expected refusal: x - 1 vanishes at the component x = 1");
    } catch (const CertificateRefusal& e) {
        CHECK(e.witness.find("component at x = 1") != std::string::npos);
    } catch (const std::domain_error&) {
        FAIL("expected a refusal, not a shape error");
    }
}

TEST_CASE("monotone precision: higher-order runs extend lower-order ones") {
    for (SeriesRing ring :
         {SeriesRing::total_degree, SeriesRing::poly_x_adic_y, SeriesRing::poly_y_adic_x}) {
        auto lo = cert_for("x", "y^2 - x*(x^2-1)", ring, 2, 12);
        auto hi = cert_for("x", "y^2 - x*(x^2-1)", ring, 2, 20);
        CHECK(hi.s.with_precision(12) == lo.s.with_precision(12));
        CHECK(hi.t.with_precision(12) == lo.t.with_precision(12));
    }
}

TEST_CASE("odd q certificates through pure-x roots") {
    // f = x^3 (x^2-1)^3 is a cube modulo nothing particular: take the unit modulus route out
    auto c = residue_certificate(parse_poly_fp("x^3*(x-1)^3", p), parse_poly_fp("y^2 - x*(x^2-1)", p),
                                 SeriesRing::total_degree, 3, N, 17);
    CHECK(verify_certificate(c));
    CHECK(c.q == 3);
}

TEST_CASE("non-monic quadratic moduli carry their unit through the certificate") {
    // g = 2 (y^2 - x(x^2-1)) and a route-A case g2 = 3 (y^2 - x^3) with f = x^2-ish
    auto b = residue_certificate(parse_poly_fp("x", p), parse_poly_fp("2*y^2 - 2*x*(x^2-1)", p),
                                 SeriesRing::total_degree, 2, N, 17);
    CHECK(verify_certificate(b));
    auto a = residue_certificate(parse_poly_fp("x^2 + y^2", p), parse_poly_fp("3*y^2 - 3*x^3", p),
                                 SeriesRing::total_degree, 2, N, 17);
    CHECK(verify_certificate(a));
}

TEST_CASE("round trip: constructed powers always earn a verified certificate") {
    // f = c(x)^q - g*t0 is a q-th power modulo g by construction; the engine
    // must find some certificate and it must verify
    std::mt19937_64 rng(90210);
    std::uniform_int_distribution<std::uint64_t> coeff(0, 12);
    std::uniform_int_distribution<int> deg(0, 3);
    auto random_xpoly = [&](int maxdeg) {
        PolyFp out;
        int d = deg(rng) % (maxdeg + 1);
        for (int i = 0; i <= d; ++i) out += PolyFp::monomial(Fp::raw(coeff(rng), 13), i, 0);
        return out;
    };
    int done = 0;
    for (int trial = 0; trial < 120 && done < 80; ++trial) {
        bool node = trial % 3 == 0;
        PolyFp g = node ? parse_poly_fp("y^2 - x^2*(x-1)", p) : parse_poly_fp("y^2 - x*(x^2-1)", p);
        unsigned q = trial % 2 == 0 ? 2 : 3;
        PolyFp c = random_xpoly(2);
        if (c.is_zero()) continue;
        PolyFp t0 = random_xpoly(2);
        PolyFp f = c.pow(q) - g * t0;
        if (f.is_zero()) continue;
        for (SeriesRing ring : {SeriesRing::total_degree, SeriesRing::poly_y_adic_x}) {
            try {
                auto cert = residue_certificate(f, g, ring, q, N, 1000 + trial);
                CHECK(verify_certificate(cert));
                ++done;
            } catch (const CertificateRefusal&) {
                // c vanishing along a branch makes f non-coprime to g; skip
            } catch (const std::domain_error&) {
            }
        }
    }
    CHECK(done >= 80);
}

TEST_CASE("round trip through the split ring with y-dependent witnesses") {
    // f = s0^2 - g*t0 with s0 free in x and y: the k[x][[y]] engine rebuilds a
    // certificate by Hensel + interpolation
    std::mt19937_64 rng(31981);
    std::uniform_int_distribution<std::uint64_t> coeff(0, 12);
    PolyFp g = parse_poly_fp("y^2 - x*(x^2-1)", p);
    int done = 0;
    for (int trial = 0; trial < 60 && done < 40; ++trial) {
        PolyFp s0;
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 1; ++j) s0 += PolyFp::monomial(Fp::raw(coeff(rng), 13), i, j);
        if (s0.is_zero()) continue;
        PolyFp t0 = PolyFp::monomial(Fp::raw(1 + coeff(rng) % 12, 13), coeff(rng) % 2, 0);
        PolyFp f = s0 * s0 - g * t0;
        if (f.is_zero()) continue;
        try {
            auto cert = residue_certificate(f, g, SeriesRing::poly_x_adic_y, 2, N, 2000 + trial);
            CHECK(verify_certificate(cert));
            ++done;
        } catch (const CertificateRefusal&) {
        }
    }
    CHECK(done >= 40);
}

TEST_CASE("route B witnesses: f congruent to d(x)^2 G(x)") {
    std::mt19937_64 rng(5551212);
    std::uniform_int_distribution<std::uint64_t> coeff(0, 12);
    PolyFp g = parse_poly_fp("y^2 - x*(x^2-1)", p);
    PolyFp y = parse_poly_fp("y", p);
    int done = 0;
    for (int trial = 0; trial < 40 && done < 25; ++trial) {
        PolyFp d;
        for (int i = 0; i <= 2; ++i) d += PolyFp::monomial(Fp::raw(coeff(rng), 13), i, 0);
        if (d.is_zero()) continue;
        PolyFp s0 = d * y;
        PolyFp f = s0 * s0 - g * PolyFp::constant(Fp(static_cast<long>(1 + coeff(rng) % 12), 13));
        if (f.is_zero()) continue;
        auto cert = residue_certificate(f, g, SeriesRing::total_degree, 2, N, 3000 + trial);
        CHECK(verify_certificate(cert));
        ++done;
    }
    CHECK(done >= 25);
}
