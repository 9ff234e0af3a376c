#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tamesym/parser.hpp"
#include "tamesym/places.hpp"

using namespace tamesym;

namespace {

PolyFp random_poly_fp(std::mt19937_64& rng, std::uint64_t p, int maxdeg) {
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    std::uniform_int_distribution<int> deg(0, maxdeg);
    PolyFp out;
    int d = deg(rng);
    for (int i = 0; i < d; ++i) out += PolyFp::monomial(Fp::raw(coeff(rng), p), 0, i);
    out += PolyFp::monomial(Fp::raw(1 + coeff(rng) % (p - 1), p), 0, d);
    return out;
}

} // namespace

TEST_CASE("valuations: worked cases") {
    PolyFp a = parse_poly_fp("y^2-y", 5);
    CHECK(valuation(a, Place<Fp>::finite(parse_poly_fp("y", 5))) == 1);
    CHECK(valuation(parse_poly_fp("y^3+1", 5), Place<Fp>::infinite()) == -3);
    CHECK(valuation_rational(Rational(12), 2) == 2);
    CHECK(valuation_rational(Rational(5, 8), 2) == -3);
    CHECK_THROWS_AS(valuation(PolyFp(), Place<Fp>::infinite()), std::domain_error);
}

TEST_CASE("divisors: worked cases") {
    Divisor<Fp> d = divisor_of(parse_poly_fp("y^2-1", 5));
    REQUIRE(d.support.size() == 3);
    CHECK(d.support.at(Place<Fp>::finite(parse_poly_fp("y-1", 5))) == 1);
    CHECK(d.support.at(Place<Fp>::finite(parse_poly_fp("y+1", 5))) == 1);
    CHECK(d.support.at(Place<Fp>::infinite()) == -2);

    CHECK(divisor_of(parse_poly_fp("1", 5)).support.empty());

    Divisor<Rational> dq = divisor_of(parse_poly_q("y"));
    REQUIRE(dq.support.size() == 2);
    CHECK(dq.support.at(Place<Rational>::finite(parse_poly_q("y"))) == 1);
    CHECK(dq.support.at(Place<Rational>::infinite()) == -1);
}

TEST_CASE("divisor over Q handles quadratic residuals and refuses the rest") {
    Divisor<Rational> d = divisor_of(parse_poly_q("(y-1)*(y^2+1)"));
    CHECK(d.support.size() == 3);
    CHECK(d.support.at(Place<Rational>::finite(parse_poly_q("y^2+1"))) == 1);
    CHECK_THROWS_AS(divisor_of(parse_poly_q("(y^2+1)*(y^2+2)")), std::domain_error);
}

TEST_CASE("degree-zero law over F_p") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 300; ++trial) {
        std::uint64_t p = trial % 2 == 0 ? 5 : 13;
        PolyFp a = random_poly_fp(rng, p, 6);
        CHECK(divisor_of(a, trial).degree() == 0);
    }
}

TEST_CASE("valuation laws on random data") {
    std::mt19937_64 rng(8899);
    std::vector<Place<Fp>> places{Place<Fp>::finite(parse_poly_fp("y", 13)),
                                  Place<Fp>::finite(parse_poly_fp("y+2", 13)),
                                  Place<Fp>::finite(parse_poly_fp("y^2+1", 13)),
                                  Place<Fp>::infinite()};
    for (int trial = 0; trial < 120; ++trial) {
        PolyFp a = random_poly_fp(rng, 13, 5);
        PolyFp b = random_poly_fp(rng, 13, 5);
        for (const auto& pl : places) {
            CHECK(valuation(a * b, pl) == valuation(a, pl) + valuation(b, pl));
            PolyFp s = a + b;
            if (!s.is_zero())
                CHECK(valuation(s, pl) >= std::min(valuation(a, pl), valuation(b, pl)));
        }
    }
}

TEST_CASE("residues: worked cases and multiplicativity") {
    // scalar over Q at p = 3
    CHECK(Fp(5, 3).value() == 2);
    // (y^2+1) at the place y-1 over Q
    QResidue r = residue_q(parse_poly_q("y^2+1"), parse_poly_q("1"), Place<Rational>::finite(parse_poly_q("y-1")));
    CHECK(std::get<Rational>(r) == Rational(2));
    // (y-1)/y at infinity
    QResidue ri = residue_q(parse_poly_q("y-1"), parse_poly_q("y"), Place<Rational>::infinite());
    CHECK(std::get<Rational>(ri) == Rational(1));
    // nonzero valuation refused
    CHECK_THROWS_AS(residue_q(parse_poly_q("y-1"), parse_poly_q("1"), Place<Rational>::finite(parse_poly_q("y-1"))),
                    std::domain_error);

    // multiplicativity over F_p at a quadratic place
    std::mt19937_64 rng(424242);
    Place<Fp> pl = Place<Fp>::finite(parse_poly_fp("y^2+1", 13));
    PolyFp one = parse_poly_fp("1", 13);
    for (int trial = 0; trial < 60; ++trial) {
        PolyFp a = random_poly_fp(rng, 13, 4);
        PolyFp b = random_poly_fp(rng, 13, 4);
        if (valuation(a, pl) != 0 || valuation(b, pl) != 0) continue;
        Fq ra = residue_fp(a, one, pl), rb = residue_fp(b, one, pl);
        CHECK(residue_fp(a * b, one, pl) == ra * rb);
    }
}

TEST_CASE("residue at a quadratic place over Q lands in the quadratic field") {
    Place<Rational> pl = Place<Rational>::finite(parse_poly_q("y^2+1"));
    QResidue r = residue_q(parse_poly_q("y+2"), parse_poly_q("1"), pl);
    QuadraticFieldElement v = std::get<QuadraticFieldElement>(r);
    CHECK(v.s == Rational(-1));
    CHECK(v.c == Rational(2));
    CHECK(v.d == Rational(1));
}

TEST_CASE("residue field descriptors") {
    CHECK(residue_field_at(Place<Fp>::finite(parse_poly_fp("y^2+1", 3))).text() == "F_3^2");
    CHECK(residue_field_at(Place<Fp>::finite(parse_poly_fp("y", 13))).text() == "F_13");
    CHECK(residue_field_at(Place<Rational>::finite(parse_poly_q("y-2")), false).kind ==
          ResidueFieldDescriptor::Kind::rational_field);
    CHECK(residue_field_at(Place<Rational>::finite(parse_poly_q("y-2")), true).kind ==
          ResidueFieldDescriptor::Kind::real_model);
    auto quad = residue_field_at(Place<Rational>::finite(parse_poly_q("y^2+1")), false);
    CHECK(quad.kind == ResidueFieldDescriptor::Kind::quadratic_number_field);
    CHECK(quad.s == Rational(-1));
    CHECK(residue_field_at(Place<Rational>::finite(parse_poly_q("y^2+1")), true).kind ==
          ResidueFieldDescriptor::Kind::complex_model);
    CHECK(residue_field_at(Place<Rational>::finite(parse_poly_q("y^2-2")), true).kind ==
          ResidueFieldDescriptor::Kind::real_model);
}

TEST_CASE("root of unity context") {
    RootOfUnityContext ctx = RootOfUnityContext::make(13, 3);
    CHECK(ctx.zeta.pow(3).value() == 1);
    CHECK(ctx.zeta.value() != 1);
    CHECK_THROWS_AS(RootOfUnityContext::make(7, 5), std::domain_error);
}

TEST_CASE("residue multiplicativity at a quadratic place over Q") {
    Place<Rational> pl = Place<Rational>::finite(parse_poly_q("y^2+1"));
    PolyQ one = parse_poly_q("1");
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        PolyQ a = PolyQ::from_univariate(Var::y, {Rational(c(rng)), Rational(c(rng)), Rational(c(rng))});
        PolyQ b = PolyQ::from_univariate(Var::y, {Rational(c(rng)), Rational(c(rng))});
        if (a.is_zero() || b.is_zero()) continue;
        if (valuation(a, pl) != 0 || valuation(b, pl) != 0) continue;
        auto ra = std::get<QuadraticFieldElement>(residue_q(a, one, pl));
        auto rb = std::get<QuadraticFieldElement>(residue_q(b, one, pl));
        auto rab = std::get<QuadraticFieldElement>(residue_q(a * b, one, pl));
        CHECK(rab == ra * rb);
    }
}
