#include <catch2/catch_amalgamated.hpp>

#include "tamesym/germ.hpp"
#include "tamesym/parser.hpp"

using namespace tamesym;

namespace {
const int N = 16;
const Fp f13 = Fp(0, 13);
} // namespace

TEST_CASE("branch parametrizations satisfy g(x(t), y(t)) = 0") {
    for (const char* gtxt : {"y^2 - x*(x^2-1)", "y^2 - x^3", "y^2 - x^2*(x-1)", "x", "y - x^2"}) {
        PolyFp g = parse_poly_fp(gtxt, 13);
        for (const auto& br : germ_parametrize(g, N)) {
            PowerSeries<Fp> v = eval_at_series(g, br.x_of_t, br.y_of_t);
            INFO(gtxt);
            CHECK(v.is_zero());
        }
    }
}

TEST_CASE("catalogue recognition") {
    CHECK(germ_parametrize(parse_poly_fp("y^2 - x*(x^2-1)", 13), N)[0].kind == GermKind::smooth);
    CHECK(germ_parametrize(parse_poly_fp("y^2 - x^3", 13), N)[0].kind == GermKind::cusp);
    auto node = germ_parametrize(parse_poly_fp("y^2 - x^2*(x-1)", 13), N);
    REQUIRE(node.size() == 2);
    CHECK(node[0].kind == GermKind::node_branch);
    // coordinate axis: the branch (0, t)
    auto axis = germ_parametrize(parse_poly_fp("x", 13), N);
    REQUIRE(axis.size() == 1);
    CHECK(axis[0].x_of_t.is_zero());

    CHECK_THROWS_WITH(germ_parametrize(parse_poly_fp("y^2 - x^4", 13), N),
                      "unsupported singularity; Newton-Puiseux out of scope");
    CHECK_THROWS_AS(germ_parametrize(parse_poly_fp("y^2 - x - 1", 13), N), std::domain_error);
}

TEST_CASE("cusp parametrization is (t^2, t^3)") {
    auto br = germ_parametrize(parse_poly_fp("y^2 - x^3", 13), N)[0];
    CHECK(br.x_of_t.at(2).value() == 1);
    CHECK(br.x_of_t.order() == 2);
    CHECK(br.y_of_t.at(3).value() == 1);
    CHECK(br.y_of_t.order() == 3);
}

TEST_CASE("q-th powers along germs: the three verdicts") {
    PolyFp f = parse_poly_fp("x", 13);
    auto smooth = qth_power_in_germ(f, parse_poly_fp("y^2 - x*(x^2-1)", 13),
                                    SeriesRing::total_degree, 2, N, 1);
    CHECK(smooth.status == PowerStatus::power_in_local_ring);

    auto cusp = qth_power_in_germ(f, parse_poly_fp("y^2 - x^3", 13), SeriesRing::total_degree, 2, N, 1);
    CHECK(cusp.status == PowerStatus::power_only_in_normalization);
    CHECK(cusp.witness.find("t^1") != std::string::npos);

    auto node = qth_power_in_germ(f, parse_poly_fp("y^2 - x^2*(x-1)", 13),
                                  SeriesRing::total_degree, 2, N, 1);
    CHECK(node.status == PowerStatus::not_power);
}

TEST_CASE("node membership needs matching branch values") {
    PolyFp g = parse_poly_fp("y^2 - x^2*(x-1)", 13);
    // f = x^2 pulls back to t^2 on both branches: a square in the local ring
    auto sq = qth_power_in_germ(parse_poly_fp("x^2", 13), g, SeriesRing::total_degree, 2, N, 1);
    CHECK(sq.status == PowerStatus::power_in_local_ring);
    // f = x - 1: unit with different... equal values at the origin: -1 on both
    auto u = qth_power_in_germ(parse_poly_fp("x-1", 13), g, SeriesRing::total_degree, 2, N, 1);
    CHECK(u.status == PowerStatus::power_in_local_ring);
    // f = y + x^2: pulls back to t^2 (h(t) + 1)-ish with differing unit signs on
    // the two branches; the constants differ so the root only exists upstairs
    auto w = qth_power_in_germ(parse_poly_fp("(y+x)^2", 13), g, SeriesRing::total_degree, 2, N, 1);
    CHECK(w.status == PowerStatus::power_in_local_ring);
}

TEST_CASE("mixed-ring verdicts split along the special fiber") {
    PolyFp f = parse_poly_fp("x", 13);
    PolyFp g = parse_poly_fp("y^2 - x*(x^2-1)", 13);
    CHECK(qth_power_in_germ(f, g, SeriesRing::poly_x_adic_y, 2, N, 1).status ==
          PowerStatus::power_in_local_ring);
    CHECK(qth_power_in_germ(f, g, SeriesRing::poly_y_adic_x, 2, N, 1).status ==
          PowerStatus::power_in_local_ring);

    PolyFp gn = parse_poly_fp("y^2 - x^2*(x-1)", 13);
    CHECK(qth_power_in_germ(f, gn, SeriesRing::poly_x_adic_y, 2, N, 1).status == PowerStatus::not_power);
    CHECK(qth_power_in_germ(f, gn, SeriesRing::poly_y_adic_x, 2, N, 1).status == PowerStatus::not_power);
    CHECK(qth_power_in_germ(gn, f, SeriesRing::poly_x_adic_y, 2, N, 1).status ==
          PowerStatus::power_in_local_ring);
    CHECK(qth_power_in_germ(gn, f, SeriesRing::poly_y_adic_x, 2, N, 1).status ==
          PowerStatus::power_in_local_ring);
}

TEST_CASE("hensel lifting: the elliptic example") {
    PolyFp g = parse_poly_fp("y^2 - x*(x^2-1)", 13);
    std::vector<PolyFp> base{parse_poly_fp("x", 13), parse_poly_fp("x-1", 13), parse_poly_fp("x+1", 13)};
    auto lift = hensel_factor_lift(g, SeriesRing::poly_x_adic_y, base, N);
    CHECK(lift.unit.value() == 12);
    REQUIRE(lift.factors.size() == 3);
    // product oracle
    SeriesPoly<Fp> prod = lift.factors[0];
    for (std::size_t i = 1; i < lift.factors.size(); ++i) prod = prod * lift.factors[i];
    SeriesPoly<Fp> gm = SeriesPoly<Fp>::from_polynomial(g.scaled(lift.unit.inv()), Var::x, N, f13);
    CHECK((prod - gm).is_zero_to_precision());
    // each factor reduces to its base factor modulo y
    for (std::size_t i = 0; i < 3; ++i) {
        REQUIRE(lift.factors[i].degree() == 1);
        Fp c0 = lift.factors[i].c[0].at(0);
        CHECK(PolyFp::from_univariate(Var::x, {c0, Fp(1, 13)}) == base[i]);
    }
    // the factor over x = 0 starts x + y^2 + ...
    PowerSeries<Fp> r0 = -lift.factors[0].c[0];
    CHECK(r0.order() == 2);
    CHECK(r0.at(2).value() == 12); // r_0 = -y^2 - ...
}

TEST_CASE("hensel lifting: refusals and trivial bases") {
    PolyFp g = parse_poly_fp("y^2 - x*(x^2-1)", 13);
    CHECK_THROWS_WITH(hensel_factor_lift(g, SeriesRing::poly_y_adic_x,
                                         {parse_poly_fp("y", 13), parse_poly_fp("y", 13)}, N),
                      "non-coprime base factors");
    // single-factor base returns the (normalized) input itself
    auto lift = hensel_factor_lift(g, SeriesRing::poly_y_adic_x, {parse_poly_fp("y^2", 13)}, N);
    REQUIRE(lift.factors.size() == 1);
    CHECK_THROWS_AS(hensel_factor_lift(g, SeriesRing::total_degree, {parse_poly_fp("y", 13)}, N),
                    std::domain_error);
    CHECK_THROWS_AS(hensel_factor_lift(parse_poly_fp("x*y+1", 13), SeriesRing::poly_x_adic_y,
                                       {parse_poly_fp("x", 13)}, N),
                    std::domain_error); // leading coefficient in x is not constant
}

TEST_CASE("node splits by a direct square root in k[[x]][y]") {
    // y^2 - x^2 (x-1) = (y - x h)(y + x h), h = sqrt(x - 1), h(0) = 5
    PolyFp g = parse_poly_fp("y^2 - x^2*(x-1)", 13);
    PowerSeries<Fp> xm1({Fp(-1, 13), Fp(1, 13)}, N, f13);
    PowerSeries<Fp> h = xm1.qth_root(2, Fp(5, 13));
    BiSeries<Fp> xb = BiSeries<Fp>::from_polynomial(parse_poly_fp("x", 13), SeriesRing::total_degree, N, f13);
    BiSeries<Fp> yb = BiSeries<Fp>::from_polynomial(parse_poly_fp("y", 13), SeriesRing::total_degree, N, f13);
    BiSeries<Fp> hb(SeriesRing::total_degree, N, f13);
    for (std::size_t i = 0; i < h.coeffs().size(); ++i) hb.add(static_cast<int>(i), 0, h.coeffs()[i]);
    BiSeries<Fp> g1 = yb - xb * hb, g2 = yb + xb * hb;
    BiSeries<Fp> gb = BiSeries<Fp>::from_polynomial(g, SeriesRing::total_degree, N, f13);
    CHECK((g1 * g2 - gb).is_zero_to_precision());
}

TEST_CASE("hensel lifting with a quadratic base factor") {
    // g = (x^2+1)(x-2) + y (x + 3) + y^2 over F_7: the mod-y base splits into
    // a coprime pair of degrees 2 and 1
    PolyFp g = parse_poly_fp("(x^2+1)*(x-2) + y*(x+3) + y^2", 7);
    std::vector<PolyFp> base{parse_poly_fp("x^2+1", 7), parse_poly_fp("x-2", 7)};
    auto lift = hensel_factor_lift(g, SeriesRing::poly_x_adic_y, base, 12);
    REQUIRE(lift.factors.size() == 2);
    CHECK(lift.factors[0].degree() == 2);
    CHECK(lift.factors[1].degree() == 1);
    SeriesPoly<Fp> prod = lift.factors[0] * lift.factors[1];
    SeriesPoly<Fp> gm = SeriesPoly<Fp>::from_polynomial(g.scaled(lift.unit.inv()), Var::x, 12, Fp(0, 7));
    CHECK((prod - gm).is_zero_to_precision());
    // reductions modulo y match the base
    for (std::size_t i = 0; i < 2; ++i) {
        std::vector<Fp> red;
        for (const auto& c : lift.factors[i].c) red.push_back(c.at(0));
        uni::trim(red);
        CHECK(PolyFp::from_univariate(Var::x, red) == base[i]);
    }
}
