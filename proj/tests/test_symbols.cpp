#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tamesym/parser.hpp"
#include "tamesym/symbols.hpp"

using namespace tamesym;

namespace {

PolyFp random_nonzero_poly(std::mt19937_64& rng, std::uint64_t p, int maxdeg) {
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    std::uniform_int_distribution<int> deg(0, maxdeg);
    PolyFp out;
    int d = deg(rng);
    for (int i = 0; i < d; ++i) out += PolyFp::monomial(Fp::raw(coeff(rng), p), 0, i);
    out += PolyFp::monomial(Fp::raw(1 + coeff(rng) % (p - 1), p), 0, d);
    return out;
}

Fq fq_scalar(std::uint64_t v, std::uint64_t p) {
    auto ctx = std::make_shared<FqContext>(FqContext{p, {0, 1}});
    return Fq::from_scalar(ctx, v);
}

} // namespace

TEST_CASE("tame symbol: worked cases") {
    // over F_5 at infinity: (y, y-1) -> -1 = 4
    Fq v = tame_symbol(parse_poly_fp("y", 5), parse_poly_fp("y-1", 5), Place<Fp>::infinite());
    CHECK(v == fq_scalar(4, 5));

    // both valuations zero: the symbol is literally 1
    Fq w = tame_symbol(parse_poly_fp("y+2", 7), parse_poly_fp("y+3", 7),
                       Place<Fp>::finite(parse_poly_fp("y", 7)));
    CHECK(w == fq_scalar(1, 7));
    Fq unit_case = tame_symbol(parse_poly_fp("1", 7), parse_poly_fp("y", 7),
                               Place<Fp>::finite(parse_poly_fp("y+1", 7)));
    CHECK(unit_case == fq_scalar(1, 7));
}

TEST_CASE("antisymmetry of the tame symbol") {
    std::mt19937_64 rng(1001);
    std::vector<Place<Fp>> places{Place<Fp>::finite(parse_poly_fp("y", 13)),
                                  Place<Fp>::finite(parse_poly_fp("y-1", 13)),
                                  Place<Fp>::finite(parse_poly_fp("y^2+1", 13)),
                                  Place<Fp>::infinite()};
    for (int trial = 0; trial < 100; ++trial) {
        PolyFp a = random_nonzero_poly(rng, 13, 4);
        PolyFp b = random_nonzero_poly(rng, 13, 4);
        for (const auto& pl : places) {
            Fq ab = tame_symbol(a, b, pl);
            Fq ba = tame_symbol(b, a, pl);
            // the product is (-1)^(2 v(a) v(b)) = a square class of 1
            CHECK(is_qth_power_fq(ab * ba, 2));
        }
    }
}

TEST_CASE("bilinearity of ramification in the first slot") {
    std::mt19937_64 rng(1002);
    std::vector<Place<Fp>> places{Place<Fp>::finite(parse_poly_fp("y", 13)),
                                  Place<Fp>::finite(parse_poly_fp("y-3", 13)),
                                  Place<Fp>::infinite()};
    for (int trial = 0; trial < 100; ++trial) {
        PolyFp a1 = random_nonzero_poly(rng, 13, 3);
        PolyFp a2 = random_nonzero_poly(rng, 13, 3);
        PolyFp b = random_nonzero_poly(rng, 13, 3);
        for (const auto& pl : places) {
            for (unsigned q : {2u, 3u}) {
                bool left = ramifies(a1 * a2, b, q, pl).trivial;
                Fq v1 = tame_symbol(a1, b, pl), v2 = tame_symbol(a2, b, pl);
                CHECK(left == is_qth_power_fq(v1 * v2, q));
            }
        }
    }
}

TEST_CASE("ramification divisor: worked cases") {
    // (3, y^2+1)_2 over Q(y): exactly the quadratic place
    auto div = ramification_divisor_q(parse_poly_q("3"), parse_poly_q("y^2+1"), 2);
    REQUIRE(div.size() == 1);
    CHECK(div[0].place.prime == parse_poly_q("y^2+1"));
    CHECK_FALSE(div[0].trivial);

    // (alpha, 1)_q is trivial everywhere
    CHECK(ramification_divisor(parse_poly_fp("y^3+2", 7), parse_poly_fp("1", 7), 3, 5).empty());
}

TEST_CASE("unramified outside the divisor superset when (alpha/beta)_q = 1") {
    // for coprime pairs with alpha a q-th power mod beta, no nontrivial datum
    // sits over a place dividing beta only
    std::mt19937_64 rng(77);
    int confirmed = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::uint64_t p = trial % 2 == 0 ? 7 : 13;
        unsigned q = trial % 2 == 0 ? 3 : 2;
        PolyFp alpha = random_nonzero_poly(rng, p, 3);
        PolyFp beta = random_nonzero_poly(rng, p, 3);
        if (!PolyFp::gcd(alpha, beta).is_constant()) continue;
        if (qth_power_residue_fp(alpha, beta, q, trial) != 1) continue;
        ++confirmed;
        for (const auto& d : ramification_divisor(alpha, beta, q, trial)) {
            if (d.place.is_infinite()) continue;
            bool over_beta_only = valuation(beta, d.place) > 0 && valuation(alpha, d.place) == 0;
            CHECK_FALSE(over_beta_only);
        }
    }
    CHECK(confirmed >= 40);
}

TEST_CASE("q-th power residue symbols over F_p") {
    CHECK(qth_power_residue_fp(parse_poly_fp("(y-1)^2*(y-2)", 7), parse_poly_fp("y", 7), 3, 1) == -1);
    CHECK(qth_power_residue_fp(parse_poly_fp("y^5+y+1", 13), parse_poly_fp("1", 13), 2, 1) == 1);
    CHECK_THROWS_AS(qth_power_residue_fp(parse_poly_fp("y", 7), parse_poly_fp("y^2", 7), 2, 1),
                    std::domain_error);
    // repeated factors impose no more than their radical: (y-1)^2 vs (y-1)^3
    PolyFp f = parse_poly_fp("y+1", 7);
    CHECK(qth_power_residue_fp(f, parse_poly_fp("(y-1)^3", 7), 2, 1) ==
          qth_power_residue_fp(f, parse_poly_fp("y-1", 7), 2, 1));
}

TEST_CASE("weil reciprocity: worked cases") {
    auto w = weil_reciprocity_check(parse_poly_fp("y", 5), parse_poly_fp("y-1", 5), 2, 3);
    CHECK(w.constraint.value() == 1);
    CHECK(w.satisfied);
    REQUIRE(w.data.size() == 3); // y, y-1, infinity

    auto w2 = weil_reciprocity_check(parse_poly_fp("y", 5), parse_poly_fp("y", 5), 2, 3);
    CHECK(w2.satisfied);

    auto w3 = weil_reciprocity_check(parse_poly_fp("3", 5), parse_poly_fp("2", 5), 2, 3);
    CHECK(w3.satisfied);
    for (const auto& d : w3.data) CHECK(d.value.is_one());
}

TEST_CASE("weil reciprocity on random pairs") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        std::uint64_t p = trial % 2 == 0 ? 5 : 13;
        PolyFp a = random_nonzero_poly(rng, p, 4);
        PolyFp b = random_nonzero_poly(rng, p, 4);
        CHECK(weil_reciprocity_check(a, b, 2, trial).satisfied);
    }
}

TEST_CASE("squares in F_p(x) and on the quadratic extension") {
    CHECK_FALSE(square_in_quadratic_function_field(parse_poly_fp("x", 5), parse_poly_fp("x*(x^2-1)", 5), 2));
    CHECK(square_in_quadratic_function_field(parse_poly_fp("x^2", 5), parse_poly_fp("x*(x^2-1)", 5), 2));
    CHECK(square_in_quadratic_function_field(parse_poly_fp("x*(x^2-1)", 5), parse_poly_fp("x*(x^2-1)", 5), 2));
    CHECK_THROWS_AS(square_in_quadratic_function_field(parse_poly_fp("x", 5), parse_poly_fp("x^2", 5), 2),
                    std::domain_error);
}

TEST_CASE("forced reciprocity family") {
    // (q, p, omega, f) = (3, 7, 2, 0): beta = y, residue class 5 is not a cube
    auto rep = forced_reciprocity_family(3, 7, Fp(2, 7), PolyFp(), 11);
    CHECK(rep.residue == -1);
    CHECK(rep.ok());
    bool has_place_y = false;
    for (const auto& d : rep.divisor)
        if (!d.place.is_infinite() && d.place.prime == parse_poly_fp("y", 7)) has_place_y = true;
    CHECK(has_place_y);

    CHECK_THROWS_AS(forced_reciprocity_family(3, 7, Fp(1, 7), PolyFp(), 11), std::domain_error);

    auto rep2 = forced_reciprocity_family(2, 5, Fp(2, 5), parse_poly_fp("1", 5), 11);
    CHECK(rep2.residue == -1);
    CHECK(rep2.ramified_over_beta);
}

TEST_CASE("q-th power residue over Q(y)") {
    CHECK(qth_power_residue_q(parse_poly_q("3"), parse_poly_q("y^2+1"), 2) == -1);
    CHECK(qth_power_residue_q(parse_poly_q("y^2+y"), parse_poly_q("y-2"), 2) == -1); // value 6
    CHECK(qth_power_residue_q(parse_poly_q("y^2"), parse_poly_q("y-2"), 2) == 1);    // value 4
}
