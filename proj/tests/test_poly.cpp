#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "tamesym/factor.hpp"
#include "tamesym/parser.hpp"

using namespace tamesym;

TEST_CASE("division with remainder") {
    PolyQ a = parse_poly_q("y^2-1"), b = parse_poly_q("y");
    auto [q1, r1] = PolyQ::divmod(a, b, Var::y);
    CHECK(q1 == parse_poly_q("y"));
    CHECK(r1 == parse_poly_q("-1"));

    auto [q2, r2] = PolyQ::divmod(parse_poly_q("y^2+1"), parse_poly_q("y-1"), Var::y);
    CHECK(q2 == parse_poly_q("y+1"));
    CHECK(r2 == parse_poly_q("2"));

    auto [q3, r3] = PolyQ::divmod(parse_poly_q("y^3"), parse_poly_q("y^3"), Var::y);
    CHECK(q3 == parse_poly_q("1"));
    CHECK(r3.is_zero());

    CHECK_THROWS_AS(PolyQ::divmod(a, PolyQ(), Var::y), std::domain_error);
}

TEST_CASE("monic gcd") {
    CHECK(PolyQ::gcd(parse_poly_q("y^2-1"), parse_poly_q("y-1")) == parse_poly_q("y-1"));
    CHECK(PolyQ::gcd(parse_poly_q("y^2+1"), parse_poly_q("y^2-1")) == parse_poly_q("1"));
    CHECK(PolyQ::gcd(PolyQ(), parse_poly_q("y")) == parse_poly_q("y"));
    CHECK(PolyQ::gcd(PolyQ(), PolyQ()).is_zero());
    CHECK_THROWS_AS(PolyQ::gcd(parse_poly_q("x*y"), parse_poly_q("y")), std::domain_error);
}

TEST_CASE("irreducibility over F_p") {
    CHECK(is_irreducible_fp(parse_poly_fp("y^2+1", 3)));
    CHECK_FALSE(is_irreducible_fp(parse_poly_fp("y^2-1", 3)));
    CHECK_FALSE(is_irreducible_fp(parse_poly_fp("y^2+1", 5))); // 2^2 = -1
    CHECK(is_irreducible_fp(parse_poly_fp("y", 7)));
    bool lib = is_irreducible_fp(parse_poly_fp("y^3+2*y+1", 5));
    bool ref = oracles::factor_by_trial_division(parse_poly_fp("y^3+2*y+1", 5).univariate(Var::y)).size() == 1;
    CHECK(lib == ref);
}

TEST_CASE("factorization over F_p: worked cases") {
    auto f1 = factor_fp(parse_poly_fp("y^4-1", 5), 7);
    REQUIRE(f1.factors.size() == 4);
    for (const auto& [p, m] : f1.factors) {
        CHECK(p.degree(Var::y) == 1);
        CHECK(m == 1);
    }
    CHECK(f1.expand() == parse_poly_fp("y^4-1", 5));

    auto f2 = factor_fp(parse_poly_fp("y^2+1", 3), 7);
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].second == 1);
    CHECK(f2.factors[0].first == parse_poly_fp("y^2+1", 3));

    auto f3 = factor_fp(parse_poly_fp("y^2", 5), 7);
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].first == parse_poly_fp("y", 5));
    CHECK(f3.factors[0].second == 2);
}

TEST_CASE("factorization matches trial division on random inputs") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::uint64_t> coeff(0, 4);
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<Fp> c;
        std::size_t deg = 1 + trial % 5;
        for (std::size_t i = 0; i < deg; ++i) c.push_back(Fp::raw(coeff(rng), 5));
        c.push_back(Fp::raw(1 + coeff(rng) % 4, 5));
        PolyFp g = PolyFp::from_univariate(Var::y, c);
        auto lib = factor_fp(g, 1234 + trial);
        auto ref = oracles::factor_by_trial_division(c);
        REQUIRE(lib.factors.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) {
            CHECK(lib.factors[i].first == PolyFp::from_univariate(Var::y, ref[i].first));
            CHECK(lib.factors[i].second == ref[i].second);
        }
        CHECK(lib.expand() == g);
    }
}

TEST_CASE("factorization is deterministic in the seed") {
    PolyFp g = parse_poly_fp("y^6+3*y^4+y^2+4", 13);
    auto a = factor_fp(g, 42);
    auto b = factor_fp(g, 42);
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) CHECK(a.factors[i].first == b.factors[i].first);
}

TEST_CASE("parser: worked cases") {
    PolyQ g = parse_poly_q("y^2 - x*(x^2-1)");
    CHECK(g == parse_poly_q("y^2") - parse_poly_q("x^3") + parse_poly_q("x"));

    CHECK(parse_poly_q("0").is_zero());

    PolyFp h = parse_poly_fp("(y-1)^2*(y-2)", 7);
    CHECK(h == parse_poly_fp("y^3 + 3*y^2 + 5*y + 5", 7));
}

TEST_CASE("parser: errors carry positions") {
    CHECK_THROWS_AS(parse_poly_q("x(x-1)"), ParseError);       // implicit multiplication
    CHECK_THROWS_AS(parse_poly_q("x*"), ParseError);           // dangling operator
    CHECK_THROWS_AS(parse_poly_q("z+1"), ParseError);          // unknown variable
    CHECK_THROWS_AS(parse_poly_q("(x+1"), ParseError);         // missing paren
    CHECK_THROWS_AS(parse_poly_q("x/2"), ParseError);          // '/' outside a literal
    CHECK_THROWS_AS(parse_poly_fp("1/7*y", 7), ParseError);    // denominator not invertible
    try {
        parse_poly_q("y^2 + $");
    } catch (const ParseError& e) {
        CHECK(e.position == 6);
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("parser inverts the canonical printer") {
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<int> nterms(1, 6), expo(0, 4);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    for (int trial = 0; trial < 500; ++trial) {
        PolyQ p;
        int n = nterms(rng);
        for (int i = 0; i < n; ++i) {
            Rational c(num(rng), den(rng));
            c.canonicalize();
            p += PolyQ::monomial(c, expo(rng), expo(rng));
        }
        CHECK(parse_poly_q(to_string(p)) == p);
    }
    std::uniform_int_distribution<std::uint64_t> fpcoeff(0, 12);
    for (int trial = 0; trial < 500; ++trial) {
        PolyFp p;
        int n = nterms(rng);
        for (int i = 0; i < n; ++i)
            p += PolyFp::monomial(Fp::raw(fpcoeff(rng), 13), expo(rng), expo(rng));
        CHECK(parse_poly_fp(to_string(p), 13) == p);
    }
}

TEST_CASE("substitution and derivative") {
    PolyQ g = parse_poly_q("y^2 - x^2*(x-1)");
    PolyQ shifted = g.substitute(Var::x, parse_poly_q("x+1"));
    CHECK(shifted == parse_poly_q("y^2 - (x+1)^2*x"));
    CHECK(parse_poly_q("x^3+x*y").derivative(Var::x) == parse_poly_q("3*x^2+y"));
}

TEST_CASE("factorization over F_2 uses the trace splitting") {
    // y^5 + y + 1 = (y^2 + y + 1)(y^3 + y^2 + 1) over F_2
    auto f = factor_fp(parse_poly_fp("y^5+y+1", 2), 3);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == parse_poly_fp("y^2+y+1", 2));
    CHECK(f.factors[1].first == parse_poly_fp("y^3+y^2+1", 2));
    CHECK(f.expand() == parse_poly_fp("y^5+y+1", 2));
    // splitting a product of two linear factors needs the random walk
    auto g = factor_fp(parse_poly_fp("y^2+y", 2), 9);
    REQUIRE(g.factors.size() == 2);
}

TEST_CASE("squarefree decomposition handles vanishing derivatives") {
    // (y^2 + 2)^5 over F_5 has zero derivative (and y^2 + 2 is irreducible)
    PolyFp base = parse_poly_fp("y^2+2", 5);
    auto f = factor_fp(base.pow(5), 3);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == base);
    CHECK(f.factors[0].second == 5);
    // mixed: y^5 * (y+1)^2 over F_5
    auto g = factor_fp(parse_poly_fp("y^5*(y+1)^2", 5), 3);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.expand() == parse_poly_fp("y^5*(y+1)^2", 5));
}

TEST_CASE("factor output is canonical across seeds") {
    PolyFp g = parse_poly_fp("y^6+3*y^4+y^2+4", 13);
    auto a = factor_fp(g, 1);
    auto b = factor_fp(g, 999);
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        CHECK(a.factors[i].first == b.factors[i].first);
        CHECK(a.factors[i].second == b.factors[i].second);
    }
}
