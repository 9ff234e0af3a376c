#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "tamesym/parser.hpp"
#include "tamesym/sturm.hpp"

using namespace tamesym;

TEST_CASE("isolation: worked cases") {
    CHECK(sturm_isolate(parse_poly_q("y^2+1")).empty());

    auto r2 = sturm_isolate(parse_poly_q("y^2-2"));
    REQUIRE(r2.size() == 2);
    // one negative root, one positive root, each alone in its interval
    CHECK(sign_at_root(parse_poly_q("y"), r2[0]) == -1);
    CHECK(sign_at_root(parse_poly_q("y"), r2[1]) == 1);
    CHECK(sign_at_root(parse_poly_q("y+2"), r2[0]) == 1);
    CHECK(sign_at_root(parse_poly_q("y-2"), r2[1]) == -1);

    auto r3 = sturm_isolate(parse_poly_q("y^3-y"));
    REQUIRE(r3.size() == 3);
    for (long v : {-1, 0, 1}) {
        bool found = false;
        for (const auto& r : r3)
            if (sign_at_root(std::vector<Rational>{Rational(-v), Rational(1)}, r) == 0) found = true;
        CHECK(found);
    }
}

TEST_CASE("isolation separates random rational roots") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-12, 12), den(1, 4);
    for (int trial = 0; trial < 60; ++trial) {
        std::set<Rational> roots;
        int n = 2 + trial % 4;
        while (static_cast<int>(roots.size()) < n) {
            Rational r(num(rng), den(rng));
            r.canonicalize();
            roots.insert(r);
        }
        std::vector<Rational> g{Rational(1)};
        for (const Rational& r : roots) g = uni::mul(g, std::vector<Rational>{Rational(-r), Rational(1)});
        auto iso = sturm_isolate(g);
        REQUIRE(iso.size() == roots.size());
        std::size_t i = 0;
        for (const Rational& r : roots) {
            CHECK(iso[i].lo < r);
            CHECK(r < iso[i].hi);
            ++i;
        }
    }
}

TEST_CASE("multiplicities are dropped") {
    auto iso = sturm_isolate(parse_poly_q("(y-1)^2*(y+2)^3"));
    REQUIRE(iso.size() == 2);
}

TEST_CASE("sign at a root: worked cases") {
    auto at_zero = sturm_isolate(parse_poly_q("y"));
    REQUIRE(at_zero.size() == 1);
    CHECK(sign_at_root(parse_poly_q("y^2-1"), at_zero[0]) == -1);

    auto at_one = sturm_isolate(parse_poly_q("y-1"));
    REQUIRE(at_one.size() == 1);
    CHECK(sign_at_root(parse_poly_q("y"), at_one[0]) == 1);

    auto at_three = sturm_isolate(parse_poly_q("y-3"));
    REQUIRE(at_three.size() == 1);
    CHECK(sign_at_root(parse_poly_q("y-3"), at_three[0]) == 0);
}

TEST_CASE("sign at a root agrees with the bisection oracle") {
    std::mt19937_64 rng(314159);
    std::uniform_int_distribution<long> c(-6, 6);
    int checked = 0;
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<Rational> g;
        for (int i = 0; i < 3 + trial % 3; ++i) g.push_back(Rational(c(rng)));
        g.push_back(Rational(1));
        std::vector<Rational> f;
        for (int i = 0; i < 2 + trial % 4; ++i) f.push_back(Rational(c(rng)));
        uni::trim(f);
        if (f.empty()) continue;
        for (const auto& root : sturm_isolate(g)) {
            CHECK(sign_at_root(f, root) == oracles::sign_by_bisection(f, root));
            ++checked;
        }
    }
    CHECK(checked > 100);
}
