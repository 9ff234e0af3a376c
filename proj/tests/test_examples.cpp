#include <catch2/catch_amalgamated.hpp>

#include "tamesym/examples.hpp"

using namespace tamesym;

TEST_CASE("every worked example reproduces its verdicts") {
    for (const auto& ex : run_all_examples(1, 16)) {
        INFO(ex.id << ": " << ex.title);
        for (const auto& c : ex.checks) {
            INFO(c.label << " = " << c.value);
            CHECK(c.ok);
        }
    }
}

TEST_CASE("the selector validates its input") {
    CHECK_THROWS_AS(run_example("ex11", 1, 16), std::domain_error);
    CHECK(run_example("ex4", 1, 16).ok());
}
