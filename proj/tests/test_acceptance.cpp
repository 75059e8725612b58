// Acceptance gate: each criterion prints exactly one pass/fail line with
// its measured quantities, and the binary fails if any criterion does.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "cliff/acceptance.hpp"

TEST_CASE("acceptance criteria") {
    const std::vector<cliff::CriterionResult> results = cliff::run_acceptance(20240901);
    REQUIRE(results.size() == 10);
    for (const cliff::CriterionResult& c : results) {
        std::cout << "criterion " << c.id << " [" << c.name << "]: "
                  << (c.passed ? "PASS" : "FAIL") << " — " << c.detail << std::endl;
        CHECK_MESSAGE(c.passed, "criterion ", c.id, " (", c.name, "): ", c.detail);
    }
}
