#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spindec/verify.hpp"

#include <string>

using namespace spindec;

TEST_CASE("all suites pass at reduced bounds") {
    SuiteBounds bounds;
    bounds.case_identities = 80;
    bounds.recurrence = 512;
    bounds.power = 2000;
    bounds.blocks = 60;
    bounds.shift = 40;
    bounds.diagonal = 60;
    bounds.regularization = 24;
    bounds.convention = 60;
    const auto reports = run_suites("all", bounds);
    REQUIRE(reports.size() == 9);
    for (const auto& r : reports) {
        CAPTURE(r.suite);
        CHECK(r.passed());
        CHECK(r.instances > 0);
        // Final line carries the verdict and the instance count.
        const std::string tail = "OK " + r.suite + " " + std::to_string(r.instances) + "\n";
        REQUIRE(r.to_string().size() >= tail.size());
        CHECK(r.to_string().substr(r.to_string().size() - tail.size()) == tail);
    }
}

TEST_CASE("suite selection by name") {
    const auto one = run_suites("recurrence", SuiteBounds{.recurrence = 64});
    REQUIRE(one.size() == 1);
    CHECK(one[0].suite == "recurrence");
    CHECK_THROWS_AS(run_suites("nonsense"), std::invalid_argument);
}

TEST_CASE("recurrence counterexamples outside the hypothesis are noted") {
    const SuiteReport r = suite_recurrence(64);
    CHECK(r.passed());
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0].find("expected-outside-hypothesis") == 0);
    // g(2,1) = 0 but g(1,1) + g(1,0) = 1: the smallest pair off the hypothesis.
    CHECK(r.notes[0].find("(k=2,l=1)") != std::string::npos);
}

TEST_CASE("regularization counterexamples outside the hypothesis are noted") {
    const SuiteReport r = suite_regularization(24);
    CHECK(r.passed());
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0].find("expected-outside-hypothesis") == 0);
    // First strict partition ending 2,1 in scan order (descending first part).
    CHECK(r.notes[0].find("(21,2,1)") != std::string::npos);
}

TEST_CASE("expansion suite covers all cases exactly once per rank") {
    const SuiteReport r = suite_expansions();
    CHECK(r.passed());
    CHECK(r.instances == 48); // 8 odd cases x 3 ranks + 4 starts x 2 parities x 3 ranks
}

TEST_CASE("convention audit distinguishes the residue rules") {
    const SuiteReport r = suite_convention_audit(40);
    CHECK(r.passed());
    REQUIRE(r.notes.size() == 2);
    CHECK(r.notes[0].find("literal-sentence rule breaks block consistency") == 0);
    CHECK(r.notes[1].find("rank-19 expansion") != std::string::npos);
}

TEST_CASE("frozen instance counts at reference bounds") {
    // Regression anchors: these counts change only if the scan domains change.
    CHECK(suite_power_identity(100000).instances == 49998);
    CHECK(suite_expansions().instances == 48);
    CHECK(suite_diagonal(60).instances == 770);
    CHECK(suite_case_identities(60).instances == 12215);
    CHECK(suite_recurrence(256).instances == 31251);
    CHECK(suite_blocks(40).instances == 1519);
    CHECK(suite_shift(40).instances == 4224);
    CHECK(suite_regularization(24).instances == 161);
}

TEST_CASE("failure lines are capped but counted in full") {
    SuiteReport r;
    r.suite = "demo";
    for (int k = 0; k < 60; ++k) r.fail("instance " + std::to_string(k));
    r.instances = 60;
    CHECK(r.total_failures == 60);
    CHECK(r.failures.size() == 50);
    const std::string text = r.to_string();
    CHECK(text.find("(10 more failures suppressed)") != std::string::npos);
    CHECK(text.rfind("FAILED demo 60\n") == text.size() - 15);
}
