#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mbr/rbt_search.hpp"

using namespace mbr;

TEST_CASE("content forms have full per-node rank") {
    for (Variant v : {Variant::Baseline, Variant::C1, Variant::C2, Variant::CompleteGraph}) {
        const auto p = SystemParams::make(4, 2, 3, Field::prime(13), 1);
        if (!variant_admissible(v, p)) continue;
        const auto forms = content_forms(v, p);
        REQUIRE(forms.forms.size() == 4);
        for (const auto& m : forms.forms) {
            CHECK(m.cols() == p.stripe_message_size());
            CHECK(mat_rank(m) == std::min<std::size_t>(m.rows(), m.cols()));
        }
    }
}

TEST_CASE("complete-graph schedule found for a single pair") {
    const auto p = SystemParams::make(4, 2, 3, Field::prime(7), 1);
    const auto forms = content_forms(Variant::CompleteGraph, p);
    SearchBudget budget{default_enumeration_budget(), 0};
    const std::vector<std::uint32_t> helpers{1, 2, 3};
    const auto sched = schedule_feasible(forms, 4, helpers, budget);
    REQUIRE(sched.has_value());
    CHECK(sched->helpers == helpers);
    for (const auto& idx : sched->indices) CHECK(idx.size() == 1);
}

TEST_CASE("C1 transfer schedule for failed <= d matches the known index") {
    // (4,2,2): repairing node 1 by transfer passes each helper's 1st symbol
    const auto p = SystemParams::make(4, 2, 2, Field::prime(7), 1);
    const auto forms = content_forms(Variant::C1, p);
    SearchBudget budget{default_enumeration_budget(), 0};
    const std::vector<std::uint32_t> helpers{2, 3};
    const auto sched = schedule_feasible(forms, 1, helpers, budget);
    REQUIRE(sched.has_value());
    // index 0 per helper is one valid witness; the search returns the
    // lexicographically first feasible schedule
    for (const auto& idx : sched->indices) CHECK(idx == std::vector<std::uint32_t>{0});
}

TEST_CASE("baseline has an infeasible pair") {
    const auto p = SystemParams::make(4, 2, 2, Field::prime(7), 1);
    const auto forms = content_forms(Variant::Baseline, p);
    SearchBudget budget{default_enumeration_budget(), 0};
    bool some_infeasible = false;
    for (std::uint32_t failed = 1; failed <= 4 && !some_infeasible; ++failed) {
        std::vector<std::uint32_t> helpers;
        for (std::uint32_t i = 1; i <= 4; ++i)
            if (i != failed) helpers.push_back(i);
        helpers.resize(2);
        if (!schedule_feasible(forms, failed, helpers, budget)) some_infeasible = true;
    }
    CHECK(some_infeasible);
}

TEST_CASE("complete graph is feasible for every pair") {
    const auto p = SystemParams::make(5, 3, 4, Field::prime(13), 1);
    const auto report = verify_theorem_witness(Variant::CompleteGraph, p, 1'000'000);
    CHECK(report.overall_feasible);
    CHECK(report.pairs.size() == 5);  // d = n-1: one helper set per failed node
    for (const auto& pr : report.pairs) {
        CHECK(pr.feasible);
        REQUIRE(pr.witness.has_value());
    }
    CHECK(report.rank_tests > 0);
}

TEST_CASE("C1 is feasible only for failed <= d") {
    const auto p = SystemParams::make(4, 2, 2, Field::prime(7), 1);
    const auto report = verify_theorem_witness(Variant::C1, p, 1'000'000);
    CHECK_FALSE(report.overall_feasible);
    for (const auto& pr : report.pairs)
        if (pr.failed <= p.d) CHECK(pr.feasible);
    CHECK(std::any_of(report.pairs.begin(), report.pairs.end(),
                      [](const PairFeasibility& pr) { return !pr.feasible; }));
}

TEST_CASE("C2 is feasible from the designated set but not overall") {
    const auto p = SystemParams::make(5, 2, 2, Field::prime(7), 1);
    const auto report = verify_theorem_witness(Variant::C2, p, 1'000'000);
    CHECK_FALSE(report.overall_feasible);
    for (const auto& pr : report.pairs) {
        const auto designated = designated_helpers_c2(pr.failed, p);
        if (std::is_permutation(pr.helpers.begin(), pr.helpers.end(), designated.begin()))
            CHECK(pr.feasible);
    }
}

TEST_CASE("shared-symbol census: complete graph never repeats an index") {
    // n = 4, d = 3: node 4 has exactly 3 stored symbols and helps in 3
    // repair events, one per other node, each passing a distinct edge.
    const auto p = SystemParams::make(4, 2, 3, Field::prime(7), 1);
    const auto census = shared_symbol_census(Variant::CompleteGraph, 4, p, 1'000'000);
    CHECK(census.node == 4);
    CHECK(census.events.size() == 3);
    CHECK_FALSE(census.repeated);
    REQUIRE(census.index_counts.size() == 3);
    for (auto c : census.index_counts) CHECK(c == 1);
}

TEST_CASE("shared-symbol census: C1 helper repeats an index") {
    // node 4 has alpha = 2 stored symbols; more than 2 feasible events
    // force a repeated index by counting.
    const auto p = SystemParams::make(4, 2, 2, Field::prime(7), 1);
    const auto census = shared_symbol_census(Variant::C1, 4, p, 1'000'000);
    CHECK(census.events.size() > p.alpha());
    CHECK(census.repeated);
    std::uint32_t total = 0;
    for (auto c : census.index_counts) total += c;
    CHECK(total == census.events.size());
}

TEST_CASE("budget exhaustion is reported, never truncated") {
    const auto p = SystemParams::make(5, 3, 4, Field::prime(13), 1);
    CHECK_THROWS_AS(verify_theorem_witness(Variant::Baseline, p, 2), BudgetExceededError);
}
