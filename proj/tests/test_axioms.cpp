#include <catch2/catch_amalgamated.hpp>

#include "constitution/axioms.hpp"

using namespace constitution;

namespace {

CountRule threshold_rule(int n, int m) {
    std::vector<bool> accept(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) accept[static_cast<std::size_t>(k)] = k >= m;
    return CountRule(n, std::move(accept));
}

CountRule never_accept(int n) {
    return CountRule(n, std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
}

TruthTableRule table_accepting_only(int n, std::initializer_list<std::uint32_t> masks) {
    std::vector<bool> table(std::size_t{1} << n, false);
    for (auto m : masks) table[m] = true;
    return TruthTableRule(n, std::move(table));
}

}  // namespace

TEST_CASE("monotonicity on count rules") {
    CHECK(check_monotonic(threshold_rule(3, 2)));
    CountRule spike(3, {false, true, false, false});  // accepts exactly one approval
    CHECK_FALSE(check_monotonic(spike));
}

TEST_CASE("monotonicity on truth tables") {
    // Accepting only profile [1,0] violates monotonicity via [1,1].
    CHECK_FALSE(check_monotonic(table_accepting_only(2, {0b01})));
    CHECK(check_monotonic(table_accepting_only(2, {0b01, 0b11})));
}

TEST_CASE("anonymity on truth tables") {
    // A lifted count rule is anonymous by construction.
    std::vector<bool> table(8);
    for (std::uint32_t v = 0; v < 8; ++v) table[v] = std::popcount(v) >= 2;
    CHECK(check_anonymous(TruthTableRule(3, table)));

    CHECK_FALSE(check_anonymous(table_accepting_only(2, {0b01, 0b11})));

    // Dictatorship of agent 1: accept iff V_1 = 1. Compare [1,0,0] vs [0,1,0].
    std::vector<bool> dictator(8);
    for (std::uint32_t v = 0; v < 8; ++v) dictator[v] = v & 1;
    CHECK_FALSE(check_anonymous(TruthTableRule(3, dictator)));
}

TEST_CASE("concordance on count rules") {
    CHECK(check_concordant(threshold_rule(3, 2)));
    CHECK_FALSE(check_concordant(threshold_rule(3, 1)));
    // Exactly-half rules fail: a = b = 2 with a + b <= 4.
    CHECK_FALSE(check_concordant(threshold_rule(4, 2)));
    CHECK(check_concordant(threshold_rule(4, 3)));
}

TEST_CASE("concordance count criterion agrees with the profile-level axiom") {
    for (int n = 1; n <= 4; ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
            std::vector<bool> accept(static_cast<std::size_t>(n) + 1);
            for (int k = 0; k <= n; ++k) accept[static_cast<std::size_t>(k)] = (bits >> k) & 1;
            const CountRule rule(n, accept);
            std::vector<bool> table(std::size_t{1} << n);
            for (std::uint32_t v = 0; v < (1u << n); ++v)
                table[v] = rule.accepts_count(std::popcount(v));
            CHECK(check_concordant(rule) == check_concordant(TruthTableRule(n, table)));
        }
    }
}

TEST_CASE("minimality prefers the rule accepting with fewer approvals") {
    CHECK(minimality_prefers(threshold_rule(5, 3), threshold_rule(5, 4)));
    CHECK_FALSE(minimality_prefers(threshold_rule(5, 4), threshold_rule(5, 3)));
    CHECK_FALSE(minimality_prefers(threshold_rule(5, 3), threshold_rule(5, 3)));
    CHECK_THROWS_AS(minimality_prefers(threshold_rule(5, 3), threshold_rule(4, 3)),
                    dimension_error);
    // The never-accepting rule prefers nothing and everything is preferred to it.
    CHECK_FALSE(minimality_prefers(never_accept(5), threshold_rule(5, 3)));
    CHECK(minimality_prefers(threshold_rule(5, 5), never_accept(5)));
}

TEST_CASE("count-only enumeration survivors are thresholds plus never-accept") {
    const auto report = enumerate_consistent_rules(3, EnumerationMode::CountOnly);
    CHECK(report.candidates == 16);
    REQUIRE(report.survivors.size() == 3);
    int degenerate = 0;
    std::vector<int> thresholds;
    for (const auto& rec : report.survivors) {
        if (rec.degenerate)
            ++degenerate;
        else
            thresholds.push_back(*rec.threshold);
    }
    CHECK(degenerate == 1);
    CHECK(thresholds == std::vector<int>{2, 3});
    CHECK(report.all_threshold);
    REQUIRE(report.minimality_winner.has_value());
    CHECK(*report.minimality_winner == Rule(3, 2));
}

TEST_CASE("n=4 count-only: the exactly-half rule fails concordance") {
    const auto report = enumerate_consistent_rules(4, EnumerationMode::CountOnly);
    std::vector<int> thresholds;
    for (const auto& rec : report.survivors)
        if (!rec.degenerate) thresholds.push_back(*rec.threshold);
    CHECK(thresholds == std::vector<int>{3, 4});
}

TEST_CASE("n=2 full-table enumeration leaves unanimity and never-accept") {
    const auto report = enumerate_consistent_rules(2, EnumerationMode::FullTable);
    CHECK(report.candidates == 16);
    REQUIRE(report.survivors.size() == 2);
    int degenerate = 0;
    std::vector<int> thresholds;
    for (const auto& rec : report.survivors) {
        if (rec.degenerate)
            ++degenerate;
        else
            thresholds.push_back(*rec.threshold);
    }
    CHECK(degenerate == 1);
    CHECK(thresholds == std::vector<int>{2});
}

TEST_CASE("full-table survivors quotient into the count-only survivor set") {
    for (int n = 1; n <= 4; ++n) {
        const auto full = enumerate_consistent_rules(n, EnumerationMode::FullTable);
        const auto count = enumerate_consistent_rules(n, EnumerationMode::CountOnly);
        CHECK(full.survivors.size() == count.survivors.size());
        for (const auto& rec : full.survivors) {
            bool found = false;
            for (const auto& other : count.survivors)
                if (other.rule == rec.rule) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("enumeration capacity bounds") {
    CHECK_THROWS_AS(enumerate_consistent_rules(5, EnumerationMode::FullTable), capacity_error);
    CHECK_THROWS_AS(enumerate_consistent_rules(21, EnumerationMode::CountOnly), capacity_error);
}

TEST_CASE("founding rule is simple majority") {
    CHECK(founding_rule(5) == Rule(5, 3));
    CHECK(founding_rule(4) == Rule(4, 3));
    CHECK(founding_rule(1) == Rule(1, 1));
    CHECK_THROWS_AS(founding_rule(0), domain_error);
}
