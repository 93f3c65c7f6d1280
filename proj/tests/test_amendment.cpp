#include <catch2/catch_amalgamated.hpp>

#include "constitution/amendment.hpp"
#include "constitution/random_profiles.hpp"
#include "constitution/selfcheck.hpp"

using namespace constitution;

namespace {

IdealProfile ideals_of(int n, std::vector<Rational> points) {
    return IdealProfile::snapped(n, points);
}

const IdealProfile kFourHighOneLow = ideals_of(5, {{4, 5}, {4, 5}, {4, 5}, {4, 5}, {1, 2}});
const IdealProfile kAllHigh = ideals_of(5, {{4, 5}, {4, 5}, {4, 5}, {4, 5}, {4, 5}});
const IdealProfile kAllLow = ideals_of(5, {{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}});

}  // namespace

TEST_CASE("posterior consistency checks the new rule against the ballot") {
    // Ballot 11110 has 4 approvals: d^{1/2} accepts but d^{4/5} needs 5.
    CHECK_FALSE(posterior_consistent({1, 2}, {4, 5}, kFourHighOneLow));
    // d^{3/5} needs 4: consistent.
    CHECK(posterior_consistent({1, 2}, {3, 5}, kFourHighOneLow));
    // Empty ballot: the old rule rejects, so the condition is vacuous.
    const auto at_half = ideals_of(5, {{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}});
    CHECK(posterior_consistent({1, 2}, {4, 5}, at_half));
    CHECK_THROWS_AS(posterior_consistent({1, 2}, {1, 2}, kFourHighOneLow),
                    degenerate_amendment_error);
}

TEST_CASE("condorcet amendment takes the maximal qualifying increase") {
    const auto out = condorcet_amend(Rule(5, 3), kFourHighOneLow);
    REQUIRE(out.amend);
    CHECK(*out.new_rule == Rule(5, 4));  // delta' = 3/5; 4/5 lacks a 4/5-supermajority
    CHECK(out.direction == AmendDirection::Increase);
    CHECK(out.support == 4);
    CHECK(out.ballot->str() == "11110");

    const auto unanimous = condorcet_amend(Rule(5, 3), kAllHigh);
    REQUIRE(unanimous.amend);
    CHECK(canonical_delta(*unanimous.new_rule) == Rational(4, 5));
}

TEST_CASE("condorcet amendment takes the minimal qualifying decrease") {
    const auto out = condorcet_amend(Rule(5, 5), kAllLow);
    REQUIRE(out.amend);
    CHECK(out.direction == AmendDirection::Decrease);
    CHECK(canonical_delta(*out.new_rule) == Rational(1, 2));
    CHECK(out.support == 5);
}

TEST_CASE("conservative amendment moves one step toward the support") {
    const auto up = conservative_amend(Rule(5, 3), kAllHigh);
    REQUIRE(up.amend);
    CHECK(canonical_delta(*up.new_rule) == Rational(3, 5));  // minimal qualifying increase

    const auto down = conservative_amend(Rule(5, 5), kAllLow);
    REQUIRE(down.amend);
    CHECK(canonical_delta(*down.new_rule) == Rational(3, 5));  // maximal qualifying decrease

    CHECK_FALSE(conservative_amend(Rule(5, 3), kAllLow).amend);
}

TEST_CASE("amendments are witnessed by a ballot both rules accept") {
    ProfileGenerator gen(7, 11);
    for (int trial = 0; trial < 200; ++trial) {
        const IdealProfile ideals = gen.uniform();
        for (const auto& delta : delta_grid(7)) {
            const Rule rule = snap_delta(7, delta);
            for (const AmendmentOutcome& out :
                 {condorcet_amend(rule, ideals), conservative_amend(rule, ideals)}) {
                if (!out.amend) continue;
                CHECK(decide(rule, *out.ballot) == Decision::Accept);
                CHECK(decide(*out.new_rule, *out.ballot) == Decision::Accept);
                CHECK(out.support == approvals(*out.ballot));
                CHECK(*out.new_rule != rule);
            }
        }
    }
}

TEST_CASE("oracle survivors, undominated set and choice on the worked examples") {
    const auto up = oracle_amend(Rule(5, 3), kFourHighOneLow, AmendmentMethod::Condorcet);
    CHECK(up.diagnostic.survivors == std::vector<Rational>{{3, 5}});
    CHECK(up.diagnostic.undominated == std::vector<Rational>{{3, 5}});
    REQUIRE(up.outcome.amend);
    CHECK(canonical_delta(*up.outcome.new_rule) == Rational(3, 5));

    const auto down = oracle_amend(Rule(5, 5), kAllLow, AmendmentMethod::Conservative);
    CHECK(down.diagnostic.survivors == std::vector<Rational>{{1, 2}, {3, 5}});
    REQUIRE(down.outcome.amend);
    CHECK(canonical_delta(*down.outcome.new_rule) == Rational(3, 5));  // closest to 4/5

    const auto at_delta = ideals_of(5, {{3, 5}, {3, 5}, {3, 5}, {3, 5}, {3, 5}});
    const auto retain = oracle_amend(Rule(5, 4), at_delta, AmendmentMethod::Condorcet);
    CHECK_FALSE(retain.outcome.amend);
    CHECK(retain.diagnostic.survivors.empty());
}

TEST_CASE("iteration reaches the fixpoint and records every step") {
    const auto conservative =
        iterate_to_fixpoint(Rule(5, 3), kAllHigh, AmendmentMethod::Conservative);
    REQUIRE(conservative.steps.size() == 3);  // 1/2 -> 3/5 -> 4/5 -> retain
    CHECK(canonical_delta(conservative.steps[0].first) == Rational(1, 2));
    CHECK(canonical_delta(conservative.steps[1].first) == Rational(3, 5));
    CHECK(canonical_delta(conservative.steps[2].first) == Rational(4, 5));
    CHECK_FALSE(conservative.steps.back().second.amend);
    CHECK(conservative.terminal == Rule(5, 5));

    const auto condorcet = iterate_to_fixpoint(Rule(5, 3), kAllHigh, AmendmentMethod::Condorcet);
    REQUIRE(condorcet.steps.size() == 2);  // 1/2 -> 4/5 -> retain
    CHECK(condorcet.terminal == Rule(5, 5));
    CHECK(condorcet.terminal == conservative.terminal);

    const auto idle = iterate_to_fixpoint(Rule(5, 3), kAllLow, AmendmentMethod::Conservative);
    CHECK(idle.steps.size() == 1);
    CHECK(idle.terminal == Rule(5, 3));

    // Each amend step's new rule is the next step's rule.
    for (std::size_t i = 0; i + 1 < conservative.steps.size(); ++i) {
        REQUIRE(conservative.steps[i].second.amend);
        CHECK(*conservative.steps[i].second.new_rule == conservative.steps[i + 1].first);
    }
}

TEST_CASE("dimension mismatches are rejected") {
    const auto small = ideals_of(3, {{1, 2}, {1, 2}, {2, 3}});
    CHECK_THROWS_AS(condorcet_amend(Rule(5, 3), small), dimension_error);
    CHECK_THROWS_AS(conservative_amend(Rule(5, 3), small), dimension_error);
    CHECK_THROWS_AS(oracle_amend(Rule(5, 3), small, AmendmentMethod::Condorcet), dimension_error);
    CHECK_THROWS_AS(iterate_to_fixpoint(Rule(5, 3), small, AmendmentMethod::Condorcet),
                    dimension_error);
}

TEST_CASE("closed forms agree with the oracle on sampled regimes") {
    for (int n : {3, 4, 5, 6}) {
        auto r1 = selfcheck::theorem_equivalence(n, AmendmentMethod::Condorcet, 7, 0, 0);
        INFO(r1.detail);
        CHECK(r1.ok);
        auto r2 = selfcheck::theorem_equivalence(n, AmendmentMethod::Conservative, 7, 0, 0);
        INFO(r2.detail);
        CHECK(r2.ok);
    }
    auto big = selfcheck::theorem_equivalence(11, AmendmentMethod::Condorcet, 7, 300, 5);
    INFO(big.detail);
    CHECK(big.ok);
}

TEST_CASE("idempotence and iterate-from-majority hold on sampled regimes") {
    for (int n : {3, 5, 6}) {
        CHECK(selfcheck::idempotence(n, 7, 0, 0).ok);
        CHECK(selfcheck::iterate_equivalence(n, 7, 0, 0).ok);
    }
    CHECK(selfcheck::idempotence(12, 7, 300, 5).ok);
    CHECK(selfcheck::iterate_equivalence(12, 7, 300, 5).ok);
}
