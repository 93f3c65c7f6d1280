#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "constitution/amendment.hpp"
#include "constitution/axioms.hpp"
#include "constitution/core.hpp"
#include "constitution/preferences.hpp"
#include "constitution/random_profiles.hpp"

namespace constitution {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::uint64_t cases = 0;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

namespace selfcheck {

/// Propositions on the founding axioms: the non-degenerate survivors of
/// Decisiveness..Concordance are exactly the threshold rules with
/// m in [floor(n/2)+1, n], and Minimality uniquely selects simple majority.
inline CheckResult characterization(int n, EnumerationMode mode) {
    CheckResult res{std::string("characterization n=") + std::to_string(n) +
                    (mode == EnumerationMode::FullTable ? " full" : " count")};
    const auto report = enumerate_consistent_rules(n, mode);
    res.cases = report.candidates;

    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    int degenerate_count = 0;
    for (const auto& rec : report.survivors) {
        if (rec.degenerate) {
            ++degenerate_count;
            continue;
        }
        if (!rec.threshold || !detail::is_threshold_rule(rec.rule)) {
            res.fail("non-threshold survivor");
            continue;
        }
        const int m = *rec.threshold;
        if (m < n / 2 + 1 || m > n) {
            res.fail("survivor threshold m=" + std::to_string(m) + " outside [floor(n/2)+1, n]");
            continue;
        }
        if (seen[static_cast<std::size_t>(m)]) res.fail("duplicate survivor threshold");
        seen[static_cast<std::size_t>(m)] = true;
    }
    for (int m = n / 2 + 1; m <= n; ++m)
        if (!seen[static_cast<std::size_t>(m)])
            res.fail("missing survivor threshold m=" + std::to_string(m));
    if (degenerate_count != 1) res.fail("expected exactly one degenerate survivor");
    if (!report.all_threshold) res.fail("report flags a non-threshold survivor");
    if (!report.minimality_winner || *report.minimality_winner != Rule(n, n / 2 + 1))
        res.fail("minimality winner is not simple majority");

    if (mode == EnumerationMode::FullTable) {
        // Every full-table survivor's count quotient must appear among the
        // count-only survivors for the same n.
        const auto count_report = enumerate_consistent_rules(n, EnumerationMode::CountOnly);
        for (const auto& rec : report.survivors) {
            bool found = false;
            for (const auto& other : count_report.survivors)
                if (other.rule == rec.rule) found = true;
            if (!found) res.fail("full-table survivor missing from count-only survivors");
        }
    }
    return res;
}

/// Irreflexivity and antisymmetry of the minimality ordering on survivors.
inline CheckResult minimality_ordering(int n) {
    CheckResult res{"minimality ordering n=" + std::to_string(n)};
    const auto report = enumerate_consistent_rules(n, EnumerationMode::CountOnly);
    for (const auto& a : report.survivors) {
        if (minimality_prefers(a.rule, a.rule)) res.fail("minimality_prefers is not irreflexive");
        for (const auto& b : report.survivors) {
            ++res.cases;
            if (minimality_prefers(a.rule, b.rule) && minimality_prefers(b.rule, a.rule))
                res.fail("minimality_prefers is not antisymmetric");
            // Threshold shortcut agreement on non-degenerate survivors.
            if (!a.degenerate && !b.degenerate &&
                minimality_prefers(a.rule, b.rule) != (*a.threshold < *b.threshold))
                res.fail("minimality shortcut disagrees with ordering");
        }
    }
    return res;
}

using ProfileVisitor = std::function<void(const IdealProfile&)>;

/// Drives either exhaustive grid enumeration (n <= exhaustive_limit) or
/// seeded random sampling through the visitor.
inline void visit_profiles(int n, int exhaustive_limit, std::uint64_t random_count,
                           std::uint64_t seed, const ProfileVisitor& visit) {
    if (n <= exhaustive_limit) {
        for_each_grid_profile(n, visit);
    } else {
        ProfileGenerator gen(n, seed);
        for (std::uint64_t i = 0; i < random_count; ++i) visit(gen.uniform());
    }
}

/// Closed form vs axiom-direct oracle for one method, over all current grid
/// rules and the given profile regime.
inline CheckResult theorem_equivalence(int n, AmendmentMethod method, int exhaustive_limit,
                                       std::uint64_t random_count, std::uint64_t seed) {
    CheckResult res{std::string(method == AmendmentMethod::Condorcet ? "theorem1" : "theorem2") +
                    " oracle equivalence n=" + std::to_string(n)};
    const auto grid = delta_grid(n);
    visit_profiles(n, exhaustive_limit, random_count, seed, [&](const IdealProfile& ideals) {
        for (const Rational& delta : grid) {
            ++res.cases;
            const Rule rule = snap_delta(n, delta);
            const AmendmentOutcome closed = method == AmendmentMethod::Condorcet
                                                ? condorcet_amend(rule, ideals)
                                                : conservative_amend(rule, ideals);
            const OracleResult oracle = oracle_amend(rule, ideals, method);

            if (closed.amend != oracle.outcome.amend) {
                res.fail("closed form and oracle disagree on amend vs retain");
                continue;
            }
            if (!closed.amend) {
                if (!oracle.diagnostic.survivors.empty())
                    res.fail("retain with nonempty oracle survivor set");
                continue;
            }
            if (oracle.diagnostic.survivors.empty()) {
                res.fail("amend with empty oracle survivor set");
                continue;
            }
            if (*closed.new_rule != *oracle.outcome.new_rule)
                res.fail("closed form and oracle select different rules");
            if (method == AmendmentMethod::Condorcet) {
                if (!oracle.diagnostic.undominated_unique)
                    res.fail("oracle undominated set is not a singleton");
                else if (canonical_delta(*closed.new_rule) != oracle.diagnostic.undominated.front())
                    res.fail("closed form differs from the undominated survivor");
            }
            // Posterior consistency witnessed by the returned ballot.
            if (decide(rule, *closed.ballot) != Decision::Accept ||
                decide(*closed.new_rule, *closed.ballot) != Decision::Accept)
                res.fail("returned amendment is not posterior consistent");
        }
    });
    return res;
}

/// Condorcet amendment applied at delta = 1/2 and re-applied at the result
/// must Retain.
inline CheckResult idempotence(int n, int exhaustive_limit, std::uint64_t random_count,
                               std::uint64_t seed) {
    CheckResult res{"condorcet idempotence n=" + std::to_string(n)};
    const Rule majority(n, n / 2 + 1);
    visit_profiles(n, exhaustive_limit, random_count, seed, [&](const IdealProfile& ideals) {
        ++res.cases;
        const AmendmentOutcome first = condorcet_amend(majority, ideals);
        const Rule after = first.amend ? *first.new_rule : majority;
        if (condorcet_amend(after, ideals).amend)
            res.fail("second condorcet amendment did not retain");
    });
    return res;
}

/// Conservative iteration to fixpoint from delta = 1/2 must terminate at the
/// single-step Condorcet result, with a monotone trajectory within the cap.
inline CheckResult iterate_equivalence(int n, int exhaustive_limit, std::uint64_t random_count,
                                       std::uint64_t seed) {
    CheckResult res{"iterate-from-majority n=" + std::to_string(n)};
    const Rule majority(n, n / 2 + 1);
    const std::size_t grid_size = delta_grid(n).size();
    visit_profiles(n, exhaustive_limit, random_count, seed, [&](const IdealProfile& ideals) {
        ++res.cases;
        const Trajectory traj = iterate_to_fixpoint(majority, ideals, AmendmentMethod::Conservative);
        const AmendmentOutcome single = condorcet_amend(majority, ideals);
        const Rule expected = single.amend ? *single.new_rule : majority;
        if (traj.terminal != expected)
            res.fail("conservative fixpoint differs from single condorcet step");
        if (traj.steps.size() > grid_size)
            res.fail("trajectory longer than the grid");
        Rational prev = canonical_delta(majority);
        for (const auto& [rule, outcome] : traj.steps) {
            if (canonical_delta(rule) < prev) res.fail("trajectory decreased from majority start");
            prev = canonical_delta(rule);
        }
    });
    return res;
}

/// Structural invariants: increase/decrease mutual exclusivity, domination
/// asymmetry, undominated nonemptiness, and ballot/compare coherence.
inline CheckResult structural(int n, int exhaustive_limit, std::uint64_t random_count,
                              std::uint64_t seed) {
    CheckResult res{"structural invariants n=" + std::to_string(n)};
    const auto grid = delta_grid(n);
    visit_profiles(n, exhaustive_limit, random_count, seed, [&](const IdealProfile& ideals) {
        ++res.cases;
        for (const Rational& delta : grid) {
            // qualifying_amendments throws if both directions qualify.
            try {
                detail::qualifying_amendments(snap_delta(n, delta), ideals);
            } catch (const domain_error&) {
                res.fail("increase and decrease conditions held simultaneously");
            }
        }
        for (const Rational& p : grid) {
            for (const Rational& q : grid) {
                if (p == q) continue;
                if (dominates(ideals, p, q) && dominates(ideals, q, p))
                    res.fail("domination is not asymmetric");
            }
        }
        if (most_preferred(ideals, grid).empty())
            res.fail("undominated set empty on the grid");
        for (const Rational& delta : grid) {
            for (const Rational& dp : grid) {
                if (delta == dp) continue;
                const Profile ballot = amendment_ballot(ideals, delta, dp);
                for (int i = 0; i < n; ++i) {
                    const bool pref =
                        compare(ideals[static_cast<std::size_t>(i)], dp, delta) ==
                        Preference::FirstPreferred;
                    if (ballot[static_cast<std::size_t>(i)] != pref)
                        res.fail("ballot bit disagrees with pairwise preference");
                }
            }
        }
    });
    return res;
}

}  // namespace selfcheck
}  // namespace constitution
