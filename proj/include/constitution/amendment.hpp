#pragma once

#include <optional>
#include <vector>

#include "constitution/core.hpp"
#include "constitution/errors.hpp"
#include "constitution/preferences.hpp"
#include "constitution/rational.hpp"

namespace constitution {

enum class AmendmentMethod { Condorcet, Conservative };
enum class AmendDirection { Increase, Decrease, None };

struct AmendmentOutcome {
    bool amend = false;  // false = Retain
    std::optional<Rule> new_rule;
    AmendDirection direction = AmendDirection::None;
    int support = 0;
    std::optional<Profile> ballot;  // the V^{delta,delta'} used when amending

    static AmendmentOutcome retain() { return AmendmentOutcome{}; }
};

struct Trajectory {
    std::vector<std::pair<Rule, AmendmentOutcome>> steps;
    Rule terminal;
};

/// Posterior Consistency for a concrete pair (delta, delta'): either the
/// current rule rejects the induced ballot, or the proposed rule accepts it.
inline bool posterior_consistent(const Rational& delta, const Rational& delta_prime,
                                 const IdealProfile& ideals) {
    const int n = ideals.n();
    const Profile ballot = amendment_ballot(ideals, delta, delta_prime);
    if (decide(snap_delta(n, delta), ballot) == Decision::Reject) return true;
    return decide(snap_delta(n, delta_prime), ballot) == Decision::Accept;
}

namespace detail {

inline void require_same_n(const Rule& rule, const IdealProfile& ideals) {
    if (ideals.n() != rule.n)
        throw dimension_error("ideal profile length does not match rule community size");
}

inline int count_at_least(const IdealProfile& ideals, const Rational& x) {
    int c = 0;
    for (const Rational& ideal : ideals.ideals())
        if (ideal >= x) ++c;
    return c;
}

inline int count_at_most(const IdealProfile& ideals, const Rational& x) {
    int c = 0;
    for (const Rational& ideal : ideals.ideals())
        if (ideal <= x) ++c;
    return c;
}

inline AmendmentOutcome make_amend(const IdealProfile& ideals, const Rational& delta,
                                   const Rational& delta_prime, AmendDirection direction) {
    AmendmentOutcome out;
    out.amend = true;
    out.new_rule = snap_delta(ideals.n(), delta_prime);
    out.direction = direction;
    out.ballot = amendment_ballot(ideals, delta, delta_prime);
    out.support = approvals(*out.ballot);
    return out;
}

/// Qualifying increases: grid values x > delta with |{i : delta_i >= x}| > x*n.
/// Qualifying decreases: grid values x < delta with |{i : delta_i <= x}| > delta*n.
/// The two sets cannot both be nonempty (disjoint supporter sets, each a
/// strict majority), which the caller relies on.
struct QualifyingSets {
    std::vector<Rational> increases;  // ascending
    std::vector<Rational> decreases;  // ascending
};

inline QualifyingSets qualifying_amendments(const Rule& rule, const IdealProfile& ideals) {
    require_same_n(rule, ideals);
    const int n = rule.n;
    const Rational delta = canonical_delta(rule);
    const Rational n_rat(n);
    QualifyingSets q;
    for (const Rational& x : delta_grid(n)) {
        if (x > delta) {
            if (Rational(count_at_least(ideals, x)) > x * n_rat) q.increases.push_back(x);
        } else if (x < delta) {
            if (Rational(count_at_most(ideals, x)) > delta * n_rat) q.decreases.push_back(x);
        }
    }
    if (!q.increases.empty() && !q.decreases.empty())
        throw domain_error("increase and decrease conditions held simultaneously");
    return q;
}

}  // namespace detail

/// Condorcet Amendment: the maximal qualifying increase, else the minimal
/// qualifying decrease, else Retain.
inline AmendmentOutcome condorcet_amend(const Rule& rule, const IdealProfile& ideals) {
    const auto q = detail::qualifying_amendments(rule, ideals);
    const Rational delta = canonical_delta(rule);
    if (!q.increases.empty())
        return detail::make_amend(ideals, delta, q.increases.back(), AmendDirection::Increase);
    if (!q.decreases.empty())
        return detail::make_amend(ideals, delta, q.decreases.front(), AmendDirection::Decrease);
    return AmendmentOutcome::retain();
}

/// Conservative Amendment: the minimal qualifying increase, else the maximal
/// qualifying decrease, else Retain.
inline AmendmentOutcome conservative_amend(const Rule& rule, const IdealProfile& ideals) {
    const auto q = detail::qualifying_amendments(rule, ideals);
    const Rational delta = canonical_delta(rule);
    if (!q.increases.empty())
        return detail::make_amend(ideals, delta, q.increases.front(), AmendDirection::Increase);
    if (!q.decreases.empty())
        return detail::make_amend(ideals, delta, q.decreases.back(), AmendDirection::Decrease);
    return AmendmentOutcome::retain();
}

/// Axiom-direct brute force over the delta grid, kept independent of the
/// closed forms above so it can check them.
struct OracleDiagnostic {
    std::vector<Rational> survivors;       // pass current-rule acceptance + posterior consistency
    std::vector<Rational> undominated;     // most-preferred within the survivor set
    std::vector<Rational> max_approval;    // survivors maximizing ballot approvals
    bool undominated_unique = true;        // false flags a property violation
    bool max_approval_matches_undominated = true;
};

struct OracleResult {
    AmendmentOutcome outcome;
    OracleDiagnostic diagnostic;
};

inline OracleResult oracle_amend(const Rule& rule, const IdealProfile& ideals,
                                 AmendmentMethod method) {
    detail::require_same_n(rule, ideals);
    const int n = rule.n;
    const Rational delta = canonical_delta(rule);

    OracleResult result;
    auto& diag = result.diagnostic;
    for (const Rational& x : delta_grid(n)) {
        if (x == delta) continue;
        const Profile ballot = amendment_ballot(ideals, delta, x);
        if (decide(rule, ballot) != Decision::Accept) continue;
        if (!posterior_consistent(delta, x, ideals)) continue;
        diag.survivors.push_back(x);
    }
    if (diag.survivors.empty()) {
        result.outcome = AmendmentOutcome::retain();
        return result;
    }

    diag.undominated = most_preferred(ideals, diag.survivors);
    diag.undominated_unique = diag.undominated.size() == 1;

    int best_support = -1;
    for (const Rational& x : diag.survivors) {
        const int s = approvals(amendment_ballot(ideals, delta, x));
        if (s > best_support) {
            best_support = s;
            diag.max_approval.clear();
        }
        if (s == best_support) diag.max_approval.push_back(x);
    }

    Rational choice = diag.survivors.front();
    if (method == AmendmentMethod::Condorcet) {
        if (!diag.undominated.empty()) choice = diag.undominated.front();
        bool found = false;
        for (const Rational& x : diag.max_approval)
            if (x == choice) found = true;
        diag.max_approval_matches_undominated = found;
    } else {
        Rational best_dist = (diag.survivors.front() - delta).abs();
        for (const Rational& x : diag.survivors) {
            const Rational d = (x - delta).abs();
            if (d < best_dist) {
                best_dist = d;
                choice = x;
            }
        }
    }

    const AmendDirection dir = choice > delta ? AmendDirection::Increase : AmendDirection::Decrease;
    result.outcome = detail::make_amend(ideals, delta, choice, dir);
    return result;
}

/// Repeated amendment until Retain. The cap |grid|+1 turns the termination
/// theorems into a runtime check: revisiting any delta proves a cycle.
inline Trajectory iterate_to_fixpoint(const Rule& rule, const IdealProfile& ideals,
                                      AmendmentMethod method) {
    detail::require_same_n(rule, ideals);
    const std::size_t cap = delta_grid(rule.n).size() + 1;
    Trajectory traj{{}, rule};
    Rule current = rule;
    for (std::size_t step = 0; step < cap; ++step) {
        const AmendmentOutcome out = method == AmendmentMethod::Condorcet
                                         ? condorcet_amend(current, ideals)
                                         : conservative_amend(current, ideals);
        traj.steps.emplace_back(current, out);
        if (!out.amend) {
            traj.terminal = current;
            return traj;
        }
        current = *out.new_rule;
    }
    throw cycle_error("amendment iteration exceeded the grid-size cap");
}

}  // namespace constitution
