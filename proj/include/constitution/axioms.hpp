#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "constitution/core.hpp"
#include "constitution/errors.hpp"

namespace constitution {

/// An arbitrary candidate decision rule d: B^n -> B, given extensionally.
/// Index v encodes the profile whose bit i is (v >> i) & 1.
struct TruthTableRule {
    int n;
    std::vector<bool> table;  // size 2^n

    TruthTableRule(int n_, std::vector<bool> table_) : n(n_), table(std::move(table_)) {
        if (n < 1 || n > 20) throw domain_error("truth table rule requires 1 <= n <= 20");
        if (table.size() != (std::size_t{1} << n))
            throw domain_error("truth table must have 2^n entries");
    }
};

/// The anonymity quotient: acceptance as a function of the approval count.
struct CountRule {
    int n;
    std::vector<bool> accept;  // size n+1, indexed by approval count

    CountRule(int n_, std::vector<bool> accept_) : n(n_), accept(std::move(accept_)) {
        if (n < 1) throw domain_error("count rule requires n >= 1");
        if (accept.size() != static_cast<std::size_t>(n) + 1)
            throw domain_error("count rule must cover counts 0..n");
    }

    bool accepts_count(int k) const { return accept[static_cast<std::size_t>(k)]; }

    friend bool operator==(const CountRule& a, const CountRule& b) {
        return a.n == b.n && a.accept == b.accept;
    }
};

/// Smallest approval count the rule ever accepts; empty for the
/// never-accepting rule.
inline std::optional<int> min_accepted_count(const CountRule& rule) {
    for (int k = 0; k <= rule.n; ++k)
        if (rule.accepts_count(k)) return k;
    return std::nullopt;
}

inline std::optional<int> min_accepted_count(const TruthTableRule& rule) {
    std::optional<int> best;
    for (std::uint32_t v = 0; v < (1u << rule.n); ++v) {
        if (!rule.table[v]) continue;
        const int k = std::popcount(v);
        if (!best || k < *best) best = k;
    }
    return best;
}

inline bool check_monotonic(const CountRule& rule) {
    for (int k = 0; k < rule.n; ++k)
        if (rule.accepts_count(k) && !rule.accepts_count(k + 1)) return false;
    return true;
}

inline bool check_monotonic(const TruthTableRule& rule) {
    // Check every accepted profile against its one-bit supersets.
    for (std::uint32_t v = 0; v < (1u << rule.n); ++v) {
        if (!rule.table[v]) continue;
        for (int i = 0; i < rule.n; ++i) {
            const std::uint32_t up = v | (1u << i);
            if (up != v && !rule.table[up]) return false;
        }
    }
    return true;
}

inline bool check_anonymous(const TruthTableRule& rule) {
    // Value must depend only on the approval count.
    std::vector<std::optional<bool>> by_count(static_cast<std::size_t>(rule.n) + 1);
    for (std::uint32_t v = 0; v < (1u << rule.n); ++v) {
        auto& slot = by_count[static_cast<std::size_t>(std::popcount(v))];
        if (!slot)
            slot = rule.table[v];
        else if (*slot != rule.table[v])
            return false;
    }
    return true;
}

inline bool check_concordant(const CountRule& rule) {
    // Violated iff two counts a, b with a + b <= n are both accepted.
    for (int a = 0; a <= rule.n; ++a) {
        if (!rule.accepts_count(a)) continue;
        for (int b = a; a + b <= rule.n; ++b)
            if (rule.accepts_count(b)) return false;
    }
    return true;
}

inline bool check_concordant(const TruthTableRule& rule) {
    const std::uint32_t full = (1u << rule.n) - 1;
    for (std::uint32_t v = 0; v <= full; ++v) {
        if (!rule.table[v]) continue;
        for (std::uint32_t w = v; w <= full; ++w)
            if (rule.table[w] && (v & w) == 0) return false;
    }
    return true;
}

/// The anonymity quotient of an anonymous truth-table rule.
inline CountRule to_count_rule(const TruthTableRule& rule) {
    if (!check_anonymous(rule)) throw domain_error("rule is not anonymous");
    std::vector<bool> accept(static_cast<std::size_t>(rule.n) + 1, false);
    for (std::uint32_t v = 0; v < (1u << rule.n); ++v)
        if (rule.table[v]) accept[static_cast<std::size_t>(std::popcount(v))] = true;
    return CountRule(rule.n, std::move(accept));
}

/// Minimality ordering on rules that already satisfy Decisiveness through
/// Concordance: prefer the rule that can accept with strictly fewer
/// approvals. For threshold rules this is threshold(lhs) < threshold(rhs);
/// the never-accepting rule is preferred by everything and prefers nothing.
inline bool minimality_prefers(const CountRule& lhs, const CountRule& rhs) {
    if (lhs.n != rhs.n) throw dimension_error("minimality comparison across different n");
    const auto a = min_accepted_count(lhs);
    const auto b = min_accepted_count(rhs);
    if (!a) return false;  // a rule that never accepts is preferred over nothing
    if (!b) return true;
    return *a < *b;
}

enum class EnumerationMode { FullTable, CountOnly };

struct SurvivorRecord {
    CountRule rule;
    bool degenerate;               // never accepts any profile
    std::optional<int> threshold;  // min acceptance count when non-degenerate
};

struct EnumerationReport {
    int n = 0;
    EnumerationMode mode = EnumerationMode::CountOnly;
    std::uint64_t candidates = 0;
    std::vector<SurvivorRecord> survivors;
    // Holds iff every non-degenerate survivor is a threshold rule with
    // m >= floor(n/2)+1, i.e. representable as core::Rule.
    bool all_threshold = true;
    std::optional<Rule> minimality_winner;
};

namespace detail {

inline bool is_threshold_rule(const CountRule& rule) {
    const auto m = min_accepted_count(rule);
    if (!m) return false;
    for (int k = 0; k <= rule.n; ++k)
        if (rule.accepts_count(k) != (k >= *m)) return false;
    return true;
}

inline void record_survivor(EnumerationReport& report, CountRule rule) {
    SurvivorRecord rec{std::move(rule), false, std::nullopt};
    rec.threshold = min_accepted_count(rec.rule);
    rec.degenerate = !rec.threshold;
    if (!rec.degenerate) {
        if (!is_threshold_rule(rec.rule) || *rec.threshold < rec.rule.n / 2 + 1)
            report.all_threshold = false;
    }
    report.survivors.push_back(std::move(rec));
}

}  // namespace detail

/// Exhaustively enumerates candidate rules for n agents, filters by
/// Monotonicity, Anonymity and Concordance, and reports the survivors
/// together with the Minimality winner among the non-degenerate ones.
inline EnumerationReport enumerate_consistent_rules(int n, EnumerationMode mode) {
    EnumerationReport report;
    report.n = n;
    report.mode = mode;

    if (mode == EnumerationMode::FullTable) {
        if (n < 1 || n > 4)
            throw capacity_error("full-table enumeration supports n <= 4 (2^(2^n) candidates)");
        const std::uint32_t entries = 1u << n;
        report.candidates = std::uint64_t{1} << entries;
        for (std::uint64_t bits = 0; bits < report.candidates; ++bits) {
            std::vector<bool> table(entries);
            for (std::uint32_t v = 0; v < entries; ++v) table[v] = (bits >> v) & 1;
            TruthTableRule rule(n, std::move(table));
            if (!check_monotonic(rule)) continue;
            if (!check_anonymous(rule)) continue;
            if (!check_concordant(rule)) continue;
            detail::record_survivor(report, to_count_rule(rule));
        }
    } else {
        if (n < 1 || n > 20)
            throw capacity_error("count-only enumeration supports n <= 20 (2^(n+1) candidates)");
        report.candidates = std::uint64_t{1} << (n + 1);
        for (std::uint64_t bits = 0; bits < report.candidates; ++bits) {
            std::vector<bool> accept(static_cast<std::size_t>(n) + 1);
            for (int k = 0; k <= n; ++k) accept[static_cast<std::size_t>(k)] = (bits >> k) & 1;
            CountRule rule(n, std::move(accept));
            if (!check_monotonic(rule)) continue;
            if (!check_concordant(rule)) continue;
            detail::record_survivor(report, std::move(rule));
        }
    }

    std::sort(report.survivors.begin(), report.survivors.end(),
              [](const SurvivorRecord& a, const SurvivorRecord& b) {
                  if (a.degenerate != b.degenerate) return b.degenerate;
                  return a.threshold < b.threshold;
              });

    // Minimality winner among non-degenerate survivors.
    const SurvivorRecord* best = nullptr;
    for (const auto& rec : report.survivors) {
        if (rec.degenerate) continue;
        if (!best || minimality_prefers(rec.rule, best->rule)) best = &rec;
    }
    if (best && best->threshold) report.minimality_winner = Rule(n, *best->threshold);
    return report;
}

/// The initial rule forced by the founding axioms: simple majority,
/// m = floor(n/2)+1. Verified against exhaustive enumeration when feasible.
inline Rule founding_rule(int n) {
    if (n < 1) throw domain_error("founding_rule requires n >= 1");
    const Rule founding(n, n / 2 + 1);
    if (n <= 20) {
        const auto report = enumerate_consistent_rules(n, EnumerationMode::CountOnly);
        if (!report.minimality_winner || *report.minimality_winner != founding)
            throw domain_error("enumeration contradicts the simple-majority founding rule");
        const CountRule as_count = [&] {
            std::vector<bool> accept(static_cast<std::size_t>(n) + 1);
            for (int k = 0; k <= n; ++k) accept[static_cast<std::size_t>(k)] = k >= founding.m;
            return CountRule(n, std::move(accept));
        }();
        for (const auto& rec : report.survivors) {
            if (rec.degenerate || rec.rule == as_count) continue;
            if (!minimality_prefers(as_count, rec.rule) || minimality_prefers(rec.rule, as_count))
                throw domain_error("founding rule is not uniquely minimality-optimal");
        }
    }
    return founding;
}

}  // namespace constitution
