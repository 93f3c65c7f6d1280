#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "constitution/errors.hpp"
#include "constitution/rational.hpp"

namespace constitution {

enum class Decision : std::uint8_t { Reject = 0, Accept = 1 };

/// Approval profile V in B^n, one bit per agent.
class Profile {
public:
    explicit Profile(std::vector<bool> bits) : bits_(std::move(bits)) {
        if (bits_.empty()) throw domain_error("profile must have n >= 1 agents");
    }

    std::size_t size() const { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<bool>& bits() const { return bits_; }

    friend bool operator==(const Profile& a, const Profile& b) { return a.bits_ == b.bits_; }

    /// Serializes as a string of '0'/'1' of length n.
    std::string str() const {
        std::string s;
        s.reserve(bits_.size());
        for (bool b : bits_) s.push_back(b ? '1' : '0');
        return s;
    }

    static Profile parse(std::string_view text) {
        std::vector<bool> bits;
        bits.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1') throw parse_error("profile must be a 0/1 string");
            bits.push_back(c == '1');
        }
        if (bits.empty()) throw parse_error("empty profile");
        return Profile(std::move(bits));
    }

private:
    std::vector<bool> bits_;
};

/// Number of approvals size(V) = |{i : V_i = 1}|.
inline int approvals(const Profile& profile) {
    return static_cast<int>(std::count(profile.bits().begin(), profile.bits().end(), true));
}

/// A delta-supermajority decision rule for n agents, stored as the minimal
/// acceptance count m. Accepts V iff size(V) >= m, equivalently
/// size(V)/n > delta for the canonical delta of the rule.
struct Rule {
    int n;
    int m;

    Rule(int n_, int m_) : n(n_), m(m_) {
        if (n < 1) throw domain_error("rule requires n >= 1");
        if (m < n / 2 + 1 || m > n)
            throw domain_error("rule threshold m must lie in [floor(n/2)+1, n]");
    }

    friend bool operator==(const Rule& a, const Rule& b) { return a.n == b.n && a.m == b.m; }
    friend bool operator!=(const Rule& a, const Rule& b) { return !(a == b); }
};

inline Decision decide(const Rule& rule, const Profile& profile) {
    if (static_cast<int>(profile.size()) != rule.n)
        throw dimension_error("profile length does not match rule community size");
    return approvals(profile) >= rule.m ? Decision::Accept : Decision::Reject;
}

/// Canonical representative in [1/2, 1) of the rule's equivalence class:
/// max(1/2, (m-1)/n).
inline Rational canonical_delta(const Rule& rule) {
    return std::max(Rational(1, 2), Rational(rule.m - 1, rule.n));
}

/// The unique rule for n agents whose behavior is "accept iff size(V) > x*n",
/// for x in [1/2, 1).
inline Rule snap_delta(int n, const Rational& x) {
    if (n < 1) throw domain_error("snap_delta requires n >= 1");
    if (x < Rational(1, 2) || x >= Rational(1))
        throw domain_error("delta must lie in [1/2, 1), got " + x.str());
    // m = floor(x*n) + 1
    const std::int64_t scaled_num = x.num() * n;
    const std::int64_t floor_xn = scaled_num / x.den();
    return Rule(n, static_cast<int>(floor_xn) + 1);
}

/// Canonical representatives of all functionally distinct rules for n agents,
/// in increasing order. There are ceil(n/2) of them, all in [1/2, 1).
inline std::vector<Rational> delta_grid(int n) {
    if (n < 1) throw domain_error("delta_grid requires n >= 1");
    std::vector<Rational> grid;
    for (int m = n / 2 + 1; m <= n; ++m) grid.push_back(canonical_delta(Rule(n, m)));
    return grid;
}

}  // namespace constitution
