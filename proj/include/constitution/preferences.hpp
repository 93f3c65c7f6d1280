#pragma once

#include <vector>

#include "constitution/core.hpp"
#include "constitution/errors.hpp"
#include "constitution/rational.hpp"

namespace constitution {

enum class Preference { FirstPreferred, SecondPreferred, Incomparable };

namespace detail {

inline void require_delta_range(const Rational& x, const char* what) {
    if (x < Rational(1, 2) || x >= Rational(1))
        throw domain_error(std::string(what) + " must lie in [1/2, 1), got " + x.str());
}

}  // namespace detail

/// Single-peaked pairwise preference of an agent with the given ideal point.
/// The peak beats everything; on a common side of the peak the value closer
/// to it wins; values on opposite sides (or equal values) are incomparable.
inline Preference compare(const Rational& ideal, const Rational& p, const Rational& p_prime) {
    detail::require_delta_range(ideal, "ideal point");
    detail::require_delta_range(p, "proposal");
    detail::require_delta_range(p_prime, "proposal");
    if (p == p_prime) return Preference::Incomparable;
    if (p == ideal) return Preference::FirstPreferred;
    if (p_prime == ideal) return Preference::SecondPreferred;
    if (ideal < p && p < p_prime) return Preference::FirstPreferred;
    if (ideal > p && p > p_prime) return Preference::FirstPreferred;
    if (ideal < p_prime && p_prime < p) return Preference::SecondPreferred;
    if (ideal > p_prime && p_prime > p) return Preference::SecondPreferred;
    return Preference::Incomparable;
}

/// The n agents' ideal points, each snapped to the canonical delta grid for n.
class IdealProfile {
public:
    /// Snaps each ideal to the grid representative of its rule equivalence
    /// class; indices of agents whose input was off-grid are reported.
    static IdealProfile snapped(int n, const std::vector<Rational>& raw,
                                std::vector<int>* snapped_agents = nullptr) {
        if (static_cast<int>(raw.size()) != n)
            throw dimension_error("ideal profile length does not match n");
        std::vector<Rational> ideals;
        ideals.reserve(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            detail::require_delta_range(raw[i], "ideal point");
            const Rational canon = canonical_delta(snap_delta(n, raw[i]));
            if (canon != raw[i] && snapped_agents) snapped_agents->push_back(static_cast<int>(i));
            ideals.push_back(canon);
        }
        return IdealProfile(std::move(ideals));
    }

    int n() const { return static_cast<int>(ideals_.size()); }
    const std::vector<Rational>& ideals() const { return ideals_; }
    const Rational& operator[](std::size_t i) const { return ideals_[i]; }

private:
    explicit IdealProfile(std::vector<Rational> ideals) : ideals_(std::move(ideals)) {}
    std::vector<Rational> ideals_;
};

/// The amendment ballot V^{delta,delta'}: agent i approves iff delta' lies
/// weakly between its peak and strictly on the peak's side of delta,
/// i.e. delta_i <= delta' < delta or delta_i >= delta' > delta.
inline Profile amendment_ballot(const IdealProfile& ideals, const Rational& delta,
                                const Rational& delta_prime) {
    detail::require_delta_range(delta, "current delta");
    detail::require_delta_range(delta_prime, "proposed delta");
    if (delta == delta_prime)
        throw degenerate_amendment_error("amendment proposes the current delta");
    std::vector<bool> bits;
    bits.reserve(ideals.ideals().size());
    for (const Rational& ideal : ideals.ideals()) {
        const bool approve = (ideal <= delta_prime && delta_prime < delta) ||
                             (ideal >= delta_prime && delta_prime > delta);
        bits.push_back(approve);
    }
    return Profile(std::move(bits));
}

/// p dominates p' iff a strict majority of agents strictly prefer p.
inline bool dominates(const IdealProfile& ideals, const Rational& p, const Rational& p_prime) {
    if (p == p_prime) throw degenerate_amendment_error("domination compares a proposal to itself");
    int supporters = 0;
    for (const Rational& ideal : ideals.ideals())
        if (compare(ideal, p, p_prime) == Preference::FirstPreferred) ++supporters;
    return Rational(supporters) > Rational(ideals.n(), 2);
}

/// The undominated members of a candidate set.
inline std::vector<Rational> most_preferred(const IdealProfile& ideals,
                                            const std::vector<Rational>& candidates) {
    if (candidates.empty()) throw domain_error("most_preferred over empty candidate set");
    std::vector<Rational> result;
    for (const Rational& p : candidates) {
        bool dominated = false;
        for (const Rational& q : candidates) {
            if (q == p) continue;
            if (dominates(ideals, q, p)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) result.push_back(p);
    }
    return result;
}

}  // namespace constitution
