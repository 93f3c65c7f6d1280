#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "constitution/core.hpp"
#include "constitution/errors.hpp"
#include "constitution/preferences.hpp"
#include "constitution/rational.hpp"

namespace constitution {

/// Seeded generator of ideal profiles on the canonical grid. Draws use raw
/// engine output modulo the support size so reruns with the same seed are
/// bit-identical across platforms.
class ProfileGenerator {
public:
    ProfileGenerator(int n, std::uint64_t seed) : n_(n), grid_(delta_grid(n)), rng_(seed) {}

    /// Uniform over the delta grid.
    IdealProfile uniform() {
        std::vector<Rational> ideals;
        ideals.reserve(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) ideals.push_back(grid_[next_index(grid_.size())]);
        return IdealProfile::snapped(n_, ideals);
    }

    /// Two grid peaks with rational weights; weights must sum to 1.
    IdealProfile clustered(const Rational& peak_a, const Rational& weight_a,
                           const Rational& peak_b) {
        if (weight_a < Rational(0) || weight_a > Rational(1))
            throw domain_error("cluster weight must lie in [0, 1]");
        const std::int64_t den = weight_a.den();
        const std::int64_t cut = weight_a.num();
        std::vector<Rational> ideals;
        ideals.reserve(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            const bool first = static_cast<std::int64_t>(
                                   next_index(static_cast<std::size_t>(den))) < cut;
            ideals.push_back(first ? peak_a : peak_b);
        }
        return IdealProfile::snapped(n_, ideals);
    }

    const std::vector<Rational>& grid() const { return grid_; }

private:
    std::size_t next_index(std::size_t bound) { return static_cast<std::size_t>(rng_() % bound); }

    int n_;
    std::vector<Rational> grid_;
    std::mt19937_64 rng_;
};

/// Calls fn with every ideal profile on the grid for n agents (grid^n total).
template <typename Fn>
void for_each_grid_profile(int n, Fn&& fn) {
    const std::vector<Rational> grid = delta_grid(n);
    const std::size_t k = grid.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::vector<Rational> ideals(static_cast<std::size_t>(n), grid[0]);
    while (true) {
        for (std::size_t i = 0; i < idx.size(); ++i) ideals[i] = grid[idx[i]];
        fn(IdealProfile::snapped(n, ideals));
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == k) {
            idx[pos] = 0;
            ++pos;
        }
        if (pos == idx.size()) break;
    }
}

}  // namespace constitution
