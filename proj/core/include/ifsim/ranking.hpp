#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ifsim {

/// Scores within this band of a group leader count as tied.
inline constexpr double kRankEps = 1e-9;

/// Result of ordering scores best-first with tie grouping.
struct RankedOrder {
    /// Indices into the score array, best first. Within a tie group the
    /// original input order is kept.
    std::vector<std::size_t> order;
    /// Groups of two or more indices whose scores tie within kRankEps,
    /// in ranking order.
    std::vector<std::vector<std::size_t>> tie_groups;
};

/// Sorts descending by score; consecutive scores within kRankEps of the
/// group leader form one tie group, kept in input order. Deterministic.
RankedOrder rank_descending(std::span<const double> scores);

}  // namespace ifsim
