#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hcnlab/graph.hpp"

namespace hcnlab {

/// Largest n for which the subset scans below are run (2^16 subsets).
inline constexpr int kExhaustiveBoundDimension = 4;

/// Scan of every non-empty X in Q_n with min degree of Q_n[X] at least h,
/// checking |X| >= 2^h.
struct OrderBoundCheck {
  int n = 0;
  int h = 0;
  bool holds = true;
  /// Some qualifying X has exactly 2^h vertices.
  bool tight = false;
  std::optional<std::size_t> smallest_qualifying;
  std::uint64_t qualifying_sets = 0;
  std::uint64_t subsets_checked = 0;

  explicit operator bool() const noexcept { return holds; }
};

/// Requires 1 <= n <= 4 and 0 <= h <= n. Throws std::invalid_argument.
OrderBoundCheck check_subgraph_order_bound(int n, int h);

/// Same scan, checking |X| + |N(X)| >= 2^h (n-h) where N(X) is the
/// neighborhood of X in Q_n - X.
struct NeighborhoodBoundCheck {
  int n = 0;
  int h = 0;
  std::uint64_t bound = 0;
  bool holds = true;
  std::optional<std::uint64_t> min_value;
  /// Smallest-mask X achieving min_value.
  std::vector<VertexId> minimizer;
  std::uint64_t qualifying_sets = 0;
  std::uint64_t subsets_checked = 0;

  explicit operator bool() const noexcept { return holds; }
};

/// Requires 1 <= n <= 4 and 0 <= h <= n-1. Throws std::invalid_argument.
NeighborhoodBoundCheck check_closed_neighborhood_bound(int n, int h);

}  // namespace hcnlab
