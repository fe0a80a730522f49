#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>

#include "hcnlab/cuts.hpp"
#include "hcnlab/graph.hpp"

namespace hcnlab {

struct SearchBudget {
  /// Cut sizes 0 .. max_cut_size-1 are searched.
  std::size_t max_cut_size = std::numeric_limits<std::size_t>::max();
  /// Wall-clock limit; nullopt is unbounded.
  std::optional<std::chrono::milliseconds> time_limit;
  unsigned worker_count = 1;
};

enum class OracleStatus { exact_value, no_cut_below_bound, budget_exhausted };

std::string_view to_string(OracleStatus status) noexcept;

struct OracleOutcome {
  OracleStatus status = OracleStatus::no_cut_below_bound;
  /// Set iff status == exact_value.
  std::optional<std::size_t> value;
  /// Lexicographically smallest minimum cut, network = generic.
  std::optional<CutSpec> witness;
  /// Vertex oracle: k-subsets evaluated in full. Edge oracle: partial sides
  /// visited by the branch-and-bound. Independent of worker_count unless the
  /// time limit fired.
  std::uint64_t subsets_examined = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Minimum h-vertex-cut by exhaustive enumeration of vertex sets in
/// increasing size, lexicographic within a size.
///
/// Skips branches where a vertex already excluded from the cut has fallen
/// below h remaining neighbors. Throws std::invalid_argument for a
/// disconnected graph or h < 0.
OracleOutcome min_h_vertex_cut_exact(const Graph& g, int h,
                                     const SearchBudget& budget = {});

/// Minimum h-edge-cut.
///
/// A minimum h-edge-cut is the edge boundary of its smallest component X, so
/// the search grows connected sides X (|X| <= |V|/2, smallest vertex fixed
/// per branch) and bounds on the boundary edges already committed. Requires
/// both sides to keep minimum degree h. For h = 0 the bound is seeded from
/// max-flow edge connectivity.
///
/// Throws std::invalid_argument for a disconnected graph or h < 0.
OracleOutcome min_h_edge_cut_exact(const Graph& g, int h,
                                   const SearchBudget& budget = {});

}  // namespace hcnlab
