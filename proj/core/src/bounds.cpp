#include "hcnlab/bounds.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "hcnlab/topology.hpp"

namespace hcnlab {

namespace {

void require_range(int n, int h, int h_max, const char* what) {
  if (n < 1 || n > kExhaustiveBoundDimension) {
    throw std::invalid_argument(std::string(what) + ": n must be in [1, " +
                                std::to_string(kExhaustiveBoundDimension) +
                                "], got " + std::to_string(n));
  }
  if (h < 0 || h > h_max) {
    throw std::invalid_argument(std::string(what) + ": h must be in [0, " +
                                std::to_string(h_max) + "], got " +
                                std::to_string(h));
  }
}

// Q_n adjacency as bitmasks over at most 16 vertices.
std::vector<std::uint32_t> adjacency_masks(int n) {
  const Graph cube = build_hypercube(n);
  std::vector<std::uint32_t> masks(cube.vertex_count(), 0);
  for (VertexId v = 0; v < cube.vertex_count(); ++v) {
    for (VertexId u : cube.neighbors(v)) masks[v] |= std::uint32_t{1} << u;
  }
  return masks;
}

int induced_min_degree(const std::vector<std::uint32_t>& adj, std::uint32_t set) {
  int low = 32;
  for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    low = std::min(low, std::popcount(adj[static_cast<std::size_t>(v)] & set));
  }
  return low;
}

std::uint32_t open_neighborhood(const std::vector<std::uint32_t>& adj,
                                std::uint32_t set) {
  std::uint32_t reach = 0;
  for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
    reach |= adj[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  return reach & ~set;
}

}  // namespace

OrderBoundCheck check_subgraph_order_bound(int n, int h) {
  require_range(n, h, n, "order bound");
  const auto adj = adjacency_masks(n);
  const std::uint64_t full = std::uint64_t{1} << adj.size();
  const std::size_t bound = std::size_t{1} << h;

  OrderBoundCheck check;
  check.n = n;
  check.h = h;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    const auto set = static_cast<std::uint32_t>(mask);
    ++check.subsets_checked;
    if (induced_min_degree(adj, set) < h) continue;
    ++check.qualifying_sets;
    const auto size = static_cast<std::size_t>(std::popcount(set));
    if (size < bound) check.holds = false;
    if (size == bound) check.tight = true;
    if (!check.smallest_qualifying || size < *check.smallest_qualifying) {
      check.smallest_qualifying = size;
    }
  }
  return check;
}

NeighborhoodBoundCheck check_closed_neighborhood_bound(int n, int h) {
  require_range(n, h, n - 1, "neighborhood bound");
  const auto adj = adjacency_masks(n);
  const std::uint64_t full = std::uint64_t{1} << adj.size();

  NeighborhoodBoundCheck check;
  check.n = n;
  check.h = h;
  check.bound = (std::uint64_t{1} << h) * static_cast<std::uint64_t>(n - h);
  std::uint32_t best_set = 0;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    const auto set = static_cast<std::uint32_t>(mask);
    ++check.subsets_checked;
    if (induced_min_degree(adj, set) < h) continue;
    ++check.qualifying_sets;
    const auto value = static_cast<std::uint64_t>(
        std::popcount(set) + std::popcount(open_neighborhood(adj, set)));
    if (value < check.bound) check.holds = false;
    if (!check.min_value || value < *check.min_value) {
      check.min_value = value;
      best_set = set;
    }
  }
  for (std::uint32_t rest = best_set; rest != 0; rest &= rest - 1) {
    check.minimizer.push_back(static_cast<VertexId>(std::countr_zero(rest)));
  }
  return check;
}

}  // namespace hcnlab
