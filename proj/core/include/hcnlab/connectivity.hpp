#pragma once

#include <cstddef>

#include "hcnlab/graph.hpp"

namespace hcnlab {

struct ClassicalConnectivity {
  std::size_t vertex = 0;
  std::size_t edge = 0;

  friend bool operator==(const ClassicalConnectivity&,
                         const ClassicalConnectivity&) = default;
};

// All values come from unit-capacity max-flow (Menger). Results are capped
// at `limit` when one is given, i.e. min(actual, limit).

/// Maximum number of internally vertex-disjoint s-t paths. s and t must be
/// distinct and non-adjacent.
std::size_t local_vertex_connectivity(const Graph& g, VertexId s, VertexId t,
                                      std::size_t limit = ~std::size_t{0});

/// Maximum number of edge-disjoint s-t paths.
std::size_t local_edge_connectivity(const Graph& g, VertexId s, VertexId t,
                                    std::size_t limit = ~std::size_t{0});

/// kappa(G); |V|-1 for complete graphs, 0 if disconnected.
std::size_t vertex_connectivity(const Graph& g);

/// lambda(G); 0 if disconnected or fewer than two vertices.
std::size_t edge_connectivity(const Graph& g);

/// (kappa, lambda); (0, 0) for a disconnected graph.
ClassicalConnectivity classical_connectivity(const Graph& g);

}  // namespace hcnlab
