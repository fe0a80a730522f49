#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "hcnlab/connectivity.hpp"
#include "hcnlab/topology.hpp"
#include "naive.hpp"

namespace hcnlab {
namespace {

TEST(ClassicalConnectivity, NamedNetworks) {
  EXPECT_EQ(classical_connectivity(build_hcn(3)), (ClassicalConnectivity{4, 4}));
  EXPECT_EQ(classical_connectivity(build_hypercube(4)), (ClassicalConnectivity{4, 4}));
  EXPECT_EQ(classical_connectivity(build_hcn(1)), (ClassicalConnectivity{2, 2}));
}

TEST(ClassicalConnectivity, HcnIsMaximallyConnected) {
  for (int n = 1; n <= 5; ++n) {
    const auto expected = static_cast<std::size_t>(n + 1);
    EXPECT_EQ(classical_connectivity(build_hcn(n)), (ClassicalConnectivity{expected, expected}))
        << "n=" << n;
  }
}

TEST(ClassicalConnectivity, DegenerateInputs) {
  EXPECT_EQ(classical_connectivity(Graph(4, {{0, 1}, {2, 3}})), (ClassicalConnectivity{0, 0}));
  EXPECT_EQ(classical_connectivity(Graph(1, {})), (ClassicalConnectivity{0, 0}));
  // K_4: no separator exists.
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(classical_connectivity(k4), (ClassicalConnectivity{3, 3}));
}

TEST(ClassicalConnectivity, VertexAndEdgeCanDiffer) {
  // Two triangles sharing vertex 2: one cut vertex, edge connectivity 2.
  const Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_EQ(classical_connectivity(bowtie), (ClassicalConnectivity{1, 2}));
}

TEST(LocalConnectivity, CountsDisjointPaths) {
  const Graph cube = build_hypercube(3);
  EXPECT_EQ(local_vertex_connectivity(cube, 0, 7), 3u);
  EXPECT_EQ(local_edge_connectivity(cube, 0, 1), 3u);
  EXPECT_EQ(local_vertex_connectivity(cube, 0, 7, 2), 2u);
  EXPECT_THROW(local_vertex_connectivity(cube, 0, 1), std::invalid_argument);
  EXPECT_THROW(local_edge_connectivity(cube, 0, 0), std::invalid_argument);
  EXPECT_THROW(local_edge_connectivity(cube, 0, 8), std::out_of_range);
}

// Random connected graphs on up to 9 vertices against exhaustive search.
TEST(ClassicalConnectivity, MatchesBruteForceOnRandomGraphs) {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t count = 4 + rng() % 6;
    const double density = 0.3 + 0.5 * (rng() % 100) / 100.0;
    std::bernoulli_distribution coin(density);
    naive::Matrix adj(count, std::vector<bool>(count, false));
    std::vector<Edge> edges;
    for (VertexId u = 0; u < count; ++u) {
      for (VertexId v = u + 1; v < count; ++v) {
        if (coin(rng)) {
          adj[u][v] = adj[v][u] = true;
          edges.emplace_back(u, v);
        }
      }
    }
    const Graph g(count, edges);
    if (!is_connected(g)) continue;
    const auto kappa = naive::min_vertex_cut(adj, 0, count);
    const auto lambda = naive::min_edge_cut(adj, 0, edges.size() + 1);
    EXPECT_EQ(vertex_connectivity(g), kappa.value_or(count - 1)) << "trial " << trial;
    EXPECT_EQ(edge_connectivity(g), lambda.value()) << "trial " << trial;
  }
}

}  // namespace
}  // namespace hcnlab
