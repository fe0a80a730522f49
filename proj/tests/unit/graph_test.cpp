#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "hcnlab/graph.hpp"
#include "hcnlab/topology.hpp"

namespace hcnlab {
namespace {

Graph cycle(std::size_t count) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < count; ++v) {
    edges.push_back(make_edge(v, static_cast<VertexId>((v + 1) % count)));
  }
  return Graph(count, edges);
}

TEST(Graph, StoresSortedSymmetricAdjacency) {
  const Graph g(4, {{2, 0}, {0, 1}, {3, 2}});
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(1, 3));
  const auto n0 = g.neighbors(0);
  EXPECT_EQ(std::vector<VertexId>(n0.begin(), n0.end()), (std::vector<VertexId>{1, 2}));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}}));
  EXPECT_EQ(g.label(3), "3");
}

TEST(Graph, RejectsMalformedEdges) {
  EXPECT_THROW(Graph(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {}, {"a"}), std::invalid_argument);
}

TEST(Graph, InducedSubgraphKeepsLabelsAndInternalEdges) {
  const Graph g = cycle(6);
  const std::vector<VertexId> none;
  EXPECT_EQ(induced_subgraph(g, none).vertex_count(), 0u);

  std::vector<VertexId> all{0, 1, 2, 3, 4, 5};
  const Graph whole = induced_subgraph(g, all);
  EXPECT_EQ(whole.edges(), g.edges());

  const std::vector<VertexId> part{4, 0, 5};
  const Graph sub = induced_subgraph(g, part);
  EXPECT_EQ(sub.vertex_count(), 3u);
  EXPECT_EQ(sub.label(0), "0");
  EXPECT_EQ(sub.label(2), "5");
  EXPECT_EQ(sub.edge_count(), 2u);

  const std::vector<VertexId> bad{7};
  EXPECT_THROW(induced_subgraph(g, bad), std::out_of_range);
}

TEST(Graph, NeighborhoodExcludesTheSetItself) {
  const Graph cube = build_hypercube(3);
  const std::vector<VertexId> one{0};
  EXPECT_EQ(neighborhood(cube, one), (std::vector<VertexId>{1, 2, 4}));
  std::vector<VertexId> all(8);
  for (VertexId v = 0; v < 8; ++v) all[v] = v;
  EXPECT_TRUE(neighborhood(cube, all).empty());
}

TEST(Graph, MinDegreeAndComponents) {
  EXPECT_FALSE(min_degree(Graph()).has_value());
  EXPECT_TRUE(components(Graph()).empty());
  EXPECT_EQ(min_degree(build_hcn(3)), 4u);

  const auto parts = components(build_hypercube(4));
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].size(), 16u);

  const Graph split(5, {{0, 1}, {2, 3}});
  const auto pieces = components(split);
  ASSERT_EQ(pieces.size(), 3u);
  EXPECT_EQ(pieces[0], (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(pieces[1], (std::vector<VertexId>{2, 3}));
  EXPECT_EQ(pieces[2], (std::vector<VertexId>{4}));
  EXPECT_FALSE(is_connected(split));
  EXPECT_TRUE(is_connected(cycle(5)));
}

TEST(Graph, MaterializeMatchesImplicitNetworks) {
  const HcnNetwork hcn(2);
  const Graph g = materialize(hcn);
  EXPECT_EQ(g.vertex_count(), 16u);
  EXPECT_EQ(g.edge_count(), 24u);
  EXPECT_EQ(g.label(0), "00|00");
  EXPECT_EQ(g.label(15), "11|11");
}

}  // namespace
}  // namespace hcnlab
