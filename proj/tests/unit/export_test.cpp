#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "hcnlab/export.hpp"
#include "hcnlab/topology.hpp"
#include "naive.hpp"

namespace hcnlab {
namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

TEST(EdgeList, Hcn1IsAFourCycle) {
  std::ostringstream out;
  write_edge_list(out, HcnNetwork(1));
  EXPECT_EQ(out.str(), "0|0 0|1\n0|0 1|1\n0|1 1|0\n1|0 1|1\n");
}

TEST(EdgeList, MatchesReferenceLinesSorted) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::string> expected;
    for (auto [u, v] : naive::edges_of(naive::hcn(n))) {
      std::string a = naive::hcn_label(n, u), b = naive::hcn_label(n, v);
      if (b < a) std::swap(a, b);
      expected.push_back(a + " " + b);
    }
    std::sort(expected.begin(), expected.end());

    std::ostringstream streamed, explicit_out;
    write_edge_list(streamed, HcnNetwork(n));
    write_edge_list(explicit_out, build_hcn(n));
    EXPECT_EQ(lines_of(streamed.str()), expected) << "n=" << n;
    EXPECT_EQ(streamed.str(), explicit_out.str()) << "n=" << n;
  }
}

TEST(EdgeList, HypercubeStreamMatchesExplicitGraph) {
  std::ostringstream streamed, explicit_out;
  write_edge_list(streamed, HypercubeNetwork(4));
  write_edge_list(explicit_out, build_hypercube(4));
  EXPECT_EQ(streamed.str(), explicit_out.str());
  EXPECT_EQ(lines_of(streamed.str()).size(), 32u);
}

TEST(EdgeList, OutputIsDeterministic) {
  std::ostringstream a, b;
  write_edge_list(a, HcnNetwork(3));
  write_edge_list(b, HcnNetwork(3));
  EXPECT_EQ(a.str(), b.str());
}

TEST(Dot, HypercubeHasEveryNodeAndEdge) {
  std::ostringstream out;
  write_dot(out, HypercubeNetwork(3));
  const std::string dot = out.str();
  EXPECT_EQ(dot.rfind("graph \"Q_3\" {\n", 0), 0u);
  EXPECT_EQ(count_of(dot, " -- "), 12u);
  EXPECT_EQ(count_of(dot, "\";\n") - count_of(dot, " -- "), 8u);
}

TEST(Dot, HcnClustersBlocksAndBoldsCrossingEdges) {
  std::ostringstream out;
  write_dot(out, HcnNetwork(2));
  const std::string dot = out.str();
  EXPECT_EQ(count_of(dot, "subgraph \"cluster_"), 4u);
  EXPECT_NE(dot.find("subgraph \"cluster_01\""), std::string::npos);
  EXPECT_EQ(count_of(dot, " -- "), 24u);
  EXPECT_EQ(count_of(dot, "[style=bold]"), 8u);
  EXPECT_NE(dot.find("\"00|00\" -- \"11|11\" [style=bold];"), std::string::npos);
  EXPECT_NE(dot.find("\"00|01\" -- \"01|00\" [style=bold];"), std::string::npos);
}

TEST(Dot, GenericGraphUsesLabels) {
  std::ostringstream out;
  write_dot(out, Graph(2, {{0, 1}}, {"a", "b"}));
  EXPECT_EQ(out.str(), "graph G {\n  \"a\";\n  \"b\";\n  \"a\" -- \"b\";\n}\n");
}

}  // namespace
}  // namespace hcnlab
