#include "hcnlab/checks.hpp"

#include <algorithm>
#include <string>

#include "hcnlab/topology.hpp"

namespace hcnlab {

namespace {

PropertyResult fail(PropertyResult r, std::string why) {
  r.passed = false;
  r.detail = std::move(why);
  return r;
}

PropertyResult named(std::string name, int n) {
  return {std::move(name) + " n=" + std::to_string(n), true, {}};
}

// Drops 1-based position `coordinate` from an n-bit value.
std::uint32_t remove_coordinate(std::uint32_t v, int n, int coordinate) {
  const int low_bits = n - coordinate;
  const std::uint32_t low = v & ((std::uint32_t{1} << low_bits) - 1);
  const std::uint32_t high = v >> (low_bits + 1);
  return (high << low_bits) | low;
}

}  // namespace

PropertyResult check_hcn_regularity(int n) {
  auto result = named("regularity", n);
  const Graph g = build_hcn(n);
  const std::size_t expected_vertices = std::size_t{1} << (2 * n);
  if (g.vertex_count() != expected_vertices) {
    return fail(result, "vertex count " + std::to_string(g.vertex_count()));
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != static_cast<std::size_t>(n + 1)) {
      return fail(result, g.label(v) + " has degree " + std::to_string(g.degree(v)));
    }
  }
  const std::size_t expected_edges = expected_vertices * static_cast<std::size_t>(n + 1) / 2;
  if (g.edge_count() != expected_edges) {
    return fail(result, "edge count " + std::to_string(g.edge_count()));
  }
  result.detail = std::to_string(g.vertex_count()) + " vertices, " +
                  std::to_string(g.edge_count()) + " edges";
  return result;
}

PropertyResult check_crossing_matching(int n) {
  auto result = named("crossing-matching", n);
  const Graph g = build_hcn(n);
  std::size_t crossing = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto count = std::count_if(g.neighbors(v).begin(), g.neighbors(v).end(),
                                     [&](VertexId u) { return (u >> n) != (v >> n); });
    if (count != 1) {
      return fail(result, g.label(v) + " has " + std::to_string(count) +
                              " crossing edges");
    }
    ++crossing;
  }
  result.detail = std::to_string(crossing / 2) + " crossing edges cover all " +
                  std::to_string(g.vertex_count()) + " vertices";
  return result;
}

PropertyResult check_crossing_pairs(int n) {
  auto result = named("crossing-pairs", n);
  const BlockQuotient quotient = block_quotient(n);
  const auto blocks = static_cast<std::uint32_t>(quotient.block_count);
  for (std::uint32_t a = 0; a < blocks; ++a) {
    for (std::uint32_t b = a + 1; b < blocks; ++b) {
      const int expected = crossing_edge_count(BinaryWord(n, a), BinaryWord(n, b));
      if (quotient.at(a, b) != expected) {
        return fail(result, "blocks " + BinaryWord(n, a).to_string() + "," +
                                BinaryWord(n, b).to_string() + " carry " +
                                std::to_string(quotient.at(a, b)) + " edges");
      }
    }
  }
  result.detail = "all " + std::to_string(quotient.multiplicity.size()) + " pairs match";
  return result;
}

PropertyResult check_block_quotient(int n) {
  auto result = named("block-quotient", n);
  const BlockQuotient quotient = block_quotient(n);
  const std::size_t blocks = quotient.block_count;
  if (quotient.multiplicity.size() != blocks * (blocks - 1) / 2) {
    return fail(result, "only " + std::to_string(quotient.multiplicity.size()) +
                            " block pairs are joined");
  }
  const std::uint32_t mask = static_cast<std::uint32_t>(blocks - 1);
  std::size_t doubled = 0;
  for (const auto& [pair, m] : quotient.multiplicity) {
    const bool complementary = pair.second == (~pair.first & mask);
    if (m != (complementary ? 2 : 1)) {
      return fail(result, "pair multiplicity " + std::to_string(m));
    }
    doubled += complementary ? 1 : 0;
  }
  if (doubled != blocks / 2) {
    return fail(result, "doubled pairs do not form a perfect matching");
  }
  result.detail = "K_" + std::to_string(blocks) + " plus " +
                  std::to_string(doubled) + " doubled pairs";
  return result;
}

PropertyResult check_external_involution(int n) {
  auto result = named("external-involution", n);
  const HcnNetwork hcn(n);
  for (VertexId v = 0; v < hcn.vertex_count(); ++v) {
    const VertexId u = hcn.external_neighbor(v);
    if (u == v) return fail(result, hcn.label(v) + " is a fixed point");
    if (hcn.external_neighbor(u) != v) {
      return fail(result, hcn.label(v) + " is not returned by its partner");
    }
  }
  result.detail = "no fixed points";
  return result;
}

PropertyResult check_hypercube_splits(int n) {
  auto result = named("hypercube-splits", n);
  const Graph cube = build_hypercube(n);
  const Graph half = build_hypercube(n - 1);
  const auto half_edges = half.edges();
  for (int i = 1; i <= n; ++i) {
    const HypercubeSplit split = split_hypercube(n, i);
    for (const Graph* side : {&split.left, &split.right}) {
      const auto& ids = side == &split.left ? split.left_vertices : split.right_vertices;
      std::vector<Edge> relabeled;
      for (const auto& [a, b] : side->edges()) {
        relabeled.push_back(make_edge(remove_coordinate(ids[a], n, i),
                                      remove_coordinate(ids[b], n, i)));
      }
      std::sort(relabeled.begin(), relabeled.end());
      if (relabeled != half_edges) {
        return fail(result, "coordinate " + std::to_string(i) + ": half is not Q_" +
                                std::to_string(n - 1));
      }
    }
    std::vector<char> covered(cube.vertex_count(), 0);
    for (const auto& [l, r] : split.matching) {
      if ((l ^ r) != position_mask(n, i) || !cube.has_edge(l, r) || covered[l] ||
          covered[r]) {
        return fail(result, "coordinate " + std::to_string(i) + ": bad matching pair");
      }
      covered[l] = covered[r] = 1;
    }
    if (std::count(covered.begin(), covered.end(), 1) !=
        static_cast<std::ptrdiff_t>(cube.vertex_count())) {
      return fail(result, "coordinate " + std::to_string(i) + ": matching not perfect");
    }
    if (split.left.edge_count() + split.right.edge_count() + split.matching.size() !=
        cube.edge_count()) {
      return fail(result, "coordinate " + std::to_string(i) + ": edges not partitioned");
    }
  }
  result.detail = std::to_string(n) + " splits checked";
  return result;
}

}  // namespace hcnlab
