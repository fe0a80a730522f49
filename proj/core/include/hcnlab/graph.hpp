#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hcnlab {

using VertexId = std::uint32_t;

/// Undirected edge stored with first < second.
using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId u, VertexId v) noexcept {
  return u < v ? Edge{u, v} : Edge{v, u};
}

/// Anything that can enumerate neighbors of integer-indexed vertices and name
/// them. Satisfied by Graph and by the implicit HcnNetwork / HypercubeNetwork.
template <class T>
concept Topology = requires(const T& t, VertexId v, void (*visit)(VertexId)) {
  { t.vertex_count() } -> std::convertible_to<std::size_t>;
  { t.degree(v) } -> std::convertible_to<std::size_t>;
  { t.label(v) } -> std::convertible_to<std::string>;
  t.for_each_neighbor(v, visit);
};

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Neighbor lists are sorted ascending. Construction rejects self-loops,
/// duplicate edges and out-of-range endpoints with std::invalid_argument.
class Graph {
 public:
  Graph() = default;

  /// Labels default to the decimal vertex index when `labels` is empty.
  Graph(std::size_t vertex_count, std::vector<Edge> edges,
        std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool has_edge(VertexId u, VertexId v) const;
  const std::string& label(VertexId v) const;

  /// All edges, each once with first < second, sorted.
  std::vector<Edge> edges() const;

  template <class F>
  void for_each_neighbor(VertexId v, F&& visit) const {
    for (VertexId u : neighbors(v)) visit(u);
  }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<std::string> labels_;
};

/// Copies any topology into an explicit Graph, keeping its labels.
template <Topology T>
Graph materialize(const T& topology) {
  const auto count = static_cast<VertexId>(topology.vertex_count());
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(count);
  for (VertexId v = 0; v < count; ++v) {
    labels.emplace_back(topology.label(v));
    topology.for_each_neighbor(v, [&](VertexId u) {
      if (v < u) edges.emplace_back(v, u);
    });
  }
  return Graph(count, std::move(edges), std::move(labels));
}

/// Subgraph induced by `vertices`. Vertex i of the result is vertices[i]
/// after sorting; labels carry over. Throws std::out_of_range.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

/// Vertices outside X adjacent to at least one vertex of X, sorted.
std::vector<VertexId> neighborhood(const Graph& g,
                                   std::span<const VertexId> vertices);

/// Minimum degree, or nullopt for the empty graph.
std::optional<std::size_t> min_degree(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace hcnlab
