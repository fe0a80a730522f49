#include "hcnlab/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcnlab {

namespace {

void check_vertex(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " outside graph of " +
                            std::to_string(g.vertex_count()) + " vertices");
  }
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges,
             std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (vertex_count > std::size_t{0xFFFFFFFFu}) {
    throw std::invalid_argument("graph too large for 32-bit vertex ids");
  }
  if (labels_.empty()) {
    labels_.reserve(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) {
      labels_.push_back(std::to_string(v));
    }
  } else if (labels_.size() != vertex_count) {
    throw std::invalid_argument("label count does not match vertex count");
  }

  for (auto& e : edges) {
    if (e.first == e.second) {
      throw std::invalid_argument("self-loop at vertex " +
                                  std::to_string(e.first));
    }
    if (e.first >= vertex_count || e.second >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    e = make_edge(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate edge");
  }

  std::vector<std::size_t> degree(vertex_count, 0);
  for (const auto& [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    offsets_[v + 1] = offsets_[v] + degree[v];
  }
  targets_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    targets_[cursor[u]++] = v;
    targets_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(*this, v);
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto adj = neighbors(u);
  check_vertex(*this, v);
  return std::binary_search(adj.begin(), adj.end(), v);
}

const std::string& Graph::label(VertexId v) const {
  check_vertex(*this, v);
  return labels_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId v = 0; v < vertex_count(); ++v) {
    for (VertexId u : neighbors(v)) {
      if (v < u) out.emplace_back(v, u);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> kept(vertices.begin(), vertices.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (VertexId v : kept) check_vertex(g, v);

  std::vector<VertexId> local(g.vertex_count(), VertexId(-1));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    local[kept[i]] = static_cast<VertexId>(i);
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(kept.size());
  for (VertexId v : kept) {
    labels.push_back(g.label(v));
    for (VertexId u : g.neighbors(v)) {
      if (v < u && local[u] != VertexId(-1)) {
        edges.emplace_back(local[v], local[u]);
      }
    }
  }
  return Graph(kept.size(), std::move(edges), std::move(labels));
}

std::vector<VertexId> neighborhood(const Graph& g,
                                   std::span<const VertexId> vertices) {
  std::vector<char> inside(g.vertex_count(), 0);
  for (VertexId v : vertices) {
    check_vertex(g, v);
    inside[v] = 1;
  }
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> out;
  for (VertexId v : vertices) {
    for (VertexId u : g.neighbors(v)) {
      if (!inside[u] && !seen[u]) {
        seen[u] = 1;
        out.push_back(u);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> min_degree(const Graph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  std::size_t best = g.degree(0);
  for (VertexId v = 1; v < g.vertex_count(); ++v) {
    best = std::min(best, g.degree(v));
  }
  return best;
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    auto& component = out.emplace_back();
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (VertexId u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(component.begin(), component.end());
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

}  // namespace hcnlab
