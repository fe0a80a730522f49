#include "hcnlab/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hcnlab {

namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max() / 2;

// Residual network for small integral capacities; augments along BFS paths.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : head_(nodes, -1) {}

  void add_arc(std::size_t from, std::size_t to, int capacity) {
    push(from, to, capacity);
    push(to, from, 0);
  }

  std::size_t max_flow(std::size_t source, std::size_t sink,
                       std::size_t limit) {
    residual_ = capacity_;
    std::size_t flow = 0;
    std::vector<int> via(head_.size());
    std::vector<std::size_t> queue;
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      queue.assign(1, source);
      via[source] = -2;
      for (std::size_t i = 0; i < queue.size() && via[sink] == -1; ++i) {
        const std::size_t v = queue[i];
        for (int a = head_[v]; a != -1; a = next_[static_cast<std::size_t>(a)]) {
          const auto arc = static_cast<std::size_t>(a);
          if (residual_[arc] > 0 && via[to_[arc]] == -1) {
            via[to_[arc]] = a;
            queue.push_back(to_[arc]);
          }
        }
      }
      if (via[sink] == -1) break;
      int push_amount = kUnbounded;
      for (std::size_t v = sink; v != source;) {
        const auto arc = static_cast<std::size_t>(via[v]);
        push_amount = std::min(push_amount, residual_[arc]);
        v = to_[arc ^ 1];
      }
      for (std::size_t v = sink; v != source;) {
        const auto arc = static_cast<std::size_t>(via[v]);
        residual_[arc] -= push_amount;
        residual_[arc ^ 1] += push_amount;
        v = to_[arc ^ 1];
      }
      flow += static_cast<std::size_t>(push_amount);
    }
    return std::min(flow, limit);
  }

 private:
  void push(std::size_t from, std::size_t to, int capacity) {
    to_.push_back(to);
    capacity_.push_back(capacity);
    next_.push_back(head_[from]);
    head_[from] = static_cast<int>(to_.size() - 1);
  }

  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<std::size_t> to_;
  std::vector<int> capacity_;
  std::vector<int> residual_;
};

void check_pair(const Graph& g, VertexId s, VertexId t) {
  if (s >= g.vertex_count() || t >= g.vertex_count()) {
    throw std::out_of_range("flow terminal outside graph");
  }
  if (s == t) throw std::invalid_argument("flow terminals must differ");
}

// Node 2v is v's entry, 2v+1 its exit; the entry-exit arc carries capacity 1
// except at the terminals.
FlowNetwork split_network(const Graph& g, VertexId s, VertexId t) {
  FlowNetwork net(2 * g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? kUnbounded : 1);
    for (VertexId u : g.neighbors(v)) net.add_arc(2 * v + 1, 2 * u, kUnbounded);
  }
  return net;
}

FlowNetwork edge_network(const Graph& g) {
  FlowNetwork net(g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    net.add_arc(u, v, 1);
    net.add_arc(v, u, 1);
  }
  return net;
}

}  // namespace

std::size_t local_vertex_connectivity(const Graph& g, VertexId s, VertexId t,
                                      std::size_t limit) {
  check_pair(g, s, t);
  if (g.has_edge(s, t)) {
    throw std::invalid_argument("local vertex connectivity needs non-adjacent terminals");
  }
  FlowNetwork net = split_network(g, s, t);
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

std::size_t local_edge_connectivity(const Graph& g, VertexId s, VertexId t,
                                    std::size_t limit) {
  check_pair(g, s, t);
  FlowNetwork net = edge_network(g);
  return net.max_flow(s, t, limit);
}

std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t count = g.vertex_count();
  if (count < 2 || !is_connected(g)) return 0;
  std::size_t best = *min_degree(g);
  // Some vertex among the first best+1 lies outside a minimum separator.
  for (VertexId s = 0; s < count && s <= best; ++s) {
    for (VertexId t = s + 1; t < count; ++t) {
      if (g.has_edge(s, t)) continue;
      FlowNetwork net = split_network(g, s, t);
      best = std::min(best, net.max_flow(2 * s + 1, 2 * t, best));
    }
  }
  return best;
}

std::size_t edge_connectivity(const Graph& g) {
  const std::size_t count = g.vertex_count();
  if (count < 2 || !is_connected(g)) return 0;
  std::size_t best = *min_degree(g);
  FlowNetwork net = edge_network(g);
  for (VertexId t = 1; t < count; ++t) {
    best = std::min(best, net.max_flow(0, t, best));
  }
  return best;
}

ClassicalConnectivity classical_connectivity(const Graph& g) {
  return {vertex_connectivity(g), edge_connectivity(g)};
}

}  // namespace hcnlab
