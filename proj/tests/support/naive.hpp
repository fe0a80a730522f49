#pragma once

// Reference implementations for tests. Everything here works on a dense
// adjacency matrix built straight from the pairwise adjacency definitions and
// shares no code with the library beyond plain integer types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace naive {

using Matrix = std::vector<std::vector<bool>>;

inline std::string bits(unsigned value, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if (value & (1u << (n - 1 - i))) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

inline bool one_bit_apart(unsigned a, unsigned b) { return std::popcount(a ^ b) == 1; }

inline Matrix hypercube(int n) {
  const unsigned count = 1u << n;
  Matrix adj(count, std::vector<bool>(count, false));
  for (unsigned u = 0; u < count; ++u) {
    for (unsigned v = 0; v < count; ++v) adj[u][v] = one_bit_apart(u, v);
  }
  return adj;
}

// Vertex (x, y) sits at x * 2^n + y. Two vertices are adjacent when they
// share a block and their addresses differ in one bit, or when one is the
// other's external neighbor.
inline bool hcn_adjacent(int n, unsigned u, unsigned v) {
  const unsigned mask = (1u << n) - 1;
  const unsigned ux = u >> n, uy = u & mask, vx = v >> n, vy = v & mask;
  if (ux == vx) return one_bit_apart(uy, vy);
  if (ux != uy) return vx == uy && vy == ux;
  return vx == (~ux & mask) && vy == (~uy & mask);
}

inline Matrix hcn(int n) {
  const unsigned count = 1u << (2 * n);
  Matrix adj(count, std::vector<bool>(count, false));
  for (unsigned u = 0; u < count; ++u) {
    for (unsigned v = 0; v < count; ++v) {
      if (u != v) adj[u][v] = hcn_adjacent(n, u, v);
    }
  }
  return adj;
}

inline std::string hcn_label(int n, unsigned v) {
  return bits(v >> n, n) + "|" + bits(v & ((1u << n) - 1), n);
}

inline std::vector<std::pair<unsigned, unsigned>> edges_of(const Matrix& adj) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned u = 0; u < adj.size(); ++u) {
    for (unsigned v = u + 1; v < adj.size(); ++v) {
      if (adj[u][v]) out.emplace_back(u, v);
    }
  }
  return out;
}

struct Outcome {
  bool disconnected = false;
  std::optional<std::size_t> min_degree;
  std::vector<std::size_t> component_sizes;
  bool valid = false;
};

// Evaluates G - removed_vertices - removed_edges from scratch.
inline Outcome evaluate(const Matrix& adj, const std::vector<bool>& removed_vertex,
                        const std::vector<std::pair<unsigned, unsigned>>& removed_edges,
                        int h) {
  const std::size_t count = adj.size();
  Matrix live = adj;
  for (auto [u, v] : removed_edges) live[u][v] = live[v][u] = false;
  Outcome out;
  std::vector<int> label(count, -1);
  int next = 0;
  for (std::size_t s = 0; s < count; ++s) {
    if (removed_vertex[s]) continue;
    std::size_t degree = 0;
    for (std::size_t t = 0; t < count; ++t) {
      if (!removed_vertex[t] && live[s][t]) ++degree;
    }
    out.min_degree = out.min_degree ? std::min(*out.min_degree, degree) : degree;
    if (label[s] != -1) continue;
    std::size_t size = 0;
    std::vector<std::size_t> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      ++size;
      for (std::size_t t = 0; t < count; ++t) {
        if (!removed_vertex[t] && live[v][t] && label[t] == -1) {
          label[t] = next;
          stack.push_back(t);
        }
      }
    }
    out.component_sizes.push_back(size);
    ++next;
  }
  std::sort(out.component_sizes.begin(), out.component_sizes.end());
  out.disconnected = out.component_sizes.size() >= 2;
  out.valid = out.disconnected && out.min_degree &&
              *out.min_degree >= static_cast<std::size_t>(h);
  return out;
}

inline Outcome evaluate_vertex_cut(const Matrix& adj, const std::vector<unsigned>& cut, int h) {
  std::vector<bool> removed(adj.size(), false);
  for (unsigned v : cut) removed[v] = true;
  return evaluate(adj, removed, {}, h);
}

inline Outcome evaluate_edge_cut(const Matrix& adj,
                                 const std::vector<std::pair<unsigned, unsigned>>& cut, int h) {
  return evaluate(adj, std::vector<bool>(adj.size(), false), cut, h);
}

// Calls visit(indices) for every k-subset of [0, count) in lexicographic
// order until visit returns true. Returns whether it did.
template <class F>
bool for_each_combination(std::size_t count, std::size_t k, F&& visit) {
  if (k > count) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == count - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Smallest h-vertex-cut size below `bound`, by trying every subset.
inline std::optional<std::size_t> min_vertex_cut(const Matrix& adj, int h, std::size_t bound) {
  for (std::size_t k = 0; k < bound && k + 2 <= adj.size(); ++k) {
    const bool found = for_each_combination(adj.size(), k, [&](const auto& idx) {
      std::vector<unsigned> cut(idx.begin(), idx.end());
      return evaluate_vertex_cut(adj, cut, h).valid;
    });
    if (found) return k;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> min_edge_cut(const Matrix& adj, int h, std::size_t bound) {
  const auto all = edges_of(adj);
  for (std::size_t k = 0; k < bound && k <= all.size(); ++k) {
    const bool found = for_each_combination(all.size(), k, [&](const auto& idx) {
      std::vector<std::pair<unsigned, unsigned>> cut;
      for (std::size_t i : idx) cut.push_back(all[i]);
      return evaluate_edge_cut(adj, cut, h).valid;
    });
    if (found) return k;
  }
  return std::nullopt;
}

}  // namespace naive
