#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hcnlab/binary_word.hpp"
#include "hcnlab/graph.hpp"
#include "hcnlab/topology.hpp"

namespace hcnlab {

enum class CutKind { vertex, edge };
enum class Network { hcn, hypercube, generic };

std::string_view to_string(CutKind kind) noexcept;
std::string_view to_string(Network network) noexcept;

/// A vertex set or edge set proposed as an h-cut.
struct CutSpec {
  CutKind kind = CutKind::vertex;
  Network network = Network::generic;
  int n = 0;
  int h = 0;
  /// Block the construction grew from; HCN constructions only.
  std::optional<BinaryWord> anchor;
  /// Sorted; populated for vertex cuts.
  std::vector<VertexId> vertices;
  /// Sorted, first < second; populated for edge cuts.
  std::vector<Edge> edges;

  std::size_t size() const noexcept {
    return kind == CutKind::vertex ? vertices.size() : edges.size();
  }
};

/// Neighbors of the anchor block's h-subcube (vertices whose address has
/// positions h+1..n all zero) in HCN_n, size 2^h(n+1-h).
///
/// Requires 1 <= n and 0 <= h <= n-1; anchor defaults to the all-zeros
/// block. Throws std::invalid_argument.
CutSpec hcn_subcube_vertex_cut(int n, int h,
                               std::optional<BinaryWord> anchor = {});

/// Edges joining the anchor block's h-subcube to the rest of HCN_n. For
/// h = n the subcube is the whole block and the cut is its 2^n crossing
/// edges. Requires 0 <= h <= n.
CutSpec hcn_subcube_edge_cut(int n, int h,
                             std::optional<BinaryWord> anchor = {});

/// Neighborhood of the h-subcube of Q_n with the rightmost n-h coordinates
/// zero, size 2^h(n-h). Requires 0 <= h <= n-2.
CutSpec hypercube_subcube_vertex_cut(int n, int h);

/// Edge boundary of the same subcube. Requires 0 <= h <= n-1.
CutSpec hypercube_subcube_edge_cut(int n, int h);

struct VerificationReport {
  bool is_disconnected = false;
  std::optional<std::size_t> min_degree_after;
  /// Ascending.
  std::vector<std::size_t> component_sizes;
  bool is_valid_h_cut = false;
  int h = 0;
};

namespace detail {

inline std::uint64_t edge_key(VertexId u, VertexId v) noexcept {
  const Edge e = make_edge(u, v);
  return (std::uint64_t{e.first} << 32) | e.second;
}

}  // namespace detail

/// Removes the cut from `g` and checks that the remainder is disconnected
/// with minimum degree at least h. Edge cuts keep every vertex.
///
/// Throws std::out_of_range for a member vertex outside g,
/// std::invalid_argument for a member edge missing from g or h < 0.
template <Topology T>
VerificationReport verify_h_cut(const T& g, const CutSpec& cut, int h) {
  if (h < 0) throw std::invalid_argument("h must be non-negative");
  const auto count = static_cast<VertexId>(g.vertex_count());

  std::vector<char> removed(count, 0);
  std::vector<std::uint64_t> removed_edges;
  if (cut.kind == CutKind::vertex) {
    for (VertexId v : cut.vertices) {
      if (v >= count) {
        throw std::out_of_range("cut vertex " + std::to_string(v) +
                                " outside graph");
      }
      removed[v] = 1;
    }
  } else {
    removed_edges.reserve(cut.edges.size());
    for (const auto& [u, v] : cut.edges) {
      if (u >= count || v >= count) {
        throw std::out_of_range("cut edge endpoint outside graph");
      }
      bool present = false;
      g.for_each_neighbor(u, [&](VertexId w) { present = present || w == v; });
      if (!present) {
        throw std::invalid_argument("cut edge " + std::to_string(u) + "-" +
                                    std::to_string(v) + " not in graph");
      }
      removed_edges.push_back(detail::edge_key(u, v));
    }
    std::sort(removed_edges.begin(), removed_edges.end());
  }

  const auto edge_alive = [&](VertexId u, VertexId v) {
    if (removed[u] || removed[v]) return false;
    return removed_edges.empty() ||
           !std::binary_search(removed_edges.begin(), removed_edges.end(),
                               detail::edge_key(u, v));
  };

  VerificationReport report;
  report.h = h;

  std::optional<std::size_t> low;
  for (VertexId v = 0; v < count; ++v) {
    if (removed[v]) continue;
    std::size_t degree = 0;
    g.for_each_neighbor(v, [&](VertexId u) { degree += edge_alive(v, u) ? 1 : 0; });
    low = low ? std::min(*low, degree) : degree;
  }
  report.min_degree_after = low;
  if (!low) return report;

  std::vector<char> seen(count, 0);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < count; ++root) {
    if (removed[root] || seen[root]) continue;
    std::size_t size = 0;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      ++size;
      g.for_each_neighbor(v, [&](VertexId u) {
        if (!seen[u] && edge_alive(v, u)) {
          seen[u] = 1;
          stack.push_back(u);
        }
      });
    }
    report.component_sizes.push_back(size);
  }
  std::sort(report.component_sizes.begin(), report.component_sizes.end());

  report.is_disconnected = report.component_sizes.size() >= 2;
  report.is_valid_h_cut =
      report.is_disconnected && *low >= static_cast<std::size_t>(h);
  return report;
}

/// Header line "kind n h size anchor" ("-" without an anchor), then one
/// member per line (a label, or two labels for an edge), sorted.
template <Topology T>
void write_cut_spec(std::ostream& out, const CutSpec& cut, const T& g) {
  out << to_string(cut.kind) << ' ' << cut.n << ' ' << cut.h << ' '
      << cut.size() << ' ' << (cut.anchor ? cut.anchor->to_string() : "-")
      << '\n';
  std::vector<std::string> lines;
  lines.reserve(cut.size());
  for (VertexId v : cut.vertices) lines.push_back(g.label(v));
  for (const auto& [u, v] : cut.edges) {
    std::string a = g.label(u);
    std::string b = g.label(v);
    if (b < a) std::swap(a, b);
    lines.push_back(a + " " + b);
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& line : lines) out << line << '\n';
}

}  // namespace hcnlab
