#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hcnlab/binary_word.hpp"
#include "hcnlab/graph.hpp"

namespace hcnlab {

/// Vertex (x, y) of the hierarchical cubic network: y addresses a vertex
/// inside block xQ_n.
struct HcnVertex {
  BinaryWord x;
  BinaryWord y;

  /// Throws std::invalid_argument if x and y differ in length.
  HcnVertex(BinaryWord block, BinaryWord address);

  int dimension() const noexcept { return x.length(); }

  /// value(x) * 2^n + value(y).
  VertexId index() const noexcept;
  static HcnVertex from_index(int n, VertexId index);

  /// "x|y", bits left to right.
  std::string label() const;

  friend bool operator==(const HcnVertex&, const HcnVertex&) = default;
};

/// (y, x) when x != y, otherwise (complement(x), complement(y)).
HcnVertex external_neighbor(const HcnVertex& v);

/// The n-cube Q_n with adjacency computed from bit flips.
class HypercubeNetwork {
 public:
  static constexpr int kMaxDimension = 30;

  /// Throws std::invalid_argument unless 1 <= n <= kMaxDimension.
  explicit HypercubeNetwork(int n);

  int dimension() const noexcept { return n_; }
  std::size_t vertex_count() const noexcept { return std::size_t{1} << n_; }
  std::size_t degree(VertexId) const noexcept { return static_cast<std::size_t>(n_); }
  std::string label(VertexId v) const;

  template <class F>
  void for_each_neighbor(VertexId v, F&& visit) const {
    for (int p = 1; p <= n_; ++p) visit(v ^ position_mask(n_, p));
  }

 private:
  int n_;
};

/// HCN_n with adjacency computed on demand. Vertex indices follow
/// HcnVertex::index().
class HcnNetwork {
 public:
  static constexpr int kMaxDimension = 15;

  /// Throws std::invalid_argument unless 1 <= n <= kMaxDimension.
  explicit HcnNetwork(int n);

  int dimension() const noexcept { return n_; }
  std::size_t vertex_count() const noexcept { return std::size_t{1} << (2 * n_); }
  std::size_t degree(VertexId) const noexcept { return static_cast<std::size_t>(n_ + 1); }
  std::string label(VertexId v) const;

  std::uint32_t block_of(VertexId v) const noexcept { return v >> n_; }
  std::uint32_t address_of(VertexId v) const noexcept { return v & mask_; }
  VertexId vertex(std::uint32_t block, std::uint32_t address) const noexcept {
    return (block << n_) | address;
  }
  VertexId external_neighbor(VertexId v) const noexcept;
  bool is_crossing(VertexId u, VertexId v) const noexcept {
    return block_of(u) != block_of(v);
  }

  /// In-block neighbors first (flipping positions 1..n of y), then the
  /// external neighbor.
  template <class F>
  void for_each_neighbor(VertexId v, F&& visit) const {
    for (int p = 1; p <= n_; ++p) visit(v ^ position_mask(n_, p));
    visit(external_neighbor(v));
  }

 private:
  int n_;
  std::uint32_t mask_;
};

Graph build_hypercube(int n);
Graph build_hcn(int n);

/// Number of crossing edges joining blocks aQ_n and bQ_n: 2 for
/// complementary words, 1 otherwise. Throws std::invalid_argument when
/// a == b or the lengths differ.
int crossing_edge_count(const BinaryWord& a, const BinaryWord& b);

/// Q_n split along one coordinate into the halves with that coordinate 0
/// (left) and 1 (right).
struct HypercubeSplit {
  int coordinate;
  Graph left;
  Graph right;
  /// Q_n vertex ids behind left/right, ascending; left.label(i) names
  /// left_vertices[i].
  std::vector<VertexId> left_vertices;
  std::vector<VertexId> right_vertices;
  /// (left vertex, right vertex) pairs in Q_n ids, sorted by left vertex.
  std::vector<Edge> matching;
};

/// Throws std::invalid_argument for n < 2 or a coordinate outside [1, n].
HypercubeSplit split_hypercube(int n, int coordinate);

/// Multigraph obtained by contracting every block of HCN_n to one vertex.
struct BlockQuotient {
  int dimension = 0;
  std::size_t block_count = 0;
  /// Keyed by (a, b) with a < b.
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> multiplicity;

  /// 0 if the pair carries no crossing edge.
  int at(std::uint32_t a, std::uint32_t b) const;
};

/// Counts crossing edges of HCN_n per block pair.
BlockQuotient block_quotient(int n);

}  // namespace hcnlab
