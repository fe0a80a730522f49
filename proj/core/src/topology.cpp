#include "hcnlab/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcnlab {

namespace {

void require_dimension(int n, int max, const char* what) {
  if (n < 1 || n > max) {
    throw std::invalid_argument(std::string(what) + " dimension must be in [1, " +
                                std::to_string(max) + "], got " +
                                std::to_string(n));
  }
}

}  // namespace

HcnVertex::HcnVertex(BinaryWord block, BinaryWord address)
    : x(block), y(address) {
  if (x.length() != y.length()) {
    throw std::invalid_argument("HCN vertex components must have equal length");
  }
}

VertexId HcnVertex::index() const noexcept {
  return (x.value() << x.length()) | y.value();
}

HcnVertex HcnVertex::from_index(int n, VertexId index) {
  require_dimension(n, HcnNetwork::kMaxDimension, "HCN");
  if ((std::uint64_t{index} >> (2 * n)) != 0) {
    throw std::out_of_range("vertex index " + std::to_string(index) +
                            " outside HCN_" + std::to_string(n));
  }
  const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
  return HcnVertex(BinaryWord(n, index >> n), BinaryWord(n, index & mask));
}

std::string HcnVertex::label() const {
  return x.to_string() + "|" + y.to_string();
}

HcnVertex external_neighbor(const HcnVertex& v) {
  if (v.x != v.y) return HcnVertex(v.y, v.x);
  return HcnVertex(v.x.complement(), v.y.complement());
}

HypercubeNetwork::HypercubeNetwork(int n) : n_(n) {
  require_dimension(n, kMaxDimension, "hypercube");
}

std::string HypercubeNetwork::label(VertexId v) const {
  return BinaryWord(n_, v).to_string();
}

HcnNetwork::HcnNetwork(int n) : n_(n) {
  require_dimension(n, kMaxDimension, "HCN");
  mask_ = (std::uint32_t{1} << n) - 1;
}

std::string HcnNetwork::label(VertexId v) const {
  return HcnVertex::from_index(n_, v).label();
}

VertexId HcnNetwork::external_neighbor(VertexId v) const noexcept {
  const std::uint32_t x = block_of(v);
  const std::uint32_t y = address_of(v);
  if (x != y) return vertex(y, x);
  return vertex(~x & mask_, ~y & mask_);
}

Graph build_hypercube(int n) { return materialize(HypercubeNetwork(n)); }

Graph build_hcn(int n) { return materialize(HcnNetwork(n)); }

int crossing_edge_count(const BinaryWord& a, const BinaryWord& b) {
  if (a.length() != b.length()) {
    throw std::invalid_argument("block ids must have equal length");
  }
  if (a == b) {
    throw std::invalid_argument("a block has no crossing edges to itself");
  }
  return b == a.complement() ? 2 : 1;
}

HypercubeSplit split_hypercube(int n, int coordinate) {
  if (n < 2) {
    throw std::invalid_argument("splitting needs n >= 2");
  }
  if (coordinate < 1 || coordinate > n) {
    throw std::invalid_argument("coordinate " + std::to_string(coordinate) +
                                " outside [1, " + std::to_string(n) + "]");
  }
  const Graph cube = build_hypercube(n);
  const std::uint32_t bit = position_mask(n, coordinate);

  HypercubeSplit split{coordinate, {}, {}, {}, {}, {}};
  for (VertexId v = 0; v < cube.vertex_count(); ++v) {
    if ((v & bit) == 0) {
      split.left_vertices.push_back(v);
      split.matching.emplace_back(v, v | bit);
    } else {
      split.right_vertices.push_back(v);
    }
  }
  split.left = induced_subgraph(cube, split.left_vertices);
  split.right = induced_subgraph(cube, split.right_vertices);
  return split;
}

int BlockQuotient::at(std::uint32_t a, std::uint32_t b) const {
  const auto key = a < b ? std::pair{a, b} : std::pair{b, a};
  const auto it = multiplicity.find(key);
  return it == multiplicity.end() ? 0 : it->second;
}

BlockQuotient block_quotient(int n) {
  const Graph hcn = build_hcn(n);
  BlockQuotient quotient;
  quotient.dimension = n;
  quotient.block_count = std::size_t{1} << n;
  for (const auto& [u, v] : hcn.edges()) {
    const std::uint32_t a = u >> n;
    const std::uint32_t b = v >> n;
    if (a != b) ++quotient.multiplicity[{std::min(a, b), std::max(a, b)}];
  }
  return quotient;
}

}  // namespace hcnlab
