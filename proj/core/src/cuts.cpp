#include "hcnlab/cuts.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcnlab {

std::string_view to_string(CutKind kind) noexcept {
  return kind == CutKind::vertex ? "vertex" : "edge";
}

std::string_view to_string(Network network) noexcept {
  switch (network) {
    case Network::hcn: return "hcn";
    case Network::hypercube: return "q";
    case Network::generic: return "generic";
  }
  return "generic";
}

namespace {

void require_h(int h, int low, int high, const char* what) {
  if (h < low || h > high) {
    throw std::invalid_argument(std::string(what) + ": h must be in [" +
                                std::to_string(low) + ", " +
                                std::to_string(high) + "], got " +
                                std::to_string(h));
  }
}

BinaryWord resolve_anchor(int n, const std::optional<BinaryWord>& anchor) {
  if (!anchor) return BinaryWord::zeros(n);
  if (anchor->length() != n) {
    throw std::invalid_argument("anchor block must have length " +
                                std::to_string(n));
  }
  return *anchor;
}

// Addresses in the h-subcube: positions h+1..n are zero.
std::vector<std::uint32_t> subcube_addresses(int n, int h) {
  std::vector<std::uint32_t> out;
  const int free_low = n - h;
  for (std::uint32_t prefix = 0; prefix < (std::uint32_t{1} << h); ++prefix) {
    out.push_back(prefix << free_low);
  }
  return out;
}

template <Topology T>
std::vector<Edge> boundary_of(const T& g, const std::vector<VertexId>& side) {
  std::vector<char> inside(g.vertex_count(), 0);
  for (VertexId v : side) inside[v] = 1;
  std::vector<Edge> out;
  for (VertexId v : side) {
    g.for_each_neighbor(v, [&](VertexId u) {
      if (!inside[u]) out.push_back(make_edge(v, u));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <Topology T>
std::vector<VertexId> outer_neighbors(const T& g,
                                      const std::vector<VertexId>& side) {
  std::vector<VertexId> out;
  for (const auto& [u, v] : boundary_of(g, side)) {
    out.push_back(std::binary_search(side.begin(), side.end(), u) ? v : u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexId> hcn_subcube(const HcnNetwork& hcn, int h,
                                  const BinaryWord& anchor) {
  std::vector<VertexId> side;
  for (std::uint32_t address : subcube_addresses(hcn.dimension(), h)) {
    side.push_back(hcn.vertex(anchor.value(), address));
  }
  std::sort(side.begin(), side.end());
  return side;
}

std::vector<VertexId> cube_subcube(int n, int h) {
  std::vector<VertexId> side;
  for (std::uint32_t address : subcube_addresses(n, h)) side.push_back(address);
  return side;
}

}  // namespace

CutSpec hcn_subcube_vertex_cut(int n, int h, std::optional<BinaryWord> anchor) {
  const HcnNetwork hcn(n);
  require_h(h, 0, n - 1, "HCN vertex cut");
  const BinaryWord block = resolve_anchor(n, anchor);

  CutSpec cut;
  cut.kind = CutKind::vertex;
  cut.network = Network::hcn;
  cut.n = n;
  cut.h = h;
  cut.anchor = block;
  cut.vertices = outer_neighbors(hcn, hcn_subcube(hcn, h, block));
  return cut;
}

CutSpec hcn_subcube_edge_cut(int n, int h, std::optional<BinaryWord> anchor) {
  const HcnNetwork hcn(n);
  require_h(h, 0, n, "HCN edge cut");
  const BinaryWord block = resolve_anchor(n, anchor);

  CutSpec cut;
  cut.kind = CutKind::edge;
  cut.network = Network::hcn;
  cut.n = n;
  cut.h = h;
  cut.anchor = block;
  cut.edges = boundary_of(hcn, hcn_subcube(hcn, h, block));
  return cut;
}

CutSpec hypercube_subcube_vertex_cut(int n, int h) {
  const HypercubeNetwork cube(n);
  require_h(h, 0, n - 2, "hypercube vertex cut");

  CutSpec cut;
  cut.kind = CutKind::vertex;
  cut.network = Network::hypercube;
  cut.n = n;
  cut.h = h;
  cut.vertices = outer_neighbors(cube, cube_subcube(n, h));
  return cut;
}

CutSpec hypercube_subcube_edge_cut(int n, int h) {
  const HypercubeNetwork cube(n);
  require_h(h, 0, n - 1, "hypercube edge cut");

  CutSpec cut;
  cut.kind = CutKind::edge;
  cut.network = Network::hypercube;
  cut.n = n;
  cut.h = h;
  cut.edges = boundary_of(cube, cube_subcube(n, h));
  return cut;
}

}  // namespace hcnlab
