#include "hcnlab/export.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace hcnlab {

namespace {

template <Topology T>
void stream_edges_in_index_order(std::ostream& out, const T& topology) {
  std::vector<VertexId> higher;
  const auto count = static_cast<VertexId>(topology.vertex_count());
  for (VertexId v = 0; v < count; ++v) {
    higher.clear();
    topology.for_each_neighbor(v, [&](VertexId u) {
      if (u > v) higher.push_back(u);
    });
    std::sort(higher.begin(), higher.end());
    if (higher.empty()) continue;
    const std::string from = topology.label(v);
    for (VertexId u : higher) {
      out << from << ' ' << topology.label(u) << '\n';
    }
  }
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

void write_edge_list(std::ostream& out, const Graph& g) {
  std::vector<std::string> lines;
  lines.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) {
    const std::string& a = g.label(u);
    const std::string& b = g.label(v);
    lines.push_back(a < b ? a + " " + b : b + " " + a);
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& line : lines) out << line << '\n';
}

void write_edge_list(std::ostream& out, const HcnNetwork& hcn) {
  stream_edges_in_index_order(out, hcn);
}

void write_edge_list(std::ostream& out, const HypercubeNetwork& cube) {
  stream_edges_in_index_order(out, cube);
}

void write_dot(std::ostream& out, const HcnNetwork& hcn) {
  const int n = hcn.dimension();
  const std::uint32_t blocks = std::uint32_t{1} << n;
  out << "graph \"HCN_" << n << "\" {\n";
  std::vector<VertexId> higher;
  for (std::uint32_t x = 0; x < blocks; ++x) {
    const std::string block = BinaryWord(n, x).to_string();
    out << "  subgraph \"cluster_" << block << "\" {\n";
    out << "    label=\"" << block << "\";\n";
    for (std::uint32_t y = 0; y < blocks; ++y) {
      out << "    " << quoted(hcn.label(hcn.vertex(x, y))) << ";\n";
    }
    for (std::uint32_t y = 0; y < blocks; ++y) {
      const VertexId v = hcn.vertex(x, y);
      higher.clear();
      hcn.for_each_neighbor(v, [&](VertexId u) {
        if (u > v && !hcn.is_crossing(u, v)) higher.push_back(u);
      });
      std::sort(higher.begin(), higher.end());
      for (VertexId u : higher) {
        out << "    " << quoted(hcn.label(v)) << " -- " << quoted(hcn.label(u))
            << ";\n";
      }
    }
    out << "  }\n";
  }
  for (VertexId v = 0; v < hcn.vertex_count(); ++v) {
    const VertexId u = hcn.external_neighbor(v);
    if (u > v) {
      out << "  " << quoted(hcn.label(v)) << " -- " << quoted(hcn.label(u))
          << " [style=bold];\n";
    }
  }
  out << "}\n";
}

void write_dot(std::ostream& out, const HypercubeNetwork& cube) {
  out << "graph \"Q_" << cube.dimension() << "\" {\n";
  for (VertexId v = 0; v < cube.vertex_count(); ++v) {
    out << "  " << quoted(cube.label(v)) << ";\n";
  }
  std::vector<VertexId> higher;
  for (VertexId v = 0; v < cube.vertex_count(); ++v) {
    higher.clear();
    cube.for_each_neighbor(v, [&](VertexId u) {
      if (u > v) higher.push_back(u);
    });
    std::sort(higher.begin(), higher.end());
    for (VertexId u : higher) {
      out << "  " << quoted(cube.label(v)) << " -- " << quoted(cube.label(u))
          << ";\n";
    }
  }
  out << "}\n";
}

void write_dot(std::ostream& out, const Graph& g) {
  out << "graph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  " << quoted(g.label(v)) << ";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << "  " << quoted(g.label(u)) << " -- " << quoted(g.label(v)) << ";\n";
  }
  out << "}\n";
}

}  // namespace hcnlab
