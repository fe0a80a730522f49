#pragma once

#include <iosfwd>

#include "hcnlab/graph.hpp"
#include "hcnlab/topology.hpp"

namespace hcnlab {

// Edge list: one "a b" line per edge with label a < label b, lines sorted
// lexicographically, newline-terminated.
void write_edge_list(std::ostream& out, const Graph& g);

// HCN and hypercube labels are fixed-width and order-preserving, so these
// stream in index order without materializing the graph.
void write_edge_list(std::ostream& out, const HcnNetwork& hcn);
void write_edge_list(std::ostream& out, const HypercubeNetwork& cube);

/// DOT with one cluster per block; crossing edges are drawn bold.
void write_dot(std::ostream& out, const HcnNetwork& hcn);
void write_dot(std::ostream& out, const HypercubeNetwork& cube);
void write_dot(std::ostream& out, const Graph& g);

}  // namespace hcnlab
