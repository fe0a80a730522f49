#pragma once

#include <string>
#include <vector>

namespace hcnlab {

/// Outcome of one structural property scan.
struct PropertyResult {
  std::string name;
  bool passed = true;
  /// First violation, or a one-line summary when passed.
  std::string detail;
};

/// 4^n vertices, (n+1)-regular, 4^n (n+1) / 2 edges.
PropertyResult check_hcn_regularity(int n);

/// Every vertex of HCN_n has exactly one crossing edge.
PropertyResult check_crossing_matching(int n);

/// Crossing edges per block pair agree with crossing_edge_count.
PropertyResult check_crossing_pairs(int n);

/// The block quotient is K_{2^n} with complementary pairs doubled.
PropertyResult check_block_quotient(int n);

/// external_neighbor is a fixed-point-free involution on HCN_n.
PropertyResult check_external_involution(int n);

/// Every split of Q_n gives two Q_{n-1} halves joined by a perfect matching.
PropertyResult check_hypercube_splits(int n);

}  // namespace hcnlab
