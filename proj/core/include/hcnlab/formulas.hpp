#pragma once

#include <cstdint>

namespace hcnlab {

// Closed forms for conditional connectivity. Each throws
// std::invalid_argument outside the range where the value is established.

/// kappa^h(HCN_n) = 2^h (n+1-h), for n >= 1 and 0 <= h <= n-1.
std::uint64_t hcn_super_connectivity(int n, int h);

/// lambda^h(HCN_n) = 2^h (n+1-h), for n >= 1 and 0 <= h <= n.
std::uint64_t hcn_super_edge_connectivity(int n, int h);

/// kappa^h(Q_n) = 2^h (n-h), for 0 <= h <= n-2.
std::uint64_t hypercube_super_connectivity(int n, int h);

/// lambda^h(Q_n) = 2^h (n-h), for 0 <= h <= n-1.
std::uint64_t hypercube_super_edge_connectivity(int n, int h);

}  // namespace hcnlab
