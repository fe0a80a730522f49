#include "hcnlab/formulas.hpp"

#include <stdexcept>
#include <string>

namespace hcnlab {

namespace {

constexpr int kMaxFormulaDimension = 57;

void require(int n, int h, int n_min, int h_max, const char* what) {
  if (n < n_min || n > kMaxFormulaDimension) {
    throw std::invalid_argument(std::string(what) + ": n must be in [" +
                                std::to_string(n_min) + ", " +
                                std::to_string(kMaxFormulaDimension) + "]");
  }
  if (h < 0 || h > h_max) {
    throw std::invalid_argument(std::string(what) + ": h must be in [0, " +
                                std::to_string(h_max) + "], got " +
                                std::to_string(h));
  }
}

std::uint64_t scaled(int h, int factor) {
  return (std::uint64_t{1} << h) * static_cast<std::uint64_t>(factor);
}

}  // namespace

std::uint64_t hcn_super_connectivity(int n, int h) {
  require(n, h, 1, n - 1, "HCN super connectivity");
  return scaled(h, n + 1 - h);
}

std::uint64_t hcn_super_edge_connectivity(int n, int h) {
  require(n, h, 1, n, "HCN super edge-connectivity");
  return scaled(h, n + 1 - h);
}

std::uint64_t hypercube_super_connectivity(int n, int h) {
  require(n, h, 2, n - 2, "hypercube super connectivity");
  return scaled(h, n - h);
}

std::uint64_t hypercube_super_edge_connectivity(int n, int h) {
  require(n, h, 1, n - 1, "hypercube super edge-connectivity");
  return scaled(h, n - h);
}

}  // namespace hcnlab
