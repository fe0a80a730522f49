#include <gtest/gtest.h>

#include <stdexcept>

#include "hcnlab/formulas.hpp"

namespace hcnlab {
namespace {

TEST(Formulas, KnownValues) {
  EXPECT_EQ(hcn_super_connectivity(2, 1), 4u);
  EXPECT_EQ(hcn_super_edge_connectivity(2, 2), 4u);
  EXPECT_EQ(hcn_super_edge_connectivity(3, 3), 8u);
  EXPECT_EQ(hcn_super_connectivity(7, 3), 40u);
  EXPECT_EQ(hypercube_super_connectivity(4, 2), 8u);
  EXPECT_EQ(hypercube_super_edge_connectivity(3, 2), 4u);
}

TEST(Formulas, LowOrderCases) {
  for (int n = 1; n <= 20; ++n) {
    EXPECT_EQ(hcn_super_connectivity(n, 0), static_cast<std::uint64_t>(n + 1));
    EXPECT_EQ(hcn_super_edge_connectivity(n, 0), static_cast<std::uint64_t>(n + 1));
    if (n >= 2) EXPECT_EQ(hcn_super_connectivity(n, 1), static_cast<std::uint64_t>(2 * n));
    if (n >= 3) EXPECT_EQ(hcn_super_connectivity(n, 2), static_cast<std::uint64_t>(4 * (n - 1)));
  }
}

TEST(Formulas, NeverExceedBlockSize) {
  for (int n = 1; n <= 30; ++n) {
    for (int h = 0; h <= n - 1; ++h) {
      EXPECT_LE(hcn_super_connectivity(n, h), std::uint64_t{1} << n) << n << "," << h;
    }
  }
}

TEST(Formulas, RejectOutOfRange) {
  EXPECT_THROW(hcn_super_connectivity(2, 2), std::invalid_argument);
  EXPECT_THROW(hcn_super_connectivity(2, -1), std::invalid_argument);
  EXPECT_THROW(hcn_super_connectivity(0, 0), std::invalid_argument);
  EXPECT_THROW(hcn_super_edge_connectivity(2, 3), std::invalid_argument);
  EXPECT_THROW(hypercube_super_connectivity(3, 2), std::invalid_argument);
  EXPECT_THROW(hypercube_super_edge_connectivity(3, 3), std::invalid_argument);
}

}  // namespace
}  // namespace hcnlab
