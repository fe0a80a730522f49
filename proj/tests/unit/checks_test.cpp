#include <gtest/gtest.h>

#include "hcnlab/checks.hpp"

namespace hcnlab {
namespace {

TEST(StructuralChecks, PassUpToDimensionFive) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& r : {check_hcn_regularity(n), check_crossing_matching(n),
                          check_crossing_pairs(n), check_block_quotient(n),
                          check_external_involution(n)}) {
      EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
      EXPECT_FALSE(r.name.empty());
    }
  }
}

TEST(StructuralChecks, SplitsPassForEveryCoordinate) {
  for (int n = 2; n <= 6; ++n) {
    const auto r = check_hypercube_splits(n);
    EXPECT_TRUE(r.passed) << r.detail;
  }
}

TEST(StructuralChecks, LargerRegularityAndMatching) {
  EXPECT_TRUE(check_hcn_regularity(7).passed);
  EXPECT_TRUE(check_crossing_matching(7).passed);
  EXPECT_TRUE(check_external_involution(7).passed);
}

}  // namespace
}  // namespace hcnlab
