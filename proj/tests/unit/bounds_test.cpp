#include <gtest/gtest.h>

#include <bit>
#include <stdexcept>

#include "hcnlab/bounds.hpp"

namespace hcnlab {
namespace {

struct Scan {
  std::optional<int> smallest;
  std::optional<int> min_closed;
  std::uint64_t qualifying = 0;
};

// Independent subset scan over Q_n using the bit-flip adjacency directly.
Scan scan(int n, int h) {
  const unsigned count = 1u << n;
  Scan out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << count); ++mask) {
    bool ok = true;
    std::uint32_t outside = 0;
    for (unsigned v = 0; v < count && ok; ++v) {
      if (!(mask >> v & 1)) continue;
      int inner = 0;
      for (int b = 0; b < n; ++b) {
        const unsigned u = v ^ (1u << b);
        if (mask >> u & 1) {
          ++inner;
        } else {
          outside |= 1u << u;
        }
      }
      ok = inner >= h;
    }
    if (!ok) continue;
    ++out.qualifying;
    const int size = std::popcount(mask);
    const int closed = size + std::popcount(outside);
    out.smallest = out.smallest ? std::min(*out.smallest, size) : size;
    out.min_closed = out.min_closed ? std::min(*out.min_closed, closed) : closed;
  }
  return out;
}

TEST(OrderBound, HoldsAndMatchesReferenceScan) {
  for (int n = 1; n <= 4; ++n) {
    for (int h = 0; h <= n; ++h) {
      const auto check = check_subgraph_order_bound(n, h);
      const Scan ref = scan(n, h);
      EXPECT_TRUE(check.holds) << n << "," << h;
      EXPECT_EQ(check.smallest_qualifying, static_cast<std::size_t>(*ref.smallest));
      EXPECT_EQ(check.qualifying_sets, ref.qualifying);
      EXPECT_EQ(check.tight, *ref.smallest == (1 << h));
      EXPECT_EQ(check.subsets_checked, (std::uint64_t{1} << (1u << n)) - 1);
    }
  }
}

TEST(OrderBound, NamedCases) {
  const auto face = check_subgraph_order_bound(3, 2);
  EXPECT_TRUE(face.holds);
  EXPECT_TRUE(face.tight);
  EXPECT_EQ(face.smallest_qualifying, 4u);

  EXPECT_TRUE(check_subgraph_order_bound(4, 0).holds);

  const auto whole = check_subgraph_order_bound(4, 4);
  EXPECT_TRUE(whole.holds);
  EXPECT_EQ(whole.qualifying_sets, 1u);
  EXPECT_EQ(whole.smallest_qualifying, 16u);
}

TEST(NeighborhoodBound, HoldsAndMatchesReferenceScan) {
  for (int n = 1; n <= 4; ++n) {
    for (int h = 0; h <= n - 1; ++h) {
      const auto check = check_closed_neighborhood_bound(n, h);
      const Scan ref = scan(n, h);
      EXPECT_TRUE(check.holds) << n << "," << h;
      EXPECT_EQ(check.bound, (std::uint64_t{1} << h) * (n - h));
      EXPECT_EQ(check.min_value, static_cast<std::uint64_t>(*ref.min_closed)) << n << "," << h;
      EXPECT_EQ(check.qualifying_sets, ref.qualifying);
    }
  }
}

TEST(NeighborhoodBound, MinimumForThreeCubeAtH1) {
  // An edge plus its four outside neighbors gives 6, above the bound 4.
  const auto check = check_closed_neighborhood_bound(3, 1);
  EXPECT_TRUE(check.holds);
  EXPECT_EQ(check.bound, 4u);
  EXPECT_EQ(check.min_value, 6u);
  EXPECT_EQ(check.minimizer, (std::vector<VertexId>{0, 1}));
}

TEST(NeighborhoodBound, DegreeZeroCaseIsAtLeastNPlusOne) {
  for (int n = 1; n <= 4; ++n) {
    const auto check = check_closed_neighborhood_bound(n, 0);
    EXPECT_TRUE(check.holds);
    EXPECT_EQ(check.min_value, static_cast<std::uint64_t>(n + 1));
  }
  EXPECT_TRUE(check_closed_neighborhood_bound(4, 3).holds);
}

TEST(Bounds, RejectOutOfRange) {
  EXPECT_THROW(check_subgraph_order_bound(5, 0), std::invalid_argument);
  EXPECT_THROW(check_subgraph_order_bound(0, 0), std::invalid_argument);
  EXPECT_THROW(check_subgraph_order_bound(3, 4), std::invalid_argument);
  EXPECT_THROW(check_closed_neighborhood_bound(3, 3), std::invalid_argument);
  EXPECT_THROW(check_closed_neighborhood_bound(5, 1), std::invalid_argument);
}

}  // namespace
}  // namespace hcnlab
