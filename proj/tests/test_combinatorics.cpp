#include <gtest/gtest.h>

#include "hfw/combinatorics.hpp"
#include "hfw/vertex_set.hpp"

namespace hfw {
namespace {

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binom(5, 2), 10u);
  EXPECT_EQ(binom(64, 3), 41664u);
  EXPECT_EQ(binom(3, 5), 0u);
  EXPECT_EQ(binom(7, 0), 1u);
  EXPECT_EQ(binom(-1, 0), 0u);
}

TEST(Colex, RankIsIndexInColexOrder) {
  for (std::uint32_t k = 1; k <= 4; ++k) {
    std::vector<Vertex> subset(k);
    for (std::uint32_t i = 0; i < k; ++i) subset[i] = i;
    std::uint64_t expected = 0;
    do {
      EXPECT_EQ(colex_rank(subset), expected);
      EXPECT_EQ(colex_unrank(expected, k), subset);
      ++expected;
    } while (next_colex(subset, 9));
    EXPECT_EQ(expected, binom(9, k));
  }
}

TEST(Colex, PrefixRanksDoNotDependOnOrder) {
  // Rank of {0,2,5} is the same whatever the ambient order is.
  const std::vector<Vertex> e{0, 2, 5};
  EXPECT_EQ(colex_rank(e), 0u + 1u + 10u);
}

TEST(Isqrt, ExactCeilAndFloor) {
  for (std::uint64_t x = 0; x < 5000; ++x) {
    const std::uint64_t f = isqrt_floor(x);
    EXPECT_LE(f * f, x);
    EXPECT_GT((f + 1) * (f + 1), x);
    const std::uint64_t c = isqrt_ceil(x);
    EXPECT_GE(c * c, x);
    if (c > 0) {
      EXPECT_LT((c - 1) * (c - 1), x);
    }
  }
  EXPECT_EQ(isqrt_floor(UINT64_MAX), 4294967295u);
  EXPECT_EQ(isqrt_ceil(40), 7u);
  EXPECT_EQ(isqrt_ceil(52), 8u);
}

TEST(VertexSet, SetOperationsAcrossWords) {
  VertexSet a{1, 63, 64, 100};
  VertexSet b{63, 64, 127};
  EXPECT_EQ((a & b).members(), (std::vector<Vertex>{63, 64}));
  EXPECT_EQ((a | b).size(), 5u);
  EXPECT_EQ((a - b).members(), (std::vector<Vertex>{1, 100}));
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_EQ(VertexSet::prefix(70).size(), 70u);
  EXPECT_EQ(VertexSet::prefix(128).size(), 128u);
  EXPECT_EQ(a.first(), 1u);
  EXPECT_TRUE(VertexSet({0, 5}) < VertexSet({0, 6}));
  EXPECT_TRUE(VertexSet({0, 5}) < VertexSet({0, 5, 6}));
  EXPECT_FALSE(VertexSet({1}) < VertexSet({0, 5}));
}

}  // namespace
}  // namespace hfw
