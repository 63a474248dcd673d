#include <gtest/gtest.h>

#include <algorithm>

#include "hfw/cliques.hpp"
#include "test_support.hpp"

namespace hfw {
namespace {

std::vector<std::uint64_t> as_masks(const CliqueReport& report) {
  std::vector<std::uint64_t> out;
  for (const auto& q : report.cliques) out.push_back(q.word(0));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(MaximalCliques, CompleteHypergraphHasOneClique) {
  for (std::uint32_t r = 2; r <= 4; ++r) {
    for (std::uint32_t n = 1; n <= 9; ++n) {
      const auto report = enumerate_maximal_cliques(UniformHypergraph::complete(n, r));
      EXPECT_EQ(report.count, 1u) << "n=" << n << " r=" << r;
      EXPECT_EQ(report.cliques.front(), VertexSet::prefix(n));
    }
  }
}

TEST(MaximalCliques, EmptyHypergraphHasAllSmallSets) {
  for (std::uint32_t r = 2; r <= 4; ++r) {
    for (std::uint32_t n = 1; n <= 9; ++n) {
      const auto report = enumerate_maximal_cliques(UniformHypergraph(n, r));
      const std::uint64_t expected = std::max<std::uint64_t>(binom(n, r - 1), 1);
      EXPECT_EQ(report.count, expected) << "n=" << n << " r=" << r;
      for (const auto& q : report.cliques) EXPECT_EQ(q.size(), std::min(n, r - 1));
    }
  }
}

TEST(MaximalCliques, SmallOrderIsSingleClique) {
  // n < r: V itself is the only maximal clique.
  const auto report = enumerate_maximal_cliques(UniformHypergraph(2, 3));
  ASSERT_EQ(report.count, 1u);
  EXPECT_EQ(report.cliques[0], VertexSet({0, 1}));
  EXPECT_EQ(report.min_membership, 1u);
}

TEST(MaximalCliques, MatchesSubsetOracle) {
  testing::Rng rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const auto r = static_cast<std::uint32_t>(2 + rng.below(2));
    const auto n = static_cast<std::uint32_t>(1 + rng.below(7));
    const double density = 0.2 + 0.6 * static_cast<double>(rng.below(100)) / 100.0;
    const auto h = testing::random_hypergraph(rng, n, r, density);
    const auto report = enumerate_maximal_cliques(h);
    ASSERT_EQ(as_masks(report), testing::oracle_maximal_cliques(h)) << "trial " << trial;
    ASSERT_EQ(report.count, report.cliques.size());
  }
}

TEST(MaximalCliques, RankFourMatchesOracle) {
  testing::Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::uint32_t>(3 + rng.below(5));
    const auto h = testing::random_hypergraph(rng, n, 4, 0.6);
    ASSERT_EQ(as_masks(enumerate_maximal_cliques(h)), testing::oracle_maximal_cliques(h));
  }
}

TEST(MaximalCliques, MembershipCountsAreConsistent) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto h = testing::random_hypergraph(rng, 8, 3, 0.5);
    const auto report = enumerate_maximal_cliques(h);
    std::vector<std::uint64_t> counted(8, 0);
    for (const auto& q : report.cliques) q.for_each([&](Vertex v) { ++counted[v]; });
    EXPECT_EQ(counted, report.membership);
    EXPECT_EQ(report.min_membership, *std::min_element(counted.begin(), counted.end()));
    EXPECT_GE(report.min_membership, 1u);
    for (const auto& q : report.cliques) {
      EXPECT_TRUE(is_clique(h, q));
      for (Vertex v = 0; v < 8; ++v) {
        if (q.contains(v)) continue;
        VertexSet bigger = q;
        bigger.insert(v);
        EXPECT_FALSE(is_clique(h, bigger));
      }
    }
  }
}

TEST(MaximalCliques, EveryEdgeAndFaceIsCovered) {
  testing::Rng rng(9);
  const auto h = testing::random_hypergraph(rng, 8, 3, 0.45);
  const auto report = enumerate_maximal_cliques(h);
  for (const auto& e : h.edges()) {
    VertexSet s;
    for (Vertex v : e) s.insert(v);
    EXPECT_TRUE(std::any_of(report.cliques.begin(), report.cliques.end(),
                            [&](const VertexSet& q) { return s.is_subset_of(q); }));
  }
  for (Vertex a = 0; a < 8; ++a) {
    for (Vertex b = a + 1; b < 8; ++b) {
      const VertexSet face{a, b};
      EXPECT_TRUE(std::any_of(report.cliques.begin(), report.cliques.end(),
                              [&](const VertexSet& q) { return face.is_subset_of(q); }));
    }
  }
}

TEST(MaximalCliques, WideOrderUsesTwoWordSets) {
  // Disjoint union of 9 copies of K9 on 81 vertices.
  UniformHypergraph g(81, 2);
  for (Vertex a = 0; a < 81; ++a) {
    for (Vertex b = a + 1; b < 81; ++b) {
      if (a / 9 == b / 9) g.add_edge({a, b});
    }
  }
  const auto report = enumerate_maximal_cliques(g);
  EXPECT_EQ(report.count, 9u);
  EXPECT_EQ(report.largest, 9u);
  EXPECT_EQ(report.cliques.back().first(), 72u);
}

TEST(Complement, IsAnInvolution) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = testing::random_hypergraph(rng, 9, 3, 0.5);
    EXPECT_EQ(complement(complement(h)), h);
    EXPECT_EQ(complement(h).edge_count() + h.edge_count(), h.slot_count());
  }
}

TEST(Induced, IdentityAndMonotonicity) {
  testing::Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = static_cast<std::uint32_t>(2 + rng.below(2));
    const auto h = testing::random_hypergraph(rng, 8, r, 0.5);
    EXPECT_EQ(induced(h, VertexSet::prefix(8)), h);
    VertexSet s;
    for (Vertex v = 0; v < 8; ++v) {
      if (rng.coin()) s.insert(v);
    }
    if (s.empty()) s.insert(3);
    const auto sub = induced(h, s);
    EXPECT_EQ(sub.order(), s.size());
    EXPECT_LE(count_maximal_cliques(sub), count_maximal_cliques(h));
  }
}

TEST(Induced, KeepsExactlyInternalEdges) {
  UniformHypergraph h(6, 3);
  h.add_edge({0, 2, 4});
  h.add_edge({1, 2, 4});
  h.add_edge({2, 3, 5});
  const auto sub = induced(h, VertexSet{1, 2, 4, 5});
  EXPECT_EQ(sub.edges(), (std::vector<std::vector<Vertex>>{{0, 1, 2}}));
}

TEST(IsClique, VacuousBelowRank) {
  const UniformHypergraph h(5, 3);
  EXPECT_TRUE(is_clique(h, VertexSet{0, 4}));
  EXPECT_FALSE(is_clique(h, VertexSet{0, 1, 4}));
  EXPECT_TRUE(is_clique(UniformHypergraph::complete(4, 2), VertexSet::prefix(4)));
}

TEST(Degrees, CompleteGraph) {
  const auto deg = degrees(UniformHypergraph::complete(6, 2));
  EXPECT_EQ(deg.d, 1u);
  EXPECT_EQ(deg.dbar, 1u);
}

TEST(HypergraphJson, RoundTripAndRejections) {
  UniformHypergraph h(5, 3);
  h.add_edge({0, 1, 2});
  h.add_edge({1, 3, 4});
  const auto j = to_json(h);
  EXPECT_EQ(j.dump(), R"({"edges":[[0,1,2],[1,3,4]],"n":5,"r":3})");
  EXPECT_EQ(hypergraph_from_json(j), h);

  auto dup = nlohmann::json::parse(R"({"n":5,"r":3,"edges":[[0,1,2],[0,1,2]]})");
  EXPECT_THROW(hypergraph_from_json(dup), Error);
  auto wrong_size = nlohmann::json::parse(R"({"n":5,"r":3,"edges":[[0,1]]})");
  EXPECT_THROW(hypergraph_from_json(wrong_size), Error);
  auto out_of_range = nlohmann::json::parse(R"({"n":5,"r":3,"edges":[[0,1,5]]})");
  EXPECT_THROW(hypergraph_from_json(out_of_range), Error);
  auto unsorted = nlohmann::json::parse(R"({"n":5,"r":3,"edges":[[2,1,0]]})");
  EXPECT_THROW(hypergraph_from_json(unsorted), Error);
  auto too_big = nlohmann::json::parse(R"({"n":200,"r":2,"edges":[]})");
  try {
    hypergraph_from_json(too_big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::size_limit);
  }
}

}  // namespace
}  // namespace hfw
