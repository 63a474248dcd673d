#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hfw/constructions.hpp"
#include "test_support.hpp"

namespace hfw {
namespace {

using testing::oracle_maximal_cliques;
using testing::oracle_score;

std::uint64_t sum_formula(std::uint64_t n) { return (n + 1) * (n + 1) / 4; }

std::set<std::vector<Vertex>> as_sets(const std::vector<VertexSet>& cliques) {
  std::set<std::vector<Vertex>> out;
  for (const auto& q : cliques) out.insert(q.members());
  return out;
}

TEST(Fano, CountsAndPairCover) {
  const auto h = fano();
  EXPECT_EQ(h.order(), 7U);
  EXPECT_EQ(h.edge_count(), 7U);
  for (Vertex a = 0; a < 7; ++a) {
    for (Vertex b = a + 1; b < 7; ++b) {
      int on = 0;
      for (const auto& e : h.edges()) on += std::count(e.begin(), e.end(), a) && std::count(e.begin(), e.end(), b);
      EXPECT_EQ(on, 1);
    }
  }
  const auto p = profile(h);
  EXPECT_EQ(p.c(), 7U);
  EXPECT_EQ(p.cbar(), 7U);
  EXPECT_EQ(p.d(), 3U);
  EXPECT_EQ(p.dbar(), 4U);
  for (auto m : p.cliques.membership) EXPECT_EQ(m, 3U);
  EXPECT_EQ(oracle_maximal_cliques(h).size(), 7U);
  EXPECT_EQ(oracle_maximal_cliques(complement(h)).size(), 7U);
}

TEST(Fano, MatchesPlaneOfOrderTwo) {
  const auto plane = projective_plane(2);
  std::vector<std::vector<Vertex>> lines(plane.lines.begin(), plane.lines.end());
  const auto h = UniformHypergraph::from_edges(7, 3, lines);
  const auto p = profile(h);
  EXPECT_EQ(p.c(), 7U);
  EXPECT_EQ(p.cbar(), 7U);
}

TEST(Octahedron, CountsAndAnticliques) {
  const auto h = octahedron_system();
  EXPECT_EQ(h.edge_count(), 6U);
  const auto p = profile(h);
  EXPECT_EQ(p.c(), 9U);
  EXPECT_EQ(p.cbar(), 5U);
  EXPECT_EQ(p.d(), 3U);
  EXPECT_EQ(p.dbar(), 2U);
  const auto anti = enumerate_maximal_cliques(complement(h));
  const std::set<std::vector<Vertex>> expected{{0, 2, 4}, {0, 3, 5}, {2, 3, 4, 5}, {0, 1, 4, 5}, {0, 1, 2, 3}};
  EXPECT_EQ(as_sets(anti.cliques), expected);
  const auto flipped = profile(complement(h));
  EXPECT_EQ(flipped.d(), 2U);
  EXPECT_EQ(flipped.dbar(), 3U);
}

TEST(TripleSystems, BipartiteHitsQuarterSquare) {
  for (std::uint32_t n = 2; n <= 20; ++n) {
    const auto h = bipartite_triple_system(n);
    EXPECT_EQ(profile(h).sum(), sum_formula(n)) << n;
    if (n <= 10) {
      EXPECT_EQ(oracle_maximal_cliques(h).size() + oracle_maximal_cliques(complement(h)).size(), sum_formula(n)) << n;
    }
  }
  EXPECT_EQ(profile(bipartite_triple_system(6)).sum(), 12U);
  EXPECT_EQ(profile(bipartite_triple_system(5)).sum(), 9U);
  EXPECT_EQ(profile(bipartite_triple_system(2)).sum(), 2U);
}

TEST(TripleSystems, ParityHitsQuarterSquare) {
  for (std::uint32_t n = 2; n <= 20; ++n) {
    const auto h = parity_triple_system(n);
    EXPECT_EQ(profile(h).sum(), sum_formula(n)) << n;
    if (n <= 10) {
      EXPECT_EQ(oracle_maximal_cliques(h).size() + oracle_maximal_cliques(complement(h)).size(), sum_formula(n)) << n;
    }
  }
  EXPECT_EQ(profile(parity_triple_system(9)).sum(), 25U);
}

TEST(TripleSystems, ParityCliquesAreIntervalSets) {
  // In 1-based labels, X_{a,b} = {a, b} plus the odd integers strictly between,
  // for even 0 <= a < b <= 8, cut down to 1..7. Vertex i is label i+1.
  std::set<std::vector<Vertex>> expected;
  for (std::uint32_t a = 0; a <= 8; a += 2) {
    for (std::uint32_t b = a + 2; b <= 8; b += 2) {
      std::vector<Vertex> x;
      for (std::uint32_t label = a; label <= b; ++label) {
        const bool keep = label == a || label == b || label % 2 == 1;
        if (keep && label >= 1 && label <= 7) x.push_back(label - 1);
      }
      expected.insert(x);
    }
  }
  const auto report = enumerate_maximal_cliques(parity_triple_system(7));
  EXPECT_EQ(as_sets(report.cliques), expected);
}

TEST(ExtendStar, FanoAndSingleEdge) {
  const auto ext = extend_star(fano(), profile(fano()));
  EXPECT_EQ(ext.hypergraph.order(), 8U);
  EXPECT_EQ(ext.profile.c(), 11U);
  EXPECT_EQ(ext.profile.cbar(), 7U);
  EXPECT_EQ(ext.pivot, 0U);
  const auto single = UniformHypergraph::complete(3, 3);
  EXPECT_EQ(count_maximal_cliques(extend_star(single)), 3U);
}

TEST(ExtendStar, PostconditionsOnRandomTripleSystems) {
  testing::Rng rng(91);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::uint32_t>(3 + rng.below(6));
    const auto h = testing::random_hypergraph(rng, n, 3, 0.2 + 0.6 * (trial % 5) / 4.0);
    const auto before = profile(h);
    const auto ext = extend_star(h, before);
    // Re-check with the oracle, independently of the built-in verification.
    const auto& star = ext.hypergraph;
    EXPECT_EQ(oracle_maximal_cliques(star).size(), before.c() + before.d() + 1);
    const auto anti = oracle_maximal_cliques(complement(star));
    EXPECT_EQ(anti.size(), before.cbar());
    std::uint64_t dbar = UINT64_MAX;
    for (Vertex v = 0; v <= n; ++v) {
      dbar = std::min<std::uint64_t>(dbar, std::count_if(anti.begin(), anti.end(), [v](std::uint64_t s) {
                                        return (s >> v) & 1U;
                                      }));
    }
    EXPECT_EQ(dbar, before.dbar());
  }
}

TEST(ExtendStar, RejectsWrongRank) {
  EXPECT_THROW(extend_star(UniformHypergraph::complete(4, 2)), Error);
}

TEST(Tower, FanoBase) {
  const auto result = tower(fano(), 25);
  ASSERT_EQ(result.steps.size(), 19U);
  for (const auto& s : result.steps) EXPECT_EQ(s.c + s.cbar, sum_formula(s.order) - 2) << s.order;
  EXPECT_EQ(result.hypergraph.order(), 25U);
  const auto ten = tower(fano(), 10);
  EXPECT_EQ(profile(ten.hypergraph).sum(), 28U);
}

TEST(Tower, ComplementedOctahedronBase) {
  const auto result = tower(complement(octahedron_system()), 25);
  for (const auto& s : result.steps) EXPECT_EQ(s.c + s.cbar, s.order * s.order / 4 + 5) << s.order;
  EXPECT_EQ(profile(tower(complement(octahedron_system()), 15).hypergraph).sum(), 61U);
}

TEST(Tower, IdentityAtBaseOrder) {
  EXPECT_EQ(tower(fano(), 7).hypergraph, fano());
}

TEST(Tower, RejectsUnbalancedBase) {
  // Octahedron itself has d = 3, dbar = 2.
  try {
    (void)tower(octahedron_system(), 8);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::construction_invariant_violated);
  }
}

std::uint64_t turan_edges(std::uint64_t n, std::uint64_t t) {
  std::uint64_t inside = 0;
  for (std::uint64_t i = 0; i < t; ++i) {
    const std::uint64_t part = n / t + (i < n % t ? 1 : 0);
    inside += part * (part - (part > 0 ? 1 : 0)) / 2;
  }
  return n * (n - 1) / 2 - inside;
}

TEST(Turan, TotalsMatchFormula) {
  EXPECT_EQ(score(turan_factorization(4, 2)).total, 6U);
  EXPECT_EQ(score(turan_factorization(3, 3)).total, 6U);
  EXPECT_EQ(score(turan_factorization(5, 2)).total, 9U);
  for (std::uint32_t n = 3; n <= 9; ++n) {
    for (std::uint32_t t = 2; t <= 6; ++t) {
      const std::uint64_t expected = binom(n + 1, 2) + (t - 2) * binom(n, 2) - turan_edges(n, t);
      EXPECT_EQ(score(turan_factorization(n, t)).total, expected) << n << " " << t;
    }
  }
  EXPECT_THROW(turan_factorization(2, 2), Error);
}

TEST(Turan, BruteForceMinimumForFiveVerticesRankFour) {
  std::uint64_t best = UINT64_MAX;
  testing::for_each_coloring(5, 4, 2, [&](const EdgeColoring& c) { best = std::min(best, oracle_score(c)); });
  EXPECT_EQ(best, 9U);
}

class PlaneColorings : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(PlaneColorings, AffineColoringPartitionsEveryColor) {
  const std::uint32_t q = GetParam();
  const auto gadget = affine_plane_coloring(q);
  const auto& c = gadget.coloring;
  EXPECT_EQ(c.order(), q * q);
  EXPECT_EQ(c.colors(), q + 1);
  const auto s = score(c, true);
  EXPECT_EQ(s.total, q * q + q);
  for (Color i = 0; i <= q; ++i) {
    EXPECT_EQ(s.per_color[i], q);
    for (auto m : s.reports[i].membership) EXPECT_EQ(m, 1U);
    for (const auto& x : s.reports[i].cliques) EXPECT_EQ(x.size(), q);
  }
}

TEST_P(PlaneColorings, ApexIsInOneCliquePerColor) {
  const std::uint32_t q = GetParam();
  const auto gadget = plane_apex_coloring(q);
  const auto& c = gadget.coloring;
  EXPECT_EQ(c.order(), q * q + 1);
  EXPECT_EQ(c.colors(), q);
  const auto s = score(c, true);
  EXPECT_EQ(s.total, q * q + q);
  for (Color i = 0; i < q; ++i) {
    EXPECT_EQ(s.per_color[i], q + 1);
    EXPECT_EQ(s.reports[i].membership[gadget.apex], 1U);
  }
}

TEST_P(PlaneColorings, TwoLinesRemovedProfile) {
  const std::uint32_t q = GetParam();
  const auto c = plane_minus_two_lines_coloring(q);
  EXPECT_EQ(c.order(), q * q - q);
  const auto s = score(c);
  EXPECT_EQ(s.total, q * q + q - 1);
  EXPECT_EQ(s.per_color[0], q - 1);
  for (Color i = 1; i <= q; ++i) EXPECT_EQ(s.per_color[i], q);
}

TEST_P(PlaneColorings, RoundTripThroughPlane) {
  const std::uint32_t q = GetParam();
  const auto plane = plane_from_coloring(affine_plane_coloring(q).coloring);
  EXPECT_EQ(plane.q, q);
  EXPECT_EQ(plane.point_count, q * q + q + 1);
  EXPECT_TRUE(check_plane_axioms(plane).ok);
}

INSTANTIATE_TEST_SUITE_P(SmallOrders, PlaneColorings, ::testing::Values(2U, 3U, 4U, 5U));

TEST(PlaneColorings, SmallCasesAgreeWithOracle) {
  EXPECT_EQ(oracle_score(affine_plane_coloring(2).coloring), 6U);
  EXPECT_EQ(oracle_score(affine_plane_coloring(3).coloring), 12U);
  EXPECT_EQ(oracle_score(plane_apex_coloring(2).coloring), 6U);
  EXPECT_EQ(oracle_score(plane_apex_coloring(3).coloring), 12U);
  EXPECT_EQ(oracle_score(plane_minus_two_lines_coloring(2)), 5U);
  EXPECT_EQ(oracle_score(plane_minus_two_lines_coloring(3)), 11U);
  EXPECT_EQ(score(plane_minus_two_lines_coloring(4)).total, 19U);
  EXPECT_EQ(score(plane_apex_coloring(5).coloring).total, 30U);
}

TEST(PlaneFromColoring, RejectsNonWitnesses) {
  auto expect_rejected = [](const EdgeColoring& c) {
    try {
      (void)plane_from_coloring(c);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::not_a_plane_witness);
    }
  };
  expect_rejected(EdgeColoring(9, 2, 4));
  for (std::uint32_t q : {2U, 3U, 4U}) {
    auto c = affine_plane_coloring(q).coloring;
    // Swap the colors of two edges with different colors.
    std::uint64_t other = 1;
    while (c.color(other) == c.color(0)) ++other;
    const Color a = c.color(0), b = c.color(other);
    c.set_color(0, b);
    c.set_color(other, a);
    expect_rejected(c);
  }
  expect_rejected(plane_apex_coloring(3).coloring);
}

}  // namespace
}  // namespace hfw
