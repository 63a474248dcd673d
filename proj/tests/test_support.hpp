#pragma once

// Test-only helpers: seeded generators and brute-force oracles that do not
// share code paths with the library's search routines.

#include <cstdint>
#include <random>
#include <vector>

#include "hfw/coloring.hpp"
#include "hfw/hypergraph.hpp"

namespace hfw::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  bool coin(double p = 0.5) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 engine_;
};

inline UniformHypergraph random_hypergraph(Rng& rng, std::uint32_t n, std::uint32_t r, double density) {
  UniformHypergraph h(n, r);
  for (std::uint64_t e = 0; e < h.slot_count(); ++e) {
    if (rng.coin(density)) h.set_edge(e);
  }
  return h;
}

/// Brute-force edge test on an explicit r-subset given as a bitmask.
inline bool oracle_subset_is_clique(const UniformHypergraph& h, std::uint64_t mask) {
  std::vector<Vertex> members;
  for (Vertex v = 0; v < h.order(); ++v) {
    if ((mask >> v) & 1U) members.push_back(v);
  }
  const std::size_t r = h.rank();
  if (members.size() < r) return true;
  // Enumerate r-subsets by bitmask over member positions.
  const std::size_t m = members.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    if (static_cast<std::size_t>(__builtin_popcountll(pick)) != r) continue;
    std::vector<Vertex> e;
    for (std::size_t i = 0; i < m; ++i) {
      if ((pick >> i) & 1U) e.push_back(members[i]);
    }
    if (!h.has_edge(e)) return false;
  }
  return true;
}

/// All maximal cliques by testing every one of the 2^n vertex subsets.
inline std::vector<std::uint64_t> oracle_maximal_cliques(const UniformHypergraph& h) {
  const std::uint32_t n = h.order();
  std::vector<char> clique(std::size_t{1} << n, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) clique[s] = oracle_subset_is_clique(h, s);
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!clique[s]) continue;
    bool maximal = true;
    for (Vertex v = 0; v < n && maximal; ++v) {
      if (!((s >> v) & 1U) && clique[s | (std::uint64_t{1} << v)]) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

/// Sum over colors of the oracle maximal-clique count of each color class.
inline std::uint64_t oracle_score(const EdgeColoring& coloring) {
  std::uint64_t total = 0;
  for (Color c = 0; c < coloring.colors(); ++c) total += oracle_maximal_cliques(coloring.factor(c)).size();
  return total;
}

/// Calls f on every t-coloring of the edges of K_n^r (t^C(n,r) of them).
template <class F>
void for_each_coloring(std::uint32_t n, std::uint32_t r, std::uint32_t t, F&& f) {
  EdgeColoring c(n, r, t);
  std::vector<std::uint8_t> digits(c.edge_count(), 0);
  while (true) {
    f(EdgeColoring(n, r, t, digits));
    std::size_t i = 0;
    while (i < digits.size() && digits[i] + 1U == t) digits[i++] = 0;
    if (i == digits.size()) return;
    ++digits[i];
  }
}

}  // namespace hfw::testing
