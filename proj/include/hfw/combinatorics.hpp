#pragma once

// Binomial coefficients, colexicographic ranking of k-subsets and exact
// integer square roots.

#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "hfw/error.hpp"

namespace hfw {

using Vertex = std::uint32_t;

/// Largest vertex count supported anywhere in the library.
inline constexpr std::uint32_t kMaxVertices = 128;

namespace detail {

inline constexpr std::size_t kBinomRows = kMaxVertices + 2;

struct BinomialTable {
  // Saturates at UINT64_MAX instead of wrapping.
  std::array<std::array<std::uint64_t, kBinomRows>, kBinomRows> v{};

  constexpr BinomialTable() {
    for (std::size_t n = 0; n < kBinomRows; ++n) {
      v[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k) {
        const std::uint64_t a = v[n - 1][k - 1];
        const std::uint64_t b = v[n - 1][k];
        v[n][k] = (a > UINT64_MAX - b) ? UINT64_MAX : a + b;
      }
    }
  }
};

inline constexpr BinomialTable kBinom{};

}  // namespace detail

/// C(n, k); zero when k > n or either argument is negative.
constexpr std::uint64_t binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n < static_cast<std::int64_t>(detail::kBinomRows)) {
    return detail::kBinom.v[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }
  // Outside the table: multiplicative formula, saturating on overflow.
  if (k > n - k) k = n - k;
  std::uint64_t acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    const std::uint64_t g = std::gcd(acc, static_cast<std::uint64_t>(i));
    std::uint64_t scaled = 0;
    if (__builtin_mul_overflow(acc / g, static_cast<std::uint64_t>(n - k + i), &scaled)) return UINT64_MAX;
    acc = scaled / (static_cast<std::uint64_t>(i) / g);
  }
  return acc;
}

/// Colex rank of a strictly increasing vertex list: sum of C(v_i, i+1).
inline std::uint64_t colex_rank(std::span<const Vertex> sorted) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) rank += binom(sorted[i], static_cast<std::int64_t>(i + 1));
  return rank;
}

/// Inverse of colex_rank for subsets of size k.
inline void colex_unrank(std::uint64_t rank, std::uint32_t k, std::span<Vertex> out) {
  for (std::uint32_t i = k; i >= 1; --i) {
    Vertex v = i - 1;
    while (binom(v + 1, i) <= rank) ++v;
    out[i - 1] = v;
    rank -= binom(v, i);
  }
}

inline std::vector<Vertex> colex_unrank(std::uint64_t rank, std::uint32_t k) {
  std::vector<Vertex> out(k);
  colex_unrank(rank, k, out);
  return out;
}

/// Advance `subset` (strictly increasing, size k, entries < n) to its colex
/// successor. Returns false after the last subset.
inline bool next_colex(std::span<Vertex> subset, std::uint32_t n) {
  const std::size_t k = subset.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex limit = (i + 1 < k) ? subset[i + 1] : n;
    if (subset[i] + 1 < limit) {
      ++subset[i];
      for (std::size_t j = 0; j < i; ++j) subset[j] = static_cast<Vertex>(j);
      return true;
    }
  }
  return false;
}

/// floor(sqrt(x)), exact for all 64-bit inputs.
constexpr std::uint64_t isqrt_floor(std::uint64_t x) {
  if (x < 2) return x;
  std::uint64_t lo = 1, hi = std::uint64_t{1} << 32;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (mid <= x / mid) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

/// ceil(sqrt(x)), exact.
constexpr std::uint64_t isqrt_ceil(std::uint64_t x) {
  const std::uint64_t f = isqrt_floor(x);
  return (f * f == x) ? f : f + 1;
}

constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace hfw
