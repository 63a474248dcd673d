#pragma once

// Closed-form bounds on the minimum score f_r(t, n) and an aggregator that
// combines them with constructions, recursion and stored witnesses.
// Everything is computed in exact integer arithmetic.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hfw/combinatorics.hpp"
#include "hfw/finite_field.hpp"
#include "hfw/witness.hpp"

namespace hfw {

struct BoundRecord {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::string lower_source;
  std::string upper_source;
  bool exact = false;
};

namespace detail {

inline void check_params(std::uint32_t r, std::uint32_t t, std::uint64_t n) {
  require(r >= 2 && t >= 2 && n >= 1, ErrorKind::invalid_argument, "need r >= 2, t >= 2, n >= 1");
}

/// Edges of the balanced complete t-partite graph on n vertices.
inline std::uint64_t turan_edges(std::uint64_t n, std::uint64_t t) {
  std::uint64_t inside = 0;
  for (std::uint64_t i = 0; i < t; ++i) {
    const std::uint64_t part = n / t + (i < n % t ? 1 : 0);
    inside += binom(static_cast<std::int64_t>(part), 2);
  }
  return binom(static_cast<std::int64_t>(n), 2) - inside;
}

}  // namespace detail

/// Exact value when n <= r + 1, otherwise nothing.
inline std::optional<std::uint64_t> trivial_exact(std::uint32_t r, std::uint32_t t, std::uint64_t n) {
  detail::check_params(r, t, n);
  if (n < r) return t;
  if (n == r) return std::uint64_t{t - 1} * n + 1;
  if (n == r + 1) {
    const auto ni = static_cast<std::int64_t>(n);
    return binom(ni + 1, 2) + std::uint64_t{t - 2} * binom(ni, 2) - detail::turan_edges(n, t);
  }
  return std::nullopt;
}

/// ceil(t * sqrt(C(n, r-1))).
inline std::uint64_t sqrt_lower_bound(std::uint32_t r, std::uint32_t t, std::uint64_t n) {
  detail::check_params(r, t, n);
  require(n + 1 >= r, ErrorKind::invalid_argument, "bound needs n >= r - 1");
  return isqrt_ceil(std::uint64_t{t} * t * binom(static_cast<std::int64_t>(n), r - 1));
}

/// (t-1) C(n, r-1) + 1: give every edge the same color.
inline std::uint64_t single_color_upper_bound(std::uint32_t r, std::uint32_t t, std::uint64_t n) {
  detail::check_params(r, t, n);
  require(n + 1 >= r, ErrorKind::invalid_argument, "bound needs n >= r - 1");
  return std::uint64_t{t - 1} * binom(static_cast<std::int64_t>(n), r - 1) + 1;
}

struct PairProductBound {
  std::uint64_t value = 0;  // (t-2) ceil(sqrt n) + ceil(sqrt(4n))
  std::uint64_t weak = 0;   // ceil(t sqrt n)
};

/// Graph bound from c_i c_j >= n applied to the two smallest color classes.
inline PairProductBound pair_product_lower_bound(std::uint32_t t, std::uint64_t n) {
  detail::check_params(2, t, n);
  return {std::uint64_t{t - 2} * isqrt_ceil(n) + isqrt_ceil(4 * n), isqrt_ceil(std::uint64_t{t} * t * n)};
}

struct MatchingBound {
  std::int64_t value = 0;  // t n - C(n, 2), may be negative
  bool equality = false;   // attained exactly when n <= 2 ceil(t/2)
};

inline MatchingBound matching_lower_bound(std::uint32_t t, std::uint64_t n) {
  detail::check_params(2, t, n);
  const auto value = static_cast<std::int64_t>(std::uint64_t{t} * n) -
                     static_cast<std::int64_t>(binom(static_cast<std::int64_t>(n), 2));
  return {value, n <= 2 * ((std::uint64_t{t} + 1) / 2)};
}

/// A plane of order q is built by this library (prime power up to 16).
inline bool plane_constructible(std::uint32_t q) {
  return q >= 2 && q <= FiniteField::kMaxOrder && as_prime_power(q).has_value();
}

/// No plane of order q exists: the sum-of-two-squares condition for
/// q = 1, 2 (mod 4), and the computer-verified order 10.
inline bool plane_known_absent(std::uint32_t q) {
  if (q == 10) return true;
  if (q % 4 != 1 && q % 4 != 2) return false;
  for (std::uint64_t a = 0; a * a <= q; ++a) {
    const std::uint64_t rest = q - a * a;
    const std::uint64_t b = isqrt_floor(rest);
    if (b * b == rest) return false;
  }
  return true;
}

namespace detail {

struct Candidate {
  std::uint64_t value;
  std::string source;
};

struct BoundTable {
  std::vector<Candidate> lower, upper;  // index m = order, entries 1..size-1
};

inline void offer_lower(Candidate& slot, std::uint64_t value, const char* source) {
  if (value > slot.value) slot = {value, source};
}

inline void offer_upper(Candidate& slot, std::uint64_t value, const std::string& source) {
  if (value < slot.value) slot = {value, source};
}

inline const ExactValue* stored_exact(const WitnessStore& store, std::uint32_t r, std::uint32_t t, std::uint64_t n) {
  for (const auto& v : store.exact_values()) {
    if (v.r == r && v.t == t && v.n == n) return &v;
  }
  return nullptr;
}

/// Per-order closed forms, then recursions and monotonicity until stable.
inline BoundTable graph_table(std::uint32_t t, std::uint64_t limit, const WitnessStore& store) {
  BoundTable table;
  table.lower.assign(limit + 1, {0, ""});
  table.upper.assign(limit + 1, {UINT64_MAX, ""});
  const std::uint32_t below = t - 1;  // plane order for the (t-1)^2-vertex gadgets
  const bool below_plane = plane_constructible(below);
  const bool same_plane = plane_constructible(t);
  for (std::uint64_t m = 1; m <= limit; ++m) {
    auto& lo = table.lower[m];
    auto& up = table.upper[m];
    if (auto exact = trivial_exact(2, t, m)) {
      offer_lower(lo, *exact, "trivial");
      offer_upper(up, *exact, "trivial");
    }
    offer_lower(lo, sqrt_lower_bound(2, t, m), "sqrt-binomial");
    offer_lower(lo, pair_product_lower_bound(t, m).value, "pair-product");
    const auto matching = matching_lower_bound(t, m);
    if (matching.value > 0) offer_lower(lo, static_cast<std::uint64_t>(matching.value), "matching");
    if (matching.equality) offer_upper(up, static_cast<std::uint64_t>(matching.value), "matching");
    offer_upper(up, single_color_upper_bound(2, t, m), "single-color");
    if (t == 2) {
      offer_lower(lo, m + 1, "two-color");
      offer_upper(up, m + 1, "split-graph");
    }
    if (below_plane) {
      const std::uint64_t q = below;
      if ((q - 1) * (q - 1) < m && m <= (q - 1) * q) offer_upper(up, q * q + q - 1, "plane-minus-two-lines");
      if ((q - 1) * q < m && m <= q * q) offer_upper(up, q * q + q, "plane-minus-line");
    }
    // Nonexistence of a plane of order q pushes f(q+1, q^2) past q^2 + q.
    if (below >= 2 && plane_known_absent(below) && m >= std::uint64_t{below} * below) {
      offer_lower(lo, std::uint64_t{below} * below + below + 1, "no-plane");
    }
    if (t >= 3 && t <= 5) offer_upper(up, recursive_upper_bound(t, m), "gadget-recursion");
    if (const auto entry = store.entry(t, static_cast<std::uint32_t>(std::min<std::uint64_t>(m, UINT32_MAX)))) {
      offer_upper(up, entry->total, "witness-store");
      if (entry->proved) offer_lower(lo, entry->total, "exhaustive-search");
    }
    if (const auto* v = stored_exact(store, 2, t, m)) {
      offer_lower(lo, v->value, "exhaustive-search");
      offer_upper(up, v->value, "exhaustive-search");
    }
  }
  const std::uint64_t below_step = below_plane ? std::uint64_t{below} * below - 1 : 0;
  const std::uint64_t same_step = same_plane ? std::uint64_t{t} * t : 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::uint64_t m = 2; m <= limit; ++m) {
      auto& up = table.upper[m];
      const auto before = up.value;
      if (below_step > 0 && m > below_step) {
        offer_upper(up, table.upper[m - below_step].value + below_step, "plane-recursion");
      }
      if (same_step > 0 && m > same_step) {
        offer_upper(up, table.upper[m - same_step].value + same_step, "plane-recursion");
      }
      changed = changed || up.value != before;
    }
    for (std::uint64_t m = limit; m-- > 1;) {
      auto& up = table.upper[m];
      const auto before = up.value;
      offer_upper(up, table.upper[m + 1].value, "monotone");
      changed = changed || up.value != before;
    }
  }
  for (std::uint64_t m = 2; m <= limit; ++m) {
    if (table.lower[m - 1].value > table.lower[m].value) table.lower[m] = {table.lower[m - 1].value, "monotone"};
  }
  return table;
}

}  // namespace detail

/// Largest known lower bound and smallest known upper bound, with sources.
inline BoundRecord best_known(std::uint32_t r, std::uint32_t t, std::uint64_t n,
                              const WitnessStore& store = WitnessStore::default_store()) {
  detail::check_params(r, t, n);
  BoundRecord out;
  if (r == 2) {
    require(t <= kMaxColors, ErrorKind::size_limit, "too many colors");
    require(n <= 1000000, ErrorKind::size_limit, "order too large for the bound table");
    const std::uint64_t limit = n + std::uint64_t{t} * t + 1;
    const auto table = detail::graph_table(t, limit, store);
    out.lower = table.lower[n].value;
    out.lower_source = table.lower[n].source;
    out.upper = table.upper[n].value;
    out.upper_source = table.upper[n].source;
  } else {
    detail::Candidate lo{0, ""}, up{UINT64_MAX, ""};
    if (n + 1 >= r) detail::offer_lower(lo, sqrt_lower_bound(r, t, n), "sqrt-binomial");
    if (n + 1 >= r) detail::offer_upper(up, single_color_upper_bound(r, t, n), "single-color");
    if (auto exact = trivial_exact(r, t, n)) {
      detail::offer_lower(lo, *exact, "trivial");
      detail::offer_upper(up, *exact, "trivial");
    }
    if (r == 3 && t == 2 && n >= 2) {
      detail::offer_upper(up, (n + 1) * (n + 1) / 4, "bipartite-triples");
      if (n >= 7) detail::offer_upper(up, (n + 1) * (n + 1) / 4 - 2, "fano-tower");
      if (n >= 6) detail::offer_upper(up, n * n / 4 + 5, "octahedron-tower");
    }
    if (const auto* v = detail::stored_exact(store, r, t, n)) {
      detail::offer_lower(lo, v->value, "exhaustive-search");
      detail::offer_upper(up, v->value, "exhaustive-search");
    }
    out.lower = lo.value;
    out.lower_source = lo.source;
    out.upper = up.value;
    out.upper_source = up.source;
  }
  require(out.lower <= out.upper, ErrorKind::construction_invariant_violated,
          "lower bound " + std::to_string(out.lower) + " exceeds upper bound " + std::to_string(out.upper));
  out.exact = out.lower == out.upper;
  return out;
}

}  // namespace hfw
