#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hfw/combinatorics.hpp"
#include "hfw/error.hpp"
#include "hfw/vertex_set.hpp"

namespace hfw {

/// Upper limit on C(n, r) for any stored edge bit array.
inline constexpr std::uint64_t kMaxEdgeSlots = std::uint64_t{1} << 26;

inline void check_shape(std::uint32_t n, std::uint32_t r) {
  require(n >= 1, ErrorKind::invalid_argument, "vertex count must be at least 1");
  require(r >= 2, ErrorKind::invalid_argument, "rank must be at least 2");
  require(n <= kMaxVertices, ErrorKind::size_limit,
          "n = " + std::to_string(n) + " exceeds the supported maximum of " + std::to_string(kMaxVertices));
  require(binom(n, r) <= kMaxEdgeSlots && binom(n, r - 1) <= kMaxEdgeSlots, ErrorKind::size_limit,
          "C(n, r) too large for n = " + std::to_string(n) + ", r = " + std::to_string(r));
}

/// r-uniform hypergraph on {0..n-1}; edge e is bit colex_rank(e).
class UniformHypergraph {
 public:
  UniformHypergraph(std::uint32_t n, std::uint32_t r) : n_(n), r_(r) {
    check_shape(n, r);
    slots_ = binom(n, r);
    bits_.assign((slots_ + 63) / 64, 0);
  }

  static UniformHypergraph complete(std::uint32_t n, std::uint32_t r) {
    UniformHypergraph h(n, r);
    for (std::uint64_t e = 0; e < h.slots_; ++e) h.set_edge(e);
    return h;
  }

  /// Edges given as vertex lists in any order; rejects malformed or duplicate edges.
  static UniformHypergraph from_edges(std::uint32_t n, std::uint32_t r,
                                      const std::vector<std::vector<Vertex>>& edges) {
    UniformHypergraph h(n, r);
    for (const auto& e : edges) {
      const std::uint64_t rank = h.rank_checked(e);
      require(!h.has_edge(rank), ErrorKind::invalid_argument, "duplicate edge");
      h.set_edge(rank);
    }
    return h;
  }

  std::uint32_t order() const { return n_; }
  std::uint32_t rank() const { return r_; }
  /// Number of r-subsets, i.e. edges of the complete hypergraph.
  std::uint64_t slot_count() const { return slots_; }

  bool has_edge(std::uint64_t rank) const { return (bits_[rank >> 6] >> (rank & 63)) & 1U; }
  bool has_edge(std::span<const Vertex> sorted) const { return has_edge(colex_rank(sorted)); }

  void set_edge(std::uint64_t rank) { bits_[rank >> 6] |= std::uint64_t{1} << (rank & 63); }
  void clear_edge(std::uint64_t rank) { bits_[rank >> 6] &= ~(std::uint64_t{1} << (rank & 63)); }
  void add_edge(std::vector<Vertex> e) { set_edge(rank_checked(e)); }

  std::uint64_t edge_count() const {
    std::uint64_t total = 0;
    for (auto w : bits_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
  }

  /// Sorted vertex lists in colex order.
  std::vector<std::vector<Vertex>> edges() const {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> e(r_);
    for (std::uint32_t i = 0; i < r_; ++i) e[i] = i;
    if (r_ > n_) return out;
    std::uint64_t rank = 0;
    do {
      if (has_edge(rank)) out.push_back(e);
      ++rank;
    } while (next_colex(e, n_));
    return out;
  }

  const std::vector<std::uint64_t>& bit_words() const { return bits_; }

  friend bool operator==(const UniformHypergraph& a, const UniformHypergraph& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.bits_ == b.bits_;
  }

  /// Validates an edge (distinct, in range, size r) and returns its colex rank.
  std::uint64_t rank_checked(std::vector<Vertex> e) const {
    require(e.size() == r_, ErrorKind::invalid_argument,
            "edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(r_));
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
      require(e[i] < n_, ErrorKind::invalid_argument, "edge vertex out of range");
      require(i == 0 || e[i] != e[i - 1], ErrorKind::invalid_argument, "edge repeats a vertex");
    }
    return colex_rank(e);
  }

 private:
  std::uint32_t n_;
  std::uint32_t r_;
  std::uint64_t slots_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline UniformHypergraph complement(const UniformHypergraph& h) {
  UniformHypergraph out(h.order(), h.rank());
  for (std::uint64_t e = 0; e < h.slot_count(); ++e) {
    if (!h.has_edge(e)) out.set_edge(e);
  }
  return out;
}

/// Sub-hypergraph induced on `s`, relabelled to 0..|s|-1 preserving order.
inline UniformHypergraph induced(const UniformHypergraph& h, const VertexSet& s) {
  const std::vector<Vertex> keep = s.members();
  require(!keep.empty(), ErrorKind::invalid_argument, "induced subhypergraph needs at least one vertex");
  require(keep.back() < h.order(), ErrorKind::invalid_argument, "vertex set exceeds hypergraph order");
  const auto m = static_cast<std::uint32_t>(keep.size());
  UniformHypergraph out(m, h.rank());
  if (h.rank() > m) return out;
  std::vector<Vertex> local(h.rank()), global(h.rank());
  for (std::uint32_t i = 0; i < h.rank(); ++i) local[i] = i;
  std::uint64_t rank = 0;
  do {
    for (std::uint32_t i = 0; i < h.rank(); ++i) global[i] = keep[local[i]];
    if (h.has_edge(global)) out.set_edge(rank);
    ++rank;
  } while (next_colex(local, m));
  return out;
}

// JSON interchange: {"n": int, "r": int, "edges": [[v...]...]}.

inline nlohmann::json to_json(const UniformHypergraph& h) {
  return nlohmann::json{{"n", h.order()}, {"r", h.rank()}, {"edges", h.edges()}};
}

namespace detail {

inline std::uint32_t json_uint(const nlohmann::json& j, const char* key) {
  require(j.is_object() && j.contains(key), ErrorKind::parse_error, std::string("missing field \"") + key + "\"");
  const auto& v = j.at(key);
  require(v.is_number_integer() && v.get<std::int64_t>() >= 0, ErrorKind::parse_error,
          std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::uint32_t>();
}

inline std::vector<Vertex> json_vertex_list(const nlohmann::json& j) {
  require(j.is_array(), ErrorKind::parse_error, "edge must be an array of vertices");
  std::vector<Vertex> out;
  for (const auto& v : j) {
    require(v.is_number_integer() && v.get<std::int64_t>() >= 0, ErrorKind::parse_error,
            "vertex must be a non-negative integer");
    out.push_back(v.get<Vertex>());
  }
  return out;
}

}  // namespace detail

inline UniformHypergraph hypergraph_from_json(const nlohmann::json& j) {
  const std::uint32_t n = detail::json_uint(j, "n");
  const std::uint32_t r = detail::json_uint(j, "r");
  require(j.contains("edges") && j.at("edges").is_array(), ErrorKind::parse_error, "missing edges array");
  std::vector<std::vector<Vertex>> edges;
  for (const auto& e : j.at("edges")) {
    auto verts = detail::json_vertex_list(e);
    require(std::is_sorted(verts.begin(), verts.end()), ErrorKind::parse_error, "edge vertices must be sorted");
    edges.push_back(std::move(verts));
  }
  try {
    return UniformHypergraph::from_edges(n, r, edges);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::size_limit) throw;
    fail(ErrorKind::parse_error, e.what());
  }
}

}  // namespace hfw
