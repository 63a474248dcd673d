#pragma once

// Edge colorings of the complete r-uniform hypergraph (factorizations into t
// spanning factors) and their maximal monochromatic clique scores.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hfw/cliques.hpp"
#include "hfw/hypergraph.hpp"

namespace hfw {

using Color = std::uint32_t;

inline constexpr std::uint32_t kMaxColors = 255;

/// Total map from colex edge rank to a color in {0..t-1}.
class EdgeColoring {
 public:
  /// All edges get color 0.
  EdgeColoring(std::uint32_t n, std::uint32_t r, std::uint32_t t) : n_(n), r_(r), t_(t) {
    check_shape(n, r);
    require(t >= 2, ErrorKind::invalid_argument, "need at least two colors");
    require(t <= kMaxColors, ErrorKind::size_limit, "too many colors");
    colors_.assign(binom(n, r), 0);
  }

  EdgeColoring(std::uint32_t n, std::uint32_t r, std::uint32_t t, std::vector<std::uint8_t> colors)
      : EdgeColoring(n, r, t) {
    require(colors.size() == colors_.size(), ErrorKind::invalid_argument,
            "expected " + std::to_string(colors_.size()) + " edge colors, got " + std::to_string(colors.size()));
    for (auto c : colors) require(c < t, ErrorKind::invalid_argument, "color index out of range");
    colors_ = std::move(colors);
  }

  std::uint32_t order() const { return n_; }
  std::uint32_t rank() const { return r_; }
  std::uint32_t colors() const { return t_; }
  std::uint64_t edge_count() const { return colors_.size(); }

  Color color(std::uint64_t edge) const { return colors_[edge]; }
  Color color(std::span<const Vertex> sorted_edge) const { return colors_[colex_rank(sorted_edge)]; }

  void set_color(std::uint64_t edge, Color c) {
    require(c < t_, ErrorKind::invalid_argument, "color index out of range");
    colors_[edge] = static_cast<std::uint8_t>(c);
  }

  const std::vector<std::uint8_t>& raw() const { return colors_; }

  /// Spanning sub-hypergraph formed by the edges of color `c`.
  UniformHypergraph factor(Color c) const {
    UniformHypergraph h(n_, r_);
    for (std::uint64_t e = 0; e < colors_.size(); ++e) {
      if (colors_[e] == c) h.set_edge(e);
    }
    return h;
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::uint32_t n_;
  std::uint32_t r_;
  std::uint32_t t_;
  std::vector<std::uint8_t> colors_;
};

struct ScoreReport {
  std::vector<std::uint64_t> per_color;  // c_i
  std::uint64_t total = 0;
  std::vector<CliqueReport> reports;     // empty unless requested
};

/// Scores each color class independently and sums, so a set that is maximal
/// in k colors contributes k.
inline ScoreReport score(const EdgeColoring& coloring, bool keep_reports = false) {
  ScoreReport out;
  for (Color c = 0; c < coloring.colors(); ++c) {
    const auto factor = coloring.factor(c);
    if (keep_reports) {
      out.reports.push_back(enumerate_maximal_cliques(factor));
      out.per_color.push_back(out.reports.back().count);
    } else {
      out.per_color.push_back(count_maximal_cliques(factor));
    }
  }
  out.total = std::accumulate(out.per_color.begin(), out.per_color.end(), std::uint64_t{0});
  return out;
}

/// Recolors j as i and closes the gap above j, so t drops by one.
inline EdgeColoring merge_colors(const EdgeColoring& coloring, Color i, Color j) {
  const std::uint32_t t = coloring.colors();
  require(i != j, ErrorKind::invalid_argument, "cannot merge a color with itself");
  require(i < t && j < t, ErrorKind::invalid_argument, "merge color out of range");
  require(t >= 3, ErrorKind::invalid_argument, "merging would leave fewer than two colors");
  std::vector<std::uint8_t> colors(coloring.raw());
  for (auto& c : colors) {
    Color v = (c == j) ? i : c;
    if (v > j) --v;
    c = static_cast<std::uint8_t>(v);
  }
  return EdgeColoring(coloring.order(), coloring.rank(), t - 1, std::move(colors));
}

/// c_i * c_j >= C(n, r-1) for every pair of distinct colors.
inline bool pair_products_hold(const ScoreReport& report, std::uint32_t n, std::uint32_t r) {
  const std::uint64_t need = binom(n, r - 1);
  for (std::size_t i = 0; i < report.per_color.size(); ++i) {
    for (std::size_t j = i + 1; j < report.per_color.size(); ++j) {
      if (report.per_color[i] * report.per_color[j] < need) return false;
    }
  }
  return true;
}

inline bool pair_products_hold(const EdgeColoring& coloring) {
  require(coloring.order() + 1 >= coloring.rank(), ErrorKind::invalid_argument, "pair product check needs n >= r-1");
  return pair_products_hold(score(coloring), coloring.order(), coloring.rank());
}

/// Color 0 on the edges of h and color 1 on its non-edges; the score is
/// c(h) + cbar(h).
inline EdgeColoring as_two_coloring(const UniformHypergraph& h) {
  EdgeColoring out(h.order(), h.rank(), 2);
  for (std::uint64_t e = 0; e < h.slot_count(); ++e) out.set_color(e, h.has_edge(e) ? 0 : 1);
  return out;
}

/// Coloring induced on the vertex subset `keep` (relabelled in order).
inline EdgeColoring restrict_coloring(const EdgeColoring& coloring, const VertexSet& keep) {
  const std::vector<Vertex> members = keep.members();
  require(!members.empty() && members.back() < coloring.order(), ErrorKind::invalid_argument,
          "restriction set must be a nonempty subset of the vertices");
  const auto m = static_cast<std::uint32_t>(members.size());
  const std::uint32_t r = coloring.rank();
  EdgeColoring out(m, r, coloring.colors());
  if (r > m) return out;
  std::vector<Vertex> local(r), global(r);
  for (std::uint32_t i = 0; i < r; ++i) local[i] = i;
  std::uint64_t rank = 0;
  do {
    for (std::uint32_t i = 0; i < r; ++i) global[i] = members[local[i]];
    out.set_color(rank++, coloring.color(global));
  } while (next_colex(local, m));
  return out;
}

/// Replaces vertex `v` of the graph coloring `outer` by a copy of `inner`.
///
/// Result vertices 0..inner.n-1 are the copy of `inner`; the remaining vertices
/// of `outer` follow in their original order. An edge from the copy to an
/// outer vertex u gets the color of {v, u} in `outer`.
inline EdgeColoring substitute(const EdgeColoring& outer, Vertex v, const EdgeColoring& inner) {
  require(outer.rank() == 2 && inner.rank() == 2, ErrorKind::invalid_argument, "substitution is defined for graphs");
  require(outer.colors() == inner.colors(), ErrorKind::invalid_argument, "substitution needs equal color counts");
  require(v < outer.order(), ErrorKind::invalid_argument, "substituted vertex out of range");
  const std::uint32_t h = inner.order();
  const std::uint32_t n = outer.order() + h - 1;
  EdgeColoring out(n, 2, outer.colors());
  // Position of each result vertex in `outer`, or the sentinel for the copy.
  auto outer_vertex = [&](Vertex x) -> Vertex {
    const Vertex i = x - h;
    return i < v ? i : i + 1;
  };
  for (Vertex b = 1; b < n; ++b) {
    for (Vertex a = 0; a < b; ++a) {
      const std::array<Vertex, 2> e{a, b};
      Color c;
      if (b < h) {
        c = inner.color(e);
      } else {
        const Vertex ob = outer_vertex(b);
        const Vertex oa = (a < h) ? v : outer_vertex(a);
        const std::array<Vertex, 2> oe{std::min(oa, ob), std::max(oa, ob)};
        c = outer.color(oe);
      }
      out.set_color(colex_rank(e), c);
    }
  }
  return out;
}

// JSON: {"n","r","t","colors":[...]} in colex edge order, or the explicit
// form {"n","r","t","edges":[{"e":[...],"c":k}...]} covering each edge once.

inline nlohmann::json to_json(const EdgeColoring& coloring) {
  std::vector<std::uint32_t> colors(coloring.raw().begin(), coloring.raw().end());
  return nlohmann::json{{"n", coloring.order()}, {"r", coloring.rank()}, {"t", coloring.colors()}, {"colors", colors}};
}

inline EdgeColoring coloring_from_json(const nlohmann::json& j) {
  const std::uint32_t n = detail::json_uint(j, "n");
  const std::uint32_t r = detail::json_uint(j, "r");
  const std::uint32_t t = detail::json_uint(j, "t");
  auto guard = [](auto&& make) -> EdgeColoring {
    try {
      return make();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::size_limit) throw;
      fail(ErrorKind::parse_error, e.what());
    }
  };
  if (j.contains("colors")) {
    require(j.at("colors").is_array(), ErrorKind::parse_error, "colors must be an array");
    std::vector<std::uint8_t> colors;
    for (const auto& c : j.at("colors")) {
      require(c.is_number_integer() && c.get<std::int64_t>() >= 0 && c.get<std::int64_t>() < std::int64_t{t},
              ErrorKind::parse_error, "color entries must be integers in [0, t)");
      colors.push_back(static_cast<std::uint8_t>(c.get<std::uint32_t>()));
    }
    return guard([&] { return EdgeColoring(n, r, t, std::move(colors)); });
  }
  require(j.contains("edges") && j.at("edges").is_array(), ErrorKind::parse_error,
          "coloring needs a \"colors\" or \"edges\" array");
  return guard([&] {
    EdgeColoring out(n, r, t);
    std::vector<char> seen(out.edge_count(), 0);
    const UniformHypergraph shape(n, r);
    for (const auto& item : j.at("edges")) {
      require(item.is_object() && item.contains("e") && item.contains("c"), ErrorKind::parse_error,
              "edge entries need \"e\" and \"c\"");
      const std::uint64_t rank = shape.rank_checked(detail::json_vertex_list(item.at("e")));
      require(!seen[rank], ErrorKind::parse_error, "edge listed twice");
      seen[rank] = 1;
      require(item.at("c").is_number_integer() && item.at("c").get<std::int64_t>() >= 0, ErrorKind::parse_error,
              "edge color must be a non-negative integer");
      out.set_color(rank, item.at("c").get<Color>());
    }
    for (auto s : seen) require(s != 0, ErrorKind::parse_error, "explicit edge list does not cover every edge");
    return out;
  });
}

}  // namespace hfw
