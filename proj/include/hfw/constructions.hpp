#pragma once

// Explicit hypergraphs and colorings: the Turan factorization for n = r+1,
// two triple-system families with c + cbar = floor((n+1)^2/4), the
// one-vertex extension and its complement tower, the Fano and octahedron
// bases, and the three colorings of K_n derived from a projective plane
// together with the inverse extraction of a plane from an optimal coloring.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hfw/cliques.hpp"
#include "hfw/coloring.hpp"
#include "hfw/hypergraph.hpp"
#include "hfw/projective_plane.hpp"

namespace hfw {

// ---------------------------------------------------------------------------
// Triple systems

inline UniformHypergraph fano() {
  return UniformHypergraph::from_edges(
      7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

/// Six of the eight faces of an octahedron with antipodal pairs {0,1},
/// {2,3}, {4,5}; the two missing faces {0,2,4} and {0,3,5} share vertex 0.
inline UniformHypergraph octahedron_system() {
  return UniformHypergraph::from_edges(6, 3, {{0, 2, 5}, {0, 3, 4}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
}

/// Edges are the triples with at least two vertices among the first floor(n/2).
inline UniformHypergraph bipartite_triple_system(std::uint32_t n) {
  require(n >= 2, ErrorKind::invalid_argument, "bipartite triple system needs n >= 2");
  UniformHypergraph h(n, 3);
  const std::uint32_t first = n / 2;
  for (const auto& e : UniformHypergraph::complete(n, 3).edges()) {
    const auto inside = std::count_if(e.begin(), e.end(), [first](Vertex v) { return v < first; });
    if (inside >= 2) h.add_edge(e);
  }
  return h;
}

/// Vertex i stands for the integer i+1; {x<y<z} is an edge iff y+1 is odd.
inline UniformHypergraph parity_triple_system(std::uint32_t n) {
  require(n >= 2, ErrorKind::invalid_argument, "parity triple system needs n >= 2");
  UniformHypergraph h(n, 3);
  for (const auto& e : UniformHypergraph::complete(n, 3).edges()) {
    if (e[1] % 2 == 0) h.add_edge(e);
  }
  return h;
}

struct TripleProfile {
  CliqueReport cliques;      // counts and memberships only
  CliqueReport anticliques;  // same, for the complement

  std::uint64_t c() const { return cliques.count; }
  std::uint64_t cbar() const { return anticliques.count; }
  std::uint64_t d() const { return cliques.min_membership; }
  std::uint64_t dbar() const { return anticliques.min_membership; }
  std::uint64_t sum() const { return c() + cbar(); }
};

inline TripleProfile profile(const UniformHypergraph& h) {
  return {enumerate_maximal_cliques(h, false), enumerate_maximal_cliques(complement(h), false)};
}

struct StarExtension {
  UniformHypergraph hypergraph;
  Vertex pivot = 0;  // vertex v that was doubled
  TripleProfile profile;
};

/// Adds a vertex v* = n with edges {x, y, v*} for every edge {x, y, v},
/// where v is the least vertex with D(v) = d(H). Checks c(H*) = c+d+1,
/// d(H*) = d+1, cbar and dbar unchanged.
inline StarExtension extend_star(const UniformHypergraph& h, const TripleProfile& before) {
  require(h.rank() == 3, ErrorKind::invalid_argument, "extension is defined for triple systems");
  require(h.order() >= 2, ErrorKind::invalid_argument, "extension needs n >= 2");
  const std::uint32_t n = h.order();
  const auto& membership = before.cliques.membership;
  const auto pivot = static_cast<Vertex>(std::find(membership.begin(), membership.end(), before.d()) -
                                         membership.begin());
  UniformHypergraph out(n + 1, 3);
  for (const auto& e : h.edges()) {
    out.add_edge(e);
    if (std::find(e.begin(), e.end(), pivot) == e.end()) continue;
    std::vector<Vertex> twin;
    for (Vertex x : e) {
      if (x != pivot) twin.push_back(x);
    }
    twin.push_back(n);
    out.add_edge(twin);
  }
  StarExtension ext{std::move(out), pivot, {}};
  ext.profile = profile(ext.hypergraph);
  const auto& p = ext.profile;
  const bool ok = p.c() == before.c() + before.d() + 1 && p.d() == before.d() + 1 && p.cbar() == before.cbar() &&
                  p.dbar() == before.dbar();
  require(ok, ErrorKind::construction_invariant_violated, "star extension changed counts unexpectedly");
  return ext;
}

inline UniformHypergraph extend_star(const UniformHypergraph& h) { return extend_star(h, profile(h)).hypergraph; }

struct TowerStep {
  std::uint32_t order = 0;
  std::uint64_t c = 0, cbar = 0, d = 0, dbar = 0;
};

struct TowerResult {
  UniformHypergraph hypergraph;
  std::vector<TowerStep> steps;  // one entry per order, starting with the base
};

/// Repeats H -> complement(extend_star(H)) up to `target_order`. The base
/// must have dbar - d in {0, 1}; with m = d + dbar every step must add
/// floor((m+2)/2) to c + cbar and move (d, dbar) to (floor((m+1)/2), ceil((m+1)/2)).
inline TowerResult tower(const UniformHypergraph& base, std::uint32_t target_order) {
  require(base.rank() == 3, ErrorKind::invalid_argument, "tower is defined for triple systems");
  require(target_order >= base.order(), ErrorKind::invalid_argument, "target order below base order");
  require(target_order <= kMaxVertices, ErrorKind::size_limit, "target order too large");
  TripleProfile prof = profile(base);
  require(prof.dbar() == prof.d() || prof.dbar() == prof.d() + 1, ErrorKind::construction_invariant_violated,
          "base needs d = floor(m/2) and dbar = ceil(m/2)");
  std::uint64_t m = prof.d() + prof.dbar();
  TowerResult result{base, {}};
  auto record = [&](const TripleProfile& p) {
    result.steps.push_back({result.hypergraph.order(), p.c(), p.cbar(), p.d(), p.dbar()});
  };
  record(prof);
  while (result.hypergraph.order() < target_order) {
    StarExtension ext = extend_star(result.hypergraph, prof);
    TripleProfile next{std::move(ext.profile.anticliques), std::move(ext.profile.cliques)};
    const bool ok = next.sum() == prof.sum() + (m + 2) / 2 && next.d() == (m + 1) / 2 && next.dbar() == (m + 2) / 2;
    require(ok, ErrorKind::construction_invariant_violated,
            "tower step to order " + std::to_string(result.hypergraph.order() + 1) + " broke the d/dbar pattern");
    result.hypergraph = complement(ext.hypergraph);
    prof = std::move(next);
    ++m;
    record(prof);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Trivial case n = r + 1

/// Factorization of K_n^{n-1}: edge V - {x} gets the color of x's block in a
/// balanced partition of V into t consecutive blocks.
inline EdgeColoring turan_factorization(std::uint32_t n, std::uint32_t t) {
  require(n >= 3, ErrorKind::invalid_argument, "Turan factorization needs n >= 3");
  const std::uint32_t r = n - 1;
  EdgeColoring out(n, r, t);
  const std::uint32_t base = n / t, extra = n % t;
  std::vector<Color> block(n);
  Vertex x = 0;
  for (Color c = 0; c < t; ++c) {
    const std::uint32_t size = base + (c < extra ? 1 : 0);
    for (std::uint32_t i = 0; i < size; ++i) block[x++] = c;
  }
  for (Vertex missing = 0; missing < n; ++missing) {
    std::vector<Vertex> e;
    for (Vertex v = 0; v < n; ++v) {
      if (v != missing) e.push_back(v);
    }
    out.set_color(colex_rank(e), block[missing]);
  }
  return out;
}

/// Graph 2-coloring whose color-0 class is a clique on the first `clique_size`
/// vertices plus isolated vertices (a split graph with omega + alpha = n + 1).
inline EdgeColoring split_coloring(std::uint32_t n, std::uint32_t clique_size) {
  require(clique_size <= n, ErrorKind::invalid_argument, "clique larger than the graph");
  EdgeColoring out(n, 2, 2);
  for (Vertex b = 1; b < n; ++b) {
    for (Vertex a = 0; a < b; ++a) {
      const std::array<Vertex, 2> e{a, b};
      out.set_color(colex_rank(e), b < clique_size ? 0 : 1);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Plane-derived colorings of K_n

/// A coloring together with a vertex that lies in exactly one maximal
/// i-clique for every color i.
struct PlaneGadget {
  EdgeColoring coloring;
  Vertex apex = 0;
};

namespace detail {

struct PlaneFrame {
  explicit PlaneFrame(std::uint32_t q) : index(projective_plane(q)) {
    const auto& l0 = index.plane().lines[0];
    base_points.assign(l0.begin(), l0.end());
  }

  std::uint32_t q() const { return index.plane().q; }
  // Position of point p on l0, or -1.
  int position_on_base(PointId p) const {
    auto it = std::find(base_points.begin(), base_points.end(), p);
    return it == base_points.end() ? -1 : static_cast<int>(it - base_points.begin());
  }

  PlaneIndex index;
  std::vector<PointId> base_points;  // x_0, ..., x_q on l0 = line 0
};

template <class ColorOf>
EdgeColoring color_points(const std::vector<PointId>& vertices, std::uint32_t t, ColorOf&& color_of) {
  const auto n = static_cast<std::uint32_t>(vertices.size());
  EdgeColoring out(n, 2, t);
  for (Vertex b = 1; b < n; ++b) {
    for (Vertex a = 0; a < b; ++a) {
      const std::array<Vertex, 2> e{a, b};
      out.set_color(colex_rank(e), color_of(vertices[a], vertices[b]));
    }
  }
  return out;
}

}  // namespace detail

/// K_{q^2} on the points off l0; uv gets color i when line uv meets l0 at x_i.
inline PlaneGadget affine_plane_coloring(std::uint32_t q) {
  const detail::PlaneFrame frame(q);
  std::vector<PointId> vertices;
  for (PointId p = 0; p < frame.index.plane().point_count; ++p) {
    if (!frame.index.on(0, p)) vertices.push_back(p);
  }
  auto coloring = detail::color_points(vertices, q + 1, [&](PointId u, PointId v) {
    return static_cast<Color>(frame.position_on_base(frame.index.meet(frame.index.line_through(u, v), 0)));
  });
  return {std::move(coloring), 0};
}

/// K_{q^2+1} on the points other than x_1..x_q, with q colors: uv gets color
/// i-1 when line uv is l_i (the i-th other line through x_0) or meets l0 at
/// x_i. The apex is x_0.
inline PlaneGadget plane_apex_coloring(std::uint32_t q) {
  const detail::PlaneFrame frame(q);
  const PointId x0 = frame.base_points[0];
  std::vector<LineId> through_x0;  // l_1..l_q in id order
  for (LineId l = 1; l < frame.index.plane().lines.size(); ++l) {
    if (frame.index.on(l, x0)) through_x0.push_back(l);
  }
  std::vector<PointId> vertices;
  Vertex apex = 0;
  for (PointId p = 0; p < frame.index.plane().point_count; ++p) {
    const int pos = frame.position_on_base(p);
    if (pos > 0) continue;
    if (pos == 0) apex = static_cast<Vertex>(vertices.size());
    vertices.push_back(p);
  }
  auto coloring = detail::color_points(vertices, q, [&](PointId u, PointId v) {
    const LineId l = frame.index.line_through(u, v);
    const auto it = std::find(through_x0.begin(), through_x0.end(), l);
    if (it != through_x0.end()) return static_cast<Color>(it - through_x0.begin());
    return static_cast<Color>(frame.position_on_base(frame.index.meet(l, 0)) - 1);
  });
  return {std::move(coloring), apex};
}

/// K_{q^2-q} on the points off l0 and l1 (least line through x_0 other than
/// l0); uv gets color i when line uv meets l0 at x_i.
inline EdgeColoring plane_minus_two_lines_coloring(std::uint32_t q) {
  const detail::PlaneFrame frame(q);
  const PointId x0 = frame.base_points[0];
  LineId l1 = 1;
  while (!frame.index.on(l1, x0)) ++l1;
  std::vector<PointId> vertices;
  for (PointId p = 0; p < frame.index.plane().point_count; ++p) {
    if (!frame.index.on(0, p) && !frame.index.on(l1, p)) vertices.push_back(p);
  }
  return detail::color_points(vertices, q + 1, [&](PointId u, PointId v) {
    return static_cast<Color>(frame.position_on_base(frame.index.meet(frame.index.line_through(u, v), 0)));
  });
}

/// Rebuilds a plane of order m from a coloring of K_{m^2} with m+1 colors and
/// total at most m^2+m: points are the vertices plus one point per color,
/// lines are each maximal i-clique plus point i, and the color points.
inline ProjectivePlane plane_from_coloring(const EdgeColoring& coloring) {
  auto reject = [](const std::string& why) { fail(ErrorKind::not_a_plane_witness, why); };
  if (coloring.rank() != 2) reject("coloring is not a graph coloring");
  const std::uint32_t m = coloring.colors() - 1;
  if (m < 2 || coloring.order() != m * m) reject("order is not (t-1)^2");
  const std::uint32_t n = coloring.order();
  const ScoreReport scored = score(coloring, true);
  if (scored.total > std::uint64_t{m} * m + m) reject("total exceeds m^2+m");
  for (Color c = 0; c <= m; ++c) {
    const auto& report = scored.reports[c];
    if (report.count != m) reject("color " + std::to_string(c) + " does not have exactly m maximal cliques");
    VertexSet seen;
    for (const auto& q : report.cliques) {
      if (q.size() != m) reject("a maximal clique of color " + std::to_string(c) + " does not have m vertices");
      if (seen.intersects(q)) reject("two maximal cliques of color " + std::to_string(c) + " overlap");
      seen |= q;
    }
  }
  for (Color a = 0; a <= m; ++a) {
    for (Color b = a + 1; b <= m; ++b) {
      for (const auto& x : scored.reports[a].cliques) {
        for (const auto& y : scored.reports[b].cliques) {
          if ((x & y).size() != 1) reject("cliques of different colors do not meet in exactly one vertex");
        }
      }
    }
  }
  ProjectivePlane plane;
  plane.q = m;
  plane.point_count = n + m + 1;
  for (Color c = 0; c <= m; ++c) {
    for (const auto& q : scored.reports[c].cliques) {
      auto line = q.members();
      line.push_back(n + c);
      plane.lines.push_back(std::move(line));
    }
  }
  std::vector<PointId> at_infinity;
  for (Color c = 0; c <= m; ++c) at_infinity.push_back(n + c);
  plane.lines.push_back(std::move(at_infinity));
  const PlaneCheck check = check_plane_axioms(plane);
  if (!check.ok) reject("extracted structure fails plane axioms: " + check.failure);
  return plane;
}

}  // namespace hfw
