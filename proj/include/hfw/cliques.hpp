#pragma once

// Maximal clique enumeration for r-uniform hypergraphs.
//
// The search is Bron-Kerbosch generalised to hypergraphs: for a current
// clique R the candidate set is {v : R + v is a clique}. Adding v keeps a
// candidate u only if every r-subset of R + v + u containing both u and v is
// an edge, which is one lookup per (r-2)-subset T of R in the link table
// link(T + v) = {u : T + v + u is an edge}. The family of cliques is
// hereditary, which is all the unpivoted recursion needs. Pivoting is used
// for r = 2 (the classical rule) and r = 3 (see select_pivot).

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hfw/combinatorics.hpp"
#include "hfw/hypergraph.hpp"
#include "hfw/vertex_set.hpp"

namespace hfw {

/// For every (r-1)-subset A (by colex rank) the set {u : A + u is an edge}.
template <std::size_t Words>
class LinkTable {
 public:
  using Set = BasicVertexSet<Words>;

  LinkTable(std::uint32_t n, std::uint32_t r) : n_(n), r_(r) {
    check_shape(n, r);
    require(n <= Set::capacity, ErrorKind::size_limit, "link table word count too small for n");
    links_.assign(binom(n, r - 1), Set{});
  }

  explicit LinkTable(const UniformHypergraph& h) : LinkTable(h.order(), h.rank()) {
    if (r_ > n_) return;
    std::vector<Vertex> e(r_);
    for (std::uint32_t i = 0; i < r_; ++i) e[i] = i;
    std::uint64_t rank = 0;
    do {
      if (h.has_edge(rank)) add(e);
      ++rank;
    } while (next_colex(e, n_));
  }

  std::uint32_t order() const { return n_; }
  std::uint32_t rank() const { return r_; }

  const Set& link(std::uint64_t face_rank) const { return links_[face_rank]; }

  /// Insert the sorted edge `e`.
  void add(std::span<const Vertex> e) {
    for_each_face(e, [this](std::uint64_t face, Vertex apex) { links_[face].insert(apex); });
  }

  void remove(std::span<const Vertex> e) {
    for_each_face(e, [this](std::uint64_t face, Vertex apex) { links_[face].erase(apex); });
  }

 private:
  template <class F>
  void for_each_face(std::span<const Vertex> e, F&& f) const {
    // Rank of e minus e[i], computed from the colex sum directly.
    for (std::size_t i = 0; i < e.size(); ++i) {
      std::uint64_t rank = 0;
      std::size_t pos = 0;
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (j == i) continue;
        rank += binom(e[j], static_cast<std::int64_t>(++pos));
      }
      f(rank, e[i]);
    }
  }

  std::uint32_t n_;
  std::uint32_t r_;
  std::vector<Set> links_;
};

namespace detail {

inline std::uint64_t pair_rank(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return a + binom(b, 2);
}

template <std::size_t Words, class Visitor>
class MaximalCliqueSearch {
 public:
  using Set = BasicVertexSet<Words>;

  MaximalCliqueSearch(const LinkTable<Words>& links, Visitor& visit)
      : links_(links), visit_(visit), n_(links.order()), r_(links.rank()) {}

  void run() {
    members_.clear();
    members_.reserve(n_);
    recurse(Set{}, Set::prefix(n_), Set{});
  }

 private:
  // {u : R + v + u is a clique}, assuming R + v and R + u are cliques.
  Set compatible(Vertex v) {
    const std::size_t depth = members_.size();
    if (r_ == 2) return links_.link(v);
    if (depth + 2 < r_) return Set::prefix(n_);
    if (r_ == 3) {
      Set acc = Set::prefix(n_);
      for (Vertex w : members_) acc &= links_.link(pair_rank(w, v));
      return acc;
    }
    // General rank: intersect over all (r-2)-subsets T of R.
    const std::uint32_t k = r_ - 2;
    Set acc = Set::prefix(n_);
    std::vector<std::uint32_t> idx(k);
    for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<Vertex> face(k + 1);
    while (true) {
      std::size_t out = 0;
      bool placed = false;
      for (std::uint32_t i = 0; i < k; ++i) {
        const Vertex w = members_[idx[i]];
        if (!placed && v < w) {
          face[out++] = v;
          placed = true;
        }
        face[out++] = w;
      }
      if (!placed) face[out++] = v;
      acc &= links_.link(colex_rank(face));
      if (acc.empty()) break;
      // members_ is sorted, so colex successor over indices keeps T sorted.
      if (!next_colex(idx, static_cast<std::uint32_t>(depth))) break;
    }
    return acc;
  }

  // Vertices that may be skipped when branching because pivot u already covers them.
  Set covered_by(Vertex u, const Set& reach, const Set& cand) const {
    if (r_ == 2) return cand & links_.link(u);
    Set covered;
    cand.for_each([&](Vertex w) {
      if (w == u) return;
      Set rest = reach;
      rest.erase(w);
      rest.erase(u);
      if (rest.is_subset_of(links_.link(pair_rank(w, u)))) covered.insert(w);
    });
    return covered;
  }

  Set select_branch_set(const Set& clique, const Set& cand, const Set& excluded) const {
    if (r_ > 3 || cand.size() < 2) return cand;
    const Set reach = clique | cand;
    Set best_cover;
    std::uint32_t best = 0;
    bool found = false;
    (cand | excluded).for_each([&](Vertex u) {
      if (found && best + 1 >= cand.size()) return;
      const Set cover = covered_by(u, reach, cand);
      const std::uint32_t size = cover.size();
      if (!found || size > best) {
        best = size;
        best_cover = cover;
        found = true;
      }
    });
    return cand - best_cover;
  }

  void recurse(Set clique, Set cand, Set excluded) {
    if (cand.empty()) {
      if (excluded.empty()) visit_(clique);
      return;
    }
    Set branch = select_branch_set(clique, cand, excluded);
    while (!branch.empty()) {
      const Vertex v = branch.pop_first();
      const Set compat = compatible(v);
      Set next_cand = cand & compat;
      next_cand.erase(v);
      const Set next_excluded = excluded & compat;
      Set next_clique = clique;
      next_clique.insert(v);
      members_.insert(std::upper_bound(members_.begin(), members_.end(), v), v);
      recurse(next_clique, next_cand, next_excluded);
      members_.erase(std::find(members_.begin(), members_.end(), v));
      cand.erase(v);
      excluded.insert(v);
    }
  }

  const LinkTable<Words>& links_;
  Visitor& visit_;
  std::uint32_t n_;
  std::uint32_t r_;
  std::vector<Vertex> members_;  // sorted members of the current clique
};

}  // namespace detail

/// Calls `visit(const BasicVertexSet<Words>&)` once per maximal clique, in
/// search order (not sorted).
template <std::size_t Words, class Visitor>
void for_each_maximal_clique(const LinkTable<Words>& links, Visitor&& visit) {
  detail::MaximalCliqueSearch<Words, std::remove_reference_t<Visitor>> search(links, visit);
  search.run();
}

template <std::size_t Words>
std::uint64_t count_maximal_cliques(const LinkTable<Words>& links) {
  std::uint64_t count = 0;
  for_each_maximal_clique(links, [&count](const auto&) { ++count; });
  return count;
}

struct CliqueReport {
  std::vector<VertexSet> cliques;  // sorted by member list
  std::uint64_t count = 0;         // c
  std::vector<std::uint64_t> membership;  // D(v)
  std::uint64_t min_membership = 0;       // d
  std::uint32_t largest = 0;              // size of a largest maximal clique

  std::uint64_t d() const { return min_membership; }
};

namespace detail {

template <std::size_t Words>
CliqueReport build_report(const UniformHypergraph& h, bool keep_cliques) {
  const LinkTable<Words> links(h);
  CliqueReport report;
  report.membership.assign(h.order(), 0);
  for_each_maximal_clique(links, [&](const BasicVertexSet<Words>& q) {
    ++report.count;
    report.largest = std::max(report.largest, q.size());
    q.for_each([&](Vertex v) { ++report.membership[v]; });
    if (keep_cliques) report.cliques.push_back(VertexSet::convert(q));
  });
  std::sort(report.cliques.begin(), report.cliques.end());
  report.min_membership = *std::min_element(report.membership.begin(), report.membership.end());
  return report;
}

}  // namespace detail

/// All maximal cliques of `h`, each once, in sorted order.
inline CliqueReport enumerate_maximal_cliques(const UniformHypergraph& h, bool keep_cliques = true) {
  if (h.order() <= 64) return detail::build_report<1>(h, keep_cliques);
  return detail::build_report<VertexSet::capacity / 64>(h, keep_cliques);
}

inline std::uint64_t count_maximal_cliques(const UniformHypergraph& h) {
  if (h.order() <= 64) return count_maximal_cliques(LinkTable<1>(h));
  return count_maximal_cliques(LinkTable<VertexSet::capacity / 64>(h));
}

/// True iff every r-subset of `s` is an edge (vacuously true when |s| < r).
inline bool is_clique(const UniformHypergraph& h, const VertexSet& s) {
  const std::vector<Vertex> members = s.members();
  const std::uint32_t r = h.rank();
  if (members.size() < r) return true;
  std::vector<Vertex> idx(r), sub(r);
  for (std::uint32_t i = 0; i < r; ++i) idx[i] = i;
  do {
    for (std::uint32_t i = 0; i < r; ++i) sub[i] = members[idx[i]];
    if (!h.has_edge(sub)) return false;
  } while (next_colex(idx, static_cast<std::uint32_t>(members.size())));
  return true;
}

inline bool is_anticlique(const UniformHypergraph& h, const VertexSet& s) {
  const std::vector<Vertex> members = s.members();
  const std::uint32_t r = h.rank();
  if (members.size() < r) return true;
  std::vector<Vertex> idx(r), sub(r);
  for (std::uint32_t i = 0; i < r; ++i) idx[i] = i;
  do {
    for (std::uint32_t i = 0; i < r; ++i) sub[i] = members[idx[i]];
    if (h.has_edge(sub)) return false;
  } while (next_colex(idx, static_cast<std::uint32_t>(members.size())));
  return true;
}

struct Degrees {
  std::uint64_t d = 0;
  std::uint64_t dbar = 0;
};

/// d(H) and d(complement of H).
inline Degrees degrees(const UniformHypergraph& h) {
  return {enumerate_maximal_cliques(h, false).min_membership,
          enumerate_maximal_cliques(complement(h), false).min_membership};
}

}  // namespace hfw
