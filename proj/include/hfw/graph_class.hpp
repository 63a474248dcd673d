#pragma once

// Graphs with few maximal cliques plus maximal anticliques. tau(G) is
// c(G) + cbar(G) - n(G). Labels K1-like, P4-like, C4-like and C4bar-like are
// found by witness search. Also: corpus checks, enumeration up to
// isomorphism, graph6 I/O.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hfw/cliques.hpp"
#include "hfw/hypergraph.hpp"
#include "hfw/search.hpp"

namespace hfw {

inline constexpr std::uint32_t kMaxClassifyOrder = 16;
inline constexpr std::uint32_t kMaxEnumerateOrder = 8;

enum class GraphClass { k1_like, p4_like, c4_like, c4bar_like };

inline const char* to_string(GraphClass k) {
  switch (k) {
    case GraphClass::k1_like:
      return "K1Like";
    case GraphClass::p4_like:
      return "P4Like";
    case GraphClass::c4_like:
      return "C4Like";
    case GraphClass::c4bar_like:
      return "C4BarLike";
  }
  return "?";
}

/// X and Y as in the class definitions; u = (p, q, r, s) for the C4 kinds.
struct ClassWitness {
  GraphClass kind = GraphClass::k1_like;
  VertexSet x, y;
  std::array<Vertex, 4> u{};
};

struct Classification {
  std::uint32_t n = 0;
  std::uint64_t c = 0, cbar = 0, d = 0, dbar = 0;
  std::int64_t tau = 0;
  std::uint32_t omega = 0, alpha = 0;
  bool split = false;
  std::vector<ClassWitness> labels;  // one witness per applicable kind

  bool has(GraphClass k) const {
    return std::any_of(labels.begin(), labels.end(), [k](const ClassWitness& w) { return w.kind == k; });
  }
};

namespace detail {

inline void require_graph(const UniformHypergraph& g, std::uint32_t max_order) {
  require(g.rank() == 2, ErrorKind::invalid_argument, "expected a graph (rank 2)");
  require(g.order() >= 1, ErrorKind::invalid_argument, "graph must have a vertex");
  require(g.order() <= max_order, ErrorKind::size_limit,
          "graph order " + std::to_string(g.order()) + " exceeds " + std::to_string(max_order));
}

using Adjacency = std::vector<std::uint32_t>;

inline Adjacency adjacency(const UniformHypergraph& g) {
  Adjacency adj(g.order(), 0);
  for (Vertex b = 1; b < g.order(); ++b) {
    for (Vertex a = 0; a < b; ++a) {
      if (g.has_edge(pair_rank(a, b))) {
        adj[a] |= 1U << b;
        adj[b] |= 1U << a;
      }
    }
  }
  return adj;
}

inline bool mask_is_clique(const Adjacency& adj, std::uint32_t s) {
  for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if ((s & ~(1U << v) & ~adj[v]) != 0) return false;
  }
  return true;
}

inline bool mask_is_anticlique(const Adjacency& adj, std::uint32_t s) {
  for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
    if ((s & adj[std::countr_zero(rest)]) != 0) return false;
  }
  return true;
}

inline std::uint32_t to_mask(const VertexSet& s) {
  std::uint32_t m = 0;
  s.for_each([&](Vertex v) { m |= 1U << v; });
  return m;
}

inline VertexSet from_mask(std::uint32_t m) {
  VertexSet s;
  for (; m != 0; m &= m - 1) s.insert(static_cast<Vertex>(std::countr_zero(m)));
  return s;
}

inline std::optional<std::array<Vertex, 4>> find_c4_frame(const Adjacency& adj, std::uint32_t n, std::uint32_t& x_out,
                                                         std::uint32_t& y_out) {
  auto edge = [&](Vertex a, Vertex b) { return ((adj[a] >> b) & 1U) != 0; };
  const std::uint32_t all = (1U << n) - 1;
  for (Vertex p = 0; p < n; ++p) {
    for (Vertex q = 0; q < n; ++q) {
      if (q == p || !edge(p, q)) continue;
      for (Vertex r = 0; r < n; ++r) {
        if (r == p || r == q || !edge(q, r) || edge(p, r)) continue;
        for (Vertex s = 0; s < n; ++s) {
          if (s == p || s == q || s == r || !edge(r, s) || !edge(p, s) || edge(q, s)) continue;
          const std::uint32_t u = (1U << p) | (1U << q) | (1U << r) | (1U << s);
          std::uint32_t x = 0, y = 0;
          bool ok = true;
          for (std::uint32_t rest = all & ~u; rest != 0 && ok; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const std::uint32_t touch = adj[v] & u;
            if (touch == 0) {
              y |= 1U << v;
            } else if (edge(v, p) && edge(v, q) && std::popcount(touch) >= 3) {
              x |= 1U << v;
            } else {
              ok = false;
            }
          }
          if (ok && mask_is_clique(adj, x) && mask_is_anticlique(adj, y)) {
            x_out = x;
            y_out = y;
            return std::array<Vertex, 4>{p, q, r, s};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Checks a witness against the definition of its kind, using only adjacency.
inline bool certifies(const UniformHypergraph& g, const ClassWitness& w) {
  detail::require_graph(g, kMaxClassifyOrder);
  const std::uint32_t n = g.order();
  const std::uint32_t all = (1U << n) - 1;
  const std::uint32_t x = detail::to_mask(w.x), y = detail::to_mask(w.y);
  if (((x | y) & ~all) != 0) return false;
  if (w.kind == GraphClass::c4bar_like) {
    ClassWitness inner = w;
    inner.kind = GraphClass::c4_like;
    return certifies(complement(g), inner);
  }
  const auto adj = detail::adjacency(g);
  if (!detail::mask_is_clique(adj, x) || !detail::mask_is_anticlique(adj, y)) return false;
  switch (w.kind) {
    case GraphClass::k1_like:
      return (x | y) == all && (x & y) != 0;
    case GraphClass::p4_like: {
      if ((x | y) != all || (x & y) != 0) return false;
      for (std::uint32_t rest = all & ~x; rest != 0; rest &= rest - 1) {
        if ((adj[std::countr_zero(rest)] & x) == x) return false;  // X extends
      }
      for (std::uint32_t rest = all & ~y; rest != 0; rest &= rest - 1) {
        if ((adj[std::countr_zero(rest)] & y) == 0) return false;  // Y extends
      }
      return true;
    }
    default: {
      const auto [p, q, r, s] = w.u;
      if (p >= n || q >= n || r >= n || s >= n) return false;
      const std::uint32_t u = (1U << p) | (1U << q) | (1U << r) | (1U << s);
      if (std::popcount(u) != 4) return false;
      auto edge = [&](Vertex a, Vertex b) { return ((adj[a] >> b) & 1U) != 0; };
      if (!edge(p, q) || !edge(q, r) || !edge(r, s) || !edge(p, s) || edge(p, r) || edge(q, s)) return false;
      if ((x | y | u) != all || (x & y) != 0 || ((x | y) & u) != 0) return false;
      for (std::uint32_t rest = x; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (!edge(v, p) || !edge(v, q) || std::popcount(adj[v] & u) < 3) return false;
      }
      for (std::uint32_t rest = y; rest != 0; rest &= rest - 1) {
        if ((adj[std::countr_zero(rest)] & u) != 0) return false;
      }
      return true;
    }
  }
}

/// Exact c, cbar, d, dbar, omega, alpha and every applicable label. n <= 16.
inline Classification classify(const UniformHypergraph& g) {
  detail::require_graph(g, kMaxClassifyOrder);
  const std::uint32_t n = g.order();
  const std::uint32_t all = (1U << n) - 1;
  const auto co = complement(g);
  const auto cliques = enumerate_maximal_cliques(g);
  const auto anti = enumerate_maximal_cliques(co, false);
  Classification out;
  out.n = n;
  out.c = cliques.count;
  out.cbar = anti.count;
  out.d = cliques.d();
  out.dbar = anti.d();
  out.tau = static_cast<std::int64_t>(out.c + out.cbar) - n;
  out.omega = cliques.largest;
  out.alpha = anti.largest;

  const auto adj = detail::adjacency(g);
  std::optional<ClassWitness> k1, p4;
  // Any split partition can be taken with X a maximal clique.
  for (const auto& q : cliques.cliques) {
    const std::uint32_t x = detail::to_mask(q);
    const std::uint32_t rest = all & ~x;
    if (!detail::mask_is_anticlique(adj, rest)) continue;
    out.split = true;
    for (std::uint32_t m = x; m != 0 && !k1; m &= m - 1) {
      const std::uint32_t y = rest | (m & -m);
      if (detail::mask_is_anticlique(adj, y)) {
        k1 = ClassWitness{GraphClass::k1_like, q, detail::from_mask(y), {}};
      }
    }
    if (!p4) {
      bool maximal = true;
      for (std::uint32_t m = x; m != 0; m &= m - 1) {
        if ((adj[std::countr_zero(m)] & rest) == 0) maximal = false;
      }
      if (maximal) p4 = ClassWitness{GraphClass::p4_like, q, detail::from_mask(rest), {}};
    }
  }
  if (k1) out.labels.push_back(*k1);
  if (p4) out.labels.push_back(*p4);
  std::uint32_t x = 0, y = 0;
  if (auto u = detail::find_c4_frame(adj, n, x, y)) {
    out.labels.push_back({GraphClass::c4_like, detail::from_mask(x), detail::from_mask(y), *u});
  }
  if (auto u = detail::find_c4_frame(detail::adjacency(co), n, x, y)) {
    out.labels.push_back({GraphClass::c4bar_like, detail::from_mask(x), detail::from_mask(y), *u});
  }
  return out;
}

inline std::int64_t tau(const UniformHypergraph& g) { return classify(g).tau; }

/// c + cbar >= n + d + dbar - 1 >= n + 1.
inline bool maximal_clique_sum_bound_holds(const Classification& k) {
  const auto lhs = k.c + k.cbar;
  const auto mid = std::uint64_t{k.n} + k.d + k.dbar - 1;
  return lhs >= mid && mid >= std::uint64_t{k.n} + 1;
}

inline bool maximal_clique_sum_bound_holds(const UniformHypergraph& g) {
  return maximal_clique_sum_bound_holds(classify(g));
}

// ---------------------------------------------------------------------------
// graph6

inline std::string to_graph6(const UniformHypergraph& g) {
  require(g.rank() == 2, ErrorKind::invalid_argument, "graph6 encodes graphs only");
  const std::uint32_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  const std::uint64_t bits = g.slot_count();
  for (std::uint64_t start = 0; start < bits; start += 6) {
    int chunk = 0;
    for (std::uint64_t i = start; i < start + 6; ++i) chunk = (chunk << 1) | (i < bits && g.has_edge(i) ? 1 : 0);
    out.push_back(static_cast<char>(chunk + 63));
  }
  return out;
}

inline UniformHypergraph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  require(!text.empty(), ErrorKind::parse_error, "empty graph6 string");
  for (char ch : text) {
    require(ch >= 63 && ch <= 126, ErrorKind::parse_error, "graph6 character out of range");
  }
  std::size_t pos = 0;
  std::uint32_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::uint32_t>(text[0] - 63);
    pos = 1;
  } else {
    require(text.size() >= 4 && text[1] != '~', ErrorKind::parse_error, "unsupported graph6 size header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint32_t>(text[i] - 63);
    pos = 4;
  }
  require(n >= 1, ErrorKind::parse_error, "graph6 graph has no vertices");
  require(n <= kMaxVertices, ErrorKind::size_limit, "graph6 graph too large");
  UniformHypergraph g(n, 2);
  const std::uint64_t bits = g.slot_count();
  require(text.size() - pos == (bits + 5) / 6, ErrorKind::parse_error, "graph6 length does not match its order");
  for (std::uint64_t i = 0; i < bits; ++i) {
    const int chunk = text[pos + i / 6] - 63;
    if ((chunk >> (5 - i % 6)) & 1) g.set_edge(i);
  }
  for (std::uint64_t i = bits; i < (bits + 5) / 6 * 6; ++i) {
    require(((text[pos + i / 6] - 63) >> (5 - i % 6) & 1) == 0, ErrorKind::parse_error, "graph6 padding bits set");
  }
  return g;
}

/// One graph per non-empty line; errors name the line.
inline std::vector<UniformHypergraph> read_graph6_corpus(std::istream& in) {
  std::vector<UniformHypergraph> out;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(from_graph6(line));
    } catch (const Error& e) {
      fail(e.kind(), "line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration up to isomorphism

namespace detail {

// Pair (a, b), a < b, sits at bit C(b, 2) + a, so fixing the vertices placed
// at positions 0..k fixes the next k bits of the relabeled string.
struct CanonicalSearch {
  const Adjacency& adj;
  std::uint32_t n;
  std::uint32_t total_bits;
  std::uint64_t best = UINT64_MAX;
  std::array<Vertex, kMaxEnumerateOrder> placed{};

  void run(std::uint32_t k, std::uint32_t used, std::uint64_t value) {
    if (k == n) {
      best = std::min(best, value);
      return;
    }
    const std::uint32_t done = k * (k + 1) / 2;  // bits fixed after placing position k
    for (Vertex v = 0; v < n; ++v) {
      if ((used >> v) & 1U) continue;
      std::uint64_t next = value;
      for (std::uint32_t i = 0; i < k; ++i) {
        if ((adj[v] >> placed[i]) & 1U) next |= std::uint64_t{1} << (total_bits - 1 - (k * (k - 1) / 2 + i));
      }
      if (best != UINT64_MAX && (next >> (total_bits - done)) > (best >> (total_bits - done))) continue;
      placed[k] = v;
      run(k + 1, used | (1U << v), next);
    }
  }
};

}  // namespace detail

/// Minimum edge bit string over all relabelings, most significant bit = pair (0,1).
inline std::uint64_t canonical_code(const UniformHypergraph& g) {
  detail::require_graph(g, kMaxEnumerateOrder);
  const auto adj = detail::adjacency(g);
  const auto bits = static_cast<std::uint32_t>(g.slot_count());
  if (bits == 0) return 0;
  detail::CanonicalSearch s{adj, g.order(), bits};
  s.run(0, 0, 0);
  return s.best;
}

inline UniformHypergraph graph_from_code(std::uint32_t n, std::uint64_t code) {
  UniformHypergraph g(n, 2);
  const std::uint64_t bits = g.slot_count();
  for (std::uint64_t i = 0; i < bits; ++i) {
    if ((code >> (bits - 1 - i)) & 1U) g.set_edge(i);
  }
  return g;
}

/// One graph per isomorphism class, each in canonical labeling, sorted by code.
/// Built by adding a vertex in every way to each class of order n-1.
inline std::vector<UniformHypergraph> enumerate_graphs(std::uint32_t n) {
  require(n >= 1, ErrorKind::invalid_argument, "order must be positive");
  require(n <= kMaxEnumerateOrder, ErrorKind::size_limit,
          "enumeration supports n <= " + std::to_string(kMaxEnumerateOrder) + "; use a graph6 corpus");
  std::vector<std::uint64_t> level{0};
  for (std::uint32_t m = 2; m <= n; ++m) {
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t code : level) {
      for (std::uint32_t nbr = 0; nbr < (1U << (m - 1)); ++nbr) {
        // Old bits keep their order; the new vertex's pairs follow them.
        const std::uint64_t grown = (code << (m - 1)) | nbr;
        seen.insert(canonical_code(graph_from_code(m, grown)));
      }
    }
    level.assign(seen.begin(), seen.end());
    std::sort(level.begin(), level.end());
  }
  std::vector<UniformHypergraph> out;
  out.reserve(level.size());
  for (std::uint64_t code : level) out.push_back(graph_from_code(n, code));
  return out;
}

// ---------------------------------------------------------------------------
// Corpus verification

struct Violation {
  std::string graph6;
  std::string check;
};

struct CorpusReport {
  std::uint64_t total = 0;
  std::map<std::string, std::uint64_t> per_class;  // label counts, plus "None", "split", "tau=1", "tau=2"
  std::vector<Violation> violations;                 // sorted by (graph6, check)

  bool ok() const { return violations.empty(); }
};

inline nlohmann::json to_json(const CorpusReport& r) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : r.violations) v.push_back({{"graph6", x.graph6}, {"check", x.check}});
  return {{"total", r.total}, {"perClass", r.per_class}, {"violations", v}};
}

namespace detail {

inline Classification classify_induced(const UniformHypergraph& g, std::uint32_t mask) {
  VertexSet s = from_mask(mask);
  return classify(induced(g, s));
}

/// Names of every characterization predicate the graph fails.
inline std::vector<std::string> characterization_failures(const UniformHypergraph& g, const Classification& k) {
  std::vector<std::string> bad;
  auto expect = [&bad](bool ok, const char* name) {
    if (!ok) bad.emplace_back(name);
  };
  const std::int64_t n = k.n;
  const std::int64_t wa = std::int64_t{k.omega} + k.alpha;
  const bool k1 = k.has(GraphClass::k1_like);
  const bool p4 = k.has(GraphClass::p4_like);
  const bool c4 = k.has(GraphClass::c4_like);
  const bool c4bar = k.has(GraphClass::c4bar_like);
  const bool tau2_class = p4 || c4 || c4bar;

  expect(maximal_clique_sum_bound_holds(k), "clique-sum-inequality");
  expect(k.tau >= 1, "tau-positive");
  expect((k.tau == 1) == k1, "tau1-iff-k1-like");
  expect((k.tau == 2) == (tau2_class && !k1), "tau2-iff-p4-c4-c4bar-like");
  expect(k1 == (wa == n + 1), "k1-like-iff-omega-alpha");
  expect(wa > n || k.tau >= 2, "omega-alpha-at-most-n-gives-tau-2");
  expect(wa >= n || k.tau >= 3, "omega-alpha-below-n-gives-tau-3");
  if (k.split) {
    const bool a = wa == n + 1 && k1 && k.tau == 1;
    const bool b = wa == n && p4 && k.tau == 2;
    expect(a != b, "split-dichotomy");
  }
  if (tau2_class) expect(k.tau == 2 && wa == n, "tau2-class-omega-alpha");
  if (k.tau <= 2 && wa >= n) expect(c4 || c4bar || k.split, "small-tau-is-c4-c4bar-or-split");
  if (k.tau <= 2) expect(wa >= n, "small-tau-omega-alpha");
  for (const auto& w : k.labels) expect(certifies(g, w), "witness-certifies");

  const auto adj = adjacency(g);
  const std::uint32_t all = (1U << k.n) - 1;
  for (Vertex v = 0; v < k.n; ++v) {
    const std::uint32_t rest = all & ~adj[v] & ~(1U << v);
    if (rest == 0 || !mask_is_clique(adj, adj[v])) continue;
    if (classify_induced(g, rest).tau > k.tau) {
      bad.emplace_back("clique-neighborhood-restriction");
      break;
    }
  }
  return bad;
}

}  // namespace detail

/// Checks every characterization predicate on each graph. Work is split
/// across threads; the merged report does not depend on the split.
inline CorpusReport verify_characterization(const std::vector<UniformHypergraph>& corpus, std::uint32_t threads = 0) {
  for (const auto& g : corpus) detail::require_graph(g, kMaxClassifyOrder);
  struct Partial {
    std::map<std::string, std::uint64_t> counts;
    std::vector<Violation> violations;
  };
  const std::uint32_t workers = std::max<std::uint32_t>(
      1, std::min<std::uint32_t>(resolve_threads(threads), static_cast<std::uint32_t>(corpus.size())));
  std::vector<Partial> parts(workers);
  auto work = [&](std::uint32_t w) {
    for (std::size_t i = w; i < corpus.size(); i += workers) {
      const auto& g = corpus[i];
      const auto k = classify(g);
      auto& counts = parts[w].counts;
      for (const auto& label : k.labels) ++counts[to_string(label.kind)];
      if (k.labels.empty()) ++counts["None"];
      if (k.split) ++counts["split"];
      if (k.tau <= 2) ++counts["tau=" + std::to_string(k.tau)];
      for (auto& name : detail::characterization_failures(g, k)) {
        parts[w].violations.push_back({to_graph6(g), std::move(name)});
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::uint32_t w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& th : pool) th.join();

  CorpusReport report;
  report.total = corpus.size();
  for (const char* key : {"K1Like", "P4Like", "C4Like", "C4BarLike", "None", "split", "tau=1", "tau=2"}) {
    report.per_class[key] = 0;
  }
  for (auto& p : parts) {
    for (const auto& [key, count] : p.counts) report.per_class[key] += count;
    for (auto& v : p.violations) report.violations.push_back(std::move(v));
  }
  std::sort(report.violations.begin(), report.violations.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.graph6, a.check) < std::tie(b.graph6, b.check);
  });
  return report;
}

inline nlohmann::json to_json(const ClassWitness& w) {
  nlohmann::json j{{"kind", to_string(w.kind)}, {"X", w.x.members()}, {"Y", w.y.members()}};
  if (w.kind == GraphClass::c4_like || w.kind == GraphClass::c4bar_like) j["U"] = w.u;
  return j;
}

inline nlohmann::json to_json(const Classification& k) {
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& w : k.labels) labels.push_back(to_json(w));
  return {{"n", k.n},         {"c", k.c},         {"cbar", k.cbar}, {"d", k.d},         {"dbar", k.dbar},
          {"tau", k.tau},     {"omega", k.omega}, {"alpha", k.alpha}, {"split", k.split}, {"labels", labels}};
}

}  // namespace hfw
