#pragma once

// Exhaustive minimisation of the clique score over all t-colorings of K_n^r
// (small cases only), and simulated annealing for upper-bound witnesses.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "hfw/cliques.hpp"
#include "hfw/coloring.hpp"

namespace hfw {

enum class SearchMode { exact, heuristic };

inline std::string to_string(SearchMode mode) { return mode == SearchMode::exact ? "exact" : "heuristic"; }

struct SearchResult {
  SearchMode mode = SearchMode::exact;
  std::uint64_t value = UINT64_MAX;  // UINT64_MAX when no coloring was reached
  std::optional<EdgeColoring> witness;
  std::uint64_t nodes_explored = 0;
  bool proved = false;
};

/// Worker count: explicit value, else HFW_THREADS, else the hardware count.
inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HFW_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

struct ExactOptions {
  std::uint64_t max_nodes = 0;  // 0 = unlimited; deterministic cut-off
  double max_seconds = 0;       // 0 = unlimited; wall-clock, not deterministic
  bool vertex_symmetry = true;
  unsigned threads = 0;
  std::string checkpoint_path;  // empty = no checkpointing
  bool resume = false;
  double checkpoint_interval_seconds = 30;
};

namespace detail {

inline constexpr std::uint64_t kMaxSearchEdges = 64;

/// Problem data shared read-only by all workers.
struct ExactProblem {
  ExactProblem(std::uint32_t n_, std::uint32_t r_, std::uint32_t t_, bool symmetry)
      : n(n_), r(r_), t(t_) {
    check_shape(n, r);
    require(t >= 2 && t <= kMaxColors, ErrorKind::invalid_argument, "color count out of range");
    require(n <= 64, ErrorKind::size_limit, "exact search needs n <= 64");
    edge_count = static_cast<std::uint32_t>(binom(n, r));
    require(edge_count <= kMaxSearchEdges, ErrorKind::size_limit, "exact search supports at most 64 edges");
    for (std::uint32_t e = 0; e < edge_count; ++e) edges.push_back(colex_unrank(e, r));
    stabilizing.resize(edge_count + 1);
    if (!symmetry) return;
    // For each transposition (a b), its action on edge ranks; keep it at depth d
    // when it maps the first d edges onto themselves.
    for (Vertex b = 1; b < n; ++b) {
      for (Vertex a = 0; a < b; ++a) {
        std::vector<std::uint8_t> image(edge_count);
        std::vector<Vertex> moved(r);
        for (std::uint32_t e = 0; e < edge_count; ++e) {
          for (std::uint32_t i = 0; i < r; ++i) {
            const Vertex x = edges[e][i];
            moved[i] = x == a ? b : (x == b ? a : x);
          }
          std::sort(moved.begin(), moved.end());
          image[e] = static_cast<std::uint8_t>(colex_rank(moved));
        }
        std::uint32_t reach = 0;  // largest image among the first d edges
        for (std::uint32_t d = 1; d <= edge_count; ++d) {
          reach = std::max<std::uint32_t>(reach, image[d - 1]);
          if (reach < d) stabilizing[d].push_back(transpositions.size());
        }
        transpositions.push_back(std::move(image));
      }
    }
  }

  std::uint32_t n, r, t;
  std::uint32_t edge_count = 0;
  std::vector<std::vector<Vertex>> edges;
  std::vector<std::vector<std::uint8_t>> transpositions;  // edge-rank images
  std::vector<std::vector<std::size_t>> stabilizing;      // by prefix length
};

struct TaskOutcome {
  bool finished = false;  // subtree exhausted
  std::uint64_t nodes = 0;
  std::uint64_t best = UINT64_MAX;
  std::vector<std::uint8_t> best_colors;
};

/// Depth-first enumeration of color sequences in colex edge order. Colors are
/// introduced in order (a new color is at most one above the largest used),
/// and with vertex symmetry a prefix is cut when a transposition fixing the
/// prefix's edge set maps it to a lexicographically smaller normalised prefix.
class ExactWorker {
 public:
  ExactWorker(const ExactProblem& p, bool symmetry, std::uint64_t node_cap, const std::atomic<bool>* stop)
      : p_(p), symmetry_(symmetry), cap_(node_cap), stop_(stop), colors_(p.edge_count, 0) {
    for (Color c = 0; c < p.t; ++c) links_.emplace_back(p.n, p.r);
    counts_.assign(p.t, 0);
    dirty_.assign(p.t, 1);
  }

  /// Runs the subtree below `prefix`; prefix == all edges means a single leaf.
  TaskOutcome run(const std::vector<std::uint8_t>& prefix) {
    out_ = TaskOutcome{};
    aborted_ = false;
    int used = -1;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      assign(k, prefix[k]);
      used = std::max<int>(used, prefix[k]);
    }
    dfs(static_cast<std::uint32_t>(prefix.size()), used);
    for (std::size_t k = prefix.size(); k-- > 0;) unassign(k);
    out_.finished = !aborted_;
    return std::move(out_);
  }

  /// Prefixes of length `depth` that survive pruning, in search order.
  std::vector<std::vector<std::uint8_t>> prefixes(std::uint32_t depth) {
    std::vector<std::vector<std::uint8_t>> out;
    collect(0, -1, depth, out);
    return out;
  }

  /// True iff no stabilising transposition gives a smaller normalised prefix of length d.
  bool canonical(std::uint32_t d) const {
    if (!symmetry_) return true;
    std::array<int, 256> relabel;
    for (std::size_t id : p_.stabilizing[d]) {
      const auto& image = p_.transpositions[id];
      std::fill_n(relabel.begin(), p_.t, -1);
      int next = 0;
      for (std::uint32_t j = 0; j < d; ++j) {
        const std::uint8_t raw = colors_[image[j]];
        if (relabel[raw] < 0) relabel[raw] = next++;
        const int mapped = relabel[raw];
        if (mapped < colors_[j]) return false;
        if (mapped > colors_[j]) break;
      }
    }
    return true;
  }

 private:
  void assign(std::size_t k, std::uint8_t c) {
    colors_[k] = c;
    links_[c].add(p_.edges[k]);
    dirty_[c] = 1;
  }

  void unassign(std::size_t k) {
    const std::uint8_t c = colors_[k];
    links_[c].remove(p_.edges[k]);
    dirty_[c] = 1;
  }

  void collect(std::uint32_t k, int used, std::uint32_t depth, std::vector<std::vector<std::uint8_t>>& out) {
    if (k == depth) {
      out.emplace_back(colors_.begin(), colors_.begin() + k);
      return;
    }
    const int limit = std::min<int>(static_cast<int>(p_.t) - 1, used + 1);
    for (int c = 0; c <= limit; ++c) {
      colors_[k] = static_cast<std::uint8_t>(c);
      if (canonical(k + 1)) collect(k + 1, std::max(used, c), depth, out);
    }
  }

  void dfs(std::uint32_t k, int used) {
    if (++out_.nodes > cap_ || (stop_ != nullptr && (out_.nodes & 1023) == 0 && stop_->load())) {
      aborted_ = true;
      return;
    }
    if (k == p_.edge_count) {
      leaf();
      return;
    }
    const int limit = std::min<int>(static_cast<int>(p_.t) - 1, used + 1);
    for (int c = 0; c <= limit && !aborted_; ++c) {
      assign(k, static_cast<std::uint8_t>(c));
      if (canonical(k + 1)) dfs(k + 1, std::max(used, c));
      unassign(k);
    }
  }

  void leaf() {
    std::uint64_t total = 0;
    for (Color c = 0; c < p_.t; ++c) {
      if (dirty_[c]) {
        counts_[c] = count_maximal_cliques(links_[c]);
        dirty_[c] = 0;
      }
      total += counts_[c];
    }
    if (total < out_.best) {
      out_.best = total;
      out_.best_colors = colors_;
    }
  }

  const ExactProblem& p_;
  bool symmetry_;
  std::uint64_t cap_;
  const std::atomic<bool>* stop_;
  std::vector<std::uint8_t> colors_;
  std::vector<LinkTable<1>> links_;
  std::vector<std::uint64_t> counts_;
  std::vector<char> dirty_;
  TaskOutcome out_;
  bool aborted_ = false;
};

/// Split depth: deepen until there are enough tasks to spread, but stay in
/// the upper half of the tree. Depends only on the problem, not on threads.
inline std::uint32_t split_depth(ExactWorker& worker, std::uint32_t edge_count) {
  std::uint32_t depth = 0;
  while (depth < edge_count / 2 && worker.prefixes(depth).size() < 256) ++depth;
  return depth;
}

struct Checkpoint {
  std::uint32_t r = 0, t = 0, n = 0, prefix_depth = 0;
  bool vertex_symmetry = true;
  std::vector<std::uint64_t> completed;
  std::uint64_t best_value = UINT64_MAX;
  std::uint64_t best_task = UINT64_MAX;
  std::vector<std::uint8_t> best_colors;
  std::uint64_t nodes = 0;
};

inline nlohmann::json checkpoint_json(const Checkpoint& c) {
  nlohmann::json j{{"r", c.r},
                   {"t", c.t},
                   {"n", c.n},
                   {"prefixDepth", c.prefix_depth},
                   {"vertexSymmetry", c.vertex_symmetry},
                   {"completedPrefixes", c.completed},
                   {"nodesExplored", c.nodes}};
  if (c.best_value == UINT64_MAX) {
    j["bestValue"] = nullptr;
    j["bestWitness"] = nullptr;
  } else {
    j["bestValue"] = c.best_value;
    j["bestTask"] = c.best_task;
    j["bestWitness"] = to_json(EdgeColoring(c.n, c.r, c.t, c.best_colors));
  }
  return j;
}

inline Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::parse_error, "cannot open checkpoint " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse_error, std::string("checkpoint is not valid JSON: ") + e.what());
  }
  Checkpoint c;
  try {
    c.r = j.at("r").get<std::uint32_t>();
    c.t = j.at("t").get<std::uint32_t>();
    c.n = j.at("n").get<std::uint32_t>();
    c.prefix_depth = j.at("prefixDepth").get<std::uint32_t>();
    c.vertex_symmetry = j.value("vertexSymmetry", true);
    c.completed = j.at("completedPrefixes").get<std::vector<std::uint64_t>>();
    c.nodes = j.at("nodesExplored").get<std::uint64_t>();
    if (!j.at("bestValue").is_null()) {
      c.best_value = j.at("bestValue").get<std::uint64_t>();
      c.best_task = j.value("bestTask", std::uint64_t{0});
      const auto w = coloring_from_json(j.at("bestWitness"));
      c.best_colors = w.raw();
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse_error, std::string("malformed checkpoint: ") + e.what());
  }
  return c;
}

inline void write_checkpoint(const std::string& path, const Checkpoint& c) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << checkpoint_json(c).dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace detail

/// Minimum score over all t-colorings of K_n^r. `proved` is set only when
/// every subtree was exhausted within the budget. With a node budget the
/// result, witness and node count do not depend on the thread count.
inline SearchResult exact_f(std::uint32_t r, std::uint32_t t, std::uint32_t n, const ExactOptions& options = {}) {
  using Clock = std::chrono::steady_clock;
  const detail::ExactProblem problem(n, r, t, options.vertex_symmetry);
  const std::uint64_t cap = options.max_nodes == 0 ? UINT64_MAX : options.max_nodes;
  std::atomic<bool> stop{false};

  detail::ExactWorker planner(problem, options.vertex_symmetry, UINT64_MAX, nullptr);
  const std::uint32_t depth = detail::split_depth(planner, problem.edge_count);
  const auto tasks = planner.prefixes(depth);

  detail::Checkpoint base;
  base.r = r;
  base.t = t;
  base.n = n;
  base.prefix_depth = depth;
  base.vertex_symmetry = options.vertex_symmetry;
  std::vector<char> already(tasks.size(), 0);
  if (options.resume && !options.checkpoint_path.empty() && std::filesystem::exists(options.checkpoint_path)) {
    const auto saved = detail::read_checkpoint(options.checkpoint_path);
    require(saved.r == r && saved.t == t && saved.n == n && saved.prefix_depth == depth &&
                saved.vertex_symmetry == options.vertex_symmetry,
            ErrorKind::invalid_argument, "checkpoint was written for a different search");
    base = saved;
    for (auto idx : saved.completed) {
      require(idx < tasks.size(), ErrorKind::parse_error, "checkpoint task index out of range");
      already[idx] = 1;
    }
  }

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!already[i]) pending.push_back(i);
  }
  std::vector<std::optional<detail::TaskOutcome>> results(tasks.size());
  std::mutex mu;
  std::size_t next = 0;          // index into pending
  std::size_t settled = 0;       // pending[0..settled) finished and accounted
  std::uint64_t settled_nodes = 0;
  bool over_budget = false;
  detail::Checkpoint live = base;
  auto last_write = Clock::now();
  const auto start = Clock::now();

  auto update_live = [&](std::size_t idx) {
    const auto& res = *results[idx];
    if (!res.finished) return;
    live.completed.push_back(idx);
    live.nodes += res.nodes;
    if (res.best < live.best_value || (res.best == live.best_value && idx < live.best_task)) {
      live.best_value = res.best;
      live.best_task = idx;
      live.best_colors = res.best_colors;
    }
  };

  auto worker_loop = [&] {
    detail::ExactWorker worker(problem, options.vertex_symmetry, cap, &stop);
    while (true) {
      std::size_t idx;
      {
        std::lock_guard lock(mu);
        if (over_budget || stop.load() || next >= pending.size()) return;
        idx = pending[next++];
      }
      auto outcome = worker.run(tasks[idx]);
      std::lock_guard lock(mu);
      results[idx] = std::move(outcome);
      update_live(idx);
      while (settled < pending.size() && results[pending[settled]].has_value()) {
        const auto& res = *results[pending[settled]];
        settled_nodes += res.nodes;
        if (!res.finished || settled_nodes > cap) over_budget = true;
        ++settled;
      }
      if (!options.checkpoint_path.empty() &&
          std::chrono::duration<double>(Clock::now() - last_write).count() >= options.checkpoint_interval_seconds) {
        detail::write_checkpoint(options.checkpoint_path, live);
        last_write = Clock::now();
      }
    }
  };

  std::thread timer;
  std::atomic<bool> done{false};
  if (options.max_seconds > 0) {
    timer = std::thread([&] {
      while (!done.load()) {
        if (std::chrono::duration<double>(Clock::now() - start).count() >= options.max_seconds) {
          stop.store(true);
          return;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(20));
      }
    });
  }
  const unsigned threads = std::min<std::size_t>(resolve_threads(options.threads), std::max<std::size_t>(1, pending.size()));
  if (threads <= 1) {
    worker_loop();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker_loop);
    for (auto& th : pool) th.join();
  }
  done.store(true);
  if (timer.joinable()) timer.join();
  if (!options.checkpoint_path.empty()) detail::write_checkpoint(options.checkpoint_path, live);

  // Deterministic reduction: earlier checkpointed work, then pending tasks in
  // order while they finished and fit in the node budget.
  SearchResult out;
  out.mode = SearchMode::exact;
  std::uint64_t best = base.best_value, best_task = base.best_task;
  std::vector<std::uint8_t> best_colors = base.best_colors;
  std::uint64_t nodes = base.nodes, used = 0;
  bool complete = true;
  for (std::size_t idx : pending) {
    if (!results[idx].has_value() || !results[idx]->finished || used + results[idx]->nodes > cap) {
      complete = false;
      break;
    }
    const auto& res = *results[idx];
    used += res.nodes;
    if (res.best < best || (res.best == best && idx < best_task)) {
      best = res.best;
      best_task = idx;
      best_colors = res.best_colors;
    }
  }
  nodes += used;
  out.nodes_explored = nodes;
  out.proved = complete;
  out.value = best;
  if (best != UINT64_MAX) out.witness = EdgeColoring(n, r, t, best_colors);
  return out;
}

enum class Verdict { proved_equal, proved_different, inconclusive };

struct VerifyReport {
  Verdict verdict = Verdict::inconclusive;
  SearchResult result;

  std::string label() const {
    switch (verdict) {
      case Verdict::proved_equal:
        return "PROVED-EQUAL";
      case Verdict::proved_different:
        return "PROVED-DIFFERENT(" + std::to_string(result.value) + ")";
      case Verdict::inconclusive:
        break;
    }
    return "INCONCLUSIVE(budget)";
  }
};

inline VerifyReport verify_value(std::uint32_t r, std::uint32_t t, std::uint32_t n, std::uint64_t claimed,
                                 const ExactOptions& options = {}) {
  VerifyReport report;
  report.result = exact_f(r, t, n, options);
  if (report.result.proved) {
    report.verdict = report.result.value == claimed ? Verdict::proved_equal : Verdict::proved_different;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Annealing

struct AnnealParams {
  double start_temperature = 2.0;
  double cooling = 0.999;       // per move
  std::uint64_t moves = 1000000;
  std::uint64_t seed = 1;
  double reheat_below = 0.02;   // reset to the start temperature below this; 0 disables
  std::optional<std::uint64_t> target;  // stop once the best total is at most this
};

namespace detail {

/// Explicit mappings from the 64-bit engine, so runs repeat across standard libraries.
class AnnealRng {
 public:
  explicit AnnealRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace detail

/// Simulated annealing over single-edge recolorings, from `start` or a
/// uniformly random coloring. Never sets `proved`.
inline SearchResult heuristic_upper(std::uint32_t r, std::uint32_t t, std::uint32_t n,
                                    const std::optional<EdgeColoring>& start, const AnnealParams& params = {}) {
  check_shape(n, r);
  require(n <= 64, ErrorKind::size_limit, "annealing needs n <= 64");
  require(params.start_temperature > 0 && params.cooling > 0 && params.cooling <= 1, ErrorKind::invalid_argument,
          "annealing temperature schedule out of range");
  detail::AnnealRng rng(params.seed);
  EdgeColoring current(n, r, t);
  if (start) {
    require(start->order() == n && start->rank() == r && start->colors() == t, ErrorKind::invalid_argument,
            "start coloring has the wrong shape");
    current = *start;
  } else {
    for (std::uint64_t e = 0; e < current.edge_count(); ++e) current.set_color(e, static_cast<Color>(rng.below(t)));
  }
  std::vector<std::vector<Vertex>> edges;
  for (std::uint64_t e = 0; e < current.edge_count(); ++e) edges.push_back(colex_unrank(e, r));
  std::vector<LinkTable<1>> links;
  for (Color c = 0; c < t; ++c) links.emplace_back(n, r);
  for (std::uint64_t e = 0; e < edges.size(); ++e) links[current.color(e)].add(edges[e]);
  std::vector<std::uint64_t> counts(t);
  std::uint64_t total = 0;
  for (Color c = 0; c < t; ++c) total += counts[c] = count_maximal_cliques(links[c]);

  SearchResult out;
  out.mode = SearchMode::heuristic;
  out.value = total;
  out.witness = current;
  double temperature = params.start_temperature;
  const bool can_move = !edges.empty();
  for (std::uint64_t move = 0; move < params.moves && can_move; ++move) {
    if (params.target && out.value <= *params.target) break;
    ++out.nodes_explored;
    const std::uint64_t e = rng.below(edges.size());
    const Color from = current.color(e);
    Color to = static_cast<Color>(rng.below(t - 1));
    if (to >= from) ++to;
    links[from].remove(edges[e]);
    links[to].add(edges[e]);
    const std::uint64_t new_from = count_maximal_cliques(links[from]);
    const std::uint64_t new_to = count_maximal_cliques(links[to]);
    const std::uint64_t candidate = total - counts[from] - counts[to] + new_from + new_to;
    const double delta = static_cast<double>(candidate) - static_cast<double>(total);
    const double u = rng.unit();
    if (delta <= 0 || u < std::exp(-delta / temperature)) {
      current.set_color(e, to);
      counts[from] = new_from;
      counts[to] = new_to;
      total = candidate;
      if (total < out.value) {
        out.value = total;
        out.witness = current;
      }
    } else {
      links[to].remove(edges[e]);
      links[from].add(edges[e]);
    }
    temperature *= params.cooling;
    if (params.reheat_below > 0 && temperature < params.reheat_below) temperature = params.start_temperature;
  }
  return out;
}

/// Independent annealing runs with seeds seed, seed+1, ...; keeps the lowest
/// total, ties going to the smaller seed.
inline SearchResult heuristic_upper_multi(std::uint32_t r, std::uint32_t t, std::uint32_t n,
                                          const std::optional<EdgeColoring>& start, const AnnealParams& params,
                                          unsigned runs, unsigned threads = 0) {
  require(runs >= 1, ErrorKind::invalid_argument, "need at least one run");
  std::vector<std::optional<SearchResult>> results(runs);
  std::atomic<unsigned> next{0};
  auto loop = [&] {
    for (unsigned i = next++; i < runs; i = next++) {
      AnnealParams p = params;
      p.seed = params.seed + i;
      results[i] = heuristic_upper(r, t, n, start, p);
    }
  };
  const unsigned workers = std::min(resolve_threads(threads), runs);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(loop);
  loop();
  for (auto& th : pool) th.join();
  SearchResult best = std::move(*results[0]);
  std::uint64_t nodes = best.nodes_explored;
  for (unsigned i = 1; i < runs; ++i) {
    nodes += results[i]->nodes_explored;
    if (results[i]->value < best.value) best = std::move(*results[i]);
  }
  best.nodes_explored = nodes;
  return best;
}

}  // namespace hfw
