// Regenerates data/witnesses: base colorings for the 3-, 4- and 5-color
// recursions, plus a few exact values settled by exhaustive search.
//
//   build_witness_store [--out DIR] [--seed N]

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hfw/bounds.hpp"
#include "hfw/constructions.hpp"
#include "hfw/search.hpp"
#include "hfw/witness.hpp"

namespace {

using namespace hfw;

struct Found {
  EdgeColoring coloring;
  std::uint64_t total;
  std::string source;
  bool proved;
};

// Best total each base has to reach: the recursion's bound, tightened where a
// better value is known and needed (the 5-color recursion uses n = 1, 2, 12).
std::uint64_t required(std::uint32_t t, std::uint32_t n) {
  std::uint64_t need = recursive_upper_bound(t, n);
  const auto matching = matching_lower_bound(t, n);
  if (matching.equality) need = std::min<std::uint64_t>(need, matching.value);
  if (t == 5 && n == 7) need = std::min<std::uint64_t>(need, 17);
  if (t == 5 && n == 8) need = std::min<std::uint64_t>(need, 18);
  if (t == 5 && n >= 10 && n <= 12) need = std::min<std::uint64_t>(need, 19);
  if (t == 5 && n >= 13 && n <= 15) need = std::min<std::uint64_t>(need, 20);
  return need;
}

void consider(std::optional<Found>& best, Found candidate) {
  if (!best || candidate.total < best->total || (candidate.total == best->total && candidate.proved && !best->proved)) {
    best = std::move(candidate);
  }
}

Found build_base(std::uint32_t t, std::uint32_t n, std::uint64_t seed) {
  std::optional<Found> best;
  if (n == 1) return {EdgeColoring(1, 2, t), t, "single-vertex", true};
  if (binom(n, 2) <= 15) {
    ExactOptions o;
    const auto res = exact_f(2, t, n, o);
    if (res.proved) consider(best, {*res.witness, res.value, "exhaustive-search", true});
  }
  const std::uint32_t q = t - 1;
  std::vector<std::pair<std::string, EdgeColoring>> gadgets;
  gadgets.emplace_back("restricted-plane-minus-line(q=" + std::to_string(q) + ")", affine_plane_coloring(q).coloring);
  gadgets.emplace_back("restricted-plane-minus-two-lines(q=" + std::to_string(q) + ")", plane_minus_two_lines_coloring(q));
  if (plane_constructible(t)) {
    gadgets.emplace_back("restricted-plane-apex(q=" + std::to_string(t) + ")", plane_apex_coloring(t).coloring);
  }
  for (const auto& [name, g] : gadgets) {
    if (g.order() < n) continue;
    const auto c = restrict_coloring(g, VertexSet::prefix(n));
    consider(best, {c, score(c).total, name, false});
  }
  const std::uint64_t need = required(t, n);
  if (!best || best->total > need) {
    AnnealParams p;
    p.seed = seed;
    p.moves = 400000;
    p.target = need;
    const auto res = heuristic_upper_multi(2, t, n, std::nullopt, p, 8, 1);
    consider(best, {*res.witness, res.value, "annealing(seed=" + std::to_string(seed) + ")", false});
  }
  return std::move(*best);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regenerate the witness store"};
  std::string out_dir = HFW_DEFAULT_WITNESS_DIR;
  std::uint64_t seed = 1;
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--seed", seed, "annealing seed");
  CLI11_PARSE(app, argc, argv);

  std::filesystem::create_directories(out_dir);
  nlohmann::json manifest{{"witnesses", nlohmann::json::array()}, {"exact_values", nlohmann::json::array()}};
  bool ok = true;
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> bases{{3, 3}, {4, 8}, {5, 15}};
  for (const auto& [t, last] : bases) {
    for (std::uint32_t n = 1; n <= last; ++n) {
      const Found f = build_base(t, n, seed);
      const std::uint64_t need = required(t, n);
      const std::string file = "t" + std::to_string(t) + "_n" + std::to_string(n) + ".json";
      std::ofstream(std::filesystem::path(out_dir) / file) << to_json(f.coloring).dump() << '\n';
      manifest["witnesses"].push_back(
          {{"t", t}, {"n", n}, {"total", f.total}, {"file", file}, {"source", f.source}, {"proved", f.proved}});
      std::printf("t=%u n=%2u total=%3llu need<=%3llu %s%s\n", t, n, static_cast<unsigned long long>(f.total),
                  static_cast<unsigned long long>(need), f.source.c_str(), f.total > need ? "  MISSED" : "");
      ok = ok && f.total <= need;
    }
  }

  struct Case {
    std::uint32_t r, t, lo, hi;
  };
  for (const Case c : {Case{2, 2, 1, 6}, Case{3, 2, 2, 6}, Case{2, 3, 1, 7}, Case{2, 4, 1, 6}, Case{2, 5, 1, 6}}) {
    for (std::uint32_t n = c.lo; n <= c.hi; ++n) {
      const auto res = exact_f(c.r, c.t, n);
      if (!res.proved) continue;
      manifest["exact_values"].push_back({{"r", c.r}, {"t", c.t}, {"n", n}, {"value", res.value}});
      std::printf("exact f_%u(%u,%u) = %llu\n", c.r, c.t, n, static_cast<unsigned long long>(res.value));
    }
  }
  std::ofstream(std::filesystem::path(out_dir) / "manifest.json") << manifest.dump(2) << '\n';
  return ok ? 0 : 1;
}
