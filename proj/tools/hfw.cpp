// hfw: command-line front end.
//
//   hfw construct --family affine-plane --q 4
//   hfw score --in coloring.json
//   hfw bounds --r 2 --t 5 --n 10..16
//   hfw search --r 2 --t 3 --n 6 --mode exact
//   hfw classify --graph6 Cl
//   hfw verify --suite characterization --max-n 6
//   hfw plane --q 3
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 budget exhausted.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hfw/hfw.hpp"

namespace {

using hfw::Error;
using hfw::ErrorKind;
using nlohmann::json;

enum Exit { kOk = 0, kVerificationFailure = 1, kUsage = 2, kBudget = 3 };

struct Output {
  std::string format = "json";
  std::string path;

  bool text() const { return format == "text"; }

  void write(const json& j, const std::string& text_form) const {
    const std::string body = text() ? text_form : j.dump(2) + "\n";
    if (path.empty() || path == "-") {
      std::cout << body;
    } else {
      std::ofstream out(path);
      if (!out) throw Error(ErrorKind::invalid_argument, "cannot write " + path);
      out << body;
    }
  }
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse_error, what + ": " + e.what());
  }
}

json score_json(const hfw::EdgeColoring& c) {
  const auto s = hfw::score(c);
  return {{"n", c.order()}, {"r", c.rank()}, {"t", c.colors()}, {"perColor", s.per_color}, {"total", s.total}};
}

std::string score_text(const hfw::EdgeColoring& c) {
  const auto s = hfw::score(c);
  std::ostringstream out;
  out << "n=" << c.order() << " r=" << c.rank() << " t=" << c.colors() << " total=" << s.total << " per-color=";
  for (std::size_t i = 0; i < s.per_color.size(); ++i) out << (i ? "," : "") << s.per_color[i];
  out << "\n";
  return out.str();
}

/// A coloring, an object wrapping one under "coloring", or a hypergraph
/// (scored as the 2-coloring by edges and non-edges).
hfw::EdgeColoring coloring_from_any(const json& j) {
  if (j.is_object() && j.contains("coloring")) return hfw::coloring_from_json(j.at("coloring"));
  if (j.is_object() && j.contains("t")) return hfw::coloring_from_json(j);
  if (j.is_object() && j.contains("hypergraph")) return hfw::as_two_coloring(hfw::hypergraph_from_json(j.at("hypergraph")));
  if (j.is_object() && j.contains("edges")) return hfw::as_two_coloring(hfw::hypergraph_from_json(j));
  throw Error(ErrorKind::parse_error, "input is neither a coloring nor a hypergraph");
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw Error(ErrorKind::invalid_argument, "bad order range '" + text + "'");
    return static_cast<std::uint64_t>(v);
  };
  if (dots == std::string::npos) {
    const auto v = number(text);
    return {v, v};
  }
  const auto lo = number(text.substr(0, dots));
  const auto hi = number(text.substr(dots + 2));
  if (lo > hi) throw Error(ErrorKind::invalid_argument, "empty order range '" + text + "'");
  return {lo, hi};
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  std::uint32_t q = 0, n = 0, t = 0;
};

int run_construct(const ConstructArgs& a, const Output& out) {
  auto need = [&](std::uint32_t v, const char* flag) {
    if (v == 0) throw Error(ErrorKind::invalid_argument, std::string("family ") + a.family + " needs " + flag);
    return v;
  };
  json j{{"family", a.family}};
  std::optional<hfw::EdgeColoring> coloring;
  std::optional<hfw::UniformHypergraph> system;
  if (a.family == "affine-plane") {
    auto g = hfw::affine_plane_coloring(need(a.q, "--q"));
    j["apex"] = g.apex;
    coloring = std::move(g.coloring);
  } else if (a.family == "plane-apex") {
    auto g = hfw::plane_apex_coloring(need(a.q, "--q"));
    j["apex"] = g.apex;
    coloring = std::move(g.coloring);
  } else if (a.family == "plane-minus-two-lines") {
    coloring = hfw::plane_minus_two_lines_coloring(need(a.q, "--q"));
  } else if (a.family == "turan") {
    coloring = hfw::turan_factorization(need(a.n, "--n"), need(a.t, "--t"));
  } else if (a.family == "witness") {
    coloring = hfw::witness_upper(need(a.t, "--t"), need(a.n, "--n"));
  } else if (a.family == "bipartite-triples") {
    system = hfw::bipartite_triple_system(need(a.n, "--n"));
  } else if (a.family == "parity-triples") {
    system = hfw::parity_triple_system(need(a.n, "--n"));
  } else if (a.family == "fano") {
    system = hfw::fano();
  } else if (a.family == "octahedron") {
    system = hfw::octahedron_system();
  } else if (a.family == "fano-tower") {
    system = hfw::tower(hfw::fano(), std::max<std::uint32_t>(7, need(a.n, "--n"))).hypergraph;
  } else if (a.family == "octahedron-tower") {
    system = hfw::tower(hfw::complement(hfw::octahedron_system()), std::max<std::uint32_t>(6, need(a.n, "--n")))
                 .hypergraph;
  } else {
    throw Error(ErrorKind::invalid_argument, "unknown family '" + a.family + "'");
  }
  if (system) {
    const auto p = hfw::profile(*system);
    j["hypergraph"] = hfw::to_json(*system);
    j["c"] = p.c();
    j["cbar"] = p.cbar();
    j["d"] = p.d();
    j["dbar"] = p.dbar();
    coloring = hfw::as_two_coloring(*system);
  }
  const auto s = hfw::score(*coloring);
  j["coloring"] = hfw::to_json(*coloring);
  j["total"] = s.total;
  j["perColor"] = s.per_color;
  std::ostringstream text;
  text << a.family << ": " << score_text(*coloring);
  out.write(j, text.str());
  return kOk;
}

int run_score(const std::string& in, const Output& out) {
  const auto c = coloring_from_any(parse_json(read_input(in), "coloring input"));
  out.write(score_json(c), score_text(c));
  return kOk;
}

int run_bounds(std::uint32_t r, std::uint32_t t, const std::string& range, const Output& out) {
  const auto [lo, hi] = parse_range(range);
  if (lo == 0) throw Error(ErrorKind::invalid_argument, "orders start at 1");
  json rows = json::array();
  std::ostringstream text;
  text << "n\tlower\tupper\texact\tlower-source\tupper-source\n";
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const auto b = hfw::best_known(r, t, n);
    rows.push_back({{"n", n},
                    {"lower", b.lower},
                    {"upper", b.upper},
                    {"exact", b.exact},
                    {"lowerSource", b.lower_source},
                    {"upperSource", b.upper_source}});
    text << n << '\t' << b.lower << '\t' << b.upper << '\t' << (b.exact ? "yes" : "no") << '\t' << b.lower_source
         << '\t' << b.upper_source << '\n';
  }
  out.write({{"r", r}, {"t", t}, {"rows", rows}}, text.str());
  return kOk;
}

struct SearchArgs {
  std::uint32_t r = 2, t = 2, n = 1;
  std::string mode = "exact";
  std::uint64_t max_nodes = 0;
  double max_seconds = 0;
  bool no_symmetry = false;
  std::string checkpoint;
  bool resume = false;
  std::optional<std::uint64_t> claim;
  std::uint64_t seed = 0;
  std::uint64_t moves = 1000000;
  unsigned runs = 1;
  std::optional<std::uint64_t> target;
  std::string start;
};

json result_json(const hfw::SearchResult& res) {
  json j{{"mode", hfw::to_string(res.mode)}, {"proved", res.proved}, {"nodesExplored", res.nodes_explored}};
  j["value"] = res.value == UINT64_MAX ? json(nullptr) : json(res.value);
  j["witness"] = res.witness ? hfw::to_json(*res.witness) : json(nullptr);
  return j;
}

int run_search(const SearchArgs& a, unsigned threads, const Output& out) {
  json j{{"r", a.r}, {"t", a.t}, {"n", a.n}};
  std::ostringstream text;
  text << "f_" << a.r << "(" << a.t << "," << a.n << ") ";
  int status = kOk;
  if (a.mode == "exact") {
    hfw::ExactOptions o;
    o.max_nodes = a.max_nodes;
    o.max_seconds = a.max_seconds;
    o.vertex_symmetry = !a.no_symmetry;
    o.threads = threads;
    o.checkpoint_path = a.checkpoint;
    o.resume = a.resume;
    hfw::SearchResult res;
    if (a.claim) {
      const auto v = hfw::verify_value(a.r, a.t, a.n, *a.claim, o);
      res = v.result;
      j["claim"] = *a.claim;
      j["verdict"] = v.label();
      text << "claim " << *a.claim << ": " << v.label() << ' ';
      if (v.verdict == hfw::Verdict::proved_different) status = kVerificationFailure;
      if (v.verdict == hfw::Verdict::inconclusive) status = kBudget;
    } else {
      res = hfw::exact_f(a.r, a.t, a.n, o);
      if (!res.proved) status = kBudget;
    }
    j.update(result_json(res));
    text << (res.proved ? "= " : "<= ") << (res.value == UINT64_MAX ? std::string("?") : std::to_string(res.value))
         << " (" << res.nodes_explored << " nodes" << (res.proved ? ", proved" : ", budget exhausted") << ")\n";
  } else if (a.mode == "heuristic") {
    hfw::AnnealParams p;
    p.seed = a.seed;
    p.moves = a.moves;
    p.target = a.target;
    std::optional<hfw::EdgeColoring> start;
    if (!a.start.empty()) start = coloring_from_any(parse_json(read_input(a.start), "start coloring"));
    const auto res = hfw::heuristic_upper_multi(a.r, a.t, a.n, start, p, a.runs, threads);
    j.update(result_json(res));
    j["seed"] = a.seed;
    j["runs"] = a.runs;
    text << "<= " << res.value << " (annealing, seed " << a.seed << ", " << a.runs << " runs)\n";
  } else {
    throw Error(ErrorKind::invalid_argument, "mode must be exact or heuristic");
  }
  out.write(j, text.str());
  return status;
}

std::vector<hfw::UniformHypergraph> load_graphs(const std::vector<std::string>& graph6, const std::string& in) {
  std::vector<hfw::UniformHypergraph> graphs;
  for (const auto& g : graph6) graphs.push_back(hfw::from_graph6(g));
  if (!in.empty()) {
    std::istringstream corpus(read_input(in));
    for (auto& g : hfw::read_graph6_corpus(corpus)) graphs.push_back(std::move(g));
  }
  return graphs;
}

int run_classify(const std::vector<std::string>& graph6, const std::string& in, const Output& out) {
  const auto graphs = load_graphs(graph6, in);
  if (graphs.empty()) throw Error(ErrorKind::invalid_argument, "give --graph6 or --in");
  json rows = json::array();
  std::ostringstream text;
  for (const auto& g : graphs) {
    const auto k = hfw::classify(g);
    json row = hfw::to_json(k);
    row["graph6"] = hfw::to_graph6(g);
    row["cliqueSumBound"] = hfw::maximal_clique_sum_bound_holds(k);
    rows.push_back(row);
    text << hfw::to_graph6(g) << ": n=" << k.n << " c=" << k.c << " cbar=" << k.cbar << " tau=" << k.tau
         << " omega=" << k.omega << " alpha=" << k.alpha << " labels=";
    if (k.labels.empty()) text << "none";
    for (std::size_t i = 0; i < k.labels.size(); ++i) text << (i ? "," : "") << hfw::to_string(k.labels[i].kind);
    text << "\n";
  }
  out.write(rows, text.str());
  return kOk;
}

int verify_characterization_suite(std::uint32_t max_n, const std::string& in, unsigned threads, const Output& out) {
  std::vector<hfw::UniformHypergraph> corpus;
  if (!in.empty()) {
    corpus = load_graphs({}, in);
  } else {
    for (std::uint32_t n = 1; n <= max_n; ++n) {
      for (auto& g : hfw::enumerate_graphs(n)) corpus.push_back(std::move(g));
    }
  }
  const auto report = hfw::verify_characterization(corpus, threads);
  std::ostringstream text;
  text << "graphs: " << report.total << "\n";
  for (const auto& [key, count] : report.per_class) text << "  " << key << ": " << count << "\n";
  text << "violations: " << report.violations.size() << "\n";
  for (const auto& v : report.violations) text << "  " << v.graph6 << " " << v.check << "\n";
  out.write(hfw::to_json(report), text.str());
  return report.ok() ? kOk : kVerificationFailure;
}

int verify_witness_suite(std::uint32_t max_n, const Output& out) {
  json failures = json::array();
  std::uint64_t checked = 0;
  for (std::uint32_t t = 3; t <= 5; ++t) {
    for (std::uint32_t n = 1; n <= max_n; ++n) {
      ++checked;
      try {
        const auto total = hfw::score(hfw::witness_upper(t, n)).total;
        if (total > hfw::recursive_upper_bound(t, n)) failures.push_back({{"t", t}, {"n", n}, {"total", total}});
      } catch (const Error& e) {
        failures.push_back({{"t", t}, {"n", n}, {"error", e.what()}});
      }
    }
  }
  std::ostringstream text;
  text << "witnesses checked: " << checked << ", failures: " << failures.size() << "\n";
  for (const auto& f : failures) text << "  " << f.dump() << "\n";
  out.write({{"total", checked}, {"failures", failures}}, text.str());
  return failures.empty() ? kOk : kVerificationFailure;
}

int verify_construction_suite(std::uint32_t max_n, const Output& out) {
  json failures = json::array();
  std::uint64_t checked = 0;
  auto expect = [&](const char* family, std::uint64_t n, std::uint64_t got, std::uint64_t want) {
    ++checked;
    if (got != want) failures.push_back({{"family", family}, {"n", n}, {"got", got}, {"want", want}});
  };
  for (std::uint32_t n = 2; n <= max_n; ++n) {
    const std::uint64_t half = std::uint64_t{n + 1} * (n + 1) / 4;
    expect("bipartite-triples", n, hfw::profile(hfw::bipartite_triple_system(n)).sum(), half);
    expect("parity-triples", n, hfw::profile(hfw::parity_triple_system(n)).sum(), half);
  }
  if (max_n >= 7) {
    const auto steps = hfw::tower(hfw::fano(), max_n).steps;
    for (const auto& s : steps) {
      expect("fano-tower", s.order, s.c + s.cbar, std::uint64_t{s.order + 1} * (s.order + 1) / 4 - 2);
    }
  }
  if (max_n >= 6) {
    const auto steps = hfw::tower(hfw::complement(hfw::octahedron_system()), max_n).steps;
    for (const auto& s : steps) expect("octahedron-tower", s.order, s.c + s.cbar, std::uint64_t{s.order} * s.order / 4 + 5);
  }
  std::ostringstream text;
  text << "identities checked: " << checked << ", failures: " << failures.size() << "\n";
  for (const auto& f : failures) text << "  " << f.dump() << "\n";
  out.write({{"total", checked}, {"failures", failures}}, text.str());
  return failures.empty() ? kOk : kVerificationFailure;
}

struct PlaneArgs {
  std::uint32_t q = 0;
  std::string from_coloring;
  std::string check;
};

int run_plane(const PlaneArgs& a, const Output& out) {
  const int modes = (a.q != 0) + !a.from_coloring.empty() + !a.check.empty();
  if (modes != 1) throw Error(ErrorKind::invalid_argument, "give exactly one of --q, --from-coloring, --check");
  if (!a.check.empty()) {
    const auto plane = hfw::plane_from_json(parse_json(read_input(a.check), "plane input"));
    const auto c = hfw::check_plane_axioms(plane);
    out.write({{"q", plane.q}, {"ok", c.ok}, {"failure", c.failure}},
              c.ok ? "plane of order " + std::to_string(plane.q) + ": ok\n" : "not a plane: " + c.failure + "\n");
    return c.ok ? kOk : kVerificationFailure;
  }
  hfw::ProjectivePlane plane;
  if (a.q != 0) {
    plane = hfw::projective_plane(a.q);
  } else {
    try {
      plane = hfw::plane_from_coloring(coloring_from_any(parse_json(read_input(a.from_coloring), "coloring input")));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::not_a_plane_witness) throw;
      out.write({{"ok", false}, {"failure", e.what()}}, std::string(e.what()) + "\n");
      return kVerificationFailure;
    }
  }
  const auto c = hfw::check_plane_axioms(plane);
  std::ostringstream text;
  text << "plane of order " << plane.q << ": " << plane.point_count << " points, " << plane.lines.size() << " lines, "
       << (c.ok ? "axioms hold" : "FAILED: " + c.failure) << "\n";
  out.write(hfw::to_json(plane), text.str());
  return c.ok ? kOk : kVerificationFailure;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::not_a_plane_witness:
    case ErrorKind::construction_invariant_violated:
      return kVerificationFailure;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal monochromatic cliques in edge-colored hypergraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  unsigned threads = 0;
  app.add_option("--format", out.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out.path, "output file (default stdout)");
  app.add_option("--threads", threads, "worker threads (default HFW_THREADS or all cores)");

  ConstructArgs construct;
  auto* c_cmd = app.add_subcommand("construct", "emit a named construction with its score");
  c_cmd->add_option("--family", construct.family,
                    "affine-plane, plane-apex, plane-minus-two-lines, turan, witness, bipartite-triples, "
                    "parity-triples, fano, octahedron, fano-tower, octahedron-tower")
      ->required();
  c_cmd->add_option("--q", construct.q, "plane order");
  c_cmd->add_option("--n", construct.n, "order");
  c_cmd->add_option("--t", construct.t, "colors");

  std::string score_in = "-";
  auto* s_cmd = app.add_subcommand("score", "score a coloring or hypergraph");
  s_cmd->add_option("--in", score_in, "JSON file, - for stdin");

  std::uint32_t b_r = 2, b_t = 2;
  std::string b_range;
  auto* b_cmd = app.add_subcommand("bounds", "best known bounds over a range of orders");
  b_cmd->add_option("--r", b_r, "edge size");
  b_cmd->add_option("--t", b_t, "colors")->required();
  b_cmd->add_option("--n", b_range, "order or range A..B")->required();

  SearchArgs search;
  auto* x_cmd = app.add_subcommand("search", "exact or heuristic search for the minimum score");
  x_cmd->add_option("--r", search.r, "edge size");
  x_cmd->add_option("--t", search.t, "colors")->required();
  x_cmd->add_option("--n", search.n, "order")->required();
  x_cmd->add_option("--mode", search.mode, "exact or heuristic")->check(CLI::IsMember({"exact", "heuristic"}));
  x_cmd->add_option("--max-nodes", search.max_nodes, "exact: node budget (0 = none)");
  x_cmd->add_option("--max-seconds", search.max_seconds, "exact: time budget (0 = none)");
  x_cmd->add_flag("--no-symmetry", search.no_symmetry, "exact: disable vertex symmetry pruning");
  x_cmd->add_option("--checkpoint", search.checkpoint, "exact: checkpoint file");
  x_cmd->add_flag("--resume", search.resume, "exact: resume from the checkpoint");
  x_cmd->add_option("--claim", search.claim, "exact: verify a claimed value");
  x_cmd->add_option("--seed", search.seed, "heuristic: seed");
  x_cmd->add_option("--moves", search.moves, "heuristic: moves per run");
  x_cmd->add_option("--runs", search.runs, "heuristic: independent runs (seeds seed..seed+runs-1)");
  x_cmd->add_option("--target", search.target, "heuristic: stop at this total");
  x_cmd->add_option("--start", search.start, "heuristic: starting coloring file");

  std::vector<std::string> graph6;
  std::string classify_in;
  auto* k_cmd = app.add_subcommand("classify", "classify graphs by tau and class label");
  k_cmd->add_option("--graph6", graph6, "graph in graph6 form (repeatable)");
  k_cmd->add_option("--in", classify_in, "graph6 corpus file, - for stdin");

  std::string suite;
  std::uint32_t max_n = 0;
  std::string verify_in;
  auto* v_cmd = app.add_subcommand("verify", "run a verification suite");
  v_cmd->add_option("--suite", suite, "characterization, witnesses or constructions")
      ->required()
      ->check(CLI::IsMember({"characterization", "witnesses", "constructions"}));
  v_cmd->add_option("--max-n", max_n, "largest order checked");
  v_cmd->add_option("--in", verify_in, "characterization: graph6 corpus instead of enumeration");

  PlaneArgs plane;
  auto* p_cmd = app.add_subcommand("plane", "build, extract or check a projective plane");
  p_cmd->add_option("--q", plane.q, "build the plane of this order");
  p_cmd->add_option("--from-coloring", plane.from_coloring, "extract a plane from a coloring file");
  p_cmd->add_option("--check", plane.check, "check the axioms of a plane file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*c_cmd) return run_construct(construct, out);
    if (*s_cmd) return run_score(score_in, out);
    if (*b_cmd) return run_bounds(b_r, b_t, b_range, out);
    if (*x_cmd) return run_search(search, threads, out);
    if (*k_cmd) return run_classify(graph6, classify_in, out);
    if (*v_cmd) {
      if (suite == "characterization") return verify_characterization_suite(max_n ? max_n : 7, verify_in, threads, out);
      if (suite == "witnesses") return verify_witness_suite(max_n ? max_n : 60, out);
      return verify_construction_suite(max_n ? max_n : 20, out);
    }
    if (*p_cmd) return run_plane(plane, out);
  } catch (const Error& e) {
    std::cerr << "hfw: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const json::exception& e) {
    std::cerr << "hfw: malformed JSON: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
