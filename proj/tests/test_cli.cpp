#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

using nlohmann::json;

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + HFW_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

TEST(Cli, ConstructAffinePlane) {
  const auto r = run("construct --family affine-plane --q 4");
  ASSERT_EQ(r.status, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["coloring"]["n"], 16);
  EXPECT_EQ(j["coloring"]["t"], 5);
  EXPECT_EQ(j["total"], 20);
}

TEST(Cli, ConstructThenScoreAgrees) {
  const std::vector<std::string> families{
      "affine-plane --q 3",      "plane-apex --q 3",         "plane-minus-two-lines --q 4",
      "turan --n 7 --t 3",       "witness --t 4 --n 20",     "bipartite-triples --n 9",
      "parity-triples --n 9",    "fano",                     "octahedron",
      "fano-tower --n 11",       "octahedron-tower --n 12"};
  for (const auto& f : families) {
    const auto path = temp_file("hfw_cli_construct.json");
    const auto made = run("construct --family " + f + " --out " + path.string());
    ASSERT_EQ(made.status, 0) << f;
    std::ifstream in(path);
    const auto constructed = json::parse(in);
    const auto scored = run("score --in " + path.string());
    ASSERT_EQ(scored.status, 0) << f;
    EXPECT_EQ(json::parse(scored.out)["total"], constructed["total"]) << f;
  }
}

TEST(Cli, TripleSystemTotals) {
  EXPECT_EQ(json::parse(run("construct --family fano").out)["total"], 14);
  EXPECT_EQ(json::parse(run("construct --family octahedron").out)["total"], 14);
  EXPECT_EQ(json::parse(run("construct --family fano-tower --n 11").out)["total"], 34);
  EXPECT_EQ(json::parse(run("construct --family octahedron-tower --n 11").out)["total"], 35);
}

TEST(Cli, BoundsPlateau) {
  const auto r = run("bounds --r 2 --t 5 --n 10..16");
  ASSERT_EQ(r.status, 0);
  const auto rows = json::parse(r.out)["rows"];
  ASSERT_EQ(rows.size(), 7U);
  for (const auto& row : rows) {
    EXPECT_TRUE(row["exact"].get<bool>());
    EXPECT_EQ(row["upper"], row["n"].get<int>() <= 12 ? 19 : 20);
  }
}

TEST(Cli, VerifyCharacterization) {
  const auto r = run("verify --suite characterization --max-n 6");
  ASSERT_EQ(r.status, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["total"], 1 + 2 + 4 + 11 + 34 + 156);
  EXPECT_TRUE(j["violations"].empty());
}

TEST(Cli, VerifyOtherSuites) {
  EXPECT_EQ(run("verify --suite constructions --max-n 16").status, 0);
  EXPECT_EQ(run("verify --suite witnesses --max-n 30").status, 0);
}

TEST(Cli, ClassifyCorpusFile) {
  const auto path = temp_file("hfw_cli_corpus.g6");
  std::ofstream(path) << "Cl\nCr\n@\n";
  const auto r = run("classify --in " + path.string());
  ASSERT_EQ(r.status, 0);
  const auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 3U);
  EXPECT_EQ(j[0]["tau"], 2);
  EXPECT_EQ(j[0]["labels"][0]["kind"], "C4Like");
  EXPECT_EQ(j[2]["labels"][0]["kind"], "K1Like");
  std::ofstream(path) << "Cl\nC\n";
  EXPECT_EQ(run("classify --in " + path.string()).status, 2);
}

TEST(Cli, SearchExitCodes) {
  const auto exact = run("search --r 2 --t 3 --n 5");
  ASSERT_EQ(exact.status, 0);
  EXPECT_EQ(json::parse(exact.out)["value"], 8);
  EXPECT_TRUE(json::parse(exact.out)["proved"].get<bool>());
  EXPECT_EQ(run("search --r 2 --t 3 --n 7 --max-nodes 500").status, 3);
  EXPECT_EQ(run("search --r 2 --t 3 --n 5 --claim 8").status, 0);
  EXPECT_EQ(run("search --r 2 --t 3 --n 5 --claim 7").status, 1);
  EXPECT_EQ(run("search --r 2 --t 3 --n 12").status, 2);  // too many edges for exact search
}

TEST(Cli, HeuristicSearchIsReproducible) {
  const std::string args = "search --mode heuristic --r 2 --t 4 --n 7 --seed 5 --moves 20000 --runs 3";
  const auto a = run(args, "HFW_THREADS=1");
  const auto b = run(args, "HFW_THREADS=3");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run(args).out, a.out);
}

TEST(Cli, PlaneRoundTripAndRejection) {
  const auto coloring = temp_file("hfw_cli_affine.json");
  ASSERT_EQ(run("construct --family affine-plane --q 3 --out " + coloring.string()).status, 0);
  const auto plane = run("plane --from-coloring " + coloring.string());
  ASSERT_EQ(plane.status, 0);
  EXPECT_EQ(json::parse(plane.out)["q"], 3);

  std::ifstream in(coloring);
  auto j = json::parse(in);
  auto& colors = j["coloring"]["colors"];
  colors[0] = (colors[0].get<int>() + 1) % 4;
  std::ofstream(coloring) << j.dump();
  EXPECT_EQ(run("plane --from-coloring " + coloring.string()).status, 1);

  const auto built = temp_file("hfw_cli_plane.json");
  ASSERT_EQ(run("plane --q 4 --out " + built.string()).status, 0);
  EXPECT_EQ(run("plane --check " + built.string()).status, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("construct --family nope").status, 2);
  EXPECT_EQ(run("construct --family affine-plane").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("bounds --t 3 --n 9..2").status, 2);
  EXPECT_EQ(run("construct --family affine-plane --q 6").status, 2);
  const auto bad = temp_file("hfw_cli_bad.json");
  std::ofstream(bad) << "{not json";
  EXPECT_EQ(run("score --in " + bad.string()).status, 2);
  EXPECT_EQ(run("score --in /nonexistent/file.json").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, TextFormat) {
  const auto r = run("--format text construct --family fano");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("total=14"), std::string::npos);
}

}  // namespace
