#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "tds/families.hpp"
#include "tds/graph_io.hpp"
#include "tds/solver.hpp"

using namespace tds;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run call(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, ComputePathFive) {
  const auto r = call({"compute", "--family", "path:5", "--all"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["invariants"]["gamma_grt"]["value"], 4);
  EXPECT_EQ(j["graph"]["order"], 5);
  for (const char* key : {"gamma_t", "Gamma_t", "gamma_tg", "gamma_gr", "nu_s", "nu_ss"}) {
    EXPECT_TRUE(j["invariants"].contains(key)) << key;
  }
}

TEST(Cli, ComputeSchemaStable) {
  auto strip = [](nlohmann::json j) {
    for (auto& [key, entry] : j["invariants"].items()) entry.erase("micros");
    return j;
  };
  const auto a = call({"compute", "--family", "petersen", "--invariant", "grt", "--invariant", "gt"});
  const auto b = call({"compute", "--family", "petersen", "--invariant", "grt", "--invariant", "gt"});
  EXPECT_EQ(strip(nlohmann::json::parse(a.out)), strip(nlohmann::json::parse(b.out)));
}

TEST(Cli, ComputePlainAndStdin) {
  const auto r = call({"compute", "--graph", "-", "--invariant", "grt", "--plain"}, "Bw\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("gamma_grt = 2"), std::string::npos);
  const auto e = call({"compute", "--graph", "-", "--format", "edges", "--invariant", "grt", "--plain"},
                      "n 4\n0 1\n1 2\n2 3\n");
  EXPECT_NE(e.out.find("gamma_grt = 4"), std::string::npos);
}

TEST(Cli, VerifyIncidence) {
  const auto path = temp_file("tds_cli_h.txt", "2 3\n0\n1\n0 1\n");
  const auto r = call({"verify", "thm8.3", "--hypergraph", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("gamma_grt(incidence) = 4, 2 rho_gr = 4"), std::string::npos);
}

TEST(Cli, VerifyEveryCheck) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"thm4.2", "path:6"},   {"thm4.4", "complete_multipartite:2,2,3"},
      {"thm5.1", "path:8"},   {"thm5.4", "path:11"},
      {"thm6.2", "petersen"}, {"thm7.2", "spider:3"},
      {"prop8.2", "cycle:5"}, {"thm8.3", "path:4"},
      {"cor8.1", "cycle:7"},  {"thm3.2", "family_Gm:4"},
      {"bounds", "subset_bipartite_gk:2"}};
  for (const auto& [check, family] : cases) {
    const auto r = call({"verify", check, "--family", family, "--json"});
    EXPECT_EQ(r.code, 0) << check << " " << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["check"], check);
    EXPECT_TRUE(j["holds"].get<bool>());
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, cli::kUsage);
  EXPECT_EQ(call({"compute", "--family", "nosuch:3"}).code, cli::kUsage);
  EXPECT_EQ(call({"compute", "--invariant", "zz", "--family", "path:3"}).code, cli::kUsage);
  EXPECT_EQ(call({"verify", "thm9.9", "--family", "path:3"}).code, cli::kUsage);
  EXPECT_EQ(call({"verify", "thm6.2", "--family", "kk:3"}).code, cli::kUsage);
  EXPECT_EQ(call({"verify", "thm5.1", "--family", "cycle:4"}).code, cli::kUsage);
  EXPECT_EQ(call({"compute", "--graph", "-"}, "B!\n").code, cli::kUsage);
  const auto cap = call({"compute", "--family", "path:30", "--invariant", "grt", "--cap", "20"});
  EXPECT_EQ(cap.code, cli::kCapacity);
  EXPECT_NE(cap.err.find("1048576 bytes"), std::string::npos);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, GenerateFamilyT) {
  const auto r = call({"generate", "familyT", "--n", "8", "--limit", "5"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    ++count;
    const auto g = parse_graph6(line.substr(0, line.find(' ')));
    EXPECT_EQ(g.order(), 8);
    EXPECT_TRUE(is_tree(g));
    EXPECT_NE(line.find("seed"), std::string::npos);
  }
  EXPECT_EQ(count, 1);
  EXPECT_NE(call({"generate", "familyT", "--n", "7"}).out.find("2 mod 3"), std::string::npos);
}

TEST(Cli, GenerateSources) {
  const auto r = call({"generate", "cubic", "--n", "8"});
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
  const auto p = call({"generate", "--family", "cycle:5", "--to", "edges"});
  EXPECT_EQ(parse_edge_list(p.out), cycle_graph(5));
  const auto a = call({"generate", "random", "--n", "7", "--limit", "3", "--seed", "9"});
  const auto b = call({"generate", "random", "--n", "7", "--limit", "3", "--seed", "9"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SweepSources) {
  EXPECT_EQ(call({"sweep", "connected:2-6"}).code, 0);
  EXPECT_EQ(call({"sweep", "trees:9"}).code, 0);
  EXPECT_EQ(call({"sweep", "hyper:50", "--seed", "4"}).code, 0);
  const auto piped = call({"sweep", "g6"}, "Bw\nCr\n");
  EXPECT_EQ(piped.code, 0);
  EXPECT_NE(piped.out.find("checked 2"), std::string::npos);
  const auto j = nlohmann::json::parse(call({"sweep", "cubic:4-8", "--json"}).out);
  EXPECT_EQ(j["checked"], 8);
  EXPECT_EQ(j["failed"], 0);
}

TEST(Cli, CounterexampleDumpsReparseAndRefail) {
  // A deliberately false claim: every graph has gamma_grt < 4.
  const cli::GraphChecker claim = [](const Graph& g) {
    std::vector<cli::Failure> f;
    if (grundy_total_domination(g).value >= 4) f.push_back({"gamma_grt < 4", "false claim"});
    return f;
  };
  const std::vector<Graph> graphs{path_graph(3), path_graph(4), cycle_graph(6), complete_graph(4)};
  std::ostringstream dump;
  const auto s = cli::run_sweep(graphs, claim, dump);
  EXPECT_EQ(s.failed, 2);
  std::istringstream lines(dump.str());
  std::string line;
  std::vector<Graph> reparsed;
  while (std::getline(lines, line)) {
    std::istringstream words(line);
    std::string tag;
    std::string g6;
    words >> tag >> g6;
    EXPECT_EQ(tag, "counterexample");
    reparsed.push_back(parse_graph6(g6));
  }
  ASSERT_EQ(reparsed.size(), 2u);
  std::ostringstream again;
  EXPECT_EQ(cli::run_sweep(reparsed, claim, again).failed, 2);
  EXPECT_EQ(again.str(), dump.str());
}

TEST(Cli, Convert) {
  const auto r = call({"convert", "--family", "path:3", "--to", "edges"});
  EXPECT_EQ(r.out, "n 3\n0 1\n1 2\n");
  const auto h = call({"convert", "--family", "cycle:4", "--to", "hyper"});
  EXPECT_EQ(h.out, "4 4\n1 3\n0 2\n1 3\n0 2\n");
  const auto path = temp_file("tds_cli_h2.txt", "2 1\n0 1\n");
  const auto inc = call({"convert", "--hypergraph", path, "--to", "g6"});
  EXPECT_EQ(parse_graph6(inc.out.substr(0, inc.out.size() - 1)).order(), 3);
}
