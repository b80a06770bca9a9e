#include <gtest/gtest.h>

#include <random>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tds/error.hpp"
#include "tds/families.hpp"
#include "tds/solver.hpp"

using namespace tds;

TEST(Grundy, PathsAndCycles) {
  for (int n = 2; n <= 12; ++n) {
    EXPECT_EQ(grundy_total_domination(path_graph(n)).value, n % 2 == 0 ? n : n - 1) << n;
  }
  for (int n = 3; n <= 12; ++n) {
    EXPECT_EQ(grundy_total_domination(cycle_graph(n)).value, n % 2 == 1 ? n - 1 : n - 2) << n;
  }
}

TEST(Grundy, NamedFixtures) {
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(grundy_total_domination(complete_graph(n)).value, 2);
    EXPECT_EQ(grundy_domination(complete_graph(n)).value, 1);
    EXPECT_EQ(grundy_total_domination(star_graph(n)).value, 2);
    EXPECT_EQ(grundy_domination(star_graph(n)).value, n);
  }
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(grundy_total_domination(complete_bipartite_graph(k)).value, 2);
  EXPECT_EQ(grundy_total_domination(subset_bipartite_graph(2)).value, 4);
  EXPECT_EQ(grundy_total_domination(subset_bipartite_graph(3)).value, 6);
  const Graph g4 = build({Family::family_gm, {4}});
  EXPECT_EQ(total_domination_number(g4).value, 4);
  EXPECT_EQ(grundy_total_domination(g4).value, 4);
  EXPECT_EQ(grundy_total_domination(build({Family::family_gm, {3, 2}})).value, 4);
  EXPECT_GE(grundy_total_domination(petersen_graph()).value, 5);
  EXPECT_EQ(grundy_total_domination(petersen_graph()).value, oracle::grundy_total(petersen_graph()));
}

TEST(Game, Spiders) {
  for (int k = 2; k <= 4; ++k) {
    const Graph s = spider_graph(k);
    const auto game = game_total_domination(s);
    EXPECT_EQ(game.value, 2);
    EXPECT_EQ(grundy_total_domination(s).value, s.order() - 1);
    EXPECT_TRUE(is_total_dominating_sequence(s, game.trace));
    EXPECT_EQ(static_cast<int>(game.trace.size()), game.value);
  }
}

TEST(Witnesses, AreValid) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = gen::graph_without_isolated(2 + static_cast<int>(rng() % 9), 0.35, rng);
    const auto grt = grundy_total_domination(g);
    EXPECT_TRUE(is_total_dominating_sequence(g, grt.witness));
    EXPECT_EQ(static_cast<int>(grt.witness.size()), grt.value);
    const auto gr = grundy_domination(g);
    EXPECT_TRUE(is_dominating_sequence(g, gr.witness));
    const auto a = oracle::adjacency(g);
    const auto gt = total_domination_number(g);
    EXPECT_TRUE(oracle::is_total_dominating_set(a, gt.witness.to_vector()));
    EXPECT_EQ(gt.witness.size(), gt.value);
    const auto upper = upper_total_domination(g);
    EXPECT_TRUE(oracle::is_total_dominating_set(a, upper.witness.to_vector()));
    EXPECT_TRUE(is_strong_matching(g, strong_matching_number(g).witness));
    EXPECT_TRUE(is_semistrong_matching(g, semistrong_matching_number(g).witness));
  }
}

TEST(Oracle, RandomGraphsAgree) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = gen::graph_without_isolated(2 + static_cast<int>(rng() % 7), 0.4, rng);
    EXPECT_EQ(grundy_total_domination(g).value, oracle::grundy_total(g));
    EXPECT_EQ(grundy_domination(g).value, oracle::grundy_closed(g));
    EXPECT_EQ(total_domination_number(g).value, oracle::total_domination(g));
    EXPECT_EQ(upper_total_domination(g).value, oracle::upper_total_domination(g));
    EXPECT_EQ(game_total_domination(g).value, oracle::game_total_domination(g));
    EXPECT_EQ(strong_matching_number(g).value, oracle::strong_matching(g));
    EXPECT_EQ(semistrong_matching_number(g).value, oracle::semistrong_matching(g));
  }
}

TEST(Interpolation, EveryLengthWitnessed) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = gen::connected_graph(2 + static_cast<int>(rng() % 7), 0.3, rng);
    const auto w = interpolation_witnesses(g);
    const auto lengths = oracle::total_sequence_lengths(g);
    EXPECT_EQ(static_cast<int>(w.size()), *lengths.rbegin() - *lengths.begin() + 1);
    for (const auto& [len, s] : w) {
      EXPECT_EQ(static_cast<int>(s.size()), len);
      EXPECT_TRUE(is_total_dominating_sequence(g, s));
    }
  }
}

TEST(Options, ParallelMatchesSequential) {
  std::mt19937_64 rng(4);
  SolverOptions par;
  par.parallel_first_move = true;
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = gen::connected_graph(4 + static_cast<int>(rng() % 8), 0.3, rng);
    EXPECT_EQ(grundy_total_domination(g, par).value, grundy_total_domination(g).value);
  }
}

TEST(Options, CapAndDomain) {
  SolverOptions small;
  small.cap = 5;
  EXPECT_THROW(grundy_total_domination(path_graph(6), small), CapacityError);
  const Graph isolated(3, std::vector<Edge>{Edge(0, 1)});
  EXPECT_THROW(grundy_total_domination(isolated), DomainError);
  EXPECT_THROW(total_domination_number(isolated), DomainError);
  EXPECT_THROW(grundy_domination(isolated), DomainError);
  SolverOptions allow;
  allow.allow_isolated = true;
  EXPECT_EQ(grundy_domination(isolated, allow).value, 2);
}

TEST(Report, SelectionAndKeys) {
  const auto r = compute_report(path_graph(5), {Invariant::gamma_grt, Invariant::nu_s});
  ASSERT_TRUE(r.gamma_grt.has_value());
  EXPECT_EQ(r.gamma_grt->value, 4);
  EXPECT_FALSE(r.gamma_t.has_value());
  EXPECT_EQ(r.micros.count("nu_s"), 1u);
  EXPECT_EQ(parse_invariant("Gt"), Invariant::upper_gamma_t);
  EXPECT_EQ(invariant_key(Invariant::upper_gamma_t), "Gamma_t");
  EXPECT_FALSE(parse_invariant("xx").has_value());
}
