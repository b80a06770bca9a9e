// Acceptance suite: one PASS/FAIL line per criterion, with the pinned
// tolerance (exact values, zero violations, runtime ceiling) it is held to.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tds/characterizations.hpp"
#include "tds/enumerate.hpp"
#include "tds/error.hpp"
#include "tds/families.hpp"
#include "tds/graph_io.hpp"
#include "tds/hypergraph.hpp"
#include "tds/solver.hpp"

using namespace tds;

namespace {

struct Outcome {
  long checked = 0;
  long violations = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (violations++ == 0) first = what;
  }
};

bool report(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  body(o);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = o.violations == 0 && secs < limit_seconds;
  std::printf("[%s] %d. %s: %ld checks, %ld violations, %.2f s (limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", id,
              title, o.checked, o.violations, secs, limit_seconds, o.first.empty() ? "" : "; first: ",
              o.first.c_str());
  std::fflush(stdout);
  return pass;
}

std::string name(const Graph& g) { return to_graph6(g); }

std::vector<Graph> connected_up_to(int n) {
  std::vector<Graph> out;
  for (int m = 2; m <= n; ++m) {
    auto level = connected_graphs(m);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Hypergraph> hypergraph_suite() {
  std::mt19937_64 rng(20240601);
  std::vector<Hypergraph> out;
  for (int i = 0; i < 200; ++i) out.push_back(gen::hypergraph(6, 6, rng));
  return out;
}

void paths_and_cycles(Outcome& o) {
  for (int n = 2; n <= 14; ++n) {
    const int v = grundy_total_domination(path_graph(n)).value;
    o.expect(v == (n % 2 == 0 ? n : n - 1), "P_" + std::to_string(n) + " gave " + std::to_string(v));
  }
  for (int n = 3; n <= 14; ++n) {
    const int v = grundy_total_domination(cycle_graph(n)).value;
    o.expect(v == (n % 2 == 1 ? n - 1 : n - 2), "C_" + std::to_string(n) + " gave " + std::to_string(v));
  }
}

void named_fixtures(Outcome& o) {
  for (int n = 2; n <= 8; ++n) {
    const Graph k = complete_graph(n);
    o.expect(grundy_total_domination(k).value == 2 && grundy_domination(k).value == 1, "K_" + std::to_string(n));
    const Graph s = star_graph(n);
    o.expect(grundy_total_domination(s).value == 2 && grundy_domination(s).value == n,
             "K_{1," + std::to_string(n) + "}");
  }
  for (int k = 2; k <= 4; ++k) {
    const Graph s = spider_graph(k);
    o.expect(game_total_domination(s).value == 2 && grundy_total_domination(s).value == s.order() - 1,
             "spider " + std::to_string(k));
  }
  const Graph g4 = build({Family::family_gm, {4}});
  o.expect(total_domination_number(g4).value == 4 && grundy_total_domination(g4).value == 4, "G_4");
  o.expect(grundy_total_domination(build({Family::family_gm, {3, 2}})).value == 4, "G_3");
  for (int k = 1; k <= 5; ++k) {
    o.expect(grundy_total_domination(complete_bipartite_graph(k)).value == 2, "K_{k,k} k=" + std::to_string(k));
  }
  for (int k = 2; k <= 3; ++k) {
    o.expect(grundy_total_domination(subset_bipartite_graph(k)).value == 2 * k, "G_k k=" + std::to_string(k));
  }
}

void chains_and_bounds(const std::vector<Graph>& graphs, Outcome& o) {
  for (const Graph& g : graphs) {
    const auto r = compute_report(g);
    const int n = g.order();
    const int gt = r.gamma_t->value, upper = r.upper_gamma_t->value, game = r.gamma_tg->value;
    const int grt = r.gamma_grt->value, gr = r.gamma_gr->value, nus = r.nu_s->value, nuss = r.nu_ss->value;
    const std::string id = name(g);
    o.expect(gt <= upper && upper <= grt, id + " gamma_t <= Gamma_t <= gamma_grt");
    o.expect(gt <= game && game <= grt, id + " gamma_t <= gamma_tg <= gamma_grt");
    o.expect(grt * g.max_degree() >= n && grt <= n - g.min_degree() + 1, id + " n/Delta, n-delta+1");
    o.expect(nus <= nuss && 2 * nuss <= grt, id + " 2nu_s <= 2nu_ss <= gamma_grt");
    o.expect(grt <= 2 * gr, id + " gamma_grt <= 2 gamma_gr");
    o.expect(!(gt == 3 && grt == 3), id + " gamma_t = gamma_grt = 3");
  }
}

void characterizations(const std::vector<Graph>& graphs, Outcome& o) {
  for (const Graph& g : graphs) {
    const int n = g.order();
    const int grt = grundy_total_domination(g).value;
    const std::string id = name(g);
    const auto labeling = find_pair_labeling(g);
    o.expect((grt == n) == labeling.has_value(), id + " gamma_grt = n iff labeling found");
    if (labeling) {
      o.expect(is_valid_pair_labeling(g, *labeling) && oracle::legal_open_sequence(g, labeling->witness()),
               id + " labeling invalid");
    } else {
      o.expect(!oracle::has_pair_labeling(g), id + " a labeling exists but gamma_grt < n");
    }
    o.expect((grt == 2) == is_complete_multipartite(g), id + " gamma_grt = 2 iff complete multipartite");
    if (const auto k = regular_degree(g)) {
      const bool kkk = n == 2 * *k && are_isomorphic(g, complete_bipartite_graph(*k));
      o.expect((grt * *k == n) == kkk, id + " gamma_grt = n/Delta iff K_{Delta,Delta}");
    }
  }
}

void trees(Outcome& o) {
  std::mt19937_64 rng(5150);
  for (int n : {10, 12, 14}) {
    for (int i = 0; i < 500; ++i) {
      const Graph t = random_tree(n, rng);
      const std::string id = name(t);
      const int grt = grundy_total_domination(t).value;
      const auto m = tree_perfect_matching(t);
      o.expect((grt == n) == m.has_value(), id + " gamma_grt = n iff perfect matching");
      if (m) {
        const auto s = tree_perfect_matching_sequence(t, *m);
        o.expect(static_cast<int>(s.size()) == n && oracle::legal_open_sequence(t, s), id + " matching witness");
      }
      if (!strong_support_vertices(t).empty()) continue;
      const auto r = tree_bound_report(t);
      o.expect(3 * grt >= 2 * (n + 1), id + " tree bound");
      o.expect(r.extremal == r.in_family, id + " equality iff family member");
      if (r.certificate) o.expect(r.certificate->replay(n) == t, id + " certificate replay");
    }
  }
}

void regular_construction(Outcome& o) {
  std::vector<Graph> graphs;
  for (int n = 4; n <= 12; n += 2) {
    for (auto& g : connected_regular_graphs(n, 3)) {
      if (!(n == 6 && bipartition(g))) graphs.push_back(std::move(g));  // K_{3,3}
    }
  }
  graphs.push_back(petersen_graph());
  for (const Graph& g : graphs) {
    const std::string id = name(g);
    const auto r = regular_greedy_sequence(g);
    const int n = g.order();
    o.expect(oracle::legal_open_sequence(g, r.sequence) && is_total_dominating_sequence(g, r.sequence),
             id + " greedy witness");
    o.expect(static_cast<int>(r.sequence.size()) >= regular_lower_bound(n, 3, r.bipartite), id + " greedy bound");
    const int grt = grundy_total_domination(g).value;
    o.expect(2 * grt >= n, id + " gamma_grt >= n/2");
  }
}

void hypergraphs(const std::vector<Hypergraph>& suite, const std::vector<Graph>& graphs, Outcome& o) {
  int index = 0;
  for (const Hypergraph& h : suite) {
    const std::string id = "hypergraph #" + std::to_string(index++);
    const auto cover = grundy_covering_number(h);
    const auto trans = grundy_transversal_number(h);
    o.expect(cover.value == trans.value, id + " rho_gr = tau_gr");
    o.expect(cover.value == oracle::grundy_covering(h), id + " rho_gr oracle");
    const auto c = transversal_to_cover(h, trans.witness);
    const auto cl = check_edge_sequence(h, c);
    o.expect(c.size() == trans.witness.size() && cl.legal && cl.complete, id + " transversal reversal");
    const auto t = cover_to_transversal(h, cover.witness);
    const auto tl = check_transversal_sequence(h, t);
    o.expect(t.size() == cover.witness.size() && tl.legal && tl.complete, id + " cover reversal");
    const int incidence = grundy_total_domination(incidence_graph(h)).value;
    o.expect(incidence == 2 * cover.value, id + " gamma_grt(incidence) = 2 rho_gr");
  }
  for (const Graph& g : graphs) {
    o.expect(grundy_covering_number(open_neighborhood_hypergraph(g)).value == grundy_total_domination(g).value,
             name(g) + " open neighborhood hypergraph");
  }
}

void interpolation(const std::vector<Hypergraph>& suite, const std::vector<Graph>& graphs, Outcome& o) {
  for (const Graph& g : graphs) {
    const int low = total_domination_number(g).value;
    const int high = grundy_total_domination(g).value;
    try {
      const auto w = interpolation_witnesses(g);
      for (int len = low; len <= high; ++len) {
        const auto it = w.find(len);
        o.expect(it != w.end() && static_cast<int>(it->second.size()) == len &&
                     oracle::legal_open_sequence(g, it->second) && is_total_dominating_sequence(g, it->second),
                 name(g) + " length " + std::to_string(len));
      }
    } catch (const InvariantViolation& e) {
      o.expect(false, name(g) + " " + e.what());
    }
  }
  int index = 0;
  for (const Hypergraph& h : suite) {
    const std::string id = "hypergraph #" + std::to_string(index++);
    try {
      const auto w = covering_interpolation_witnesses(h);
      const int low = edge_cover_number(h).value;
      const int high = grundy_covering_number(h).value;
      o.expect(static_cast<int>(w.size()) == high - low + 1, id + " covering lengths");
      for (const auto& [len, s] : w) {
        const auto check = check_edge_sequence(h, s);
        o.expect(static_cast<int>(s.size()) == len && check.legal && check.complete, id + " covering witness");
      }
    } catch (const InvariantViolation& e) {
      o.expect(false, id + " " + e.what());
    }
  }
}

void oracle_equivalence(const std::vector<Graph>& graphs, Outcome& o) {
  for (const Graph& g : graphs) {
    const std::string id = name(g);
    o.expect(grundy_total_domination(g).value == oracle::grundy_total(g), id + " gamma_grt");
    o.expect(grundy_domination(g).value == oracle::grundy_closed(g), id + " gamma_gr");
    o.expect(total_domination_number(g).value == oracle::total_domination(g), id + " gamma_t");
    o.expect(upper_total_domination(g).value == oracle::upper_total_domination(g), id + " Gamma_t");
    o.expect(game_total_domination(g).value == oracle::game_total_domination(g), id + " gamma_tg");
    o.expect(strong_matching_number(g).value == oracle::strong_matching(g), id + " nu_s");
    o.expect(semistrong_matching_number(g).value == oracle::semistrong_matching(g), id + " nu_ss");
  }
}

}  // namespace

int main() {
  const auto upto7 = connected_up_to(7);
  const auto upto8 = connected_up_to(8);
  const auto suite = hypergraph_suite();
  bool ok = true;
  ok &= report(1, "path and cycle formulas", 5, paths_and_cycles);
  ok &= report(2, "named fixtures", 60, named_fixtures);
  ok &= report(3, "chains and bounds, connected n <= 8", 600, [&](Outcome& o) { chains_and_bounds(upto8, o); });
  ok &= report(4, "characterization equivalences, connected n <= 8", 600,
               [&](Outcome& o) { characterizations(upto8, o); });
  ok &= report(5, "random trees n = 10, 12, 14", 120, trees);
  ok &= report(6, "regular greedy construction, cubic n <= 12 and Petersen", 60, regular_construction);
  ok &= report(7, "hypergraph suite", 180, [&](Outcome& o) { hypergraphs(suite, upto7, o); });
  ok &= report(8, "interpolation", 180, [&](Outcome& o) { interpolation(suite, upto7, o); });
  ok &= report(9, "oracle equivalence, connected n <= 7", 600, [&](Outcome& o) { oracle_equivalence(upto7, o); });
  std::printf("%s\n", ok ? "acceptance: all criteria pass" : "acceptance: FAILURES");
  return ok ? 0 : 1;
}
