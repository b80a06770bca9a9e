#include "tds/characterizations.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "tds/enumerate.hpp"
#include "tds/error.hpp"
#include "tds/graph_io.hpp"

namespace tds {

VertexSequence PairLabeling::witness() const {
  VertexSequence s(x.begin(), x.end());
  s.insert(s.end(), y.rbegin(), y.rend());
  return s;
}

bool is_valid_pair_labeling(const Graph& g, const PairLabeling& labeling) {
  const int k = labeling.k();
  if (static_cast<int>(labeling.y.size()) != k || 2 * k != g.order()) return false;
  VertexSet seen;
  for (int i = 0; i < k; ++i) {
    for (int v : {labeling.x[i], labeling.y[i]}) {
      if (v < 0 || v >= g.order() || seen.contains(v)) return false;
      seen.insert(v);
    }
  }
  for (int i = 0; i < k; ++i) {
    if (!g.has_edge(labeling.x[i], labeling.y[i])) return false;
    for (int j = 0; j < k; ++j) {
      if (i != j && g.has_edge(labeling.x[i], labeling.x[j])) return false;
      // y_j ~ x_i requires i >= j.
      if (i < j && g.has_edge(labeling.x[i], labeling.y[j])) return false;
    }
  }
  return true;
}

PairLabeling peel_full_sequence(const Graph& g, const VertexSequence& s) {
  if (static_cast<int>(s.size()) != g.order() || !is_total_dominating_sequence(g, s)) {
    throw PreconditionError("peel_full_sequence: need a total dominating sequence of length n");
  }
  const auto legality = check_legal(g, s, Neighborhood::open);
  std::vector<int> position(g.order());
  for (std::size_t i = 0; i < s.size(); ++i) position[s[i]] = static_cast<int>(i);

  PairLabeling out;
  VertexSet removed;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int x = s[i];
    if (removed.contains(x)) continue;
    // Every entry footprints exactly one vertex, and footprinting is an
    // involution, so the footprintee of x is still present and footprints x.
    const VertexSet fp = legality.footprints.footprinted[i];
    const int y = fp.front();
    if (fp.size() != 1 || removed.contains(y) ||
        !legality.footprints.footprinted[position[y]].contains(x)) {
      throw InvariantViolation("footprint relation of a length-n sequence is not an involution");
    }
    out.x.push_back(x);
    out.y.push_back(y);
    removed.insert(x);
    removed.insert(y);
  }
  if (!is_valid_pair_labeling(g, out)) throw InvariantViolation("peeled labeling fails its conditions");
  return out;
}

std::optional<PairLabeling> find_pair_labeling(const Graph& g, const SolverOptions& options) {
  if (g.order() % 2 != 0 || g.order() == 0) return std::nullopt;
  const auto grundy = grundy_total_domination(g, options);
  if (grundy.value < g.order()) return std::nullopt;
  return peel_full_sequence(g, grundy.witness);
}

MultipartiteResult complete_multipartite_partition(const Graph& g) {
  MultipartiteResult out;
  const VertexSet all = g.vertices();
  VertexSet assigned;
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet part = all - g.neighbors(v);  // v together with its non-neighbors
    for (int u : part) {
      if ((all - g.neighbors(u)) != part) return {};
    }
    if (!assigned.contains(v)) {
      out.parts.push_back(part);
      assigned |= part;
    }
  }
  out.complete_multipartite = true;
  return out;
}

namespace {

/// BFS from the root: parent array and visiting order.
std::pair<std::vector<int>, std::vector<int>> root_tree(const Graph& tree, int root) {
  std::vector<int> parent(tree.order(), -1);
  std::vector<int> order{root};
  VertexSet seen = VertexSet::single(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int w : tree.neighbors(order[i]) - seen) {
      parent[w] = order[i];
      seen.insert(w);
      order.push_back(w);
    }
  }
  return {parent, order};
}

}  // namespace

std::optional<Matching> tree_perfect_matching(const Graph& tree) {
  if (!is_tree(tree)) throw PreconditionError("tree_perfect_matching: input is not a tree");
  const auto [parent, order] = root_tree(tree, 0);
  std::vector<int> mate(tree.order(), -1);
  Matching m;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (mate[v] >= 0) continue;
    const int p = parent[v];
    if (p < 0 || mate[p] >= 0) return std::nullopt;
    mate[v] = p;
    mate[p] = v;
    m.emplace_back(v, p);
  }
  std::sort(m.begin(), m.end());
  return m;
}

VertexSequence tree_perfect_matching_sequence(const Graph& tree, const Matching& matching) {
  if (!is_tree(tree)) throw PreconditionError("tree_perfect_matching_sequence: input is not a tree");
  if (!is_matching(tree, matching) || 2 * static_cast<int>(matching.size()) != tree.order()) {
    throw PreconditionError("tree_perfect_matching_sequence: not a perfect matching");
  }
  std::vector<int> mate(tree.order(), -1);
  for (const Edge& e : matching) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  const auto [parent, bfs] = root_tree(tree, 0);
  // Reverse BFS order puts every child before its parent.
  const std::vector<int> children_first(bfs.rbegin(), bfs.rend());
  VertexSequence s;
  for (int v : children_first) {
    if (mate[v] == parent[v]) s.push_back(v);
  }
  for (auto it = children_first.rbegin(); it != children_first.rend(); ++it) {
    if (parent[mate[*it]] == *it) s.push_back(*it);
  }
  if (!is_total_dominating_sequence(tree, s) || static_cast<int>(s.size()) != tree.order()) {
    throw InvariantViolation("perfect-matching construction did not yield a length-n sequence");
  }
  return s;
}

namespace {

bool is_support_within(const Graph& g, VertexSet alive, int v) {
  for (int w : g.neighbors(v) & alive) {
    if ((g.neighbors(w) & alive).size() == 1) return true;
  }
  return false;
}

class FamilyTPeeler {
 public:
  explicit FamilyTPeeler(const Graph& t) : t_(t) {}

  bool peel(VertexSet alive, FamilyTCertificate& cert) {
    if (alive.size() == 2) {
      const int a = alive.front();
      const int b = (alive - VertexSet::single(a)).front();
      if (!t_.has_edge(a, b)) return false;
      cert.seed = Edge(a, b);
      return true;
    }
    if (alive.size() < 2 || failed_.count(alive.bits())) return false;
    auto deg = [&](int v) { return (t_.neighbors(v) & alive).size(); };
    for (int v3 : alive) {
      if (deg(v3) != 1) continue;
      const int v2 = (t_.neighbors(v3) & alive).front();
      if (deg(v2) != 2) continue;
      const int v1 = (t_.neighbors(v2) & (alive - VertexSet::single(v3))).front();
      if (deg(v1) != 2) continue;
      const int v = (t_.neighbors(v1) & (alive - VertexSet::single(v2))).front();
      const VertexSet rest = alive - VertexSet::single(v1) - VertexSet::single(v2) - VertexSet::single(v3);
      if (!is_support_within(t_, rest, v)) continue;
      if (peel(rest, cert)) {
        cert.steps.push_back({v, v1, v2, v3});
        return true;
      }
    }
    failed_.insert(alive.bits());
    return false;
  }

 private:
  const Graph& t_;
  std::unordered_set<std::uint64_t> failed_;
};

}  // namespace

Graph FamilyTCertificate::replay(int order) const {
  std::vector<Edge> edges{seed};
  VertexSet alive = VertexSet::single(seed.u) | VertexSet::single(seed.v);
  if (seed.u == seed.v || seed.u < 0 || seed.v >= order) throw PreconditionError("invalid seed edge");
  Graph current(order, edges);
  for (const auto& step : steps) {
    for (int w : {step.v1, step.v2, step.v3}) {
      if (w < 0 || w >= order || alive.contains(w)) throw PreconditionError("step reuses a vertex");
    }
    if (step.v1 == step.v2 || step.v2 == step.v3 || step.v1 == step.v3) {
      throw PreconditionError("step path vertices are not distinct");
    }
    if (!alive.contains(step.support) || !is_support_within(current, alive, step.support)) {
      throw PreconditionError("step attaches to a vertex that is not a support vertex");
    }
    edges.emplace_back(step.support, step.v1);
    edges.emplace_back(step.v1, step.v2);
    edges.emplace_back(step.v2, step.v3);
    alive |= VertexSet::single(step.v1) | VertexSet::single(step.v2) | VertexSet::single(step.v3);
    current = Graph(order, edges);
  }
  if (alive != VertexSet::full(order)) throw PreconditionError("trace does not cover every vertex");
  return current;
}

FamilyTGeneration generate_family_t(int n) {
  FamilyTGeneration out;
  if (n < 2 || n % 3 != 2) {
    out.diagnostic = "no member of order " + std::to_string(n) + ": orders are 2 mod 3";
    return out;
  }
  std::vector<FamilyTMember> level{{Graph(2, std::vector<Edge>{Edge(0, 1)}), {Edge(0, 1), {}}}};
  for (int m = 2; m < n; m += 3) {
    std::vector<FamilyTMember> next;
    std::set<std::string> seen;
    for (const auto& member : level) {
      const VertexSet all = member.tree.vertices();
      for (int v = 0; v < m; ++v) {
        if (!is_support_within(member.tree, all, v)) continue;
        auto edges = member.tree.edges();
        edges.emplace_back(v, m);
        edges.emplace_back(m, m + 1);
        edges.emplace_back(m + 1, m + 2);
        Graph grown(m + 3, edges);
        if (!seen.insert(canonical_key(grown)).second) continue;
        FamilyTCertificate cert = member.certificate;
        cert.steps.push_back({v, m, m + 1, m + 2});
        next.push_back({std::move(grown), std::move(cert)});
      }
    }
    level = std::move(next);
  }
  out.members = std::move(level);
  return out;
}

std::optional<FamilyTCertificate> family_t_certificate(const Graph& tree) {
  if (!is_tree(tree) || tree.order() < 2 || tree.order() % 3 != 2) return std::nullopt;
  FamilyTCertificate cert;
  FamilyTPeeler peeler(tree);
  if (!peeler.peel(tree.vertices(), cert)) return std::nullopt;
  return cert;
}

TreeBoundReport tree_bound_report(const Graph& tree, const SolverOptions& options) {
  if (!is_tree(tree) || tree.order() < 2) {
    throw PreconditionError("tree_bound_report: input is not a nontrivial tree");
  }
  TreeBoundReport r;
  r.order = tree.order();
  r.has_strong_support = !strong_support_vertices(tree).empty();
  r.applicable = !r.has_strong_support;
  r.bound = (2 * (r.order + 1) + 2) / 3;
  r.exact = grundy_total_domination(tree, options).value;
  r.extremal = 3 * r.exact == 2 * (r.order + 1);
  r.certificate = family_t_certificate(tree);
  r.in_family = r.certificate.has_value();
  if (r.applicable) r.holds = r.exact >= r.bound && r.extremal == r.in_family;
  return r;
}

int regular_lower_bound(int n, int k, bool bipartite) {
  const int half_up = (k + 1) / 2;
  const int numerator = bipartite ? n + 2 * half_up - 4 : n + half_up - 2;
  if (numerator <= 0) return 0;
  return (numerator + (k - 1) - 1) / (k - 1);
}

namespace {

/// Non-twin pair inside `pool` with a common neighbor and the most common
/// neighbors; ties to the lexicographically smallest pair.
std::optional<std::pair<int, int>> seed_pair(const Graph& g, VertexSet pool) {
  std::optional<std::pair<int, int>> best;
  int best_common = 0;
  for (int u : pool) {
    for (int v : pool) {
      if (v <= u || g.neighbors(u) == g.neighbors(v)) continue;
      const int common = common_neighbor_count(g, u, v);
      if (common > best_common) {
        best_common = common;
        best = {u, v};
      }
    }
  }
  return best;
}

VertexSequence grow_part(const Graph& g, std::pair<int, int> seed, std::optional<VertexSet> pool,
                         std::optional<VertexSet> target) {
  GreedyOptions opts;
  opts.policy = GreedyPolicy::min_footprint;
  opts.touch_dominated = true;
  opts.restrict_to = pool;
  opts.target = target;
  const VertexSequence start{seed.first, seed.second};
  auto r = greedy_extend(g, start, opts);
  if (!r.complete) throw InvariantViolation("regular greedy construction stalled");
  return r.sequence;
}

}  // namespace

RegularGreedyResult regular_greedy_sequence(const Graph& g) {
  if (!is_connected(g)) throw DomainError("regular_greedy_sequence: graph is not connected");
  const auto k = regular_degree(g);
  if (!k) throw DomainError("regular_greedy_sequence: graph is not regular");
  if (*k < 3) throw DomainError("regular_greedy_sequence: degree must be at least 3");
  const auto parts = bipartition(g);
  const int n = g.order();
  if (parts && n == 2 * *k) throw DomainError("regular_greedy_sequence: graph is K_{k,k}");

  RegularGreedyResult r;
  r.degree = *k;
  r.bipartite = parts.has_value();
  std::vector<std::size_t> part_ends;
  if (!parts) {
    const auto seed = seed_pair(g, g.vertices());
    if (!seed) throw InvariantViolation("no non-twin pair with a common neighbor");
    r.seeds.push_back(*seed);
    r.sequence = grow_part(g, *seed, std::nullopt, std::nullopt);
    part_ends.push_back(r.sequence.size());
  } else {
    // Side containing vertex 0 first.
    const VertexSet sides[2] = {parts->left, parts->right};
    for (int s = 0; s < 2; ++s) {
      const auto seed = seed_pair(g, sides[s]);
      if (!seed) throw InvariantViolation("no non-twin pair with a common neighbor in a partite set");
      r.seeds.push_back(*seed);
      const auto part = grow_part(g, *seed, sides[s], sides[1 - s]);
      r.sequence.insert(r.sequence.end(), part.begin(), part.end());
      part_ends.push_back(r.sequence.size());
    }
  }
  const auto legality = check_legal(g, r.sequence, Neighborhood::open);
  if (!legality.legal || legality.dominated != g.vertices()) {
    throw InvariantViolation("regular greedy construction is not a total dominating sequence");
  }
  for (const VertexSet& fp : legality.footprints.footprinted) r.footprint_counts.push_back(fp.size());

  r.small_footprint_claim = true;
  std::size_t begin = 0;
  for (std::size_t end : part_ends) {
    const int second = r.footprint_counts[begin + 1];
    const int last = r.footprint_counts[end - 1];
    if (second > *k / 2 && last > *k / 2) r.small_footprint_claim = false;
    begin = end;
  }
  r.required_length = regular_lower_bound(n, *k, r.bipartite);
  r.meets_bound = static_cast<int>(r.sequence.size()) >= r.required_length;
  return r;
}

bool BoundReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return !c.applicable || c.holds; });
}

BoundReport bound_report(const Graph& g, const SolverOptions& options) {
  BoundReport out;
  out.invariants = compute_report(g, options);
  const auto& inv = out.invariants;
  const int n = g.order();
  const int gt = inv.gamma_t->value;
  const int upper = inv.upper_gamma_t->value;
  const int game = inv.gamma_tg->value;
  const int grt = inv.gamma_grt->value;
  const int gr = inv.gamma_gr->value;
  const int nus = inv.nu_s->value;
  const int nuss = inv.nu_ss->value;
  const int delta = g.min_degree();
  const int max_deg = g.max_degree();
  const bool connected = is_connected(g);
  const auto regular = regular_degree(g);
  const auto parts = bipartition(g);
  const bool is_kkk = regular && parts && connected && n == 2 * *regular;
  auto add = [&](std::string name, bool applicable, bool holds, bool tight, std::string detail) {
    out.checks.push_back({std::move(name), applicable, holds, tight, std::move(detail)});
  };
  auto show = [](std::initializer_list<int> values) {
    std::string s;
    for (int v : values) s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
  };

  add("gamma_t <= Gamma_t <= gamma_grt", true, gt <= upper && upper <= grt, gt == grt, show({gt, upper, grt}));
  add("gamma_t <= gamma_tg <= gamma_grt", true, gt <= game && game <= grt, false, show({gt, game, grt}));
  {
    const bool tight = grt * max_deg == n;
    // Equality for a connected graph forces K_{Delta,Delta}.
    add("gamma_grt >= n / Delta", true, grt * max_deg >= n && (!tight || !connected || is_kkk), tight,
        show({grt, n, max_deg}));
  }
  add("gamma_grt <= n - delta + 1", true, grt <= n - delta + 1, grt == n - delta + 1, show({grt, n, delta}));
  add("2 nu_s <= 2 nu_ss <= gamma_grt", true, nus <= nuss && 2 * nuss <= grt, 2 * nuss == grt,
      show({nus, nuss, grt}));
  add("gamma_grt <= 2 gamma_gr", true, grt <= 2 * gr, grt == 2 * gr, show({grt, gr}));
  add("gamma_t = 3 implies gamma_grt > 3", gt == 3, grt > 3, false, show({gt, grt}));
  add("gamma_grt = 2 iff complete multipartite", true, (grt == 2) == is_complete_multipartite(g), false,
      show({grt}));
  {
    bool labeled = false;
    if (grt == n) labeled = is_valid_pair_labeling(g, peel_full_sequence(g, inv.gamma_grt->witness));
    const bool ok = (grt == n) == labeled && (grt != n || n % 2 == 0);
    add("gamma_grt = n iff pair labeling", true, ok, grt == n, show({grt, n}));
  }
  if (regular && connected && *regular >= 1) {
    const int k = *regular;
    const bool tight = grt * k == n;
    add("regular: gamma_grt >= n / k, equality iff K_kk", true, grt * k >= n && tight == is_kkk, tight,
        show({grt, n, k}));
    const bool beyond = k >= 3 && !is_kkk;
    const int required = beyond ? regular_lower_bound(n, k, parts.has_value()) : 0;
    add("regular k >= 3 not K_kk: greedy lower bound", beyond, grt >= required, grt == required,
        show({grt, required}));
    add("regular k >= 3 not K_kk: gamma_grt >= n / (k - 1), strict for k >= 5", beyond,
        beyond && (k >= 5 ? grt * (k - 1) > n : grt * (k - 1) >= n), beyond && grt * (k - 1) == n,
        show({grt, n, k}));
  }
  if (is_tree(g) && n >= 2) {
    const auto matching = tree_perfect_matching(g);
    add("tree: gamma_grt = n iff perfect matching", true, (grt == n) == matching.has_value(), false, show({grt, n}));
    const auto tree = tree_bound_report(g, options);
    add("tree without strong support: gamma_grt >= 2(n+1)/3, equality iff family T", tree.applicable, tree.holds,
        tree.extremal, show({grt, tree.bound}));
  }
  return out;
}

}  // namespace tds
