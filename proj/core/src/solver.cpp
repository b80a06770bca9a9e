#include "tds/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <future>
#include <string>

#include "cover_search.hpp"
#include "tds/error.hpp"

namespace tds {

namespace detail {

namespace {

bool cover_within(const SetSystem& s, VertexSet covered, int budget, std::vector<int>& chosen,
                  std::vector<bool>& used) {
  if (covered == s.universe()) return true;
  if (budget == 0) return false;
  const int element = (s.universe() - covered).front();
  for (std::size_t i = 0; i < s.moves.size(); ++i) {
    if (used[i] || !s.moves[i].contains(element)) continue;
    used[i] = true;
    chosen.push_back(static_cast<int>(i));
    if (cover_within(s, covered | s.moves[i], budget - 1, chosen, used)) return true;
    chosen.pop_back();
    used[i] = false;
  }
  return false;
}

}  // namespace

std::vector<int> minimum_cover(const SetSystem& system) {
  std::vector<bool> used(system.moves.size(), false);
  for (int k = 0; k <= static_cast<int>(system.moves.size()); ++k) {
    std::vector<int> chosen;
    if (cover_within(system, {}, k, chosen, used)) {
      std::sort(chosen.begin(), chosen.end());
      return chosen;
    }
  }
  return {};
}

}  // namespace detail

namespace {

using detail::SetSystem;

SetSystem neighborhood_system(const Graph& g, Neighborhood mode) {
  SetSystem s;
  s.universe_size = g.order();
  for (int v = 0; v < g.order(); ++v) s.moves.push_back(neighborhood(g, v, mode));
  return s;
}

SequenceResult longest_sequence(const Graph& g, Neighborhood mode, const SolverOptions& options) {
  const SetSystem system = neighborhood_system(g, mode);
  if (g.order() == 0) return {};
  if (!options.parallel_first_move) {
    detail::LongestCover search(system);
    auto r = search.solve();
    return {r.value, r.moves};
  }
  // One private memo per first move; ties resolve to the lowest first vertex.
  std::vector<std::future<detail::CoverSequence>> jobs;
  for (int v = 0; v < g.order(); ++v) {
    jobs.push_back(std::async(std::launch::async, [&system, v] {
      detail::LongestCover search(system);
      auto tail = search.solve(system.moves[v]);
      tail.moves.insert(tail.moves.begin(), v);
      ++tail.value;
      return tail;
    }));
  }
  SequenceResult best;
  for (auto& job : jobs) {
    auto r = job.get();
    if (r.value > best.value) best = {r.value, r.moves};
  }
  return best;
}

}  // namespace

int default_solver_cap() {
  if (const char* env = std::getenv("GRUNDY_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= kMaxVertices) return static_cast<int>(v);
  }
  return kDefaultSolverCap;
}

std::uint64_t memo_bytes_estimate(int n) {
  return n >= 63 ? ~std::uint64_t{0} : std::uint64_t{1} << n;
}

void check_solver_input(const Graph& g, const SolverOptions& options, const char* solver) {
  if (g.order() > options.cap) {
    throw CapacityError(std::string(solver) + ": order " + std::to_string(g.order()) +
                        " exceeds solver cap " + std::to_string(options.cap));
  }
  if (g.has_isolated_vertex()) {
    throw DomainError(std::string(solver) + ": graph has an isolated vertex");
  }
}

SequenceResult grundy_total_domination(const Graph& g, const SolverOptions& options) {
  check_solver_input(g, options, "grundy_total_domination");
  return longest_sequence(g, Neighborhood::open, options);
}

SequenceResult grundy_domination(const Graph& g, const SolverOptions& options) {
  if (options.allow_isolated) {
    if (g.order() > options.cap) throw CapacityError("grundy_domination: order exceeds solver cap");
  } else {
    check_solver_input(g, options, "grundy_domination");
  }
  return longest_sequence(g, Neighborhood::closed, options);
}

SetResult total_domination_number(const Graph& g, const SolverOptions& options) {
  check_solver_input(g, options, "total_domination_number");
  const auto cover = detail::minimum_cover(neighborhood_system(g, Neighborhood::open));
  return {static_cast<int>(cover.size()), VertexSet::of(cover)};
}

SetResult upper_total_domination(const Graph& g, const SolverOptions& options) {
  check_solver_input(g, options, "upper_total_domination");
  const int n = g.order();
  const VertexSet all = g.vertices();
  SetResult best;
  // A total dominating set is minimal iff each member has a private neighbor:
  // a vertex it alone dominates within the set.
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const VertexSet s(bits);
    if (s.size() <= best.value) continue;
    VertexSet once;
    VertexSet twice;
    for (int v : s) {
      twice |= once & g.neighbors(v);
      once |= g.neighbors(v);
    }
    if (once != all) continue;
    bool minimal = true;
    for (int v : s) {
      if ((g.neighbors(v) - twice).empty()) {
        minimal = false;
        break;
      }
    }
    if (minimal) best = {s.size(), s};
  }
  return best;
}

namespace {

/// Minimax over (dominated set, mover). Dominator minimizes the number of
/// remaining moves, Staller maximizes.
class TotalDominationGame {
 public:
  explicit TotalDominationGame(const Graph& g)
      : g_(g),
        memo_{detail::MemoTable<std::int8_t>(g.order(), -1), detail::MemoTable<std::int8_t>(g.order(), -1)} {}

  int value(VertexSet dominated, int mover) {
    if (dominated == g_.vertices()) return 0;
    if (const auto* hit = memo_[mover].find(dominated.bits())) return *hit;
    int result = mover == 0 ? kMaxVertices + 1 : -1;
    for (int v : ordered_moves(dominated, mover)) {
      const int r = 1 + value(dominated | g_.neighbors(v), 1 - mover);
      if (mover == 0 ? r < result : r > result) result = r;
      if (mover == 0 && result == 1) break;  // cannot finish faster
    }
    memo_[mover].store(dominated.bits(), static_cast<std::int8_t>(result));
    return result;
  }

  /// Legal moves, Dominator preferring large footprints and Staller small
  /// ones; ties by vertex id.
  std::vector<int> ordered_moves(VertexSet dominated, int mover) const {
    std::vector<std::pair<int, int>> keyed;
    for (int v = 0; v < g_.order(); ++v) {
      const int fresh = (g_.neighbors(v) - dominated).size();
      if (fresh > 0) keyed.emplace_back(mover == 0 ? -fresh : fresh, v);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> out;
    for (auto [key, v] : keyed) out.push_back(v);
    return out;
  }

  GameResult solve() {
    GameResult out;
    out.value = value({}, 0);
    VertexSet dominated;
    int mover = 0;
    while (dominated != g_.vertices()) {
      const int target = value(dominated, mover);
      for (int v : ordered_moves(dominated, mover)) {
        if (1 + value(dominated | g_.neighbors(v), 1 - mover) == target) {
          out.trace.push_back(v);
          dominated |= g_.neighbors(v);
          break;
        }
      }
      mover = 1 - mover;
    }
    return out;
  }

 private:
  const Graph& g_;
  detail::MemoTable<std::int8_t> memo_[2];
};

}  // namespace

GameResult game_total_domination(const Graph& g, const SolverOptions& options) {
  check_solver_input(g, options, "game_total_domination");
  TotalDominationGame game(g);
  return game.solve();
}

std::map<int, VertexSequence> interpolation_witnesses(const Graph& g, const SolverOptions& options) {
  check_solver_input(g, options, "interpolation_witnesses");
  const SetSystem system = neighborhood_system(g, Neighborhood::open);
  const int low = total_domination_number(g, options).value;
  const int high = grundy_total_domination(g, options).value;
  detail::CoverLengths lengths(system);
  std::map<int, VertexSequence> out;
  for (int length = low; length <= high; ++length) {
    auto w = lengths.witness(length);
    if (static_cast<int>(w.size()) != length || !is_total_dominating_sequence(g, w)) {
      throw InvariantViolation("no total dominating sequence of length " + std::to_string(length));
    }
    out.emplace(length, std::move(w));
  }
  return out;
}

VertexSet strong_vertices(const Graph& g, const Matching& m) {
  VertexSet covered;
  for (const Edge& e : m) {
    covered.insert(e.u);
    covered.insert(e.v);
  }
  VertexSet out;
  for (int v : covered) {
    if ((g.neighbors(v) & covered).size() == 1) out.insert(v);
  }
  return out;
}

bool is_matching(const Graph& g, const Matching& m) {
  VertexSet covered;
  for (const Edge& e : m) {
    if (!g.has_edge(e.u, e.v) || covered.contains(e.u) || covered.contains(e.v)) return false;
    covered.insert(e.u);
    covered.insert(e.v);
  }
  return true;
}

bool is_strong_matching(const Graph& g, const Matching& m) {
  if (!is_matching(g, m)) return false;
  const VertexSet strong = strong_vertices(g, m);
  return std::all_of(m.begin(), m.end(),
                     [&](const Edge& e) { return strong.contains(e.u) && strong.contains(e.v); });
}

bool is_semistrong_matching(const Graph& g, const Matching& m) {
  if (!is_matching(g, m)) return false;
  const VertexSet strong = strong_vertices(g, m);
  return std::all_of(m.begin(), m.end(),
                     [&](const Edge& e) { return strong.contains(e.u) || strong.contains(e.v); });
}

namespace {

/// Branch and bound over edges in order. Both predicates are hereditary
/// (removing an edge of M only lowers degrees inside G[V(M)], and a matched
/// vertex keeps its partner), so infeasible partial matchings are cut.
class MatchingSearch {
 public:
  MatchingSearch(const Graph& g, bool semistrong) : g_(g), edges_(g.edges()), semistrong_(semistrong) {}

  MatchingResult solve() {
    Matching current;
    recurse(0, VertexSet{}, current);
    return best_;
  }

 private:
  void recurse(std::size_t next, VertexSet covered, Matching& current) {
    if (static_cast<int>(current.size()) > best_.value) best_ = {static_cast<int>(current.size()), current};
    const int free_vertices = (g_.vertices() - covered).size();
    if (static_cast<int>(current.size()) + free_vertices / 2 <= best_.value) return;
    for (std::size_t i = next; i < edges_.size(); ++i) {
      const Edge e = edges_[i];
      if (covered.contains(e.u) || covered.contains(e.v)) continue;
      current.push_back(e);
      const bool ok = semistrong_ ? is_semistrong_matching(g_, current) : is_strong_matching(g_, current);
      if (ok) recurse(i + 1, covered | VertexSet::single(e.u) | VertexSet::single(e.v), current);
      current.pop_back();
    }
  }

  const Graph& g_;
  std::vector<Edge> edges_;
  bool semistrong_;
  MatchingResult best_;
};

}  // namespace

MatchingResult strong_matching_number(const Graph& g, const SolverOptions& options) {
  if (g.order() > options.cap) throw CapacityError("strong_matching_number: order exceeds solver cap");
  return MatchingSearch(g, false).solve();
}

MatchingResult semistrong_matching_number(const Graph& g, const SolverOptions& options) {
  if (g.order() > options.cap) throw CapacityError("semistrong_matching_number: order exceeds solver cap");
  return MatchingSearch(g, true).solve();
}

std::string invariant_key(Invariant inv) {
  switch (inv) {
    case Invariant::gamma_t: return "gamma_t";
    case Invariant::upper_gamma_t: return "Gamma_t";
    case Invariant::gamma_tg: return "gamma_tg";
    case Invariant::gamma_grt: return "gamma_grt";
    case Invariant::gamma_gr: return "gamma_gr";
    case Invariant::nu_s: return "nu_s";
    case Invariant::nu_ss: return "nu_ss";
  }
  return "?";
}

std::optional<Invariant> parse_invariant(const std::string& s) {
  if (s == "gt") return Invariant::gamma_t;
  if (s == "Gt") return Invariant::upper_gamma_t;
  if (s == "gtg") return Invariant::gamma_tg;
  if (s == "grt") return Invariant::gamma_grt;
  if (s == "gr") return Invariant::gamma_gr;
  if (s == "nus") return Invariant::nu_s;
  if (s == "nuss") return Invariant::nu_ss;
  return std::nullopt;
}

const std::vector<Invariant>& all_invariants() {
  static const std::vector<Invariant> all{Invariant::gamma_t, Invariant::upper_gamma_t, Invariant::gamma_tg,
                                          Invariant::gamma_grt, Invariant::gamma_gr, Invariant::nu_s,
                                          Invariant::nu_ss};
  return all;
}

InvariantReport compute_report(const Graph& g, const std::vector<Invariant>& selection,
                               const SolverOptions& options) {
  InvariantReport report;
  for (Invariant inv : selection) {
    const auto start = std::chrono::steady_clock::now();
    switch (inv) {
      case Invariant::gamma_t: report.gamma_t = total_domination_number(g, options); break;
      case Invariant::upper_gamma_t: report.upper_gamma_t = upper_total_domination(g, options); break;
      case Invariant::gamma_tg: report.gamma_tg = game_total_domination(g, options); break;
      case Invariant::gamma_grt: report.gamma_grt = grundy_total_domination(g, options); break;
      case Invariant::gamma_gr: report.gamma_gr = grundy_domination(g, options); break;
      case Invariant::nu_s: report.nu_s = strong_matching_number(g, options); break;
      case Invariant::nu_ss: report.nu_ss = semistrong_matching_number(g, options); break;
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report.micros[invariant_key(inv)] =
        std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count();
  }
  return report;
}

}  // namespace tds
