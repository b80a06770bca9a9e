#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tds/graph.hpp"
#include "tds/sequence.hpp"

namespace tds {

/// Default bound on the order accepted by the exponential solvers.
inline constexpr int kDefaultSolverCap = 24;

/// kDefaultSolverCap, or the value of the GRUNDY_CAP environment variable.
int default_solver_cap();

struct SolverOptions {
  int cap = default_solver_cap();
  /// Only honoured by grundy_domination; every other solver rejects
  /// isolated vertices.
  bool allow_isolated = false;
  /// Search each first move on its own thread with a private memo table.
  bool parallel_first_move = false;
};

/// Bytes a dense memo table over 2^n states would need.
std::uint64_t memo_bytes_estimate(int n);

struct SequenceResult {
  int value = 0;
  VertexSequence witness;
};

struct SetResult {
  int value = 0;
  VertexSet witness;
};

struct GameResult {
  int value = 0;
  /// Moves under optimal play; even positions are Dominator's.
  VertexSequence trace;
};

using Matching = std::vector<Edge>;

struct MatchingResult {
  int value = 0;
  Matching witness;
};

/// γ_gr^t: longest total dominating sequence.
///
/// Depth-first search over the dominated set D = ∪ N(v_j). D alone is a
/// complete search state: after v is played N(v) ⊆ D, so v can never be
/// legal again, and the set of legal continuations depends on D only.
SequenceResult grundy_total_domination(const Graph& g, const SolverOptions& options = {});

/// γ_gr: longest dominating sequence (closed neighborhoods).
SequenceResult grundy_domination(const Graph& g, const SolverOptions& options = {});

/// γ_t with a minimum total dominating set as witness.
SetResult total_domination_number(const Graph& g, const SolverOptions& options = {});

/// Γ_t with a maximum minimal total dominating set as witness.
SetResult upper_total_domination(const Graph& g, const SolverOptions& options = {});

/// γ_tg: total domination game, Dominator moves first and minimizes.
GameResult game_total_domination(const Graph& g, const SolverOptions& options = {});

/// One total dominating sequence of every length in [γ_t, γ_gr^t].
/// Throws InvariantViolation if some length has no witness.
std::map<int, VertexSequence> interpolation_witnesses(const Graph& g, const SolverOptions& options = {});

/// Vertices of V(M) whose degree in G[V(M)] is 1.
VertexSet strong_vertices(const Graph& g, const Matching& m);
bool is_matching(const Graph& g, const Matching& m);
bool is_strong_matching(const Graph& g, const Matching& m);
bool is_semistrong_matching(const Graph& g, const Matching& m);

/// ν_s: maximum induced matching.
MatchingResult strong_matching_number(const Graph& g, const SolverOptions& options = {});
/// ν_ss: maximum matching in which every edge has a strong endpoint.
MatchingResult semistrong_matching_number(const Graph& g, const SolverOptions& options = {});

/// Short names used on the command line and as JSON keys.
enum class Invariant { gamma_t, upper_gamma_t, gamma_tg, gamma_grt, gamma_gr, nu_s, nu_ss };

std::string invariant_key(Invariant inv);         // "gamma_t", "Gamma_t", ...
std::optional<Invariant> parse_invariant(const std::string& short_name);  // "gt", "Gt", ...
const std::vector<Invariant>& all_invariants();

/// Values and certificates of the selected invariants. Unselected entries stay empty.
struct InvariantReport {
  std::optional<SetResult> gamma_t;
  std::optional<SetResult> upper_gamma_t;
  std::optional<GameResult> gamma_tg;
  std::optional<SequenceResult> gamma_grt;
  std::optional<SequenceResult> gamma_gr;
  std::optional<MatchingResult> nu_s;
  std::optional<MatchingResult> nu_ss;
  /// Wall time per invariant key, microseconds.
  std::map<std::string, std::int64_t> micros;
};

InvariantReport compute_report(const Graph& g, const std::vector<Invariant>& selection,
                               const SolverOptions& options = {});
inline InvariantReport compute_report(const Graph& g, const SolverOptions& options = {}) {
  return compute_report(g, all_invariants(), options);
}

/// Throws DomainError on isolated vertices and CapacityError above the cap.
void check_solver_input(const Graph& g, const SolverOptions& options, const char* solver);

}  // namespace tds
