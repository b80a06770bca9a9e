#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tds/graph.hpp"
#include "tds/sequence.hpp"
#include "tds/solver.hpp"

namespace tds {

// ---------------------------------------------------------------------------
// Graphs whose Grundy total domination number equals their order.

/// Labeling x_1..x_k, y_1..y_k of all n = 2k vertices with x_i ~ y_i,
/// {x_i} independent, and y_j ~ x_i only when i >= j.
struct PairLabeling {
  std::vector<int> x;
  std::vector<int> y;

  int k() const { return static_cast<int>(x.size()); }
  /// (x_1, ..., x_k, y_k, ..., y_1), a total dominating sequence of length n.
  VertexSequence witness() const;
};

/// Checks the three labeling conditions directly against the adjacency.
bool is_valid_pair_labeling(const Graph& g, const PairLabeling& labeling);

/// Solves for a length-n total dominating sequence and peels it: the first
/// remaining vertex becomes x_i and the unique vertex it footprints becomes
/// y_i. Returns nullopt exactly when γ_gr^t(g) < n.
std::optional<PairLabeling> find_pair_labeling(const Graph& g, const SolverOptions& options = {});

/// Peels a given length-n total dominating sequence into a labeling.
/// Throws PreconditionError if `s` is not a total dominating sequence of length n.
PairLabeling peel_full_sequence(const Graph& g, const VertexSequence& s);

// ---------------------------------------------------------------------------
// Graphs whose Grundy total domination number is 2.

struct MultipartiteResult {
  bool complete_multipartite = false;
  /// Parts ordered by smallest member; filled only when complete multipartite.
  std::vector<VertexSet> parts;
};

/// Non-adjacency (plus equality) must be an equivalence relation whose
/// classes are independent and completely joined to each other.
MultipartiteResult complete_multipartite_partition(const Graph& g);
inline bool is_complete_multipartite(const Graph& g) {
  return complete_multipartite_partition(g).complete_multipartite;
}

// ---------------------------------------------------------------------------
// Trees.

/// The unique perfect matching of a tree, if any. Linear: process vertices
/// children-first and match each unmatched vertex with its parent.
std::optional<Matching> tree_perfect_matching(const Graph& tree);

/// Roots the tree at 0, orders vertices children-before-parents, and returns
/// the vertices matched to their parent (in that order) followed by the
/// vertices matched to a child (in reverse order). The result is a total
/// dominating sequence of length n.
VertexSequence tree_perfect_matching_sequence(const Graph& tree, const Matching& matching);

/// One application of the pendant-path operation: path v1 v2 v3 attached to
/// the support vertex `support` by the edge support–v1.
struct PendantPathStep {
  int support = 0;
  int v1 = 0;
  int v2 = 0;
  int v3 = 0;
};

/// Build trace of a member of the extremal tree family: a seed edge plus
/// pendant-path steps, in vertex ids of the final tree.
struct FamilyTCertificate {
  Edge seed;
  std::vector<PendantPathStep> steps;

  /// Replays the trace, checking that every step attaches to a current
  /// support vertex. Throws PreconditionError on an invalid trace.
  Graph replay(int order) const;
};

struct FamilyTMember {
  Graph tree;
  FamilyTCertificate certificate;
};

struct FamilyTGeneration {
  std::vector<FamilyTMember> members;
  /// Set when n admits no members (n not congruent to 2 mod 3, or n < 2).
  std::string diagnostic;
};

/// Every member of order n up to isomorphism.
FamilyTGeneration generate_family_t(int n);

/// Peels pendant paths hanging from support vertices, backtracking over the
/// choice of path, down to a single edge.
std::optional<FamilyTCertificate> family_t_certificate(const Graph& tree);

struct TreeBoundReport {
  int order = 0;
  bool has_strong_support = false;
  /// False when the tree has a strong support vertex.
  bool applicable = false;
  /// ceil(2(n+1)/3).
  int bound = 0;
  int exact = 0;
  /// 3 * exact == 2(n + 1).
  bool extremal = false;
  bool in_family = false;
  std::optional<FamilyTCertificate> certificate;
  /// When applicable: exact >= bound and extremal == in_family.
  bool holds = true;
};

/// Throws PreconditionError on a non-tree or a tree of order < 2.
TreeBoundReport tree_bound_report(const Graph& tree, const SolverOptions& options = {});

// ---------------------------------------------------------------------------
// Regular graphs.

struct RegularGreedyResult {
  VertexSequence sequence;
  int degree = 0;
  bool bipartite = false;
  /// Smallest integer length the lower bound allows.
  int required_length = 0;
  bool meets_bound = false;
  /// Footprint count of every sequence entry, in order.
  std::vector<int> footprint_counts;
  /// Seed pairs (one per side in the bipartite case).
  std::vector<std::pair<int, int>> seeds;
  /// The second or the last vertex of every constructed part footprints at
  /// most floor(k/2) vertices.
  bool small_footprint_claim = false;
};

/// Greedy construction for connected k-regular graphs (k >= 3) other than
/// K_{k,k}: a seed pair of non-twins with the most common neighbors, then
/// repeatedly the vertex that touches the dominated region and footprints
/// the fewest new vertices. Bipartite graphs are handled one side at a time.
/// Throws DomainError naming the failed hypothesis.
RegularGreedyResult regular_greedy_sequence(const Graph& g);

/// ceil of the lower bound for a connected k-regular graph of order n.
int regular_lower_bound(int n, int k, bool bipartite);

// ---------------------------------------------------------------------------
// Bound table against exact values.

struct BoundCheck {
  std::string name;
  bool applicable = true;
  bool holds = true;
  bool tight = false;
  std::string detail;
};

struct BoundReport {
  InvariantReport invariants;
  std::vector<BoundCheck> checks;

  bool all_hold() const;
};

/// Computes every invariant and evaluates each applicable bound.
BoundReport bound_report(const Graph& g, const SolverOptions& options = {});

}  // namespace tds
