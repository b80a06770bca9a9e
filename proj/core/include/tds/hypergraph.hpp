#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tds/graph.hpp"
#include "tds/solver.hpp"
#include "tds/vertex_set.hpp"

namespace tds {

/// Hypergraph on ground set {0..|X|-1} with a list of nonempty edges.
/// Duplicate edges are kept as distinct edges.
class Hypergraph {
 public:
  /// Throws ParameterError on an empty edge, an edge outside the ground set,
  /// more than 64 vertices or edges, or a tag count mismatch; DomainError on
  /// a vertex lying in no edge.
  Hypergraph(int ground_size, std::vector<VertexSet> edges, std::vector<std::string> edge_tags = {});

  int ground_size() const { return ground_size_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  VertexSet edge(int i) const { return edges_.at(i); }
  /// "E<i>" unless tags were given.
  const std::string& edge_tag(int i) const { return tags_.at(i); }
  /// Edges containing x, as a set of edge indices.
  VertexSet star(int x) const { return stars_.at(x); }
  /// Index pairs (i < j) of identical edges.
  std::vector<std::pair<int, int>> duplicate_edges() const;

 private:
  int ground_size_;
  std::vector<VertexSet> edges_;
  std::vector<std::string> tags_;
  std::vector<VertexSet> stars_;
};

using EdgeSequence = std::vector<int>;
using TransversalSequence = std::vector<int>;

struct HyperLegality {
  bool legal = true;
  std::optional<std::size_t> first_violation;
  /// Per step: vertices newly covered (edge sequences) or edges newly hit
  /// (transversal sequences).
  std::vector<VertexSet> fresh;
  /// Covered vertices / hit edges after the last step.
  VertexSet reached;
  /// Every vertex covered / every edge hit.
  bool complete = false;
};

/// Throws SequenceError on an out-of-range or repeated index.
HyperLegality check_edge_sequence(const Hypergraph& h, const EdgeSequence& s);
HyperLegality check_transversal_sequence(const Hypergraph& h, const TransversalSequence& s);

struct HyperResult {
  int value = 0;
  std::vector<int> witness;
};

/// ρ_gr: longest legal edge sequence covering X. Memoized on the covered set.
HyperResult grundy_covering_number(const Hypergraph& h, const SolverOptions& options = {});
/// τ_gr: longest legal transversal sequence hitting every edge. Memoized on
/// the set of hit edges.
HyperResult grundy_transversal_number(const Hypergraph& h, const SolverOptions& options = {});
/// ρ: minimum edge cover.
HyperResult edge_cover_number(const Hypergraph& h, const SolverOptions& options = {});
/// One edge covering sequence of every length in [ρ, ρ_gr].
/// Throws InvariantViolation if some length has no witness.
std::map<int, EdgeSequence> covering_interpolation_witnesses(const Hypergraph& h, const SolverOptions& options = {});

/// (v_1..v_t) with E_i the lowest-index edge first hit by v_i becomes
/// (E_t..E_1). Throws PreconditionError unless `s` is legal and complete.
EdgeSequence transversal_to_cover(const Hypergraph& h, const TransversalSequence& s);
/// (E_1..E_u) with v_i the lowest vertex first covered by E_i becomes
/// (v_u..v_1). Throws PreconditionError unless `s` is legal and complete.
TransversalSequence cover_to_transversal(const Hypergraph& h, const EdgeSequence& s);

/// Bipartite incidence graph: vertex x for x in X, then vertex |X| + i for
/// edge i. Labels are "x<id>" and the edge tags. Throws CapacityError when
/// |X| + |E| exceeds 64.
Graph incidence_graph(const Hypergraph& h);
inline bool is_edge_side(const Hypergraph& h, int vertex) { return vertex >= h.ground_size(); }

struct IncidenceCheck {
  int gamma_grt_of_incidence = 0;
  int rho_gr = 0;
  int two_rho_gr = 0;
  bool equal = false;
  VertexSequence graph_witness;
  EdgeSequence cover_witness;
};

/// Solves both sides independently.
IncidenceCheck verify_incidence_theorem(const Hypergraph& h, const SolverOptions& options = {});

/// One edge N(v) per vertex v, tagged "N(<label>)". Throws DomainError on an
/// isolated vertex.
Hypergraph open_neighborhood_hypergraph(const Graph& g);

/// Text format: a header line "|X| |E|", then one edge per line as
/// space-separated vertex ids. Blank lines and '#' comments are skipped.
Hypergraph parse_hypergraph(const std::string& text);
std::string to_hypergraph_text(const Hypergraph& h);

}  // namespace tds
