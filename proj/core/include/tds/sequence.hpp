#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tds/graph.hpp"

namespace tds {

/// An ordered list of distinct vertex ids.
using VertexSequence = std::vector<int>;

/// Which neighborhood a vertex dominates: N(v) for total domination,
/// N[v] for ordinary domination.
enum class Neighborhood { open, closed };

inline VertexSet neighborhood(const Graph& g, int v, Neighborhood mode) {
  return mode == Neighborhood::open ? g.neighbors(v) : g.closed_neighbors(v);
}

/// Footprinter bookkeeping for (a legal prefix of) a sequence.
struct FootprintMap {
  /// footprinter_index[u] = position in the sequence of u's footprinter, or -1.
  std::vector<int> footprinter_index;
  /// footprinted[i] = vertices first dominated by sequence entry i.
  std::vector<VertexSet> footprinted;

  std::optional<int> footprinter_index_of(int u) const {
    const int i = footprinter_index[u];
    return i < 0 ? std::nullopt : std::optional<int>(i);
  }
};

struct LegalityReport {
  bool legal = true;
  /// Index of the first entry that footprints nothing.
  std::optional<std::size_t> first_violation;
  /// Footprints of the longest legal prefix.
  FootprintMap footprints;
  /// Union of the neighborhoods of the longest legal prefix.
  VertexSet dominated;
};

/// Throws SequenceError unless `s` is a list of distinct vertices of g.
void validate_sequence(const Graph& g, std::span<const int> s);

LegalityReport check_legal(const Graph& g, std::span<const int> s, Neighborhood mode);

/// Legal open sequence whose vertex set totally dominates V(g).
bool is_total_dominating_sequence(const Graph& g, std::span<const int> s);
/// Legal closed sequence whose vertex set dominates V(g).
bool is_dominating_sequence(const Graph& g, std::span<const int> s);

enum class GreedyPolicy { min_footprint, max_footprint, lexicographic };

struct GreedyOptions {
  Neighborhood mode = Neighborhood::open;
  GreedyPolicy policy = GreedyPolicy::lexicographic;
  /// Candidate pool; all vertices when unset.
  std::optional<VertexSet> restrict_to;
  /// Vertices whose domination ends the loop and in which footprints are
  /// counted; V(g) when unset.
  std::optional<VertexSet> target;
  /// Only consider candidates adjacent to an already dominated target vertex.
  bool touch_dominated = false;
};

struct GreedyResult {
  VertexSequence sequence;
  /// True when the target is dominated by the returned sequence.
  bool complete = false;
};

/// Appends legal candidates chosen by `policy` (ties to the lowest id) until
/// the target is dominated or no candidate remains. Throws SequenceError on
/// a malformed input sequence.
GreedyResult greedy_extend(const Graph& g, std::span<const int> s, const GreedyOptions& options = {});

struct PruneResult {
  /// `s` with the removed entries deleted; a legal closed sequence.
  VertexSequence sequence;
  /// Entries whose footprints all lie among earlier entries.
  VertexSequence removed;
};

/// Removes from a total dominating sequence every entry that footprints only
/// earlier entries of the sequence. Throws PreconditionError if `s` is not a
/// total dominating sequence.
PruneResult prune_to_closed(const Graph& g, std::span<const int> s);

}  // namespace tds
