#include "tds/sequence.hpp"

#include <string>

#include "tds/error.hpp"

namespace tds {

void validate_sequence(const Graph& g, std::span<const int> s) {
  VertexSet seen;
  for (int v : s) {
    if (v < 0 || v >= g.order()) {
      throw SequenceError("sequence vertex " + std::to_string(v) + " out of range");
    }
    if (seen.contains(v)) throw SequenceError("vertex " + std::to_string(v) + " repeated in sequence");
    seen.insert(v);
  }
}

LegalityReport check_legal(const Graph& g, std::span<const int> s, Neighborhood mode) {
  validate_sequence(g, s);
  LegalityReport report;
  report.footprints.footprinter_index.assign(g.order(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const VertexSet fresh = neighborhood(g, s[i], mode) - report.dominated;
    if (fresh.empty()) {
      report.legal = false;
      report.first_violation = i;
      break;
    }
    for (int u : fresh) report.footprints.footprinter_index[u] = static_cast<int>(i);
    report.footprints.footprinted.push_back(fresh);
    report.dominated |= fresh;
  }
  return report;
}

bool is_total_dominating_sequence(const Graph& g, std::span<const int> s) {
  const auto r = check_legal(g, s, Neighborhood::open);
  return r.legal && r.dominated == g.vertices();
}

bool is_dominating_sequence(const Graph& g, std::span<const int> s) {
  const auto r = check_legal(g, s, Neighborhood::closed);
  return r.legal && r.dominated == g.vertices();
}

GreedyResult greedy_extend(const Graph& g, std::span<const int> s, const GreedyOptions& options) {
  validate_sequence(g, s);
  const VertexSet target = options.target.value_or(g.vertices());
  const VertexSet pool = options.restrict_to.value_or(g.vertices());

  GreedyResult result;
  result.sequence.assign(s.begin(), s.end());
  VertexSet dominated;
  VertexSet used;
  for (int v : s) {
    dominated |= neighborhood(g, v, options.mode);
    used.insert(v);
  }

  while (!target.is_subset_of(dominated)) {
    int best = -1;
    int best_count = 0;
    for (int v : pool - used) {
      const VertexSet reach = neighborhood(g, v, options.mode) & target;
      const int count = (reach - dominated).size();
      if (count == 0) continue;
      if (options.touch_dominated && !reach.intersects(dominated)) continue;
      const bool better = best < 0 ||
                          (options.policy == GreedyPolicy::min_footprint && count < best_count) ||
                          (options.policy == GreedyPolicy::max_footprint && count > best_count);
      if (better) {
        best = v;
        best_count = count;
      }
    }
    if (best < 0) break;
    result.sequence.push_back(best);
    used.insert(best);
    dominated |= neighborhood(g, best, options.mode);
  }
  result.complete = target.is_subset_of(dominated);
  return result;
}

PruneResult prune_to_closed(const Graph& g, std::span<const int> s) {
  const auto r = check_legal(g, s, Neighborhood::open);
  if (!r.legal || r.dominated != g.vertices()) {
    throw PreconditionError("prune_to_closed: input is not a total dominating sequence");
  }
  PruneResult out;
  VertexSet earlier;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (r.footprints.footprinted[i].is_subset_of(earlier)) {
      out.removed.push_back(s[i]);
    } else {
      out.sequence.push_back(s[i]);
    }
    earlier.insert(s[i]);
  }
  if (!check_legal(g, out.sequence, Neighborhood::closed).legal || 2 * out.removed.size() > s.size()) {
    throw InvariantViolation("prune_to_closed produced an illegal closed sequence");
  }
  return out;
}

}  // namespace tds
