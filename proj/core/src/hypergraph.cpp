#include "tds/hypergraph.hpp"

#include <sstream>

#include "cover_search.hpp"
#include "tds/error.hpp"

namespace tds {

Hypergraph::Hypergraph(int ground_size, std::vector<VertexSet> edges, std::vector<std::string> edge_tags)
    : ground_size_(ground_size), edges_(std::move(edges)), tags_(std::move(edge_tags)) {
  if (ground_size_ < 1 || ground_size_ > kMaxVertices) {
    throw ParameterError("hypergraph ground set size must be in [1, 64]");
  }
  if (edges_.empty() || edges_.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw ParameterError("hypergraph edge count must be in [1, 64]");
  }
  if (tags_.empty()) {
    for (std::size_t i = 0; i < edges_.size(); ++i) tags_.push_back("E" + std::to_string(i));
  } else if (tags_.size() != edges_.size()) {
    throw ParameterError("expected one tag per edge");
  }
  const VertexSet ground = VertexSet::full(ground_size_);
  stars_.assign(ground_size_, VertexSet{});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].empty()) throw ParameterError("edge " + std::to_string(i) + " is empty");
    if (!edges_[i].is_subset_of(ground)) {
      throw ParameterError("edge " + std::to_string(i) + " leaves the ground set");
    }
    for (int x : edges_[i]) stars_[x].insert(static_cast<int>(i));
  }
  for (int x = 0; x < ground_size_; ++x) {
    if (stars_[x].empty()) throw DomainError("vertex " + std::to_string(x) + " lies in no edge");
  }
}

std::vector<std::pair<int, int>> Hypergraph::duplicate_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < edge_count(); ++i) {
    for (int j = i + 1; j < edge_count(); ++j) {
      if (edges_[i] == edges_[j]) out.emplace_back(i, j);
    }
  }
  return out;
}

namespace {

detail::SetSystem cover_system(const Hypergraph& h) {
  return {h.ground_size(), h.edges()};
}

detail::SetSystem transversal_system(const Hypergraph& h) {
  detail::SetSystem s{h.edge_count(), {}};
  for (int x = 0; x < h.ground_size(); ++x) s.moves.push_back(h.star(x));
  return s;
}

HyperLegality check_moves(const detail::SetSystem& system, const std::vector<int>& s, const char* what) {
  std::vector<bool> used(system.moves.size(), false);
  HyperLegality r;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int m = s[i];
    if (m < 0 || m >= static_cast<int>(system.moves.size())) {
      throw SequenceError(std::string(what) + ": index " + std::to_string(m) + " out of range");
    }
    if (used[m]) throw SequenceError(std::string(what) + ": index " + std::to_string(m) + " repeated");
    used[m] = true;
    const VertexSet fresh = system.moves[m] - r.reached;
    if (fresh.empty() && r.legal) {
      r.legal = false;
      r.first_violation = i;
    }
    r.fresh.push_back(fresh);
    r.reached |= system.moves[m];
  }
  r.complete = r.reached == system.universe();
  return r;
}

void check_capacity(const Hypergraph& h, const SolverOptions& options, const char* solver) {
  if (h.ground_size() > options.cap || h.edge_count() > options.cap) {
    throw CapacityError(std::string(solver) + ": hypergraph exceeds solver cap " + std::to_string(options.cap));
  }
}

}  // namespace

HyperLegality check_edge_sequence(const Hypergraph& h, const EdgeSequence& s) {
  return check_moves(cover_system(h), s, "edge sequence");
}

HyperLegality check_transversal_sequence(const Hypergraph& h, const TransversalSequence& s) {
  return check_moves(transversal_system(h), s, "transversal sequence");
}

HyperResult grundy_covering_number(const Hypergraph& h, const SolverOptions& options) {
  check_capacity(h, options, "grundy_covering_number");
  const auto system = cover_system(h);
  detail::LongestCover search(system);
  auto r = search.solve();
  return {r.value, r.moves};
}

HyperResult grundy_transversal_number(const Hypergraph& h, const SolverOptions& options) {
  check_capacity(h, options, "grundy_transversal_number");
  const auto system = transversal_system(h);
  detail::LongestCover search(system);
  auto r = search.solve();
  return {r.value, r.moves};
}

HyperResult edge_cover_number(const Hypergraph& h, const SolverOptions& options) {
  check_capacity(h, options, "edge_cover_number");
  auto cover = detail::minimum_cover(cover_system(h));
  return {static_cast<int>(cover.size()), std::move(cover)};
}

std::map<int, EdgeSequence> covering_interpolation_witnesses(const Hypergraph& h, const SolverOptions& options) {
  const int low = edge_cover_number(h, options).value;
  const int high = grundy_covering_number(h, options).value;
  const auto system = cover_system(h);
  detail::CoverLengths lengths(system);
  std::map<int, EdgeSequence> out;
  for (int length = low; length <= high; ++length) {
    auto w = lengths.witness(length);
    const auto check = check_edge_sequence(h, w);
    if (static_cast<int>(w.size()) != length || !check.legal || !check.complete) {
      throw InvariantViolation("no edge covering sequence of length " + std::to_string(length));
    }
    out.emplace(length, std::move(w));
  }
  return out;
}

EdgeSequence transversal_to_cover(const Hypergraph& h, const TransversalSequence& s) {
  const auto in = check_transversal_sequence(h, s);
  if (!in.legal || !in.complete) {
    throw PreconditionError("transversal_to_cover: input is not a legal complete transversal sequence");
  }
  EdgeSequence out;
  for (auto it = in.fresh.rbegin(); it != in.fresh.rend(); ++it) out.push_back(it->front());
  if (!check_edge_sequence(h, out).legal) throw InvariantViolation("reversed edge sequence is not legal");
  return out;
}

TransversalSequence cover_to_transversal(const Hypergraph& h, const EdgeSequence& s) {
  const auto in = check_edge_sequence(h, s);
  if (!in.legal || !in.complete) {
    throw PreconditionError("cover_to_transversal: input is not a legal edge covering sequence");
  }
  TransversalSequence out;
  for (auto it = in.fresh.rbegin(); it != in.fresh.rend(); ++it) out.push_back(it->front());
  if (!check_transversal_sequence(h, out).legal) {
    throw InvariantViolation("reversed transversal sequence is not legal");
  }
  return out;
}

Graph incidence_graph(const Hypergraph& h) {
  const int n = h.ground_size() + h.edge_count();
  if (n > kMaxVertices) throw CapacityError("incidence graph would exceed 64 vertices");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int x = 0; x < h.ground_size(); ++x) labels.push_back("x" + std::to_string(x));
  for (int i = 0; i < h.edge_count(); ++i) {
    labels.push_back(h.edge_tag(i));
    for (int x : h.edge(i)) edges.emplace_back(x, h.ground_size() + i);
  }
  return Graph(n, edges, labels);
}

IncidenceCheck verify_incidence_theorem(const Hypergraph& h, const SolverOptions& options) {
  IncidenceCheck c;
  const Graph g = incidence_graph(h);
  const auto graph_side = grundy_total_domination(g, options);
  const auto cover_side = grundy_covering_number(h, options);
  c.gamma_grt_of_incidence = graph_side.value;
  c.graph_witness = graph_side.witness;
  c.rho_gr = cover_side.value;
  c.cover_witness = cover_side.witness;
  c.two_rho_gr = 2 * c.rho_gr;
  c.equal = c.gamma_grt_of_incidence == c.two_rho_gr;
  return c;
}

Hypergraph open_neighborhood_hypergraph(const Graph& g) {
  if (g.order() == 0) throw DomainError("open_neighborhood_hypergraph: empty graph");
  if (g.has_isolated_vertex()) throw DomainError("open_neighborhood_hypergraph: graph has an isolated vertex");
  std::vector<VertexSet> edges;
  std::vector<std::string> tags;
  for (int v = 0; v < g.order(); ++v) {
    edges.push_back(g.neighbors(v));
    tags.push_back("N(" + g.label(v) + ")");
  }
  return Hypergraph(g.order(), std::move(edges), std::move(tags));
}

Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int ground = -1;
  int count = -1;
  std::vector<VertexSet> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    std::vector<int> values;
    for (const auto& t : tokens) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(t, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != t.size()) throw ParseError(line_no, "expected integer, got '" + t + "'");
      values.push_back(v);
    }
    if (ground < 0) {
      if (values.size() != 2 || values[0] < 1 || values[1] < 1) {
        throw ParseError(line_no, "expected header '<ground size> <edge count>'");
      }
      if (values[0] > kMaxVertices || values[1] > kMaxVertices) throw ParseError(line_no, "header exceeds 64");
      ground = values[0];
      count = values[1];
      continue;
    }
    if (static_cast<int>(edges.size()) == count) throw ParseError(line_no, "more edges than the header declares");
    VertexSet e;
    for (int v : values) {
      if (v < 0 || v >= ground) throw ParseError(line_no, "vertex id out of range");
      if (e.contains(v)) throw ParseError(line_no, "vertex repeated within an edge");
      e.insert(v);
    }
    edges.push_back(e);
  }
  if (ground < 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing header");
  if (static_cast<int>(edges.size()) != count) {
    throw ParseError(line_no, "header declares " + std::to_string(count) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Hypergraph(ground, std::move(edges));
}

std::string to_hypergraph_text(const Hypergraph& h) {
  std::ostringstream out;
  out << h.ground_size() << ' ' << h.edge_count() << '\n';
  for (const VertexSet& e : h.edges()) {
    bool first = true;
    for (int x : e) {
      out << (first ? "" : " ") << x;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace tds
