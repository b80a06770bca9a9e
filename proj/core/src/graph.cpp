#include "tds/graph.hpp"

#include <algorithm>

#include "tds/error.hpp"

namespace tds {

namespace {

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw ParameterError("vertex " + std::to_string(v) + " out of range for order " +
                         std::to_string(n));
  }
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (n < 0 || n > kMaxVertices) {
    throw ParameterError("graph order " + std::to_string(n) + " outside [0, " +
                         std::to_string(kMaxVertices) + "]");
  }
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw ParameterError("label count does not match graph order");
  }
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
  for (const Edge& e : edges) {
    check_vertex(n, e.u);
    check_vertex(n, e.v);
    if (e.u == e.v) throw ParameterError("self-loop at vertex " + std::to_string(e.u));
    adj_[static_cast<std::size_t>(e.u)].insert(e.v);
    adj_[static_cast<std::size_t>(e.v)].insert(e.u);
  }
}

int Graph::min_degree() const {
  int best = order() == 0 ? 0 : kMaxVertices;
  for (int v = 0; v < order(); ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < order(); ++v) twice += degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::has_isolated_vertex() const {
  for (int v = 0; v < order(); ++v) {
    if (neighbors(v).empty()) return true;
  }
  return false;
}

std::string Graph::label(int v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_[static_cast<std::size_t>(v)];
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::single(unseen.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition parts;
  for (VertexSet comp : connected_components(g)) {
    VertexSet side[2] = {VertexSet::single(comp.front()), {}};
    VertexSet frontier = side[0];
    int layer = 0;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      const int other = 1 - layer;
      if (next.intersects(side[layer])) return std::nullopt;
      frontier = next - side[other];
      side[other] |= next;
      layer = other;
    }
    parts.left |= side[0];
    parts.right |= side[1];
  }
  return parts;
}

std::optional<int> regular_degree(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const int d = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

VertexSet leaves(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.insert(v);
  }
  return out;
}

std::vector<int> strong_support_vertices(const Graph& g) {
  const VertexSet leaf_set = leaves(g);
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) {
    if ((g.neighbors(v) & leaf_set).size() >= 2) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<int, int>> open_twin_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.neighbors(u) == g.neighbors(v)) out.emplace_back(u, v);
    }
  }
  return out;
}

StructuralReport structural_predicates(const Graph& g) {
  StructuralReport r;
  r.connected = is_connected(g);
  r.bipartition = bipartition(g);
  r.regular_degree = regular_degree(g);
  r.open_twin_pairs = open_twin_pairs(g);
  r.open_twin_free = r.open_twin_pairs.empty();
  r.strong_support_vertices = strong_support_vertices(g);
  r.is_tree = is_tree(g);
  return r;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) {
    throw ParameterError("induced_subgraph: vertex set exceeds graph order");
  }
  InducedSubgraph out;
  out.original = s.to_vector();
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    index[static_cast<std::size_t>(out.original[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    const int u = out.original[i];
    for (int v : g.neighbors(u) & s) {
      if (u < v) edges.emplace_back(static_cast<int>(i), index[static_cast<std::size_t>(v)]);
    }
    if (!g.labels().empty()) labels.push_back(g.label(u));
  }
  out.graph = Graph(static_cast<int>(out.original.size()), edges, std::move(labels));
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s) {
  VertexSet set;
  for (int v : s) {
    if (v < 0 || v >= g.order()) {
      throw ParameterError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    }
    set.insert(v);
  }
  return induced_subgraph(g, set);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw ParameterError("relabel: permutation size mismatch");
  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int p = perm[static_cast<std::size_t>(i)];
    if (p < 0 || p >= n || inverse[static_cast<std::size_t>(p)] != -1) {
      throw ParameterError("relabel: not a permutation");
    }
    inverse[static_cast<std::size_t>(p)] = i;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.emplace_back(inverse[static_cast<std::size_t>(e.u)], inverse[static_cast<std::size_t>(e.v)]);
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    for (int i = 0; i < n; ++i) labels.push_back(g.label(perm[static_cast<std::size_t>(i)]));
  }
  return Graph(n, edges, std::move(labels));
}

}  // namespace tds
