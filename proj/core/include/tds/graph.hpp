#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tds/vertex_set.hpp"

namespace tds {

/// Undirected edge with `u < v` after normalization.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool operator==(const Edge&) const = default;
  constexpr auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 stored as one neighbor bitset
/// per vertex. Immutable after construction.
///
/// Storage accepts isolated vertices; the sequence solvers reject them at
/// entry instead.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Throws ParameterError on self-loops,
  /// out-of-range endpoints, or n outside [0, 64]. Repeated edges collapse.
  Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels = {});

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::full(order()); }

  /// Open neighborhood N(v).
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  /// Closed neighborhood N[v].
  VertexSet closed_neighbors(int v) const { return neighbors(v) | VertexSet::single(v); }
  bool has_edge(int u, int v) const { return neighbors(u).contains(v); }
  int degree(int v) const { return neighbors(v).size(); }
  int min_degree() const;
  int max_degree() const;
  int edge_count() const;
  std::vector<Edge> edges() const;
  bool has_isolated_vertex() const;

  /// Display name of v; defaults to the decimal id.
  std::string label(int v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// Same vertex count and identical adjacency; labels are ignored.
  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

struct Bipartition {
  VertexSet left;   // side containing the smallest vertex of each component
  VertexSet right;
};

struct StructuralReport {
  bool connected = false;
  std::optional<Bipartition> bipartition;
  std::optional<int> regular_degree;
  bool open_twin_free = true;
  std::vector<std::pair<int, int>> open_twin_pairs;
  std::vector<int> strong_support_vertices;
  bool is_tree = false;
};

bool is_connected(const Graph& g);
std::optional<Bipartition> bipartition(const Graph& g);
std::optional<int> regular_degree(const Graph& g);
bool is_tree(const Graph& g);
VertexSet leaves(const Graph& g);
/// Vertices with at least two leaf neighbors.
std::vector<int> strong_support_vertices(const Graph& g);
/// Pairs u < v with N(u) = N(v).
std::vector<std::pair<int, int>> open_twin_pairs(const Graph& g);
/// Number of common neighbors |N(u) ∩ N(v)|.
inline int common_neighbor_count(const Graph& g, int u, int v) {
  return (g.neighbors(u) & g.neighbors(v)).size();
}

StructuralReport structural_predicates(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the id in the parent graph of vertex i of `graph`.
  std::vector<int> original;
};

/// G[S] with vertices renumbered in increasing order of their original id.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s);

/// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Graph with vertex i of the result equal to vertex perm[i] of g.
Graph relabel(const Graph& g, std::span<const int> perm);

}  // namespace tds
