#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tds/graph.hpp"

namespace tds {

enum class Family {
  path,
  cycle,
  complete,
  star,
  complete_multipartite,
  complete_bipartite_kk,
  family_gm,
  subset_bipartite_gk,
  spider,
  tree_from_edges,
  petersen,
};

/// A named construction plus its integer parameters.
///
/// Parameter layout per family:
///   path, cycle, complete        {n}
///   star                         {leaves}          (K_{1,leaves})
///   complete_multipartite        {part sizes...}
///   complete_bipartite_kk        {k}
///   family_gm                    {m} | {m, s} | {m, |X_1|..|X_m|, |Y_1|..|Y_m|}
///   subset_bipartite_gk          {k}
///   spider                       {k}               (k triangles sharing a vertex)
///   tree_from_edges              {n, u_1, v_1, u_2, v_2, ...}
///   petersen                     {}
struct GraphFamilySpec {
  Family family = Family::path;
  std::vector<int> params;
};

Graph build(const GraphFamilySpec& spec);

/// Parses "path:5", "complete_multipartite:2,3", "family_Gm:3:2",
/// "tree_from_edges:0-1,1-2,1-3", "petersen", ... Throws ParameterError.
GraphFamilySpec parse_family_spec(std::string_view text);
std::string family_name(Family f);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph complete_multipartite_graph(const std::vector<int>& part_sizes);
Graph complete_bipartite_graph(int k);
/// Bipartite X ∪ Y with x ∈ X_i adjacent to y ∈ Y_j exactly when i != j.
Graph family_gm_graph(const std::vector<int>& x_sizes, const std::vector<int>& y_sizes);
/// A = {2k-1 elements}, B = all k-subsets of A, element adjacent to the subsets containing it.
Graph subset_bipartite_graph(int k);
/// k triangles identified at a common vertex (order 2k+1); the hub is vertex 0.
Graph spider_graph(int k);
Graph tree_from_edges(int n, const std::vector<Edge>& edges);
/// Kneser graph K(5,2).
Graph petersen_graph();

}  // namespace tds
