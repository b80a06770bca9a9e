#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tds/graph.hpp"

namespace tds {

/// Canonical relabeling: isomorphic graphs map to identical graphs.
/// Uses color refinement with individualization, keeping the
/// lexicographically smallest adjacency matrix over all leaves of the search.
Graph canonical_form(const Graph& g);

/// graph6 string of canonical_form(g); equal iff the graphs are isomorphic.
std::string canonical_key(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// All connected graphs of order n up to isomorphism, in canonical form.
/// Every connected graph has a vertex whose removal leaves it connected, so
/// order n is obtained from order n-1 by attaching a new vertex.
std::vector<Graph> connected_graphs(int n);

/// All connected k-regular graphs of order n up to isomorphism.
std::vector<Graph> connected_regular_graphs(int n, int k);

/// All trees of order n up to isomorphism.
std::vector<Graph> all_trees(int n);

/// Uniform labeled random tree via a Prüfer sequence.
Graph random_tree(int n, std::mt19937_64& rng);

/// G(n, p) random graph.
Graph random_graph(int n, double p, std::mt19937_64& rng);

}  // namespace tds
