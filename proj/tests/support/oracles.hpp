#pragma once

// Slow reference implementations used only by tests. They share no code with
// the library solvers: plain adjacency matrices, explicit sequence
// enumeration, no memoization.

#include <set>
#include <vector>

#include "tds/graph.hpp"
#include "tds/hypergraph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

Matrix adjacency(const tds::Graph& g);

/// Longest legal sequence, enumerated depth-first over (used, dominated).
int grundy_total(const tds::Graph& g);
int grundy_closed(const tds::Graph& g);
/// Lengths of all legal open sequences that end totally dominating.
std::set<int> total_sequence_lengths(const tds::Graph& g);

bool is_total_dominating_set(const Matrix& a, const std::vector<int>& s);
int total_domination(const tds::Graph& g);
int upper_total_domination(const tds::Graph& g);

/// Plain minimax over the dominated set, no memo.
int game_total_domination(const tds::Graph& g);

/// Over all matchings, enumerated edge by edge.
int strong_matching(const tds::Graph& g);
int semistrong_matching(const tds::Graph& g);

/// Sequence checks written from the definitions.
bool legal_open_sequence(const tds::Graph& g, const std::vector<int>& s);
bool legal_closed_sequence(const tds::Graph& g, const std::vector<int>& s);

/// Backtracking search for x_1..x_k, y_1..y_k with x_i ~ y_i, the x's
/// independent, and y_j ~ x_i only when i >= j.
bool has_pair_labeling(const tds::Graph& g);

int grundy_covering(const tds::Hypergraph& h);
int grundy_transversal(const tds::Hypergraph& h);
int edge_cover(const tds::Hypergraph& h);
std::set<int> covering_sequence_lengths(const tds::Hypergraph& h);

}  // namespace oracle
