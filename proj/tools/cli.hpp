#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "tds/graph.hpp"

namespace tds::cli {

enum ExitCode : int { kPass = 0, kViolation = 1, kUsage = 2, kCapacity = 3 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// One failed check on one instance.
struct Failure {
  std::string check;
  std::string detail;
};

/// Returns the failed checks of a graph; empty when everything holds.
using GraphChecker = std::function<std::vector<Failure>(const Graph&)>;

struct SweepSummary {
  int checked = 0;
  int skipped = 0;
  int failed = 0;
};

/// Applies `checker` to every graph in order. Each failing graph is dumped as
///     counterexample <graph6> <check>: <detail>
/// so the dump can be piped back through `verify` or `sweep g6`.
SweepSummary run_sweep(const std::vector<Graph>& graphs, const GraphChecker& checker, std::ostream& out);

/// The checker behind `sweep`: bound table, characterizations, and the
/// open-neighborhood hypergraph correspondence.
std::vector<Failure> standard_checks(const Graph& g);

}  // namespace tds::cli
