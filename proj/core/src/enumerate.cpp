#include "tds/enumerate.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "tds/error.hpp"
#include "tds/graph_io.hpp"

namespace tds {

namespace {

using Cells = std::vector<std::vector<int>>;

/// Equitable refinement: split every cell by the count of neighbors each
/// vertex has in every cell, until stable. Sub-cells are ordered by their
/// count vectors, so the result is isomorphism-invariant.
void refine(const Graph& g, Cells& cells) {
  const int n = g.order();
  std::vector<int> cell_of(n);
  std::vector<std::vector<int>> signature(n);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
    }
    std::vector<VertexSet> members(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) members[c] = VertexSet::of(cells[c]);
    Cells next;
    next.reserve(cells.size());
    for (auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      for (int v : cell) {
        auto& sig = signature[v];
        sig.resize(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) sig[c] = (g.neighbors(v) & members[c]).size();
      }
      std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) { return signature[a] < signature[b]; });
      std::size_t start = 0;
      for (std::size_t i = 1; i <= cell.size(); ++i) {
        if (i == cell.size() || signature[cell[i]] != signature[cell[start]]) {
          next.emplace_back(cell.begin() + static_cast<std::ptrdiff_t>(start),
                            cell.begin() + static_cast<std::ptrdiff_t>(i));
          start = i;
        }
      }
      if (next.back().size() != cell.size()) changed = true;
    }
    cells = std::move(next);
  }
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g) {}

  std::vector<int> run() {
    Cells cells;
    if (g_.order() > 0) {
      // Start from the degree partition, ordered by degree.
      std::vector<int> by_degree(g_.order());
      for (int v = 0; v < g_.order(); ++v) by_degree[v] = v;
      std::stable_sort(by_degree.begin(), by_degree.end(),
                       [&](int a, int b) { return g_.degree(a) < g_.degree(b); });
      cells.push_back(by_degree);
    }
    search(std::move(cells));
    return best_perm_;
  }

 private:
  bool twins(int u, int v) const {
    return (g_.neighbors(u) - VertexSet::single(v)) == (g_.neighbors(v) - VertexSet::single(u));
  }

  void search(Cells cells) {
    refine(g_, cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<int> tried;
    for (int v : cells[target]) {
      // Swapping twins is an automorphism that fixes the current partition,
      // so individualizing a twin of a tried vertex yields the same leaves.
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cells[c]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  void leaf(const Cells& cells) {
    std::vector<int> perm;
    for (const auto& c : cells) perm.push_back(c[0]);
    std::vector<int> position(g_.order());
    for (int i = 0; i < g_.order(); ++i) position[perm[i]] = i;
    std::vector<std::uint64_t> code(g_.order());
    for (int i = 0; i < g_.order(); ++i) {
      std::uint64_t row = 0;
      for (int w : g_.neighbors(perm[i])) row |= std::uint64_t{1} << (63 - position[w]);
      code[i] = row;
    }
    if (best_perm_.empty() || code > best_code_) {
      best_code_ = std::move(code);
      best_perm_ = std::move(perm);
    }
  }

  const Graph& g_;
  std::vector<std::uint64_t> best_code_;
  std::vector<int> best_perm_;
};

std::vector<Graph> dedupe_insert(std::unordered_map<std::string, Graph>& seen, std::vector<std::string>& order) {
  std::vector<Graph> out;
  out.reserve(order.size());
  for (const auto& key : order) out.push_back(seen.at(key));
  return out;
}

/// Attaches a new vertex to every admissible neighbor subset of every graph in
/// `level`, keeping one representative per isomorphism class.
template <typename Admit>
std::vector<Graph> grow(const std::vector<Graph>& level, int max_new_degree, int max_degree, Admit admit) {
  std::unordered_map<std::string, Graph> seen;
  std::vector<std::string> order;
  for (const Graph& g : level) {
    const int m = g.order();
    VertexSet open;
    for (int v = 0; v < m; ++v) {
      if (g.degree(v) < max_degree) open.insert(v);
    }
    const auto edges = g.edges();
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits) {
      const VertexSet s(bits);
      if (!s.is_subset_of(open) || s.size() > max_new_degree) continue;
      std::vector<Edge> extended = edges;
      for (int v : s) extended.emplace_back(v, m);
      Graph h(m + 1, extended);
      if (!admit(h)) continue;
      Graph canon = canonical_form(h);
      std::string key = to_graph6(canon);
      if (seen.emplace(key, std::move(canon)).second) order.push_back(std::move(key));
    }
  }
  std::sort(order.begin(), order.end());
  return dedupe_insert(seen, order);
}

}  // namespace

Graph canonical_form(const Graph& g) {
  const auto perm = Canonizer(g).run();
  Graph plain(g.order(), g.edges());
  return relabel(plain, perm);
}

std::string canonical_key(const Graph& g) { return to_graph6(canonical_form(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_key(a) == canonical_key(b);
}

std::vector<Graph> connected_graphs(int n) {
  if (n < 1) return {};
  std::vector<Graph> level{Graph(1, std::vector<Edge>{})};
  for (int m = 2; m <= n; ++m) {
    level = grow(level, m - 1, m - 1, [](const Graph&) { return true; });
  }
  return level;
}

std::vector<Graph> connected_regular_graphs(int n, int k) {
  if (n < 1 || k < 0 || k >= n || (n * k) % 2 != 0) return {};
  if (n == 1) return {Graph(1, std::vector<Edge>{})};
  if (k == 0) return {};
  std::vector<Graph> level{Graph(1, std::vector<Edge>{})};
  for (int m = 2; m <= n; ++m) {
    // Later vertices each have degree k, so the missing degree of the
    // current graph can be at most k per remaining vertex.
    const int budget = k * (n - m);
    level = grow(level, k, k, [&](const Graph& h) {
      int deficiency = 0;
      for (int v = 0; v < h.order(); ++v) deficiency += k - h.degree(v);
      return deficiency <= budget;
    });
  }
  return level;
}

std::vector<Graph> all_trees(int n) {
  if (n < 1) return {};
  std::vector<Graph> level{Graph(1, std::vector<Edge>{})};
  for (int m = 2; m <= n; ++m) {
    level = grow(level, 1, m, [](const Graph&) { return true; });
  }
  return level;
}

Graph random_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw ParameterError("random_tree requires n >= 1");
  if (n == 1) return Graph(1, std::vector<Edge>{});
  if (n == 2) return Graph(2, std::vector<Edge>{Edge(0, 1)});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> prufer(n - 2);
  for (int& x : prufer) x = pick(rng);
  std::vector<int> degree(n, 1);
  for (int x : prufer) ++degree[x];
  std::vector<Edge> edges;
  for (int x : prufer) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, x);
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.emplace_back(a, v);
      }
    }
  }
  return Graph(n, edges);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace tds
