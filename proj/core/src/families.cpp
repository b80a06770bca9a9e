#include "tds/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "tds/error.hpp"

namespace tds {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ParameterError(message);
}

std::vector<std::string> numbered(const std::string& prefix, int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

int parse_int(std::string_view token) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  require(ec == std::errc{} && ptr == end && !token.empty(),
          "family spec: expected integer, got '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, std::string_view delims) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || delims.find(text[i]) != std::string_view::npos) {
      if (i > start) out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path requires n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle requires n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph requires n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  require(leaves >= 1, "star requires at least one leaf");
  std::vector<Edge> edges;
  std::vector<std::string> labels{"center"};
  for (int i = 1; i <= leaves; ++i) {
    edges.emplace_back(0, i);
    labels.push_back("leaf" + std::to_string(i - 1));
  }
  return Graph(leaves + 1, edges, std::move(labels));
}

Graph complete_multipartite_graph(const std::vector<int>& part_sizes) {
  require(!part_sizes.empty(), "complete multipartite graph requires at least one part");
  std::vector<int> part_of;
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    require(part_sizes[p] >= 1, "complete multipartite parts must be nonempty");
    for (int i = 0; i < part_sizes[p]; ++i) {
      part_of.push_back(static_cast<int>(p));
      labels.push_back("P" + std::to_string(p) + "[" + std::to_string(i) + "]");
    }
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges, std::move(labels));
}

Graph complete_bipartite_graph(int k) {
  require(k >= 1, "K_{k,k} requires k >= 1");
  return complete_multipartite_graph({k, k});
}

Graph family_gm_graph(const std::vector<int>& x_sizes, const std::vector<int>& y_sizes) {
  const int m = static_cast<int>(x_sizes.size());
  require(m >= 3, "family G_m requires m >= 3");
  require(static_cast<int>(y_sizes.size()) == m, "family G_m requires m X-blocks and m Y-blocks");
  std::vector<int> block;  // block index per vertex
  std::vector<bool> is_x;
  std::vector<std::string> labels;
  for (int side = 0; side < 2; ++side) {
    const auto& sizes = side == 0 ? x_sizes : y_sizes;
    for (int i = 0; i < m; ++i) {
      require(sizes[i] >= 1, "family G_m blocks must be nonempty");
      for (int j = 0; j < sizes[i]; ++j) {
        block.push_back(i);
        is_x.push_back(side == 0);
        labels.push_back(std::string(side == 0 ? "X" : "Y") + std::to_string(i + 1) + "[" +
                         std::to_string(j) + "]");
      }
    }
  }
  const int n = static_cast<int>(block.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (is_x[u] != is_x[v] && block[u] != block[v]) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges, std::move(labels));
}

Graph subset_bipartite_graph(int k) {
  require(k >= 2, "G_k requires k >= 2");
  const int a = 2 * k - 1;
  std::vector<std::string> labels = numbered("a", a);
  std::vector<Edge> edges;
  int next = a;
  // k-subsets of A in colexicographic order of their bitmasks.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::string name = "{";
    for (int v : VertexSet(mask)) {
      edges.emplace_back(v, next);
      if (name.size() > 1) name += ",";
      name += std::to_string(v);
    }
    labels.push_back(name + "}");
    ++next;
  }
  return Graph(next, edges, std::move(labels));
}

Graph spider_graph(int k) {
  require(k >= 1, "spider requires k >= 1");
  std::vector<Edge> edges;
  std::vector<std::string> labels{"hub"};
  for (int i = 0; i < k; ++i) {
    const int a = 1 + 2 * i;
    const int b = a + 1;
    edges.emplace_back(0, a);
    edges.emplace_back(0, b);
    edges.emplace_back(a, b);
    labels.push_back("t" + std::to_string(i) + "a");
    labels.push_back("t" + std::to_string(i) + "b");
  }
  return Graph(2 * k + 1, edges, std::move(labels));
}

Graph tree_from_edges(int n, const std::vector<Edge>& edges) {
  require(n >= 1, "tree requires n >= 1");
  Graph g(n, edges);
  require(static_cast<int>(edges.size()) == n - 1 && is_tree(g), "edge list is not a tree");
  return g;
}

Graph petersen_graph() {
  // Vertices are the 2-subsets of {0..4}; adjacent when disjoint.
  std::vector<std::uint64_t> subsets;
  std::vector<std::string> labels;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      subsets.push_back((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
      labels.push_back("{" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
  }
  std::vector<Edge> edges;
  for (int u = 0; u < 10; ++u) {
    for (int v = u + 1; v < 10; ++v) {
      if ((subsets[u] & subsets[v]) == 0) edges.emplace_back(u, v);
    }
  }
  return Graph(10, edges, std::move(labels));
}

Graph build(const GraphFamilySpec& spec) {
  const auto& p = spec.params;
  auto single = [&](const char* name) {
    require(p.size() == 1, std::string(name) + " takes exactly one parameter");
    return p[0];
  };
  switch (spec.family) {
    case Family::path:
      return path_graph(single("path"));
    case Family::cycle:
      return cycle_graph(single("cycle"));
    case Family::complete:
      return complete_graph(single("complete"));
    case Family::star:
      return star_graph(single("star"));
    case Family::complete_multipartite:
      return complete_multipartite_graph(p);
    case Family::complete_bipartite_kk:
      return complete_bipartite_graph(single("K_kk"));
    case Family::family_gm: {
      require(!p.empty(), "family_Gm requires m");
      const int m = p[0];
      require(m >= 3, "family G_m requires m >= 3");
      if (p.size() == 1 || p.size() == 2) {
        const int s = p.size() == 2 ? p[1] : 1;
        return family_gm_graph(std::vector<int>(m, s), std::vector<int>(m, s));
      }
      require(static_cast<int>(p.size()) == 1 + 2 * m,
              "family_Gm takes m, m then one size, or m then 2m block sizes");
      return family_gm_graph(std::vector<int>(p.begin() + 1, p.begin() + 1 + m),
                             std::vector<int>(p.begin() + 1 + m, p.end()));
    }
    case Family::subset_bipartite_gk:
      return subset_bipartite_graph(single("subset_bipartite_Gk"));
    case Family::spider:
      return spider_graph(single("spider"));
    case Family::tree_from_edges: {
      require(!p.empty() && p.size() % 2 == 1, "tree_from_edges takes n followed by endpoint pairs");
      std::vector<Edge> edges;
      for (std::size_t i = 1; i + 1 < p.size(); i += 2) edges.emplace_back(p[i], p[i + 1]);
      return tree_from_edges(p[0], edges);
    }
    case Family::petersen:
      require(p.empty(), "petersen takes no parameters");
      return petersen_graph();
  }
  throw ParameterError("unknown family");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::complete_multipartite: return "complete_multipartite";
    case Family::complete_bipartite_kk: return "K_kk";
    case Family::family_gm: return "family_Gm";
    case Family::subset_bipartite_gk: return "subset_bipartite_Gk";
    case Family::spider: return "spider";
    case Family::tree_from_edges: return "tree_from_edges";
    case Family::petersen: return "petersen";
  }
  return "?";
}

GraphFamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string tag = lower(text.substr(0, colon));
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  GraphFamilySpec spec;
  if (tag == "path") {
    spec.family = Family::path;
  } else if (tag == "cycle") {
    spec.family = Family::cycle;
  } else if (tag == "complete") {
    spec.family = Family::complete;
  } else if (tag == "star") {
    spec.family = Family::star;
  } else if (tag == "complete_multipartite" || tag == "multipartite") {
    spec.family = Family::complete_multipartite;
  } else if (tag == "k_kk" || tag == "kk") {
    spec.family = Family::complete_bipartite_kk;
  } else if (tag == "family_gm" || tag == "gm") {
    spec.family = Family::family_gm;
  } else if (tag == "subset_bipartite_gk" || tag == "gk") {
    spec.family = Family::subset_bipartite_gk;
  } else if (tag == "spider") {
    spec.family = Family::spider;
  } else if (tag == "tree_from_edges" || tag == "tree") {
    spec.family = Family::tree_from_edges;
    int n = 0;
    std::vector<int> ends;
    for (auto pair : split(rest, ",; ")) {
      auto ab = split(pair, "-");
      require(ab.size() == 2, "tree_from_edges: expected u-v pairs");
      for (auto t : ab) {
        ends.push_back(parse_int(t));
        n = std::max(n, ends.back() + 1);
      }
    }
    spec.params.push_back(std::max(n, 1));
    spec.params.insert(spec.params.end(), ends.begin(), ends.end());
    return spec;
  } else if (tag == "petersen") {
    spec.family = Family::petersen;
  } else {
    throw ParameterError("unknown family '" + std::string(text.substr(0, colon)) + "'");
  }
  for (auto token : split(rest, ":, ")) spec.params.push_back(parse_int(token));
  return spec;
}

}  // namespace tds
