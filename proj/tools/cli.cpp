#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tds/characterizations.hpp"
#include "tds/enumerate.hpp"
#include "tds/error.hpp"
#include "tds/families.hpp"
#include "tds/graph_io.hpp"
#include "tds/hypergraph.hpp"
#include "tds/report_json.hpp"
#include "tds/solver.hpp"

namespace tds::cli {

namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string family;
  std::string graph_path;
  std::string hyper_path;
  std::string format = "auto";
  std::string to = "g6";
  std::vector<std::string> invariants;
  bool all = false;
  bool plain = false;
  bool json = false;
  std::optional<int> cap;
  std::uint64_t seed = 1;
  int n = -1;
  int k = -1;
  int limit = -1;
  std::string name;
};

void add_input_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "Family spec, e.g. path:5, petersen, family_Gm:3:2");
  cmd->add_option("--graph", o.graph_path, "Graph file ('-' for stdin)");
  cmd->add_option("--hypergraph", o.hyper_path, "Hypergraph file ('-' for stdin)");
  cmd->add_option("--format", o.format, "Input format")->check(CLI::IsMember({"auto", "g6", "edges", "hyper"}));
  cmd->add_option("--cap", o.cap, "Solver cap on the order")->check(CLI::Range(1, kMaxVertices));
  cmd->add_flag("--json", o.json, "JSON output");
}

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

std::string first_line(const std::string& text) {
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
  return {};
}

Graph load_graph(const Options& o, std::istream& in) {
  if (!o.family.empty()) return build(parse_family_spec(o.family));
  if (o.graph_path.empty()) throw UsageError("no graph given: use --family or --graph");
  const std::string text = read_source(o.graph_path, in);
  GraphFormat format = detect_format(text);
  if (o.format == "g6") format = GraphFormat::graph6;
  if (o.format == "edges") format = GraphFormat::edge_list;
  if (o.format == "hyper") throw UsageError("--format hyper applies to --hypergraph");
  return format == GraphFormat::graph6 ? parse_graph6(first_line(text)) : parse_edge_list(text);
}

bool has_graph(const Options& o) { return !o.family.empty() || !o.graph_path.empty(); }

/// The hypergraph input, or the open-neighborhood hypergraph of the graph input.
Hypergraph load_hypergraph(const Options& o, std::istream& in) {
  if (!o.hyper_path.empty()) return parse_hypergraph(read_source(o.hyper_path, in));
  if (has_graph(o)) return open_neighborhood_hypergraph(load_graph(o, in));
  throw UsageError("no hypergraph given: use --hypergraph, --family or --graph");
}

SolverOptions solver_options(const Options& o, std::ostream& err) {
  SolverOptions s;
  if (o.cap) {
    s.cap = *o.cap;
    err << "solver cap " << s.cap << ": dense memo tables up to " << memo_bytes_estimate(s.cap)
        << " bytes per solve\n";
  }
  return s;
}

std::string seq(const std::vector<int>& s) { return "(" + format_sequence(s) + ")"; }

// ---------------------------------------------------------------------------
// compute

int cmd_compute(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(o, in);
  std::vector<Invariant> selection;
  if (o.all || o.invariants.empty()) {
    selection = all_invariants();
  } else {
    for (const auto& name : o.invariants) {
      if (name == "all") {
        selection = all_invariants();
        break;
      }
      const auto inv = parse_invariant(name);
      if (!inv) throw UsageError("unknown invariant '" + name + "'");
      selection.push_back(*inv);
    }
  }
  const auto report = compute_report(g, selection, solver_options(o, err));
  const json j = to_json(report);
  if (o.plain) {
    out << "graph " << to_graph6(g) << " order " << g.order() << "\n";
    for (const auto& [key, entry] : j.items()) {
      out << key << " = " << entry["value"].get<int>() << "  witness " << entry["witness"].dump() << "\n";
    }
  } else {
    out << json{{"graph", graph_json(g)}, {"invariants", j}}.dump(2) << "\n";
  }
  return kPass;
}

// ---------------------------------------------------------------------------
// verify

struct Verdict {
  bool holds = true;
  std::vector<std::string> lines;
  json detail = json::object();
};

std::string yes(bool b) { return b ? "yes" : "no"; }

Verdict verify_pair_labeling(const Graph& g, const SolverOptions& s) {
  Verdict v;
  const auto grt = grundy_total_domination(g, s);
  const auto l = find_pair_labeling(g, s);
  v.holds = (grt.value == g.order()) == l.has_value();
  v.lines.push_back("gamma_grt = " + std::to_string(grt.value) + ", n = " + std::to_string(g.order()));
  v.detail["gamma_grt"] = grt.value;
  v.detail["labeling"] = nullptr;
  if (l) {
    const bool valid = is_valid_pair_labeling(g, *l) && is_total_dominating_sequence(g, l->witness());
    v.holds = v.holds && valid;
    v.lines.push_back("x = " + seq(l->x) + ", y = " + seq(l->y) + ", valid " + yes(valid));
    v.detail["labeling"] = {{"x", l->x}, {"y", l->y}};
  } else {
    v.lines.push_back("no labeling");
  }
  return v;
}

Verdict verify_multipartite(const Graph& g, const SolverOptions& s) {
  Verdict v;
  const int grt = grundy_total_domination(g, s).value;
  const auto mp = complete_multipartite_partition(g);
  v.holds = (grt == 2) == mp.complete_multipartite;
  v.lines.push_back("gamma_grt = " + std::to_string(grt) + ", complete multipartite " +
                    yes(mp.complete_multipartite));
  auto parts = json::array();
  for (VertexSet p : mp.parts) parts.push_back(p.to_vector());
  v.detail = {{"gamma_grt", grt}, {"complete_multipartite", mp.complete_multipartite}, {"parts", parts}};
  return v;
}

Verdict verify_tree_matching(const Graph& g, const SolverOptions& s) {
  if (!is_tree(g)) throw DomainError("thm5.1 needs a tree");
  Verdict v;
  const int grt = grundy_total_domination(g, s).value;
  const auto m = tree_perfect_matching(g);
  v.holds = (grt == g.order()) == m.has_value();
  v.lines.push_back("gamma_grt = " + std::to_string(grt) + ", perfect matching " + yes(m.has_value()));
  v.detail = {{"gamma_grt", grt}, {"perfect_matching", m.has_value()}};
  if (m) {
    const auto sequence = tree_perfect_matching_sequence(g, *m);
    v.lines.push_back("sequence " + seq(sequence));
    v.detail["sequence"] = sequence;
  }
  return v;
}

Verdict verify_tree_bound(const Graph& g, const SolverOptions& s) {
  Verdict v;
  const auto r = tree_bound_report(g, s);
  v.holds = r.holds;
  if (!r.applicable) {
    v.lines.push_back("not applicable: the tree has a strong support vertex");
  } else {
    v.lines.push_back("gamma_grt = " + std::to_string(r.exact) + ", bound " + std::to_string(r.bound) +
                      ", extremal " + yes(r.extremal) + ", in family " + yes(r.in_family));
  }
  v.detail = {{"applicable", r.applicable}, {"gamma_grt", r.exact}, {"bound", r.bound},
              {"extremal", r.extremal}, {"in_family", r.in_family}};
  if (r.certificate) v.detail["certificate"] = to_json(*r.certificate);
  return v;
}

Verdict verify_regular(const Graph& g, const SolverOptions& s) {
  Verdict v;
  const auto r = regular_greedy_sequence(g);
  const int grt = grundy_total_domination(g, s).value;
  const bool legal = is_total_dominating_sequence(g, r.sequence);
  v.holds = r.meets_bound && legal && grt >= r.required_length && r.small_footprint_claim;
  v.lines.push_back("greedy sequence " + seq(r.sequence) + " length " + std::to_string(r.sequence.size()));
  v.lines.push_back("required " + std::to_string(r.required_length) + ", gamma_grt = " + std::to_string(grt) +
                    ", small footprint claim " + yes(r.small_footprint_claim));
  v.detail = to_json(r);
  v.detail["gamma_grt"] = grt;
  return v;
}

Verdict verify_prune(const Graph& g, const SolverOptions& s) {
  Verdict v;
  const auto grt = grundy_total_domination(g, s);
  const int gr = grundy_domination(g, s).value;
  const auto p = prune_to_closed(g, grt.witness);
  const bool closed = check_legal(g, p.sequence, Neighborhood::closed).legal;
  v.holds = closed && 2 * p.removed.size() <= grt.witness.size() && grt.value <= 2 * gr;
  v.lines.push_back("gamma_grt = " + std::to_string(grt.value) + ", gamma_gr = " + std::to_string(gr));
  v.lines.push_back("removed " + seq(p.removed) + ", closed sequence " + seq(p.sequence));
  v.detail = {{"gamma_grt", grt.value}, {"gamma_gr", gr}, {"removed", p.removed}, {"closed_sequence", p.sequence}};
  return v;
}

Verdict verify_three(const Graph& g, const SolverOptions& s) {
  Verdict v;
  const int gt = total_domination_number(g, s).value;
  const int grt = grundy_total_domination(g, s).value;
  v.holds = !(gt == 3 && grt == 3);
  v.lines.push_back("gamma_t = " + std::to_string(gt) + ", gamma_grt = " + std::to_string(grt));
  v.detail = {{"gamma_t", gt}, {"gamma_grt", grt}};
  return v;
}

Verdict verify_bounds(const Graph& g, const SolverOptions& s) {
  Verdict v;
  const auto r = bound_report(g, s);
  v.holds = r.all_hold();
  for (const auto& c : r.checks) {
    if (!c.applicable) continue;
    v.lines.push_back(std::string(c.holds ? "ok   " : "FAIL ") + c.name + " [" + c.detail + "]" +
                      (c.tight ? " tight" : ""));
  }
  v.detail = to_json(r);
  return v;
}

Verdict verify_reversal(const Hypergraph& h, const SolverOptions& s) {
  Verdict v;
  const auto cover = grundy_covering_number(h, s);
  const auto trans = grundy_transversal_number(h, s);
  const auto c = transversal_to_cover(h, trans.witness);
  const auto t = cover_to_transversal(h, cover.witness);
  const auto cl = check_edge_sequence(h, c);
  const auto tl = check_transversal_sequence(h, t);
  v.holds = cover.value == trans.value && c.size() == trans.witness.size() && t.size() == cover.witness.size() &&
            cl.legal && cl.complete && tl.legal && tl.complete;
  v.lines.push_back("rho_gr = " + std::to_string(cover.value) + ", tau_gr = " + std::to_string(trans.value));
  v.lines.push_back("transversal " + seq(trans.witness) + " -> edges " + seq(c));
  v.lines.push_back("edges " + seq(cover.witness) + " -> transversal " + seq(t));
  v.detail = {{"rho_gr", cover.value}, {"tau_gr", trans.value}, {"cover_witness", cover.witness},
              {"transversal_witness", trans.witness}, {"reversed_cover", c}, {"reversed_transversal", t}};
  return v;
}

Verdict verify_incidence(const Hypergraph& h, const SolverOptions& s) {
  Verdict v;
  const auto c = verify_incidence_theorem(h, s);
  v.holds = c.equal;
  v.lines.push_back("gamma_grt(incidence) = " + std::to_string(c.gamma_grt_of_incidence) +
                    ", 2 rho_gr = " + std::to_string(c.two_rho_gr));
  v.detail = to_json(c);
  return v;
}

Verdict verify_interpolation(const Options& o, std::istream& in, const SolverOptions& s) {
  Verdict v;
  std::map<int, std::vector<int>> witnesses;
  try {
    if (!o.hyper_path.empty()) {
      witnesses = covering_interpolation_witnesses(load_hypergraph(o, in), s);
      v.detail["kind"] = "edge covering sequences";
    } else {
      witnesses = interpolation_witnesses(load_graph(o, in), s);
      v.detail["kind"] = "total dominating sequences";
    }
  } catch (const InvariantViolation& e) {
    v.holds = false;
    v.lines.push_back(e.what());
    return v;
  }
  json w = json::object();
  for (const auto& [len, sq] : witnesses) {
    v.lines.push_back("length " + std::to_string(len) + ": " + seq(sq));
    w[std::to_string(len)] = sq;
  }
  v.detail["witnesses"] = w;
  return v;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const SolverOptions s = solver_options(o, err);
  using GraphCheck = Verdict (*)(const Graph&, const SolverOptions&);
  using HyperCheck = Verdict (*)(const Hypergraph&, const SolverOptions&);
  static const std::map<std::string, GraphCheck> graph_checks{
      {"thm4.2", verify_pair_labeling}, {"thm4.4", verify_multipartite}, {"thm5.1", verify_tree_matching},
      {"thm5.4", verify_tree_bound},    {"thm6.2", verify_regular},      {"thm7.2", verify_prune},
      {"thm3.2", verify_three},         {"bounds", verify_bounds}};
  static const std::map<std::string, HyperCheck> hyper_checks{{"prop8.2", verify_reversal},
                                                              {"thm8.3", verify_incidence}};
  Verdict v;
  if (auto it = graph_checks.find(o.name); it != graph_checks.end()) {
    v = it->second(load_graph(o, in), s);
  } else if (auto hit = hyper_checks.find(o.name); hit != hyper_checks.end()) {
    v = hit->second(load_hypergraph(o, in), s);
  } else if (o.name == "cor8.1") {
    v = verify_interpolation(o, in, s);
  } else {
    throw UsageError("unknown check '" + o.name + "'");
  }
  if (o.json) {
    out << json{{"check", o.name}, {"holds", v.holds}, {"detail", v.detail}}.dump(2) << "\n";
  } else {
    for (const auto& line : v.lines) out << o.name << ": " << line << "\n";
    out << o.name << ": " << (v.holds ? "holds" : "VIOLATED") << "\n";
  }
  return v.holds ? kPass : kViolation;
}

// ---------------------------------------------------------------------------
// generate / sweep sources

int need(int value, const char* flag) {
  if (value < 0) throw UsageError(std::string("missing ") + flag);
  return value;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dash = text.find('-');
  try {
    if (dash == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dash)), std::stoi(text.substr(dash + 1))};
  } catch (const std::exception&) {
    throw UsageError("bad order range '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

/// Graphs named by a source string; `stdin` feeds the g6 source.
std::vector<Graph> graphs_from_source(const std::string& source, const Options& o, std::istream& in) {
  const auto parts = split(source, ':');
  const std::string& kind = parts.empty() ? source : parts[0];
  auto arg = [&](std::size_t i) -> std::string {
    if (parts.size() <= i) throw UsageError("source '" + source + "' is missing a parameter");
    return parts[i];
  };
  auto number = [&](std::size_t i) {
    try {
      return std::stoi(arg(i));
    } catch (const std::invalid_argument&) {
      throw UsageError("source '" + source + "': expected a number");
    }
  };
  std::vector<Graph> out;
  std::mt19937_64 rng(o.seed);
  if (kind == "g6" || kind == "-") return read_graph6_stream(in);
  if (kind == "connected" || kind == "trees") {
    const auto [lo, hi] = parse_range(arg(1));
    for (int n = lo; n <= hi; ++n) {
      auto level = kind == "connected" ? connected_graphs(n) : all_trees(n);
      out.insert(out.end(), level.begin(), level.end());
    }
  } else if (kind == "cubic" || kind == "regular") {
    const int k = kind == "cubic" ? 3 : number(2);
    const auto [lo, hi] = parse_range(arg(1));
    for (int n = lo; n <= hi; ++n) {
      auto level = connected_regular_graphs(n, k);
      out.insert(out.end(), level.begin(), level.end());
    }
  } else if (kind == "random-trees") {
    const int n = number(1);
    const int count = number(2);
    for (int i = 0; i < count; ++i) out.push_back(random_tree(n, rng));
  } else if (kind == "random") {
    const int n = number(1);
    const int count = number(2);
    std::bernoulli_distribution coin(0.3);
    for (int i = 0; i < count; ++i) {
      auto edges = random_tree(n, rng).edges();
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (!coin(rng)) continue;
          const Edge e(u, v);
          if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
        }
      }
      out.push_back(Graph(n, edges));
    }
  } else {
    throw UsageError("unknown source '" + source + "'");
  }
  return out;
}

int cmd_generate(const Options& o, std::istream& in, std::ostream& out) {
  if (o.name == "familyT" || o.name == "family_t") {
    const int n = need(o.n, "--n");
    const auto gen = generate_family_t(n);
    if (!gen.diagnostic.empty()) out << "# " << gen.diagnostic << "\n";
    json all = json::array();
    int emitted = 0;
    for (const auto& m : gen.members) {
      if (o.limit >= 0 && emitted >= o.limit) break;
      ++emitted;
      if (o.json) {
        all.push_back({{"graph", graph_json(m.tree)}, {"certificate", to_json(m.certificate)}});
        continue;
      }
      out << to_graph6(m.tree) << "  seed " << m.certificate.seed.u << "-" << m.certificate.seed.v;
      for (const auto& st : m.certificate.steps) {
        out << "  " << st.support << ">" << st.v1 << "," << st.v2 << "," << st.v3;
      }
      out << "\n";
    }
    if (o.json) out << all.dump(2) << "\n";
    return kPass;
  }
  std::vector<Graph> graphs;
  if (o.family.empty() && o.name.empty()) throw UsageError("generate needs a target or --family");
  if (!o.family.empty()) {
    graphs.push_back(load_graph(o, in));
  } else {
    std::string source = o.name;
    if (o.name == "connected" || o.name == "trees" || o.name == "cubic") {
      source += ":" + std::to_string(need(o.n, "--n"));
    } else if (o.name == "regular") {
      source += ":" + std::to_string(need(o.n, "--n")) + ":" + std::to_string(need(o.k, "--k"));
    } else if (o.name == "random" || o.name == "random-trees") {
      source += ":" + std::to_string(need(o.n, "--n")) + ":" + std::to_string(o.limit < 0 ? 1 : o.limit);
    } else {
      graphs.push_back(build(parse_family_spec(o.name + (o.n >= 0 ? ":" + std::to_string(o.n) : ""))));
      source.clear();
    }
    if (!source.empty()) graphs = graphs_from_source(source, o, in);
  }
  if (o.limit >= 0 && static_cast<int>(graphs.size()) > o.limit) graphs.resize(o.limit);
  if (o.json) {
    json all = json::array();
    for (const auto& g : graphs) all.push_back(graph_json(g));
    out << all.dump(2) << "\n";
  } else {
    for (const auto& g : graphs) out << serialize(g, o.to == "edges" ? GraphFormat::edge_list : GraphFormat::graph6);
  }
  return kPass;
}

// ---------------------------------------------------------------------------
// sweep

std::vector<Failure> hypergraph_checks(const Hypergraph& h) {
  std::vector<Failure> out;
  const auto r = verify_reversal(h, {});
  if (!r.holds) out.push_back({"prop8.2", r.lines.front()});
  const auto c = verify_incidence(h, {});
  if (!c.holds) out.push_back({"thm8.3", c.lines.front()});
  try {
    covering_interpolation_witnesses(h);
  } catch (const InvariantViolation& e) {
    out.push_back({"cor8.1", e.what()});
  }
  return out;
}

int sweep_hypergraphs(const Options& o, int count, std::ostream& out) {
  std::mt19937_64 rng(o.seed);
  int failed = 0;
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<int> pick(1, 6);
    const int x = pick(rng);
    const int m = pick(rng);
    std::vector<VertexSet> edges(m);
    std::bernoulli_distribution coin(0.4);
    for (auto& e : edges) {
      for (int v = 0; v < x; ++v) {
        if (coin(rng)) e.insert(v);
      }
      if (e.empty()) e.insert(static_cast<int>(rng() % x));
    }
    for (int v = 0; v < x; ++v) {
      bool covered = false;
      for (auto e : edges) covered = covered || e.contains(v);
      if (!covered) edges[rng() % m].insert(v);
    }
    const Hypergraph h(x, edges);
    const auto failures = hypergraph_checks(h);
    if (failures.empty()) continue;
    ++failed;
    for (const auto& f : failures) out << "counterexample hypergraph " << f.check << ": " << f.detail << "\n";
    out << to_hypergraph_text(h);
  }
  out << "sweep hyper: checked " << count << ", failed " << failed << "\n";
  return failed == 0 ? kPass : kViolation;
}

int cmd_sweep(const Options& o, std::istream& in, std::ostream& out) {
  if (o.name.rfind("hyper", 0) == 0) {
    const auto parts = split(o.name, ':');
    return sweep_hypergraphs(o, parts.size() > 1 ? std::stoi(parts[1]) : 200, out);
  }
  auto graphs = graphs_from_source(o.name, o, in);
  if (o.limit >= 0 && static_cast<int>(graphs.size()) > o.limit) graphs.resize(o.limit);
  std::ostringstream dumps;
  const auto summary = run_sweep(graphs, standard_checks, o.json ? dumps : out);
  if (o.json) {
    json failures = json::array();
    std::istringstream lines(dumps.str());
    for (std::string line; std::getline(lines, line);) failures.push_back(line);
    out << json{{"source", o.name}, {"checked", summary.checked}, {"skipped", summary.skipped},
                {"failed", summary.failed}, {"counterexamples", failures}}
               .dump(2)
        << "\n";
  } else {
    out << "sweep " << o.name << ": checked " << summary.checked << ", skipped " << summary.skipped
        << ", failed " << summary.failed << "\n";
  }
  return summary.failed == 0 ? kPass : kViolation;
}

// ---------------------------------------------------------------------------
// convert

int cmd_convert(const Options& o, std::istream& in, std::ostream& out) {
  if (!o.hyper_path.empty()) {
    const Hypergraph h = parse_hypergraph(read_source(o.hyper_path, in));
    if (o.to == "hyper") {
      out << to_hypergraph_text(h);
    } else {
      out << serialize(incidence_graph(h), o.to == "edges" ? GraphFormat::edge_list : GraphFormat::graph6);
    }
    return kPass;
  }
  const Graph g = load_graph(o, in);
  if (o.to == "hyper") {
    out << to_hypergraph_text(open_neighborhood_hypergraph(g));
  } else {
    out << serialize(g, o.to == "edges" ? GraphFormat::edge_list : GraphFormat::graph6);
  }
  return kPass;
}

}  // namespace

SweepSummary run_sweep(const std::vector<Graph>& graphs, const GraphChecker& checker, std::ostream& out) {
  SweepSummary s;
  for (const auto& g : graphs) {
    if (g.order() == 0 || g.has_isolated_vertex()) {
      ++s.skipped;
      continue;
    }
    ++s.checked;
    const auto failures = checker(g);
    if (failures.empty()) continue;
    ++s.failed;
    for (const auto& f : failures) out << "counterexample " << to_graph6(g) << " " << f.check << ": " << f.detail << "\n";
  }
  return s;
}

std::vector<Failure> standard_checks(const Graph& g) {
  std::vector<Failure> out;
  const auto report = bound_report(g);
  for (const auto& c : report.checks) {
    if (c.applicable && !c.holds) out.push_back({c.name, c.detail});
  }
  const int grt = report.invariants.gamma_grt->value;
  const int rho = grundy_covering_number(open_neighborhood_hypergraph(g)).value;
  if (rho != grt) {
    out.push_back({"rho_gr of open neighborhoods = gamma_grt", std::to_string(rho) + " " + std::to_string(grt)});
  }
  const auto k = regular_degree(g);
  const bool kkk = k && bipartition(g) && g.order() == 2 * *k;
  if (k && *k >= 3 && !kkk && is_connected(g)) {
    const auto r = regular_greedy_sequence(g);
    if (!r.meets_bound || !is_total_dominating_sequence(g, r.sequence)) {
      out.push_back({"regular greedy construction", seq(r.sequence)});
    }
  }
  if (is_tree(g)) {
    if (const auto m = tree_perfect_matching(g)) {
      const auto s = tree_perfect_matching_sequence(g, *m);
      if (static_cast<int>(s.size()) != g.order()) out.push_back({"tree matching sequence", seq(s)});
    }
  }
  try {
    interpolation_witnesses(g);
  } catch (const InvariantViolation& e) {
    out.push_back({"interpolation", e.what()});
  }
  return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Total dominating sequences: exact invariants, theorem checks, generators"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  Options o;

  auto* compute = app.add_subcommand("compute", "Compute invariants with certificates");
  add_input_flags(compute, o);
  compute->add_option("--invariant", o.invariants, "gt, Gt, gtg, grt, gr, nus, nuss or all")
      ->check(CLI::IsMember({"gt", "Gt", "gtg", "grt", "gr", "nus", "nuss", "all"}));
  compute->add_flag("--all", o.all, "All invariants");
  compute->add_flag("--plain", o.plain, "Text instead of JSON");

  auto* verify = app.add_subcommand("verify", "Run a theorem checker; exit 1 on violation");
  verify->add_option("check", o.name, "thm3.2 thm4.2 thm4.4 thm5.1 thm5.4 thm6.2 thm7.2 prop8.2 thm8.3 cor8.1 bounds")
      ->required();
  add_input_flags(verify, o);

  auto* generate = app.add_subcommand("generate", "Emit family members");
  generate->add_option("what", o.name, "familyT, connected, trees, cubic, regular, random, random-trees, or a family");
  add_input_flags(generate, o);
  generate->add_option("--n", o.n, "Order");
  generate->add_option("--k", o.k, "Degree");
  generate->add_option("--limit", o.limit, "Maximum number of outputs");
  generate->add_option("--seed", o.seed, "Random seed");
  generate->add_option("--to", o.to, "Output format")->check(CLI::IsMember({"g6", "edges"}));

  auto* sweep = app.add_subcommand("sweep", "Run the property suite over a graph source");
  sweep->add_option("source", o.name,
                    "connected:N[-M], trees:N[-M], cubic:N[-M], regular:N:K, random:N:COUNT, "
                    "random-trees:N:COUNT, hyper[:COUNT], g6 (stdin)")
      ->required();
  sweep->add_option("--seed", o.seed, "Random seed");
  sweep->add_option("--limit", o.limit, "Maximum number of graphs");
  sweep->add_flag("--json", o.json, "JSON summary");

  auto* convert = app.add_subcommand("convert", "Translate between formats");
  add_input_flags(convert, o);
  convert->add_option("--to", o.to, "Output format")->check(CLI::IsMember({"g6", "edges", "hyper"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(o, in, out, err);
    if (verify->parsed()) return cmd_verify(o, in, out, err);
    if (generate->parsed()) return cmd_generate(o, in, out);
    if (sweep->parsed()) return cmd_sweep(o, in, out);
    if (convert->parsed()) return cmd_convert(o, in, out);
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const InvariantViolation& e) {
    err << "violation: " << e.what() << "\n";
    return kViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace tds::cli
