#include "tds/report_json.hpp"

#include "tds/graph_io.hpp"

namespace tds {

namespace {

nlohmann::json set_json(VertexSet s) { return s.to_vector(); }

nlohmann::json matching_json(const Matching& m) {
  auto out = nlohmann::json::array();
  for (const Edge& e : m) out.push_back({e.u, e.v});
  return out;
}

void put(nlohmann::json& out, const InvariantReport& r, const std::string& key, int value,
         nlohmann::json witness) {
  nlohmann::json entry{{"value", value}, {"witness", std::move(witness)}};
  if (auto it = r.micros.find(key); it != r.micros.end()) entry["micros"] = it->second;
  out[key] = std::move(entry);
}

}  // namespace

nlohmann::json to_json(const InvariantReport& r) {
  auto out = nlohmann::json::object();
  if (r.gamma_t) put(out, r, "gamma_t", r.gamma_t->value, set_json(r.gamma_t->witness));
  if (r.upper_gamma_t) put(out, r, "Gamma_t", r.upper_gamma_t->value, set_json(r.upper_gamma_t->witness));
  if (r.gamma_tg) put(out, r, "gamma_tg", r.gamma_tg->value, r.gamma_tg->trace);
  if (r.gamma_grt) put(out, r, "gamma_grt", r.gamma_grt->value, r.gamma_grt->witness);
  if (r.gamma_gr) put(out, r, "gamma_gr", r.gamma_gr->value, r.gamma_gr->witness);
  if (r.nu_s) put(out, r, "nu_s", r.nu_s->value, matching_json(r.nu_s->witness));
  if (r.nu_ss) put(out, r, "nu_ss", r.nu_ss->value, matching_json(r.nu_ss->witness));
  return out;
}

nlohmann::json graph_json(const Graph& g) {
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"order", g.order()}, {"graph6", to_graph6(g)}, {"edges", std::move(edges)}};
}

nlohmann::json to_json(const BoundReport& report) {
  auto checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"applicable", c.applicable},
                      {"holds", c.holds},
                      {"tight", c.tight},
                      {"detail", c.detail}});
  }
  return {{"invariants", to_json(report.invariants)}, {"checks", std::move(checks)},
          {"all_hold", report.all_hold()}};
}

nlohmann::json to_json(const FamilyTCertificate& certificate) {
  auto steps = nlohmann::json::array();
  for (const auto& s : certificate.steps) {
    steps.push_back({{"support", s.support}, {"path", {s.v1, s.v2, s.v3}}});
  }
  return {{"seed", {certificate.seed.u, certificate.seed.v}}, {"steps", std::move(steps)}};
}

nlohmann::json to_json(const RegularGreedyResult& r) {
  auto seeds = nlohmann::json::array();
  for (const auto& [a, b] : r.seeds) seeds.push_back({a, b});
  return {{"sequence", r.sequence},
          {"length", r.sequence.size()},
          {"degree", r.degree},
          {"bipartite", r.bipartite},
          {"required_length", r.required_length},
          {"meets_bound", r.meets_bound},
          {"footprint_counts", r.footprint_counts},
          {"seeds", std::move(seeds)},
          {"small_footprint_claim", r.small_footprint_claim}};
}

nlohmann::json to_json(const IncidenceCheck& c) {
  return {{"gamma_grt_of_incidence", c.gamma_grt_of_incidence},
          {"rho_gr", c.rho_gr},
          {"two_rho_gr", c.two_rho_gr},
          {"equal", c.equal},
          {"graph_witness", c.graph_witness},
          {"cover_witness", c.cover_witness}};
}

}  // namespace tds
