#include "cutbench/report_json.hpp"

#include "cutbench/graph6.hpp"

namespace cutbench {

using nlohmann::json;

namespace {

json set_json(VertexSet s) { return json(s.members()); }

VertexSet set_from(const json& j) {
  VertexSet s;
  for (int v : j.get<std::vector<int>>()) {
    if (v < 0 || v >= kMaxOrder) throw std::invalid_argument("vertex out of range in certificate");
    s = s.with(v);
  }
  return s;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::vector<Edge> edges_from(const json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return out;
}

}  // namespace

json certificate_to_json(const Certificate& c) {
  json j;
  j["type"] = "certificate";
  j["graph"] = c.graph_id;
  j["n"] = c.graph_id.empty() ? 0 : static_cast<unsigned char>(c.graph_id[0]) - 63;
  j["checker"] = c.checker;
  j["k"] = c.k;
  j["premises_hold"] = c.premises_hold;
  j["verdict"] = to_string(c.verdict);
  if (c.witness_set) {
    j["witness"] = {{"vertices", set_json(*c.witness_set)}};
  } else if (c.witness_matching) {
    j["witness"] = {{"matching", edges_json(c.witness_matching->pairs)}};
  } else {
    j["witness"] = nullptr;
  }
  json evidence = json::array();
  for (const Separation& s : c.evidence) {
    json comps = json::array();
    for (VertexSet comp : s.components) comps.push_back(set_json(comp));
    evidence.push_back({{"removed_vertices", set_json(s.removed_vertices)},
                        {"removed_edges", edges_json(s.removed_edges)},
                        {"components", comps}});
  }
  j["evidence"] = evidence;
  j["detail"] = c.detail;
  return j;
}

Certificate certificate_from_json(const json& j) {
  if (j.value("type", "") != "certificate") throw std::invalid_argument("not a certificate object");
  Certificate c;
  c.graph_id = j.at("graph").get<std::string>();
  c.checker = j.at("checker").get<std::string>();
  c.k = j.at("k").get<int>();
  c.premises_hold = j.at("premises_hold").get<bool>();
  c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  const json& w = j.at("witness");
  if (w.is_object()) {
    if (w.contains("vertices")) c.witness_set = set_from(w.at("vertices"));
    if (w.contains("matching")) c.witness_matching = Matching{edges_from(w.at("matching"))};
  }
  for (const auto& e : j.at("evidence")) {
    Separation s;
    s.removed_vertices = set_from(e.at("removed_vertices"));
    s.removed_edges = edges_from(e.at("removed_edges"));
    for (const auto& comp : e.at("components")) s.components.push_back(set_from(comp));
    c.evidence.push_back(std::move(s));
  }
  c.detail = j.at("detail").get<std::string>();
  return c;
}

json report_to_json(const SweepReport& r, bool with_run_metadata) {
  json j;
  j["type"] = "report";
  j["checker"] = r.checker;
  j["k"] = r.params.k;
  if (r.checker == "special-periphery") {
    j["diameter"] = r.params.diameter;
    j["periphery_size"] = r.params.periphery_size;
  }
  j["n_range"] = {r.n_min, r.n_max};
  j["graphs_examined"] = r.graphs_examined;
  j["premises_held"] = r.premises_held;
  j["witnesses"] = r.witnesses;
  j["examined_by_order"] = r.examined_by_order;
  j["satisfiers"] = r.satisfiers;
  j["violations"] = r.violations;
  if (with_run_metadata) {
    j["elapsed_ms"] = r.elapsed_ms;
    j["worker_count"] = r.worker_count;
  }
  return j;
}

std::string json_line(const json& j) { return j.dump(); }

}  // namespace cutbench
