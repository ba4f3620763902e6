#include "zqsep/json_io.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace zqsep {
namespace {

using nlohmann::json;

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw std::invalid_argument(std::string("missing integer field: ") + key);
  return j[key].get<int>();
}

const json& require_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw std::invalid_argument(std::string("missing array field: ") + key);
  return j[key];
}

}  // namespace

json to_json(const WeightedGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e[0], e[1], e[2]});
  return {{"q", g.q()}, {"n", g.n()}, {"edges", edges}};
}

WeightedGraph graph_from_json(const json& j) {
  const int q = require_int(j, "q"), n = require_int(j, "n");
  std::vector<std::array<int, 3>> edges;
  for (const auto& e : require_array(j, "edges")) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("edge must be a [u, v, w] triple");
    edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
  }
  return make_graph(q, n, edges);
}

json to_json(const VertexLabeling& lab) {
  json labels = json::array();
  for (auto l : lab.labels) labels.push_back(static_cast<int>(l));
  return {{"q", lab.q}, {"labels", labels}};
}

VertexLabeling labeling_from_json(const json& j) {
  VertexLabeling lab;
  lab.q = require_int(j, "q");
  if (lab.q < 2) throw std::invalid_argument("q must be at least 2");
  for (const auto& l : require_array(j, "labels")) {
    const int v = l.get<int>();
    if (v < 0 || v >= lab.q) throw std::invalid_argument("label out of range");
    lab.labels.push_back(static_cast<std::uint8_t>(v));
  }
  return lab;
}

json to_json(const SeparationCertificate& cert) {
  return {{"w", cert.W}, {"labeling", to_json(cert.labeling)}};
}

json to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [exps, coef] : p.terms()) {
    json e = json::array();
    for (auto x : exps) e.push_back(static_cast<int>(x));
    terms.push_back({{"exps", e}, {"coef", coef}});
  }
  return {{"q", p.q()}, {"nvars", p.nvars()}, {"terms", terms}};
}

Poly poly_from_json(const json& j) {
  Poly p(require_int(j, "q"), require_int(j, "nvars"));
  for (const auto& t : require_array(j, "terms")) {
    std::vector<int> exps;
    for (const auto& e : require_array(t, "exps")) exps.push_back(e.get<int>());
    p.add_term(exps, require_int(t, "coef"));
  }
  return p;
}

json to_json(const FnTable& t) {
  json values = json::array();
  for (auto v : t.values) values.push_back(static_cast<int>(v));
  return {{"q", t.q}, {"n", t.n}, {"values", values}};
}

FnTable table_from_json(const json& j) {
  const int q = require_int(j, "q"), n = require_int(j, "n");
  FnTable t = make_table(q, n);
  const auto& values = require_array(j, "values");
  if (values.size() != t.values.size())
    throw std::invalid_argument("value list has the wrong length");
  for (size_t i = 0; i < t.values.size(); ++i) {
    const int v = values[i].get<int>();
    if (v < 0 || v >= q) throw std::invalid_argument("table value out of range");
    t.values[i] = static_cast<std::uint8_t>(v);
  }
  return t;
}

json to_json(const PartialExtension& e) {
  return {{"f", to_json(e.f)}, {"a", e.a}};
}

PartialExtension extension_from_json(const json& j) {
  if (!j.contains("f")) throw std::invalid_argument("missing field: f");
  return make_extension(table_from_json(j["f"]), require_int(j, "a"));
}

json to_json(const QuasigroupTable& t) {
  json values = json::array();
  for (auto v : t.values) values.push_back(static_cast<int>(v));
  return {{"m", t.m}, {"n", t.n}, {"values", values}};
}

QuasigroupTable qg_from_json(const json& j) {
  const int m = require_int(j, "m"), n = require_int(j, "n");
  QuasigroupTable t = make_qg_table(m, n);
  const auto& values = require_array(j, "values");
  if (values.size() != t.values.size())
    throw std::invalid_argument("value list has the wrong length");
  for (size_t i = 0; i < t.values.size(); ++i) {
    const int v = values[i].get<int>();
    if (v < 0 || v >= m) throw std::invalid_argument("table value out of range");
    t.values[i] = static_cast<std::uint16_t>(v);
  }
  return t;
}

json to_json(const FamilyReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back({{"deleted", w.deleted},
                         {"pair", {w.pair[0], w.pair[1]}},
                         {"separable", w.separable}});
  json subs = json::array();
  for (bool b : r.subgraph_separable) subs.push_back(b);
  return {{"n", r.params.n},
          {"q", r.params.q},
          {"gamma", r.params.gamma},
          {"graph_separable", r.graph_separable},
          {"subgraph_separable", subs},
          {"witnesses", witnesses},
          {"critical", r.critical}};
}

json to_json(const Violation& v) {
  return {{"kind", v.kind}, {"graph", to_json(v.graph)}, {"detail", v.detail}};
}

json to_json(const FamilyMatch& m) {
  return {{"rep_index", m.rep_index},
          {"gamma", m.gamma},
          {"perm", m.perm},
          {"labeling", to_json(m.labeling)}};
}

json to_json(const CensusReport& r) {
  json classes = json::array();
  for (const auto& g : r.critical_classes) classes.push_back(to_json(g));
  json matches = json::array();
  for (const auto& m : r.matched_family) matches.push_back(to_json(m));
  json violations = json::array();
  for (const auto& v : r.property_violations) violations.push_back(to_json(v));
  return {{"q", r.q},
          {"n", r.n},
          {"candidates", r.candidates},
          {"classes_scanned", r.classes_scanned},
          {"critical_classes", classes},
          {"matched_family", matches},
          {"property_violations", violations}};
}

json to_json(const CheckReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  return {{"check", r.check},
          {"q", r.q},
          {"n", r.n},
          {"sampled", r.sampled},
          {"seed", r.seed},
          {"samples", r.samples},
          {"scanned", r.scanned},
          {"premise_instances", r.premise_instances},
          {"violations", violations}};
}

namespace {

json to_json(const SplitPart& p) {
  return {{"args", p.args}, {"table", to_json(p.table)}};
}

}  // namespace

json to_json(const ExtensionSeparation& s) {
  return {{"w_args", s.w_args},
          {"part_w", to_json(s.split.part_w)},
          {"part_u", to_json(s.split.part_u)}};
}

json to_json(const QgSplit& s) {
  json inv = s.inverted_at ? json(*s.inverted_at) : json(nullptr);
  return {{"w", s.w},
          {"inverted_at", inv},
          {"inner_positions", s.inner_positions},
          {"h", to_json(s.h)},
          {"g", to_json(s.g)}};
}

json to_json(const RetractReport& r) {
  return {{"q", r.q},
          {"n", r.n},
          {"a", r.a},
          {"retracts", r.retracts},
          {"retracts_separable", r.retracts_separable},
          {"premise_holds", r.premise_holds},
          {"quasigroup_separable", r.quasigroup_separable},
          {"violation", r.violation}};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace zqsep
