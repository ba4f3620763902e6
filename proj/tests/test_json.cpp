#include <string>

#include "doctest.h"
#include "oracle_support.hpp"
#include "zqsep/census.hpp"
#include "zqsep/extension.hpp"
#include "zqsep/json_io.hpp"
#include "zqsep/quasigroup.hpp"

using namespace zqsep;
using nlohmann::json;

TEST_CASE("graphs survive the JSON round trip") {
  Lcg64 rng(501);
  for (int q : {2, 3, 5}) {
    const auto g = testsupport::random_graph(q, 5, rng);
    const auto back = graph_from_json(json::parse(canonical_dump(to_json(g))));
    CHECK(back == g);
  }
}

TEST_CASE("graph parsing rejects malformed documents") {
  CHECK_THROWS_AS(graph_from_json(json::parse("{}")), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"q": 3, "n": 3})")), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"q": 3, "n": 3, "edges": [[0, 1]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"q": 3, "n": 3, "edges": [[0, 1, 1], [1, 0, 2]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"q": "3", "n": 3, "edges": []})")),
                  std::invalid_argument);
}

TEST_CASE("labelings round-trip and reject out-of-range labels") {
  const VertexLabeling lab{4, {0, 3, 2}};
  CHECK(labeling_from_json(to_json(lab)) == lab);
  CHECK_THROWS_AS(labeling_from_json(json::parse(R"({"q": 3, "labels": [0, 3]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(labeling_from_json(json::parse(R"({"q": 1, "labels": []})")),
                  std::invalid_argument);
}

TEST_CASE("certificates serialize the set and the labeling") {
  const WeightedGraph g(3, 4);
  const auto cert = is_separable(g);
  REQUIRE(cert.has_value());
  const json j = to_json(*cert);
  CHECK(j["w"] == json::array({0, 1}));
  CHECK(labeling_from_json(j["labeling"]) == cert->labeling);
}

TEST_CASE("polynomials and tables round-trip") {
  Lcg64 rng(503);
  const auto p = random_quadratic(3, 3, rng);
  CHECK(poly_from_json(to_json(p)) == p);

  FnTable t = make_table(3, 2);
  for (auto& v : t.values) v = static_cast<std::uint8_t>(rng.next_mod(3));
  CHECK(table_from_json(to_json(t)) == t);

  const auto e = make_extension(t, 2);
  CHECK(extension_from_json(to_json(e)) == e);

  const auto qg = build_qfa(t, 1);
  CHECK(qg_from_json(to_json(qg)) == qg);
}

TEST_CASE("table parsing validates length and range") {
  CHECK_THROWS_AS(table_from_json(json::parse(R"({"q": 3, "n": 2, "values": [0, 1]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      table_from_json(json::parse(R"({"q": 2, "n": 1, "values": [0, 2]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(qg_from_json(json::parse(R"({"m": 2, "n": 1, "values": [0]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(qg_from_json(json::parse(R"({"m": 2, "n": 1, "values": [0, 2]})")),
                  std::invalid_argument);
}

TEST_CASE("canonical dumps are deterministic, alphabetical, and newline-terminated") {
  const WeightedGraph g = make_family({5, 2, 0});
  const std::string s1 = canonical_dump(to_json(g));
  const std::string s2 = canonical_dump(to_json(g));
  CHECK(s1 == s2);
  CHECK(s1.back() == '\n');
  const auto p_edges = s1.find("\"edges\"");
  const auto p_n = s1.find("\"n\"");
  const auto p_q = s1.find("\"q\"");
  REQUIRE(p_edges != std::string::npos);
  REQUIRE(p_n != std::string::npos);
  REQUIRE(p_q != std::string::npos);
  CHECK(p_edges < p_n);
  CHECK(p_n < p_q);
}

TEST_CASE("reports never serialize wall-clock time") {
  CensusReport census;
  census.q = 2;
  census.n = 5;
  census.wall_ms = 123.4;
  const json jc = to_json(census);
  CHECK_FALSE(jc.contains("wall_ms"));
  for (const char* key :
       {"q", "n", "candidates", "classes_scanned", "critical_classes", "matched_family",
        "property_violations"})
    CHECK(jc.contains(key));

  CheckReport check;
  check.check = "nss";
  check.wall_ms = 55.5;
  const json jk = to_json(check);
  CHECK_FALSE(jk.contains("wall_ms"));
  for (const char* key : {"check", "q", "n", "sampled", "seed", "samples", "scanned",
                          "premise_instances", "violations"})
    CHECK(jk.contains(key));
}

TEST_CASE("family and retract reports expose their verdict fields") {
  const json jf = to_json(verify_family_critical({5, 2, 1}));
  CHECK(jf["critical"] == true);
  CHECK(jf["graph_separable"] == false);
  CHECK(jf["gamma"] == 1);
  CHECK(jf["witnesses"].size() == 5);

  const json jr = to_json(verify_retract_corollary(make_table(3, 3), 0));
  for (const char* key : {"q", "n", "a", "retracts", "retracts_separable", "premise_holds",
                          "quasigroup_separable", "violation"})
    CHECK(jr.contains(key));
  CHECK(jr["violation"] == false);
}

TEST_CASE("splits serialize their parts and optional inversion") {
  const auto t = build_qfa(make_table(3, 3), 0);
  const auto split = is_w_separable_qg(t, std::vector<int>{1, 2});
  REQUIRE(split.has_value());
  json js = to_json(*split);
  CHECK(js["inverted_at"].is_null());
  CHECK(qg_from_json(js["h"]) == split->h);
  CHECK(qg_from_json(js["g"]) == split->g);

  const auto inv = is_w_separable_qg(t, std::vector<int>{0, 1});
  REQUIRE(inv.has_value());
  CHECK(to_json(*inv)["inverted_at"] == 2);

  const auto e = make_extension(make_table(3, 3), 0);
  const auto sep = is_separable_extension(e);
  REQUIRE(sep.has_value());
  const json je = to_json(*sep);
  CHECK(je["w_args"] == json::array({0, 1}));
  CHECK(table_from_json(je["part_w"]["table"]) == sep->split.part_w.table);
  CHECK(je["part_u"]["args"] == json::array({2, 3}));
}

TEST_CASE("violations carry their kind, graph, and detail") {
  Violation v{"nss", WeightedGraph(2, 5), "example detail"};
  const json j = to_json(v);
  CHECK(j["kind"] == "nss");
  CHECK(j["detail"] == "example detail");
  CHECK(graph_from_json(j["graph"]) == v.graph);
}
