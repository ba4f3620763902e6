#pragma once

// JSON wire formats for every public object and report.
//
// Serialization is canonical: nlohmann::json orders keys alphabetically and
// canonical_dump appends a trailing newline, so identical inputs produce
// byte-identical output.  Wall-clock times are deliberately not part of any
// serialized report.

#include <string>

#include "json.hpp"
#include "zqsep/census.hpp"
#include "zqsep/extension.hpp"
#include "zqsep/family.hpp"
#include "zqsep/graph.hpp"
#include "zqsep/polynomial.hpp"
#include "zqsep/quasigroup.hpp"
#include "zqsep/separability.hpp"

namespace zqsep {

nlohmann::json to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VertexLabeling& lab);
VertexLabeling labeling_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SeparationCertificate& cert);

nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FnTable& t);
FnTable table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PartialExtension& e);
PartialExtension extension_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QuasigroupTable& t);
QuasigroupTable qg_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FamilyReport& r);
nlohmann::json to_json(const Violation& v);
nlohmann::json to_json(const FamilyMatch& m);
nlohmann::json to_json(const CensusReport& r);
nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const ExtensionSeparation& s);
nlohmann::json to_json(const QgSplit& s);
nlohmann::json to_json(const RetractReport& r);

// Two-space indent plus trailing newline; the byte format reports are pinned
// against.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace zqsep
