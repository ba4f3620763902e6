#pragma once

// Exhaustive census over switching classes.
//
// Classes are enumerated directly in canonical form: vertex 0 isolated and
// the remaining upper triangle lexicographically minimal under the residual
// global shifts.  The candidate space q^C(n-1,2) is streamed in index order;
// the scan is chunked so the OpenMP path and the serial reference path
// produce identical reports for identical parameters.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zqsep/family.hpp"
#include "zqsep/graph.hpp"
#include "zqsep/separability.hpp"

namespace zqsep {

struct CensusOptions {
  std::uint64_t budget = 100'000'000;  // max candidates enumerated exhaustively
  int jobs = 0;                        // OpenMP threads; 0 = library default
  bool parallel = true;                // false = serial reference path
};

// Closed form for the number of switching classes, n >= 3:
// q^(C(n-1,2) - 1) * gcd(2, q).  One class for n <= 2.
std::uint64_t rep_count_formula(int q, int n);

// Streams every canonical representative in candidate-index order (serial).
void enumerate_reps(int q, int n, std::uint64_t budget,
                    const std::function<void(const WeightedGraph&, std::uint64_t)>& fn);

struct FamilyMatch {
  std::uint64_t rep_index;  // position in critical_classes
  int gamma;
  std::vector<int> perm;    // family vertex -> representative vertex
  VertexLabeling labeling;
};

struct Violation {
  std::string kind;
  WeightedGraph graph;
  std::string detail;
};

struct CensusReport {
  int q = 0, n = 0;
  std::uint64_t candidates = 0;       // enumeration size q^C(n-1,2)
  std::uint64_t classes_scanned = 0;
  std::vector<WeightedGraph> critical_classes;
  std::vector<FamilyMatch> matched_family;
  std::vector<Violation> property_violations;
  double wall_ms = 0;  // informational; excluded from canonical serialization
};

// Scans every class, collects the critical ones, and matches each against the
// two-block family over all gamma.  A critical class at odd q, or one that
// matches no family member, lands in property_violations.
CensusReport find_critical(int q, int n, const CensusOptions& opts = {});

enum class CheckName { nss, c2rs, allsep, t2rs, czm };
CheckName parse_check_name(const std::string& name);
std::string check_name_string(CheckName name);

struct SampleSpec {
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
};

struct CheckReport {
  std::string check;
  int q = 0, n = 0;
  bool sampled = false;
  std::uint64_t seed = 0, samples = 0;
  std::uint64_t scanned = 0;
  std::uint64_t premise_instances = 0;
  std::vector<Violation> violations;
  double wall_ms = 0;
};

// Property checks over classes (exhaustive) or seeded samples:
//   nss    - a separable graph of order >= 5 has 0 or 2 nonseparable
//            vertex-deleted subgraphs
//   c2rs   - all subgraphs of orders n-1 and n-2 separable => G separable
//   allsep - all subgraphs of orders 4 and 5 separable => G separable
//   t2rs   - a nonseparable kernel of order x in [4, n-3] whose (x+1)- and
//            (x+2)-order supersets are all separable => G separable
//   czm    - separable with an isolated vertex stays separable under any
//            exchange of two weight values
CheckReport run_check(CheckName name, int q, int n,
                      const std::optional<SampleSpec>& sample,
                      const CensusOptions& opts = {});

}  // namespace zqsep
