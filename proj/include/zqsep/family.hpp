#pragma once

// The two-block family of critical graphs.
//
// For even q, odd n = 2k+1 and a base weight gamma, the member graph has
// vertices a_0, a_1..a_k, b_1..b_k (indexed 0, 1..k, k+1..2k).  Vertex a_0 is
// isolated; edges inside the a-block and inside the b-block weigh gamma, and
// the cross edge {a_l, b_m} weighs gamma when l < m and gamma + q/2 otherwise.
// Every member is critical, and these account for all critical graphs up to
// switching isomorphism.

#include <array>
#include <vector>

#include "zqsep/graph.hpp"
#include "zqsep/separability.hpp"

namespace zqsep {

struct FamilyParams {
  int n = 0;      // odd, >= 5
  int q = 0;      // even
  int gamma = 0;  // 0 <= gamma < q
};

WeightedGraph make_family(const FamilyParams& p);

// Re-derives criticality from first principles: the graph itself must be
// nonseparable, every vertex-deleted subgraph separable, and each deletion
// must admit its expected two-element separable witness pair.
struct FamilyWitness {
  int deleted;             // vertex removed from the family graph
  std::array<int, 2> pair; // witness pair, in original vertex numbering
  bool separable = false;
};

struct FamilyReport {
  FamilyParams params;
  bool graph_separable = true;            // must come out false
  std::vector<bool> subgraph_separable;   // per deleted vertex, all true
  std::vector<FamilyWitness> witnesses;   // all separable
  bool critical = false;
};

FamilyReport verify_family_critical(const FamilyParams& p);

}  // namespace zqsep
