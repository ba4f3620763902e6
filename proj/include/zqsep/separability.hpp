#pragma once

// Separable vertex sets and critical graphs.
//
// W is separable in G when some switching removes every edge between W and
// its complement.  Sizes 0, 1, n-1, n are always separable; a graph is called
// separable when some W of size 2..n-2 is, and critical when it is not
// separable but every vertex-deleted subgraph is.

#include <optional>
#include <span>
#include <vector>

#include "zqsep/graph.hpp"

namespace zqsep {

struct SeparationCertificate {
  std::vector<int> W;       // sorted
  VertexLabeling labeling;  // switch_graph(g, labeling) has no W-crossing edges
};

// Decides one set by propagation: the cross constraints lab(x) + lab(y) =
// -w(x,y) pin every label once lab(min W) = 0, after which one O(n^2) pass
// accepts or refutes.  Never searches labelings.
std::optional<SeparationCertificate> is_separable_set(const WeightedGraph& g,
                                                      std::span<const int> w_set);

bool verify_certificate(const WeightedGraph& g, const SeparationCertificate& cert);

// All separable W with 0 in W and 2 <= |W| <= n-2, by size then
// lexicographically.  Complements (which never contain 0) are implied.
std::vector<SeparationCertificate> nontrivial_separable_sets(const WeightedGraph& g);

// First nontrivial separable set in the same order, i.e. one of minimum size.
// Scans the vertex-0-isolated form, where W is separable iff every vertex of
// W \ {0} keeps one constant weight toward the complement.
std::optional<SeparationCertificate> is_separable(const WeightedGraph& g);

// Not separable, but every vertex-deleted subgraph is.  Graphs on up to four
// vertices are never critical (their subgraphs are too small to be separable).
bool is_critical(const WeightedGraph& g);

// Number of vertices whose deletion leaves a nonseparable graph.
int nonseparable_subgraph_count(const WeightedGraph& g);

}  // namespace zqsep
