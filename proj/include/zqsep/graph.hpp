#pragma once

// Edge-weighted graphs over Z_q and their switching algebra.
//
// Weights live in {0,...,q-1}; weight 0 means "no edge".  A graph is additive
// when its weights are the pairwise sums of vertex labels mod q.  Switching a
// graph means adding an additive graph edgewise; switching classes are the
// orbits of that action.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zqsep/zq.hpp"

namespace zqsep {

struct VertexLabeling {
  int q = 0;
  std::vector<std::uint8_t> labels;
  bool operator==(const VertexLabeling&) const = default;
};

class WeightedGraph {
 public:
  WeightedGraph(int q, int n);

  int q() const { return q_; }
  int n() const { return n_; }

  std::uint8_t weight(int u, int v) const { return w_[static_cast<size_t>(u) * n_ + v]; }

  // Bounds-checked write of a symmetric pair; u == v is rejected.
  void set_weight(int u, int v, int w);

  // Row-major upper triangle (u < v), used for comparisons and hashing.
  std::vector<std::uint8_t> upper_triangle() const;

  // Nonzero edges as (u, v, w) with u < v, sorted.
  std::vector<std::array<int, 3>> edges() const;

  bool operator==(const WeightedGraph&) const = default;

 private:
  int q_;
  int n_;
  std::vector<std::uint8_t> w_;
};

// Builds a graph from an explicit edge list; duplicate pairs are rejected.
WeightedGraph make_graph(int q, int n, std::span<const std::array<int, 3>> edges);

// Edgewise sum mod q.
WeightedGraph add(const WeightedGraph& a, const WeightedGraph& b);

// Edgewise difference mod q.
WeightedGraph subtract(const WeightedGraph& a, const WeightedGraph& b);

// The additive graph of a labeling: weight(u,v) = lab(u) + lab(v) mod q.
WeightedGraph additive_from_labeling(const VertexLabeling& lab, int n);

// A labeling generating G if G is additive, nullopt otherwise.  Graphs on one
// or two vertices are always additive.
std::optional<VertexLabeling> is_additive(const WeightedGraph& g);

// G plus the additive graph of lab.
WeightedGraph switch_graph(const WeightedGraph& g, const VertexLabeling& lab);

// The switching that zeroes every edge at vertex o, and its result.
struct IsolationResult {
  WeightedGraph graph;
  VertexLabeling labeling;
};
IsolationResult isolate(const WeightedGraph& g, int o);

// A labeling with switch_graph(g, lab) == h, when g and h are in the same
// switching class.
std::optional<VertexLabeling> switching_equivalent(const WeightedGraph& g,
                                                   const WeightedGraph& h);

// Canonical member of the switching class: vertex 0 isolated, remaining
// upper triangle lexicographically minimal over the residual global shifts
// (those are exactly the shifts by 2t mod q).  Two graphs are switching
// equivalent iff their canonical representatives are equal.
WeightedGraph canonical_rep(const WeightedGraph& g);

// Induced subgraph; vertices are renumbered in increasing original order.
WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const int> verts);

// Drops one vertex, keeping the order of the rest.
WeightedGraph delete_vertex(const WeightedGraph& g, int v);

// Permutation image of g: result[p[u]][p[v]] = g[u][v].
WeightedGraph permute(const WeightedGraph& g, std::span<const int> perm);

// Searches for a vertex permutation p and labeling lab with
// switch_graph(permute(g, p), lab) == h.  Candidate permutations are pruned
// by a per-vertex switching-class invariant; the per-candidate test is exact.
// Exhaustive over permutations, so impractical much beyond n = 11.
struct SwitchingIsomorphism {
  std::vector<int> perm;
  VertexLabeling labeling;
};
std::optional<SwitchingIsomorphism> switching_isomorphic(const WeightedGraph& g,
                                                         const WeightedGraph& h);

// Exchanges the roles of weights i and j on every edge.
WeightedGraph swap_weights(const WeightedGraph& g, int i, int j);

}  // namespace zqsep
