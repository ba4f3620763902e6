#include "zqsep/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace zqsep {

namespace {

void check_q(int q) {
  if (q < 2 || q > 255) throw std::invalid_argument("q must be in [2, 255]");
}

void check_vertex(int v, int n, const char* what) {
  if (v < 0 || v >= n) throw std::out_of_range(std::string(what) + " out of range");
}

}  // namespace

WeightedGraph::WeightedGraph(int q, int n) : q_(q), n_(n) {
  check_q(q);
  if (n < 1) throw std::invalid_argument("n must be positive");
  w_.assign(static_cast<size_t>(n) * n, 0);
}

void WeightedGraph::set_weight(int u, int v, int w) {
  check_vertex(u, n_, "vertex");
  check_vertex(v, n_, "vertex");
  if (u == v) throw std::invalid_argument("no loops: u == v");
  if (w < 0 || w >= q_) throw std::invalid_argument("weight out of range");
  w_[static_cast<size_t>(u) * n_ + v] = static_cast<std::uint8_t>(w);
  w_[static_cast<size_t>(v) * n_ + u] = static_cast<std::uint8_t>(w);
}

std::vector<std::uint8_t> WeightedGraph::upper_triangle() const {
  std::vector<std::uint8_t> tri;
  tri.reserve(static_cast<size_t>(n_) * (n_ - 1) / 2);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) tri.push_back(weight(u, v));
  return tri;
}

std::vector<std::array<int, 3>> WeightedGraph::edges() const {
  std::vector<std::array<int, 3>> e;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (weight(u, v) != 0) e.push_back({u, v, weight(u, v)});
  return e;
}

WeightedGraph make_graph(int q, int n, std::span<const std::array<int, 3>> edges) {
  WeightedGraph g(q, n);
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v, w] : edges) {
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge");
    g.set_weight(u, v, w);
  }
  return g;
}

WeightedGraph add(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.q() != b.q() || a.n() != b.n())
    throw std::invalid_argument("graph shape mismatch");
  WeightedGraph r(a.q(), a.n());
  for (int u = 0; u < a.n(); ++u)
    for (int v = u + 1; v < a.n(); ++v)
      r.set_weight(u, v, mod_q(a.weight(u, v) + b.weight(u, v), a.q()));
  return r;
}

WeightedGraph subtract(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.q() != b.q() || a.n() != b.n())
    throw std::invalid_argument("graph shape mismatch");
  WeightedGraph r(a.q(), a.n());
  for (int u = 0; u < a.n(); ++u)
    for (int v = u + 1; v < a.n(); ++v)
      r.set_weight(u, v, mod_q(a.weight(u, v) - b.weight(u, v), a.q()));
  return r;
}

WeightedGraph additive_from_labeling(const VertexLabeling& lab, int n) {
  if (static_cast<int>(lab.labels.size()) != n)
    throw std::invalid_argument("labeling size mismatch");
  WeightedGraph r(lab.q, n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      r.set_weight(u, v, mod_q(lab.labels[u] + lab.labels[v], lab.q));
  return r;
}

std::optional<VertexLabeling> is_additive(const WeightedGraph& g) {
  const int q = g.q(), n = g.n();
  VertexLabeling lab{q, std::vector<std::uint8_t>(static_cast<size_t>(n), 0)};
  if (n == 1) return lab;
  if (n == 2) {
    lab.labels[1] = g.weight(0, 1);
    return lab;
  }
  // With lab(0) = t, every other label is forced: lab(u) = w(0,u) - t.  Each
  // pair u,v >= 1 then demands 2t = w(0,u) + w(0,v) - w(u,v), so that value
  // must be one constant c, and 2t = c must be solvable mod q.
  int c = 0;
  bool have_c = false;
  for (int u = 1; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int cur = mod_q(g.weight(0, u) + g.weight(0, v) - g.weight(u, v), q);
      if (!have_c) {
        c = cur;
        have_c = true;
      } else if (cur != c) {
        return std::nullopt;
      }
    }
  int t;
  if (q % 2 == 1) {
    t = mod_q(static_cast<long long>(c) * ((q + 1) / 2), q);
  } else {
    if (c % 2 != 0) return std::nullopt;
    t = c / 2;
  }
  lab.labels[0] = static_cast<std::uint8_t>(t);
  for (int u = 1; u < n; ++u)
    lab.labels[u] = static_cast<std::uint8_t>(mod_q(g.weight(0, u) - t, q));
  if (!(additive_from_labeling(lab, n) == g)) return std::nullopt;
  return lab;
}

WeightedGraph switch_graph(const WeightedGraph& g, const VertexLabeling& lab) {
  if (lab.q != g.q()) throw std::invalid_argument("modulus mismatch");
  return add(g, additive_from_labeling(lab, g.n()));
}

IsolationResult isolate(const WeightedGraph& g, int o) {
  check_vertex(o, g.n(), "vertex");
  VertexLabeling lab{g.q(), std::vector<std::uint8_t>(static_cast<size_t>(g.n()), 0)};
  for (int v = 0; v < g.n(); ++v)
    if (v != o) lab.labels[v] = static_cast<std::uint8_t>(mod_q(-g.weight(o, v), g.q()));
  return {switch_graph(g, lab), lab};
}

std::optional<VertexLabeling> switching_equivalent(const WeightedGraph& g,
                                                   const WeightedGraph& h) {
  return is_additive(subtract(h, g));
}

namespace {

// Residual global shifts once a vertex is pinned isolated: all values 2t mod q.
std::vector<int> residual_shifts(int q) {
  std::vector<int> s;
  if (q % 2 == 1) {
    for (int i = 1; i < q; ++i) s.push_back(i);
  } else {
    for (int i = 2; i < q; i += 2) s.push_back(i);
  }
  return s;
}

}  // namespace

WeightedGraph canonical_rep(const WeightedGraph& g) {
  const int q = g.q(), n = g.n();
  WeightedGraph iso = isolate(g, 0).graph;
  if (n <= 2) return iso;
  std::vector<std::uint8_t> tri;
  tri.reserve(static_cast<size_t>(n - 1) * (n - 2) / 2);
  for (int u = 1; u < n; ++u)
    for (int v = u + 1; v < n; ++v) tri.push_back(iso.weight(u, v));
  std::vector<std::uint8_t> best = tri;
  std::vector<std::uint8_t> cand(tri.size());
  for (int s : residual_shifts(q)) {
    for (size_t i = 0; i < tri.size(); ++i)
      cand[i] = static_cast<std::uint8_t>(mod_q(tri[i] + s, q));
    if (cand < best) best = cand;
  }
  WeightedGraph rep(q, n);
  size_t k = 0;
  for (int u = 1; u < n; ++u)
    for (int v = u + 1; v < n; ++v) rep.set_weight(u, v, best[k++]);
  return rep;
}

WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const int> verts) {
  std::vector<int> s(verts.begin(), verts.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("duplicate vertex in subset");
  if (s.empty()) throw std::invalid_argument("empty vertex subset");
  for (int v : s) check_vertex(v, g.n(), "vertex");
  WeightedGraph r(g.q(), static_cast<int>(s.size()));
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      r.set_weight(static_cast<int>(i), static_cast<int>(j), g.weight(s[i], s[j]));
  return r;
}

WeightedGraph delete_vertex(const WeightedGraph& g, int v) {
  check_vertex(v, g.n(), "vertex");
  std::vector<int> keep;
  keep.reserve(g.n() - 1);
  for (int u = 0; u < g.n(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep);
}

WeightedGraph permute(const WeightedGraph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.n())
    throw std::invalid_argument("permutation size mismatch");
  WeightedGraph r(g.q(), g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.weight(u, v) != 0) r.set_weight(perm[u], perm[v], g.weight(u, v));
  return r;
}

namespace {

// Per-vertex switching-class invariant: isolate v, gather the multiset of
// weights among the remaining vertices, and take the minimum sorted form over
// the residual shifts.  Equal under any switching isomorphism mapping v to v'.
std::vector<std::uint8_t> vertex_invariant(const WeightedGraph& g, int v) {
  const int q = g.q(), n = g.n();
  WeightedGraph iso = isolate(g, v).graph;
  std::vector<std::uint8_t> base;
  base.reserve(static_cast<size_t>(n - 1) * (n - 2) / 2);
  for (int u = 0; u < n; ++u) {
    if (u == v) continue;
    for (int w = u + 1; w < n; ++w) {
      if (w == v) continue;
      base.push_back(iso.weight(u, w));
    }
  }
  std::vector<std::uint8_t> best = base;
  std::sort(best.begin(), best.end());
  std::vector<std::uint8_t> cand(base.size());
  for (int s : residual_shifts(q)) {
    for (size_t i = 0; i < base.size(); ++i)
      cand[i] = static_cast<std::uint8_t>(mod_q(base[i] + s, q));
    std::sort(cand.begin(), cand.end());
    if (cand < best) best = cand;
  }
  return best;
}

bool extend_mapping(const WeightedGraph& g, const WeightedGraph& h,
                    const std::vector<int>& gclass, const std::vector<int>& hclass,
                    std::vector<int>& perm, std::vector<bool>& used, int next,
                    std::optional<SwitchingIsomorphism>& out) {
  const int n = g.n();
  if (next == n) {
    WeightedGraph pg = permute(g, perm);
    if (auto lab = switching_equivalent(pg, h)) {
      out = SwitchingIsomorphism{perm, *lab};
      return true;
    }
    return false;
  }
  for (int img = 0; img < n; ++img) {
    if (used[img] || gclass[next] != hclass[img]) continue;
    used[img] = true;
    perm[next] = img;
    if (extend_mapping(g, h, gclass, hclass, perm, used, next + 1, out)) return true;
    used[img] = false;
  }
  return false;
}

}  // namespace

std::optional<SwitchingIsomorphism> switching_isomorphic(const WeightedGraph& g,
                                                         const WeightedGraph& h) {
  if (g.q() != h.q()) throw std::invalid_argument("modulus mismatch");
  if (g.n() != h.n()) return std::nullopt;
  const int n = g.n();
  if (n <= 2) {
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    auto lab = switching_equivalent(g, h);
    return SwitchingIsomorphism{id, *lab};
  }

  // Bucket vertices by invariant; the invariant multisets must agree.
  std::map<std::vector<std::uint8_t>, int> ids;
  std::vector<int> gclass(n), hclass(n);
  std::vector<int> gcount, hcount;
  auto classify = [&](const WeightedGraph& x, std::vector<int>& cls,
                      std::vector<int>& count) {
    for (int v = 0; v < n; ++v) {
      auto inv = vertex_invariant(x, v);
      auto [it, fresh] = ids.try_emplace(inv, static_cast<int>(ids.size()));
      if (fresh) {
        gcount.push_back(0);
        hcount.push_back(0);
      }
      cls[v] = it->second;
      ++count[it->second];
    }
  };
  classify(g, gclass, gcount);
  classify(h, hclass, hcount);
  if (gcount != hcount) return std::nullopt;

  std::vector<int> perm(n);
  std::vector<bool> used(n, false);
  std::optional<SwitchingIsomorphism> out;
  extend_mapping(g, h, gclass, hclass, perm, used, 0, out);
  return out;
}

WeightedGraph swap_weights(const WeightedGraph& g, int i, int j) {
  if (i < 0 || i >= g.q() || j < 0 || j >= g.q())
    throw std::invalid_argument("weight out of range");
  WeightedGraph r(g.q(), g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      int w = g.weight(u, v);
      if (w == i)
        w = j;
      else if (w == j)
        w = i;
      if (w != 0) r.set_weight(u, v, w);
    }
  return r;
}

}  // namespace zqsep
