#include "zqsep/separability.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace zqsep {

std::optional<SeparationCertificate> is_separable_set(const WeightedGraph& g,
                                                      std::span<const int> w_set) {
  const int q = g.q(), n = g.n();
  std::vector<int> w(w_set.begin(), w_set.end());
  std::sort(w.begin(), w.end());
  if (std::adjacent_find(w.begin(), w.end()) != w.end())
    throw std::invalid_argument("duplicate vertex in W");
  for (int v : w)
    if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");

  std::vector<bool> in_w(static_cast<size_t>(n), false);
  for (int v : w) in_w[v] = true;
  std::vector<int> u;
  for (int v = 0; v < n; ++v)
    if (!in_w[v]) u.push_back(v);

  VertexLabeling lab{q, std::vector<std::uint8_t>(static_cast<size_t>(n), 0)};
  if (!w.empty() && !u.empty()) {
    // Pin lab(w0) = 0; the complete bipartite constraint graph then forces
    // every other label in two propagation steps.
    const int w0 = w[0];
    for (int y : u) lab.labels[y] = static_cast<std::uint8_t>(mod_q(-g.weight(w0, y), q));
    const int v0 = u[0];
    for (int x : w)
      if (x != w0)
        lab.labels[x] = static_cast<std::uint8_t>(mod_q(-g.weight(x, v0) - lab.labels[v0], q));
    for (int x : w)
      for (int y : u)
        if (mod_q(g.weight(x, y) + lab.labels[x] + lab.labels[y], q) != 0)
          return std::nullopt;
  }
  return SeparationCertificate{std::move(w), std::move(lab)};
}

bool verify_certificate(const WeightedGraph& g, const SeparationCertificate& cert) {
  if (cert.labeling.q != g.q() ||
      static_cast<int>(cert.labeling.labels.size()) != g.n())
    return false;
  std::vector<bool> in_w(static_cast<size_t>(g.n()), false);
  for (int v : cert.W) {
    if (v < 0 || v >= g.n() || in_w[v]) return false;
    in_w[v] = true;
  }
  WeightedGraph s = switch_graph(g, cert.labeling);
  for (int x = 0; x < g.n(); ++x)
    for (int y = x + 1; y < g.n(); ++y)
      if (in_w[x] != in_w[y] && s.weight(x, y) != 0) return false;
  return true;
}

namespace {

// In a graph whose vertex 0 is isolated, W (containing 0) is separable iff
// each x in W \ {0} sees a single weight c_x across to the complement; the
// labeling -c_x on x and 0 elsewhere then clears the cut.
std::optional<SeparationCertificate> separable_in_isolated(const WeightedGraph& iso,
                                                           const std::vector<int>& w) {
  const int q = iso.q(), n = iso.n();
  std::vector<bool> in_w(static_cast<size_t>(n), false);
  for (int v : w) in_w[v] = true;
  VertexLabeling lab{q, std::vector<std::uint8_t>(static_cast<size_t>(n), 0)};
  for (int x : w) {
    if (x == 0) continue;
    int c = -1;
    for (int y = 0; y < n; ++y) {
      if (in_w[y]) continue;
      if (c < 0)
        c = iso.weight(x, y);
      else if (iso.weight(x, y) != c)
        return std::nullopt;
    }
    lab.labels[x] = static_cast<std::uint8_t>(mod_q(-c, q));
  }
  return SeparationCertificate{w, std::move(lab)};
}

VertexLabeling compose(const VertexLabeling& a, const VertexLabeling& b) {
  VertexLabeling r{a.q, a.labels};
  for (size_t i = 0; i < r.labels.size(); ++i)
    r.labels[i] = static_cast<std::uint8_t>(mod_q(a.labels[i] + b.labels[i], a.q));
  return r;
}

}  // namespace

std::vector<SeparationCertificate> nontrivial_separable_sets(const WeightedGraph& g) {
  std::vector<SeparationCertificate> out;
  const int n = g.n();
  if (n < 4) return out;
  auto [iso, iso_lab] = isolate(g, 0);
  for_each_subset_with_zero(n, 2, n - 2, [&](const std::vector<int>& w) {
    if (auto cert = separable_in_isolated(iso, w)) {
      cert->labeling = compose(iso_lab, cert->labeling);
      assert(verify_certificate(g, *cert));
      out.push_back(std::move(*cert));
    }
  });
  return out;
}

std::optional<SeparationCertificate> is_separable(const WeightedGraph& g) {
  const int n = g.n();
  if (n < 4) return std::nullopt;
  auto [iso, iso_lab] = isolate(g, 0);
  std::optional<SeparationCertificate> out;
  for (int s = 2; s <= n - 2 && !out; ++s) {
    for_each_combination(n - 1, s - 1, [&](const std::vector<int>& rest) {
      if (out) return;
      std::vector<int> w(static_cast<size_t>(s));
      w[0] = 0;
      for (int i = 0; i + 1 < s; ++i) w[i + 1] = rest[i] + 1;
      if (auto cert = separable_in_isolated(iso, w)) {
        cert->labeling = compose(iso_lab, cert->labeling);
        assert(verify_certificate(g, *cert));
        out = std::move(*cert);
      }
    });
  }
  return out;
}

bool is_critical(const WeightedGraph& g) {
  if (is_separable(g)) return false;
  for (int v = 0; v < g.n(); ++v)
    if (!is_separable(delete_vertex(g, v))) return false;
  return true;
}

int nonseparable_subgraph_count(const WeightedGraph& g) {
  int count = 0;
  for (int v = 0; v < g.n(); ++v)
    if (!is_separable(delete_vertex(g, v))) ++count;
  return count;
}

}  // namespace zqsep
