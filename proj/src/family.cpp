#include "zqsep/family.hpp"

#include <stdexcept>

namespace zqsep {

namespace {

void check_params(const FamilyParams& p) {
  if (p.q < 2 || p.q % 2 != 0) throw std::invalid_argument("q must be even");
  if (p.n < 5 || p.n % 2 != 1) throw std::invalid_argument("n must be odd and >= 5");
  if (p.gamma < 0 || p.gamma >= p.q) throw std::invalid_argument("gamma out of range");
}

// After deleting vertex d, original vertex v sits at index v - (v > d).
int shifted(int v, int d) { return v > d ? v - 1 : v; }

}  // namespace

WeightedGraph make_family(const FamilyParams& p) {
  check_params(p);
  const int k = (p.n - 1) / 2;
  const int half = p.q / 2;
  WeightedGraph g(p.q, p.n);
  auto a = [](int l) { return l; };          // a_0..a_k -> 0..k
  auto b = [k](int m) { return k + m; };     // b_1..b_k -> k+1..2k
  for (int l = 1; l <= k; ++l)
    for (int m = 1; m <= k; ++m)
      g.set_weight(a(l), b(m), l < m ? p.gamma : mod_q(p.gamma + half, p.q));
  for (int l = 1; l <= k; ++l)
    for (int m = l + 1; m <= k; ++m) {
      g.set_weight(a(l), a(m), p.gamma);
      g.set_weight(b(l), b(m), p.gamma);
    }
  return g;
}

FamilyReport verify_family_critical(const FamilyParams& p) {
  const WeightedGraph g = make_family(p);
  const int k = (p.n - 1) / 2;
  auto a = [](int l) { return l; };
  auto b = [k](int m) { return k + m; };

  FamilyReport rep;
  rep.params = p;
  rep.graph_separable = is_separable(g).has_value();

  rep.subgraph_separable.resize(static_cast<size_t>(p.n));
  for (int v = 0; v < p.n; ++v)
    rep.subgraph_separable[v] = is_separable(delete_vertex(g, v)).has_value();

  // One concrete two-element separable set per deletion.
  std::vector<FamilyWitness> w;
  w.push_back({a(0), {a(k), b(1)}, false});
  for (int i = 1; i <= k - 1; ++i) w.push_back({a(i), {b(i), b(i + 1)}, false});
  w.push_back({a(k), {b(k), a(0)}, false});
  for (int i = 1; i <= k; ++i) w.push_back({b(i), {a(i - 1), a(i)}, false});
  for (auto& wit : w) {
    WeightedGraph sub = delete_vertex(g, wit.deleted);
    std::array<int, 2> mapped = {shifted(wit.pair[0], wit.deleted),
                                 shifted(wit.pair[1], wit.deleted)};
    wit.separable = is_separable_set(sub, mapped).has_value();
  }
  rep.witnesses = std::move(w);

  bool all_sub = true;
  for (bool s : rep.subgraph_separable) all_sub = all_sub && s;
  bool all_wit = true;
  for (const auto& wit : rep.witnesses) all_wit = all_wit && wit.separable;
  rep.critical = !rep.graph_separable && all_sub && all_wit;
  return rep;
}

}  // namespace zqsep
