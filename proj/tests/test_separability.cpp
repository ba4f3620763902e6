#include <vector>

#include "doctest.h"
#include "oracle_support.hpp"
#include "zqsep/family.hpp"
#include "zqsep/separability.hpp"

using namespace zqsep;

namespace {

// Every graph on n vertices over Z_q, as an odometer over the upper triangle.
template <class Fn>
void for_each_graph(int q, int n, Fn&& fn) {
  const int cells = n * (n - 1) / 2;
  std::vector<int> c(static_cast<size_t>(cells), 0);
  while (true) {
    WeightedGraph g(q, n);
    int k = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.set_weight(u, v, c[static_cast<size_t>(k++)]);
    fn(g);
    int i = cells - 1;
    while (i >= 0 && c[static_cast<size_t>(i)] == q - 1) c[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
    ++c[static_cast<size_t>(i)];
  }
}

void check_all_sets(const WeightedGraph& g) {
  const int n = g.n();
  for (int s = 0; s <= n; ++s)
    for_each_combination(n, s, [&](const std::vector<int>& w) {
      const auto cert = is_separable_set(g, w);
      CHECK(cert.has_value() == testsupport::brute_separable_set(g, w));
      if (cert) {
        CHECK(verify_certificate(g, *cert));
        CHECK(cert->W == w);
      }
    });
}

}  // namespace

TEST_CASE("set separability matches the labeling search on all small graphs") {
  for (int q : {2, 3})
    for (int n : {2, 3, 4}) for_each_graph(q, n, [&](const WeightedGraph& g) { check_all_sets(g); });
}

TEST_CASE("set separability matches the labeling search on random larger graphs") {
  Lcg64 rng(101);
  for (int q : {2, 3, 4, 5})
    for (int k = 0; k < 12; ++k) check_all_sets(testsupport::random_graph(q, 5, rng));
}

TEST_CASE("trivial set sizes are always separable") {
  Lcg64 rng(103);
  const auto g = testsupport::random_graph(3, 5, rng);
  CHECK(is_separable_set(g, std::vector<int>{}).has_value());
  CHECK(is_separable_set(g, std::vector<int>{2}).has_value());
  CHECK(is_separable_set(g, std::vector<int>{0, 1, 2, 3}).has_value());
  CHECK(is_separable_set(g, std::vector<int>{0, 1, 2, 3, 4}).has_value());
}

TEST_CASE("certificate verification rejects tampered labelings") {
  // Complete bipartite cut of constant weight 1: separable with the labels
  // (0, 0, 2, 2), so a tampered label leaves a visible cross edge.
  const std::vector<std::array<int, 3>> edges{{0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}};
  const auto g = make_graph(3, 4, edges);
  const std::vector<int> w{0, 1};
  auto cert = is_separable_set(g, w);
  REQUIRE(cert.has_value());
  CHECK(verify_certificate(g, *cert));
  auto bad = *cert;
  bad.labeling.labels[0] = static_cast<std::uint8_t>((bad.labeling.labels[0] + 1) % 3);
  CHECK_FALSE(verify_certificate(g, bad));
}

TEST_CASE("nontrivial sets are listed by size then lexicographically") {
  const WeightedGraph empty(2, 5);
  const auto sets = nontrivial_separable_sets(empty);
  REQUIRE(sets.size() == 10);  // C(4,1) pairs + C(4,2) triples through vertex 0
  std::vector<std::vector<int>> expect{{0, 1}, {0, 2}, {0, 3}, {0, 4},       {0, 1, 2},
                                       {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4}, {0, 3, 4}};
  for (size_t i = 0; i < sets.size(); ++i) {
    CHECK(sets[i].W == expect[i]);
    CHECK(verify_certificate(empty, sets[i]));
  }
}

TEST_CASE("graph separability returns a minimum-size witness") {
  const WeightedGraph empty(3, 4);
  const auto cert = is_separable(empty);
  REQUIRE(cert.has_value());
  CHECK(cert->W == std::vector<int>{0, 1});
  // Orders up to three admit no set of size 2..n-2.
  Lcg64 rng(107);
  for (int n : {1, 2, 3}) CHECK_FALSE(is_separable(testsupport::random_graph(4, n, rng)).has_value());
}

TEST_CASE("graph separability agrees with the subset search") {
  Lcg64 rng(109);
  for (int q : {2, 3})
    for (int k = 0; k < 40; ++k) {
      const auto g = testsupport::random_graph(q, 5, rng);
      const auto cert = is_separable(g);
      CHECK(cert.has_value() == testsupport::brute_separable(g));
      if (cert) CHECK(verify_certificate(g, *cert));
    }
}

TEST_CASE("criticality holds for the two-block graphs and fails below order five") {
  CHECK(is_critical(make_family({5, 2, 0})));
  CHECK(is_critical(make_family({5, 2, 1})));
  CHECK_FALSE(is_critical(WeightedGraph(2, 5)));  // separable outright
  Lcg64 rng(113);
  for (int n : {2, 3, 4})
    for (int k = 0; k < 10; ++k) CHECK_FALSE(is_critical(testsupport::random_graph(2, n, rng)));
}

TEST_CASE("nonseparable deletion counts match per-vertex brute force") {
  Lcg64 rng(127);
  for (int q : {2, 3})
    for (int k = 0; k < 15; ++k) {
      const auto g = testsupport::random_graph(q, 6, rng);
      int brute = 0;
      for (int v = 0; v < 6; ++v)
        if (!testsupport::brute_separable(delete_vertex(g, v))) ++brute;
      CHECK(nonseparable_subgraph_count(g) == brute);
    }
}
