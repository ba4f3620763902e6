#include <vector>

#include "doctest.h"
#include "oracle_support.hpp"
#include "zqsep/census.hpp"
#include "zqsep/extension.hpp"
#include "zqsep/separability.hpp"

using namespace zqsep;

namespace {

template <class Fn>
void for_each_point(int q, int n, Fn&& fn) {
  std::vector<int> x(static_cast<size_t>(n), 0);
  while (true) {
    fn(static_cast<const std::vector<int>&>(x));
    int i = n - 1;
    while (i >= 0 && x[i] == q - 1) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
  }
}

FnTable random_table(int q, int n, Lcg64& rng) {
  FnTable t = make_table(q, n);
  for (auto& v : t.values) v = static_cast<std::uint8_t>(rng.next_mod(q));
  return t;
}

int hidden_of(const PartialExtension& e, const std::vector<int>& xs) {
  long long s = 0;
  for (int v : xs) s += v;
  return mod_q(e.a - s, e.f.q);
}

// Recomposition identity of a returned split over the whole hyperplane.
void check_split(const PartialExtension& e, const ExtensionSplit& split) {
  const int q = e.f.q, n = e.f.n;
  for_each_point(q, n, [&](const std::vector<int>& xs) {
    std::vector<int> full(static_cast<size_t>(n) + 1);
    full[0] = hidden_of(e, xs);
    for (int i = 0; i < n; ++i) full[static_cast<size_t>(i) + 1] = xs[i];
    auto side = [&](const SplitPart& part) {
      std::vector<int> coords;
      for (int arg : part.args) coords.push_back(full[static_cast<size_t>(arg)]);
      return table_at(part.table, coords);
    };
    CHECK(table_at(e.f, xs) == mod_q(side(split.part_w) + side(split.part_u), q));
  });
}

FnTable product_table_q3() {  // f(x1, x2) = x1 x2 over Z_3
  FnTable t = make_table(3, 2);
  for_each_point(3, 2, [&](const std::vector<int>& x) {
    t.values[table_index(x, 3)] = static_cast<std::uint8_t>(x[0] * x[1] % 3);
  });
  return t;
}

}  // namespace

TEST_CASE("extension evaluation enforces the hyperplane") {
  const auto e = make_extension(product_table_q3(), 0);
  CHECK(extension_eval(e, std::vector<int>{1, 1}, 1) == 1);
  CHECK(extension_eval(e, std::vector<int>{2, 2}, 2) == 1);
  CHECK_THROWS_AS(extension_eval(e, std::vector<int>{1, 1}, 0), std::domain_error);
  CHECK_THROWS_AS(extension_eval(e, std::vector<int>{1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_extension(product_table_q3(), 3), std::invalid_argument);

  const auto zero = make_extension(make_table(3, 3), 2);
  for_each_point(3, 3, [&](const std::vector<int>& x) {
    CHECK(extension_eval(zero, x, hidden_of(zero, x)) == 0);
  });
}

TEST_CASE("fixing a visible argument restricts the table and shifts the constant") {
  Lcg64 rng(307);
  for (int a = 0; a < 3; ++a) {
    const auto e = make_extension(random_table(3, 3, rng), a);
    for (int i = 1; i <= 3; ++i)
      for (int b = 0; b < 3; ++b) {
        const auto g = fix_argument(e, i, b);
        CHECK(g.f.n == 2);
        CHECK(g.a == mod_q(a - b, 3));
        for_each_point(3, 2, [&](const std::vector<int>& y) {
          std::vector<int> x(3);
          for (int k = 0, j = 0; k < 3; ++k) x[static_cast<size_t>(k)] = (k == i - 1) ? b : y[j++];
          CHECK(extension_eval(g, y, hidden_of(g, y)) == extension_eval(e, x, hidden_of(e, x)));
        });
      }
  }
}

TEST_CASE("fixing the hidden argument pins the old constraint value") {
  Lcg64 rng(311);
  const int a = 1;
  const auto e = make_extension(random_table(3, 3, rng), a);
  for (int b = 0; b < 3; ++b) {
    const auto g = fix_argument(e, 0, b);
    CHECK(g.a == mod_q(a - b, 3));
    for_each_point(3, 2, [&](const std::vector<int>& y) {
      // Hidden slot of g carries the old last visible argument.
      const int old_last = hidden_of(g, y);
      std::vector<int> x{y[0], y[1], old_last};
      CHECK(extension_eval(g, y, old_last) == extension_eval(e, x, b));
    });
  }
}

TEST_CASE("fixing the second factor of a product leaves a scaled line") {
  const auto e = make_extension(product_table_q3(), 0);
  const auto g = fix_argument(e, 2, 2);
  CHECK(g.f.values == std::vector<std::uint8_t>{0, 2, 1});  // 2*x1 mod 3
  CHECK(g.a == 1);
}

TEST_CASE("argument swap with the hidden slot is a pointwise re-indexing and an involution") {
  Lcg64 rng(313);
  for (int a = 0; a < 3; ++a) {
    const auto e = make_extension(random_table(3, 3, rng), a);
    for (int i = 1; i <= 3; ++i) {
      const auto g = swap_with_x0(e, i);
      CHECK(swap_with_x0(g, i) == e);
      for_each_point(3, 3, [&](const std::vector<int>& x) {
        const int x0 = hidden_of(e, x);
        std::vector<int> y = x;
        y[static_cast<size_t>(i) - 1] = x0;
        CHECK(extension_eval(g, y, x[static_cast<size_t>(i) - 1]) == extension_eval(e, x, x0));
      });
    }
  }
  // Constant functions are fixed points.
  FnTable c = make_table(3, 2);
  for (auto& v : c.values) v = 2;
  const auto e = make_extension(c, 1);
  CHECK(swap_with_x0(e, 1) == e);
}

TEST_CASE("a swapped linear extension evaluates to the constraint complement") {
  Poly p(3, 3);
  p.add_term(std::vector<int>{0, 1, 0}, 1);  // x1
  const auto e = make_extension(table_from_poly(p), 0);
  const auto g = swap_with_x0(e, 1);
  for_each_point(3, 2, [&](const std::vector<int>& x) {
    CHECK(table_at(g.f, x) == mod_q(-x[0] - x[1], 3));
  });
}

TEST_CASE("the split oracle accepts constants and judges the product correctly") {
  FnTable c = make_table(3, 4);
  for (auto& v : c.values) v = 2;
  const auto econst = make_extension(c, 1);
  for (const auto& w : {std::vector<int>{0, 1}, std::vector<int>{1, 2}, std::vector<int>{0, 2, 3}}) {
    const auto split = oracle_is_w_separable(econst, w);
    REQUIRE(split.has_value());
    check_split(econst, *split);
    CHECK(split->part_u.table.values[0] == 0);  // normalization
  }

  Poly prod(3, 4);
  prod.add_term(std::vector<int>{0, 1, 1, 0}, 1);  // x1 x2, n = 3
  const auto e = make_extension(table_from_poly(prod), 0);
  CHECK_FALSE(oracle_is_w_separable(e, std::vector<int>{1, 3}).has_value());
  const auto s12 = oracle_is_w_separable(e, std::vector<int>{1, 2});
  REQUIRE(s12.has_value());
  check_split(e, *s12);
  const auto s30 = oracle_is_w_separable(e, std::vector<int>{3, 0});
  REQUIRE(s30.has_value());
  check_split(e, *s30);
  CHECK(s30->part_w.args == std::vector<int>{0, 3});

  CHECK_THROWS_AS(oracle_is_w_separable(e, std::vector<int>{1}), std::invalid_argument);
  CHECK_THROWS_AS(oracle_is_w_separable(e, std::vector<int>{0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("graph route and split oracle agree on every small quadratic") {
  for (int c12 = 0; c12 < 3; ++c12)
    for (int c13 = 0; c13 < 3; ++c13)
      for (int c23 = 0; c23 < 3; ++c23) {
        Poly p(3, 4);
        p.add_term(std::vector<int>{0, 1, 1, 0}, c12);
        p.add_term(std::vector<int>{0, 1, 0, 1}, c13);
        p.add_term(std::vector<int>{0, 0, 1, 1}, c23);
        const auto t = table_from_poly(p);
        for (int a = 0; a < 3; ++a) {
          const auto e = make_extension(t, a);
          for_each_combination(4, 2, [&](const std::vector<int>& w) {
            CHECK(is_w_separable_quadratic(p, a, w) ==
                  oracle_is_w_separable(e, w).has_value());
          });
        }
      }
}

TEST_CASE("the quadratic route rejects even moduli and bad set sizes") {
  Poly p(2, 3);
  p.add_term(std::vector<int>{0, 1, 1}, 1);
  CHECK_THROWS_AS(is_w_separable_quadratic(p, 0, std::vector<int>{0, 1}), std::invalid_argument);
  Poly p3(3, 4);
  p3.add_term(std::vector<int>{0, 1, 1, 0}, 1);
  CHECK_THROWS_AS(is_w_separable_quadratic(p3, 0, std::vector<int>{1}), std::invalid_argument);
  CHECK_THROWS_AS(is_w_separable_quadratic(p3, 3, std::vector<int>{0, 1}), std::invalid_argument);
}

TEST_CASE("separability scan finds the least witness and honors the oracle flag") {
  const auto zero = make_extension(make_table(3, 3), 0);
  const auto sep = is_separable_extension(zero);
  REQUIRE(sep.has_value());
  CHECK(sep->w_args == std::vector<int>{0, 1});
  check_split(zero, sep->split);
  const auto verified = is_separable_extension(zero, true);
  REQUIRE(verified.has_value());
  CHECK(verified->w_args == sep->w_args);

  // Two visible arguments leave no admissible W.
  CHECK_FALSE(is_separable_extension(make_extension(make_table(3, 2), 0)).has_value());

  // Even modulus falls back to the oracle route.
  const auto zero2 = make_extension(make_table(2, 3), 1);
  const auto sep2 = is_separable_extension(zero2);
  REQUIRE(sep2.has_value());
  check_split(zero2, sep2->split);
}

TEST_CASE("a nonseparable quadratic extension has a nonseparable single fixing") {
  // Hunt down a nonseparable order-5 class and realize it as cross terms.
  std::optional<WeightedGraph> hard;
  enumerate_reps(3, 5, 1'000'000, [&](const WeightedGraph& g, std::uint64_t) {
    if (!hard && !is_separable(g)) hard = g;
  });
  REQUIRE(hard.has_value());

  Poly p(3, 5);
  for (const auto& [u, v, w] : hard->edges()) {
    std::vector<int> e(5, 0);
    e[static_cast<size_t>(u)] = 1;
    e[static_cast<size_t>(v)] = 1;
    p.add_term(e, w);
  }
  CHECK_FALSE(p.uses_slot0());  // canonical classes keep vertex 0 isolated

  const auto e = make_extension(table_from_poly(p), 0);
  CHECK_FALSE(is_separable_extension(e).has_value());

  bool some_fixing_nonseparable = false;
  for (int i = 0; i <= 4 && !some_fixing_nonseparable; ++i)
    for (int b = 0; b < 3 && !some_fixing_nonseparable; ++b)
      if (!is_separable_extension(fix_argument(e, i, b)).has_value())
        some_fixing_nonseparable = true;
  CHECK(some_fixing_nonseparable);
}

TEST_CASE("deleting a vertex mirrors fixing the matching argument up to switching") {
  Lcg64 rng(317);
  for (int k = 0; k < 5; ++k) {
    const auto p = random_quadratic(3, 3, rng);
    const auto gp = graph_of_quadratic(p);
    const auto e = make_extension(table_from_poly(p), 1);
    for (int i = 1; i <= 3; ++i)
      for (int b = 0; b < 3; ++b) {
        const auto sub = fix_argument(e, i, b);
        const auto sub_graph = graph_of_quadratic(poly_from_table(sub.f));
        CHECK(switching_equivalent(delete_vertex(gp, i), sub_graph).has_value());
      }
  }
}
