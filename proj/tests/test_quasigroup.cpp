#include <vector>

#include "doctest.h"
#include "oracle_support.hpp"
#include "zqsep/extension.hpp"
#include "zqsep/quasigroup.hpp"

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

FnTable random_fn(int q, int n, Lcg64& rng) {
  FnTable t = make_table(q, n);
  for (auto& v : t.values) v = static_cast<std::uint8_t>(rng.next_mod(q));
  return t;
}

// Full soundness audit of a claimed split against the table it came from.
void check_qg_split(const QuasigroupTable& t, const QgSplit& s) {
  const QuasigroupTable* base = &t;
  QuasigroupTable inverted;
  if (s.inverted_at) {
    inverted = invert(t, *s.inverted_at);
    base = &inverted;
  }
  CHECK(is_quasigroup(s.h));
  CHECK(is_quasigroup(s.g));
  CHECK(s.h.values[0] == 0);  // normalized class map
  CHECK(s.h.n + s.g.n == base->n + 1);

  std::vector<int> outer;
  {
    std::vector<bool> inner(static_cast<size_t>(base->n) + 1, false);
    for (int p : s.inner_positions) inner[static_cast<size_t>(p)] = true;
    for (int p = 1; p <= base->n; ++p)
      if (!inner[static_cast<size_t>(p)]) outer.push_back(p);
  }
  for_each_point(base->m, base->n, [&](const std::vector<int>& x) {
    std::vector<int> hx, gx;
    for (int p : s.inner_positions) hx.push_back(x[static_cast<size_t>(p) - 1]);
    for (int p : outer) gx.push_back(x[static_cast<size_t>(p) - 1]);
    gx.push_back(qg_at(s.h, hx));
    CHECK(qg_at(*base, x) == qg_at(s.g, gx));
  });
}

// f with x_i := b and c subtracted from every value.
FnTable restrict_shift(const FnTable& f, int i, int b, int c) {
  FnTable g = make_table(f.q, f.n - 1);
  std::vector<int> x(static_cast<size_t>(f.n));
  for_each_point(f.q, f.n - 1, [&](const std::vector<int>& y) {
    for (int k = 0; k < f.n - 1; ++k)
      x[static_cast<size_t>(k) + (k >= i - 1 ? 1 : 0)] = y[k];
    x[static_cast<size_t>(i) - 1] = b;
    g.values[table_index(y, f.q)] =
        static_cast<std::uint8_t>(mod_q(table_at(f, x) - c, f.q));
  });
  return g;
}

}  // namespace

TEST_CASE("the pair construction matches its defining formula entry by entry") {
  FnTable prod = make_table(3, 2);
  for_each_point(3, 2, [&](const std::vector<int>& x) {
    prod.values[table_index(x, 3)] = static_cast<std::uint8_t>(x[0] * x[1] % 3);
  });
  const auto t = build_qfa(prod, 1);
  CHECK(t.m == 9);
  CHECK(t.n == 2);
  // Arguments ([1,0], [2,2]) are codes 3 and 8; the value is [-3+1, -2+2] = [1,0].
  CHECK(qg_at(t, std::vector<int>{3, 8}) == 3);
  CHECK_THROWS_AS(build_qfa(prod, 3), std::invalid_argument);
}

TEST_CASE("pair constructions are quasigroups for every function and constant") {
  Lcg64 rng(401);
  CHECK(is_quasigroup(build_qfa(make_table(3, 2), 0)));
  for (int n : {2, 3})
    for (int a = 0; a < 3; ++a) CHECK(is_quasigroup(build_qfa(random_fn(3, n, rng), a)));
  CHECK(is_quasigroup(build_qfa(random_fn(2, 3, rng), 1)));
}

TEST_CASE("the quasigroup test accepts permuted groups and rejects repeats") {
  // Z_4 addition with a permuted third axis is still a quasigroup.
  const int perm[4] = {2, 0, 3, 1};
  QuasigroupTable t = make_qg_table(4, 3);
  for_each_point(4, 3, [&](const std::vector<int>& x) {
    t.values[qg_index(t, x)] = static_cast<std::uint16_t>((x[0] + x[1] + perm[x[2]]) % 4);
  });
  CHECK(is_quasigroup(t));
  t.values[0] = t.values[1];
  CHECK_FALSE(is_quasigroup(t));

  QuasigroupTable line = make_qg_table(3, 1);
  line.values = {0, 0, 1};
  CHECK_FALSE(is_quasigroup(line));
}

TEST_CASE("retracts keep the quasigroup property and drop arity") {
  Lcg64 rng(409);
  const auto t = build_qfa(random_fn(3, 3, rng), 2);
  for (int pos = 1; pos <= 3; ++pos)
    for (int c : {0, 4, 8}) {
      const auto r = retract(t, pos, c);
      CHECK(r.n == 2);
      CHECK(r.m == 9);
      CHECK(is_quasigroup(r));
    }
  CHECK_THROWS_AS(retract(t, 0, 0), std::out_of_range);
  CHECK_THROWS_AS(retract(t, 1, 9), std::invalid_argument);
}

TEST_CASE("a retract of the pair construction is the pair construction of the restricted function") {
  Lcg64 rng(419);
  for (int a = 0; a < 3; ++a) {
    const auto f = random_fn(3, 3, rng);
    const auto t = build_qfa(f, a);
    for (int i = 1; i <= 3; ++i)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          // Fixing [b, c] at position i leaves the hyperplane constant a - b
          // and subtracts c from the residual function values.
          const auto expected = build_qfa(restrict_shift(f, i, b, c), mod_q(a - b, 3));
          CHECK(retract(t, i, b * 3 + c) == expected);
        }
  }
}

TEST_CASE("the additive reading of the retract constants fails on a concrete instance") {
  // Fixing [1, 2] in the zero function at a = 0: the surviving table is the
  // pair construction at constant a - b = 2 with values shifted by -c = 1,
  // not the one at a + b with values shifted by +c.
  const FnTable zero = make_table(3, 2);
  const auto t = build_qfa(zero, 0);
  const auto direct = retract(t, 1, 1 * 3 + 2);
  CHECK(direct == build_qfa(restrict_shift(zero, 1, 1, 2), 2));

  FnTable plus = make_table(3, 1);
  for (auto& v : plus.values) v = 2;  // f with +c instead of -c
  CHECK_FALSE(direct == build_qfa(plus, mod_q(0 + 1, 3)));
}

TEST_CASE("inversion is an involution and matches the argument swap construction") {
  Lcg64 rng(421);
  for (int n : {2, 3})
    for (int a : {0, 1}) {
      const auto f = random_fn(3, n, rng);
      const auto t = build_qfa(f, a);
      for (int i = 1; i <= n; ++i) {
        const auto ti = invert(t, i);
        CHECK(is_quasigroup(ti));
        CHECK(invert(ti, i) == t);
        const auto g = swap_with_x0(make_extension(f, a), i);
        CHECK(ti == build_qfa(g.f, a));
      }
    }
  QuasigroupTable degenerate = make_qg_table(2, 1);
  degenerate.values = {0, 0};
  CHECK_THROWS_AS(invert(degenerate, 1), std::invalid_argument);
}

TEST_CASE("the zero function splits on a visible pair with a nine-class quotient") {
  const auto t = build_qfa(make_table(3, 3), 0);
  const auto split = is_w_separable_qg(t, std::vector<int>{1, 2});
  REQUIRE(split.has_value());
  CHECK(split->w == std::vector<int>{1, 2});
  CHECK_FALSE(split->inverted_at.has_value());
  CHECK(split->inner_positions == std::vector<int>{1, 2});
  CHECK(split->h.m == 9);
  CHECK(split->h.n == 2);
  check_qg_split(t, *split);
}

TEST_CASE("sets naming the output are reduced through an inversion") {
  const auto t = build_qfa(make_table(3, 3), 1);
  const auto split = is_w_separable_qg(t, std::vector<int>{0, 1});
  REQUIRE(split.has_value());
  CHECK(split->inverted_at == 2);
  CHECK(split->inner_positions == std::vector<int>{1, 2});
  check_qg_split(t, *split);
}

TEST_CASE("set-size validation for quasigroup separability") {
  const auto t = build_qfa(make_table(3, 3), 0);
  CHECK_THROWS_AS(is_w_separable_qg(t, std::vector<int>{1}), std::invalid_argument);
  CHECK_THROWS_AS(is_w_separable_qg(t, std::vector<int>{0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(is_w_separable_qg(t, std::vector<int>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(is_w_separable_qg(t, std::vector<int>{1, 4}), std::out_of_range);
}

TEST_CASE("congruence decision agrees with the Latin-square search on order four") {
  auto m1 = [](int a, int b) { return (a + b) % 4; };
  auto m2 = [](int a, int b) { return a ^ b; };
  const auto q1 = testsupport::compose3(4, m1, m1);
  const auto q2 = testsupport::compose3(4, m1, m2);
  const auto q3 = testsupport::compose3(4, m2, m1);
  const std::vector<std::vector<int>> sets{{1, 2}, {1, 3}, {2, 3}};
  for (const auto& t : {q1, q2, q3}) {
    REQUIRE(is_quasigroup(t));
    for (const auto& w : sets) {
      const auto split = is_w_separable_qg(t, w);
      CHECK(split.has_value() == testsupport::brute_qg_separable_inner(t, w));
      if (split) check_qg_split(t, *split);
    }
  }
  // The named compositions must split on their own inner pair.
  CHECK(is_w_separable_qg(q2, std::vector<int>{2, 3}).has_value());
  CHECK(is_w_separable_qg(q3, std::vector<int>{2, 3}).has_value());
  // Output-containing sets agree with the brute force after inverting.
  const auto split01 = is_w_separable_qg(q2, std::vector<int>{0, 1});
  const auto brute01 = testsupport::brute_qg_separable_inner(invert(q2, 2), {1, 2});
  CHECK(split01.has_value() == brute01);
  if (split01) check_qg_split(q2, *split01);
}

TEST_CASE("whole-table separability scans by size and honors the wide convention") {
  const auto t = build_qfa(make_table(3, 3), 0);
  const auto sep = is_separable_qg(t);
  REQUIRE(sep.has_value());
  CHECK(sep->w == std::vector<int>{0, 1});
  check_qg_split(t, *sep);

  const auto binary = build_qfa(make_table(3, 2), 0);
  CHECK_FALSE(is_separable_qg(binary).has_value());
  const auto wide = is_separable_qg(binary, true);
  REQUIRE(wide.has_value());
  CHECK(wide->w == std::vector<int>{0, 1});
  CHECK(wide->inverted_at == 2);
  CHECK(wide->g.n == 1);
  check_qg_split(binary, *wide);
}

TEST_CASE("quasigroup separability verdicts match the partial-function oracle") {
  FnTable prod = make_table(3, 3);
  for_each_point(3, 3, [&](const std::vector<int>& x) {
    prod.values[table_index(x, 3)] = static_cast<std::uint8_t>(x[0] * x[1] % 3);
  });
  const auto e0 = make_extension(prod, 0);
  for (int a : {0, 2}) {
    const auto t = build_qfa(prod, a);
    for_each_combination(4, 2, [&](const std::vector<int>& w) {
      CHECK(is_w_separable_qg(t, w).has_value() ==
            oracle_is_w_separable(e0, w).has_value());
    });
  }
}

TEST_CASE("retract implication report: vacuous at arity three, live at arity four") {
  const auto vac = verify_retract_corollary(make_table(3, 3), 1);
  CHECK(vac.retracts == 108);  // 4 tables x 3 positions x 9 constants
  CHECK(vac.retracts_separable == 0);  // binary retracts admit no W at all
  CHECK_FALSE(vac.premise_holds);
  CHECK(vac.quasigroup_separable);
  CHECK_FALSE(vac.violation);

  const auto live = verify_retract_corollary(make_table(3, 4), 0);
  CHECK(live.retracts == 180);  // 5 tables x 4 positions x 9 constants
  CHECK(live.retracts_separable == 180);
  CHECK(live.premise_holds);
  CHECK(live.quasigroup_separable);
  CHECK_FALSE(live.violation);

  CHECK_THROWS_AS(verify_retract_corollary(make_table(2, 3), 0), std::invalid_argument);
}
