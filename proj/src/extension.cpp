#include "zqsep/extension.hpp"

#include <algorithm>
#include <stdexcept>

#include "zqsep/separability.hpp"

namespace zqsep {

namespace {

void check_args(const PartialExtension& e) {
  if (e.a < 0 || e.a >= e.f.q) throw std::invalid_argument("a out of range");
}

std::vector<int> sorted_args(std::span<const int> args, int n) {
  std::vector<int> w(args.begin(), args.end());
  std::sort(w.begin(), w.end());
  if (std::adjacent_find(w.begin(), w.end()) != w.end())
    throw std::invalid_argument("duplicate argument index");
  for (int x : w)
    if (x < 0 || x > n) throw std::out_of_range("argument index out of range");
  return w;
}

std::vector<int> complement_args(const std::vector<int>& w, int n) {
  std::vector<int> u;
  std::vector<bool> in_w(static_cast<size_t>(n) + 1, false);
  for (int x : w) in_w[static_cast<size_t>(x)] = true;
  for (int i = 0; i <= n; ++i)
    if (!in_w[static_cast<size_t>(i)]) u.push_back(i);
  return u;
}

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

// full[k] = value of argument k, k in 0..n (index 0 = hidden argument).
int full_point_value(const PartialExtension& e, const std::vector<int>& full) {
  std::vector<int> xs(full.begin() + 1, full.end());
  return table_at(e.f, xs);
}

std::uint64_t pack(const std::vector<int>& full, const std::vector<int>& args, int q) {
  std::uint64_t idx = 0;
  for (int a : args)
    idx = idx * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(full[static_cast<size_t>(a)]);
  return idx;
}

}  // namespace

PartialExtension make_extension(FnTable f, int a) {
  PartialExtension e{std::move(f), a};
  check_args(e);
  return e;
}

int extension_eval(const PartialExtension& e, std::span<const int> xs, int x0) {
  check_args(e);
  if (static_cast<int>(xs.size()) != e.f.n)
    throw std::invalid_argument("point size mismatch");
  long long sum = x0;
  for (int x : xs) sum += x;
  if (mod_q(sum, e.f.q) != e.a)
    throw std::domain_error("point is off the constraint hyperplane");
  return table_at(e.f, xs);
}

PartialExtension swap_with_x0(const PartialExtension& e, int i) {
  check_args(e);
  const int q = e.f.q, n = e.f.n;
  if (i < 1 || i > n) throw std::out_of_range("argument index out of range");
  FnTable g = make_table(q, n);
  std::vector<int> y(static_cast<size_t>(n));
  for_each_point(q, n, [&](const std::vector<int>& x) {
    long long sum = 0;
    for (int v : x) sum += v;
    y.assign(x.begin(), x.end());
    y[static_cast<size_t>(i) - 1] = mod_q(e.a - sum, q);
    g.values[table_index(x, q)] = static_cast<std::uint8_t>(table_at(e.f, y));
  });
  return {std::move(g), e.a};
}

PartialExtension fix_argument(const PartialExtension& e, int i, int b) {
  check_args(e);
  const int q = e.f.q, n = e.f.n;
  if (b < 0 || b >= q) throw std::invalid_argument("fixed value out of range");
  if (i == 0) return fix_argument(swap_with_x0(e, n), n, b);
  if (i < 1 || i > n) throw std::out_of_range("argument index out of range");
  if (n < 2) throw std::invalid_argument("cannot fix the only visible argument");
  FnTable g = make_table(q, n - 1);
  std::vector<int> x(static_cast<size_t>(n));
  for_each_point(q, n - 1, [&](const std::vector<int>& y) {
    for (int k = 0; k < n - 1; ++k) x[static_cast<size_t>(k) + (k >= i - 1 ? 1 : 0)] = y[k];
    x[static_cast<size_t>(i) - 1] = b;
    g.values[table_index(y, q)] = static_cast<std::uint8_t>(table_at(e.f, x));
  });
  return {std::move(g), mod_q(e.a - b, q)};
}

std::optional<ExtensionSplit> oracle_is_w_separable(const PartialExtension& e,
                                                    std::span<const int> w_args) {
  check_args(e);
  const int q = e.f.q, n = e.f.n;
  std::vector<int> w = sorted_args(w_args, n);
  if (static_cast<int>(w.size()) < 2 || static_cast<int>(w.size()) > n - 1)
    throw std::invalid_argument("|W| must lie in [2, n-1]");
  std::vector<int> u = complement_args(w, n);
  const int wstar = w[0], ustar = u[0];

  auto wsize = pow_u64(static_cast<std::uint64_t>(q), static_cast<int>(w.size()));
  auto usize = pow_u64(static_cast<std::uint64_t>(q), static_cast<int>(u.size()));
  FnTable fw{q, static_cast<int>(w.size()), std::vector<std::uint8_t>(*wsize, 0)};
  FnTable fu{q, static_cast<int>(u.size()), std::vector<std::uint8_t>(*usize, 0)};

  std::vector<int> full(static_cast<size_t>(n) + 1, 0);

  // Hyperplane point with the W side free and the U side zero except for the
  // absorber, which soaks up whatever the constraint still needs.
  for_each_point(q, static_cast<int>(w.size()), [&](const std::vector<int>& xw) {
    std::fill(full.begin(), full.end(), 0);
    long long s = 0;
    for (size_t k = 0; k < w.size(); ++k) {
      full[static_cast<size_t>(w[k])] = xw[k];
      s += xw[k];
    }
    full[static_cast<size_t>(ustar)] = mod_q(e.a - s, q);
    int p1 = full_point_value(e, full);
    // Cross term: both sides pinned to their absorbers.
    std::fill(full.begin(), full.end(), 0);
    full[static_cast<size_t>(wstar)] = mod_q(s, q);
    full[static_cast<size_t>(ustar)] = mod_q(e.a - s, q);
    int p3 = full_point_value(e, full);
    fw.values[table_index(xw, q)] = static_cast<std::uint8_t>(mod_q(p1 - p3, q));
  });

  for_each_point(q, static_cast<int>(u.size()), [&](const std::vector<int>& xu) {
    std::fill(full.begin(), full.end(), 0);
    long long s = 0;
    for (size_t k = 0; k < u.size(); ++k) {
      full[static_cast<size_t>(u[k])] = xu[k];
      s += xu[k];
    }
    full[static_cast<size_t>(wstar)] = mod_q(e.a - s, q);
    fu.values[table_index(xu, q)] = static_cast<std::uint8_t>(full_point_value(e, full));
  });

  // Normalize: the U part vanishes at the zero point of U.
  int shift = fu.values[0];
  for (auto& v : fu.values) v = static_cast<std::uint8_t>(mod_q(v - shift, q));
  for (auto& v : fw.values) v = static_cast<std::uint8_t>(mod_q(v + shift, q));

  // Verify the candidate split over the entire hyperplane.
  bool ok = true;
  for_each_point(q, n, [&](const std::vector<int>& xs) {
    if (!ok) return;
    long long s = 0;
    for (int v : xs) s += v;
    for (int k = 0; k < n; ++k) full[static_cast<size_t>(k) + 1] = xs[k];
    full[0] = mod_q(e.a - s, q);
    int lhs = table_at(e.f, xs);
    int rhs = mod_q(fw.values[pack(full, w, q)] + fu.values[pack(full, u, q)], q);
    if (lhs != rhs) ok = false;
  });
  if (!ok) return std::nullopt;
  return ExtensionSplit{{std::move(w), std::move(fw)}, {std::move(u), std::move(fu)}};
}

bool is_w_separable_quadratic(const Poly& p, int a, std::span<const int> w_args) {
  if (p.q() % 2 == 0) throw std::invalid_argument("q must be an odd prime");
  if (a < 0 || a >= p.q()) throw std::invalid_argument("a out of range");
  const int n = p.nvars() - 1;
  std::vector<int> w = sorted_args(w_args, n);
  if (static_cast<int>(w.size()) < 2 || static_cast<int>(w.size()) > n - 1)
    throw std::invalid_argument("|W| must lie in [2, n-1]");
  return is_separable_set(graph_of_quadratic(p), w).has_value();
}

std::optional<ExtensionSeparation> is_separable_extension(const PartialExtension& e,
                                                          bool verify_with_oracle) {
  check_args(e);
  const int q = e.f.q, n = e.f.n;
  if (n < 3) return std::nullopt;  // |W| in [2, n-1] needs both sides of size >= 2

  Poly rep = poly_from_table(e.f);
  const bool graph_route = rep.degree() <= 2 && q % 2 == 1;
  WeightedGraph graph = graph_route ? graph_of_quadratic(rep) : WeightedGraph(q, 1);

  std::optional<ExtensionSeparation> out;
  for (int s = 2; s <= n - 1 && !out; ++s) {
    for_each_combination(n, s - 1, [&](const std::vector<int>& rest) {
      if (out) return;
      std::vector<int> w(static_cast<size_t>(s));
      w[0] = 0;
      for (int i = 0; i + 1 < s; ++i) w[i + 1] = rest[i] + 1;
      std::optional<ExtensionSplit> split;
      bool hit;
      if (graph_route) {
        hit = is_separable_set(graph, w).has_value();
        if (hit || verify_with_oracle) {
          split = oracle_is_w_separable(e, w);
          if (split.has_value() != hit)
            throw std::logic_error("graph route disagrees with the oracle");
        }
      } else {
        split = oracle_is_w_separable(e, w);
        hit = split.has_value();
      }
      if (hit) out = ExtensionSeparation{w, std::move(*split)};
    });
  }
  return out;
}

}  // namespace zqsep
