#include "zqsep/quasigroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "zqsep/zq.hpp"

namespace zqsep {

namespace {

constexpr std::uint64_t kQgCap = 10'000'000;

std::uint64_t checked_qg_size(int m, int n) {
  auto size = pow_u64(static_cast<std::uint64_t>(m), n);
  if (!size || *size > kQgCap)
    throw BudgetError("quasigroup table of m^" + std::to_string(n) +
                      " entries exceeds the dense cap");
  return *size;
}

void check_pos(int pos, int n) {
  if (pos < 1 || pos > n) throw std::out_of_range("argument position out of range");
}

template <class Fn>
void for_each_point(int m, int n, Fn&& fn) {
  std::vector<int> x(static_cast<size_t>(n), 0);
  while (true) {
    fn(static_cast<const std::vector<int>&>(x));
    int i = n - 1;
    while (i >= 0 && x[i] == m - 1) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
  }
}

}  // namespace

QuasigroupTable make_qg_table(int m, int n) {
  if (m < 1 || m > 65535) throw std::invalid_argument("alphabet size out of range");
  if (n < 1) throw std::invalid_argument("arity must be positive");
  QuasigroupTable t{m, n, {}};
  t.values.assign(checked_qg_size(m, n), 0);
  return t;
}

std::uint64_t qg_index(const QuasigroupTable& t, std::span<const int> point) {
  std::uint64_t idx = 0;
  for (int x : point)
    idx = idx * static_cast<std::uint64_t>(t.m) + static_cast<std::uint64_t>(x);
  return idx;
}

int qg_at(const QuasigroupTable& t, std::span<const int> point) {
  if (static_cast<int>(point.size()) != t.n)
    throw std::invalid_argument("point size mismatch");
  return t.values[qg_index(t, point)];
}

QuasigroupTable build_qfa(const FnTable& f, int a) {
  const int q = f.q, n = f.n;
  if (a < 0 || a >= q) throw std::invalid_argument("a out of range");
  QuasigroupTable t = make_qg_table(q * q, n);
  std::vector<int> xs(static_cast<size_t>(n));
  for_each_point(q * q, n, [&](const std::vector<int>& z) {
    long long sx = 0, sy = 0;
    for (int k = 0; k < n; ++k) {
      xs[static_cast<size_t>(k)] = z[k] / q;
      sx += z[k] / q;
      sy += z[k] % q;
    }
    int first = mod_q(a - sx, q);
    int second = mod_q(table_at(f, xs) - sy, q);
    t.values[qg_index(t, z)] = static_cast<std::uint16_t>(first * q + second);
  });
  return t;
}

bool is_quasigroup(const QuasigroupTable& t) {
  const int m = t.m, n = t.n;
  std::vector<bool> seen(static_cast<size_t>(m));
  for (int axis = 0; axis < n; ++axis) {
    std::uint64_t stride = 1;
    for (int k = axis + 1; k < n; ++k) stride *= static_cast<std::uint64_t>(m);
    for (std::uint64_t base = 0; base < t.values.size(); ++base) {
      if (base / stride % static_cast<std::uint64_t>(m) != 0) continue;
      std::fill(seen.begin(), seen.end(), false);
      for (int v = 0; v < m; ++v) {
        int val = t.values[base + stride * static_cast<std::uint64_t>(v)];
        if (val < 0 || val >= m || seen[static_cast<size_t>(val)]) return false;
        seen[static_cast<size_t>(val)] = true;
      }
    }
  }
  return true;
}

QuasigroupTable retract(const QuasigroupTable& t, int pos, int c) {
  check_pos(pos, t.n);
  if (c < 0 || c >= t.m) throw std::invalid_argument("constant out of range");
  if (t.n < 2) throw std::invalid_argument("cannot retract a unary table");
  QuasigroupTable r = make_qg_table(t.m, t.n - 1);
  std::vector<int> x(static_cast<size_t>(t.n));
  for_each_point(t.m, t.n - 1, [&](const std::vector<int>& y) {
    for (int k = 0; k < t.n - 1; ++k)
      x[static_cast<size_t>(k) + (k >= pos - 1 ? 1 : 0)] = y[k];
    x[static_cast<size_t>(pos) - 1] = c;
    r.values[qg_index(r, y)] = static_cast<std::uint16_t>(qg_at(t, x));
  });
  return r;
}

QuasigroupTable invert(const QuasigroupTable& t, int pos) {
  check_pos(pos, t.n);
  QuasigroupTable r = make_qg_table(t.m, t.n);
  std::vector<bool> written(t.values.size(), false);
  std::vector<int> y(static_cast<size_t>(t.n));
  for_each_point(t.m, t.n, [&](const std::vector<int>& x) {
    int v = qg_at(t, x);
    y.assign(x.begin(), x.end());
    y[static_cast<size_t>(pos) - 1] = v;
    std::uint64_t idx = qg_index(r, y);
    if (written[idx]) throw std::invalid_argument("table is not invertible at this position");
    written[idx] = true;
    r.values[idx] = static_cast<std::uint16_t>(x[static_cast<size_t>(pos) - 1]);
  });
  return r;
}

namespace {

// Congruence split with an explicit inner block of argument positions.
std::optional<QgSplit> split_by_inner(const QuasigroupTable& t,
                                      std::vector<int> inner) {
  const int m = t.m, n = t.n;
  const int k = static_cast<int>(inner.size());
  std::vector<int> outer;
  {
    std::vector<bool> is_inner(static_cast<size_t>(n) + 1, false);
    for (int p : inner) is_inner[static_cast<size_t>(p)] = true;
    for (int p = 1; p <= n; ++p)
      if (!is_inner[static_cast<size_t>(p)]) outer.push_back(p);
  }
  const int ko = static_cast<int>(outer.size());

  auto inner_size = pow_u64(static_cast<std::uint64_t>(m), k);
  auto outer_size = pow_u64(static_cast<std::uint64_t>(m), ko);

  // Signature of an inner tuple = the value row over all outer assignments.
  // Two tuples are congruent when their signatures match; separability needs
  // exactly m classes.
  std::vector<int> point(static_cast<size_t>(n));
  std::map<std::vector<std::uint16_t>, int> classes;
  std::vector<int> class_of(*inner_size, -1);
  std::vector<std::uint64_t> representative;  // first inner index per class
  bool too_many = false;
  std::vector<std::uint16_t> sig(*outer_size);
  std::vector<int> xu(static_cast<size_t>(k));
  for (std::uint64_t ui = 0; ui < *inner_size && !too_many; ++ui) {
    std::uint64_t rest = ui;
    for (int j = k - 1; j >= 0; --j) {
      xu[static_cast<size_t>(j)] = static_cast<int>(rest % static_cast<std::uint64_t>(m));
      rest /= static_cast<std::uint64_t>(m);
    }
    for (int j = 0; j < k; ++j) point[static_cast<size_t>(inner[static_cast<size_t>(j)]) - 1] = xu[static_cast<size_t>(j)];
    std::uint64_t oi = 0;
    for_each_point(m, ko, [&](const std::vector<int>& xo) {
      for (int j = 0; j < ko; ++j) point[static_cast<size_t>(outer[static_cast<size_t>(j)]) - 1] = xo[j];
      sig[oi++] = static_cast<std::uint16_t>(qg_at(t, point));
    });
    auto [it, fresh] = classes.try_emplace(sig, static_cast<int>(classes.size()));
    if (fresh) {
      representative.push_back(ui);
      if (static_cast<int>(classes.size()) > m) too_many = true;
    }
    class_of[ui] = it->second;
  }
  if (too_many || static_cast<int>(classes.size()) != m) return std::nullopt;

  QuasigroupTable h{m, k, {}};
  h.values.assign(*inner_size, 0);
  for (std::uint64_t ui = 0; ui < *inner_size; ++ui)
    h.values[ui] = static_cast<std::uint16_t>(class_of[ui]);
  if (!is_quasigroup(h)) return std::nullopt;

  QuasigroupTable g = make_qg_table(m, ko + 1);
  std::vector<int> gpoint(static_cast<size_t>(ko) + 1);
  for_each_point(m, ko, [&](const std::vector<int>& xo) {
    for (int j = 0; j < ko; ++j) {
      point[static_cast<size_t>(outer[static_cast<size_t>(j)]) - 1] = xo[j];
      gpoint[static_cast<size_t>(j)] = xo[j];
    }
    for (int cls = 0; cls < m; ++cls) {
      std::uint64_t rest = representative[static_cast<size_t>(cls)];
      for (int j = k - 1; j >= 0; --j) {
        point[static_cast<size_t>(inner[static_cast<size_t>(j)]) - 1] =
            static_cast<int>(rest % static_cast<std::uint64_t>(m));
        rest /= static_cast<std::uint64_t>(m);
      }
      gpoint[static_cast<size_t>(ko)] = cls;
      g.values[qg_index(g, gpoint)] = static_cast<std::uint16_t>(qg_at(t, point));
    }
  });

  QgSplit out;
  out.inner_positions = std::move(inner);
  out.h = std::move(h);
  out.g = std::move(g);
  return out;
}

}  // namespace

std::optional<QgSplit> is_w_separable_qg(const QuasigroupTable& t,
                                         std::span<const int> w) {
  const int n = t.n;
  std::vector<int> ws(w.begin(), w.end());
  std::sort(ws.begin(), ws.end());
  if (std::adjacent_find(ws.begin(), ws.end()) != ws.end())
    throw std::invalid_argument("duplicate index in W");
  for (int x : ws)
    if (x < 0 || x > n) throw std::out_of_range("index out of range");
  if (static_cast<int>(ws.size()) < 2 || static_cast<int>(ws.size()) > n - 1)
    throw std::invalid_argument("|W| must lie in [2, n-1]");

  std::optional<int> inverted_at;
  std::vector<int> inner;
  const QuasigroupTable* table = &t;
  QuasigroupTable inverted;
  if (!ws.empty() && ws[0] == 0) {
    // W names the output; swap it with the smallest position outside W.
    int j = 1;
    while (std::binary_search(ws.begin(), ws.end(), j)) ++j;
    inverted = invert(t, j);
    table = &inverted;
    inverted_at = j;
    inner.assign(ws.begin() + 1, ws.end());
    inner.push_back(j);
    std::sort(inner.begin(), inner.end());
  } else {
    inner = ws;
  }

  auto split = split_by_inner(*table, std::move(inner));
  if (!split) return std::nullopt;
  split->w = std::move(ws);
  split->inverted_at = inverted_at;
  return split;
}

std::optional<QgSplit> is_separable_qg(const QuasigroupTable& t, bool include_full_w) {
  const int n = t.n;
  std::optional<QgSplit> out;
  for (int s = 2; s <= n - 1 && !out; ++s) {
    for_each_combination(n, s - 1, [&](const std::vector<int>& rest) {
      if (out) return;
      std::vector<int> w(static_cast<size_t>(s));
      w[0] = 0;
      for (int i = 0; i + 1 < s; ++i) w[i + 1] = rest[i] + 1;
      out = is_w_separable_qg(t, w);
    });
  }
  if (!out && include_full_w && n >= 1) {
    // |W| = n leaves a single free index; such splits are formal identities:
    // H is the table solved for that index and G is unary.  Reported only
    // under the wider W convention.
    QgSplit trivial;
    trivial.w.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) trivial.w[static_cast<size_t>(i)] = i;  // {0,...,n-1}
    trivial.inverted_at = n;
    trivial.inner_positions.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) trivial.inner_positions[static_cast<size_t>(i)] = i + 1;
    trivial.h = invert(t, n);
    trivial.g = make_qg_table(t.m, 1);
    for (int v = 0; v < t.m; ++v)
      trivial.g.values[static_cast<size_t>(v)] = static_cast<std::uint16_t>(v);
    out = trivial;
  }
  return out;
}

RetractReport verify_retract_corollary(const FnTable& f, int a) {
  const int q = f.q, n = f.n;
  if (q <= 2 || !is_prime(q)) throw std::invalid_argument("q must be an odd prime > 2");
  if (poly_from_table(f).degree() > 2)
    throw std::invalid_argument("f must be quadratic");
  if (n < 2) throw std::invalid_argument("arity must be at least 2");

  RetractReport rep;
  rep.q = q;
  rep.n = n;
  rep.a = a;

  QuasigroupTable base = build_qfa(f, a);
  rep.quasigroup_separable = is_separable_qg(base).has_value();

  for (int inv = 0; inv <= n; ++inv) {
    QuasigroupTable t = inv == 0 ? base : invert(base, inv);
    for (int pos = 1; pos <= n; ++pos)
      for (int c = 0; c < t.m; ++c) {
        ++rep.retracts;
        if (is_separable_qg(retract(t, pos, c)).has_value()) ++rep.retracts_separable;
      }
  }
  rep.premise_holds = rep.retracts == rep.retracts_separable;
  rep.violation = rep.premise_holds && !rep.quasigroup_separable;
  return rep;
}

}  // namespace zqsep
