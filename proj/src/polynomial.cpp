#include "zqsep/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace zqsep {

namespace {

constexpr std::uint64_t kTableCap = 2'000'000;

int reduce_exp(int e, int q) {
  if (e <= 0) return 0;
  return 1 + (e - 1) % (q - 1);
}

int pow_mod(int base, int exp, int q) {
  int r = 1;
  base = mod_q(base, q);
  for (int i = 0; i < exp; ++i) r = mod_q(static_cast<long long>(r) * base, q);
  return r;
}

std::uint64_t checked_table_size(int q, int n) {
  auto size = pow_u64(static_cast<std::uint64_t>(q), n);
  if (!size || *size > kTableCap)
    throw BudgetError("table of q^" + std::to_string(n) + " values exceeds the dense cap");
  return *size;
}

}  // namespace

bool is_prime(int x) {
  if (x < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

Poly::Poly(int q, int nvars) : q_(q), nvars_(nvars) {
  if (!is_prime(q)) throw std::invalid_argument("q must be prime");
  if (nvars < 1) throw std::invalid_argument("nvars must be positive");
}

void Poly::add_term(std::span<const int> exps, int coef) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw std::invalid_argument("exponent vector size mismatch");
  std::vector<std::uint8_t> key(static_cast<size_t>(nvars_));
  for (int i = 0; i < nvars_; ++i) {
    if (exps[i] < 0) throw std::invalid_argument("negative exponent");
    key[i] = static_cast<std::uint8_t>(reduce_exp(exps[i], q_));
  }
  int c = mod_q(terms_.count(key) ? terms_[key] + coef : coef, q_);
  if (c == 0)
    terms_.erase(key);
  else
    terms_[key] = c;
}

int Poly::coef(std::span<const int> exps) const {
  std::vector<std::uint8_t> key(static_cast<size_t>(nvars_));
  for (int i = 0; i < nvars_; ++i)
    key[i] = static_cast<std::uint8_t>(reduce_exp(exps[i], q_));
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

int Poly::eval(std::span<const int> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("point size mismatch");
  long long acc = 0;
  for (const auto& [exps, c] : terms_) {
    long long t = c;
    for (int i = 0; i < nvars_; ++i)
      if (exps[i]) t = t * pow_mod(point[i], exps[i], q_) % q_;
    acc += t;
  }
  return mod_q(acc, q_);
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [exps, c] : terms_) {
    (void)c;
    int t = 0;
    for (auto e : exps) t += e;
    d = std::max(d, t);
  }
  return d;
}

bool Poly::uses_slot0() const {
  for (const auto& [exps, c] : terms_) {
    (void)c;
    if (exps[0]) return true;
  }
  return false;
}

Poly add(const Poly& a, const Poly& b) {
  if (a.q() != b.q() || a.nvars() != b.nvars())
    throw std::invalid_argument("polynomial shape mismatch");
  Poly r = a;
  for (const auto& [exps, c] : b.terms()) {
    std::vector<int> e(exps.begin(), exps.end());
    r.add_term(e, c);
  }
  return r;
}

Poly multiply(const Poly& a, const Poly& b) {
  if (a.q() != b.q() || a.nvars() != b.nvars())
    throw std::invalid_argument("polynomial shape mismatch");
  Poly r(a.q(), a.nvars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      std::vector<int> e(static_cast<size_t>(a.nvars()));
      for (int i = 0; i < a.nvars(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, mod_q(static_cast<long long>(ca) * cb, a.q()));
    }
  return r;
}

Poly scale(const Poly& a, int c) {
  Poly r(a.q(), a.nvars());
  for (const auto& [exps, coef] : a.terms()) {
    std::vector<int> e(exps.begin(), exps.end());
    r.add_term(e, mod_q(static_cast<long long>(coef) * c, a.q()));
  }
  return r;
}

std::uint64_t table_index(std::span<const int> point, int q) {
  std::uint64_t idx = 0;
  for (int x : point) idx = idx * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(x);
  return idx;
}

FnTable make_table(int q, int n) {
  if (!is_prime(q)) throw std::invalid_argument("q must be prime");
  if (n < 1) throw std::invalid_argument("n must be positive");
  FnTable t{q, n, {}};
  t.values.assign(checked_table_size(q, n), 0);
  return t;
}

int table_at(const FnTable& t, std::span<const int> point) {
  if (static_cast<int>(point.size()) != t.n)
    throw std::invalid_argument("point size mismatch");
  return t.values[table_index(point, t.q)];
}

namespace {

// Walks all points of Z_q^n in index order, calling fn(point).
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

}  // namespace

FnTable table_from_poly(const Poly& p) {
  if (p.uses_slot0())
    throw std::invalid_argument("polynomial still uses the hidden argument");
  const int n = p.nvars() - 1;
  if (n < 1) throw std::invalid_argument("no visible arguments");
  FnTable t = make_table(p.q(), n);
  std::vector<int> full(static_cast<size_t>(p.nvars()), 0);
  for_each_point(p.q(), n, [&](const std::vector<int>& x) {
    for (int i = 0; i < n; ++i) full[static_cast<size_t>(i) + 1] = x[i];
    t.values[table_index(x, p.q())] = static_cast<std::uint8_t>(p.eval(full));
  });
  return t;
}

Poly poly_from_table(const FnTable& t) {
  const int q = t.q, n = t.n;
  if (!is_prime(q)) throw std::invalid_argument("q must be prime");
  const std::uint64_t size = checked_table_size(q, n);
  if (t.values.size() != size) throw std::invalid_argument("table size mismatch");

  // Invert the q x q Vandermonde matrix V[i][j] = i^j over Z_q once, then
  // apply it along each axis: values become coefficients axis by axis.
  std::vector<std::vector<int>> m(static_cast<size_t>(q),
                                  std::vector<int>(static_cast<size_t>(2 * q), 0));
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) m[i][j] = pow_mod(i, j, q);
    m[i][static_cast<size_t>(q) + i] = 1;
  }
  for (int col = 0; col < q; ++col) {
    int piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[static_cast<size_t>(col)]);
    int inv = pow_mod(m[col][col], q - 2, q);
    for (int j = 0; j < 2 * q; ++j) m[col][j] = mod_q(static_cast<long long>(m[col][j]) * inv, q);
    for (int r = 0; r < q; ++r) {
      if (r == col || m[r][col] == 0) continue;
      int f = m[r][col];
      for (int j = 0; j < 2 * q; ++j)
        m[r][j] = mod_q(m[r][j] - static_cast<long long>(f) * m[col][j], q);
    }
  }
  std::vector<std::vector<int>> vinv(static_cast<size_t>(q), std::vector<int>(static_cast<size_t>(q)));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) vinv[i][j] = m[i][static_cast<size_t>(q) + j];

  std::vector<int> work(t.values.begin(), t.values.end());
  std::uint64_t stride = size;
  for (int axis = 0; axis < n; ++axis) {
    stride /= static_cast<std::uint64_t>(q);  // distance between consecutive axis values
    std::vector<int> line(static_cast<size_t>(q));
    for (std::uint64_t base = 0; base < size; ++base) {
      std::uint64_t digit = base / stride % static_cast<std::uint64_t>(q);
      if (digit != 0) continue;
      for (int v = 0; v < q; ++v) line[v] = work[base + stride * static_cast<std::uint64_t>(v)];
      for (int e = 0; e < q; ++e) {
        long long acc = 0;
        for (int v = 0; v < q; ++v) acc += static_cast<long long>(vinv[e][v]) * line[v];
        work[base + stride * static_cast<std::uint64_t>(e)] = mod_q(acc, q);
      }
    }
  }

  Poly p(q, n + 1);
  std::vector<int> exps(static_cast<size_t>(n) + 1, 0);
  for_each_point(q, n, [&](const std::vector<int>& e) {
    int c = work[table_index(e, q)];
    if (c == 0) return;
    for (int i = 0; i < n; ++i) exps[static_cast<size_t>(i) + 1] = e[i];
    p.add_term(exps, c);
  });
  return p;
}

Poly reduce_mod_constraint(const Poly& p, int a) {
  const int q = p.q(), nv = p.nvars();
  if (a < 0 || a >= q) throw std::invalid_argument("a out of range");
  // sub = a - x_1 - ... - x_{nv-1}
  Poly sub(q, nv);
  std::vector<int> exps(static_cast<size_t>(nv), 0);
  sub.add_term(exps, a);
  for (int i = 1; i < nv; ++i) {
    exps.assign(static_cast<size_t>(nv), 0);
    exps[static_cast<size_t>(i)] = 1;
    sub.add_term(exps, q - 1);
  }

  std::vector<Poly> sub_pow;  // sub^k, built on demand
  Poly one(q, nv);
  exps.assign(static_cast<size_t>(nv), 0);
  one.add_term(exps, 1);
  sub_pow.push_back(one);

  Poly r(q, nv);
  for (const auto& [e, c] : p.terms()) {
    int e0 = e[0];
    while (static_cast<int>(sub_pow.size()) <= e0)
      sub_pow.push_back(multiply(sub_pow.back(), sub));
    Poly rest(q, nv);
    std::vector<int> re(static_cast<size_t>(nv), 0);
    for (int i = 1; i < nv; ++i) re[static_cast<size_t>(i)] = e[i];
    rest.add_term(re, c);
    r = add(r, multiply(rest, sub_pow[static_cast<size_t>(e0)]));
  }
  return r;
}

WeightedGraph graph_of_quadratic(const Poly& p) {
  if (p.degree() > 2) throw std::invalid_argument("polynomial degree exceeds 2");
  WeightedGraph g(p.q(), p.nvars());
  for (const auto& [exps, c] : p.terms()) {
    std::vector<int> vars;
    for (int i = 0; i < p.nvars(); ++i)
      for (int k = 0; k < exps[i]; ++k) vars.push_back(i);
    if (vars.size() == 2 && vars[0] != vars[1]) g.set_weight(vars[0], vars[1], c);
  }
  return g;
}

Poly random_quadratic(int q, int n, Lcg64& rng) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  Poly p(q, n + 1);
  std::vector<int> exps(static_cast<size_t>(n) + 1, 0);
  p.add_term(exps, rng.next_mod(q));
  for (int i = 1; i <= n; ++i) {
    exps.assign(static_cast<size_t>(n) + 1, 0);
    exps[static_cast<size_t>(i)] = 1;
    p.add_term(exps, rng.next_mod(q));
  }
  for (int i = 1; i <= n; ++i) {
    exps.assign(static_cast<size_t>(n) + 1, 0);
    exps[static_cast<size_t>(i)] = 2;
    p.add_term(exps, rng.next_mod(q));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      exps.assign(static_cast<size_t>(n) + 1, 0);
      exps[static_cast<size_t>(i)] = 1;
      exps[static_cast<size_t>(j)] = 1;
      p.add_term(exps, rng.next_mod(q));
    }
  return p;
}

}  // namespace zqsep
