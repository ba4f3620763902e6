#pragma once

// Polynomials and dense value tables over Z_q, q prime.
//
// Argument slots are numbered 0..nvars-1.  Slot 0 is reserved for the hidden
// argument of a partial function (the one determined by the domain constraint
// x_1 + ... + x_n + x_0 = a); slots 1.. are the visible arguments.  Ordinary
// polynomials simply leave slot 0 unused.  Exponents are kept reduced by
// x^q = x, which preserves the induced function.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "zqsep/graph.hpp"
#include "zqsep/zq.hpp"

namespace zqsep {

bool is_prime(int x);

class Poly {
 public:
  Poly(int q, int nvars);

  int q() const { return q_; }
  int nvars() const { return nvars_; }

  // Adds coef * prod x_i^exps[i]; exponents are reduced, zero terms vanish.
  void add_term(std::span<const int> exps, int coef);

  int coef(std::span<const int> exps) const;
  const std::map<std::vector<std::uint8_t>, int>& terms() const { return terms_; }

  int eval(std::span<const int> point) const;  // point has nvars coordinates
  int degree() const;                          // total degree, 0 for the zero poly
  bool uses_slot0() const;

  bool operator==(const Poly&) const = default;

 private:
  int q_;
  int nvars_;
  std::map<std::vector<std::uint8_t>, int> terms_;  // reduced exps -> coef in [1, q)
};

Poly add(const Poly& a, const Poly& b);
Poly multiply(const Poly& a, const Poly& b);
Poly scale(const Poly& a, int c);

// Dense table of a total function f : Z_q^n -> Z_q.  The index of a point
// (x_1,...,x_n) is base-q with x_1 as the most significant digit.
struct FnTable {
  int q = 0;
  int n = 0;
  std::vector<std::uint8_t> values;

  bool operator==(const FnTable&) const = default;
};

std::uint64_t table_index(std::span<const int> point, int q);
FnTable make_table(int q, int n);
int table_at(const FnTable& t, std::span<const int> point);

// Evaluates p (which must not use slot 0) on the full cube.  Table size q^n is
// capped to keep accidental blowups loud rather than slow.
FnTable table_from_poly(const Poly& p);

// The unique polynomial with per-variable exponents < q inducing the table.
Poly poly_from_table(const FnTable& t);

// Substitutes x_0 = a - (x_1 + ... + x_n) into p.  The result uses slot 0 for
// nothing and is the canonical representative of the partial function p
// induces on the constrained domain.
Poly reduce_mod_constraint(const Poly& p, int a);

// The graph of a quadratic polynomial: vertices are the argument slots, and
// {i, j} carries the coefficient of x_i x_j.  Squares, linear and constant
// terms do not contribute.
WeightedGraph graph_of_quadratic(const Poly& p);

// Deterministic random quadratic over the visible slots 1..n.  Coefficients
// are drawn from rng in a fixed term order — constant, linear by slot,
// squares by slot, cross terms in lexicographic pair order — so a seed pins
// the polynomial exactly.
Poly random_quadratic(int q, int n, Lcg64& rng);

}  // namespace zqsep
