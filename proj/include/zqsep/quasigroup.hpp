#pragma once

// n-ary quasigroups of order q^2 built from functions over Z_q, and their
// composition separability.
//
// Elements encode pairs [x, y] of Z_q x Z_q as x*q + y.  The table of an
// n-ary operation on m symbols is stored flat, row-major (first argument most
// significant).  Argument positions are 1..n; position 0 names the output,
// so W ranges over subsets of {0, 1, ..., n}.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zqsep/polynomial.hpp"

namespace zqsep {

struct QuasigroupTable {
  int m = 0;  // alphabet size
  int n = 0;  // arity
  std::vector<std::uint16_t> values;  // m^n entries

  bool operator==(const QuasigroupTable&) const = default;
};

QuasigroupTable make_qg_table(int m, int n);
std::uint64_t qg_index(const QuasigroupTable& t, std::span<const int> point);
int qg_at(const QuasigroupTable& t, std::span<const int> point);

// The order-q^2 quasigroup  ([x_1,y_1],...,[x_n,y_n]) ->
//   [ -(x_1+...+x_n) + a,  -(y_1+...+y_n) + f(x_1,...,x_n) ].
QuasigroupTable build_qfa(const FnTable& f, int a);

// Every one-dimensional section along every axis is a permutation.
bool is_quasigroup(const QuasigroupTable& t);

// Fixes argument pos (1..n) to the symbol c; arity drops by one.
QuasigroupTable retract(const QuasigroupTable& t, int pos, int c);

// Inversion at pos (1..n): position pos of the result carries the old output
// and the result yields the old argument pos.  Requires a quasigroup.
QuasigroupTable invert(const QuasigroupTable& t, int pos);

// A witness that t splits as  t(x) = G(x_outer, H(x_inner)).  inner_positions
// are positions of the possibly-inverted table (see inverted_at); H is
// normalized by first occurrence in row-major scan order, which pins
// H(0,...,0) = 0.  G takes the outer arguments in ascending position order
// followed by the H value.
struct QgSplit {
  std::vector<int> w;                // the W that was asked about, sorted
  std::optional<int> inverted_at;    // set when 0 was in W
  std::vector<int> inner_positions;  // sorted positions forming the H block
  QuasigroupTable h;
  QuasigroupTable g;
};

// Decides W-separability (2 <= |W| <= n-1, W within {0..n}) through the
// induced congruence: symbols of the inner block are merged when they are
// interchangeable under every outer assignment, and t splits iff exactly m
// classes remain and the class map is itself a quasigroup.  A W containing
// the output index is reduced by inverting at the smallest complement
// position first.
std::optional<QgSplit> is_w_separable_qg(const QuasigroupTable& t,
                                         std::span<const int> w);

// First separable W by size then lexicographic order, always containing 0;
// complements are covered by the output/argument exchange.  Arity 2 has no
// admissible W and is never separable.  include_full_w additionally reports
// the always-separable |W| = n sets (single-index complements) last.
std::optional<QgSplit> is_separable_qg(const QuasigroupTable& t,
                                       bool include_full_w = false);

// Checks the retract implication for one quadratic f and constant a: if every
// (n-1)-ary retract (over every position, constant, and inversion) is
// separable, the quasigroup itself must be.
struct RetractReport {
  int q = 0, n = 0, a = 0;
  int retracts = 0;
  int retracts_separable = 0;
  bool premise_holds = false;
  bool quasigroup_separable = false;
  bool violation = false;
};
RetractReport verify_retract_corollary(const FnTable& f, int a);

}  // namespace zqsep
