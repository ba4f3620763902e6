#pragma once

// Partial functions on the hyperplane x_1 + ... + x_n + x_0 = a (mod q).
//
// A PartialExtension is a total table f of the visible arguments together
// with the constraint constant a; its value at a point of the hyperplane is
// f(x_1,...,x_n).  Argument indices run over {0, 1, ..., n} with 0 naming the
// hidden argument, matching slot 0 of Poly and vertex 0 of the quadratic
// graph.  A set W of argument indices is separable when the function splits
// as f'(x_W) + f''(x_U) over the whole hyperplane, U the complementary
// indices.

#include <optional>
#include <span>
#include <vector>

#include "zqsep/polynomial.hpp"

namespace zqsep {

struct PartialExtension {
  FnTable f;
  int a = 0;

  bool operator==(const PartialExtension&) const = default;
};

PartialExtension make_extension(FnTable f, int a);

// Value at (x_1,...,x_n, x_0); throws std::domain_error off the hyperplane.
int extension_eval(const PartialExtension& e, std::span<const int> xs, int x0);

// Fixes argument i (1..n, or 0 for the hidden argument) to the value b.  The
// result has one visible argument fewer and constraint constant a - b; its
// values agree pointwise with e on the restricted domain.  Fixing argument 0
// first exchanges it with argument n.
PartialExtension fix_argument(const PartialExtension& e, int i, int b);

// Exchanges the roles of argument i (1..n) and the hidden argument: the
// result g satisfies g(..., x_i, ..., x_0-slot) = e(..., x_0, ..., x_i-slot)
// across the hyperplane.  Involutive.
PartialExtension swap_with_x0(const PartialExtension& e, int i);

// One side of a split: the value table over the coordinates named by args
// (sorted ascending, index 0 first when present), indexed base-q with the
// first named coordinate most significant.
struct SplitPart {
  std::vector<int> args;
  FnTable table;
};

struct ExtensionSplit {
  SplitPart part_w;
  SplitPart part_u;
};

// Complete decision of W-separability by construction: builds the candidate
// split (absorber = the lowest index on each side; the doubly-pinned cross
// term is folded into the W side; the additive constant is normalized so the
// U part vanishes at the U zero point) and verifies it on every point of the
// hyperplane.  If any split exists, this one works.
std::optional<ExtensionSplit> oracle_is_w_separable(const PartialExtension& e,
                                                    std::span<const int> w_args);

// Graph route for quadratic representatives: W is separable for the partial
// function iff W separates the graph of the polynomial.  p may mention the
// hidden argument; q must be an odd prime; a names the hyperplane.
bool is_w_separable_quadratic(const Poly& p, int a, std::span<const int> w_args);

// First separable W containing index 0 (2 <= |W| <= n-1), scanned by size
// then lexicographically.  Quadratic inputs over odd q take the graph route
// and materialize the split with the oracle; verify_with_oracle additionally
// replays every scanned W through the oracle.
struct ExtensionSeparation {
  std::vector<int> w_args;
  ExtensionSplit split;
};
std::optional<ExtensionSeparation> is_separable_extension(const PartialExtension& e,
                                                          bool verify_with_oracle = false);

}  // namespace zqsep
