#pragma once

// Small shared helpers: arithmetic mod q, a fixed 64-bit linear generator for
// reproducible sampling, and combination enumeration in lexicographic order.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zqsep {

inline int mod_q(long long x, int q) {
  long long r = x % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

// x_{k+1} = x_k * 6364136223846793005 + 1442695040888963407  (mod 2^64),
// the MMIX multiplier/increment.  Sampling reduces the raw state by modulo;
// both choices are part of the output contract, so reports stay reproducible
// across platforms and thread counts.
struct Lcg64 {
  std::uint64_t state;

  explicit Lcg64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state;
  }

  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  // Uniform value in [0, q).
  int next_mod(int q) { return static_cast<int>(next() % static_cast<std::uint64_t>(q)); }
};

// base^exp, or nullopt on 64-bit overflow.
inline std::optional<std::uint64_t> pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
    r *= base;
  }
  return r;
}

// Raised when an enumeration would exceed the configured candidate budget.
struct BudgetError : std::runtime_error {
  std::uint64_t required;
  explicit BudgetError(std::uint64_t req, std::uint64_t budget)
      : std::runtime_error("enumeration needs " + std::to_string(req) +
                           " candidates, budget is " + std::to_string(budget)),
        required(req) {}
  explicit BudgetError(const std::string& what)
      : std::runtime_error(what), required(UINT64_MAX) {}
};

// All k-element subsets of {0,...,n-1} in lexicographic order of the sorted
// vertex list.  fn receives the subset as a const std::vector<int>&.
template <class Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    fn(static_cast<const std::vector<int>&>(c));
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// Subsets of {0,...,n-1} that contain 0, enumerated by size (ascending) and
// lexicographically within each size.  Sizes run over [min_size, max_size].
template <class Fn>
void for_each_subset_with_zero(int n, int min_size, int max_size, Fn&& fn) {
  for (int s = min_size; s <= max_size; ++s) {
    if (s < 1 || s > n) continue;
    for_each_combination(n - 1, s - 1, [&](const std::vector<int>& rest) {
      std::vector<int> w(s);
      w[0] = 0;
      for (int i = 0; i + 1 < s; ++i) w[i + 1] = rest[i] + 1;
      fn(static_cast<const std::vector<int>&>(w));
    });
  }
}

}  // namespace zqsep
