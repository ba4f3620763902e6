#include "zqsep/census.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zqsep/zq.hpp"

namespace zqsep {
namespace {

constexpr std::uint64_t kChunk = 4096;

int triangle_cells(int n) { return n >= 3 ? (n - 1) * (n - 2) / 2 : 0; }

// Shifts reachable on the residual triangle once vertex 0 is pinned isolated:
// every weight moves by 2t, so all nonzero residues for odd q, the even ones
// for even q.  Mirrors the canonical-form definition in graph.cpp.
std::vector<int> residual_shifts(int q) {
  std::vector<int> s;
  if (q % 2 == 1) {
    for (int i = 1; i < q; ++i) s.push_back(i);
  } else {
    for (int i = 2; i < q; i += 2) s.push_back(i);
  }
  return s;
}

// Big-endian base-q digits: cell 0 is the most significant, so candidate
// index order equals lexicographic order of the cell vectors.
void decode_cells(std::uint64_t idx, int q, std::vector<std::uint8_t>& tri) {
  for (int i = static_cast<int>(tri.size()) - 1; i >= 0; --i) {
    tri[static_cast<size_t>(i)] = static_cast<std::uint8_t>(idx % static_cast<std::uint64_t>(q));
    idx /= static_cast<std::uint64_t>(q);
  }
}

// Lexicographic minimality under the residual shifts.  A nonzero shift moves
// every cell, so each comparison is settled at the first cell it reaches.
bool cells_canonical(const std::vector<std::uint8_t>& tri, int q,
                     const std::vector<int>& shifts) {
  for (int s : shifts) {
    for (std::uint8_t cell : tri) {
      int shifted = cell + s;
      if (shifted >= q) shifted -= q;
      if (shifted == cell) continue;
      if (shifted < cell) return false;
      break;
    }
  }
  return true;
}

// Replaces tri with the lexicographically minimal shift image.
void canonicalize_cells(std::vector<std::uint8_t>& tri, int q,
                        const std::vector<int>& shifts) {
  std::vector<std::uint8_t> best = tri;
  std::vector<std::uint8_t> cand(tri.size());
  for (int s : shifts) {
    for (size_t i = 0; i < tri.size(); ++i)
      cand[i] = static_cast<std::uint8_t>(mod_q(tri[i] + s, q));
    if (cand < best) best = cand;
  }
  tri = std::move(best);
}

// Vertex 0 isolated; cells fill the row-major upper triangle on 1..n-1.
WeightedGraph graph_from_cells(int q, int n, const std::vector<std::uint8_t>& tri) {
  WeightedGraph g(q, n);
  size_t k = 0;
  for (int u = 1; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_weight(u, v, tri[k++]);
  return g;
}

std::uint64_t candidate_count(int q, int n, std::uint64_t budget) {
  auto total = pow_u64(static_cast<std::uint64_t>(q), triangle_cells(n));
  if (!total) throw BudgetError("candidate space q^C(n-1,2) overflows 64 bits");
  if (*total > budget) throw BudgetError(*total, budget);
  return *total;
}

void check_params(int q, int n) {
  if (q < 2 || q > 255) throw std::invalid_argument("q must be in [2, 255]");
  if (n < 1) throw std::invalid_argument("n must be positive");
}

// Chunked driver shared by the serial reference path and the OpenMP path.
// Every chunk is self-contained and chunks are merged in index order, so both
// paths produce identical reports for identical parameters.
template <class Acc, class Body>
std::vector<Acc> scan_chunks(std::uint64_t total, const CensusOptions& opts,
                             const Body& body) {
  const std::uint64_t nchunks = total == 0 ? 0 : (total - 1) / kChunk + 1;
  std::vector<Acc> accs(static_cast<size_t>(nchunks));
  const long long count = static_cast<long long>(nchunks);
#ifdef _OPENMP
  const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (opts.parallel)
#endif
  for (long long c = 0; c < count; ++c) {
    const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t hi = std::min(total, lo + kChunk);
    body(lo, hi, accs[static_cast<size_t>(c)]);
  }
  (void)opts;
  return accs;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

std::uint64_t rep_count_formula(int q, int n) {
  check_params(q, n);
  if (n <= 2) return 1;
  auto base = pow_u64(static_cast<std::uint64_t>(q), triangle_cells(n) - 1);
  if (!base) throw std::overflow_error("class count overflows 64 bits");
  return *base * static_cast<std::uint64_t>(q % 2 == 0 ? 2 : 1);
}

void enumerate_reps(int q, int n, std::uint64_t budget,
                    const std::function<void(const WeightedGraph&, std::uint64_t)>& fn) {
  check_params(q, n);
  const std::uint64_t total = candidate_count(q, n, budget);
  const auto shifts = residual_shifts(q);
  std::vector<std::uint8_t> tri(static_cast<size_t>(triangle_cells(n)));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode_cells(idx, q, tri);
    if (!cells_canonical(tri, q, shifts)) continue;
    fn(graph_from_cells(q, n, tri), idx);
  }
}

CensusReport find_critical(int q, int n, const CensusOptions& opts) {
  check_params(q, n);
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = candidate_count(q, n, opts.budget);
  const auto shifts = residual_shifts(q);

  struct Acc {
    std::uint64_t reps = 0;
    std::vector<std::pair<std::uint64_t, WeightedGraph>> hits;
  };
  auto accs = scan_chunks<Acc>(total, opts, [&](std::uint64_t lo, std::uint64_t hi, Acc& acc) {
    std::vector<std::uint8_t> tri(static_cast<size_t>(triangle_cells(n)));
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      decode_cells(idx, q, tri);
      if (!cells_canonical(tri, q, shifts)) continue;
      ++acc.reps;
      WeightedGraph g = graph_from_cells(q, n, tri);
      if (is_critical(g)) acc.hits.emplace_back(idx, std::move(g));
    }
  });

  CensusReport report;
  report.q = q;
  report.n = n;
  report.candidates = total;
  for (auto& acc : accs) {
    report.classes_scanned += acc.reps;
    for (auto& hit : acc.hits) report.critical_classes.push_back(std::move(hit.second));
  }

  // Family matching runs serially over the merged hit list, so the report is
  // independent of chunk scheduling.
  for (size_t i = 0; i < report.critical_classes.size(); ++i) {
    const WeightedGraph& crit = report.critical_classes[i];
    if (q % 2 == 1) {
      report.property_violations.push_back(
          {"critical-at-odd-q", crit, "critical class found at odd q"});
      continue;
    }
    if (n % 2 == 0 || n < 5) {
      report.property_violations.push_back(
          {"unmatched-critical-class", crit,
           "no two-block family member exists at this order"});
      continue;
    }
    bool matched = false;
    for (int gamma = 0; gamma < q && !matched; ++gamma) {
      auto iso = switching_isomorphic(make_family({n, q, gamma}), crit);
      if (iso) {
        report.matched_family.push_back(
            {i, gamma, std::move(iso->perm), std::move(iso->labeling)});
        matched = true;
      }
    }
    if (!matched)
      report.property_violations.push_back(
          {"unmatched-critical-class", crit, "no gamma in [0, q) matches"});
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

CheckName parse_check_name(const std::string& name) {
  if (name == "nss") return CheckName::nss;
  if (name == "c2rs") return CheckName::c2rs;
  if (name == "allsep") return CheckName::allsep;
  if (name == "t2rs") return CheckName::t2rs;
  if (name == "czm") return CheckName::czm;
  throw std::invalid_argument("unknown check name: " + name);
}

std::string check_name_string(CheckName name) {
  switch (name) {
    case CheckName::nss: return "nss";
    case CheckName::c2rs: return "c2rs";
    case CheckName::allsep: return "allsep";
    case CheckName::t2rs: return "t2rs";
    case CheckName::czm: return "czm";
  }
  throw std::logic_error("unreachable");
}

namespace {

bool subgraphs_of_order_separable(const WeightedGraph& g, int order) {
  bool all = true;
  for_each_combination(g.n(), order, [&](const std::vector<int>& verts) {
    if (!all) return;
    if (!is_separable(induced_subgraph(g, verts))) all = false;
  });
  return all;
}

struct CheckAcc {
  std::uint64_t scanned = 0;
  std::uint64_t premise = 0;
  std::vector<Violation> violations;
};

// One class (or sample) against one named property.
void apply_check(CheckName name, const WeightedGraph& g, CheckAcc& acc) {
  const int n = g.n(), q = g.q();
  ++acc.scanned;
  switch (name) {
    case CheckName::nss: {
      // A separable graph of order >= 5 has 0 or 2 nonseparable
      // vertex-deleted subgraphs.
      if (n < 5 || !is_separable(g)) break;
      ++acc.premise;
      const int count = nonseparable_subgraph_count(g);
      if (count != 0 && count != 2)
        acc.violations.push_back(
            {"nss", g, "nonseparable vertex-deleted subgraphs: " + std::to_string(count)});
      break;
    }
    case CheckName::c2rs: {
      // All subgraphs of orders n-1 and n-2 separable => G separable.  Order
      // n-2 must be at least 4 for the premise to be satisfiable, since
      // graphs of order <= 3 have no nontrivial vertex sets.
      if (n < 6) break;
      if (!subgraphs_of_order_separable(g, n - 1)) break;
      if (!subgraphs_of_order_separable(g, n - 2)) break;
      ++acc.premise;
      if (!is_separable(g)) acc.violations.push_back({"c2rs", g, "graph is not separable"});
      break;
    }
    case CheckName::allsep: {
      // Every subgraph of order 4 or 5 separable => G separable.  At n = 5
      // the order-5 subgraph is the graph itself; the quantifier includes it.
      if (n < 5) break;
      if (!subgraphs_of_order_separable(g, 4)) break;
      if (!subgraphs_of_order_separable(g, 5)) break;
      ++acc.premise;
      if (!is_separable(g)) acc.violations.push_back({"allsep", g, "graph is not separable"});
      break;
    }
    case CheckName::t2rs: {
      // A nonseparable kernel of order x in [4, n-3] all of whose supersets
      // of orders x+1 and x+2 are separable forces G separable.
      for (int x = 4; x <= n - 3; ++x) {
        for_each_combination(n, x, [&](const std::vector<int>& kernel) {
          if (is_separable(induced_subgraph(g, kernel))) return;
          std::vector<bool> in_kernel(static_cast<size_t>(n), false);
          for (int v : kernel) in_kernel[static_cast<size_t>(v)] = true;
          std::vector<int> others;
          for (int v = 0; v < n; ++v)
            if (!in_kernel[static_cast<size_t>(v)]) others.push_back(v);
          auto superset_separable = [&](std::span<const int> extra) {
            std::vector<int> verts = kernel;
            verts.insert(verts.end(), extra.begin(), extra.end());
            std::sort(verts.begin(), verts.end());
            return is_separable(induced_subgraph(g, verts)).has_value();
          };
          for (int a : others) {
            std::array<int, 1> one{a};
            if (!superset_separable(one)) return;
          }
          for (size_t i = 0; i < others.size(); ++i)
            for (size_t j = i + 1; j < others.size(); ++j) {
              std::array<int, 2> two{others[i], others[j]};
              if (!superset_separable(two)) return;
            }
          ++acc.premise;
          if (!is_separable(g)) {
            std::string detail = "kernel of order " + std::to_string(x) + " {";
            for (size_t i = 0; i < kernel.size(); ++i)
              detail += (i ? "," : "") + std::to_string(kernel[i]);
            detail += "} but graph is not separable";
            acc.violations.push_back({"t2rs", g, detail});
          }
        });
      }
      break;
    }
    case CheckName::czm: {
      // A separable graph with an isolated vertex stays separable when any
      // two weight values trade places.  Scanned classes have vertex 0
      // isolated by construction.
      if (!is_separable(g)) break;
      ++acc.premise;
      for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
          if (!is_separable(swap_weights(g, i, j)))
            acc.violations.push_back(
                {"czm", g,
                 "swapping weights " + std::to_string(i) + " and " + std::to_string(j) +
                     " breaks separability"});
      break;
    }
  }
}

}  // namespace

CheckReport run_check(CheckName name, int q, int n,
                      const std::optional<SampleSpec>& sample, const CensusOptions& opts) {
  check_params(q, n);
  const auto start = std::chrono::steady_clock::now();
  const auto shifts = residual_shifts(q);
  const int cells = triangle_cells(n);

  CheckReport report;
  report.check = check_name_string(name);
  report.q = q;
  report.n = n;

  std::vector<CheckAcc> accs;
  if (sample) {
    auto space = pow_u64(static_cast<std::uint64_t>(q), cells);
    if (!space) throw BudgetError("candidate space too large to sample by index");
    if (sample->count > opts.budget) throw BudgetError(sample->count, opts.budget);
    report.sampled = true;
    report.seed = sample->seed;
    report.samples = sample->count;
    // Indices are drawn serially up front; the chunked scan then maps each
    // candidate to its class representative.
    std::vector<std::uint64_t> indices(static_cast<size_t>(sample->count));
    Lcg64 rng(sample->seed);
    for (auto& idx : indices) idx = rng.next_below(*space);
    accs = scan_chunks<CheckAcc>(
        sample->count, opts, [&](std::uint64_t lo, std::uint64_t hi, CheckAcc& acc) {
          std::vector<std::uint8_t> tri(static_cast<size_t>(cells));
          for (std::uint64_t pos = lo; pos < hi; ++pos) {
            decode_cells(indices[static_cast<size_t>(pos)], q, tri);
            canonicalize_cells(tri, q, shifts);
            apply_check(name, graph_from_cells(q, n, tri), acc);
          }
        });
  } else {
    const std::uint64_t total = candidate_count(q, n, opts.budget);
    accs = scan_chunks<CheckAcc>(total, opts, [&](std::uint64_t lo, std::uint64_t hi, CheckAcc& acc) {
      std::vector<std::uint8_t> tri(static_cast<size_t>(cells));
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        decode_cells(idx, q, tri);
        if (!cells_canonical(tri, q, shifts)) continue;
        apply_check(name, graph_from_cells(q, n, tri), acc);
      }
    });
  }

  for (auto& acc : accs) {
    report.scanned += acc.scanned;
    report.premise_instances += acc.premise;
    for (auto& v : acc.violations) report.violations.push_back(std::move(v));
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

}  // namespace zqsep
