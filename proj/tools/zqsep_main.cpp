// Command-line surface: every library operation behind one binary, JSON in
// and JSON out.  Exit codes: 0 = success / queried property holds, 1 =
// property fails or a verification reports violations, 2 = usage or domain
// error.  Output is deterministic for fixed inputs, seed and budget; --jobs
// changes timing only.  Wall-clock times go to stderr, never into the JSON.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zqsep/census.hpp"
#include "zqsep/extension.hpp"
#include "zqsep/family.hpp"
#include "zqsep/graph.hpp"
#include "zqsep/json_io.hpp"
#include "zqsep/manifest.hpp"
#include "zqsep/polynomial.hpp"
#include "zqsep/quasigroup.hpp"
#include "zqsep/separability.hpp"
#include "zqsep/zq.hpp"

namespace {

using nlohmann::json;

// Accepts a literal JSON object/array, "-" for stdin, or a file path.
json read_json_arg(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return json::parse(arg);
  if (arg == "-") return json::parse(std::cin);
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open " + arg);
  return json::parse(in);
}

void emit(const json& j, const std::string& out) {
  const std::string text = zqsep::canonical_dump(j);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw std::invalid_argument("cannot open " + out);
    f << text;
  }
}

std::string hash_hex(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string manifest_text() {
  json pins = json::array();
  for (const auto& p : zqsep::kCensusPins)
    pins.push_back({{"q", p.q},
                    {"n", p.n},
                    {"classes", p.classes},
                    {"critical_classes", p.critical_classes},
                    {"report_hash", hash_hex(p.report_hash)}});
  return zqsep::canonical_dump(
      {{"version", std::string(zqsep::kVersion)}, {"census_pins", pins}});
}

int run_verify_prop5(int q, int n, std::uint64_t seed, std::uint64_t count,
                     const std::string& out) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  zqsep::Lcg64 rng(seed);
  std::uint64_t instances = 0, disagreements = 0, alt_disagreements = 0;
  json details = json::array();
  for (std::uint64_t k = 0; k < count; ++k) {
    const zqsep::FnTable f = zqsep::table_from_poly(zqsep::random_quadratic(q, n, rng));
    std::vector<zqsep::QuasigroupTable> qf;
    for (int a = 0; a < q; ++a) qf.push_back(zqsep::build_qfa(f, a));
    for (int s = 2; s <= n - 1; ++s) {
      zqsep::for_each_combination(n + 1, s, [&](const std::vector<int>& w) {
        const bool ext_verdict =
            zqsep::oracle_is_w_separable(zqsep::make_extension(f, 0), w).has_value();
        for (int a = 0; a < q; ++a) {
          ++instances;
          const bool qg_verdict = zqsep::is_w_separable_qg(qf[static_cast<size_t>(a)], w).has_value();
          if (qg_verdict != ext_verdict) {
            ++disagreements;
            details.push_back({{"f_index", k}, {"a", a}, {"w", w}});
          }
          const bool alt_verdict =
              zqsep::oracle_is_w_separable(zqsep::make_extension(f, a), w).has_value();
          if (qg_verdict != alt_verdict) ++alt_disagreements;
        }
      });
    }
  }
  emit({{"q", q},
        {"n", n},
        {"seed", seed},
        {"count", count},
        {"instances", instances},
        {"disagreements", disagreements},
        {"alt_constant_disagreements", alt_disagreements},
        {"details", details}},
       out);
  return disagreements == 0 ? 0 : 1;
}

int run_verify_cor7(int q, int n, std::uint64_t seed, std::uint64_t count,
                    const std::string& out) {
  zqsep::Lcg64 rng(seed);
  std::uint64_t instances = 0, premise = 0, violations = 0;
  json bad = json::array();
  for (std::uint64_t k = 0; k < count; ++k) {
    const zqsep::FnTable f = zqsep::table_from_poly(zqsep::random_quadratic(q, n, rng));
    for (int a = 0; a < q; ++a) {
      const zqsep::RetractReport r = zqsep::verify_retract_corollary(f, a);
      ++instances;
      if (r.premise_holds) ++premise;
      if (r.violation) {
        ++violations;
        bad.push_back(zqsep::to_json(r));
      }
    }
  }
  emit({{"q", q},
        {"n", n},
        {"seed", seed},
        {"count", count},
        {"instances", instances},
        {"premise_instances", premise},
        {"violations", violations},
        {"violating_reports", bad}},
       out);
  return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"switching separability of edge-weighted graphs over Z_q"};
  app.require_subcommand(1);
  app.set_version_flag("--version", manifest_text());

  std::string out;
  int jobs = 0;
  std::uint64_t budget = 100'000'000;
  std::uint64_t seed = 0;
  app.add_option("--out", out, "write JSON to this file instead of stdout");
  app.add_option("--jobs", jobs, "worker thread count, 0 = all cores");
  app.add_option("--budget", budget, "max candidates enumerated exhaustively");
  app.add_option("--seed", seed, "seed for sampled runs");

  std::function<int()> action;

  // ---- graph ----------------------------------------------------------
  auto* graph_cmd = app.add_subcommand("graph", "single-graph operations");
  graph_cmd->require_subcommand(1);
  graph_cmd->fallthrough();
  std::string g_in = "-", g_other, g_labeling;
  int g_vertex = 0;

  auto* g_add = graph_cmd->add_subcommand("check-additive", "is the graph additive?");
  g_add->fallthrough();
  g_add->add_option("--in", g_in, "graph JSON (file, '-', or literal)");
  g_add->callback([&] {
    action = [&]() -> int {
      const auto g = zqsep::graph_from_json(read_json_arg(g_in));
      const auto lab = zqsep::is_additive(g);
      emit({{"additive", lab.has_value()},
            {"labeling", lab ? zqsep::to_json(*lab) : json(nullptr)}},
           out);
      return lab ? 0 : 1;
    };
  });

  auto* g_switch = graph_cmd->add_subcommand("switch", "add the additive graph of a labeling");
  g_switch->fallthrough();
  g_switch->add_option("--in", g_in, "graph JSON (file, '-', or literal)");
  g_switch->add_option("--labeling", g_labeling, "labeling JSON (file, '-', or literal)")
      ->required();
  g_switch->callback([&] {
    action = [&]() -> int {
      const auto g = zqsep::graph_from_json(read_json_arg(g_in));
      const auto lab = zqsep::labeling_from_json(read_json_arg(g_labeling));
      emit(zqsep::to_json(zqsep::switch_graph(g, lab)), out);
      return 0;
    };
  });

  auto* g_iso = graph_cmd->add_subcommand("isolate", "switch so one vertex loses all edges");
  g_iso->fallthrough();
  g_iso->add_option("--in", g_in, "graph JSON (file, '-', or literal)");
  g_iso->add_option("--vertex", g_vertex, "vertex to isolate (default 0)");
  g_iso->callback([&] {
    action = [&]() -> int {
      const auto g = zqsep::graph_from_json(read_json_arg(g_in));
      const auto r = zqsep::isolate(g, g_vertex);
      emit({{"graph", zqsep::to_json(r.graph)}, {"labeling", zqsep::to_json(r.labeling)}}, out);
      return 0;
    };
  });

  auto* g_sep = graph_cmd->add_subcommand("separable", "does a nontrivial separable set exist?");
  g_sep->fallthrough();
  g_sep->add_option("--in", g_in, "graph JSON (file, '-', or literal)");
  g_sep->callback([&] {
    action = [&]() -> int {
      const auto g = zqsep::graph_from_json(read_json_arg(g_in));
      const auto cert = zqsep::is_separable(g);
      emit({{"separable", cert.has_value()},
            {"certificate", cert ? zqsep::to_json(*cert) : json(nullptr)}},
           out);
      return cert ? 0 : 1;
    };
  });

  auto* g_sets = graph_cmd->add_subcommand("sets", "all nontrivial separable sets through vertex 0");
  g_sets->fallthrough();
  g_sets->add_option("--in", g_in, "graph JSON (file, '-', or literal)");
  g_sets->callback([&] {
    action = [&]() -> int {
      const auto g = zqsep::graph_from_json(read_json_arg(g_in));
      json sets = json::array();
      for (const auto& cert : zqsep::nontrivial_separable_sets(g))
        sets.push_back(zqsep::to_json(cert));
      emit({{"sets", sets}}, out);
      return 0;
    };
  });

  auto* g_crit = graph_cmd->add_subcommand("critical", "nonseparable with all deletions separable?");
  g_crit->fallthrough();
  g_crit->add_option("--in", g_in, "graph JSON (file, '-', or literal)");
  g_crit->callback([&] {
    action = [&]() -> int {
      const auto g = zqsep::graph_from_json(read_json_arg(g_in));
      const bool crit = zqsep::is_critical(g);
      emit({{"critical", crit}}, out);
      return crit ? 0 : 1;
    };
  });

  auto* g_swiso = graph_cmd->add_subcommand("swiso", "switching isomorphism between two graphs");
  g_swiso->fallthrough();
  g_swiso->add_option("--in", g_in, "first graph JSON (file, '-', or literal)");
  g_swiso->add_option("--other", g_other, "second graph JSON (file, '-', or literal)")->required();
  g_swiso->callback([&] {
    action = [&]() -> int {
      const auto g = zqsep::graph_from_json(read_json_arg(g_in));
      const auto h = zqsep::graph_from_json(read_json_arg(g_other));
      const auto iso = zqsep::switching_isomorphic(g, h);
      emit({{"isomorphic", iso.has_value()},
            {"perm", iso ? json(iso->perm) : json(nullptr)},
            {"labeling", iso ? zqsep::to_json(iso->labeling) : json(nullptr)}},
           out);
      return iso ? 0 : 1;
    };
  });

  // ---- family ---------------------------------------------------------
  auto* family_cmd = app.add_subcommand("family", "the two-block critical family");
  family_cmd->require_subcommand(1);
  family_cmd->fallthrough();
  int f_n = 0, f_q = 0, f_gamma = 0;

  auto* f_gen = family_cmd->add_subcommand("gen", "emit one family graph");
  f_gen->fallthrough();
  f_gen->add_option("--n", f_n, "order (odd, >= 5)")->required();
  f_gen->add_option("--q", f_q, "modulus (even)")->required();
  f_gen->add_option("--gamma", f_gamma, "family parameter in [0, q)")->required();
  f_gen->callback([&] {
    action = [&]() -> int {
      emit(zqsep::to_json(zqsep::make_family({f_n, f_q, f_gamma})), out);
      return 0;
    };
  });

  auto* f_verify = family_cmd->add_subcommand("verify", "re-derive criticality with witnesses");
  f_verify->fallthrough();
  f_verify->add_option("--n", f_n, "order (odd, >= 5)")->required();
  f_verify->add_option("--q", f_q, "modulus (even)")->required();
  f_verify->add_option("--gamma", f_gamma, "family parameter in [0, q)")->required();
  f_verify->callback([&] {
    action = [&]() -> int {
      const auto report = zqsep::verify_family_critical({f_n, f_q, f_gamma});
      emit(zqsep::to_json(report), out);
      return report.critical ? 0 : 1;
    };
  });

  // ---- census ---------------------------------------------------------
  auto* census_cmd = app.add_subcommand("census", "exhaustive scans over switching classes");
  census_cmd->require_subcommand(1);
  census_cmd->fallthrough();
  int c_q = 0, c_n = 0;
  std::string c_name;
  std::uint64_t c_samples = 0;

  auto* c_crit = census_cmd->add_subcommand("critical", "find and match all critical classes");
  c_crit->fallthrough();
  c_crit->add_option("--q", c_q, "modulus")->required();
  c_crit->add_option("--n", c_n, "order")->required();
  c_crit->callback([&] {
    action = [&]() -> int {
      zqsep::CensusOptions opts;
      opts.budget = budget;
      opts.jobs = jobs;
      const auto report = zqsep::find_critical(c_q, c_n, opts);
      std::cerr << "# wall " << report.wall_ms << " ms\n";
      emit(zqsep::to_json(report), out);
      return report.property_violations.empty() ? 0 : 1;
    };
  });

  auto* c_check = census_cmd->add_subcommand("check", "verify one named property over classes");
  c_check->fallthrough();
  c_check->add_option("--name", c_name, "one of nss, c2rs, allsep, t2rs, czm")->required();
  c_check->add_option("--q", c_q, "modulus")->required();
  c_check->add_option("--n", c_n, "order")->required();
  c_check->add_option("--samples", c_samples, "sample count; 0 = exhaustive");
  c_check->callback([&] {
    action = [&]() -> int {
      zqsep::CensusOptions opts;
      opts.budget = budget;
      opts.jobs = jobs;
      std::optional<zqsep::SampleSpec> sample;
      if (c_samples > 0) sample = zqsep::SampleSpec{seed, c_samples};
      const auto report = zqsep::run_check(zqsep::parse_check_name(c_name), c_q, c_n, sample, opts);
      std::cerr << "# wall " << report.wall_ms << " ms\n";
      emit(zqsep::to_json(report), out);
      return report.violations.empty() ? 0 : 1;
    };
  });

  // ---- fn -------------------------------------------------------------
  auto* fn_cmd = app.add_subcommand("fn", "functions over Z_q and their extensions");
  fn_cmd->require_subcommand(1);
  fn_cmd->fallthrough();
  std::string fn_poly, fn_table;
  int fn_a = 0;
  std::vector<int> fn_w;
  bool fn_verify_oracle = false;

  auto* fn_reduce = fn_cmd->add_subcommand("reduce", "substitute the hidden argument away");
  fn_reduce->fallthrough();
  fn_reduce->add_option("--poly", fn_poly, "polynomial JSON (file, '-', or literal)")->required();
  fn_reduce->add_option("--a", fn_a, "domain constant")->required();
  fn_reduce->callback([&] {
    action = [&]() -> int {
      const auto p = zqsep::poly_from_json(read_json_arg(fn_poly));
      emit(zqsep::to_json(zqsep::reduce_mod_constraint(p, fn_a)), out);
      return 0;
    };
  });

  auto* fn_graph = fn_cmd->add_subcommand("graph", "cross-term graph of a quadratic");
  fn_graph->fallthrough();
  fn_graph->add_option("--poly", fn_poly, "polynomial JSON (file, '-', or literal)")->required();
  fn_graph->callback([&] {
    action = [&]() -> int {
      const auto p = zqsep::poly_from_json(read_json_arg(fn_poly));
      emit(zqsep::to_json(zqsep::graph_of_quadratic(p)), out);
      return 0;
    };
  });

  auto* fn_sep = fn_cmd->add_subcommand("separable", "is the extension separable?");
  fn_sep->fallthrough();
  fn_sep->add_option("--table", fn_table, "function table JSON (file, '-', or literal)");
  fn_sep->add_option("--poly", fn_poly, "polynomial JSON; reduced, then tabulated");
  fn_sep->add_option("--a", fn_a, "domain constant")->required();
  fn_sep->add_flag("--verify-oracle", fn_verify_oracle,
                   "double-check the quadratic fast path against the oracle");
  fn_sep->callback([&] {
    action = [&]() -> int {
      if (fn_table.empty() == fn_poly.empty())
        throw std::invalid_argument("give exactly one of --table and --poly");
      zqsep::FnTable f = fn_table.empty()
                             ? zqsep::table_from_poly(zqsep::reduce_mod_constraint(
                                   zqsep::poly_from_json(read_json_arg(fn_poly)), fn_a))
                             : zqsep::table_from_json(read_json_arg(fn_table));
      const auto sep =
          zqsep::is_separable_extension(zqsep::make_extension(std::move(f), fn_a), fn_verify_oracle);
      emit({{"separable", sep.has_value()},
            {"separation", sep ? zqsep::to_json(*sep) : json(nullptr)}},
           out);
      return sep ? 0 : 1;
    };
  });

  auto* fn_oracle = fn_cmd->add_subcommand("oracle", "decide one W by full-domain verification");
  fn_oracle->fallthrough();
  fn_oracle->add_option("--table", fn_table, "function table JSON (file, '-', or literal)")
      ->required();
  fn_oracle->add_option("--a", fn_a, "domain constant")->required();
  fn_oracle->add_option("--w", fn_w, "argument indices, e.g. --w 1,3")
      ->required()
      ->delimiter(',');
  fn_oracle->callback([&] {
    action = [&]() -> int {
      const auto f = zqsep::table_from_json(read_json_arg(fn_table));
      const auto split = zqsep::oracle_is_w_separable(zqsep::make_extension(f, fn_a), fn_w);
      json parts = json(nullptr);
      if (split)
        parts = {{"part_w", {{"args", split->part_w.args}, {"table", zqsep::to_json(split->part_w.table)}}},
                 {"part_u", {{"args", split->part_u.args}, {"table", zqsep::to_json(split->part_u.table)}}}};
      emit({{"separable", split.has_value()}, {"split", parts}}, out);
      return split ? 0 : 1;
    };
  });

  // ---- qg -------------------------------------------------------------
  auto* qg_cmd = app.add_subcommand("qg", "n-ary quasigroups of square order");
  qg_cmd->require_subcommand(1);
  qg_cmd->fallthrough();
  std::string qg_fn, qg_table;
  int qg_a = 0, qg_pos = 0, qg_value = 0, qg_q = 0, qg_n = 0;
  std::uint64_t qg_count = 0;
  bool qg_full_w = false;

  auto* qg_build = qg_cmd->add_subcommand("build", "the pair-coded quasigroup of a function");
  qg_build->fallthrough();
  qg_build->add_option("--fn", qg_fn, "function table JSON (file, '-', or literal)")->required();
  qg_build->add_option("--a", qg_a, "domain constant")->required();
  qg_build->callback([&] {
    action = [&]() -> int {
      emit(zqsep::to_json(zqsep::build_qfa(zqsep::table_from_json(read_json_arg(qg_fn)), qg_a)),
           out);
      return 0;
    };
  });

  auto* qg_check = qg_cmd->add_subcommand("check", "is every line a permutation?");
  qg_check->fallthrough();
  qg_check->add_option("--table", qg_table, "quasigroup JSON (file, '-', or literal)")->required();
  qg_check->callback([&] {
    action = [&]() -> int {
      const bool ok = zqsep::is_quasigroup(zqsep::qg_from_json(read_json_arg(qg_table)));
      emit({{"quasigroup", ok}}, out);
      return ok ? 0 : 1;
    };
  });

  auto* qg_retract = qg_cmd->add_subcommand("retract", "fix one argument to a constant");
  qg_retract->fallthrough();
  qg_retract->add_option("--table", qg_table, "quasigroup JSON (file, '-', or literal)")->required();
  qg_retract->add_option("--pos", qg_pos, "argument position in [1, n]")->required();
  qg_retract->add_option("--value", qg_value, "fixed element")->required();
  qg_retract->callback([&] {
    action = [&]() -> int {
      emit(zqsep::to_json(
               zqsep::retract(zqsep::qg_from_json(read_json_arg(qg_table)), qg_pos, qg_value)),
           out);
      return 0;
    };
  });

  auto* qg_invert = qg_cmd->add_subcommand("invert", "exchange an argument with the output");
  qg_invert->fallthrough();
  qg_invert->add_option("--table", qg_table, "quasigroup JSON (file, '-', or literal)")->required();
  qg_invert->add_option("--pos", qg_pos, "argument position in [1, n]")->required();
  qg_invert->callback([&] {
    action = [&]() -> int {
      emit(zqsep::to_json(zqsep::invert(zqsep::qg_from_json(read_json_arg(qg_table)), qg_pos)),
           out);
      return 0;
    };
  });

  auto* qg_sep = qg_cmd->add_subcommand("separable", "does the table split as G(x', H(x''))?");
  qg_sep->fallthrough();
  qg_sep->add_option("--table", qg_table, "quasigroup JSON (file, '-', or literal)")->required();
  qg_sep->add_flag("--include-full-w", qg_full_w, "also admit |W| = n (trivial outer layer)");
  qg_sep->callback([&] {
    action = [&]() -> int {
      const auto split =
          zqsep::is_separable_qg(zqsep::qg_from_json(read_json_arg(qg_table)), qg_full_w);
      emit({{"separable", split.has_value()},
            {"split", split ? zqsep::to_json(*split) : json(nullptr)}},
           out);
      return split ? 0 : 1;
    };
  });

  auto* qg_p5 = qg_cmd->add_subcommand("verify-prop5",
                                       "quasigroup verdicts equal extension verdicts");
  qg_p5->fallthrough();
  qg_p5->add_option("--q", qg_q, "odd prime modulus")->required();
  qg_p5->add_option("--n", qg_n, "arity")->required();
  qg_p5->add_option("--count", qg_count, "random quadratics to draw")->required();
  qg_p5->callback([&] {
    action = [&]() -> int { return run_verify_prop5(qg_q, qg_n, seed, qg_count, out); };
  });

  auto* qg_c7 = qg_cmd->add_subcommand("verify-cor7",
                                       "separable retracts force a separable quasigroup");
  qg_c7->fallthrough();
  qg_c7->add_option("--q", qg_q, "odd prime modulus")->required();
  qg_c7->add_option("--n", qg_n, "arity")->required();
  qg_c7->add_option("--count", qg_count, "random quadratics to draw")->required();
  qg_c7->callback([&] {
    action = [&]() -> int { return run_verify_cor7(qg_q, qg_n, seed, qg_count, out); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
