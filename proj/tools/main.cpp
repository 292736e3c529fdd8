#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rootlab/basins.hpp"
#include "rootlab/bench.hpp"

using namespace rootlab;

namespace {

Precision parse_digits(long d) { return Precision(d); }

int cmd_solve(const std::string& problem_id, const std::string& method_name,
              const std::string& x0_text, long digits, int iters) {
  Precision p = parse_digits(digits);
  auto suite = builtin_suite(p);
  const Problem* prob = find_problem(suite, problem_id);
  if (!prob) {
    std::cerr << "unknown problem '" << problem_id << "'\n";
    return 2;
  }
  auto mid = method_from_name(method_name);
  if (!mid) {
    std::cerr << "unknown method '" << method_name << "'\n";
    return 2;
  }
  BigReal x0 = x0_text.empty() ? prob->x0 : make_scalar(x0_text, p);
  RunPolicy policy;
  policy.max_iters = iters;
  policy.divergence_bound = BigReal::pow10(10, p);

  const MethodInfo& info = method_info(*mid);
  double eff = std::pow(static_cast<double>(info.order),
                        1.0 / static_cast<double>(info.evals_per_iter));
  std::printf("%s on %s (%s), x0=%s, %ld digits\n", info.name, prob->id.c_str(),
              prob->description.c_str(), x0.to_string(8).c_str(), digits);
  std::printf("order %d, %d evaluations/iteration, efficiency index %.4f\n",
              info.order, info.evals_per_iter, eff);

  RealTrace trace = iterate(*prob, *mid, nullptr, x0, policy);
  for (size_t n = 1; n < trace.iterates.size(); ++n)
    std::printf("  |x%zu - x*| = %s\n", n, format_error(trace.errors[n]).c_str());
  std::printf("termination: %s%s%s\n", termination_name(trace.termination),
              trace.step_error.empty() ? "" : " - ", trace.step_error.c_str());
  std::printf("evaluations: %ld f + %ld f'\n", trace.f_evals, trace.fprime_evals);
  try {
    std::printf("COC  = %s\n", format_order(coc(trace, prob->root)).c_str());
  } catch (const Error& e) {
    std::printf("COC  unavailable (%s)\n", e.what());
  }
  try {
    std::printf("ACOC = %s\n", format_order(acoc(trace)).c_str());
  } catch (const Error& e) {
    std::printf("ACOC unavailable (%s)\n", e.what());
  }
  return 0;
}

int cmd_bench(int table, long digits, const std::string& out_path) {
  Precision p = parse_digits(digits);
  auto suite = builtin_suite(p);
  const Problem* prob = find_problem(suite, table_problem_id(table));
  Report report = run_table(*prob, table_roster(table), p);
  std::cout << render_text_table(report);
  if (!out_path.empty()) {
    write_csv(report, out_path);
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

int cmd_validate_weights(long digits) {
  Precision p = parse_digits(digits);
  bool all = true;
  for (const auto& w : builtin_weight_pairs()) {
    WeightValidation v = validate_weight_pair(w, p);
    std::printf("%s  (phi: %s; psi: %s)\n", v.pair_id.c_str(),
                w.phi_domain_note.c_str(), w.psi_domain_note.c_str());
    for (const auto& c : v.conditions) {
      std::printf("  %-14s %-4s residual %s\n", c.name.c_str(),
                  c.pass ? "PASS" : "FAIL", format_error(c.residual).c_str());
      all = all && c.pass;
    }
  }
  return all ? 0 : 1;
}

int cmd_constants(const std::string& problem_id, long digits,
                  const std::string& phi2_text) {
  Precision p = parse_digits(digits);
  auto suite = builtin_suite(p);
  const Problem* prob = find_problem(suite, problem_id);
  if (!prob) {
    std::cerr << "unknown problem '" << problem_id << "'\n";
    return 2;
  }
  BigReal phi2 = make_scalar(phi2_text, p);
  ErrorConstants ec = error_constants(*prob, phi2);
  std::printf("problem %s, phi''(0) = %s\n", prob->id.c_str(), phi2.to_string(6).c_str());
  std::printf("c2 = %s\n", ec.c2.to_string(20).c_str());
  std::printf("c3 = %s\n", ec.c3.to_string(20).c_str());
  std::printf("c4 = %s\n", ec.c4.to_string(20).c_str());
  std::printf("R4 = %s\n", ec.r4.to_string(20).c_str());
  std::printf("R8 = %s\n", ec.r8.to_string(20).c_str());
  return 0;
}

int cmd_basin(const std::string& problem_id, const std::string& method_name,
              long digits, int grid, const std::string& bounds, int maxiter,
              const std::string& tol, const std::string& out_path,
              const std::string& stats_path, int threads) {
  Precision p = parse_digits(digits);
  auto suite = builtin_suite(p);
  const Problem* prob = find_problem(suite, problem_id);
  if (!prob) {
    std::cerr << "unknown problem '" << problem_id << "'\n";
    return 2;
  }
  if (prob->complex_roots.empty()) {
    std::cerr << "problem '" << problem_id << "' has no complex-plane instantiation\n";
    return 2;
  }
  auto mid = method_from_name(method_name);
  if (!mid) {
    std::cerr << "unknown method '" << method_name << "'\n";
    return 2;
  }
  BasinConfig cfg(*prob);
  cfg.method = *mid;
  cfg.width = cfg.height = grid;
  cfg.max_iters = maxiter;
  cfg.precision = p;
  cfg.root_tol = make_scalar(tol, p);
  cfg.threads = threads;
  // bounds: re_min,re_max,im_min,im_max
  {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : bounds) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    if (parts.size() != 4) {
      std::cerr << "--bounds expects re_min,re_max,im_min,im_max\n";
      return 2;
    }
    cfg.re_min = make_scalar(parts[0], p);
    cfg.re_max = make_scalar(parts[1], p);
    cfg.im_min = make_scalar(parts[2], p);
    cfg.im_max = make_scalar(parts[3], p);
  }

  BasinImage img = render_basin(cfg);
  BasinStats stats = basin_stats(img);
  std::cout << stats_csv_header() << "\n"
            << stats_csv_line(method_name, stats) << "\n";
  if (!out_path.empty()) {
    write_ppm(img, out_path);
    std::cout << "wrote " << out_path << "\n";
  }
  if (!stats_path.empty()) {
    std::ofstream f(stats_path, std::ios::binary);
    if (!f) fail(ErrorKind::IoError, "cannot open '" + stats_path + "'");
    f << stats_csv_header() << "\n" << stats_csv_line(method_name, stats) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-point root-finding laboratory"};
  app.require_subcommand(1);

  std::string problem = "t1", method = "slss", x0_text;
  long digits = 1800;
  int iters = 3;
  auto* solve = app.add_subcommand("solve", "iterate one method on one problem");
  solve->add_option("--problem", problem, "problem id (t1..t4, b1)")->capture_default_str();
  solve->add_option("--method", method, "method id")->capture_default_str();
  solve->add_option("--x0", x0_text, "initial guess (defaults to the problem's)");
  solve->add_option("--digits", digits, "working precision, decimal digits")->capture_default_str();
  solve->add_option("--iters", iters, "iteration count")->capture_default_str();

  int table = 1;
  std::string out;
  long bench_digits = 1800;
  auto* bench = app.add_subcommand("bench", "reproduce a benchmark table");
  bench->add_option("--table", table, "table number 1..4")->capture_default_str();
  bench->add_option("--digits", bench_digits, "working precision")->capture_default_str();
  bench->add_option("--out", out, "CSV output path");

  long vw_digits = 1800;
  auto* vw = app.add_subcommand("validate-weights", "check the order conditions of the built-in weight pairs");
  vw->add_option("--digits", vw_digits, "working precision")->capture_default_str();

  std::string cproblem = "t3", phi2 = "-2.5";
  long cdigits = 1800;
  auto* cst = app.add_subcommand("constants", "asymptotic error constants at the known root");
  cst->add_option("--problem", cproblem, "problem id")->capture_default_str();
  cst->add_option("--digits", cdigits, "working precision")->capture_default_str();
  cst->add_option("--phi2", phi2, "phi''(0) entering R4")->capture_default_str();

  std::string bproblem = "b1", bmethod = "slss", bounds = "-3,3,-3,3", tol = "1e-3";
  std::string bout, bstats;
  long bdigits = 16;
  int grid = 256, maxiter = 100, threads = 0;
  auto* basin = app.add_subcommand("basin", "render a basin-of-attraction image");
  basin->add_option("--problem", bproblem, "problem id with complex roots")->capture_default_str();
  basin->add_option("--method", bmethod, "method id")->capture_default_str();
  basin->add_option("--digits", bdigits, "working precision")->capture_default_str();
  basin->add_option("--grid", grid, "grid size N (N x N pixels)")->capture_default_str();
  basin->add_option("--bounds", bounds, "re_min,re_max,im_min,im_max")->capture_default_str();
  basin->add_option("--maxiter", maxiter, "iteration cap per point")->capture_default_str();
  basin->add_option("--tol", tol, "root proximity tolerance")->capture_default_str();
  basin->add_option("--out", bout, "PPM output path");
  basin->add_option("--stats", bstats, "stats CSV output path");
  basin->add_option("--threads", threads, "worker threads (0 = all cores)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(problem, method, x0_text, digits, iters);
    if (bench->parsed()) return cmd_bench(table, bench_digits, out);
    if (vw->parsed()) return cmd_validate_weights(vw_digits);
    if (cst->parsed()) return cmd_constants(cproblem, cdigits, phi2);
    if (basin->parsed())
      return cmd_basin(bproblem, bmethod, bdigits, grid, bounds, maxiter, tol, bout,
                       bstats, threads);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
