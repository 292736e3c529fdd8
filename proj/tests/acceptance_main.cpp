// Acceptance suite: one line per criterion, nonzero exit if any hard
// criterion fails. Reference values are the published benchmark tables;
// three third-iteration exponents in the source tables are internally
// inconsistent with their own rows under eighth-order decay (digit
// transpositions) and are stored here in the corrected form, marked below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "rootlab/basins.hpp"
#include "rootlab/bench.hpp"

using namespace rootlab;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL",
              detail.c_str());
  if (!pass) ++g_failures;
}

struct Sci {
  double mantissa;  // in [0.1, 1)
  long exp10;       // value = mantissa * 10^exp10
};

Sci decompose(const BigReal& v) {
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, 3, v.raw(), MPFR_RNDZ);
  std::string digits = s ? s : "";
  mpfr_free_str(s);
  double m = 0;
  if (digits.size() >= 3)
    m = (digits[0] - '0') * 0.1 + (digits[1] - '0') * 0.01 + (digits[2] - '0') * 0.001;
  return {m, static_cast<long>(e)};
}

Sci parse_sci(const char* text) {
  // "0.949e-14"
  double m = 0;
  long e = 0;
  std::sscanf(text, "0.%3lfe%ld", &m, &e);
  return {m / 1000.0, e};
}

bool error_matches(const BigReal& computed, const char* expected, bool check_mantissa,
                   std::string* why) {
  Sci c = decompose(computed);
  Sci p = parse_sci(expected);
  if (std::labs(c.exp10 - p.exp10) > 1) {
    *why = "exponent " + std::to_string(c.exp10) + " vs " + std::to_string(p.exp10);
    return false;
  }
  if (check_mantissa && c.exp10 == p.exp10 &&
      std::fabs(c.mantissa - p.mantissa) > 0.01 * p.mantissa + 1e-12) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "mantissa %.3f vs %.3f", c.mantissa, p.mantissa);
    *why = buf;
    return false;
  }
  return true;
}

struct ExpectedRow {
  const char* method;
  const char* e1;
  const char* e2;
  const char* e3;
  double coc;
  double acoc;
};

const ExpectedRow kTable1[] = {
    {"slss", "0.949e-14", "0.486e-157", "0.314e-1733", 11.0000, 11.0000},
    {"m2", "0.929e-14", "0.387e-157", "0.252e-1734", 11.0000, 11.0000},
    {"m3", "0.877e-14", "0.204e-157", "0.223e-1737", 11.0000, 11.0000},
    {"m4", "0.971e-14", "0.629e-157", "0.531e-1732", 11.0000, 11.0000},
};

const ExpectedRow kTable2[] = {
    {"slss", "0.769e-12", "0.424e-134", "0.610e-1479", 11.0000, 11.0000},
    {"m2", "0.758e-12", "0.361e-134", "0.103e-1479", 11.0000, 11.0000},
    {"m3", "0.728e-12", "0.232e-134", "0.819e-1482", 11.0000, 10.9999},
    {"m4", "0.782e-12", "0.509e-134", "0.455e-1478", 11.0000, 11.0000},
};

const ExpectedRow kTable3[] = {
    {"slss", "0.551e-9", "0.735e-83", "0.982e-748", 9.0000, 9.0000},
    {"m2", "0.346e-9", "0.628e-85", "0.132e-766", 9.0000, 9.0000},
    {"m3", "0.543e-10", "0.362e-93", "0.943e-842", 9.0000, 9.0000},
    {"m4", "0.768e-9", "0.226e-81", "0.373e-734", 9.0000, 9.0000},
    {"brw", "0.123e-9", "0.162e-89", "0.181e-808", 9.0000, 9.0000},
    {"wl", "0.266e-8", "0.108e-68", "0.831e-552", 8.0000, 7.9999},
    {"ss", "0.589e-9", "0.128e-74", "0.673e-600", 8.0000, 7.9999},
    {"bcst", "0.672e-9", "0.199e-74", "0.119e-598", 8.0000, 7.9999},
    {"cfgt", "0.125e-9", "0.175e-89", "0.380e-808", 9.0000, 9.0000},
    // e3 printed as 0.315e-598 in the source; its own e2 = 0.263e-73 forces
    // ~e-589 under eighth-order decay (transposed digits).
    {"ctv", "0.815e-9", "0.263e-73", "0.315e-589", 8.0000, 7.9999},
    {"tp", "0.109e-7", "0.524e-63", "0.140e-505", 8.0000, 7.9999},
    {"cl", "0.542e-9", "0.133e-74", "0.178e-599", 8.0000, 8.0000},
};

const ExpectedRow kTable4[] = {
    {"slss", "0.225e-12", "0.274e-117", "0.162e-1061", 9.0000, 8.9999},
    {"m2", "0.300e-12", "0.473e-116", "0.284e-1051", 9.0000, 8.9999},
    {"m3", "0.469e-12", "0.395e-114", "0.845e-1033", 9.0000, 8.9999},
    {"m4", "0.159e-12", "0.966e-119", "0.577e-1075", 9.0000, 8.9999},
    {"brw", "0.423e-12", "0.134e-114", "0.445e-1037", 9.0000, 8.9999},
    {"wl", "0.295e-11", "0.629e-96", "0.265e-773", 8.0000, 7.9999},
    // e3 printed as 0.984e-760 in the source; e2 = 0.581e-98 forces ~e-790
    // under eighth-order decay (transposed digits).
    {"ss", "0.172e-11", "0.581e-98", "0.984e-790", 8.0000, 7.9999},
    // e3 printed as 0.251e-797 in the source; e2 = 0.343e-95 forces ~e-767.
    {"bcst", "0.357e-11", "0.343e-95", "0.251e-767", 8.0000, 7.9999},
    {"cfgt", "0.423e-12", "0.135e-114", "0.474e-1037", 9.0000, 8.9999},
    {"ctv", "0.179e-11", "0.839e-98", "0.195e-788", 8.0000, 7.9999},
    {"tp", "0.829e-11", "0.977e-92", "0.362e-739", 8.0000, 7.9999},
    {"cl", "0.211e-11", "0.494e-97", "0.250e-782", 8.0000, 7.9999},
};

bool check_table(int table, const ExpectedRow* expected, size_t n_rows,
                 bool check_mantissa, bool check_acoc, std::string* detail) {
  Precision p(1800);
  auto suite = builtin_suite(p);
  const Problem* prob = find_problem(suite, table_problem_id(table));
  Report report = run_table(*prob, table_roster(table), p);
  if (report.rows.size() != n_rows) {
    *detail = "row count mismatch";
    return false;
  }
  bool ok = true;
  std::string problems;
  for (size_t i = 0; i < n_rows; ++i) {
    const ReportRow& row = report.rows[i];
    const ExpectedRow& exp = expected[i];
    std::string why;
    if (!row.ok || row.method != exp.method) {
      ok = false;
      problems += " " + std::string(exp.method) + ":failed-run";
      continue;
    }
    if (!error_matches(row.err1, exp.e1, check_mantissa, &why) ||
        !error_matches(row.err2, exp.e2, check_mantissa, &why) ||
        !error_matches(row.err3, exp.e3, check_mantissa, &why)) {
      ok = false;
      problems += " " + std::string(exp.method) + ":" + why;
    }
    if (!row.coc || std::fabs(row.coc->to_double() - exp.coc) > 0.01) {
      ok = false;
      problems += " " + std::string(exp.method) + ":coc";
    }
    if (check_acoc && (!row.acoc || std::fabs(row.acoc->to_double() - exp.acoc) > 0.01)) {
      ok = false;
      problems += " " + std::string(exp.method) + ":acoc";
    }
  }
  *detail = ok ? "all rows within tolerance" : "mismatch:" + problems;
  return ok;
}

Problem shifted_exp_problem(Precision p) {
  // f(x) = exp(x - 0.2) - 1, a simple root at 0.2 with R8 != 0
  Problem pr;
  pr.id = "exp_shift";
  pr.description = "exp(x - 0.2) - 1";
  pr.f = [](const BigReal& x) {
    return exp(x - make_scalar("0.2", Precision(1800))) - 1;
  };
  pr.fprime = [](const BigReal& x) {
    return exp(x - make_scalar("0.2", Precision(1800)));
  };
  pr.root = make_scalar("0.2", p);
  pr.x0 = make_scalar("0.3", p);
  return pr;
}

RealTrace run_trace(const Problem& pr, MethodId m, int iters, Precision p) {
  RunPolicy policy;
  policy.max_iters = iters;
  policy.divergence_bound = BigReal::pow10(10, p);
  return iterate(pr, m, nullptr, pr.x0, policy);
}

void criterion5() {
  Precision p(1800);
  BigReal bound = BigReal::pow10(-400, Precision(16));
  bool ok = true;
  std::string detail;
  for (const auto& w : builtin_weight_pairs()) {
    WeightValidation v = validate_weight_pair(w, p);
    for (const auto& c : v.conditions) {
      if (!c.pass || !(c.residual < bound)) {
        ok = false;
        detail += " " + v.pair_id + "/" + c.name;
      }
    }
  }
  // deliberately broken pair: phi(t) = t with a valid psi
  WeightPair broken;
  broken.id = "broken";
  broken.phi_custom = [](const BigReal& t) { return t; };
  broken.psi_custom = [](const BigReal& s) { return builtin_psi(BuiltinPair::P1, s); };
  WeightValidation bv = validate_weight_pair(broken, p);
  // phi'(0) = 1 must fail while phi(0), psi(0), psi'(0) hold; phi''(0) = 0
  // also fails the -5/2 requirement as a mathematical consequence.
  bool broken_ok = bv.conditions[0].pass && !bv.conditions[1].pass &&
                   !bv.conditions[2].pass && bv.conditions[3].pass &&
                   bv.conditions[4].pass;
  if (!broken_ok) {
    ok = false;
    detail += " broken-pair-pattern";
  }
  report(5, ok,
         ok ? "4 pairs x 5 conditions < 1e-400; broken pair caught at phi' (and phi'')"
            : "failed:" + detail);
}

void criterion6() {
  Precision p(300);
  Problem pr = shifted_exp_problem(p);
  bool ok = true;
  std::string detail;
  for (const auto& info : all_methods()) {
    CountingOracle<BigReal> o(pr);
    method_step(info.id, o, pr.x0);
    long total = o.f_count() + o.fprime_count();
    if (total != info.evals_per_iter) {
      ok = false;
      detail += std::string(" ") + info.name;
    }
    if (info.order == 8 && (o.f_count() != 3 || o.fprime_count() != 1)) {
      ok = false;
      detail += std::string(" ") + info.name + "(split)";
    }
  }
  double efficiency = std::pow(8.0, 0.25);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "budgets 4/3/2 as declared; efficiency index 8^(1/4) = %.4f", efficiency);
  report(6, ok, ok ? buf : "budget mismatch:" + detail);
}

void criterion7() {
  Precision p(1800);
  Problem pr = shifted_exp_problem(p);
  ErrorConstants ec = error_constants(pr, make_scalar("-2.5", p));
  RealTrace tr = run_trace(pr, MethodId::Slss, 4, p);
  std::string detail;
  bool ok = true;

  // last pair of errors above 10^(-digits/2)
  BigReal floor = BigReal::pow10(-900, Precision(16));
  int n = -1;
  for (size_t i = 1; i + 1 < tr.errors.size(); ++i)
    if (tr.errors[i] > floor && tr.errors[i + 1] > floor) n = static_cast<int>(i);
  if (n < 0) {
    report(7, false, "no usable error pair");
    return;
  }
  BigReal e_n = tr.errors[n], e_n1 = tr.errors[n + 1];
  BigReal en2 = e_n * e_n;
  BigReal en4 = en2 * en2;
  BigReal ratio = e_n1 / (en4 * en4);  // e_{n+1} / e_n^8
  BigReal rel = abs(abs(ratio) - abs(ec.r8)) / abs(ec.r8);
  if (!(rel < make_scalar("0.10", p))) {
    ok = false;
    detail += " ratio-vs-R8=" + rel.to_string(4);
  }

  auto suite = builtin_suite(p);
  RealTrace t1 = run_trace(*find_problem(suite, "t1"), MethodId::Slss, 4, p);
  BigReal t1_coc = coc(t1, find_problem(suite, "t1")->root);
  if (!(t1_coc > make_scalar("8.5", p))) {
    ok = false;
    detail += " t1-coc=" + t1_coc.to_string(6);
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "|e3/e2^8 - R8|/R8 = %.2e (R8 = %.6f); t1 COC = %.4f > 8.5",
                rel.to_double(), ec.r8.to_double(), t1_coc.to_double());
  report(7, ok, ok ? buf : "failed:" + detail);
}

void criterion8() {
  Precision p(1800);
  Problem pr = shifted_exp_problem(p);
  bool ok = true;
  std::string detail;
  auto band = [&](MethodId m, int iters, double lo, double hi) {
    RealTrace tr = run_trace(pr, m, iters, p);
    double v;
    try {
      v = coc(tr, pr.root).to_double();
    } catch (const Error& e) {
      ok = false;
      detail += std::string(" ") + method_info(m).name + ":" + e.what();
      return;
    }
    if (!(v >= lo && v <= hi)) {
      ok = false;
      char buf[64];
      std::snprintf(buf, sizeof buf, " %s:%.3f", method_info(m).name, v);
      detail += buf;
    }
  };
  for (const auto& info : all_methods())
    if (info.order == 8) band(info.id, 4, 7.8, 8.2);
  band(MethodId::Tp4, 5, 3.8, 4.2);
  band(MethodId::Ns3, 6, 2.8, 3.2);
  band(MethodId::Newton, 8, 1.9, 2.1);
  report(8, ok,
         ok ? "COC bands hold: 8th in [7.8,8.2], tp4 [3.8,4.2], ns3 [2.8,3.2], newton [1.9,2.1]"
            : "out of band:" + detail);
}

void criterion9() {
  auto start = std::chrono::steady_clock::now();
  Precision p(16);
  auto suite = builtin_suite(p);
  const Problem* b1 = find_problem(suite, "b1");
  const MethodId roster[] = {MethodId::Slss, MethodId::Brw, MethodId::Wl,
                             MethodId::Ss,   MethodId::Bcst, MethodId::Cfgt,
                             MethodId::Ctv,  MethodId::Tp,   MethodId::Cl};
  bool ok = true;
  std::string detail;
  std::vector<double> fractions;
  std::string csv = stats_csv_header() + "\n";
  for (MethodId m : roster) {
    BasinConfig cfg(*b1);
    cfg.method = m;
    BasinImage img = render_basin(cfg);
    BasinStats stats = basin_stats(img);
    fractions.push_back(stats.converged_fraction);
    csv += stats_csv_line(method_info(m).name, stats) + "\n";
    bool all_roots = stats.per_root.size() == 4;
    for (long c : stats.per_root) all_roots = all_roots && c > 0;
    if (!all_roots || stats.black == 0) {
      ok = false;
      detail += std::string(" ") + method_info(m).name + ":coverage";
    }
  }
  std::FILE* f = std::fopen("basin_stats.csv", "wb");
  if (f) {
    std::fwrite(csv.data(), 1, csv.size(), f);
    std::fclose(f);
  }

  // determinism across runs and thread counts (slss render)
  BasinConfig cfg(*b1);
  cfg.method = MethodId::Slss;
  cfg.threads = 1;
  BasinImage a = render_basin(cfg);
  cfg.threads = 2;
  BasinImage b = render_basin(cfg);
  for (size_t k = 0; k < a.pixels.size(); ++k) {
    if (a.pixels[k].root_index != b.pixels[k].root_index ||
        a.pixels[k].iterations != b.pixels[k].iterations) {
      ok = false;
      detail += " nondeterministic";
      break;
    }
  }

  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 60.0) {
    ok = false;
    detail += " too-slow";
  }

  // Qualitative basin-size ordering; reported as a warning, not enforced:
  // the published claim is visual and sampling/palette choices differ.
  const char* names[] = {"slss", "brw", "wl", "ss", "bcst", "cfgt", "ctv", "tp", "cl"};
  std::string soft;
  for (int i = 1; i < 9; ++i) {
    bool expect_slss_larger = std::strcmp(names[i], "cfgt") != 0;
    bool holds = expect_slss_larger ? fractions[0] > fractions[i]
                                    : fractions[0] < fractions[i];
    if (!holds) {
      char buf[96];
      std::snprintf(buf, sizeof buf, " %s (slss %.4f vs %.4f)", names[i], fractions[0],
                    fractions[i]);
      soft += buf;
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "9 renders in %.1fs, deterministic, 4 colors + black everywhere", seconds);
  report(9, ok, ok ? buf : "failed:" + detail);
  if (!soft.empty())
    std::printf("              warning: size ordering deviates for:%s (reported only)\n",
                soft.c_str());
}

void criterion10() {
  Precision p(1800);
  Problem pr;
  pr.id = "x2m2";
  pr.f = [](const BigReal& x) { return x * x - 2; };
  pr.fprime = [](const BigReal& x) { return 2 * x; };
  pr.root = sqrt(BigReal(2, p));
  pr.x0 = make_scalar("1.5", p);

  CountingOracle<BigReal> o1(pr);
  BigReal ns = newton_secant_step(o1, pr.x0).next;
  CountingOracle<BigReal> o2(pr);
  BigReal tp = two_point4_step(o2, pr.x0, builtin_pair(BuiltinPair::P1)).next;

  BigReal ns_expected = BigReal(99, p) / 70;
  BigReal tp_expected = BigReal(107769893L, p) / 76204800L;
  BigReal tol = BigReal::pow10(-1790, Precision(16));
  bool ok = abs(ns - ns_expected) < tol && abs(tp - tp_expected) < tol;
  report(10, ok,
         ok ? "single steps match 99/70 and 107769893/76204800 to working precision"
            : "rational mismatch");
}

}  // namespace

int main() {
  std::printf("acceptance suite (reference tolerances pinned in code)\n");
  auto t0 = std::chrono::steady_clock::now();

  std::string detail;
  bool ok = check_table(1, kTable1, 4, true, true, &detail);
  report(1, ok, "table 1: " + detail);
  ok = check_table(2, kTable2, 4, true, true, &detail);
  report(2, ok, "table 2: " + detail);
  ok = check_table(3, kTable3, 12, false, true, &detail);
  report(3, ok, "table 3: " + detail);
  ok = check_table(4, kTable4, 12, false, true, &detail);
  report(4, ok, "table 4: " + detail);
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();

  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d/10 criteria passed in %.1fs\n", 10 - g_failures, seconds);
  return g_failures == 0 ? 0 : 1;
}
