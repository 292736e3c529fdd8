#include "rootlab/bench.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace rootlab {

Report run_table(const Problem& p, const std::vector<MethodId>& methods,
                 Precision digits) {
  Report report;
  report.problem_id = p.id;
  report.digits = digits.digits;

  RunPolicy policy;
  // Three iterations fill the table columns; the fourth supplies the ACOC
  // difference window. At the highest orders it may hit the precision floor
  // and degenerate, which iterate() records rather than throws.
  policy.max_iters = 4;
  policy.divergence_bound = BigReal::pow10(10, digits);

  for (MethodId m : methods) {
    ReportRow row;
    row.method = method_info(m).name;
    RealTrace trace = iterate(p, m, nullptr, p.x0, policy);
    row.termination = trace.termination;
    if (trace.errors.size() >= 4) {
      row.ok = true;
      row.err1 = trace.errors[1];
      row.err2 = trace.errors[2];
      row.err3 = trace.errors[3];
      try {
        row.coc = coc(trace, p.root);
      } catch (const Error&) {
      }
      try {
        row.acoc = acoc(trace);
      } catch (const Error&) {
      }
    } else {
      row.fail_reason = trace.step_error.empty() ? termination_name(trace.termination)
                                                 : trace.step_error;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string format_error(const BigReal& e) {
  if (e.is_zero()) return "0";
  if (!e.is_finite()) return "inf";
  mpfr_exp_t exp10 = 0;
  // Mantissa truncated toward zero, the convention the reference tables use.
  char* s = mpfr_get_str(nullptr, &exp10, 10, 3, e.raw(), MPFR_RNDZ);
  if (!s) fail(ErrorKind::IoError, "mpfr_get_str failed");
  std::string digits = s;
  mpfr_free_str(s);
  if (!digits.empty() && digits[0] == '-') digits.erase(0, 1);
  // mpfr convention: value = 0.<digits> * 10^exp10, exactly the table style
  return "0." + digits + "e" + std::to_string(static_cast<long>(exp10));
}

std::string format_order(const BigReal& v) {
  char buf[64];
  mpfr_snprintf(buf, sizeof buf, "%.4Rf", v.raw());
  return buf;
}

std::string csv_string(const Report& r) {
  std::ostringstream out;
  out << "method,err1,err2,err3,coc,acoc\n";
  for (const auto& row : r.rows) {
    if (!row.ok) {
      out << row.method << ",FAIL,,,,\n";
      continue;
    }
    out << row.method << ',' << format_error(row.err1) << ',' << format_error(row.err2)
        << ',' << format_error(row.err3) << ','
        << (row.coc ? format_order(*row.coc) : "") << ','
        << (row.acoc ? format_order(*row.acoc) : "") << '\n';
  }
  return out.str();
}

void write_csv(const Report& r, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  f << csv_string(r);
  if (!f) fail(ErrorKind::IoError, "write to '" + path + "' failed");
}

std::string render_text_table(const Report& r) {
  std::ostringstream out;
  out << "problem " << r.problem_id << " @ " << r.digits << " digits\n";
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-8s %-14s %-14s %-14s %-9s %-9s\n", "method",
                "|x1-x*|", "|x2-x*|", "|x3-x*|", "COC", "ACOC");
  out << buf;
  for (const auto& row : r.rows) {
    if (!row.ok) {
      std::snprintf(buf, sizeof buf, "%-8s FAIL (%s)\n", row.method.c_str(),
                    row.fail_reason.c_str());
      out << buf;
      continue;
    }
    std::snprintf(buf, sizeof buf, "%-8s %-14s %-14s %-14s %-9s %-9s\n",
                  row.method.c_str(), format_error(row.err1).c_str(),
                  format_error(row.err2).c_str(), format_error(row.err3).c_str(),
                  row.coc ? format_order(*row.coc).c_str() : "-",
                  row.acoc ? format_order(*row.acoc).c_str() : "-");
    out << buf;
  }
  return out.str();
}

std::vector<MethodId> table_roster(int table) {
  std::vector<MethodId> roster = {MethodId::Slss, MethodId::M2, MethodId::M3,
                                  MethodId::M4};
  if (table >= 3) {
    for (MethodId m : {MethodId::Brw, MethodId::Wl, MethodId::Ss, MethodId::Bcst,
                       MethodId::Cfgt, MethodId::Ctv, MethodId::Tp, MethodId::Cl})
      roster.push_back(m);
  }
  return roster;
}

std::string table_problem_id(int table) {
  if (table < 1 || table > 4) fail(ErrorKind::ParseError, "table must be 1..4");
  return "t" + std::to_string(table);
}

}  // namespace rootlab
