#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootlab/driver.hpp"

namespace rootlab {

struct ReportRow {
  std::string method;
  bool ok = false;
  std::string fail_reason;
  BigReal err1, err2, err3;            // |x1-x*|, |x2-x*|, |x3-x*|
  std::optional<BigReal> coc, acoc;
  Termination termination = Termination::MaxIters;
};

struct Report {
  std::string problem_id;
  long digits = 0;
  std::vector<ReportRow> rows;  // roster order
};

/// Run every method from the problem's canonical x0 at the given precision
/// and collect the first three errors plus COC/ACOC. A step failure after
/// three complete iterations (the precision floor was reached) still yields
/// a valid row; failing earlier marks the row as failed.
Report run_table(const Problem& p, const std::vector<MethodId>& methods, Precision digits);

/// Paper-style scientific notation with the mantissa in [0.1, 1) and three
/// significant digits: 9.49e-15 -> "0.949e-14"; 0 -> "0".
std::string format_error(const BigReal& e);

/// Fixed-point with 4 decimals for order estimates.
std::string format_order(const BigReal& v);

/// CSV: header "method,err1,err2,err3,coc,acoc", one row per method, failed
/// rows as "<method>,FAIL,,,,". Deterministic bytes for identical inputs.
void write_csv(const Report& r, const std::string& path);
std::string csv_string(const Report& r);

/// Aligned human-readable table.
std::string render_text_table(const Report& r);

/// Tables 1..4 map to problems t1..t4; 1-2 run the four new schemes,
/// 3-4 additionally the eight comparators.
std::vector<MethodId> table_roster(int table);
std::string table_problem_id(int table);

}  // namespace rootlab
