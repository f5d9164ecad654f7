#pragma once

#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "hypaskey/complex.hpp"

namespace hypaskey {

using ParamValue = std::variant<double, Complex, std::string>;
using ParamMap = std::map<std::string, ParamValue>;

/// One pass/fail check. passed is always residual <= tolerance.
struct VerificationReport {
  std::string check;
  ParamMap params;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double runtime_ms = 0.0;
  std::string note;
};

VerificationReport make_report(std::string check, ParamMap params, double residual, double tolerance,
                               double runtime_ms = 0.0, std::string note = {});

/// |ratio - 1| against descending b, with the least-squares slope of the log-log data.
struct ConvergenceStudy {
  std::string target;
  ParamMap params;
  std::vector<double> b;
  std::vector<Complex> ratios;
  std::vector<std::string> row_errors;  // empty when the row evaluated
  double fitted_order = 0.0;
  std::string warning;
};

/// Slope of ln y against ln x by least squares; NaN for fewer than two points.
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Recomputes fitted_order from the rows that evaluated; validates the b list.
void finalize(ConvergenceStudy& study);

/// True when every entry of y is strictly below its predecessor.
bool strictly_decreasing(const std::vector<double>& y);

// Writers. Complex values are written as {"re": x, "im": y}; runtimes go to a
// separate sidecar so the data files are reproducible byte for byte.
void write_jsonl(std::ostream& out, const std::vector<VerificationReport>& reports);
void write_csv(std::ostream& out, const std::vector<VerificationReport>& reports);
void write_runtime_sidecar(std::ostream& out, const std::vector<VerificationReport>& reports);
void write_csv(std::ostream& out, const ConvergenceStudy& study);
void write_json(std::ostream& out, const ConvergenceStudy& study);

/// Sorts reports by check name, then by the printed parameter map.
void sort_canonical(std::vector<VerificationReport>& reports);

}  // namespace hypaskey
