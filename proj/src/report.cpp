#include "hypaskey/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "hypaskey/errors.hpp"

namespace hypaskey {

namespace {

using nlohmann::ordered_json;

ordered_json to_json(const ParamValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return *d;
  if (const auto* c = std::get_if<Complex>(&v)) return ordered_json{{"re", c->real()}, {"im", c->imag()}};
  return std::get<std::string>(v);
}

ordered_json to_json(const ParamMap& m) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : m) j[k] = to_json(v);
  return j;
}

ordered_json complex_json(Complex c) { return ordered_json{{"re", c.real()}, {"im", c.imag()}}; }

// NaN and infinities have no JSON spelling; write them as strings.
ordered_json real_json(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(const ParamValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return fmt(*d);
  if (const auto* c = std::get_if<Complex>(&v)) {
    return fmt(c->real()) + (std::signbit(c->imag()) ? "" : "+") + fmt(c->imag()) + "i";
  }
  return std::get<std::string>(v);
}

std::string params_text(const ParamMap& m) {
  std::string s;
  for (const auto& [k, v] : m) {
    if (!s.empty()) s += ';';
    s += k + '=' + fmt(v);
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

}  // namespace

VerificationReport make_report(std::string check, ParamMap params, double residual, double tolerance,
                               double runtime_ms, std::string note) {
  VerificationReport r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.residual = residual;
  r.tolerance = tolerance;
  r.passed = residual <= tolerance;  // false for NaN
  r.runtime_ms = runtime_ms;
  r.note = std::move(note);
  return r;
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw DomainError("fit_loglog_slope: size mismatch");
  if (x.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw DomainError("fit_loglog_slope: data must be positive");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = n * sxx - sx * sx;
  if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / den;
}

bool strictly_decreasing(const std::vector<double>& y) {
  for (std::size_t i = 1; i < y.size(); ++i) {
    if (!(y[i] < y[i - 1])) return false;
  }
  return true;
}

void finalize(ConvergenceStudy& study) {
  if (study.ratios.size() != study.b.size()) throw DomainError("ConvergenceStudy: one ratio per b value");
  study.row_errors.resize(study.b.size());
  for (std::size_t i = 0; i < study.b.size(); ++i) {
    if (!(study.b[i] > 0.0)) throw DomainError("ConvergenceStudy: b values must be positive");
    if (i > 0 && !(study.b[i] < study.b[i - 1])) throw DomainError("ConvergenceStudy: b values must be strictly descending");
  }
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < study.b.size(); ++i) {
    const Complex r = study.ratios[i];
    if (!study.row_errors[i].empty() || !std::isfinite(r.real()) || !std::isfinite(r.imag())) continue;
    const double dev = std::abs(r - 1.0);
    if (dev > 0.0) {
      xs.push_back(study.b[i]);
      ys.push_back(dev);
    }
  }
  study.fitted_order = fit_loglog_slope(xs, ys);
  if (xs.size() < 2) study.warning = "fitted order needs at least two evaluated b values";
}

void write_jsonl(std::ostream& out, const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    ordered_json j;
    j["check"] = r.check;
    j["params"] = to_json(r.params);
    j["residual"] = real_json(r.residual);
    j["tolerance"] = real_json(r.tolerance);
    j["passed"] = r.passed;
    if (!r.note.empty()) j["note"] = r.note;
    out << j.dump() << '\n';
  }
}

void write_csv(std::ostream& out, const std::vector<VerificationReport>& reports) {
  out << "check,params,residual,tolerance,passed\n";
  for (const auto& r : reports) {
    out << csv_field(r.check) << ',' << csv_field(params_text(r.params)) << ',' << fmt(r.residual) << ','
        << fmt(r.tolerance) << ',' << (r.passed ? "true" : "false") << '\n';
  }
}

void write_runtime_sidecar(std::ostream& out, const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    ordered_json j;
    j["check"] = r.check;
    j["params"] = to_json(r.params);
    j["runtime_ms"] = r.runtime_ms;
    out << j.dump() << '\n';
  }
}

void write_csv(std::ostream& out, const ConvergenceStudy& study) {
  out << "b,abs_ratio_minus_1,ratio_re,ratio_im,error\n";
  for (std::size_t i = 0; i < study.b.size(); ++i) {
    const Complex r = study.ratios[i];
    const std::string err = i < study.row_errors.size() ? study.row_errors[i] : std::string{};
    out << fmt(study.b[i]) << ',' << (err.empty() ? fmt(std::abs(r - 1.0)) : "") << ','
        << (err.empty() ? fmt(r.real()) : "") << ',' << (err.empty() ? fmt(r.imag()) : "") << ','
        << csv_field(err) << '\n';
  }
  out << "# fitted_order," << fmt(study.fitted_order) << '\n';
}

void write_json(std::ostream& out, const ConvergenceStudy& study) {
  ordered_json j;
  j["target"] = study.target;
  j["params"] = to_json(study.params);
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < study.b.size(); ++i) {
    ordered_json row;
    row["b"] = study.b[i];
    const std::string err = i < study.row_errors.size() ? study.row_errors[i] : std::string{};
    if (err.empty()) {
      row["ratio"] = complex_json(study.ratios[i]);
      row["abs_ratio_minus_1"] = real_json(std::abs(study.ratios[i] - 1.0));
    } else {
      row["error"] = err;
    }
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["fitted_order"] = real_json(study.fitted_order);
  if (!study.warning.empty()) j["warning"] = study.warning;
  out << j.dump(2) << '\n';
}

void sort_canonical(std::vector<VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const VerificationReport& a, const VerificationReport& b) {
    if (a.check != b.check) return a.check < b.check;
    return params_text(a.params) < params_text(b.params);
  });
}

}  // namespace hypaskey
