#include "hypaskey/suites.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "hypaskey/difference_ops.hpp"
#include "hypaskey/errors.hpp"
#include "hypaskey/hyperbolic_gamma.hpp"
#include "hypaskey/painleve.hpp"
#include "hypaskey/semiclassical.hpp"
#include "hypaskey/special_functions.hpp"

namespace hypaskey {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) { return std::chrono::duration<double, std::milli>(Clock::now() - t).count(); }

constexpr double kInf = std::numeric_limits<double>::infinity();

// 0 inside (lo, hi), otherwise the distance to the interval.
double outside(double x, double lo, double hi) {
  if (x > lo && x < hi) return 0.0;
  return x <= lo ? lo - x + 1e-300 : x - hi + 1e-300;
}

std::vector<std::pair<double, double>> q_regime_grid(int n) {
  std::vector<std::pair<double, double>> pts;
  for (double s : linspace(-0.15, 0.15, n)) {
    for (double m : linspace(-0.1, 0.5, n)) {
      if (regime_discriminant(s, m) > 1e-8) pts.push_back({s, m});
    }
  }
  return pts;
}

}  // namespace

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return v;
}

const Defaults& defaults() {
  static const Defaults d;
  return d;
}

void print_defaults(std::ostream& out) {
  const Defaults& d = defaults();
  auto list = [](const std::vector<double>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
  };
  out << "defaults_version = " << d.version << '\n' << std::setprecision(17);
  out << "eval_tol = " << d.eval_tol << '\n'
      << "sb_tol = " << d.sb_tol << '\n'
      << "contour_delta = " << d.contour_delta << '\n'
      << "tail_tol = " << d.tail_tol << '\n'
      << "max_panels = " << d.max_panels << '\n'
      << "fd_step = " << d.fd_step << '\n'
      << "saddle_tol = " << d.saddle_tol << '\n'
      << "newton_tol = " << d.newton_tol << '\n'
      << "identity_tol = " << d.identity_tol << '\n'
      << "dilog_tol = " << d.dilog_tol << '\n'
      << "sb_identity_tol = " << d.sb_identity_tol << '\n'
      << "kernel_tol = " << d.kernel_tol << '\n'
      << "algebraic_tol = " << d.algebraic_tol << '\n'
      << "limit_tol = " << d.limit_tol << '\n'
      << "gradient_fd_tol = " << d.gradient_fd_tol << '\n'
      << "difference_tol = " << d.difference_tol << '\n'
      << "difference_quad_tol = " << d.difference_quad_tol << '\n'
      << "difference_sb_tol = " << d.difference_sb_tol << '\n'
      << "expansion_min_order = " << d.expansion_min_order << '\n'
      << "min_feasible_b = " << d.min_feasible_b << '\n'
      << "converge_b = " << list(d.converge_b) << '\n'
      << "difference_b = " << list(d.difference_b) << '\n'
      << "expansion_b = " << list(d.expansion_b) << '\n';
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"saddles", "odes", "identities", "difference", "expansion", "all"};
  return names;
}

std::vector<VerificationReport> suite_saddles() {
  const Defaults& d = defaults();
  std::vector<VerificationReport> out;
  const auto zetas = linspace(-0.5, 0.5, 20);
  const auto re_w = linspace(-0.3, 0.3, 20);
  const auto im_w = linspace(0.05, 0.45, 20);
  for (double zeta : zetas) {
    for (int j = 0; j < 20; ++j) {
      const auto t = Clock::now();
      const Complex omega(re_w[j], im_w[j]);
      const SaddleData s = saddle_M(zeta, omega);
      const double fp = std::abs(fp_M(s.t0, zeta, omega));
      const double strip = outside(s.t0.imag(), -0.5, 0.0);
      const double step = newton_step_M(zeta, omega);
      const double ms = ms_since(t);
      const ParamMap params{{"zeta", zeta}, {"omega", omega}};
      out.push_back(make_report("saddle.M.fprime", params, fp, d.saddle_tol, ms));
      out.push_back(make_report("saddle.M.strip", params, strip, 0.0, ms));
      out.push_back(make_report("saddle.M.newton", params, step, d.newton_tol, ms));
    }
  }
  for (const auto& [sigma, mu] : q_regime_grid(20)) {
    const auto t = Clock::now();
    const SaddleData s = saddle_Q(sigma, mu);
    const double fp = std::abs(fp_Q(s.t0, sigma, mu));
    const double strip = outside(s.t0.imag(), -0.5, -0.25);
    const double step = newton_step_Q(sigma, mu);
    const double ms = ms_since(t);
    const ParamMap params{{"sigma", sigma}, {"mu", mu}};
    out.push_back(make_report("saddle.Q.fprime", params, fp, d.saddle_tol, ms));
    out.push_back(make_report("saddle.Q.strip", params, strip, 0.0, ms));
    out.push_back(make_report("saddle.Q.newton", params, step, d.newton_tol, ms));
  }
  return out;
}

std::vector<VerificationReport> suite_odes(double h) {
  const Defaults& d = defaults();
  std::vector<VerificationReport> out;

  // Chain rule through the Painleve I identification, with the analytic gradients.
  for (double y : linspace(-0.3, 0.3, 5)) {
    for (double x : linspace(0.55, 0.95, 5)) {
      const auto t = Clock::now();
      const Complex zeta(-0.5, y);
      const Complex omega(x, 0.0);
      const Complex a = kI * zeta + 0.5 * kI;
      const Complex c = kI * omega - 0.5 * kI;
      const Complex dz = kI * dfM_dzeta(a, c) + 2.0 * kI * kPi * omega + kI * kPi * (2.0 * zeta - 1.0);
      const Complex dw = kI * dfM_domega(a, c) + 2.0 * kI * kPi * zeta;
      const double ms = ms_since(t);
      const ParamMap params{{"zeta", zeta}, {"omega", omega}};
      out.push_back(make_report("ode.chain.dY_dzeta", params, std::abs(dz - dY_dzeta_expected(zeta, omega)),
                                d.algebraic_tol, ms));
      out.push_back(make_report("ode.chain.dY_domega", params, std::abs(dw - dY_domega_expected(zeta, omega)),
                                d.algebraic_tol, ms));
    }
  }

  // Analytic gradients of f_M against central differences of the closed form.
  for (const auto& [zeta, omega] : std::vector<std::pair<double, Complex>>{{0.1, {0.1, 0.25}}, {0.0, {0.0, 0.25}},
                                                                          {-0.3, {0.2, 0.4}}}) {
    const auto t = Clock::now();
    const Complex fz = (f_M_closed_analytic(zeta + h, omega) - f_M_closed_analytic(zeta - h, omega)) / (2.0 * h);
    const Complex fw = (f_M_closed(zeta, omega + h) - f_M_closed(zeta, omega - h)) / (2.0 * h);
    const double ms = ms_since(t);
    const ParamMap params{{"zeta", zeta}, {"omega", omega}, {"h", h}};
    out.push_back(make_report("ode.fd.dfM_dzeta", params, std::abs(fz - dfM_dzeta(zeta, omega)), d.gradient_fd_tol, ms));
    out.push_back(make_report("ode.fd.dfM_domega", params, std::abs(fw - dfM_domega(zeta, omega)), d.gradient_fd_tol, ms));
  }

  for (const auto& [zeta, omega] : std::vector<std::pair<Complex, Complex>>{
           {{-0.5, 0.2}, {0.6, 0.0}}, {{-0.5, 0.1}, {0.7, 0.0}}, {{-0.5, -0.15}, {0.8, 0.1}}}) {
    for (auto& r : check_PI_generating(PIPoint(zeta, omega), h)) out.push_back(std::move(r));
  }

  for (double zeta : linspace(-0.4, 0.4, 5)) {
    for (double im : linspace(0.05, 0.45, 5)) {
      for (auto& r : semiclassical_limit_check(zeta, Complex(0.1, im), d.limit_tol)) out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<VerificationReport> suite_identities() {
  const Defaults& d = defaults();
  std::vector<VerificationReport> out;

  for (const auto& [sigma, mu] : q_regime_grid(15)) {
    const auto t = Clock::now();
    const Complex rhs = 4.0 * kI * kPi * W_rotated(sigma, mu) - dilog(-std::exp(2.0 * kPi * mu)) / (2.0 * kPi * kI) -
                        2.0 * kI * kPi * sigma * sigma + kI * kPi / 4.0;
    const double r = std::abs(f_Q_closed(sigma, mu) - rhs);
    out.push_back(make_report("identity.fQ_W", {{"sigma", sigma}, {"mu", mu}}, r, d.identity_tol, ms_since(t)));
  }

  // 10 radii x 10 angles, none on the positive real axis.
  const double pi2_6 = kPi * kPi / 6.0;
  for (double r : {0.1, 0.35, 0.6, 0.9, 0.99, 1.01, 1.3, 2.0, 5.0, 20.0}) {
    for (int k = 0; k < 10; ++k) {
      const auto t = Clock::now();
      const Complex z = std::polar(r, 2.0 * kPi * (k + 0.5) / 10.0);
      const Complex l = log_principal(-z);
      const double inv = std::abs(dilog(z) + dilog(1.0 / z) + pi2_6 + 0.5 * l * l);
      const double refl =
          std::abs(dilog(z) + dilog(1.0 - z) - (pi2_6 - log_principal(z) * log_principal(1.0 - z)));
      const double ms = ms_since(t);
      const ParamMap params{{"z", z}};
      out.push_back(make_report("identity.dilog_inversion", params, inv, d.dilog_tol, ms));
      out.push_back(make_report("identity.dilog_reflection", params, refl, d.dilog_tol, ms));
    }
  }

  for (int n = 0; n <= 2; ++n) {
    for (const Complex z : {Complex(0.0, 0.0), Complex(0.1, 0.0), Complex(-0.7, 0.0), Complex(0.3, 0.4),
                            Complex(-0.2, -0.4), Complex(1.0, 0.2), Complex(-1.0, -0.1), Complex(0.5, -0.3),
                            Complex(-0.45, 0.35)}) {
      const auto t = Clock::now();
      const Complex x = -std::exp(2.0 * kPi * z);
      const Complex li = n == 0 ? dilog(x) : polylog_nonpos(2 * n - 2, x);
      const Complex rhs = 2.0 * li * std::pow(kPi * kI, 2 * n - 1);
      const double r = std::abs(sinh_kernel_integral(n, z) - rhs);
      out.push_back(make_report("identity.sinh_kernel", {{"n", static_cast<double>(n)}, {"z", z}}, r, d.kernel_tol,
                                ms_since(t)));
    }
  }

  for (double b : {0.6, 1.0, 1.7}) {
    const HypGammaParams p(b);
    const HypGammaParams q(1.0 / b);
    for (double x : linspace(-2.0, 2.0, 5)) {
      const auto t = Clock::now();
      const double r = std::abs(std::exp(ln_sb(p, x).real()) - 1.0);
      out.push_back(make_report("identity.sb_unit_modulus", {{"b", b}, {"x", x}}, r, d.sb_identity_tol, ms_since(t)));
    }
    for (const Complex z : {Complex(0.3, 0.2), Complex(-1.1, 0.4), Complex(0.7, -0.5)}) {
      const auto t = Clock::now();
      const double refl = std::abs(std::exp(ln_sb(p, z) + ln_sb(p, -z)) - 1.0);
      const double dual = std::abs(std::exp(ln_sb(p, z)) - std::exp(ln_sb(q, z)));
      const double ms = ms_since(t);
      out.push_back(make_report("identity.sb_reflection", {{"b", b}, {"z", z}}, refl, d.sb_identity_tol, ms));
      out.push_back(make_report("identity.sb_duality", {{"b", b}, {"z", z}}, dual, d.sb_identity_tol, ms));
    }
    out.push_back(make_report("identity.sb_zero", {{"b", b}}, std::abs(std::exp(ln_sb(p, 0.0)) - 1.0),
                              d.sb_identity_tol));
  }

  {
    const auto t = Clock::now();
    const HomotopyTrace tr = trace_W_homotopy();
    const double ms = ms_since(t);
    const ParamMap params{{"sigma", 0.2}, {"nu", -1.0}};
    out.push_back(make_report("identity.W_homotopy_cut", params, std::max(tr.max_dilog_arg, tr.max_arcsin_arg), 1.0,
                              ms, "largest argument modulus; must stay inside the unit disk"));
    out.push_back(make_report("identity.W_homotopy_endpoint", params, std::abs(tr.endpoint - W_rotated(0.2, 1.0)),
                              d.identity_tol, ms));
  }
  return out;
}

const std::vector<std::pair<Complex, Complex>>& difference_points() {
  static const std::vector<std::pair<Complex, Complex>> pts{{{0.1, 0.0}, {0.0, 0.3}},
                                                            {{0.1, 0.5}, {0.0, -0.2}},
                                                            {{-0.2, 0.4}, {0.1, -0.25}},
                                                            {{0.3, 0.6}, {-0.3, -0.35}},
                                                            {{0.05, 0.3}, {0.2, -0.15}}};
  return pts;
}

std::vector<VerificationReport> suite_difference(const std::vector<double>& bs, const EvalConfig& cfg) {
  const Defaults& d = defaults();
  std::vector<VerificationReport> out;
  for (double b : bs) {
    MCache cache(b, cfg);
    const MFunction M = cache.function();
    for (const auto& [zeta, omega] : difference_points()) {
      for (ShiftVariant v : {ShiftVariant::b, ShiftVariant::inv_b}) {
        const ParamMap params{{"b", b}, {"zeta", zeta}, {"omega", omega}, {"variant", std::string(to_string(v))}};
        auto run = [&](const char* name, auto&& inadmissible, auto&& residual) {
          const auto t = Clock::now();
          if (auto why = inadmissible(b, zeta, omega, v)) {
            out.push_back(make_report(name, params, kInf, d.difference_tol, ms_since(t), "inadmissible: " + *why));
            return;
          }
          try {
            out.push_back(make_report(name, params, residual(), d.difference_tol, ms_since(t)));
          } catch (const Error& e) {
            out.push_back(make_report(name, params, kInf, d.difference_tol, ms_since(t), e.what()));
          }
        };
        run("difference.D_M", inadmissible_D_M, [&] { return residual_D_M(b, zeta, omega, v, M).relative; });
        run("difference.Dtilde_M", inadmissible_Dtilde_M,
            [&] { return residual_Dtilde_M(b, zeta, omega, v, M).relative; });
      }
    }
  }
  return out;
}

std::vector<VerificationReport> suite_expansion(const std::vector<double>& bs) {
  const Defaults& d = defaults();
  std::vector<VerificationReport> out;
  for (const Complex z : {Complex(0.25, 0.0), Complex(0.0, 0.3), Complex(0.2, 0.2)}) {
    const auto t = Clock::now();
    std::vector<double> errs;
    std::vector<double> used;
    for (double b : bs) {
      const HypGammaParams p(b);
      const double e = std::abs(ln_sb_scaled(p, z, 1e-14) - semiclassical_ln_sb(p, z, 1));
      if (e > 0.0) {
        errs.push_back(e);
        used.push_back(b);
      }
    }
    const double order = fit_loglog_slope(used, errs);
    std::ostringstream note;
    note << "fitted order " << order;
    out.push_back(make_report("expansion.sb_N1_order", {{"z", z}}, d.expansion_min_order - order, 0.0, ms_since(t),
                              note.str()));
  }
  return out;
}

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options) {
  const Defaults& d = defaults();
  EvalConfig cfg;
  cfg.tol = options.tol.value_or(d.difference_quad_tol);
  cfg.sb_tol = d.difference_sb_tol;
  cfg.execution = options.execution;
  std::vector<VerificationReport> out;
  auto append = [&out](std::vector<VerificationReport> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };
  const bool all = name == "all";
  bool known = all;
  if (all || name == "saddles") known = true, append(suite_saddles());
  if (all || name == "odes") known = true, append(suite_odes(d.fd_step));
  if (all || name == "identities") known = true, append(suite_identities());
  if (all || name == "difference") known = true, append(suite_difference(options.b.value_or(d.difference_b), cfg));
  if (all || name == "expansion") known = true, append(suite_expansion(options.b.value_or(d.expansion_b)));
  if (!known) throw DomainError("unknown suite '" + name + "'");
  sort_canonical(out);
  return out;
}

namespace {

template <class Eval, class Asym>
ConvergenceStudy run_convergence(std::string target, ParamMap params, const std::vector<double>& bs, Eval&& eval,
                                 Asym&& asym) {
  ConvergenceStudy study;
  study.target = std::move(target);
  study.params = std::move(params);
  study.b = bs;
  study.ratios.assign(bs.size(), Complex(std::nan(""), std::nan("")));
  study.row_errors.assign(bs.size(), "");
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (i > 0 && !(bs[i] < bs[i - 1])) throw DomainError("converge: b values must be strictly descending");
  }
  for (std::size_t i = 0; i < bs.size(); ++i) {
    try {
      const ScaledValue v = eval(bs[i]);
      const AsymptoticPrediction a = asym(bs[i]);
      study.ratios[i] = v.mantissa / a.mantissa * std::exp(v.log_scale - a.log_scale);
    } catch (const Error& e) {
      study.row_errors[i] = e.what();
    }
  }
  finalize(study);
  return study;
}

}  // namespace

ConvergenceStudy converge_M(double zeta, Complex omega, const std::vector<double>& bs, const EvalConfig& cfg) {
  check_M_regime(zeta, omega);
  return run_convergence(
      "M", {{"zeta", zeta}, {"omega", omega}}, bs, [&](double b) { return eval_M(b, zeta, omega, {}, cfg); },
      [&](double b) { return asym_M(b, zeta, omega); });
}

ConvergenceStudy converge_Q(double sigma, double mu, const std::vector<double>& bs, const EvalConfig& cfg) {
  check_Q_regime(sigma, mu);
  return run_convergence(
      "Q", {{"sigma", sigma}, {"mu", mu}}, bs, [&](double b) { return eval_Q(b, sigma, mu, {}, cfg); },
      [&](double b) { return asym_Q(b, sigma, mu); });
}

}  // namespace hypaskey
