#include "hypaskey/painleve.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "hypaskey/errors.hpp"
#include "hypaskey/semiclassical.hpp"
#include "hypaskey/special_functions.hpp"

namespace hypaskey {

namespace {

const Complex kTwoPiI = 2.0 * kPi * kI;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

PIPoint::PIPoint(Complex zeta_value, Complex omega_value) : zeta(zeta_value), omega(omega_value) {
  if (!(std::abs(zeta.real() + 0.5) <= 1e-12) || !std::isfinite(zeta.imag())) {
    throw DomainError("PIPoint: need Re zeta = -1/2");
  }
  if (!(omega.real() > 0.5 && omega.real() < 1.0) || !std::isfinite(omega.imag())) {
    throw DomainError("PIPoint: need 1/2 < Re omega < 1");
  }
}

PIII3Point::PIII3Point(double sigma_value, double mu_value) : sigma(sigma_value), mu(mu_value) {
  check_Q_regime(sigma, mu);
}

Complex Y_analytic(Complex zeta, Complex omega) {
  return f_M_closed_analytic(kI * zeta + 0.5 * kI, kI * omega - 0.5 * kI) + kTwoPiI * zeta * omega +
         kI * kPi * zeta * (zeta - 1.0);
}

Complex Y(const PIPoint& p) {
  // Re zeta = -1/2 puts the first slot on the real line.
  const Complex first = kI * p.zeta + 0.5 * kI;
  check_M_regime(first.real(), kI * p.omega - 0.5 * kI);
  return Y_analytic(p.zeta, p.omega);
}

Complex dY_dzeta_expected(Complex zeta, Complex omega) {
  return log_principal(1.0 - std::exp(kTwoPiI * (zeta + omega)));
}

Complex dY_domega_expected(Complex zeta, Complex omega) {
  return log_principal((1.0 - std::exp(kTwoPiI * (zeta + omega))) / (1.0 - std::exp(kTwoPiI * omega)));
}

Complex eta(Complex sigma, Complex nu) {
  return arcsin_principal(std::exp(kPi * nu) * std::sin(2.0 * kPi * sigma)) / (2.0 * kPi);
}

Complex W_principal(Complex sigma, Complex nu) {
  const Complex e = eta(sigma, nu);
  const Complex a = -std::exp(kTwoPiI * (sigma + e - 0.5 * kI * nu));
  const Complex c = -std::exp(-kTwoPiI * (sigma + e + 0.5 * kI * nu));
  const Complex twopi_eta = 2.0 * kPi * e;
  return (dilog(a) + dilog(c) - twopi_eta * twopi_eta + kPi * kPi * nu * nu) / (8.0 * kPi * kPi);
}

Complex W_rotated(double sigma, double mu) {
  check_Q_regime(sigma, mu);
  const double sh = std::sinh(2.0 * kPi * sigma);
  const double root = std::sqrt(std::exp(2.0 * kPi * mu) - sh * sh);
  const Complex a(sh, -root);
  const Complex l = log_principal(kI * std::exp(-kPi * mu) * a);
  const Complex sum = dilog(-std::exp(-2.0 * kPi * (mu + sigma)) * a) + dilog(1.0 / (std::exp(-2.0 * kPi * sigma) * a)) +
                      l * l;
  return sum / (8.0 * kPi * kPi) + mu * mu / 8.0 + kI * mu / 8.0 - 1.0 / 32.0;
}

HomotopyTrace trace_W_homotopy(double sigma, double nu, int steps) {
  if (steps < 1) throw DomainError("trace_W_homotopy: need at least one step");
  HomotopyTrace trace;
  auto visit = [&](double alpha, double beta) {
    const Complex s = std::exp(0.5 * kI * kPi * alpha) * sigma;
    const Complex n = nu - 0.5 * kI * beta;
    const Complex arg = std::exp(kPi * n) * std::sin(2.0 * kPi * s);
    const Complex e = eta(s, n);
    const double d1 = std::abs(std::exp(kTwoPiI * (s + e - 0.5 * kI * n)));
    const double d2 = std::abs(std::exp(-kTwoPiI * (s + e + 0.5 * kI * n)));
    trace.max_arcsin_arg = std::max(trace.max_arcsin_arg, std::abs(arg));
    trace.max_dilog_arg = std::max({trace.max_dilog_arg, d1, d2});
    trace.max_abs_im_eta = std::max(trace.max_abs_im_eta, std::abs(e.imag()));
    ++trace.steps;
  };
  for (int k = 0; k <= steps; ++k) visit(static_cast<double>(k) / steps, 0.0);
  for (int k = 1; k <= steps; ++k) visit(1.0, static_cast<double>(k) / steps);
  trace.crossed_cut = !(trace.max_dilog_arg < 1.0 && trace.max_arcsin_arg < 1.0);
  trace.endpoint = W_principal(kI * sigma, nu - 0.5 * kI);
  return trace;
}

std::vector<VerificationReport> check_PI_generating(const YFunction& y, const PIPoint& p, double h) {
  if (!(h > 0.0)) throw DomainError("check_PI_generating: h must be positive");
  const auto start = std::chrono::steady_clock::now();
  // zeta moves along its vertical line and omega along the real axis, so every
  // stencil point stays a valid Painleve I point.
  auto residuals = [&](double step) {
    const Complex dz = (y(p.zeta + kI * step, p.omega) - y(p.zeta - kI * step, p.omega)) / (2.0 * kI * step);
    const Complex dw = (y(p.zeta, p.omega + step) - y(p.zeta, p.omega - step)) / (2.0 * step);
    return std::pair{std::abs(dz - dY_dzeta_expected(p.zeta, p.omega)),
                     std::abs(dw - dY_domega_expected(p.zeta, p.omega))};
  };
  const auto [rz, rw] = residuals(h);
  const auto [rz2, rw2] = residuals(0.5 * h);
  const double ms = elapsed_ms(start);
  const ParamMap params{{"zeta", p.zeta}, {"omega", p.omega}, {"h", h}};
  std::vector<VerificationReport> out;
  out.push_back(make_report("PI.dY_dzeta", params, rz, 10.0 * h * h, ms));
  out.push_back(make_report("PI.dY_domega", params, rw, 10.0 * h * h, ms));

  // Halving h should cut a truncation-dominated residual by four.
  const double worst = std::max(rz, rw);
  const double worst_half = std::max(rz2, rw2);
  constexpr double kRoundoff = 1e-11;
  if (worst <= kRoundoff) {
    out.push_back(make_report("PI.h_halving_order", params, 0.0, 0.5, ms, "residuals at roundoff; order not measured"));
  } else {
    const double order = std::log2(worst / worst_half);
    out.push_back(make_report("PI.h_halving_order", params, std::abs(order - 2.0), 0.5, ms,
                              "observed order " + std::to_string(order)));
  }
  return out;
}

std::vector<VerificationReport> check_PI_generating(const PIPoint& p, double h) {
  Y(p);
  return check_PI_generating(YFunction(Y_analytic), p, h);
}

}  // namespace hypaskey
