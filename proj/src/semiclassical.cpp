#include "hypaskey/semiclassical.hpp"

#include <cmath>
#include <string>

#include "hypaskey/errors.hpp"
#include "hypaskey/special_functions.hpp"

namespace hypaskey {

namespace {

constexpr double kRegimeMargin = 1e-8;
const Complex kTwoPiI = 2.0 * kPi * kI;

Complex saddle_ratio_M(Complex zeta, Complex omega) {
  return std::exp(kPi * zeta) * std::cosh(kPi * omega) / std::sinh(kPi * (zeta + omega));
}

}  // namespace

Complex f_M_phase(Complex t, double zeta, Complex omega) {
  if (!(t.imag() > -0.5 && t.imag() < 0.0)) throw StripError("f_M_phase: need -1/2 < Im t < 0");
  const Complex li = dilog(-std::exp(2.0 * kPi * zeta)) + dilog(-std::exp(2.0 * kPi * (t - zeta))) -
                     dilog(std::exp(2.0 * kPi * t));
  return -li / kTwoPiI + kI * kPi * zeta * zeta + kTwoPiI * t * omega + kPi * t + kI * kPi / 6.0;
}

Complex g_M(Complex t) { return std::exp(kPi * t - 0.5 * log_principal(1.0 - std::exp(2.0 * kPi * t))); }

Complex fp_M(Complex t, double zeta, Complex omega) {
  return -kI * log_principal(1.0 + std::exp(2.0 * kPi * (t - zeta))) +
         kI * log_principal(1.0 - std::exp(2.0 * kPi * t)) + kTwoPiI * omega + kPi;
}

Complex fpp_M(Complex t, double zeta) {
  return kPi * kI * std::cosh(kPi * zeta) / (std::sinh(kPi * t) * std::cosh(kPi * (t - zeta)));
}

void check_M_regime(double zeta, Complex omega) {
  if (!std::isfinite(zeta) || !std::isfinite(omega.real()) || !(omega.imag() > 0.0 && omega.imag() < 0.5)) {
    throw DomainError("M regime requires real zeta and 0 < Im omega < 1/2");
  }
}

SaddleData saddle_M(double zeta, Complex omega) {
  check_M_regime(zeta, omega);
  const Complex z0 = saddle_ratio_M(zeta, omega);
  SaddleData s;
  s.t0 = log_principal(z0) / (2.0 * kPi);
  s.f_at_t0 = f_M_closed(zeta, omega);
  s.fpp_at_t0 = 4.0 * kI * kPi * std::cosh(kPi * omega) * std::sinh(kPi * (zeta + omega)) / std::cosh(kPi * zeta);
  s.alpha0 = -std::arg(-s.fpp_at_t0) / 2.0;
  s.prefactor = sqrt_principal((1.0 / std::tanh(kPi * (zeta + omega)) + 1.0) / 2.0);
  return s;
}

Complex f_M_closed(double zeta, Complex omega) {
  check_M_regime(zeta, omega);
  return f_M_closed_analytic(zeta, omega);
}

Complex f_M_closed_analytic(Complex zeta, Complex omega) {
  const Complex z0 = saddle_ratio_M(zeta, omega);
  const Complex li = dilog(-std::exp(2.0 * kPi * zeta)) + dilog(-std::exp(-2.0 * kPi * zeta) * z0) - dilog(z0);
  return -li / kTwoPiI + kI * kPi * zeta * zeta + kI * (omega - 0.5 * kI) * log_principal(z0) + kI * kPi / 6.0;
}

Complex prefactor_M_unsimplified(double zeta, Complex omega) {
  const SaddleData s = saddle_M(zeta, omega);
  return std::exp(kI * kPi / 4.0) * g_M(s.t0) * std::sqrt(2.0 * kPi) / sqrt_principal(-s.fpp_at_t0);
}

AsymptoticPrediction asym_M(double b, double zeta, Complex omega) {
  if (!(b > 0.0)) throw DomainError("asym_M: b must be positive");
  const SaddleData s = saddle_M(zeta, omega);
  return {s.f_at_t0 / (b * b), s.prefactor, 1};
}

Complex dfM_dzeta(Complex zeta, Complex omega) {
  return kTwoPiI * (zeta + omega) + kPi - kI * log_principal(1.0 - std::exp(2.0 * kPi * (zeta + omega)));
}

Complex dfM_domega(Complex zeta, Complex omega) {
  return kPi + kTwoPiI * zeta -
         kI * log_principal((1.0 - std::exp(2.0 * kPi * (zeta + omega))) / (1.0 + std::exp(2.0 * kPi * omega)));
}

Complex f_Q_phase(Complex t, double sigma, double mu) {
  if (!(std::abs(t.imag()) < 0.5)) throw StripError("f_Q_phase: need |Im t| < 1/2");
  const Complex li = dilog(-std::exp(2.0 * kPi * mu)) + dilog(-std::exp(2.0 * kPi * (t - sigma))) +
                     dilog(-std::exp(2.0 * kPi * (t + sigma)));
  return -li / kTwoPiI + kTwoPiI * mu * t + kPi * (t - mu) + 5.0 * kI * kPi / 12.0;
}

Complex g_Q(Complex t, double mu) { return std::exp(kPi * (t - mu)); }

Complex fp_Q(Complex t, double sigma, double mu) {
  return -kI * log_principal(std::exp(2.0 * kPi * (t - sigma)) + 1.0) -
         kI * log_principal(std::exp(2.0 * kPi * (t + sigma)) + 1.0) + kTwoPiI * mu + kPi;
}

Complex fpp_Q(Complex t, double sigma) {
  return -kTwoPiI * (std::sinh(2.0 * kPi * t) / (std::cosh(2.0 * kPi * sigma) + std::cosh(2.0 * kPi * t)) + 1.0);
}

double regime_discriminant(double sigma, double mu) {
  const double sh = std::sinh(2.0 * kPi * sigma);
  return std::exp(2.0 * kPi * mu) - sh * sh;
}

void check_Q_regime(double sigma, double mu) {
  if (!std::isfinite(sigma) || !std::isfinite(mu)) throw DomainError("Q regime requires finite real sigma, mu");
  const double d = regime_discriminant(sigma, mu);
  if (!(d > kRegimeMargin)) {
    throw RegimeError("Q regime requires exp(2 pi mu) > sinh^2(2 pi sigma); discriminant = " + std::to_string(d));
  }
}

namespace {

// z_- = -cosh(2 pi sigma) - i sqrt(D)
Complex z_minus(double sigma, double mu) {
  return {-std::cosh(2.0 * kPi * sigma), -std::sqrt(regime_discriminant(sigma, mu))};
}

}  // namespace

SaddleData saddle_Q(double sigma, double mu) {
  check_Q_regime(sigma, mu);
  const double D = regime_discriminant(sigma, mu);
  const double S = std::sqrt(D);
  const double sh = std::sinh(2.0 * kPi * sigma);
  SaddleData s;
  s.t0 = log_principal(z_minus(sigma, mu)) / (2.0 * kPi);
  s.f_at_t0 = f_Q_closed(sigma, mu);
  const double em = std::exp(-2.0 * kPi * mu);
  s.fpp_at_t0 = Complex(-4.0 * kPi * em * std::cosh(2.0 * kPi * sigma) * S, 4.0 * kPi * (em * sh * sh - 1.0));
  s.alpha0 = -std::arg(-s.fpp_at_t0) / 2.0;
  s.prefactor = std::exp(kI * kPi / 4.0) / (std::sqrt(2.0) * std::pow(D, 0.25));
  return s;
}

Complex f_Q_closed(double sigma, double mu) {
  check_Q_regime(sigma, mu);
  const double S = std::sqrt(regime_discriminant(sigma, mu));
  const Complex w{std::cosh(2.0 * kPi * sigma), S};
  const Complex li = dilog(-std::exp(2.0 * kPi * mu)) + dilog(std::exp(-2.0 * kPi * sigma) * w) +
                     dilog(std::exp(2.0 * kPi * sigma) * w);
  return -li / kTwoPiI + (0.5 + kI * mu) * log_principal(z_minus(sigma, mu)) - kPi * mu + 5.0 * kPi * kI / 12.0;
}

Complex prefactor_Q_unsimplified(double sigma, double mu) {
  const SaddleData s = saddle_Q(sigma, mu);
  return std::exp(3.0 * kI * kPi / 4.0) * g_Q(s.t0, mu) * std::sqrt(2.0 * kPi) / sqrt_principal(-s.fpp_at_t0);
}

AsymptoticPrediction asym_Q(double b, double sigma, double mu) {
  if (!(b > 0.0)) throw DomainError("asym_Q: b must be positive");
  const SaddleData s = saddle_Q(sigma, mu);
  return {s.f_at_t0 / (b * b), s.prefactor, 1};
}

double newton_step_M(double zeta, Complex omega) {
  const SaddleData s = saddle_M(zeta, omega);
  return std::abs(fp_M(s.t0, zeta, omega) / fpp_M(s.t0, zeta));
}

double newton_step_Q(double sigma, double mu) {
  const SaddleData s = saddle_Q(sigma, mu);
  return std::abs(fp_Q(s.t0, sigma, mu) / fpp_Q(s.t0, sigma));
}

}  // namespace hypaskey
