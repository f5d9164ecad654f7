#pragma once

#include <optional>

#include "hypaskey/complex.hpp"
#include "hypaskey/quadrature.hpp"

namespace hypaskey {

/// Horizontal contour Im t = height in scaled variables. Unset fields are chosen
/// automatically; the evaluators fill them in on return.
struct ContourSpec {
  std::optional<double> height;
  std::optional<double> t_min;
  std::optional<double> t_max;
  int nodes = 0;
  double tail_tol = 18.0;  // decades below the peak where the window ends
};

struct EvalConfig {
  double tol = 1e-10;     // relative to the L1 norm of the integrand
  double sb_tol = 1e-13;  // absolute tolerance for every ln s_b
  double delta = 1e-3;    // minimum distance of the contour from the strip edges
  int max_panels = 1000;  // per side; the window search gives up beyond this
  std::optional<Complex> log_scale;
  quad::Execution execution = quad::Execution::parallel;
};

/// value = mantissa * exp(log_scale)
struct ScaledValue {
  Complex log_scale;
  Complex mantissa;
  ContourSpec contour;
  double error_estimate = 0.0;
  long evaluations = 0;

  Complex value() const { return mantissa * std::exp(log_scale); }
};

// Log of the integrand of M(b, zeta/b, omega/b) in t = b x, including the 1/b.
Complex m_log_integrand(double b, Complex t, double zeta, Complex omega, double sb_tol = 1e-13);
// Same for complex parameters; only strip membership of each s_b argument is checked.
Complex m_log_integrand_general(double b, Complex t, Complex zeta, Complex omega, double sb_tol = 1e-13);

/// Legal contour heights (lo, hi) for M with scaled parameters.
std::pair<double, double> m_height_range(double b, Complex zeta, Complex omega);

/// M(b, zeta/b, omega/b) for real zeta and 0 < Im omega < 1/2.
ScaledValue eval_M(double b, double zeta, Complex omega, ContourSpec contour = {}, const EvalConfig& cfg = {});
/// M(b, zeta/b, omega/b) for complex parameters with a horizontal contour.
ScaledValue eval_M_general(double b, Complex zeta, Complex omega, ContourSpec contour = {},
                           const EvalConfig& cfg = {});
/// M(b, zeta, omega) in the original variables.
ScaledValue eval_M_unscaled(double b, Complex zeta, Complex omega, ContourSpec contour = {},
                            const EvalConfig& cfg = {});

// Log of the integrand of Q(b, sigma/b, mu/b) in t = b x, including ln P_Q and the 1/b.
Complex q_log_integrand(double b, Complex t, double sigma, double mu, double sb_tol = 1e-13);
/// ln P_Q(sigma/b, mu/b).
Complex q_log_prefactor(double b, double sigma, double mu, double sb_tol = 1e-13);

std::pair<double, double> q_height_range(double b);

/// Q(b, sigma/b, mu/b) for real sigma, mu.
ScaledValue eval_Q(double b, double sigma, double mu, ContourSpec contour = {}, const EvalConfig& cfg = {});

/// Correction term E(tau, t) of the M integrand expansion.
Complex correction_E(double tau, Complex t, double zeta);
/// Correction term H(t) of the Q integrand expansion.
Complex correction_H(Complex t, double sigma, double mu);

}  // namespace hypaskey
