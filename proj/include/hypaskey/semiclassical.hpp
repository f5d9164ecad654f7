#pragma once

#include "hypaskey/complex.hpp"

namespace hypaskey {

/// Everything one saddle-point formula needs.
struct SaddleData {
  Complex t0;
  Complex f_at_t0;
  Complex fpp_at_t0;
  double alpha0 = 0.0;
  Complex prefactor;
};

/// Leading asymptotics mantissa * exp(log_scale), accurate to a factor 1 + O(b).
struct AsymptoticPrediction {
  Complex log_scale;
  Complex mantissa;
  int error_order = 1;
};

// Phase data for M. Valid for -1/2 < Im t < 0, zeta real, 0 < Im omega < 1/2.
Complex f_M_phase(Complex t, double zeta, Complex omega);
Complex g_M(Complex t);
Complex fp_M(Complex t, double zeta, Complex omega);
Complex fpp_M(Complex t, double zeta);

void check_M_regime(double zeta, Complex omega);
SaddleData saddle_M(double zeta, Complex omega);
Complex f_M_closed(double zeta, Complex omega);
/// The same closed form without the regime check, for analytic continuation.
Complex f_M_closed_analytic(Complex zeta, Complex omega);
/// e^{i pi/4} g(t0) sqrt(2 pi) / sqrt(-f''(t0)), before simplification.
Complex prefactor_M_unsimplified(double zeta, Complex omega);
AsymptoticPrediction asym_M(double b, double zeta, Complex omega);

/// Analytic gradients of f_M from the Painleve I relations.
Complex dfM_dzeta(Complex zeta, Complex omega);
Complex dfM_domega(Complex zeta, Complex omega);

// Phase data for Q. Valid for -1/2 < Im t < 1/2 (the saddle sits in (-1/2, -1/4)).
Complex f_Q_phase(Complex t, double sigma, double mu);
Complex g_Q(Complex t, double mu);
Complex fp_Q(Complex t, double sigma, double mu);
Complex fpp_Q(Complex t, double sigma);

/// e^{2 pi mu} - sinh^2(2 pi sigma); must exceed the regime margin.
double regime_discriminant(double sigma, double mu);
void check_Q_regime(double sigma, double mu);
SaddleData saddle_Q(double sigma, double mu);
Complex f_Q_closed(double sigma, double mu);
/// e^{3 pi i/4} g(t0) sqrt(2 pi) / sqrt(-f''(t0)), before simplification.
Complex prefactor_Q_unsimplified(double sigma, double mu);
AsymptoticPrediction asym_Q(double b, double sigma, double mu);

/// One Newton step from t0; returns the step length. Used only as a diagnostic.
double newton_step_M(double zeta, Complex omega);
double newton_step_Q(double sigma, double mu);

}  // namespace hypaskey
