#pragma once

#include <functional>
#include <vector>

#include "hypaskey/complex.hpp"
#include "hypaskey/report.hpp"

namespace hypaskey {

/// Painleve I point: Re zeta = -1/2 and 1/2 < Re omega < 1.
struct PIPoint {
  Complex zeta;
  Complex omega;

  PIPoint(Complex zeta_value, Complex omega_value);
};

/// Painleve III_3 point in the regime e^{2 pi mu} > sinh^2(2 pi sigma).
struct PIII3Point {
  double sigma = 0.0;
  double mu = 0.0;

  PIII3Point(double sigma_value, double mu_value);
};

/// Y(zeta, omega) = f_M(i zeta + i/2, i omega - i/2) + 2 i pi zeta omega + i pi zeta (zeta - 1).
Complex Y(const PIPoint& p);
/// The same expression without the point check, for difference quotients.
Complex Y_analytic(Complex zeta, Complex omega);

/// Right-hand sides of the generating-function equations for Y.
Complex dY_dzeta_expected(Complex zeta, Complex omega);
Complex dY_domega_expected(Complex zeta, Complex omega);

/// arcsin(e^{pi nu} sin(2 pi sigma)) / (2 pi), principal branch.
Complex eta(Complex sigma, Complex nu);

/// 8 pi^2 W = Li2(-e^{2i pi(sigma + eta - i nu/2)}) + Li2(-e^{-2i pi(sigma + eta + i nu/2)})
///            - (2 pi eta)^2 + (pi nu)^2, every function on its principal branch.
Complex W_principal(Complex sigma, Complex nu);

/// W(i sigma, -mu - i/2) from the closed form valid throughout the regime.
Complex W_rotated(double sigma, double mu);

/// Branch tracking of W_principal along sigma -> e^{i pi alpha/2} sigma, then nu -> nu - i beta/2.
struct HomotopyTrace {
  int steps = 0;
  double max_dilog_arg = 0.0;   // largest |argument| of either dilogarithm
  double max_arcsin_arg = 0.0;  // largest |argument| of arcsin
  double max_abs_im_eta = 0.0;
  bool crossed_cut = false;     // some argument left the open unit disk
  Complex endpoint;             // W_principal at alpha = beta = 1
};

HomotopyTrace trace_W_homotopy(double sigma = 0.2, double nu = -1.0, int steps = 200);

using YFunction = std::function<Complex(Complex, Complex)>;

/// Central-difference residuals of both generating-function equations at step h
/// and at h/2, and the observed order of the zeta residual.
std::vector<VerificationReport> check_PI_generating(const PIPoint& p, double h = 1e-4);
/// Same checks for an arbitrary candidate Y.
std::vector<VerificationReport> check_PI_generating(const YFunction& y, const PIPoint& p, double h = 1e-4);

}  // namespace hypaskey
