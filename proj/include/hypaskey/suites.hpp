#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hypaskey/complex.hpp"
#include "hypaskey/qaskey.hpp"
#include "hypaskey/report.hpp"

namespace hypaskey {

/// Every default tolerance and grid used by the harness, in one versioned table.
struct Defaults {
  std::string version = "1.0";
  double eval_tol = 1e-10;        // contour quadrature, relative to the L1 norm
  double sb_tol = 1e-13;          // each ln s_b
  double contour_delta = 1e-3;    // minimum distance from strip edges
  double tail_tol = 18.0;         // decades below the peak where windows end
  int max_panels = 1000;          // per side of the contour window
  double fd_step = 1e-4;          // central differences
  double saddle_tol = 1e-12;      // |f'(t0)|
  double newton_tol = 1e-12;      // Newton step from t0
  double identity_tol = 1e-10;    // f_Q against W
  double dilog_tol = 1e-12;
  double sb_identity_tol = 1e-10;
  double kernel_tol = 1e-10;       // sinh-kernel integral against polylog
  double algebraic_tol = 1e-10;   // gradient identities
  double limit_tol = 1e-12;       // exponentiated gradient relations
  double gradient_fd_tol = 1e-7;  // analytic gradients against differences
  double difference_tol = 1e-6;   // relative residual of the difference equations
  double difference_quad_tol = 1e-8;
  double difference_sb_tol = 1e-11;
  double expansion_min_order = 5.0;
  double min_feasible_b = 0.15;
  std::vector<double> converge_b{0.5, 0.4, 0.3, 0.25, 0.2};
  std::vector<double> difference_b{0.9, 1.0, 1.1};
  std::vector<double> expansion_b{0.4, 0.3, 0.2, 0.15};
};

const Defaults& defaults();
void print_defaults(std::ostream& out);

const std::vector<std::string>& suite_names();

struct SuiteOptions {
  std::optional<std::vector<double>> b;  // overrides the suite's b list
  std::optional<double> tol;             // overrides the quadrature tolerance
  quad::Execution execution = quad::Execution::parallel;
};

/// Runs one suite ("saddles", "odes", "identities", "difference", "expansion" or "all").
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options = {});

// Individual suites.
std::vector<VerificationReport> suite_saddles();
std::vector<VerificationReport> suite_odes(double h);
std::vector<VerificationReport> suite_identities();
std::vector<VerificationReport> suite_difference(const std::vector<double>& bs, const EvalConfig& cfg);
std::vector<VerificationReport> suite_expansion(const std::vector<double>& bs);

/// Evaluation points for the difference suite: (0.1, 0.3i) and four points where
/// all four equations are admissible for b near 1.
const std::vector<std::pair<Complex, Complex>>& difference_points();

/// Numeric over asymptotic ratios for M at (zeta, omega) or Q at (sigma, mu).
ConvergenceStudy converge_M(double zeta, Complex omega, const std::vector<double>& bs, const EvalConfig& cfg = {});
ConvergenceStudy converge_Q(double sigma, double mu, const std::vector<double>& bs, const EvalConfig& cfg = {});

/// Evenly spaced points, both ends included.
std::vector<double> linspace(double a, double b, int n);

}  // namespace hypaskey
