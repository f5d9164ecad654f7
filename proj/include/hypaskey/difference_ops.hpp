#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hypaskey/complex.hpp"
#include "hypaskey/qaskey.hpp"
#include "hypaskey/report.hpp"

namespace hypaskey {

/// Which of b and 1/b plays the role of b in the operator.
enum class ShiftVariant { b, inv_b };

const char* to_string(ShiftVariant v);

/// M(zeta, omega) in unscaled variables at fixed b.
using MFunction = std::function<Complex(Complex, Complex)>;

enum class ShiftDirection { zeta, omega };

/// base(zeta + amount, omega) or base(zeta, omega + amount).
struct ShiftEvaluator {
  MFunction base;
  ShiftDirection direction = ShiftDirection::zeta;
  Complex amount;

  Complex operator()(Complex zeta, Complex omega) const;
};

/// Memoizes eval_M_unscaled at fixed b; safe to share between threads.
class MCache {
 public:
  MCache(double b, EvalConfig cfg);

  Complex operator()(Complex zeta, Complex omega);
  MFunction function();
  double b() const { return b_; }
  std::size_t size() const;

 private:
  double b_;
  EvalConfig cfg_;
  mutable std::mutex mutex_;
  std::map<std::tuple<double, double, double, double>, Complex> values_;
};

struct DifferenceResidual {
  Complex lhs;
  Complex rhs;
  Complex base;       // M(zeta, omega)
  double relative = 0.0;  // |lhs - rhs| / |M|
};

/// nullopt when (zeta, omega) and the shifted point both lie where the integral
/// converges; otherwise the violated condition.
std::optional<std::string> inadmissible_D_M(double b, Complex zeta, Complex omega, ShiftVariant v);
std::optional<std::string> inadmissible_Dtilde_M(double b, Complex zeta, Complex omega, ShiftVariant v);

/// e^{2 pi k zeta}(M - M(zeta + ik)) against e^{-2 pi k omega} M, k = b or 1/b.
DifferenceResidual residual_D_M(double b, Complex zeta, Complex omega, ShiftVariant v, const MFunction& M);
DifferenceResidual residual_D_M(double b, Complex zeta, Complex omega, ShiftVariant v, const EvalConfig& cfg = {});

/// Right-hand side exponent of the k = 1/b omega equation: `plus` is
/// e^{+2 pi zeta / b}; `minus` is e^{-2 pi zeta / b}, the sign that agrees with
/// the k = b equation at b = 1.
enum class TildeSign { plus, minus };

/// e^{2 pi k omega} M - 2 e^{pi k(omega - ik/2)} cosh(pi k(ik/2 + omega)) M(omega + ik)
/// against e^{-2 pi b zeta} M (k = b) or e^{2 pi zeta / b} M (k = 1/b).
DifferenceResidual residual_Dtilde_M(double b, Complex zeta, Complex omega, ShiftVariant v, const MFunction& M,
                                     TildeSign sign = TildeSign::plus);
DifferenceResidual residual_Dtilde_M(double b, Complex zeta, Complex omega, ShiftVariant v,
                                     const EvalConfig& cfg = {}, TildeSign sign = TildeSign::plus);

/// exp(i df/dzeta) and exp(i df/domega) against their closed forms, with the
/// analytic gradients of f_M. Purely algebraic; b does not enter.
std::vector<VerificationReport> semiclassical_limit_check(double zeta, Complex omega, double tol = 1e-12);

}  // namespace hypaskey
