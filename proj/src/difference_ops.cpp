#include "hypaskey/difference_ops.hpp"

#include <chrono>
#include <cmath>

#include "hypaskey/errors.hpp"
#include "hypaskey/semiclassical.hpp"

namespace hypaskey {

namespace {

double shift_of(double b, ShiftVariant v) { return v == ShiftVariant::b ? b : 1.0 / b; }

void check_b(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("b must be a positive finite number");
}

// Conditions under which the integral for M converges and avoids the excluded lattice.
std::optional<std::string> outside_domain(double b, Complex zeta, Complex omega, const char* which) {
  const double Q = b + 1.0 / b;
  if (!(omega.imag() < 0.5 * Q)) return std::string(which) + ": Im omega >= Q/2";
  if (!((zeta + omega).imag() > 0.0)) return std::string(which) + ": Im(zeta + omega) <= 0";
  for (int m = 0; m * b <= std::abs(zeta.imag()) + Q; ++m) {
    for (int l = 0; m * b + l / b <= std::abs(zeta.imag()) + Q; ++l) {
      const double s = 0.5 * Q + m * b + l / b;
      if (std::abs(zeta - kI * s) < 1e-9 || std::abs(zeta + kI * s) < 1e-9) {
        return std::string(which) + ": zeta on the excluded lattice";
      }
    }
  }
  return std::nullopt;
}

DifferenceResidual finish(Complex lhs, Complex rhs, Complex base) {
  return {lhs, rhs, base, std::abs(lhs - rhs) / std::abs(base)};
}

}  // namespace

const char* to_string(ShiftVariant v) { return v == ShiftVariant::b ? "b" : "1/b"; }

Complex ShiftEvaluator::operator()(Complex zeta, Complex omega) const {
  return direction == ShiftDirection::zeta ? base(zeta + amount, omega) : base(zeta, omega + amount);
}

MCache::MCache(double b, EvalConfig cfg) : b_(b), cfg_(cfg) { check_b(b); }

Complex MCache::operator()(Complex zeta, Complex omega) {
  const auto key = std::tuple{zeta.real(), zeta.imag(), omega.real(), omega.imag()};
  {
    std::lock_guard lock(mutex_);
    if (auto it = values_.find(key); it != values_.end()) return it->second;
  }
  const Complex v = eval_M_unscaled(b_, zeta, omega, {}, cfg_).value();
  std::lock_guard lock(mutex_);
  values_.emplace(key, v);
  return v;
}

MFunction MCache::function() {
  return [this](Complex zeta, Complex omega) { return (*this)(zeta, omega); };
}

std::size_t MCache::size() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

std::optional<std::string> inadmissible_D_M(double b, Complex zeta, Complex omega, ShiftVariant v) {
  check_b(b);
  if (auto r = outside_domain(b, zeta, omega, "base point")) return r;
  return outside_domain(b, zeta + kI * shift_of(b, v), omega, "shifted point");
}

std::optional<std::string> inadmissible_Dtilde_M(double b, Complex zeta, Complex omega, ShiftVariant v) {
  check_b(b);
  if (auto r = outside_domain(b, zeta, omega, "base point")) return r;
  return outside_domain(b, zeta, omega + kI * shift_of(b, v), "shifted point");
}

DifferenceResidual residual_D_M(double b, Complex zeta, Complex omega, ShiftVariant v, const MFunction& M) {
  if (auto why = inadmissible_D_M(b, zeta, omega, v)) throw DomainError("residual_D_M: " + *why);
  const double k = shift_of(b, v);
  const Complex base = M(zeta, omega);
  const Complex shifted = ShiftEvaluator{M, ShiftDirection::zeta, kI * k}(zeta, omega);
  return finish(std::exp(2.0 * kPi * k * zeta) * (base - shifted), std::exp(-2.0 * kPi * k * omega) * base, base);
}

DifferenceResidual residual_D_M(double b, Complex zeta, Complex omega, ShiftVariant v, const EvalConfig& cfg) {
  MCache cache(b, cfg);
  return residual_D_M(b, zeta, omega, v, cache.function());
}

DifferenceResidual residual_Dtilde_M(double b, Complex zeta, Complex omega, ShiftVariant v, const MFunction& M,
                                     TildeSign sign) {
  if (auto why = inadmissible_Dtilde_M(b, zeta, omega, v)) throw DomainError("residual_Dtilde_M: " + *why);
  const double k = shift_of(b, v);
  const Complex base = M(zeta, omega);
  const Complex shifted = ShiftEvaluator{M, ShiftDirection::omega, kI * k}(zeta, omega);
  const Complex lhs = std::exp(2.0 * kPi * k * omega) * base -
                      2.0 * std::exp(kPi * k * (omega - 0.5 * kI * k)) * std::cosh(kPi * k * (0.5 * kI * k + omega)) *
                          shifted;
  // With TildeSign::plus the two variants differ in the sign of the exponent on the right.
  const double s = sign == TildeSign::plus ? 1.0 : -1.0;
  const Complex rhs =
      v == ShiftVariant::b ? std::exp(-2.0 * kPi * b * zeta) * base : std::exp(s * 2.0 * kPi * zeta / b) * base;
  return finish(lhs, rhs, base);
}

DifferenceResidual residual_Dtilde_M(double b, Complex zeta, Complex omega, ShiftVariant v, const EvalConfig& cfg,
                                     TildeSign sign) {
  MCache cache(b, cfg);
  return residual_Dtilde_M(b, zeta, omega, v, cache.function(), sign);
}

std::vector<VerificationReport> semiclassical_limit_check(double zeta, Complex omega, double tol) {
  const auto start = std::chrono::steady_clock::now();
  check_M_regime(zeta, omega);
  const Complex ez = std::exp(2.0 * kPi * (zeta + omega));
  const Complex lhs_z = std::exp(kI * dfM_dzeta(zeta, omega));
  const Complex rhs_z = -std::exp(-2.0 * kPi * (zeta + omega)) * (1.0 - ez);
  const Complex lhs_w = std::exp(kI * dfM_domega(zeta, omega));
  const Complex rhs_w = -std::exp(-2.0 * kPi * zeta) * (1.0 - ez) / (1.0 + std::exp(2.0 * kPi * omega));
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const ParamMap params{{"zeta", zeta}, {"omega", omega}};
  return {make_report("limit.exp_i_dzeta", params, std::abs(lhs_z - rhs_z) / std::abs(rhs_z), tol, ms),
          make_report("limit.exp_i_domega", params, std::abs(lhs_w - rhs_w) / std::abs(rhs_w), tol, ms)};
}

}  // namespace hypaskey
