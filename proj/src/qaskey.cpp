#include "hypaskey/qaskey.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "hypaskey/errors.hpp"
#include "hypaskey/hyperbolic_gamma.hpp"
#include "hypaskey/semiclassical.hpp"
#include "hypaskey/special_functions.hpp"

namespace hypaskey {

namespace {

constexpr double kMaxExponent = 700.0;

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

void check_b(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("b must be a positive finite number");
}

using LogIntegrand = std::function<Complex(Complex)>;

struct Window {
  double lo = 0.0;
  double hi = 0.0;
  double peak_x = 0.0;
  Complex peak_value;
  long evaluations = 0;
};

// Walks outward from `center` in steps of `step` until Re L has fallen `drop`
// below the running maximum on two consecutive points in each direction.
Window find_window(const LogIntegrand& L, double height, double center, double step, double drop, int max_steps) {
  Window w;
  w.peak_x = center;
  w.peak_value = L({center, height});
  w.evaluations = 1;
  double best = w.peak_value.real();
  for (int dir : {+1, -1}) {
    int below = 0;
    double x = center;
    for (int k = 0; below < 2; ++k) {
      if (k >= max_steps) {
        throw ToleranceError("integrand decays too slowly along the contour Im t = " + fmt(height) + ": the window exceeds " +
                             std::to_string(max_steps) + " panels of width " + fmt(step) + " on one side");
      }
      x += dir * step;
      const Complex v = L({x, height});
      ++w.evaluations;
      if (!std::isfinite(v.real())) throw ToleranceError("non-finite log-integrand at t = " + fmt(x));
      if (v.real() > best) {
        best = v.real();
        w.peak_x = x;
        w.peak_value = v;
      }
      below = v.real() < best - drop ? below + 1 : 0;
    }
    (dir > 0 ? w.hi : w.lo) = x;
  }
  return w;
}

ScaledValue integrate_contour(const LogIntegrand& L, double height, double center, double width,
                              ContourSpec contour, const EvalConfig& cfg, std::optional<Complex> default_scale) {
  if (!(cfg.tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  const double drop = contour.tail_tol * std::log(10.0);
  Window w;
  if (contour.t_min && contour.t_max) {
    w.lo = *contour.t_min;
    w.hi = *contour.t_max;
    if (!(w.hi > w.lo)) throw DomainError("contour window must satisfy t_min < t_max");
    w.peak_x = 0.5 * (w.lo + w.hi);
    w.peak_value = L({w.peak_x, height});
  } else {
    w = find_window(L, height, center, width, drop, cfg.max_panels);
  }

  const Complex log_scale = cfg.log_scale ? *cfg.log_scale : default_scale ? *default_scale : w.peak_value;
  const double excess = w.peak_value.real() - log_scale.real();
  if (!(excess < kMaxExponent) || !(excess > -kMaxExponent)) {
    throw OverflowError("normalization exp(" + fmt(log_scale.real()) + ") leaves the mantissa outside double range");
  }

  quad::PanelGrid grid;
  grid.edges = quad::uniform_edges(w.lo, w.hi, width);
  long evaluations = w.evaluations;

  auto sweep = [&](int degree, double& abs_sum) {
    grid.degree = degree;
    const std::size_t n = grid.size();
    std::vector<Complex> terms(n);
    quad::map_indices(
        n,
        [&](std::size_t k) {
          double x = 0.0;
          double wt = 0.0;
          grid.node(k, x, wt);
          return wt * std::exp(L({x, height}) - log_scale);
        },
        terms, cfg.execution);
    evaluations += static_cast<long>(n);
    std::vector<double> mags(n);
    for (std::size_t i = 0; i < n; ++i) mags[i] = std::abs(terms[i]);
    abs_sum = quad::pairwise_sum(std::span<const double>(mags));
    return quad::pairwise_sum(terms);
  };

  constexpr int kMaxDegree = 128;
  int degree = 8;
  double abs_coarse = 0.0;
  Complex coarse = sweep(degree, abs_coarse);
  for (;;) {
    double abs_fine = 0.0;
    const Complex fine = sweep(2 * degree, abs_fine);
    const double err = std::abs(fine - coarse);
    if (!std::isfinite(abs_fine)) throw OverflowError("integrand overflowed after normalization");
    if (err <= cfg.tol * abs_fine) {
      contour.height = height;
      contour.t_min = w.lo;
      contour.t_max = w.hi;
      contour.nodes = static_cast<int>(grid.size());
      return {log_scale, fine, contour, abs_fine > 0.0 ? err / abs_fine : 0.0, evaluations};
    }
    degree *= 2;
    if (2 * degree > kMaxDegree) {
      throw ToleranceError("contour quadrature did not reach relative tolerance " + fmt(cfg.tol) +
                           " (last change " + fmt(err / abs_fine) + ")");
    }
    coarse = fine;
  }
}

double pick_height(const ContourSpec& contour, std::pair<double, double> range, double preferred,
                   const EvalConfig& cfg, const char* what) {
  const auto [lo, hi] = range;
  if (!(hi - lo > 2.0 * cfg.delta)) throw StripError(std::string(what) + ": no admissible contour height");
  if (contour.height) {
    const double h = *contour.height;
    if (!(h > lo + cfg.delta && h < hi - cfg.delta)) {
      throw StripError(std::string(what) + ": contour height " + fmt(h) + " outside (" + fmt(lo) + ", " + fmt(hi) +
                       ")");
    }
    return h;
  }
  const double pad = std::max(cfg.delta, 0.1 * (hi - lo));
  return std::clamp(preferred, lo + pad, hi - pad);
}

}  // namespace

Complex m_log_integrand_general(double b, Complex t, Complex zeta, Complex omega, double sb_tol) {
  check_b(b);
  const HypGammaParams p(b);
  const double Q = p.Q();
  const double half = 0.5 * (1.0 + b * b);
  return ln_sb_scaled(p, zeta, sb_tol) + kI * kPi * (t / b) * (zeta / b - 0.5 * kI * Q + 2.0 * omega / b) +
         ln_sb_scaled(p, t - zeta, sb_tol) - ln_sb_scaled(p, t + kI * half, sb_tol) - std::log(b);
}

Complex m_log_integrand(double b, Complex t, double zeta, Complex omega, double sb_tol) {
  if (!(omega.imag() > 0.0 && omega.imag() < 0.5)) throw DomainError("m_log_integrand: need 0 < Im omega < 1/2");
  return m_log_integrand_general(b, t, zeta, omega, sb_tol);
}

std::pair<double, double> m_height_range(double b, Complex zeta, Complex omega) {
  (void)omega;
  const double half = 0.5 * (1.0 + b * b);
  return {std::max(zeta.imag() - half, -2.0 * half), std::min(0.0, zeta.imag() + half)};
}

ScaledValue eval_M_general(double b, Complex zeta, Complex omega, ContourSpec contour, const EvalConfig& cfg) {
  check_b(b);
  const double half = 0.5 * (1.0 + b * b);
  if (!(std::abs(zeta.imag()) < half)) throw StripError("eval_M: |Im zeta| must be < (1 + b^2)/2 in scaled units");
  if (!(omega.imag() < half)) throw DomainError("eval_M: the left tail needs Im omega < (1 + b^2)/2");
  if (!((zeta + omega).imag() > 0.0)) throw DomainError("eval_M: the right tail needs Im(zeta + omega) > 0");
  const auto range = m_height_range(b, zeta, omega);
  const double h = pick_height(contour, range, 0.5 * (range.first + range.second), cfg, "eval_M");
  const double d = std::min(h - range.first, range.second - h);
  const double width = std::min(d, 0.5 * b);
  const double sb_tol = cfg.sb_tol;
  LogIntegrand L = [=](Complex t) { return m_log_integrand_general(b, t, zeta, omega, sb_tol); };
  return integrate_contour(L, h, 0.0, width, contour, cfg, std::nullopt);
}

ScaledValue eval_M(double b, double zeta, Complex omega, ContourSpec contour, const EvalConfig& cfg) {
  check_b(b);
  check_M_regime(zeta, omega);
  const SaddleData s = saddle_M(zeta, omega);
  const auto range = m_height_range(b, zeta, omega);
  const double h = pick_height(contour, range, s.t0.imag(), cfg, "eval_M");
  const double d = std::min(h - range.first, range.second - h);
  const double width = std::min(d, 0.5 * b);
  const double sb_tol = cfg.sb_tol;
  LogIntegrand L = [=](Complex t) { return m_log_integrand_general(b, t, zeta, omega, sb_tol); };
  return integrate_contour(L, h, s.t0.real(), width, contour, cfg, s.f_at_t0 / (b * b));
}

namespace {

// Pole of the unscaled M integrand: either a zero of s_b(x + iQ/2) at x = i s
// (increasing family) or a pole of s_b(x - zeta) at x = zeta - iQ/2 - i s
// (decreasing family), with s = m b + l / b.
struct IntegrandPole {
  bool increasing = true;
  int m = 0;
  int l = 0;
  Complex x;
};

// Distinct lattice offsets s = m b + l / b up to `limit`, one representative each.
std::vector<std::pair<int, int>> lattice_offsets(double b, double limit) {
  std::vector<std::pair<double, std::pair<int, int>>> all;
  for (int m = 0; m * b <= limit; ++m) {
    for (int l = 0; m * b + l / b <= limit; ++l) all.push_back({m * b + l / b, {m, l}});
  }
  std::sort(all.begin(), all.end());
  std::vector<std::pair<int, int>> out;
  double last = -1.0;
  for (const auto& [s, ml] : all) {
    if (out.empty() || s - last > 1e-12 * std::max(1.0, s)) out.push_back(ml);
    last = s;
  }
  return out;
}

}  // namespace

ScaledValue eval_M_unscaled(double b, Complex zeta, Complex omega, ContourSpec contour, const EvalConfig& cfg) {
  check_b(b);
  const HypGammaParams p(b);
  const double Q = p.Q();
  if (!(omega.imag() < 0.5 * Q)) throw DomainError("eval_M: need Im omega < Q/2 for a decaying left tail");
  if (!((zeta + omega).imag() > 0.0)) throw DomainError("eval_M: need Im(zeta + omega) > 0 for a decaying right tail");
  const double kstep = std::min(b, 1.0 / b);
  const double lo = zeta.imag() - 0.5 * Q;  // top of the decreasing family
  const double hi = 0.0;                    // bottom of the increasing family
  const double reach = std::abs(lo) + 2.0 * Q;
  const auto offsets = lattice_offsets(b, reach);
  auto offset = [b](std::pair<int, int> ml) { return ml.first * b + ml.second / b; };

  for (const auto& ml : offsets) {
    const double s = offset(ml);
    if (std::abs(zeta - kI * (0.5 * Q + s)) < 1e-9 || std::abs(zeta + kI * (0.5 * Q + s)) < 1e-9) {
      throw DomainError("eval_M: zeta lies on the excluded lattice");
    }
  }

  // Heights of every pole near the separating region.
  std::vector<double> heights;
  for (const auto& ml : offsets) {
    heights.push_back(hi + offset(ml));
    heights.push_back(lo - offset(ml));
  }
  std::sort(heights.begin(), heights.end());
  const double gap_min = 0.1 * kstep;
  auto distance_to_poles = [&](double h) {
    double d = std::numeric_limits<double>::infinity();
    for (double y : heights) d = std::min(d, std::abs(h - y));
    return d;
  };

  double h = 0.0;
  if (contour.height) {
    h = *contour.height;
    if (!(distance_to_poles(h) > cfg.delta)) {
      throw StripError("eval_M: contour height " + fmt(h) + " passes through a pole row");
    }
  } else if (hi - lo >= 2.0 * gap_min) {
    h = 0.5 * (lo + hi);
  } else {
    // The two families overlap in height; run between two pole rows and pick up
    // residues for whatever lies on the wrong side.
    const double target = 0.5 * (lo + hi);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < heights.size(); ++i) {
      if (heights[i] - heights[i - 1] < 2.0 * gap_min) continue;
      const double mid = 0.5 * (heights[i] + heights[i - 1]);
      if (std::abs(mid - target) < std::abs(best - target)) best = mid;
    }
    if (!std::isfinite(best)) throw StripError("eval_M: no contour height between pole rows");
    h = best;
  }
  const double width = std::min(distance_to_poles(h), 0.5 * kstep);

  const double sb_tol = cfg.sb_tol;
  const Complex slope = kI * kPi * (zeta - 0.5 * kI * Q + 2.0 * omega);
  LogIntegrand L = [=](Complex x) {
    return slope * x + ln_sb_continued(p, x - zeta, sb_tol) - ln_sb_continued(p, x + 0.5 * kI * Q, sb_tol);
  };

  std::vector<IntegrandPole> crossed;
  for (const auto& ml : offsets) {
    const double s = offset(ml);
    if (hi + s < h) crossed.push_back({true, ml.first, ml.second, kI * s});
    if (lo - s > h) crossed.push_back({false, ml.first, ml.second, zeta - kI * (0.5 * Q + s)});
  }

  ScaledValue v = integrate_contour(L, h, zeta.real() / 2.0, width, contour, cfg, std::nullopt);
  for (const auto& pole : crossed) {
    if (lattice(p, pole.m, pole.l).first.multiplicity != 1) {
      throw DomainError("eval_M: the contour would cross a multiple pole");
    }
    // Both families give +2 pi i Res; for the decreasing one the orientation and
    // Res s_b(p_{m,l}) = -1 / s_b'(z_{m,l}) each contribute a sign.
    const Complex dz = sb_derivative_at_zero(p, pole.m, pole.l, sb_tol);
    const Complex log_rest = pole.increasing ? slope * pole.x + ln_sb_continued(p, pole.x - zeta, sb_tol)
                                             : slope * pole.x - ln_sb_continued(p, pole.x + 0.5 * kI * Q, sb_tol);
    v.mantissa += 2.0 * kPi * kI * std::exp(log_rest - v.log_scale) / dz;
  }
  v.log_scale += ln_sb_continued(p, zeta, sb_tol);
  return v;
}

Complex q_log_prefactor(double b, double sigma, double mu, double sb_tol) {
  check_b(b);
  const HypGammaParams p(b);
  const double Q = p.Q();
  const Complex phase = 1.0 / 6.0 + 7.0 * Q * Q / 24.0 - mu * mu / (2.0 * b * b) + kI * (mu / b) * Q -
                        sigma * sigma / (b * b);
  return kI * kPi * phase + ln_sb_scaled(p, mu, sb_tol);
}

Complex q_log_integrand(double b, Complex t, double sigma, double mu, double sb_tol) {
  check_b(b);
  const HypGammaParams p(b);
  const double Q = p.Q();
  return q_log_prefactor(b, sigma, mu, sb_tol) - kI * kPi * t * t / (b * b) +
         2.0 * kI * kPi * (t / b) * (mu / b - 0.5 * kI * Q) + ln_sb_scaled(p, t + sigma, sb_tol) +
         ln_sb_scaled(p, t - sigma, sb_tol) - std::log(b);
}

std::pair<double, double> q_height_range(double b) {
  const double s = 1.0 + b * b;
  return {-0.5 * s, -0.25 * s};
}

ScaledValue eval_Q(double b, double sigma, double mu, ContourSpec contour, const EvalConfig& cfg) {
  check_b(b);
  if (!std::isfinite(sigma) || !std::isfinite(mu)) throw DomainError("eval_Q: sigma and mu must be finite reals");
  const auto range = q_height_range(b);
  std::optional<Complex> default_scale;
  // Mid-strip keeps both s_b arguments well inside their strips; the saddle
  // only fixes the window center and the scale.
  const double preferred = 0.5 * (range.first + range.second);
  double center = 0.0;
  if (regime_discriminant(sigma, mu) > 1e-8) {
    const SaddleData s = saddle_Q(sigma, mu);
    center = s.t0.real();
    default_scale = s.f_at_t0 / (b * b);
  }
  const double h = pick_height(contour, range, preferred, cfg, "eval_Q");
  const double half = 0.5 * (1.0 + b * b);
  const double d = std::min(h + half, half - h);
  const double width = std::min(d, 0.5 * b);
  const double sb_tol = cfg.sb_tol;
  // The prefactor does not depend on t.
  const Complex pre = q_log_prefactor(b, sigma, mu, sb_tol);
  const HypGammaParams p(b);
  const double Q = p.Q();
  LogIntegrand L = [=](Complex t) {
    return pre - kI * kPi * t * t / (b * b) + 2.0 * kI * kPi * (t / b) * (mu / b - 0.5 * kI * Q) +
           ln_sb_scaled(p, t + sigma, sb_tol) + ln_sb_scaled(p, t - sigma, sb_tol) - std::log(b);
  };
  return integrate_contour(L, h, center, width, contour, cfg, default_scale);
}

Complex correction_E(double tau, Complex t, double zeta) {
  if (!(tau > 0.0 && tau < 1.0)) throw DomainError("correction_E: need 0 < tau < 1");
  if (!(t.imag() > -0.5 && t.imag() < 0.0)) throw StripError("correction_E: need -1/2 < Im t < 0");
  const Complex e2t = std::exp(2.0 * kPi * t);
  const Complex shifted = std::exp(kI * kPi * tau + 2.0 * kPi * t);
  const double ez = std::exp(2.0 * kPi * zeta);
  return kI * (dilog(e2t) - dilog(shifted)) / (2.0 * kPi * tau) + 0.5 * log_principal(1.0 - e2t) +
         kI * kPi * tau / 12.0 * (shifted / (shifted - 1.0) - ez / (ez + 1.0) - e2t / (ez + e2t) + 2.0);
}

Complex correction_H(Complex t, double sigma, double mu) {
  if (!(std::abs(t.imag()) < 0.5)) throw StripError("correction_H: need |Im t| < 1/2");
  auto e = [](Complex x) { return std::exp(2.0 * kPi * x); };
  const Complex num = 4.0 * e(mu + sigma) + 5.0 * e(sigma) + 2.0 * e(mu + sigma + 2.0 * t) +
                      3.0 * e(mu + 2.0 * sigma + t) + 3.0 * e(mu + t) + 3.0 * e(sigma + 2.0 * t) +
                      4.0 * e(2.0 * sigma + t) + 4.0 * e(t);
  const Complex den = 12.0 * (e(mu) + 1.0) * (e(sigma) + e(t)) * (e(sigma + t) + 1.0);
  return kI * kPi * num / den;
}

}  // namespace hypaskey
