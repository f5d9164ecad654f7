#include "hypaskey/hyperbolic_gamma.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "hypaskey/errors.hpp"
#include "hypaskey/quadrature.hpp"
#include "hypaskey/special_functions.hpp"

namespace hypaskey {

HypGammaParams::HypGammaParams(double b_value) : b(b_value) {
  if (!(b_value > 0.0) || !std::isfinite(b_value)) {
    throw DomainError("b must be a positive finite number");
  }
}

namespace {

std::string describe(Complex z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

// int_0^{y1} [sin(2yz) / (2 sinh(a y) sinh(c y)) - z / (a c y)] dy / y
Complex small_y_integral(double a, double c, Complex z, double y1) {
  constexpr int K = 24;
  const double p = a * c;
  // sinh(a y) sinh(c y) / (p y^2) in powers of y^2
  std::array<double, K> h{};
  std::array<double, K> fa{};
  std::array<double, K> fc{};
  double fact = 1.0;
  for (int k = 0; k < K; ++k) {
    if (k > 0) fact *= (2.0 * k) * (2.0 * k + 1.0);
    fa[k] = std::pow(a, 2 * k) / fact;
    fc[k] = std::pow(c, 2 * k) / fact;
  }
  for (int k = 0; k < K; ++k) {
    for (int i = 0; i <= k; ++i) h[k] += fa[i] * fc[k - i];
  }
  std::array<double, K> inv{};
  inv[0] = 1.0;
  for (int k = 1; k < K; ++k) {
    for (int j = 1; j <= k; ++j) inv[k] -= h[j] * inv[k - j];
  }
  // sin(2yz) / (2y) in powers of y^2
  std::array<Complex, K> s{};
  Complex term = z;
  for (int k = 0; k < K; ++k) {
    s[k] = term;
    term *= -(2.0 * z) * (2.0 * z) / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
  }
  Complex sum = 0.0;
  double ypow = y1;
  for (int k = 1; k < K; ++k) {
    Complex e = 0.0;
    for (int i = 0; i <= k; ++i) e += s[i] * inv[k - i];
    sum += e * ypow / (2.0 * k - 1.0);
    ypow *= y1 * y1;
  }
  return sum / p;
}

// Smallest U (grown geometrically) with envelope(U) / rate below target.
template <class Env>
double tail_cutoff(Env&& envelope, double rate, double start, double target, Complex z) {
  double U = std::max(start, 4.0 / rate);
  while (envelope(U) / rate > target) {
    U *= 1.25;
    if (U > 1e7) throw ToleranceError("s_b integral: tail bound not met for z = " + describe(z));
  }
  return U;
}

// i * int_0^inf [sin(2yz) / (2 sinh(a y) sinh(c y)) - z / (a c y)] dy / y
//
// a = 1/b, c = b gives ln s_b(z); a = 1, c = b^2 gives ln s_b(z / b).
Complex sb_integral(double a, double c, Complex z, double tol) {
  if (z == 0.0) return 0.0;
  // The integrand is odd in z.
  if (z.real() < 0.0) return -sb_integral(a, c, -z, tol);
  const double p = a * c;
  const double X = z.real();
  const double Y = z.imag();

  // On [0, y1] the integrand is an even power series in y; integrate it termwise.
  const double scale = std::max({a, c, std::abs(z), 1.0});
  const double y1 = 0.5 / scale;
  const Complex head = small_y_integral(a, c, z, y1);
  const double width = std::min(1.0 / std::max(a, c), kPi / (2.0 * std::abs(z)));

  if (X <= 2.0 * std::max({a, c, 1.0})) {
    const double rate = a + c - 2.0 * std::abs(Y);
    auto integrand = [&](double y) {
      // sin(2yz) e^{-(a+c)y} without forming either factor separately
      const Complex e1 = std::exp(2.0 * kI * y * z - (a + c) * y);
      const Complex e2 = std::exp(-2.0 * kI * y * z - (a + c) * y);
      const Complex kernel = 2.0 * ((e1 - e2) / (2.0 * kI)) / (std::expm1(-2.0 * a * y) * std::expm1(-2.0 * c * y));
      return (kernel - z / (p * y)) / y;
    };
    auto envelope = [&](double y) {
      return 2.0 * std::exp(-rate * y) / (-std::expm1(-2.0 * a * y) * -std::expm1(-2.0 * c * y)) / y;
    };
    const double U = tail_cutoff(envelope, rate, 1.0, tol * 1e-2, z);
    if ((U - y1) / width > 2e5) throw ToleranceError("s_b integral: too many panels for z = " + describe(z));
    // Near Re z = 0 the integrand is a small difference of two large terms.
    const double zp = std::abs(z) / p;
    auto magnitude = [zp](double y, Complex v) { return std::abs(v) + zp / (y * y); };
    const quad::PanelIntegral body =
        quad::integrate_adaptive_floor(integrand, magnitude, y1, U, width, tol, 1e-14);
    return kI * (head + body.value - z / (p * U));
  }

  // Large Re z: split sin(2yz) into exponentials and rotate each ray by +-pi/4 into
  // the half-plane where it decays. Poles sit on the imaginary axis, so rays
  // starting at y1 > 0 never cross them.
  const double theta = kPi / 4.0;
  auto piece = [&](int sign) {
    const Complex dir = std::exp(static_cast<double>(sign) * kI * theta);
    auto f = [&, sign, dir](double s) {
      const Complex y = y1 + s * dir;
      const Complex e = std::exp(static_cast<double>(sign) * 2.0 * kI * y * z - (a + c) * y);
      const Complex den = kI * y * expm1(-2.0 * a * y) * expm1(-2.0 * c * y);
      return static_cast<double>(sign) * e / den * dir;
    };
    const double rate = 2.0 * X * std::sin(theta) + (a + c + 2.0 * sign * Y) * std::cos(theta);
    auto envelope = [&, sign, dir](double s) {
      const Complex y = y1 + s * dir;
      const double re = (static_cast<double>(sign) * 2.0 * kI * y * z).real() - (a + c) * y.real();
      return std::exp(re) / (std::abs(y) * -std::expm1(-2.0 * a * y.real()) * -std::expm1(-2.0 * c * y.real()));
    };
    const double U = tail_cutoff(envelope, rate, 1.0, tol * 1e-2, z);
    return quad::integrate_adaptive(f, 0.0, U, width, tol / 2.0, 1e-14).value;
  };
  return kI * (head + piece(+1) + piece(-1) - z / (p * y1));
}

}  // namespace

Complex ln_sb(const HypGammaParams& p, Complex z, double tol) {
  if (std::abs(z.imag()) >= p.strip_half_width() - p.margin()) {
    throw StripError("ln_sb: |Im z| must be < Q/2 = " + std::to_string(p.strip_half_width()) +
                     " (z = " + describe(z) + ")");
  }
  return sb_integral(1.0 / p.b, p.b, z, tol);
}

Complex ln_sb_scaled(const HypGammaParams& p, Complex z, double tol) {
  const double half = 0.5 * (1.0 + p.b * p.b);
  if (std::abs(z.imag()) >= half - p.b * p.margin()) {
    throw StripError("ln_sb_scaled: |Im z| must be < (1 + b^2)/2 = " + std::to_string(half) +
                     " (z = " + describe(z) + ")");
  }
  return sb_integral(1.0, p.b * p.b, z, tol);
}

namespace {

// One step of s_b(z) = c(z) s_b(z - i h) (down) or s_b(z) = s_b(z + i h) / c(z + i h) (up),
// with c(w) = 2 cosh(pi k (w - i h / 2)) and h = k in {b, 1/b}.
struct ShiftFactor {
  Complex value;
  Complex derivative;
  int power = 1;  // +1 multiplies, -1 divides
};

// Shifts z into |Im z| <= 0.4 Q by the smaller of b and 1/b, recording the factors.
Complex walk_into_strip(const HypGammaParams& p, Complex z, std::vector<ShiftFactor>& factors) {
  const double k = std::min(p.b, 1.0 / p.b);
  const double band = 0.4 * p.Q();
  auto factor = [k](Complex w) {
    const Complex arg = kPi * k * (w - 0.5 * kI * k);
    return std::pair{2.0 * std::cosh(arg), 2.0 * kPi * k * std::sinh(arg)};
  };
  constexpr int kMaxSteps = 100000;
  for (int n = 0; std::abs(z.imag()) > band; ++n) {
    if (n > kMaxSteps) throw DomainError("ln_sb_continued: argument too far from the real axis");
    if (z.imag() > 0.0) {
      const auto [v, d] = factor(z);
      factors.push_back({v, d, +1});
      z -= kI * k;
    } else {
      z += kI * k;
      const auto [v, d] = factor(z);
      factors.push_back({v, d, -1});
    }
  }
  return z;
}

}  // namespace

Complex ln_sb_continued(const HypGammaParams& p, Complex z, double tol) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("ln_sb_continued: z must be finite");
  std::vector<ShiftFactor> factors;
  const Complex inner = walk_into_strip(p, z, factors);
  Complex value = ln_sb(p, inner, tol);
  for (const auto& f : factors) {
    if (std::abs(f.value) < 1e-13) {
      throw PoleError("ln_sb_continued: z = " + describe(z) + " is a zero or pole of s_b");
    }
    value += static_cast<double>(f.power) * log_principal(f.value);
  }
  return value;
}

Complex sb_derivative_at_zero(const HypGammaParams& p, int m, int l, double tol) {
  const auto [zero, pole] = lattice(p, m, l);
  if (zero.multiplicity != 1) {
    throw DomainError("sb_derivative_at_zero: z_{" + std::to_string(m) + "," + std::to_string(l) +
                      "} is not a simple zero");
  }
  std::vector<ShiftFactor> factors;
  const Complex inner = walk_into_strip(p, zero.location, factors);
  // Exactly one factor vanishes at a simple zero; the product rule keeps only its derivative.
  Complex result = std::exp(ln_sb(p, inner, tol));
  int vanishing = 0;
  for (const auto& f : factors) {
    const bool zero_factor = std::abs(f.value) < 1e-10;
    if (zero_factor) {
      if (f.power != 1) throw DomainError("sb_derivative_at_zero: unexpected pole factor");
      ++vanishing;
      result *= f.derivative;
    } else {
      result *= f.power > 0 ? f.value : 1.0 / f.value;
    }
  }
  if (vanishing != 1) throw DomainError("sb_derivative_at_zero: shift walk did not isolate the zero");
  return result;
}

Complex semiclassical_ln_sb(const HypGammaParams& p, Complex z, int N) {
  if (N < 0) throw DomainError("semiclassical_ln_sb: N must be nonnegative");
  if (std::abs(z.imag()) >= 0.5) throw StripError("semiclassical_ln_sb: |Im z| must be < 1/2");
  if (2 * N >= BernoulliTable::standard().size()) throw DomainError("semiclassical_ln_sb: N too large");
  const double b = p.b;
  const double b2 = b * b;
  const Complex x = -std::exp(2.0 * kPi * z);
  Complex value = 0.5 * kPi * kI * (z / b) * (z / b) + kPi * kI / 24.0 * (b2 + 1.0 / b2);
  const Complex step = kPi * kI * b2;
  const BernoulliTable& bern = BernoulliTable::standard();
  double factorial = 1.0;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) factorial *= (2.0 * n - 1.0) * (2.0 * n);
    const double coeff = (1.0 - std::pow(2.0, 2 * n - 1)) * bern[2 * n] / factorial;
    const Complex li = n == 0 ? dilog(x) : polylog_nonpos(2 * n - 2, x);
    value -= coeff * li * std::pow(step, 2 * n - 1);
  }
  return value;
}

std::pair<LatticePoint, LatticePoint> lattice(const HypGammaParams& p, int m, int l) {
  if (m < 0 || l < 0) throw DomainError("lattice: indices must be nonnegative");
  const double b = p.b;
  const double target = m * b + l / b;
  const double eps = 1e-12 * std::max(1.0, target);
  int count = 0;
  const int bound = std::max({kLatticeIndexBound, m, l});
  for (int mi = 0; mi <= bound; ++mi) {
    for (int li = 0; li <= bound; ++li) {
      if (std::abs(mi * b + li / b - target) <= eps) ++count;
    }
  }
  const Complex loc{0.0, 0.5 * p.Q() + target};
  LatticePoint zero{m, l, LatticeKind::zero, loc, count};
  LatticePoint pole{m, l, LatticeKind::pole, -loc, count};
  return {zero, pole};
}

}  // namespace hypaskey
