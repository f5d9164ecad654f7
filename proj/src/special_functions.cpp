#include "hypaskey/special_functions.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hypaskey/errors.hpp"
#include "hypaskey/quadrature.hpp"

namespace hypaskey {

BernoulliTable::BernoulliTable(int n_max) {
  if (n_max < 0) throw DomainError("Bernoulli table size must be nonnegative");
  values_.resize(n_max + 1);
  values_[0] = 1;
  // sum_{k=0}^{n} C(n+1, k) B_k = 0
  for (int n = 1; n <= n_max; ++n) {
    Rational acc = 0;
    Rational binom = 1;  // C(n+1, 0)
    for (int k = 0; k < n; ++k) {
      acc += binom * values_[k];
      binom = binom * (n + 1 - k) / (k + 1);
    }
    values_[n] = -acc / (n + 1);
  }
}

double BernoulliTable::operator[](int n) const { return values_.at(n).convert_to<double>(); }

const BernoulliTable& BernoulliTable::standard() {
  static const BernoulliTable table(64);
  return table;
}

namespace {

constexpr double kPi2Over6 = kPi * kPi / 6.0;

Complex dilog_series(Complex w) {
  Complex term = w;
  Complex sum = 0.0;
  for (int k = 1; k < 200; ++k) {
    const Complex add = term / (static_cast<double>(k) * k);
    sum += add;
    if (std::abs(add) <= 1e-17 * std::abs(sum)) break;
    term *= w;
  }
  return sum;
}

// Li2(w) = sum_n B_n u^{n+1} / (n+1)!, u = -ln(1 - w); converges for |u| < 2 pi.
Complex dilog_bernoulli(Complex w) {
  static const std::array<double, 40> coeff = [] {
    std::array<double, 40> c{};
    const BernoulliTable& b = BernoulliTable::standard();
    Rational fact = 1;
    for (int n = 0; n < 40; ++n) {
      fact *= (n + 1);
      c[n] = Rational(b.exact(n) / fact).convert_to<double>();
    }
    return c;
  }();
  const Complex u = -std::log(1.0 - w);
  const Complex u2 = u * u;
  Complex sum = u + coeff[1] * u2;
  Complex power = u;
  for (int n = 2; n < 40; n += 2) {
    power *= u2;
    const Complex add = coeff[n] * power;
    sum += add;
    if (std::abs(add) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// Mapping used by dilog:
//   |z| > 1           inversion   Li2(z) = -pi^2/6 - ln^2(-z)/2 - Li2(1/z)
//   |w| <= 1, Re w > 1/2   reflection  Li2(w) = pi^2/6 - ln w ln(1-w) - Li2(1-w)
//   |w| <= 1/2        power series
//   otherwise         Bernoulli series in -ln(1-w)
Complex dilog_unit_disk(Complex w) {
  if (w.real() > 0.5) {
    const Complex v = 1.0 - w;
    const Complex rest = std::abs(v) <= 0.5 ? dilog_series(v) : dilog_bernoulli(v);
    return kPi2Over6 - std::log(w) * std::log(v) - rest;
  }
  if (std::abs(w) <= 0.5) return dilog_series(w);
  return dilog_bernoulli(w);
}

}  // namespace

Complex dilog(Complex z) {
  z = canonical(z);
  if (is_real(z) && z.real() >= 1.0) {
    throw CutError("dilog: argument " + std::to_string(z.real()) + " lies on the cut [1, inf)");
  }
  if (z == 0.0) return 0.0;
  if (std::abs(z) > 1.0) {
    const Complex l = log_principal(-z);
    return -kPi2Over6 - 0.5 * l * l - dilog_unit_disk(canonical(1.0 / z));
  }
  return dilog_unit_disk(z);
}

Complex polylog_nonpos(int k, Complex z) {
  if (k < 0) throw DomainError("polylog_nonpos: order index must be nonnegative");
  if (z == 1.0) throw PoleError("polylog_nonpos: pole at z = 1");
  if (k >= 1 && std::abs(z) > 1.0) {
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;
    return sign * polylog_nonpos(k, 1.0 / z);
  }
  // Li_{-k}(z) = P_k(z) / (1 - z)^{k+1}, P_0 = z, P_{j+1} = z [P_j' (1 - z) + (j + 1) P_j]
  std::vector<double> p{0.0, 1.0};
  for (int j = 0; j < k; ++j) {
    const std::size_t deg = p.size() - 1;
    std::vector<double> next(deg + 2, 0.0);
    for (std::size_t i = 0; i <= deg; ++i) {
      const double c = p[i];
      if (c == 0.0) continue;
      // z * (j+1) c z^i
      next[i + 1] += (j + 1) * c;
      if (i >= 1) {
        // z * i c z^{i-1} (1 - z)
        next[i] += static_cast<double>(i) * c;
        next[i + 1] -= static_cast<double>(i) * c;
      }
    }
    p = std::move(next);
  }
  Complex num = 0.0;
  for (std::size_t i = p.size(); i-- > 0;) num = num * z + p[i];
  return num / std::pow(1.0 - z, k + 1);
}

Complex arcsin_principal(Complex z) {
  z = canonical(z);
  if (is_real(z) && std::abs(z.real()) > 1.0) {
    throw CutError("arcsin: argument " + std::to_string(z.real()) + " lies on a branch cut");
  }
  return std::asin(z);
}

Complex sinh_kernel_integral(int n, Complex z) {
  if (n < 0) throw DomainError("sinh_kernel_integral: n must be nonnegative");
  if (std::abs(z.imag()) >= 0.5) throw StripError("sinh_kernel_integral: |Im z| must be < 1/2");
  constexpr double r = 1.0;
  const int power = 2 * n - 2;

  auto along_line = [&](Complex x) {
    return std::exp(-2.0 * kI * x * z) * std::pow(x, power) / std::sinh(x);
  };
  // Upper semicircle x = r e^{i theta}, traversed from theta = pi to 0.
  auto arc = [&](double theta) {
    const Complex x = r * std::exp(kI * theta);
    return -along_line(x) * kI * x;
  };
  const Complex arc_part = quad::integrate_adaptive(arc, 0.0, kPi, kPi / 4.0, 1e-13).value;

  // x and -x combine into -2i sin(2xz) x^{2n-2} / sinh x on [r, inf).
  auto folded = [&](double x) {
    const Complex s = (std::exp(2.0 * kI * x * z - x) - std::exp(-2.0 * kI * x * z - x)) / (2.0 * kI);
    return -2.0 * kI * s * std::pow(x, power) * 2.0 / (1.0 - std::exp(-2.0 * x));
  };
  const quad::GaussLegendre& rule = quad::gauss_legendre(40);
  std::vector<Complex> panels;
  double peak = 0.0;
  int quiet = 0;
  for (double lo = r; quiet < 2; lo += kPi) {
    if (panels.size() > 100000) throw ToleranceError("sinh_kernel_integral: tail did not decay");
    const double hi = lo + kPi;
    Complex s = 0.0;
    double panel_max = 0.0;
    for (int i = 0; i < 40; ++i) {
      const Complex v = folded(0.5 * (lo + hi) + 0.5 * (hi - lo) * rule.nodes[i]);
      panel_max = std::max(panel_max, std::abs(v));
      s += rule.weights[i] * v;
    }
    panels.push_back(0.5 * (hi - lo) * s);
    peak = std::max(peak, panel_max);
    quiet = panel_max <= 1e-18 * peak ? quiet + 1 : 0;
  }
  return arc_part + quad::pairwise_sum(panels);
}

}  // namespace hypaskey
