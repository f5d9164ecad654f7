#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypaskey/complex.hpp"

namespace hypaskey {

using Rational = boost::multiprecision::cpp_rational;

/// Exact Bernoulli numbers B_0..B_n with B_1 = -1/2.
class BernoulliTable {
 public:
  explicit BernoulliTable(int n_max);

  int size() const { return static_cast<int>(values_.size()); }
  const Rational& exact(int n) const { return values_.at(n); }
  double operator[](int n) const;

  /// Shared table through B_64, built once.
  static const BernoulliTable& standard();

 private:
  std::vector<Rational> values_;
};

/// Principal dilogarithm, cut along [1, +inf). Throws CutError on the cut.
Complex dilog(Complex z);

/// Li_{-k}(z) as a rational function of z. Throws PoleError at z = 1.
Complex polylog_nonpos(int k, Complex z);

/// Principal arcsin; throws CutError for real |z| > 1.
Complex arcsin_principal(Complex z);

/// Contour integral of e^{-2ixz} x^{2n-2} / sinh(x) along the real line,
/// indented above x = 0 by a semicircle of radius 1. Requires |Im z| < 1/2.
Complex sinh_kernel_integral(int n, Complex z);

}  // namespace hypaskey
