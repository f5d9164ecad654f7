#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace hypaskey {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

// Maps a signed zero imaginary part to +0 so that values on the negative real
// axis take the Im ln z = +pi side of the cut.
inline Complex canonical(Complex z) {
  return {z.real(), z.imag() == 0.0 ? 0.0 : z.imag()};
}

/// Principal logarithm with Im ln z in (-pi, pi].
inline Complex log_principal(Complex z) { return std::log(canonical(z)); }

/// Principal square root, z^{1/2} = exp(ln z / 2).
inline Complex sqrt_principal(Complex z) { return std::sqrt(canonical(z)); }

/// Principal power z^a = exp(a ln z).
inline Complex pow_principal(Complex z, Complex a) {
  return std::exp(a * log_principal(z));
}

// e^z - 1 without cancellation for small |z|.
inline Complex expm1(Complex z) {
  const double s = std::sin(0.5 * z.imag());
  return {std::expm1(z.real()) * std::cos(z.imag()) - 2.0 * s * s, std::exp(z.real()) * std::sin(z.imag())};
}

inline bool is_real(Complex z) { return z.imag() == 0.0; }

/// Adds the multiple of 2 pi i that brings Im z into (-pi, pi].
inline Complex reduce_mod_2pi_i(Complex z) {
  double im = std::remainder(z.imag(), 2.0 * kPi);
  if (im <= -kPi) im += 2.0 * kPi;
  return {z.real(), im};
}

}  // namespace hypaskey
