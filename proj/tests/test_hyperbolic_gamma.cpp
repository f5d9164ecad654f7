#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypaskey/errors.hpp"
#include "hypaskey/hyperbolic_gamma.hpp"
#include "hypaskey/special_functions.hpp"

using namespace hypaskey;

namespace {

bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }
// Logs compared up to a multiple of 2 pi i.
bool near_log(Complex a, Complex b, double tol) { return std::abs(reduce_mod_2pi_i(a - b)) <= tol; }

// Closed form at b = 1 in terms of the dilogarithm.
Complex ln_s1_closed(Complex z) {
  if (z.imag() == 0.0) z += Complex(0.0, 1e-40);
  const Complex e = std::exp(2.0 * kPi * z);
  return -kI / (2.0 * kPi) * (dilog(e) + 2.0 * kPi * z * log_principal(1.0 - e)) + kI * kPi * z * z / 2.0 +
         kI * kPi / 12.0;
}

}  // namespace

TEST_CASE("ln s_b against high-precision quadrature") {
  const HypGammaParams p07(0.7);
  CHECK(near(ln_sb(p07, {0.3, 0.2}, 1e-14), {0.2686119065696652081591, -0.3281073546765952926762}, 1e-12));
  CHECK(near(ln_sb(p07, {-1.2, 0.5}, 1e-14), {1.887039496419756959812, 2.202017509169781573617}, 1e-12));
  const HypGammaParams p03(0.3);
  CHECK(near(ln_sb_scaled(p03, {0.2, 0.2}, 1e-14), {1.856970455437998464757, -1.282282182406784024039}, 1e-11));
  CHECK(near(ln_sb_scaled(p03, {0.0, 0.3}, 1e-14), {1.779718992374661203658, 0.0}, 1e-11));
  CHECK(near(ln_sb(HypGammaParams(1.0), {0.3, 0.1}, 1e-14),
             {0.127213620331508680336, -0.319739596971959461398}, 1e-12));
}

TEST_CASE("b = 1 closed form") {
  const HypGammaParams p(1.0);
  for (Complex z : {Complex(0.0, 0.2), Complex(0.4, -0.3), Complex(-0.7, 0.6), Complex(1.5, 0.1),
                    Complex(-3.0, -0.8), Complex(0.25, 0.0)}) {
    CAPTURE(z);
    CHECK(near_log(ln_sb(p, z, 1e-13), ln_s1_closed(z), 1e-11));
  }
}

TEST_CASE("structural identities") {
  for (double b : {0.45, 0.8, 1.3}) {
    CAPTURE(b);
    const HypGammaParams p(b);
    const HypGammaParams q(1.0 / b);
    CHECK(std::abs(ln_sb(p, 0.0)) < 1e-12);
    for (double x : {-2.5, -0.4, 0.9, 3.5}) CHECK(std::abs(ln_sb(p, x).real()) < 1e-11);
    for (Complex z : {Complex(0.3, 0.2), Complex(-1.1, -0.4), Complex(2.2, 0.35)}) {
      CAPTURE(z);
      CHECK(near_log(ln_sb(p, z) + ln_sb(p, -z), 0.0, 1e-11));
      CHECK(near_log(ln_sb(p, z), ln_sb(q, z), 1e-11));
    }
    // Functional equation with both arguments inside the strip.
    const Complex z(0.3, 0.05);
    for (double k : {b, 1.0 / b}) {
      if (std::abs(z.imag()) + k / 2 >= 0.5 * p.Q()) continue;
      const Complex lhs = ln_sb(p, z + kI * k / 2.0) - ln_sb(p, z - kI * k / 2.0);
      CHECK(near_log(lhs, std::log(2.0 * std::cosh(kPi * k * z)), 1e-10));
    }
  }
}

TEST_CASE("strip checks") {
  const HypGammaParams p(1.0);
  CHECK_THROWS_AS(ln_sb(p, {0.0, 1.0}), StripError);
  CHECK_THROWS_AS(ln_sb_scaled(HypGammaParams(0.5), {0.0, 0.7}), StripError);
  CHECK_THROWS_AS(HypGammaParams(0.0), DomainError);
  CHECK_THROWS_AS(HypGammaParams(-1.0), DomainError);
}

TEST_CASE("continuation beyond the strip") {
  const HypGammaParams p(0.8);
  // Inside the strip the continuation is the integral itself.
  CHECK(near_log(ln_sb_continued(p, {0.4, 0.3}), ln_sb(p, {0.4, 0.3}), 1e-11));
  // Outside it obeys the functional equation in both periods.
  for (Complex z : {Complex(0.3, 1.7), Complex(-0.6, -2.4), Complex(1.1, 3.3)}) {
    CAPTURE(z);
    for (double k : {p.b, 1.0 / p.b}) {
      const Complex lhs = ln_sb_continued(p, z + kI * k / 2.0) - ln_sb_continued(p, z - kI * k / 2.0);
      CHECK(near_log(lhs, log_principal(2.0 * std::cosh(kPi * k * z)), 1e-10));
    }
  }
  const auto [zero, pole] = lattice(p, 1, 2);
  CHECK_THROWS_AS(ln_sb_continued(p, zero.location), PoleError);
  CHECK_THROWS_AS(ln_sb_continued(p, pole.location), PoleError);
}

TEST_CASE("lattice points and multiplicities") {
  const HypGammaParams p(1.0);
  const auto [z00, p00] = lattice(p, 0, 0);
  CHECK(near(z00.location, Complex(0.0, 1.0), 1e-15));
  CHECK(near(p00.location, Complex(0.0, -1.0), 1e-15));
  CHECK(z00.multiplicity == 1);
  CHECK(lattice(p, 1, 0).first.multiplicity == 2);
  CHECK(lattice(p, 2, 1).first.multiplicity == 4);
  CHECK(lattice(HypGammaParams(0.5), 0, 1).first.multiplicity == 2);  // 1/b = 2b
  CHECK(lattice(HypGammaParams(std::sqrt(2.0)), 3, 2).first.multiplicity == 5);  // b^2 rational: 2m + l = 8
  CHECK(lattice(HypGammaParams(std::cbrt(2.0)), 3, 2).first.multiplicity == 1);
  CHECK_THROWS_AS(lattice(p, -1, 0), DomainError);
}

TEST_CASE("derivative at a simple zero") {
  for (double b : {0.6, 1.0, 1.7}) {
    CAPTURE(b);
    CHECK(near(sb_derivative_at_zero(HypGammaParams(b), 0, 0), Complex(0.0, 2.0 * kPi), 1e-9));
  }
  // Against a central difference of the continuation near z_{1,0}.
  const HypGammaParams p(0.7);
  const auto [zero, pole] = lattice(p, 1, 0);
  const double h = 1e-5;
  const Complex fd = (std::exp(ln_sb_continued(p, zero.location + h)) - std::exp(ln_sb_continued(p, zero.location - h))) /
                     (2.0 * h);
  CHECK(near(sb_derivative_at_zero(p, 1, 0), fd, 1e-6 * std::abs(fd)));
  CHECK_THROWS_AS(sb_derivative_at_zero(HypGammaParams(1.0), 1, 0), DomainError);
}

TEST_CASE("semiclassical expansion error falls at high order in b") {
  const Complex z(0.2, 0.1);
  std::vector<double> err;
  for (double b : {0.3, 0.2}) {
    const HypGammaParams p(b);
    err.push_back(std::abs(ln_sb_scaled(p, z, 1e-14) - semiclassical_ln_sb(p, z, 1)));
  }
  const double order = std::log(err[0] / err[1]) / std::log(0.3 / 0.2);
  CHECK(order > 5.0);
  CHECK_THROWS_AS(semiclassical_ln_sb(HypGammaParams(0.3), {0.0, 0.6}, 1), StripError);
}
