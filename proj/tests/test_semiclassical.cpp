#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypaskey/errors.hpp"
#include "hypaskey/semiclassical.hpp"

using namespace hypaskey;

namespace {
bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }
bool near_log(Complex a, Complex b, double tol) { return std::abs(reduce_mod_2pi_i(a - b)) <= tol; }
}  // namespace

TEST_CASE("M saddle at a symmetric point") {
  const SaddleData s = saddle_M(0.0, Complex(0.0, 0.25));
  CHECK(near(s.t0, Complex(0.0, -0.25), 1e-15));
}

TEST_CASE("M saddle data is consistent with the phase") {
  for (double zeta : {-0.4, 0.0, 0.1, 0.7}) {
    for (Complex omega : {Complex(0.0, 0.1), Complex(0.3, 0.25), Complex(-0.5, 0.4)}) {
      CAPTURE(zeta);
      CAPTURE(omega);
      const SaddleData s = saddle_M(zeta, omega);
      REQUIRE(s.t0.imag() < 0.0);
      REQUIRE(s.t0.imag() > -0.5);
      CHECK(std::abs(fp_M(s.t0, zeta, omega)) < 1e-12);
      CHECK(near_log(f_M_phase(s.t0, zeta, omega), s.f_at_t0, 1e-11));
      CHECK(near(fpp_M(s.t0, zeta), s.fpp_at_t0, 1e-11 * std::abs(s.fpp_at_t0)));
      CHECK(near(prefactor_M_unsimplified(zeta, omega), s.prefactor, 1e-12));
      CHECK(newton_step_M(zeta, omega) < 1e-12);
      // f' and f'' against central differences of the phase.
      const double h = 1e-5;
      const Complex t = s.t0 + 0.1;
      const Complex fd1 = (f_M_phase(t + h, zeta, omega) - f_M_phase(t - h, zeta, omega)) / (2 * h);
      CHECK(near(fd1, fp_M(t, zeta, omega), 1e-8));
      const Complex fd2 = (fp_M(t + h, zeta, omega) - fp_M(t - h, zeta, omega)) / (2 * h);
      CHECK(near(fd2, fpp_M(t, zeta), 1e-7));
    }
  }
}

TEST_CASE("M gradients against differences of the closed form") {
  const double h = 1e-5;
  for (auto [zeta, omega] : {std::pair{0.1, Complex(0.1, 0.25)}, std::pair{-0.3, Complex(-0.2, 0.15)}}) {
    const Complex dz = (f_M_closed(zeta + h, omega) - f_M_closed(zeta - h, omega)) / (2 * h);
    const Complex dw = (f_M_closed(zeta, omega + h) - f_M_closed(zeta, omega - h)) / (2 * h);
    CHECK(near(dz, dfM_dzeta(zeta, omega), 1e-8));
    CHECK(near(dw, dfM_domega(zeta, omega), 1e-8));
  }
}

TEST_CASE("M regime") {
  CHECK_THROWS_AS(saddle_M(0.0, Complex(0.0, 0.5)), DomainError);
  CHECK_THROWS_AS(saddle_M(0.0, Complex(0.0, -0.1)), DomainError);
  CHECK_THROWS_AS(f_M_phase(Complex(0.0, 0.1), 0.0, Complex(0.0, 0.2)), StripError);
  CHECK_THROWS_AS(asym_M(0.0, 0.0, Complex(0.0, 0.2)), DomainError);
}

TEST_CASE("Q saddle at the origin") {
  const SaddleData s = saddle_Q(0.0, 0.0);
  CHECK(near(s.t0, Complex(std::log(2.0) / (4.0 * kPi), -0.375), 1e-15));
  CHECK(near(s.prefactor, std::exp(kI * kPi / 4.0) / std::sqrt(2.0), 1e-15));
}

TEST_CASE("Q saddle data is consistent with the phase") {
  for (auto [sigma, mu] : {std::pair{0.0, 0.0}, std::pair{0.05, 0.2}, std::pair{-0.1, -0.1}, std::pair{0.2, 0.4}}) {
    CAPTURE(sigma);
    CAPTURE(mu);
    const SaddleData s = saddle_Q(sigma, mu);
    REQUIRE(s.t0.imag() < -0.25);
    REQUIRE(s.t0.imag() > -0.5);
    CHECK(std::abs(fp_Q(s.t0, sigma, mu)) < 1e-12);
    CHECK(near_log(f_Q_phase(s.t0, sigma, mu), s.f_at_t0, 1e-11));
    CHECK(near(fpp_Q(s.t0, sigma), s.fpp_at_t0, 1e-11 * std::abs(s.fpp_at_t0)));
    CHECK(near(prefactor_Q_unsimplified(sigma, mu), s.prefactor, 1e-12));
    CHECK(newton_step_Q(sigma, mu) < 1e-12);
  }
}

TEST_CASE("Q regime") {
  CHECK(regime_discriminant(0.0, 0.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(saddle_Q(0.3, -0.5), RegimeError);
  CHECK_THROWS_AS(f_Q_closed(0.15, -0.1), RegimeError);
  CHECK_NOTHROW(f_Q_closed(0.1, -0.1));
}
