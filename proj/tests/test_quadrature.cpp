#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hypaskey/errors.hpp"
#include "hypaskey/quadrature.hpp"

using namespace hypaskey;

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
  for (int n : {2, 5, 16, 40}) {
    const auto& rule = quad::gauss_legendre(n);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
    for (int k = 0; k < 2 * n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], k);
      const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
      CHECK(s == doctest::Approx(exact).epsilon(1e-13));
    }
  }
}

TEST_CASE("adaptive panels reproduce elementary integrals") {
  auto f = [](double x) { return Complex(std::exp(-x), std::sin(x)); };
  const auto r = quad::integrate_adaptive(f, 0.0, 10.0, 1.0, 1e-13);
  CHECK(std::abs(r.value - Complex(1.0 - std::exp(-10.0), 1.0 - std::cos(10.0))) < 1e-13);
  CHECK(r.abs_integral > 0.0);
  CHECK(r.evaluations > 0);
}

TEST_CASE("adaptive panels give up on a singular integrand") {
  auto f = [](double x) { return Complex(1.0 / std::sqrt(x), 0.0); };
  CHECK_THROWS_AS(quad::integrate_adaptive(f, 0.0, 1.0, 1.0, 1e-14, 0.0, 8, 64), ToleranceError);
}

TEST_CASE("the cancellation floor accepts roundoff-limited panels") {
  // f = (big + tiny) - big: only the floor measured against `big` can accept it.
  const double big = 1e6;
  auto f = [big](double x) { return Complex((big + std::cos(x)) - big, 0.0); };
  auto mag = [big](double, Complex v) { return std::abs(v) + big; };
  const auto r = quad::integrate_adaptive_floor(f, mag, 0.0, 1.0, 1.0, 1e-20, 1e-14);
  CHECK(std::abs(r.value.real() - std::sin(1.0)) < 1e-8);
}

TEST_CASE("pairwise summation is accurate and order-fixed") {
  std::vector<double> v(100000, 0.1);
  CHECK(quad::pairwise_sum(std::span<const double>(v)) == doctest::Approx(10000.0).epsilon(1e-14));
  std::vector<Complex> c(1000, Complex(1.0, -1.0));
  CHECK(std::abs(quad::pairwise_sum(c) - Complex(1000.0, -1000.0)) < 1e-10);
}

TEST_CASE("parallel and serial node maps agree bit for bit") {
  const std::size_t n = 5000;
  auto f = [](std::size_t k) { return std::exp(Complex(0.001 * k, std::sin(0.37 * k))); };
  std::vector<Complex> a(n), b(n);
  quad::map_indices(n, f, a, quad::Execution::parallel);
  quad::map_indices(n, f, b, quad::Execution::serial);
  for (std::size_t k = 0; k < n; ++k) REQUIRE(a[k] == b[k]);
  CHECK(quad::pairwise_sum(a) == quad::pairwise_sum(b));
}

TEST_CASE("exceptions inside the parallel map reach the caller") {
  std::vector<Complex> out(100);
  auto f = [](std::size_t k) -> Complex {
    if (k == 57) throw DomainError("boom");
    return 1.0;
  };
  CHECK_THROWS_AS(quad::map_indices(100, f, out, quad::Execution::parallel), DomainError);
}

TEST_CASE("uniform edges cover the interval") {
  const auto e = quad::uniform_edges(0.0, 1.05, 0.25);
  REQUIRE(e.size() == 6);
  CHECK(e.front() == 0.0);
  CHECK(e.back() == 1.05);
}
