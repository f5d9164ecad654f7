#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypaskey/errors.hpp"
#include "hypaskey/special_functions.hpp"

using namespace hypaskey;

namespace {
bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }
}  // namespace

TEST_CASE("Bernoulli numbers from the recursion") {
  const BernoulliTable& t = BernoulliTable::standard();
  CHECK(t.exact(0) == Rational(1));
  CHECK(t.exact(1) == Rational(-1, 2));
  CHECK(t.exact(2) == Rational(1, 6));
  CHECK(t.exact(4) == Rational(-1, 30));
  CHECK(t.exact(12) == Rational(-691, 2730));
  CHECK(t.exact(20) == Rational(-174611, 330));
  for (int n = 3; n < t.size(); n += 2) CHECK(t.exact(n) == 0);
  CHECK(t[2] == doctest::Approx(1.0 / 6.0));
  CHECK_THROWS_AS(BernoulliTable(-1), DomainError);
}

TEST_CASE("dilog special values") {
  const double pi2 = kPi * kPi;
  const double ln2 = std::log(2.0);
  const double catalan = 0.915965594177219015054603514932;
  CHECK(near(dilog(0.0), 0.0, 1e-16));
  CHECK(near(dilog(-1.0), -pi2 / 12.0, 1e-15));
  CHECK(near(dilog(0.5), pi2 / 12.0 - 0.5 * ln2 * ln2, 1e-15));
  CHECK(near(dilog(kI), Complex(-pi2 / 48.0, catalan), 1e-15));
  // On the unit circle: Re Li2(e^{i t}) = pi^2/6 - t(2 pi - t)/4 and Im is Clausen's Cl2.
  const double t = kPi / 3.0;
  CHECK(near(dilog(std::polar(1.0, t)), Complex(pi2 / 6.0 - t * (2 * kPi - t) / 4.0, 1.0149416064096536250), 1e-14));
  CHECK(near(dilog(-3.0), Complex(-1.9393754207667089531, 0.0), 1e-14));
}

TEST_CASE("dilog cut") {
  CHECK_THROWS_AS(dilog(1.0), CutError);
  CHECK_THROWS_AS(dilog(2.5), CutError);
  CHECK_NOTHROW(dilog(Complex(2.5, 1e-12)));
  // Continuity across the cut from above and below differs by 2 pi i ln x.
  const Complex up = dilog(Complex(2.5, 1e-13));
  const Complex dn = dilog(Complex(2.5, -1e-13));
  CHECK(std::abs((up - dn) - Complex(0.0, 2.0 * kPi * std::log(2.5))) < 1e-9);
}

TEST_CASE("non-positive-order polylogarithms are rational") {
  for (Complex z : {Complex(0.3, 0.1), Complex(-2.0, 0.5), Complex(4.0, -3.0)}) {
    CHECK(near(polylog_nonpos(0, z), z / (1.0 - z), 1e-13));
    CHECK(near(polylog_nonpos(1, z), z / ((1.0 - z) * (1.0 - z)), 1e-13));
    CHECK(near(polylog_nonpos(2, z), z * (1.0 + z) / std::pow(1.0 - z, 3), 1e-13));
    CHECK(near(polylog_nonpos(3, z), z * (1.0 + 4.0 * z + z * z) / std::pow(1.0 - z, 4), 1e-12));
  }
  CHECK_THROWS_AS(polylog_nonpos(2, 1.0), PoleError);
}

TEST_CASE("principal arcsin") {
  CHECK(near(arcsin_principal(0.5), kPi / 6.0, 1e-15));
  CHECK(near(arcsin_principal(Complex(0.0, 1.0)), Complex(0.0, std::asinh(1.0)), 1e-15));
  CHECK_THROWS_AS(arcsin_principal(2.0), CutError);
  CHECK_THROWS_AS(arcsin_principal(-1.5), CutError);
}

TEST_CASE("sinh kernel integral against the polylogarithm side") {
  CHECK(near(sinh_kernel_integral(1, 0.0), Complex(0.0, -kPi), 1e-10));
  CHECK(near(sinh_kernel_integral(0, 0.0), 2.0 * (-kPi * kPi / 12.0) / (kPi * kI), 1e-10));
  const Complex x = -std::exp(0.2 * kPi);
  CHECK(near(sinh_kernel_integral(2, 0.1), 2.0 * polylog_nonpos(2, x) * std::pow(kPi * kI, 3), 1e-10));
  CHECK_THROWS_AS(sinh_kernel_integral(1, Complex(0.0, 0.5)), StripError);
}
