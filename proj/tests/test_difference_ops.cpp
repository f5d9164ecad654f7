#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypaskey/difference_ops.hpp"
#include "hypaskey/errors.hpp"

using namespace hypaskey;

namespace {
EvalConfig cfg() {
  EvalConfig c;
  c.tol = 1e-10;
  c.sb_tol = 1e-12;
  return c;
}
}  // namespace

TEST_CASE("shift evaluator") {
  MFunction f = [](Complex z, Complex w) { return z + 10.0 * w; };
  const ShiftEvaluator sz{f, ShiftDirection::zeta, Complex(0.0, 1.0)};
  const ShiftEvaluator sw{f, ShiftDirection::omega, Complex(0.0, 1.0)};
  CHECK(sz(1.0, 2.0) == Complex(21.0, 1.0));
  CHECK(sw(1.0, 2.0) == Complex(21.0, 10.0));
  CHECK(std::string(to_string(ShiftVariant::b)) != to_string(ShiftVariant::inv_b));
}

TEST_CASE("admissibility") {
  for (double b : {0.9, 1.0, 1.1}) {
    CAPTURE(b);
    for (auto v : {ShiftVariant::b, ShiftVariant::inv_b}) {
      CHECK_FALSE(inadmissible_D_M(b, 0.1, Complex(0.0, 0.3), v).has_value());
      CHECK(inadmissible_Dtilde_M(b, 0.1, Complex(0.0, 0.3), v).has_value());
      CHECK_FALSE(inadmissible_Dtilde_M(b, Complex(0.1, 0.5), Complex(0.0, -0.2), v).has_value());
    }
  }
  CHECK(inadmissible_D_M(1.0, Complex(0.1, -0.5), Complex(0.0, 0.3), ShiftVariant::b).has_value());
}

TEST_CASE("M cache memoizes") {
  MCache cache(1.0, cfg());
  const Complex a = cache(0.1, Complex(0.0, 0.3));
  const Complex b = cache(0.1, Complex(0.0, 0.3));
  CHECK(a == b);
  CHECK(cache.size() == 1);
  CHECK(cache.b() == 1.0);
}

TEST_CASE("zeta difference equations hold") {
  MCache cache(1.0, cfg());
  for (auto v : {ShiftVariant::b, ShiftVariant::inv_b}) {
    const auto r = residual_D_M(1.0, Complex(0.1, 0.5), Complex(0.0, -0.2), v, cache.function());
    CHECK(r.relative < 1e-8);
  }
  MCache c9(0.9, cfg());
  const auto r = residual_D_M(0.9, 0.1, Complex(0.0, 0.3), ShiftVariant::inv_b, c9.function());
  CHECK(r.relative < 1e-8);
}

TEST_CASE("omega difference equations") {
  MCache cache(1.1, cfg());
  const Complex zeta(0.1, 0.5);
  const Complex omega(0.0, -0.2);
  CHECK(residual_Dtilde_M(1.1, zeta, omega, ShiftVariant::b, cache.function()).relative < 1e-8);
  // The k = 1/b equation holds with e^{-2 pi zeta / b} on the right, not with e^{+2 pi zeta / b}.
  CHECK(residual_Dtilde_M(1.1, zeta, omega, ShiftVariant::inv_b, cache.function(), TildeSign::minus).relative <
        1e-8);
  CHECK(residual_Dtilde_M(1.1, zeta, omega, ShiftVariant::inv_b, cache.function(), TildeSign::plus).relative >
        0.1);
}

TEST_CASE("semiclassical limit relations") {
  for (const auto& r : semiclassical_limit_check(0.1, Complex(0.1, 0.25))) {
    CAPTURE(r.check);
    CHECK(r.passed);
  }
}
