#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "hypaskey/complex.hpp"
#include "hypaskey/errors.hpp"

namespace hypaskey::quad {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule of degree n. The cache is guarded, so concurrent callers are safe.
const GaussLegendre& gauss_legendre(int n);

// Pairwise summation in a fixed tree order: the result depends only on the
// input sequence, never on how the values were produced.
Complex pairwise_sum(std::span<const Complex> values);
double pairwise_sum(std::span<const double> values);

enum class Execution { serial, parallel };

namespace detail {
void parallel_for(std::size_t n, void (*body)(void*, std::size_t), void* ctx);
}

/// out[i] = f(i). The parallel path splits indices across OpenMP threads; the
/// serial path is the reference. Both write the same values to the same slots.
template <class F>
void map_indices(std::size_t n, F&& f, std::span<Complex> out, Execution exec) {
  if (exec == Execution::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return;
  }
  using Fn = std::remove_reference_t<F>;
  struct Ctx {
    Fn* f;
    Complex* out;
  } ctx{&f, out.data()};
  detail::parallel_for(
      n,
      [](void* p, std::size_t i) {
        auto* c = static_cast<Ctx*>(p);
        c->out[i] = (*c->f)(i);
      },
      &ctx);
}

/// Composite rule: panel endpoints plus the degree used on every panel.
struct PanelGrid {
  std::vector<double> edges;
  int degree = 16;

  std::size_t size() const {
    return edges.size() < 2 ? 0 : (edges.size() - 1) * static_cast<std::size_t>(degree);
  }
  // Abscissa and weight of flat node index k.
  void node(std::size_t k, double& x, double& w) const;
};

/// Uniform panels of at most `width` covering [a, b].
std::vector<double> uniform_edges(double a, double b, double width);

/// Result of an adaptive panel integration.
struct PanelIntegral {
  Complex value;
  double abs_integral = 0.0;  // integral of |f| under the same rule
  long evaluations = 0;
};

/// Integrates f over [a, b] on panels of at most `width`; on every panel the
/// Gauss-Legendre degree doubles from `n0` until two consecutive degrees agree
/// within tol / (4 * panels), or within rel_floor times the panel's integral of |f|
/// when that is larger (the roundoff floor). Throws ToleranceError past `n_max`.
///
/// `magnitude(y, f(y))` sets the size the floor is measured against; pass the
/// size of the terms that cancel inside f when that exceeds |f|.
template <class F, class M>
PanelIntegral integrate_adaptive_floor(F&& f, M&& magnitude, double a, double b, double width,
                                       double tol, double rel_floor, int n0 = 8, int n_max = 512) {
  PanelIntegral result;
  if (!(b > a)) return result;
  const std::vector<double> edges = uniform_edges(a, b, width);
  const std::size_t panels = edges.size() - 1;
  const double panel_tol = tol / (4.0 * static_cast<double>(panels));
  std::vector<Complex> panel_values(panels);
  std::vector<double> panel_abs(panels);

  auto apply = [&](double lo, double hi, int n, double& abs_out) {
    const GaussLegendre& rule = gauss_legendre(n);
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    Complex s = 0.0;
    double sa = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = mid + half * rule.nodes[i];
      const Complex v = f(x);
      s += rule.weights[i] * v;
      sa += rule.weights[i] * magnitude(x, v);
    }
    result.evaluations += n;
    abs_out = sa * half;
    return s * half;
  };

  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = edges[p];
    const double hi = edges[p + 1];
    int n = n0;
    double abs_coarse = 0.0;
    Complex coarse = apply(lo, hi, n, abs_coarse);
    for (;;) {
      double abs_fine = 0.0;
      const Complex fine = apply(lo, hi, 2 * n, abs_fine);
      if (std::abs(fine - coarse) <= std::max(panel_tol, rel_floor * abs_fine)) {
        panel_values[p] = fine;
        panel_abs[p] = abs_fine;
        break;
      }
      n *= 2;
      if (2 * n > n_max) {
        throw ToleranceError("adaptive Gauss-Legendre did not converge on panel [" +
                             std::to_string(lo) + ", " + std::to_string(hi) + "]");
      }
      coarse = fine;
    }
  }
  result.value = pairwise_sum(panel_values);
  result.abs_integral = pairwise_sum(std::span<const double>(panel_abs));
  return result;
}

template <class F>
PanelIntegral integrate_adaptive(F&& f, double a, double b, double width, double tol,
                                 double rel_floor = 0.0, int n0 = 8, int n_max = 512) {
  return integrate_adaptive_floor(
      f, [](double, Complex v) { return std::abs(v); }, a, b, width, tol, rel_floor, n0, n_max);
}

}  // namespace hypaskey::quad
