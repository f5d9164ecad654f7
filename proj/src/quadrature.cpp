#include "hypaskey/quadrature.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hypaskey::quad {

namespace {

GaussLegendre compute_rule(int n) {
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute the derivative at the converged root
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

template <class T>
T pairwise(const T* v, std::size_t n) {
  if (n <= 8) {
    T s{};
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise(v, h) + pairwise(v + h, n - h);
}

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre degree must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendre>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussLegendre>(compute_rule(n));
  return *slot;
}

Complex pairwise_sum(std::span<const Complex> values) {
  return pairwise(values.data(), values.size());
}

double pairwise_sum(std::span<const double> values) {
  return pairwise(values.data(), values.size());
}

std::vector<double> uniform_edges(double a, double b, double width) {
  const double len = b - a;
  const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil(len / width)));
  std::vector<double> edges(panels + 1);
  for (std::size_t i = 0; i <= panels; ++i) edges[i] = a + len * static_cast<double>(i) / panels;
  edges.back() = b;
  return edges;
}

void PanelGrid::node(std::size_t k, double& x, double& w) const {
  const GaussLegendre& rule = gauss_legendre(degree);
  const std::size_t p = k / degree;
  const std::size_t j = k % degree;
  const double half = 0.5 * (edges[p + 1] - edges[p]);
  const double mid = 0.5 * (edges[p + 1] + edges[p]);
  x = mid + half * rule.nodes[j];
  w = half * rule.weights[j];
}

namespace detail {

void parallel_for(std::size_t n, void (*body)(void*, std::size_t), void* ctx) {
  std::exception_ptr failure;
#ifdef _OPENMP
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < count; ++i) {
    try {
      body(ctx, static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(hypaskey_parallel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
#else
  for (std::size_t i = 0; i < n; ++i) body(ctx, i);
#endif
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

}  // namespace hypaskey::quad
