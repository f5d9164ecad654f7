#pragma once

#include <utility>

#include "hypaskey/complex.hpp"

namespace hypaskey {

struct HypGammaParams {
  double b = 1.0;

  explicit HypGammaParams(double b_value);

  double Q() const { return b + 1.0 / b; }
  double strip_half_width() const { return 0.5 * Q(); }
  // Boundary margin: |Im z| must stay below Q/2 - margin().
  double margin() const { return 1e-6 * Q(); }
};

enum class LatticeKind { zero, pole };

struct LatticePoint {
  int m = 0;
  int l = 0;
  LatticeKind kind = LatticeKind::zero;
  Complex location;
  int multiplicity = 1;
};

/// Largest index searched when counting lattice coincidences.
inline constexpr int kLatticeIndexBound = 64;

/// ln s_b(z) from the defining integral, |Im z| < Q/2.
Complex ln_sb(const HypGammaParams& p, Complex z, double tol = 1e-12);

/// ln s_b(z / b) from the rescaled integral, |Im z| < (1 + b^2) / 2.
Complex ln_sb_scaled(const HypGammaParams& p, Complex z, double tol = 1e-12);

/// ln s_b(z) anywhere off the zeros and poles, by shifting z into the strip with
/// s_b(z + ib/2) = 2 cosh(pi b z) s_b(z - ib/2). The branch of the log is not canonical.
Complex ln_sb_continued(const HypGammaParams& p, Complex z, double tol = 1e-12);

/// s_b'(z_{m,l}) at a simple zero; DomainError for a multiple zero.
Complex sb_derivative_at_zero(const HypGammaParams& p, int m, int l, double tol = 1e-12);

/// Small-b expansion of ln s_b(z / b) through order N.
Complex semiclassical_ln_sb(const HypGammaParams& p, Complex z, int N);

/// Zero z_{m,l} and pole p_{m,l} with their common multiplicity.
std::pair<LatticePoint, LatticePoint> lattice(const HypGammaParams& p, int m, int l);

}  // namespace hypaskey
