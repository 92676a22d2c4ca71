#pragma once

#include <array>

#include "heomesd/qops.hpp"

namespace heomesd {

struct ConcurrenceResult {
  double concurrence = 0.0;  // max(0, lambda_gap)
  /// sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4) before clamping. Changes sign
  /// transversally at entanglement death and rebirth.
  double lambda_gap = 0.0;
  /// Eigenvalues of rho * rho_tilde, descending, tiny negatives clamped to 0.
  std::array<double, 4> lambdas{};
};

/// Eigenvalues of rho * rho_tilde may carry imaginary or negative parts up
/// to this size; anything larger is reported as NumericalDegradation.
inline constexpr double kEigenTolerance = 1e-8;

/// rho_tilde = (sigma_y x sigma_y) rho^* (sigma_y x sigma_y).
ComplexMatrix4 spin_flip(const DensityMatrix& rho);

/// Wootters concurrence.
ConcurrenceResult concurrence(const DensityMatrix& rho);

}  // namespace heomesd
