#pragma once

// Lorentzian-cutoff (Drude) bath: spectral density, Matsubara expansion of
// the correlation function, and the real counterterm that absorbs the
// truncated tail of the expansion.

#include <vector>

#include "heomesd/qops.hpp"

namespace heomesd {

struct BathParams {
  double eta = 0.6;    // coupling strength
  double gamma = 0.5;  // bath characteristic frequency
  double beta = 2.5;   // inverse temperature

  /// Throws Error(Domain) for eta < 0, gamma <= 0, beta <= 0.
  void validate() const;
};

/// J(w) = w eta gamma / (w^2 + gamma^2).
double spectral_density(double omega, const BathParams& params);

struct MatsubaraExpansion {
  int order = 0;                      // K
  std::vector<double> frequencies;    // gamma_0 .. gamma_K
  std::vector<Complex> coefficients;  // c_0 .. c_K
  double counterterm = 0.0;           // Delta_K
};

/// Singularity guards: |sin(beta gamma / 2)| and |gamma_k - gamma_0| below
/// this are rejected with Error(SingularParameter).
inline constexpr double kSingularTolerance = 1e-9;

/// Fills gamma_k, c_k (k = 0..K) and
///   Delta_K = (1/(beta gamma_0) - i/2) eta - sum_{k=0..K} c_k / gamma_k,
/// asserting that the imaginary part vanishes to 1e-12.
MatsubaraExpansion build_matsubara_expansion(const BathParams& params, int order);

/// Complex residue of the counterterm expression before it is reduced to a
/// real number. Exposed for the imaginary-part identity check.
Complex counterterm_residue(const BathParams& params, int order);

/// Explicit tail sum_{k > K} c_k / gamma_k: terms are added until they drop
/// below 1e-10, the rest is closed by Euler-Maclaurin. Independent route to
/// Delta_K.
double counterterm_tail(const BathParams& params, int order);

}  // namespace heomesd
