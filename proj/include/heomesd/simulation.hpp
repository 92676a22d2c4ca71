#pragma once

// One complete run: HEOM propagation, concurrence at every sample, and
// death/rebirth detection refined by re-integration from stored checkpoints.

#include <vector>

#include "heomesd/bath.hpp"
#include "heomesd/entanglement.hpp"
#include "heomesd/events.hpp"
#include "heomesd/hierarchy.hpp"
#include "heomesd/qops.hpp"

namespace heomesd {

struct SimulationParams {
  SystemParams system;
  BathParams bath;
  HierarchyConfig hierarchy;
  int sample_every = 10;
  int threads = 1;
  double burn_in = 0.0;
  ComplexMatrix4 preparation = 0.25 * ComplexMatrix4::identity();

  void validate() const;
};

struct SimulationResult {
  Trajectory trajectory;
  std::vector<ComplexMatrix4> rho;  // rho_0 at each sample
  TransitionList transitions;
};

/// Sample from rho_0: concurrence plus the trace and Hermiticity monitors.
Sample make_sample(double time, const ComplexMatrix4& rho);

SimulationResult simulate(const DensityMatrix& initial,
                          const SimulationParams& params);

}  // namespace heomesd
