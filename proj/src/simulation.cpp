#include "heomesd/simulation.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "heomesd/error.hpp"

namespace heomesd {

void SimulationParams::validate() const {
  system.validate();
  bath.validate();
  hierarchy.validate();
  if (sample_every < 1) throw Error(ErrorKind::Domain, "sample_every must be >= 1");
  if (threads < 1) throw Error(ErrorKind::Domain, "threads must be >= 1");
  if (!(burn_in >= 0.0) || !std::isfinite(burn_in)) {
    throw Error(ErrorKind::Domain, "burn_in must be non-negative");
  }
}

Sample make_sample(double time, const ComplexMatrix4& rho) {
  const auto c = concurrence(DensityMatrix::unchecked(rho));
  Sample s;
  s.time = time;
  s.concurrence = c.concurrence;
  s.lambda_gap = c.lambda_gap;
  s.trace_error = std::abs(rho.trace() - 1.0);
  s.hermiticity_error = hermiticity_error(rho);
  return s;
}

SimulationResult simulate(const DensityMatrix& initial,
                          const SimulationParams& params) {
  params.validate();
  const HeomSystem model =
      make_system(params.system, params.bath, params.hierarchy, params.threads);

  SimulationResult result;

  // Keep the full hierarchy at the last sample with a definite gap sign; it
  // becomes a checkpoint as soon as the next definite sign differs.
  std::map<std::size_t, HierarchyState> checkpoints;
  HierarchyState last_definite;
  std::size_t last_definite_index = 0;
  int last_sign = 0;

  EvolveOptions options;
  options.sample_every = params.sample_every;
  options.burn_in = params.burn_in;
  options.preparation = params.preparation;
  options.observer = [&](std::size_t i, const HierarchyState& state) {
    const Sample s = make_sample(state.time(), state.physical());
    result.trajectory.push_back(s);
    const int sign = gap_sign(s.lambda_gap);
    if (sign == 0) return;
    if (last_sign != 0 && sign != last_sign) {
      checkpoints.emplace(last_definite_index, last_definite);
    }
    last_definite = state;
    last_definite_index = i;
    last_sign = sign;
  };

  auto traj = evolve(model, initial, params.hierarchy, options);
  result.rho = std::move(traj.rho);

  Rk4Integrator integrator(model);
  const double dt = params.hierarchy.dt;
  auto refine = [&](std::size_t left, double t) {
    const auto it = checkpoints.find(left);
    if (it == checkpoints.end()) {
      std::ostringstream ss;
      ss << "no checkpoint stored for sample " << left;
      throw Error(ErrorKind::Structural, ss.str());
    }
    HierarchyState probe = it->second;
    integrator.advance_to(probe, t, dt);
    return concurrence(DensityMatrix::unchecked(probe.physical())).lambda_gap;
  };
  result.transitions = detect_transitions(result.trajectory, refine);
  return result;
}

}  // namespace heomesd
