#pragma once

// Parameter sweeps and refinement studies built on simulate().

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heomesd/error.hpp"
#include "heomesd/simulation.hpp"

namespace heomesd {

enum class SweepAxis { Eta, Gamma, Beta };

/// "eta", "gamma", "beta"; anything else throws Error(Domain).
SweepAxis parse_sweep_axis(std::string_view name);
std::string_view sweep_axis_name(SweepAxis axis);

struct SweepSpec {
  SweepAxis axis = SweepAxis::Eta;
  double start = 0.4;
  double stop = 0.8;
  int points = 9;

  /// Throws Error(Domain) for fewer than 2 points, non-finite bounds, or a
  /// bound outside the axis' admissible range.
  void validate() const;
  /// Evenly spaced values, start and stop included.
  std::vector<double> values() const;
};

/// `params` with one bath parameter replaced.
SimulationParams with_axis_value(const SimulationParams& params, SweepAxis axis,
                                 double value);

struct SweepPoint {
  double value = 0.0;
  std::optional<double> death;
  std::optional<double> rebirth;
  std::size_t events = 0;
  /// Set when this point failed; the sweep carries on.
  std::optional<ErrorKind> failure;
  std::string message;
};

/// Each point is an independent simulate() call; rows come back in axis order.
std::vector<SweepPoint> run_sweep(const DensityMatrix& initial,
                                  const SimulationParams& params,
                                  const SweepSpec& spec);

enum class ConvergeAxis { TimeStep, Depth, Matsubara };

std::string_view converge_axis_name(ConvergeAxis axis);

struct ConvergeRow {
  ConvergeAxis axis;
  double coarse;
  double fine;
  /// max over samples of |C_coarse(t) - C_fine(t)|
  double max_abs_dev;
};

/// Runs `params` once, then once per refinement: dt -> dt/2 (with
/// sample_every doubled so the sample times coincide), L -> L+2, K -> K+1.
std::vector<ConvergeRow> run_converge(const DensityMatrix& initial,
                                      const SimulationParams& params);

/// Largest |C_a - C_b| over two trajectories sampled at the same times.
/// Throws Error(Structural) if the sample times differ.
double max_concurrence_deviation(const Trajectory& a, const Trajectory& b);

}  // namespace heomesd
