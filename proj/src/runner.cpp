#include "heomesd/runner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace heomesd {

SweepAxis parse_sweep_axis(std::string_view name) {
  if (name == "eta") return SweepAxis::Eta;
  if (name == "gamma") return SweepAxis::Gamma;
  if (name == "beta") return SweepAxis::Beta;
  throw Error(ErrorKind::Domain,
              "sweep axis must be eta, gamma or beta, got '" + std::string(name) + "'");
}

std::string_view sweep_axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Eta: return "eta";
    case SweepAxis::Gamma: return "gamma";
    case SweepAxis::Beta: return "beta";
  }
  return "?";
}

namespace {

void set_axis(BathParams& bath, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::Eta: bath.eta = value; break;
    case SweepAxis::Gamma: bath.gamma = value; break;
    case SweepAxis::Beta: bath.beta = value; break;
  }
}

}  // namespace

void SweepSpec::validate() const {
  if (points < 2) throw Error(ErrorKind::Domain, "a sweep needs at least 2 points");
  for (double bound : {start, stop}) {
    BathParams probe;
    set_axis(probe, axis, bound);
    try {
      probe.validate();
    } catch (const Error& e) {
      throw Error(ErrorKind::Domain, "sweep bound out of range: " + std::string(e.what()));
    }
  }
}

std::vector<double> SweepSpec::values() const {
  validate();
  std::vector<double> v(points);
  for (int i = 0; i < points; ++i) {
    v[i] = start + (stop - start) * static_cast<double>(i) / (points - 1);
  }
  v.back() = stop;
  return v;
}

SimulationParams with_axis_value(const SimulationParams& params, SweepAxis axis,
                                 double value) {
  SimulationParams p = params;
  set_axis(p.bath, axis, value);
  return p;
}

std::vector<SweepPoint> run_sweep(const DensityMatrix& initial,
                                  const SimulationParams& params,
                                  const SweepSpec& spec) {
  const auto values = spec.values();
  std::vector<SweepPoint> rows(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    SweepPoint& row = rows[i];
    row.value = values[i];
    try {
      const auto result = simulate(initial, with_axis_value(params, spec.axis, values[i]));
      const FirstPair pair = summarize_first_pair(result.transitions);
      row.death = pair.death;
      row.rebirth = pair.rebirth;
      row.events = result.transitions.size();
    } catch (const Error& e) {
      row.failure = e.kind();
      row.message = e.what();
    }
  }
  return rows;
}

std::string_view converge_axis_name(ConvergeAxis axis) {
  switch (axis) {
    case ConvergeAxis::TimeStep: return "dt";
    case ConvergeAxis::Depth: return "L";
    case ConvergeAxis::Matsubara: return "K";
  }
  return "?";
}

double max_concurrence_deviation(const Trajectory& a, const Trajectory& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::Structural, "trajectories have different sample counts");
  }
  double dev = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i].time - b[i].time) > 1e-9 * std::max(1.0, std::abs(a[i].time))) {
      std::ostringstream ss;
      ss << "sample " << i << " times differ (" << a[i].time << " vs " << b[i].time << ")";
      throw Error(ErrorKind::Structural, ss.str());
    }
    dev = std::max(dev, std::abs(a[i].concurrence - b[i].concurrence));
  }
  return dev;
}

std::vector<ConvergeRow> run_converge(const DensityMatrix& initial,
                                      const SimulationParams& params) {
  const auto coarse = simulate(initial, params);

  std::vector<ConvergeRow> rows;
  auto compare = [&](ConvergeAxis axis, double from, double to,
                     const SimulationParams& fine_params) {
    const auto fine = simulate(initial, fine_params);
    rows.push_back({axis, from, to,
                    max_concurrence_deviation(coarse.trajectory, fine.trajectory)});
  };

  SimulationParams p = params;
  p.hierarchy.dt = params.hierarchy.dt / 2.0;
  p.sample_every = params.sample_every * 2;
  compare(ConvergeAxis::TimeStep, params.hierarchy.dt, p.hierarchy.dt, p);

  p = params;
  p.hierarchy.depth = params.hierarchy.depth + 2;
  compare(ConvergeAxis::Depth, params.hierarchy.depth, p.hierarchy.depth, p);

  p = params;
  p.hierarchy.matsubara_order = params.hierarchy.matsubara_order + 1;
  compare(ConvergeAxis::Matsubara, params.hierarchy.matsubara_order,
          p.hierarchy.matsubara_order, p);
  return rows;
}

}  // namespace heomesd
