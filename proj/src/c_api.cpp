#include "heomesd/heomesd.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "heomesd/entanglement.hpp"
#include "heomesd/error.hpp"
#include "heomesd/presets.hpp"
#include "heomesd/runner.hpp"
#include "heomesd/simulation.hpp"

using namespace heomesd;

struct heom_run {
  SimulationResult result;
};

struct heom_sweep {
  std::vector<SweepPoint> points;
};

struct heom_hierarchy {
  HeomSystem system;
};

namespace {

thread_local std::string last_error;

heom_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return HEOM_ERR_DOMAIN;
    case ErrorKind::SingularParameter: return HEOM_ERR_SINGULAR;
    case ErrorKind::Structural: return HEOM_ERR_STRUCTURAL;
    case ErrorKind::Divergence: return HEOM_ERR_DIVERGENCE;
    case ErrorKind::Accuracy: return HEOM_ERR_ACCURACY;
    case ErrorKind::NumericalDegradation: return HEOM_ERR_DEGRADED;
    case ErrorKind::InsufficientData: return HEOM_ERR_INSUFFICIENT_DATA;
    case ErrorKind::InvalidState: return HEOM_ERR_INVALID_STATE;
    case ErrorKind::Io: return HEOM_ERR_IO;
  }
  return HEOM_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
heom_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return HEOM_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HEOM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HEOM_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorKind::Domain, std::string(what) + " is NULL");
}

SimulationParams to_params(const heom_params* p) {
  require(p, "params");
  SimulationParams s;
  s.system.epsilon = p->epsilon;
  s.system.zeta = p->zeta;
  s.bath.eta = p->eta;
  s.bath.gamma = p->gamma;
  s.bath.beta = p->beta;
  s.hierarchy.matsubara_order = p->matsubara;
  s.hierarchy.depth = p->depth;
  s.hierarchy.dt = p->dt;
  s.hierarchy.t_final = p->t_final;
  s.sample_every = p->sample_every;
  s.threads = p->threads;
  s.burn_in = p->burn_in;
  return s;
}

ComplexMatrix4 to_matrix(const heom_complex* rho) {
  require(rho, "density matrix");
  ComplexMatrix4 m;
  for (int j = 0; j < 16; ++j) m.data()[j] = {rho[j].re, rho[j].im};
  return m;
}

void from_matrix(const ComplexMatrix4& m, heom_complex* rho) {
  require(rho, "output matrix");
  for (int j = 0; j < 16; ++j) rho[j] = {m.data()[j].real(), m.data()[j].imag()};
}

void check_index(std::size_t index, std::size_t size) {
  if (index >= size) {
    throw Error(ErrorKind::Domain, "index " + std::to_string(index) + " out of range (size " +
                                       std::to_string(size) + ")");
  }
}

}  // namespace

extern "C" {

const char* heom_version(void) { return "0.1.0"; }

const char* heom_status_string(heom_status status) {
  switch (status) {
    case HEOM_OK: return "ok";
    case HEOM_ERR_DOMAIN: return "domain error";
    case HEOM_ERR_SINGULAR: return "singular parameter";
    case HEOM_ERR_STRUCTURAL: return "structural error";
    case HEOM_ERR_DIVERGENCE: return "divergence";
    case HEOM_ERR_ACCURACY: return "accuracy error";
    case HEOM_ERR_DEGRADED: return "numerical degradation";
    case HEOM_ERR_INSUFFICIENT_DATA: return "insufficient data";
    case HEOM_ERR_INVALID_STATE: return "invalid state";
    case HEOM_ERR_IO: return "i/o error";
    case HEOM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* heom_last_error(void) { return last_error.c_str(); }

void heom_params_default(heom_params* params) {
  if (params == nullptr) return;
  const SimulationParams d;
  params->epsilon = d.system.epsilon;
  params->zeta = d.system.zeta;
  params->eta = d.bath.eta;
  params->gamma = d.bath.gamma;
  params->beta = d.bath.beta;
  params->matsubara = d.hierarchy.matsubara_order;
  params->depth = d.hierarchy.depth;
  params->dt = d.hierarchy.dt;
  params->t_final = d.hierarchy.t_final;
  params->sample_every = d.sample_every;
  params->threads = d.threads;
  params->burn_in = d.burn_in;
}

heom_status heom_params_validate(const heom_params* params) {
  return guarded([&] {
    const SimulationParams p = to_params(params);
    p.validate();
    // also catches poles of the expansion
    build_matsubara_expansion(p.bath, p.hierarchy.matsubara_order);
  });
}

heom_status heom_state_preset(const char* name, heom_complex rho[16]) {
  return guarded([&] {
    require(name, "name");
    from_matrix(preset_initial_state(name).matrix(), rho);
  });
}

heom_status heom_concurrence(const heom_complex rho[16], double* concurrence_out,
                             double* lambda_gap) {
  return guarded([&] {
    const auto c = concurrence(DensityMatrix(to_matrix(rho)));
    if (concurrence_out) *concurrence_out = c.concurrence;
    if (lambda_gap) *lambda_gap = c.lambda_gap;
  });
}

heom_status heom_counterterm(double eta, double gamma, double beta, int matsubara,
                             double* delta) {
  return guarded([&] {
    require(delta, "delta");
    *delta = build_matsubara_expansion({eta, gamma, beta}, matsubara).counterterm;
  });
}

heom_status heom_run_create(const heom_params* params, const heom_complex rho0[16],
                            heom_run** run) {
  return guarded([&] {
    require(run, "run");
    *run = nullptr;
    const DensityMatrix initial(to_matrix(rho0));
    *run = new heom_run{simulate(initial, to_params(params))};
  });
}

void heom_run_destroy(heom_run* run) { delete run; }

size_t heom_run_sample_count(const heom_run* run) {
  return run ? run->result.trajectory.size() : 0;
}

heom_status heom_run_sample(const heom_run* run, size_t index, heom_sample* sample) {
  return guarded([&] {
    require(run, "run");
    require(sample, "sample");
    check_index(index, run->result.trajectory.size());
    const Sample& s = run->result.trajectory[index];
    *sample = {s.time, s.concurrence, s.lambda_gap, s.trace_error, s.hermiticity_error};
  });
}

heom_status heom_run_rho(const heom_run* run, size_t index, heom_complex rho[16]) {
  return guarded([&] {
    require(run, "run");
    check_index(index, run->result.rho.size());
    from_matrix(run->result.rho[index], rho);
  });
}

size_t heom_run_event_count(const heom_run* run) {
  return run ? run->result.transitions.size() : 0;
}

heom_status heom_run_event(const heom_run* run, size_t index, heom_event* event) {
  return guarded([&] {
    require(run, "run");
    require(event, "event");
    check_index(index, run->result.transitions.size());
    const Transition& t = run->result.transitions[index];
    event->kind = t.kind == TransitionKind::Death ? HEOM_DEATH : HEOM_REBIRTH;
    event->time = t.time;
  });
}

heom_status heom_run_first_pair(const heom_run* run, int* has_death, double* t_death,
                                int* has_rebirth, double* t_rebirth) {
  return guarded([&] {
    require(run, "run");
    const FirstPair pair = summarize_first_pair(run->result.transitions);
    if (has_death) *has_death = pair.death.has_value();
    if (t_death) *t_death = pair.death.value_or(0.0);
    if (has_rebirth) *has_rebirth = pair.rebirth.has_value();
    if (t_rebirth) *t_rebirth = pair.rebirth.value_or(0.0);
  });
}

heom_status heom_sweep_create(const heom_params* params, const heom_complex rho0[16],
                              heom_axis axis, double start, double stop, int points,
                              heom_sweep** sweep) {
  return guarded([&] {
    require(sweep, "sweep");
    *sweep = nullptr;
    SweepSpec spec;
    switch (axis) {
      case HEOM_AXIS_ETA: spec.axis = SweepAxis::Eta; break;
      case HEOM_AXIS_GAMMA: spec.axis = SweepAxis::Gamma; break;
      case HEOM_AXIS_BETA: spec.axis = SweepAxis::Beta; break;
      default: throw Error(ErrorKind::Domain, "unknown sweep axis");
    }
    spec.start = start;
    spec.stop = stop;
    spec.points = points;
    spec.validate();
    const SimulationParams p = to_params(params);
    p.validate();
    const DensityMatrix initial(to_matrix(rho0));
    *sweep = new heom_sweep{run_sweep(initial, p, spec)};
  });
}

void heom_sweep_destroy(heom_sweep* sweep) { delete sweep; }

size_t heom_sweep_point_count(const heom_sweep* sweep) {
  return sweep ? sweep->points.size() : 0;
}

heom_status heom_sweep_point_get(const heom_sweep* sweep, size_t index,
                                 heom_sweep_point* point) {
  return guarded([&] {
    require(sweep, "sweep");
    require(point, "point");
    check_index(index, sweep->points.size());
    const SweepPoint& s = sweep->points[index];
    point->value = s.value;
    point->has_death = s.death.has_value();
    point->t_death = s.death.value_or(0.0);
    point->has_rebirth = s.rebirth.has_value();
    point->t_rebirth = s.rebirth.value_or(0.0);
    point->n_events = s.events;
    point->status = s.failure ? status_of(*s.failure) : HEOM_OK;
  });
}

const char* heom_sweep_point_message(const heom_sweep* sweep, size_t index) {
  if (sweep == nullptr || index >= sweep->points.size()) return "";
  return sweep->points[index].message.c_str();
}

heom_status heom_converge(const heom_params* params, const heom_complex rho0[16],
                          heom_converge_row rows[3]) {
  return guarded([&] {
    require(rows, "rows");
    const SimulationParams p = to_params(params);
    const DensityMatrix initial(to_matrix(rho0));
    const auto result = run_converge(initial, p);
    for (std::size_t i = 0; i < result.size() && i < 3; ++i) {
      const ConvergeRow& r = result[i];
      rows[i].axis = r.axis == ConvergeAxis::TimeStep ? HEOM_CONVERGE_DT
                     : r.axis == ConvergeAxis::Depth  ? HEOM_CONVERGE_DEPTH
                                                      : HEOM_CONVERGE_MATSUBARA;
      rows[i].coarse = r.coarse;
      rows[i].fine = r.fine;
      rows[i].max_abs_dev = r.max_abs_dev;
    }
  });
}

heom_status heom_hierarchy_create(const heom_params* params, heom_hierarchy** hierarchy) {
  return guarded([&] {
    require(hierarchy, "hierarchy");
    *hierarchy = nullptr;
    const SimulationParams p = to_params(params);
    p.validate();
    *hierarchy = new heom_hierarchy{make_system(p.system, p.bath, p.hierarchy, p.threads)};
  });
}

void heom_hierarchy_destroy(heom_hierarchy* hierarchy) { delete hierarchy; }

size_t heom_hierarchy_size(const heom_hierarchy* hierarchy) {
  return hierarchy ? hierarchy->system.index().size() : 0;
}

heom_status heom_hierarchy_counts(const heom_hierarchy* hierarchy, size_t index, int* counts) {
  return guarded([&] {
    require(hierarchy, "hierarchy");
    require(counts, "counts");
    const HierarchyIndex& idx = hierarchy->system.index();
    check_index(index, idx.size());
    const auto n = idx.counts(index);
    std::memcpy(counts, n.data(), n.size() * sizeof(int));
  });
}

heom_status heom_hierarchy_rhs(const heom_hierarchy* hierarchy, const heom_complex* ados,
                               heom_complex* derivative) {
  return guarded([&] {
    require(hierarchy, "hierarchy");
    require(ados, "ados");
    require(derivative, "derivative");
    const std::size_t n = hierarchy->system.index().size();
    HierarchyState state(n);
    for (std::size_t i = 0; i < n; ++i) state.set_ado(i, to_matrix(ados + 16 * i));
    const HierarchyState d = hierarchy->system.rhs(state);
    for (std::size_t i = 0; i < n; ++i) from_matrix(d.ado(i), derivative + 16 * i);
  });
}

}  // extern "C"
