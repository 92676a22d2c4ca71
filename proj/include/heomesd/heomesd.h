#ifndef HEOMESD_H
#define HEOMESD_H

/* C interface to the two-qubit HEOM entanglement simulator.
 *
 * Every function returning heom_status reports failures through it and
 * leaves a message retrievable with heom_last_error() on the calling thread.
 * Handles are opaque and owned by the caller; destroy functions accept NULL.
 * Density matrices are 16 row-major complex entries in the basis
 * |e1e2>, |e1g2>, |g1e2>, |g1g2>. */

#include <stddef.h>

#if defined(HEOMESD_BUILDING)
#define HEOMESD_API __attribute__((visibility("default")))
#else
#define HEOMESD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum heom_status {
  HEOM_OK = 0,
  HEOM_ERR_DOMAIN = 1,              /* parameter outside its admissible range */
  HEOM_ERR_SINGULAR = 2,            /* bath expansion hits a pole */
  HEOM_ERR_STRUCTURAL = 3,          /* inconsistent sizes or indices */
  HEOM_ERR_DIVERGENCE = 4,          /* integration produced non-finite values */
  HEOM_ERR_ACCURACY = 5,            /* trace drift above the limit */
  HEOM_ERR_DEGRADED = 6,            /* tolerance check failed in a kernel */
  HEOM_ERR_INSUFFICIENT_DATA = 7,
  HEOM_ERR_INVALID_STATE = 8,       /* not a density matrix */
  HEOM_ERR_IO = 9,
  HEOM_ERR_INTERNAL = 10
} heom_status;

typedef struct heom_complex {
  double re;
  double im;
} heom_complex;

typedef struct heom_params {
  double epsilon;   /* qubit splitting, units of zeta */
  double zeta;      /* qubit-qubit coupling */
  double eta;       /* bath coupling strength */
  double gamma;     /* Drude cutoff */
  double beta;      /* inverse temperature */
  int matsubara;    /* K */
  int depth;        /* L */
  double dt;
  double t_final;
  int sample_every; /* integration steps between samples */
  int threads;      /* workers for one right-hand-side evaluation */
  double burn_in;   /* equilibration time before t = 0; 0 for a factorized start */
} heom_params;

typedef struct heom_sample {
  double time;
  double concurrence;
  double lambda_gap;
  double trace_err;
  double herm_err;
} heom_sample;

typedef enum heom_event_kind { HEOM_DEATH = 0, HEOM_REBIRTH = 1 } heom_event_kind;

typedef struct heom_event {
  heom_event_kind kind;
  double time;
} heom_event;

typedef enum heom_axis { HEOM_AXIS_ETA = 0, HEOM_AXIS_GAMMA = 1, HEOM_AXIS_BETA = 2 } heom_axis;

typedef struct heom_sweep_point {
  double value;
  int has_death;
  double t_death;
  int has_rebirth;
  double t_rebirth;
  size_t n_events;
  heom_status status; /* HEOM_OK unless this point failed */
} heom_sweep_point;

typedef enum heom_converge_axis {
  HEOM_CONVERGE_DT = 0,
  HEOM_CONVERGE_DEPTH = 1,
  HEOM_CONVERGE_MATSUBARA = 2
} heom_converge_axis;

typedef struct heom_converge_row {
  heom_converge_axis axis;
  double coarse;
  double fine;
  double max_abs_dev;
} heom_converge_row;

typedef struct heom_run heom_run;
typedef struct heom_sweep heom_sweep;
typedef struct heom_hierarchy heom_hierarchy;

HEOMESD_API const char* heom_version(void);
HEOMESD_API const char* heom_status_string(heom_status status);
/* Message of the last failure on this thread; "" if none. */
HEOMESD_API const char* heom_last_error(void);

/* Baseline: epsilon 1.5, zeta 1, eta 0.6, gamma 0.5, beta 2.5, K 2, L 8,
 * dt 1e-3, t_final 20, sample_every 10, threads 1, burn_in 0. */
HEOMESD_API void heom_params_default(heom_params* params);
/* Range checks, plus a pole check of the bath expansion. */
HEOMESD_API heom_status heom_params_validate(const heom_params* params);

/* "bell-psi-minus", "product-ee" or "file:<path>". */
HEOMESD_API heom_status heom_state_preset(const char* name, heom_complex rho[16]);
HEOMESD_API heom_status heom_concurrence(const heom_complex rho[16], double* concurrence,
                                         double* lambda_gap);
/* Real counterterm Delta_K of one bath. */
HEOMESD_API heom_status heom_counterterm(double eta, double gamma, double beta, int matsubara,
                                         double* delta);

/* Full run: propagation, sampling and event detection. */
HEOMESD_API heom_status heom_run_create(const heom_params* params, const heom_complex rho0[16],
                                        heom_run** run);
HEOMESD_API void heom_run_destroy(heom_run* run);
HEOMESD_API size_t heom_run_sample_count(const heom_run* run);
HEOMESD_API heom_status heom_run_sample(const heom_run* run, size_t index, heom_sample* sample);
HEOMESD_API heom_status heom_run_rho(const heom_run* run, size_t index, heom_complex rho[16]);
HEOMESD_API size_t heom_run_event_count(const heom_run* run);
HEOMESD_API heom_status heom_run_event(const heom_run* run, size_t index, heom_event* event);
/* First death and the first rebirth after it; absent ones get flag 0. */
HEOMESD_API heom_status heom_run_first_pair(const heom_run* run, int* has_death, double* t_death,
                                            int* has_rebirth, double* t_rebirth);

/* One run per evenly spaced value of `axis` over [start, stop]. A failing
 * point is recorded in its row and does not stop the sweep. */
HEOMESD_API heom_status heom_sweep_create(const heom_params* params, const heom_complex rho0[16],
                                          heom_axis axis, double start, double stop, int points,
                                          heom_sweep** sweep);
HEOMESD_API void heom_sweep_destroy(heom_sweep* sweep);
HEOMESD_API size_t heom_sweep_point_count(const heom_sweep* sweep);
HEOMESD_API heom_status heom_sweep_point_get(const heom_sweep* sweep, size_t index,
                                             heom_sweep_point* point);
/* Failure message of a point; "" for successful points or bad indices. */
HEOMESD_API const char* heom_sweep_point_message(const heom_sweep* sweep, size_t index);

/* Refinement study: dt -> dt/2, L -> L+2, K -> K+1, one row each. */
HEOMESD_API heom_status heom_converge(const heom_params* params, const heom_complex rho0[16],
                                      heom_converge_row rows[3]);

/* Direct access to the hierarchy right-hand side. ADO arrays hold
 * heom_hierarchy_size() blocks of 16 entries in index order. */
HEOMESD_API heom_status heom_hierarchy_create(const heom_params* params, heom_hierarchy** hierarchy);
HEOMESD_API void heom_hierarchy_destroy(heom_hierarchy* hierarchy);
HEOMESD_API size_t heom_hierarchy_size(const heom_hierarchy* hierarchy);
/* Multi-index of ADO `index`: 2(K+1) counts, n_10..n_1K, n_20..n_2K. */
HEOMESD_API heom_status heom_hierarchy_counts(const heom_hierarchy* hierarchy, size_t index,
                                              int* counts);
HEOMESD_API heom_status heom_hierarchy_rhs(const heom_hierarchy* hierarchy,
                                           const heom_complex* ados, heom_complex* derivative);

#ifdef __cplusplus
}
#endif

#endif /* HEOMESD_H */
