/* romsched — run-of-mine stockyard recovery scheduling solver.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed here; every fallible call returns an rms_status, and
 * rms_last_error() describes the most recent failure on the calling thread.
 */
#ifndef ROMSCHED_H
#define ROMSCHED_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rms_status {
    RMS_OK = 0,
    RMS_ERR_INVALID_ARGUMENT = 1,
    RMS_ERR_IO = 2,
    RMS_ERR_PARSE = 3,
    RMS_ERR_MODEL = 4,        /* inconsistent instance data */
    RMS_ERR_INFEASIBLE = 5,   /* schedule fails validation */
    RMS_ERR_CONSTRUCTION = 6, /* construction deadlocked */
    RMS_ERR_INTERNAL = 7
} rms_status;

typedef struct rms_instance rms_instance;
typedef struct rms_schedule rms_schedule;

const char* rms_version(void);

/* Message of the last failure on this thread; empty string if none. */
const char* rms_last_error(void);

/* ------------------------------------------------------------------ */
/* instances                                                          */

typedef enum rms_tightness {
    RMS_TIGHTNESS_LOOSE = 0,
    RMS_TIGHTNESS_MEDIUM = 1,
    RMS_TIGHTNESS_TIGHT = 2
} rms_tightness;

typedef struct rms_generator_spec {
    int deliveries;   /* D, 1..10; more than 9 needs 3 reclaimers */
    int reclaimers;   /* R, 2 or 3 */
    int directions;   /* phi count, 1 or 2 */
    uint64_t seed;
    int minerals;     /* 1..8 */
    int tightness;    /* rms_tightness */
    double reclaim_rate;          /* tonnes per minute */
    double row_move_cost;         /* minutes per row step */
    double col_move_cost;         /* minutes per column step */
    double dir_change_penalty;    /* minutes per direction flip */
    int safety_min_columns;
} rms_generator_spec;

void rms_generator_spec_defaults(rms_generator_spec* spec);

rms_status rms_generate_instance(const rms_generator_spec* spec, rms_instance** out);
rms_status rms_instance_load(const char* path, rms_instance** out);
rms_status rms_instance_save(const rms_instance* inst, const char* path);
void rms_instance_free(rms_instance* inst);

int rms_instance_cut_count(const rms_instance* inst);
int rms_instance_delivery_count(const rms_instance* inst);
int rms_instance_reclaimer_count(const rms_instance* inst);
/* Copies the instance name (its (D-R-phi) tuple for generated ones). */
rms_status rms_instance_name(const rms_instance* inst, char* buf, size_t cap);

/* ------------------------------------------------------------------ */
/* solving                                                            */

typedef enum rms_algorithm {
    RMS_ALG_DGA = 0,
    RMS_ALG_RGA = 1,
    RMS_ALG_MMAS = 2,
    RMS_ALG_MMAS_LOCAL = 3
} rms_algorithm;

typedef enum rms_depositor {
    RMS_DEPOSIT_IBA = 0,
    RMS_DEPOSIT_BSFA = 1
} rms_depositor;

typedef struct rms_solver_params {
    int algorithm;       /* rms_algorithm */
    uint64_t seed;
    double lambda;       /* rga greediness */
    double sp;           /* selection pressure, (1, 2] */
    double alpha;        /* mmas pheromone exponent */
    double beta;         /* mmas heuristic exponent */
    double rho;          /* mmas evaporation rate, (0, 1] */
    int ants;
    int generations;
    int depositor;       /* rms_depositor */
    double compare_eps;  /* lexicographic comparison tolerance, default 0 */
    const char* history_csv; /* optional: per-generation best-so-far */
    const char* trace_log;   /* optional: construction event trace */
    const char* swap_log;    /* optional: local search swap log */
} rms_solver_params;

void rms_solver_params_defaults(rms_solver_params* params);

rms_status rms_solve(const rms_instance* inst, const rms_solver_params* params,
                     rms_schedule** out);

/* Adjacent-swap local search; never worsens the objective. */
rms_status rms_improve(const rms_instance* inst, const rms_schedule* in,
                       rms_schedule** out);

/* ------------------------------------------------------------------ */
/* schedules                                                          */

void rms_schedule_free(rms_schedule* s);
int rms_schedule_job_count(const rms_schedule* s);

/* objective[0..2] = (v1, v2, u); validates the schedule first. */
rms_status rms_schedule_objective(const rms_instance* inst, const rms_schedule* s,
                                  double objective[3]);

/* RMS_OK when feasible; RMS_ERR_INFEASIBLE plus report text otherwise. */
rms_status rms_validate(const rms_instance* inst, const rms_schedule* s,
                        char* report, size_t cap);

rms_status rms_schedule_save(const rms_schedule* s, const rms_instance* inst,
                             const char* path);
rms_status rms_schedule_load(const char* path, const rms_instance* inst,
                             rms_schedule** out);

/* ------------------------------------------------------------------ */
/* experiments                                                        */

typedef struct rms_experiment_opts {
    int runs;             /* seeded trials per (instance, algorithm); dga runs once */
    uint64_t master_seed;
    int threads;
    int include_timing;   /* 0: wall_time_ms column is written as 0 */
} rms_experiment_opts;

void rms_experiment_opts_defaults(rms_experiment_opts* opts);

/* Runs every algorithm on every instance, writes the per-run CSV to csv_path
 * (columns: instance,algorithm,run,seed,v1,v2,u,wall_time_ms) and, when
 * summary_path is non-NULL, a median/best/worst/SR table. failed_runs may be
 * NULL. */
rms_status rms_run_experiment(const rms_instance* const* instances, int n_instances,
                              const int* algorithms, int n_algorithms,
                              const rms_solver_params* params,
                              const rms_experiment_opts* opts,
                              const char* csv_path, const char* summary_path,
                              int* failed_runs);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ROMSCHED_H */
