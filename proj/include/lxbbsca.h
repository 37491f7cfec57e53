/* lxbbsca.h — C API for the LX-BBSCA optimization library.
 *
 * The library implements four population metaheuristics for box-constrained
 * continuous minimization — BBO, LX-BBO, SCA and the ensemble LX-BBSCA —
 * together with a 23-function benchmark suite, five constrained engineering
 * design problems, and the descriptive/hypothesis statistics used to compare
 * algorithms across repeated trials.
 *
 * All entry points follow the same conventions:
 *   - objects are opaque handles created by lxb_*_open/create and released
 *     by the matching close/destroy function;
 *   - functions return lxb_status; output parameters are written only on
 *     LXB_OK;
 *   - lxb_last_error() returns a thread-local message for the most recent
 *     failure on the calling thread.
 *
 * Runs are bitwise deterministic: a fixed (problem, algorithm, config, seed)
 * always produces the same result, and multi-trial runs seed trial i with
 * base_seed + i.
 */
#ifndef LXBBSCA_H
#define LXBBSCA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lxb_status {
    LXB_OK = 0,
    LXB_ERROR_INVALID_ARGUMENT = 1,
    LXB_ERROR_UNKNOWN_ID = 2,
    LXB_ERROR_DIMENSION_MISMATCH = 3,
    LXB_ERROR_RUNTIME = 4
} lxb_status;

typedef enum lxb_algorithm {
    LXB_ALGO_BBO = 0,
    LXB_ALGO_LXBBO = 1,
    LXB_ALGO_SCA = 2,
    LXB_ALGO_LXBBSCA = 3
} lxb_algorithm;

typedef enum lxb_eq5_mode {
    LXB_EQ5_PROGRESS = 0, /* gamma = g_min + (g_max - g_min) * (t/T)^k */
    LXB_EQ5_LITERAL = 1   /* gamma = g_min + (g_max - g_min)^k        */
} lxb_eq5_mode;

typedef enum lxb_r2_mode {
    LXB_R2_TWO_PI = 0, /* r2 uniform on [0, 2*pi] */
    LXB_R2_STRICT = 1  /* r2 uniform on [0, 2]    */
} lxb_r2_mode;

typedef enum lxb_siv_replace_mode {
    LXB_SIV_DONOR_COPY = 0,   /* copy the variable from an emigration-selected habitat */
    LXB_SIV_UNIFORM_RESET = 1 /* redraw the variable uniformly inside its bounds       */
} lxb_siv_replace_mode;

typedef enum lxb_wilcoxon_mode {
    LXB_WILCOXON_SIGNED_RANK = 0,
    LXB_WILCOXON_RANK_SUM = 1
} lxb_wilcoxon_mode;

typedef enum lxb_bridge_mode {
    LXB_BRIDGE_LITERAL_BOX = 0,        /* fifth component bounded to [0.9, 1] */
    LXB_BRIDGE_SYSTEM_RELIABILITY = 1  /* system reliability >= 0.9 via penalty */
} lxb_bridge_mode;

typedef struct lxb_problem lxb_problem;
typedef struct lxb_config lxb_config;
typedef struct lxb_run lxb_run;
typedef struct lxb_trials lxb_trials;

/* Options applied when instantiating a problem (penalty handling and the
 * per-problem evaluation modes). Zero-initialize then fix up, or call
 * lxb_problem_options_init for the defaults. */
typedef struct lxb_problem_options {
    double penalty_coefficient; /* > 0, default 1e6  */
    double penalty_exponent;    /* >= 1, default 2   */
    int gear_integer;           /* nonzero: round gear variables before evaluating */
    int bridge_mode;            /* lxb_bridge_mode, default LXB_BRIDGE_LITERAL_BOX */
} lxb_problem_options;

typedef struct lxb_problem_info {
    const char* id;
    const char* name;
    const char* kind; /* "benchmark" or "engineering" */
    int dim;
    int constrained;     /* nonzero if non-box constraints are penalized */
    int noisy;           /* nonzero if the objective has a stochastic term */
    int has_known_minimum;
    double f_min;        /* valid when has_known_minimum */
} lxb_problem_info;

typedef struct lxb_summary {
    double min;
    double max;
    double std;     /* sample standard deviation, n-1 denominator */
    double average;
    double median;
    int n;
} lxb_summary;

typedef struct lxb_t_test {
    double mean_diff;
    double std_diff;
    double std_error;
    double ci_low;   /* 95% confidence interval for the mean difference */
    double ci_high;
    double p;        /* two-sided */
    char label[4];   /* "a+", "a" or "b" */
} lxb_t_test;

typedef struct lxb_wilcoxon {
    double z;
    double p;  /* two-sided */
    char sign; /* '+' first sample smaller, '-' otherwise */
} lxb_wilcoxon;

typedef struct lxb_reference_row {
    const char* technique;     /* published technique name */
    int n_vars;
    double vars[8];
    double objective;          /* objective value as published */
    int has_reliability;
    double reliability;        /* as published, when the table reports one */
    const char* budget_note;   /* published evaluation-budget column, "" if absent */
} lxb_reference_row;

/* ---- library ---- */

const char* lxb_version(void);
/* Message for the last failed call on this thread ("" if none). */
const char* lxb_last_error(void);

const char* lxb_algorithm_name(lxb_algorithm algorithm);
/* Accepts canonical names and common aliases (case-insensitive, "LX-BBO"...). */
lxb_status lxb_algorithm_from_name(const char* name, lxb_algorithm* out);

/* ---- problem registry ---- */

int lxb_problem_count(void);
lxb_status lxb_problem_id_at(int index, const char** id);

void lxb_problem_options_init(lxb_problem_options* options);
lxb_status lxb_problem_open(const char* id, lxb_problem** out);
lxb_status lxb_problem_open_opts(const char* id, const lxb_problem_options* options,
                                 lxb_problem** out);
void lxb_problem_close(lxb_problem* problem);

lxb_status lxb_problem_info_get(const lxb_problem* problem, lxb_problem_info* out);
/* Fills dim-sized arrays with the box bounds. */
lxb_status lxb_problem_bounds(const lxb_problem* problem, double* lower, double* upper);

/* Objective as the optimizer sees it (penalties folded in; noise terms off). */
lxb_status lxb_problem_evaluate(const lxb_problem* problem, const double* x, int dim,
                                double* value);
/* Objective without penalty terms (identical to evaluate for unconstrained). */
lxb_status lxb_problem_evaluate_raw(const lxb_problem* problem, const double* x, int dim,
                                    double* value);

/* Named diagnostics (constraint slacks, system reliability, ...). */
int lxb_problem_metric_count(const lxb_problem* problem);
lxb_status lxb_problem_metric_name(const lxb_problem* problem, int index, const char** name);
lxb_status lxb_problem_metric_value(const lxb_problem* problem, int index, const double* x,
                                    int dim, double* value);

/* Published comparison rows bundled with the engineering problems. */
int lxb_problem_reference_count(const lxb_problem* problem);
lxb_status lxb_problem_reference_row(const lxb_problem* problem, int index,
                                     lxb_reference_row* out);

/* ---- optimizer configuration ---- */

lxb_status lxb_config_create(lxb_config** out);
void lxb_config_destroy(lxb_config* config);

lxb_status lxb_config_set_population(lxb_config* config, int n);
lxb_status lxb_config_set_budget(lxb_config* config, long long evaluations);
lxb_status lxb_config_set_elitism(lxb_config* config, int count);
lxb_status lxb_config_set_mutation_rate(lxb_config* config, double rate);
lxb_status lxb_config_set_laplace(lxb_config* config, double a, double b);
lxb_status lxb_config_set_gamma(lxb_config* config, double gamma_min, double gamma_max,
                                double k);
lxb_status lxb_config_set_rates(lxb_config* config, double immigration_scale,
                                double emigration_scale);
lxb_status lxb_config_set_eq5_mode(lxb_config* config, lxb_eq5_mode mode);
lxb_status lxb_config_set_r2_mode(lxb_config* config, lxb_r2_mode mode);
lxb_status lxb_config_set_siv_replace_mode(lxb_config* config, lxb_siv_replace_mode mode);

/* ---- running ---- */

lxb_status lxb_optimize(const lxb_problem* problem, lxb_algorithm algorithm,
                        const lxb_config* config, uint64_t seed, lxb_run** out);
void lxb_run_destroy(lxb_run* run);

lxb_status lxb_run_best_fitness(const lxb_run* run, double* value);
lxb_status lxb_run_best_position(const lxb_run* run, double* x, int dim);
lxb_status lxb_run_evals_used(const lxb_run* run, long long* evaluations);
lxb_status lxb_run_seed(const lxb_run* run, uint64_t* seed);
int lxb_run_trace_size(const lxb_run* run);
lxb_status lxb_run_trace_point(const lxb_run* run, int index, long long* eval_count,
                               double* best_fitness);

/* n_trials independent runs seeded base_seed + trial index; threads <= 1 runs
 * sequentially. Results are identical for any thread count. */
lxb_status lxb_run_trials(const lxb_problem* problem, lxb_algorithm algorithm,
                          const lxb_config* config, int n_trials, uint64_t base_seed,
                          int threads, lxb_trials** out);
void lxb_trials_destroy(lxb_trials* trials);

lxb_status lxb_trials_summary(const lxb_trials* trials, lxb_summary* out);
int lxb_trials_count(const lxb_trials* trials);
/* Borrowed pointer, owned by the trials handle; do not destroy. */
lxb_status lxb_trials_run(const lxb_trials* trials, int index, const lxb_run** out);

/* ---- statistics ---- */

lxb_status lxb_summarize(const double* values, int n, lxb_summary* out);
lxb_status lxb_paired_t_test(const double* a, const double* b, int n, lxb_t_test* out);
lxb_status lxb_wilcoxon_test(const double* a, int na, const double* b, int nb,
                             lxb_wilcoxon_mode mode, lxb_wilcoxon* out);
/* "a+" (p <= 0.001), "a" (0.001 < p <= 0.05), "b" (p > 0.05); NULL if p is
 * outside [0, 1]. */
const char* lxb_significance_label(double p);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LXBBSCA_H */
