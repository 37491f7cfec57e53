// extern-C surface over the core library: opaque handles, status codes, and
// a thread-local last-error message. All exceptions stop at this boundary.

#include "lxbbsca.h"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <span>
#include <string>

#include "algorithms.hpp"
#include "registry.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

lxb_status fail(lxb_status status, const std::string& message) {
    set_error(message);
    return status;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
lxb_status guarded(Fn&& fn) {
    try {
        const lxb_status status = fn();
        if (status == LXB_OK) g_last_error.clear();
        return status;
    } catch (const lxb::ConfigError& e) {
        return fail(LXB_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const lxb::StructuralError& e) {
        return fail(LXB_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(LXB_ERROR_RUNTIME, e.what());
    } catch (...) {
        return fail(LXB_ERROR_RUNTIME, "unknown error");
    }
}

lxb::EngineeringOptions to_options(const lxb_problem_options& o) {
    lxb::EngineeringOptions options;
    options.penalty.coefficient = o.penalty_coefficient;
    options.penalty.exponent = o.penalty_exponent;
    options.gear_integer = o.gear_integer != 0;
    options.bridge_mode = o.bridge_mode == LXB_BRIDGE_SYSTEM_RELIABILITY
                              ? lxb::BridgeConstraintMode::SystemReliability
                              : lxb::BridgeConstraintMode::LiteralBox;
    return options;
}

const std::vector<std::string>& problem_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const lxb::ProblemInfo& info : lxb::list_problems()) out.push_back(info.id);
        return out;
    }();
    return ids;
}

} // namespace

struct lxb_problem {
    std::unique_ptr<lxb::ObjectiveProblem> impl;
    std::string kind;
    // Keeps metric-name and reference-row strings alive for borrowed returns.
    std::vector<std::string> metric_names;
};

struct lxb_config {
    lxb::OptimizerConfig impl;
};

struct lxb_run {
    lxb::RunResult impl;
};

struct lxb_trials {
    lxb::TrialSet impl;
    std::vector<lxb_run> views;
};

namespace {

lxb_status evaluate_common(const lxb_problem* problem, const double* x, int dim, double* value,
                           bool raw);

template <typename Fn>
lxb_status config_update(lxb_config* config, Fn&& fn) {
    return guarded([&]() -> lxb_status {
        if (!config) return fail(LXB_ERROR_INVALID_ARGUMENT, "null config");
        lxb::OptimizerConfig next = config->impl;
        fn(next);
        // Cross-field checks (budget vs population) run at optimize time;
        // only per-field sanity is enforced here.
        config->impl = next;
        return LXB_OK;
    });
}

lxb::AlgorithmId to_algorithm(lxb_algorithm algorithm) {
    switch (algorithm) {
        case LXB_ALGO_BBO: return lxb::AlgorithmId::BBO;
        case LXB_ALGO_LXBBO: return lxb::AlgorithmId::LXBBO;
        case LXB_ALGO_SCA: return lxb::AlgorithmId::SCA;
        case LXB_ALGO_LXBBSCA: return lxb::AlgorithmId::LXBBSCA;
    }
    throw lxb::ConfigError("unknown algorithm enum value");
}

lxb_summary to_c_summary(const lxb::TrialSummary& s) {
    return {s.min, s.max, s.std, s.average, s.median, s.n};
}

} // namespace

extern "C" {

const char* lxb_version(void) { return "1.0.0"; }

const char* lxb_last_error(void) { return g_last_error.c_str(); }

const char* lxb_algorithm_name(lxb_algorithm algorithm) {
    switch (algorithm) {
        case LXB_ALGO_BBO: return "BBO";
        case LXB_ALGO_LXBBO: return "LXBBO";
        case LXB_ALGO_SCA: return "SCA";
        case LXB_ALGO_LXBBSCA: return "LXBBSCA";
    }
    return nullptr;
}

lxb_status lxb_algorithm_from_name(const char* name, lxb_algorithm* out) {
    return guarded([&]() -> lxb_status {
        if (!name || !out) return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        const auto id = lxb::algorithm_from_string(name);
        if (!id) return fail(LXB_ERROR_UNKNOWN_ID, std::string("unknown algorithm: ") + name);
        *out = static_cast<lxb_algorithm>(static_cast<int>(*id));
        return LXB_OK;
    });
}

int lxb_problem_count(void) { return static_cast<int>(problem_ids().size()); }

lxb_status lxb_problem_id_at(int index, const char** id) {
    return guarded([&]() -> lxb_status {
        if (!id) return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        const auto& ids = problem_ids();
        if (index < 0 || index >= static_cast<int>(ids.size())) {
            return fail(LXB_ERROR_INVALID_ARGUMENT, "problem index out of range");
        }
        *id = ids[static_cast<std::size_t>(index)].c_str();
        return LXB_OK;
    });
}

void lxb_problem_options_init(lxb_problem_options* options) {
    if (!options) return;
    options->penalty_coefficient = 1e6;
    options->penalty_exponent = 2.0;
    options->gear_integer = 0;
    options->bridge_mode = LXB_BRIDGE_LITERAL_BOX;
}

lxb_status lxb_problem_open(const char* id, lxb_problem** out) {
    return lxb_problem_open_opts(id, nullptr, out);
}

lxb_status lxb_problem_open_opts(const char* id, const lxb_problem_options* options,
                                 lxb_problem** out) {
    return guarded([&]() -> lxb_status {
        if (!id || !out) return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        if (!lxb::is_problem_id(id)) {
            return fail(LXB_ERROR_UNKNOWN_ID, std::string("unknown problem id: ") + id);
        }
        lxb_problem_options defaults;
        lxb_problem_options_init(&defaults);
        const lxb::EngineeringOptions opts = to_options(options ? *options : defaults);
        auto handle = std::make_unique<lxb_problem>();
        handle->impl = lxb::make_problem(id, opts);
        handle->kind = id[0] == 'F' || id[0] == 'f' ? "benchmark" : "engineering";
        handle->metric_names = handle->impl->metric_names();
        *out = handle.release();
        return LXB_OK;
    });
}

void lxb_problem_close(lxb_problem* problem) { delete problem; }

lxb_status lxb_problem_info_get(const lxb_problem* problem, lxb_problem_info* out) {
    return guarded([&]() -> lxb_status {
        if (!problem || !out) return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        const lxb::ObjectiveProblem& p = *problem->impl;
        out->id = p.id().c_str();
        out->name = p.name().c_str();
        out->kind = problem->kind.c_str();
        out->dim = p.dim();
        out->constrained = p.is_constrained() ? 1 : 0;
        out->noisy = p.is_noisy() ? 1 : 0;
        const auto f_min = p.known_minimum();
        out->has_known_minimum = f_min.has_value() ? 1 : 0;
        out->f_min = f_min.value_or(0.0);
        return LXB_OK;
    });
}

lxb_status lxb_problem_bounds(const lxb_problem* problem, double* lower, double* upper) {
    return guarded([&]() -> lxb_status {
        if (!problem || !lower || !upper) {
            return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        }
        const lxb::SearchSpace& space = problem->impl->space();
        std::copy(space.lower.begin(), space.lower.end(), lower);
        std::copy(space.upper.begin(), space.upper.end(), upper);
        return LXB_OK;
    });
}

lxb_status lxb_problem_evaluate(const lxb_problem* problem, const double* x, int dim,
                                double* value) {
    return evaluate_common(problem, x, dim, value, false);
}

lxb_status lxb_problem_evaluate_raw(const lxb_problem* problem, const double* x, int dim,
                                    double* value) {
    return evaluate_common(problem, x, dim, value, true);
}

int lxb_problem_metric_count(const lxb_problem* problem) {
    return problem ? static_cast<int>(problem->metric_names.size()) : 0;
}

lxb_status lxb_problem_metric_name(const lxb_problem* problem, int index, const char** name) {
    return guarded([&]() -> lxb_status {
        if (!problem || !name) return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        if (index < 0 || index >= static_cast<int>(problem->metric_names.size())) {
            return fail(LXB_ERROR_INVALID_ARGUMENT, "metric index out of range");
        }
        *name = problem->metric_names[static_cast<std::size_t>(index)].c_str();
        return LXB_OK;
    });
}

lxb_status lxb_problem_metric_value(const lxb_problem* problem, int index, const double* x,
                                    int dim, double* value) {
    return guarded([&]() -> lxb_status {
        if (!problem || !x || !value) return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        if (index < 0 || index >= static_cast<int>(problem->metric_names.size())) {
            return fail(LXB_ERROR_INVALID_ARGUMENT, "metric index out of range");
        }
        if (dim != problem->impl->dim()) {
            return fail(LXB_ERROR_DIMENSION_MISMATCH, "position has wrong dimension");
        }
        *value = problem->impl->metric_value(static_cast<std::size_t>(index),
                                             {x, static_cast<std::size_t>(dim)});
        return LXB_OK;
    });
}

int lxb_problem_reference_count(const lxb_problem* problem) {
    return problem ? static_cast<int>(problem->impl->reference_rows().size()) : 0;
}

lxb_status lxb_problem_reference_row(const lxb_problem* problem, int index,
                                     lxb_reference_row* out) {
    return guarded([&]() -> lxb_status {
        if (!problem || !out) return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        const auto rows = problem->impl->reference_rows();
        if (index < 0 || index >= static_cast<int>(rows.size())) {
            return fail(LXB_ERROR_INVALID_ARGUMENT, "reference row index out of range");
        }
        const lxb::ReferenceRow& row = rows[static_cast<std::size_t>(index)];
        out->technique = row.technique.c_str();
        out->n_vars = static_cast<int>(row.variables.size());
        std::fill(std::begin(out->vars), std::end(out->vars), 0.0);
        std::copy(row.variables.begin(), row.variables.end(), out->vars);
        out->objective = row.objective;
        out->has_reliability = row.reliability.has_value() ? 1 : 0;
        out->reliability = row.reliability.value_or(0.0);
        out->budget_note = row.budget_note.c_str();
        return LXB_OK;
    });
}

lxb_status lxb_config_create(lxb_config** out) {
    return guarded([&]() -> lxb_status {
        if (!out) return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        *out = new lxb_config();
        return LXB_OK;
    });
}

void lxb_config_destroy(lxb_config* config) { delete config; }

lxb_status lxb_config_set_population(lxb_config* config, int n) {
    return config_update(config, [&](lxb::OptimizerConfig& c) {
        if (n < 2) throw lxb::ConfigError("population size must be >= 2");
        c.population_size = n;
    });
}

lxb_status lxb_config_set_budget(lxb_config* config, long long evaluations) {
    return config_update(config, [&](lxb::OptimizerConfig& c) {
        if (evaluations < 2) throw lxb::ConfigError("eval budget must be >= 2");
        c.eval_budget = evaluations;
    });
}

lxb_status lxb_config_set_elitism(lxb_config* config, int count) {
    return config_update(config, [&](lxb::OptimizerConfig& c) {
        if (count < 0) throw lxb::ConfigError("elitism count must be >= 0");
        c.elitism_count = count;
    });
}

lxb_status lxb_config_set_mutation_rate(lxb_config* config, double rate) {
    return config_update(config, [&](lxb::OptimizerConfig& c) {
        if (!(rate >= 0.0 && rate <= 1.0)) throw lxb::ConfigError("mutation rate in [0, 1]");
        c.mutation_rate = rate;
    });
}

lxb_status lxb_config_set_laplace(lxb_config* config, double a, double b) {
    return config_update(config, [&](lxb::OptimizerConfig& c) {
        c.laplace.a = a;
        c.laplace.b = b;
        c.laplace.validate();
    });
}

lxb_status lxb_config_set_gamma(lxb_config* config, double gamma_min, double gamma_max,
                                double k) {
    return config_update(config, [&](lxb::OptimizerConfig& c) {
        c.laplace.gamma_min = gamma_min;
        c.laplace.gamma_max = gamma_max;
        c.laplace.k = k;
        c.laplace.validate();
    });
}

lxb_status lxb_config_set_rates(lxb_config* config, double immigration_scale,
                                double emigration_scale) {
    return config_update(config, [&](lxb::OptimizerConfig& c) {
        if (!(immigration_scale > 0.0) || !(emigration_scale > 0.0)) {
            throw lxb::ConfigError("migration scales must be > 0");
        }
        c.immigration_scale = immigration_scale;
        c.emigration_scale = emigration_scale;
    });
}

lxb_status lxb_config_set_eq5_mode(lxb_config* config, lxb_eq5_mode mode) {
    return config_update(config, [&](lxb::OptimizerConfig& c) {
        c.eq5_mode = mode == LXB_EQ5_LITERAL ? lxb::Eq5Mode::Literal : lxb::Eq5Mode::Progress;
    });
}

lxb_status lxb_config_set_r2_mode(lxb_config* config, lxb_r2_mode mode) {
    return config_update(config, [&](lxb::OptimizerConfig& c) {
        c.r2_mode = mode == LXB_R2_STRICT ? lxb::R2Mode::Strict : lxb::R2Mode::TwoPi;
    });
}

lxb_status lxb_config_set_siv_replace_mode(lxb_config* config, lxb_siv_replace_mode mode) {
    return config_update(config, [&](lxb::OptimizerConfig& c) {
        c.siv_replace = mode == LXB_SIV_UNIFORM_RESET ? lxb::SivReplaceMode::UniformReset
                                                      : lxb::SivReplaceMode::DonorCopy;
    });
}

lxb_status lxb_optimize(const lxb_problem* problem, lxb_algorithm algorithm,
                        const lxb_config* config, uint64_t seed, lxb_run** out) {
    return guarded([&]() -> lxb_status {
        if (!problem || !config || !out) {
            return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        }
        auto run = std::make_unique<lxb_run>();
        run->impl = lxb::optimize(*problem->impl, to_algorithm(algorithm), config->impl, seed);
        *out = run.release();
        return LXB_OK;
    });
}

void lxb_run_destroy(lxb_run* run) { delete run; }

lxb_status lxb_run_best_fitness(const lxb_run* run, double* value) {
    return guarded([&]() -> lxb_status {
        if (!run || !value) return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        *value = run->impl.best.fitness_value();
        return LXB_OK;
    });
}

lxb_status lxb_run_best_position(const lxb_run* run, double* x, int dim) {
    return guarded([&]() -> lxb_status {
        if (!run || !x) return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        const auto& position = run->impl.best.position;
        if (dim != static_cast<int>(position.size())) {
            return fail(LXB_ERROR_DIMENSION_MISMATCH, "buffer has wrong dimension");
        }
        std::copy(position.begin(), position.end(), x);
        return LXB_OK;
    });
}

lxb_status lxb_run_evals_used(const lxb_run* run, long long* evaluations) {
    return guarded([&]() -> lxb_status {
        if (!run || !evaluations) return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        *evaluations = run->impl.evals_used;
        return LXB_OK;
    });
}

lxb_status lxb_run_seed(const lxb_run* run, uint64_t* seed) {
    return guarded([&]() -> lxb_status {
        if (!run || !seed) return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        *seed = run->impl.seed;
        return LXB_OK;
    });
}

int lxb_run_trace_size(const lxb_run* run) {
    return run ? static_cast<int>(run->impl.trace.size()) : 0;
}

lxb_status lxb_run_trace_point(const lxb_run* run, int index, long long* eval_count,
                               double* best_fitness) {
    return guarded([&]() -> lxb_status {
        if (!run || !eval_count || !best_fitness) {
            return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        }
        const auto& points = run->impl.trace.points();
        if (index < 0 || index >= static_cast<int>(points.size())) {
            return fail(LXB_ERROR_INVALID_ARGUMENT, "trace index out of range");
        }
        *eval_count = points[static_cast<std::size_t>(index)].evals;
        *best_fitness = points[static_cast<std::size_t>(index)].best;
        return LXB_OK;
    });
}

lxb_status lxb_run_trials(const lxb_problem* problem, lxb_algorithm algorithm,
                          const lxb_config* config, int n_trials, uint64_t base_seed,
                          int threads, lxb_trials** out) {
    return guarded([&]() -> lxb_status {
        if (!problem || !config || !out) {
            return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        }
        auto trials = std::make_unique<lxb_trials>();
        trials->impl = lxb::run_trials(*problem->impl, to_algorithm(algorithm), config->impl,
                                       n_trials, base_seed, threads);
        trials->views.reserve(trials->impl.runs.size());
        for (const lxb::RunResult& r : trials->impl.runs) trials->views.push_back({r});
        *out = trials.release();
        return LXB_OK;
    });
}

void lxb_trials_destroy(lxb_trials* trials) { delete trials; }

lxb_status lxb_trials_summary(const lxb_trials* trials, lxb_summary* out) {
    return guarded([&]() -> lxb_status {
        if (!trials || !out) return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        *out = to_c_summary(trials->impl.summary);
        return LXB_OK;
    });
}

int lxb_trials_count(const lxb_trials* trials) {
    return trials ? static_cast<int>(trials->impl.runs.size()) : 0;
}

lxb_status lxb_trials_run(const lxb_trials* trials, int index, const lxb_run** out) {
    return guarded([&]() -> lxb_status {
        if (!trials || !out) return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        if (index < 0 || index >= static_cast<int>(trials->views.size())) {
            return fail(LXB_ERROR_INVALID_ARGUMENT, "trial index out of range");
        }
        *out = &trials->views[static_cast<std::size_t>(index)];
        return LXB_OK;
    });
}

lxb_status lxb_summarize(const double* values, int n, lxb_summary* out) {
    return guarded([&]() -> lxb_status {
        if (!values || !out) return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        if (n < 1) return fail(LXB_ERROR_INVALID_ARGUMENT, "need at least one value");
        *out = to_c_summary(lxb::summarize({values, static_cast<std::size_t>(n)}));
        return LXB_OK;
    });
}

lxb_status lxb_paired_t_test(const double* a, const double* b, int n, lxb_t_test* out) {
    return guarded([&]() -> lxb_status {
        if (!a || !b || !out) return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        if (n < 2) return fail(LXB_ERROR_INVALID_ARGUMENT, "paired t test needs n >= 2");
        const auto r = lxb::paired_t_test({a, static_cast<std::size_t>(n)},
                                          {b, static_cast<std::size_t>(n)});
        out->mean_diff = r.mean_diff;
        out->std_diff = r.std_diff;
        out->std_error = r.std_error;
        out->ci_low = r.ci_low;
        out->ci_high = r.ci_high;
        out->p = r.p;
        std::snprintf(out->label, sizeof(out->label), "%s", r.label.c_str());
        return LXB_OK;
    });
}

lxb_status lxb_wilcoxon_test(const double* a, int na, const double* b, int nb,
                             lxb_wilcoxon_mode mode, lxb_wilcoxon* out) {
    return guarded([&]() -> lxb_status {
        if (!a || !b || !out) return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        if (na < 1 || nb < 1) return fail(LXB_ERROR_INVALID_ARGUMENT, "empty sample");
        const auto r = lxb::wilcoxon_test({a, static_cast<std::size_t>(na)},
                                          {b, static_cast<std::size_t>(nb)},
                                          mode == LXB_WILCOXON_RANK_SUM
                                              ? lxb::WilcoxonMode::RankSum
                                              : lxb::WilcoxonMode::SignedRank);
        out->z = r.z;
        out->p = r.p;
        out->sign = r.sign;
        return LXB_OK;
    });
}

const char* lxb_significance_label(double p) {
    if (!(p >= 0.0 && p <= 1.0)) return nullptr;
    if (p > 0.05) return "b";
    if (p > 0.001) return "a";
    return "a+";
}

} // extern "C"

namespace {

lxb_status evaluate_common(const lxb_problem* problem, const double* x, int dim, double* value,
                           bool raw) {
    return guarded([&]() -> lxb_status {
        if (!problem || !x || !value) return fail(LXB_ERROR_INVALID_ARGUMENT, "null argument");
        if (dim != problem->impl->dim()) {
            return fail(LXB_ERROR_DIMENSION_MISMATCH, "position has wrong dimension");
        }
        const std::span<const double> xs(x, static_cast<std::size_t>(dim));
        *value = raw ? problem->impl->raw_objective(xs) : problem->impl->evaluate(xs);
        return LXB_OK;
    });
}

} // namespace
