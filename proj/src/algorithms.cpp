#include "algorithms.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <thread>

namespace lxb {

std::string to_string(AlgorithmId id) {
    switch (id) {
        case AlgorithmId::BBO: return "BBO";
        case AlgorithmId::LXBBO: return "LXBBO";
        case AlgorithmId::SCA: return "SCA";
        case AlgorithmId::LXBBSCA: return "LXBBSCA";
    }
    throw StructuralError("unknown algorithm id");
}

std::optional<AlgorithmId> algorithm_from_string(std::string_view name) {
    std::string canon;
    for (char c : name) {
        if (c == '-' || c == '_' || c == ' ') continue;
        canon.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    if (canon == "BBO") return AlgorithmId::BBO;
    if (canon == "LXBBO") return AlgorithmId::LXBBO;
    if (canon == "SCA") return AlgorithmId::SCA;
    if (canon == "LXBBSCA") return AlgorithmId::LXBBSCA;
    return std::nullopt;
}

const std::vector<AlgorithmId>& all_algorithms() {
    static const std::vector<AlgorithmId> ids = {AlgorithmId::BBO, AlgorithmId::LXBBO,
                                                 AlgorithmId::SCA, AlgorithmId::LXBBSCA};
    return ids;
}

void OptimizerConfig::validate() const {
    if (population_size < 2) throw ConfigError("population size must be >= 2");
    if (eval_budget < population_size) {
        throw ConfigError("eval budget must cover at least one full evaluation pass");
    }
    if (elitism_count < 0 || elitism_count >= population_size) {
        throw ConfigError("elitism count must lie in [0, population size)");
    }
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
        throw ConfigError("mutation rate must lie in [0, 1]");
    }
    if (!(immigration_scale > 0.0) || !(emigration_scale > 0.0)) {
        throw ConfigError("migration scales I, E must be > 0");
    }
    laplace.validate();
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Shared per-run state: evaluation gate, best-ever tracking, trace recording.
class Runner {
public:
    Runner(const ObjectiveProblem& problem, const OptimizerConfig& config, std::uint64_t seed)
        : problem_(problem), config_(config), rng_(seed), seed_(seed) {}

    RngStream& rng() { return rng_; }
    long long evals() const { return evals_; }
    bool budget_left() const { return evals_ < config_.eval_budget; }
    const Candidate& best() const { return best_; }

    // Evaluates in place, charging one objective call. Returns false without
    // evaluating once the budget is spent.
    bool try_evaluate(Candidate& candidate) {
        if (evals_ >= config_.eval_budget) return false;
        const double f = problem_.evaluate(candidate.position, &rng_);
        ++evals_;
        candidate.fitness = f;
        if (!best_.evaluated() || f < best_.fitness_value()) {
            best_ = candidate;
            trace_.update(evals_, f);
        }
        return true;
    }

    Population initial_population() {
        Population pop = random_population(problem_.space(), config_.population_size, rng_);
        for (Candidate& c : pop) try_evaluate(c); // budget >= n by config contract
        return pop;
    }

    RunResult finish(AlgorithmId algorithm) {
        if (trace_.empty() || trace_.back().evals < evals_) {
            trace_.update(evals_, best_.fitness_value());
        }
        RunResult result;
        result.algorithm = to_string(algorithm);
        result.problem = problem_.id();
        result.seed = seed_;
        result.best = best_;
        result.trace = std::move(trace_);
        result.evals_used = evals_;
        return result;
    }

private:
    const ObjectiveProblem& problem_;
    const OptimizerConfig& config_;
    RngStream rng_;
    std::uint64_t seed_;
    long long evals_ = 0;
    Candidate best_;
    ConvergenceTrace trace_;
};

// Roulette draw proportional to non-negative weights.
std::size_t roulette(const std::vector<double>& weights, double total, RngStream& rng) {
    double r = rng.uniform01() * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        r -= weights[i];
        if (r < 0.0) return i;
    }
    return weights.size() - 1;
}

double gamma_for(long long t, long long max_iter, const OptimizerConfig& config) {
    const double g = blend_gamma(t, max_iter, config.laplace, config.eq5_mode);
    return std::clamp(g, 0.0, 1.0);
}

long long schedule_horizon(const OptimizerConfig& config, int evals_per_iteration) {
    return std::max<long long>(1, config.eval_budget / evals_per_iteration);
}

// Ranks best-to-worst: rank_of[i] = 0 for the fittest member.
std::vector<std::size_t> rank_members(const Population& pop) {
    std::vector<std::size_t> order(pop.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return pop[i].fitness_value() < pop[j].fitness_value();
    });
    std::vector<std::size_t> rank_of(pop.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank_of[order[r]] = r;
    return rank_of;
}

std::vector<Candidate> take_elites(const Population& pop, int count) {
    std::vector<std::size_t> order(pop.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return pop[i].fitness_value() < pop[j].fitness_value();
    });
    std::vector<Candidate> elites;
    elites.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) elites.push_back(pop[order[static_cast<std::size_t>(i)]]);
    return elites;
}

ScaControls draw_controls(double r1, const OptimizerConfig& config, RngStream& rng) {
    ScaControls c;
    c.r1 = r1;
    c.r2 = rng.uniform01() * (config.r2_mode == R2Mode::TwoPi ? kTwoPi : 2.0);
    c.r3 = rng.uniform01() * 2.0;
    c.r4 = rng.uniform01();
    return c;
}

// ---- BBO: rank-based migration by variable copy, uniform-reset mutation ----

RunResult bbo_impl(const ObjectiveProblem& problem, const OptimizerConfig& config,
                   std::uint64_t seed) {
    Runner run(problem, config, seed);
    const SearchSpace& space = problem.space();
    const int n = config.population_size;
    const int dim = space.dim();
    const MigrationRates rates =
        migration_rates(n, config.immigration_scale, config.emigration_scale);
    const double mu_total =
        std::accumulate(rates.emigration.begin(), rates.emigration.end(), 0.0);

    Population pop = run.initial_population();
    sort_population(pop);

    while (run.budget_left()) {
        const std::vector<Candidate> elites = take_elites(pop, config.elitism_count);

        // Donors are read from the generation-start population; working
        // copies collect the migrated variables.
        std::vector<std::vector<double>> habitats(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) habitats[i] = pop[i].position;
        for (int i = 0; i < n; ++i) {
            for (int d = 0; d < dim; ++d) {
                if (run.rng().uniform01() < rates.immigration[i]) {
                    const std::size_t j = roulette(rates.emigration, mu_total, run.rng());
                    habitats[i][d] = pop[j].position[d];
                }
            }
            for (int d = 0; d < dim; ++d) {
                if (run.rng().uniform01() < config.mutation_rate) {
                    habitats[i][d] = run.rng().uniform(space.lower[d], space.upper[d]);
                }
            }
        }

        for (int i = 0; i < n && run.budget_left(); ++i) {
            Candidate replacement(std::move(habitats[i]));
            clamp_in_place(replacement.position, space);
            if (run.try_evaluate(replacement)) pop[i] = std::move(replacement);
        }

        sort_population(pop);
        elitism_replace(pop, elites);
        sort_population(pop);
    }
    return run.finish(AlgorithmId::BBO);
}

// ---- LX-BBO: Laplace-crossover migration with blend, donor copy on miss ----

RunResult lxbbo_impl(const ObjectiveProblem& problem, const OptimizerConfig& config,
                     std::uint64_t seed) {
    Runner run(problem, config, seed);
    const SearchSpace& space = problem.space();
    const int n = config.population_size;
    const int dim = space.dim();
    const long long horizon = schedule_horizon(config, n);
    const MigrationRates rates =
        migration_rates(n, config.immigration_scale, config.emigration_scale);
    const double mu_total =
        std::accumulate(rates.emigration.begin(), rates.emigration.end(), 0.0);

    Population pop = run.initial_population();
    sort_population(pop);

    long long t = 1;
    while (run.budget_left()) {
        const long long tt = std::min(t, horizon);
        const double gamma = gamma_for(tt, horizon, config);
        const std::vector<Candidate> elites = take_elites(pop, config.elitism_count);

        std::vector<std::vector<double>> habitats(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) habitats[i] = pop[i].position;
        for (int i = 0; i < n; ++i) {
            for (int d = 0; d < dim; ++d) {
                if (run.rng().uniform01() < rates.immigration[i]) {
                    const std::size_t j = roulette(rates.emigration, mu_total, run.rng());
                    const double beta = laplace_beta(run.rng().uniform_open01(), config.laplace);
                    const double diff = pop[i].position[d] - pop[j].position[d];
                    const double y1 = pop[i].position[d] + beta * diff;
                    const double y2 = pop[j].position[d] + beta * diff;
                    habitats[i][d] = gamma * y1 + (1.0 - gamma) * y2;
                } else {
                    // Migration miss: pull one randomly chosen variable from
                    // an emigration-selected donor.
                    const std::size_t j = roulette(rates.emigration, mu_total, run.rng());
                    const std::size_t dd = run.rng().uniform_index(static_cast<std::size_t>(dim));
                    habitats[i][dd] = pop[j].position[dd];
                }
            }
            for (int d = 0; d < dim; ++d) {
                if (run.rng().uniform01() < config.mutation_rate) {
                    habitats[i][d] = run.rng().uniform(space.lower[d], space.upper[d]);
                }
            }
        }

        for (int i = 0; i < n && run.budget_left(); ++i) {
            Candidate replacement(std::move(habitats[i]));
            clamp_in_place(replacement.position, space);
            if (run.try_evaluate(replacement)) pop[i] = std::move(replacement);
        }

        sort_population(pop);
        elitism_replace(pop, elites);
        sort_population(pop);
        ++t;
    }
    return run.finish(AlgorithmId::LXBBO);
}

// ---- SCA: sine/cosine moves toward the best-so-far ----
//
// Every solution keeps its updated position; the improvement test guards
// only the destination update. The destination (Gbest) is the best-ever
// candidate, which the evaluation gate tracks, so its fitness never rises.

RunResult sca_impl(const ObjectiveProblem& problem, const OptimizerConfig& config,
                   std::uint64_t seed) {
    Runner run(problem, config, seed);
    const SearchSpace& space = problem.space();
    const int n = config.population_size;
    const int dim = space.dim();
    const long long horizon = schedule_horizon(config, n);

    Population pop = run.initial_population();

    long long t = 1;
    while (run.budget_left()) {
        const double r1 = r1_schedule(std::min(t, horizon), horizon);
        for (int i = 0; i < n && run.budget_left(); ++i) {
            std::vector<ScaControls> controls(static_cast<std::size_t>(dim));
            for (int d = 0; d < dim; ++d) controls[d] = draw_controls(r1, config, run.rng());
            Candidate moved(sca_step(pop[i].position, run.best().position, controls));
            clamp_in_place(moved.position, space);
            if (!run.try_evaluate(moved)) break;
            pop[i] = std::move(moved);
        }
        ++t;
    }
    return run.finish(AlgorithmId::SCA);
}

// ---- LX-BBSCA: SCA pass then Laplace migration pass ----

RunResult lxbbsca_impl(const ObjectiveProblem& problem, const OptimizerConfig& config,
                       std::uint64_t seed) {
    Runner run(problem, config, seed);
    const SearchSpace& space = problem.space();
    const int n = config.population_size;
    const int dim = space.dim();
    // Two evaluation sweeps per iteration.
    const long long horizon = schedule_horizon(config, 2 * n);
    const MigrationRates rates =
        migration_rates(n, config.immigration_scale, config.emigration_scale);

    Population pop = run.initial_population();

    long long t = 1;
    while (run.budget_left()) {
        const long long tt = std::min(t, horizon);

        // Phase 1: sine/cosine sweep; positions keep their updates and the
        // best-ever candidate serves as the destination point.
        const double r1 = r1_schedule(tt, horizon);
        for (int i = 0; i < n && run.budget_left(); ++i) {
            std::vector<ScaControls> controls(static_cast<std::size_t>(dim));
            for (int d = 0; d < dim; ++d) controls[d] = draw_controls(r1, config, run.rng());
            Candidate moved(sca_step(pop[i].position, run.best().position, controls));
            clamp_in_place(moved.position, space);
            if (!run.try_evaluate(moved)) break;
            pop[i] = std::move(moved);
        }
        if (!run.budget_left()) break;

        // Phase 2: Laplace migration replaces the mutation operator.
        const std::vector<std::size_t> rank_of = rank_members(pop);
        std::vector<double> mu_of(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) mu_of[i] = rates.emigration[rank_of[i]];
        const double mu_total = std::accumulate(mu_of.begin(), mu_of.end(), 0.0);
        const double gamma = gamma_for(tt, horizon, config);
        const std::vector<Candidate> elites = take_elites(pop, config.elitism_count);

        std::vector<std::vector<double>> habitats(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) habitats[i] = pop[i].position;
        std::vector<bool> touched(static_cast<std::size_t>(n), false);
        for (int i = 0; i < n; ++i) {
            const double lambda_i = rates.immigration[rank_of[i]];
            for (int d = 0; d < dim; ++d) {
                if (run.rng().uniform01() < lambda_i) {
                    const std::size_t j = roulette(mu_of, mu_total, run.rng());
                    const double beta = laplace_beta(run.rng().uniform_open01(), config.laplace);
                    const double diff = pop[i].position[d] - pop[j].position[d];
                    const double y1 = pop[i].position[d] + beta * diff;
                    const double y2 = pop[j].position[d] + beta * diff;
                    habitats[i][d] = gamma * y1 + (1.0 - gamma) * y2;
                    touched[i] = true;
                }
                if (run.rng().uniform01() < 0.5) {
                    if (config.siv_replace == SivReplaceMode::DonorCopy) {
                        const std::size_t j = roulette(mu_of, mu_total, run.rng());
                        habitats[i][d] = pop[j].position[d];
                    } else {
                        habitats[i][d] = run.rng().uniform(space.lower[d], space.upper[d]);
                    }
                    touched[i] = true;
                }
            }
        }

        // Re-evaluation with per-habitat greedy acceptance: a habitat keeps
        // its previous state unless the migrated one strictly improves it.
        for (int i = 0; i < n && run.budget_left(); ++i) {
            if (!touched[i]) continue;
            Candidate moved(std::move(habitats[i]));
            clamp_in_place(moved.position, space);
            if (!run.try_evaluate(moved)) break;
            if (moved.fitness_value() < pop[i].fitness_value()) pop[i] = std::move(moved);
        }

        sort_population(pop);
        elitism_replace(pop, elites);
        sort_population(pop);
        ++t;
    }
    return run.finish(AlgorithmId::LXBBSCA);
}

} // namespace

RunResult optimize(const ObjectiveProblem& problem, AlgorithmId algorithm,
                   const OptimizerConfig& config, std::uint64_t seed) {
    config.validate();
    switch (algorithm) {
        case AlgorithmId::BBO: return bbo_impl(problem, config, seed);
        case AlgorithmId::LXBBO: return lxbbo_impl(problem, config, seed);
        case AlgorithmId::SCA: return sca_impl(problem, config, seed);
        case AlgorithmId::LXBBSCA: return lxbbsca_impl(problem, config, seed);
    }
    throw StructuralError("unknown algorithm id");
}

RunResult run_bbo(const ObjectiveProblem& problem, const OptimizerConfig& config,
                  std::uint64_t seed) {
    return optimize(problem, AlgorithmId::BBO, config, seed);
}
RunResult run_lxbbo(const ObjectiveProblem& problem, const OptimizerConfig& config,
                    std::uint64_t seed) {
    return optimize(problem, AlgorithmId::LXBBO, config, seed);
}
RunResult run_sca(const ObjectiveProblem& problem, const OptimizerConfig& config,
                  std::uint64_t seed) {
    return optimize(problem, AlgorithmId::SCA, config, seed);
}
RunResult run_lxbbsca(const ObjectiveProblem& problem, const OptimizerConfig& config,
                      std::uint64_t seed) {
    return optimize(problem, AlgorithmId::LXBBSCA, config, seed);
}

std::vector<double> TrialSet::final_fitness() const {
    std::vector<double> out;
    out.reserve(runs.size());
    for (const RunResult& r : runs) out.push_back(r.best.fitness_value());
    return out;
}

TrialSet run_trials(const ObjectiveProblem& problem, AlgorithmId algorithm,
                    const OptimizerConfig& config, int n_trials, std::uint64_t base_seed,
                    int threads) {
    if (n_trials < 1) throw ConfigError("run_trials needs n_trials >= 1");
    config.validate();

    TrialSet set;
    set.runs.resize(static_cast<std::size_t>(n_trials));

    const int workers = std::max(1, std::min(threads, n_trials));
    if (workers == 1) {
        for (int i = 0; i < n_trials; ++i) {
            set.runs[i] = optimize(problem, algorithm, config, base_seed + i);
        }
    } else {
        std::atomic<int> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            try {
                for (int i = next.fetch_add(1); i < n_trials; i = next.fetch_add(1)) {
                    set.runs[i] = optimize(problem, algorithm, config, base_seed + i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    set.summary = summarize(set.final_fitness());
    return set;
}

} // namespace lxb
