#include <doctest.h>

#include <atomic>
#include <cmath>
#include <vector>

#include "algorithms.hpp"
#include "benchmarks.hpp"
#include "registry.hpp"

using namespace lxb;
using doctest::Approx;

namespace {

class ConstantProblem final : public ObjectiveProblem {
public:
    explicit ConstantProblem(double value)
        : ObjectiveProblem("constant", "Constant objective", SearchSpace::cube(3, -1.0, 1.0)),
          value_(value) {}
    double evaluate(std::span<const double> x, RngStream*) const override {
        check_dim(x);
        return value_;
    }

private:
    double value_;
};

class SphereProblem final : public ObjectiveProblem {
public:
    explicit SphereProblem(int dim)
        : ObjectiveProblem("sphere" + std::to_string(dim), "Sphere",
                           SearchSpace::cube(dim, -100.0, 100.0)) {}
    double evaluate(std::span<const double> x, RngStream*) const override {
        check_dim(x);
        double s = 0.0;
        for (double v : x) s += v * v;
        return s;
    }
};

// Forwards to an inner problem while counting objective calls.
class CountingProblem final : public ObjectiveProblem {
public:
    explicit CountingProblem(const ObjectiveProblem& inner)
        : ObjectiveProblem(inner.id(), inner.name(), inner.space()), inner_(inner) {}
    double evaluate(std::span<const double> x, RngStream* noise) const override {
        ++calls_;
        return inner_.evaluate(x, noise);
    }
    long long calls() const { return calls_.load(); }

private:
    const ObjectiveProblem& inner_;
    mutable std::atomic<long long> calls_{0};
};

OptimizerConfig small_config(int pop, long long budget) {
    OptimizerConfig config;
    config.population_size = pop;
    config.eval_budget = budget;
    return config;
}

bool trace_monotone(const ConvergenceTrace& trace) {
    const auto& points = trace.points();
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].best > points[i - 1].best) return false;
        if (points[i].evals <= points[i - 1].evals) return false;
    }
    return !points.empty();
}

} // namespace

TEST_CASE("algorithm names round-trip") {
    for (AlgorithmId id : all_algorithms()) {
        CHECK(algorithm_from_string(to_string(id)) == id);
    }
    CHECK(algorithm_from_string("lx-bbsca") == AlgorithmId::LXBBSCA);
    CHECK(algorithm_from_string("LX_BBO") == AlgorithmId::LXBBO);
    CHECK_FALSE(algorithm_from_string("PSO").has_value());
}

TEST_CASE("config validation") {
    OptimizerConfig config;
    config.population_size = 1;
    CHECK_THROWS_AS(config.validate(), ConfigError);
    config = {};
    config.eval_budget = 10;
    CHECK_THROWS_AS(config.validate(), ConfigError); // below one evaluation pass
    config = {};
    config.elitism_count = 50;
    CHECK_THROWS_AS(config.validate(), ConfigError);
    config = {};
    config.mutation_rate = 1.5;
    CHECK_THROWS_AS(config.validate(), ConfigError);
}

TEST_CASE("every optimizer is deterministic under a fixed seed") {
    const auto problem = make_benchmark(16);
    const OptimizerConfig config = small_config(12, 600);
    for (AlgorithmId id : all_algorithms()) {
        const RunResult a = optimize(*problem, id, config, 3);
        const RunResult b = optimize(*problem, id, config, 3);
        INFO(to_string(id));
        CHECK(a.best.fitness_value() == b.best.fitness_value());
        CHECK(a.best.position == b.best.position);
        CHECK(a.evals_used == b.evals_used);
        REQUIRE(a.trace.size() == b.trace.size());
        for (std::size_t i = 0; i < a.trace.size(); ++i) {
            CHECK(a.trace.points()[i].evals == b.trace.points()[i].evals);
            CHECK(a.trace.points()[i].best == b.trace.points()[i].best);
        }
    }
}

TEST_CASE("a constant objective is returned unchanged") {
    const ConstantProblem problem(7.25);
    for (AlgorithmId id : all_algorithms()) {
        const RunResult r = optimize(problem, id, small_config(8, 200), 11);
        INFO(to_string(id));
        CHECK(r.best.fitness_value() == 7.25);
        CHECK(r.evals_used <= 200);
    }
}

TEST_CASE("evals_used equals the exact number of objective calls") {
    const auto inner = make_benchmark(16);
    // 777 is deliberately not a multiple of the population size.
    for (AlgorithmId id : all_algorithms()) {
        const CountingProblem counted(*inner);
        const RunResult r = optimize(counted, id, small_config(10, 777), 5);
        INFO(to_string(id));
        CHECK(r.evals_used == counted.calls());
        CHECK(r.evals_used <= 777);
    }
}

TEST_CASE("the full budget is consumed on ordinary runs") {
    const auto problem = make_benchmark(16);
    for (AlgorithmId id : all_algorithms()) {
        const RunResult r = optimize(*problem, id, small_config(10, 500), 2);
        INFO(to_string(id));
        CHECK(r.evals_used == 500);
    }
}

TEST_CASE("budget below one generation returns the initial best") {
    const auto problem = make_benchmark(16);
    const RunResult r = optimize(*problem, AlgorithmId::BBO, small_config(40, 40), 9);
    CHECK(r.evals_used == 40);
    CHECK(r.best.evaluated());
}

TEST_CASE("best-so-far traces are monotone for every algorithm and seed") {
    const auto problem = make_benchmark(15);
    for (AlgorithmId id : all_algorithms()) {
        for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL}) {
            const RunResult r = optimize(*problem, id, small_config(10, 900), seed);
            INFO(to_string(id) << " seed " << seed);
            CHECK(trace_monotone(r.trace));
            CHECK(r.best.fitness_value() == r.trace.back().best);
        }
    }
}

TEST_CASE("runs respect the search box") {
    const auto problem = make_benchmark(16);
    for (AlgorithmId id : all_algorithms()) {
        const RunResult r = optimize(*problem, id, small_config(10, 800), 13);
        for (int d = 0; d < problem->dim(); ++d) {
            CHECK(r.best.position[d] >= problem->space().lower[d]);
            CHECK(r.best.position[d] <= problem->space().upper[d]);
        }
    }
}

TEST_CASE("BBO improves on the initial population") {
    const SphereProblem sphere(2);
    int improved = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const RunResult r = optimize(sphere, AlgorithmId::BBO, small_config(20, 2000), seed);
        const double initial_best = r.trace.points().front().best;
        CHECK(r.best.fitness_value() <= initial_best);
        if (r.best.fitness_value() < initial_best) ++improved;
    }
    CHECK(improved >= 28);
}

TEST_CASE("SCA exploits the 2-D sphere") {
    const SphereProblem sphere(2);
    int good = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const RunResult r = optimize(sphere, AlgorithmId::SCA, small_config(20, 2000), seed);
        if (r.best.fitness_value() < 1e-1) ++good;
    }
    CHECK(good >= 27); // >= 90% of seeds
}

TEST_CASE("LX-BBSCA locates the six-hump camel minimum") {
    const auto problem = make_benchmark(16);
    double best = 1e9;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const RunResult r = optimize(*problem, AlgorithmId::LXBBSCA, small_config(20, 3000), seed);
        best = std::min(best, r.best.fitness_value());
    }
    CHECK(best <= -1.0316 + 1e-2);
}

TEST_CASE("run_trials aggregates deterministic summaries") {
    const auto problem = make_benchmark(16);
    const OptimizerConfig config = small_config(10, 400);

    SUBCASE("a single trial collapses the summary") {
        const TrialSet set = run_trials(*problem, AlgorithmId::LXBBSCA, config, 1, 5);
        CHECK(set.summary.n == 1);
        CHECK(set.summary.min == set.summary.max);
        CHECK(set.summary.min == set.summary.median);
        CHECK(set.summary.min == set.runs[0].best.fitness_value());
    }

    SUBCASE("same base seed, same summary") {
        const TrialSet a = run_trials(*problem, AlgorithmId::LXBBO, config, 8, 77);
        const TrialSet b = run_trials(*problem, AlgorithmId::LXBBO, config, 8, 77);
        CHECK(a.summary.min == b.summary.min);
        CHECK(a.summary.max == b.summary.max);
        CHECK(a.summary.std == b.summary.std);
        CHECK(a.summary.average == b.summary.average);
        CHECK(a.summary.median == b.summary.median);
    }

    SUBCASE("trial i is seeded base_seed + i") {
        const TrialSet set = run_trials(*problem, AlgorithmId::SCA, config, 4, 100);
        for (int i = 0; i < 4; ++i) {
            CHECK(set.runs[i].seed == 100 + static_cast<std::uint64_t>(i));
            const RunResult solo = optimize(*problem, AlgorithmId::SCA, config, 100 + i);
            CHECK(set.runs[i].best.fitness_value() == solo.best.fitness_value());
        }
    }

    SUBCASE("thread count does not change results") {
        const TrialSet seq = run_trials(*problem, AlgorithmId::LXBBSCA, config, 9, 55, 1);
        const TrialSet par = run_trials(*problem, AlgorithmId::LXBBSCA, config, 9, 55, 4);
        for (int i = 0; i < 9; ++i) {
            CHECK(seq.runs[i].best.fitness_value() == par.runs[i].best.fitness_value());
            CHECK(seq.runs[i].best.position == par.runs[i].best.position);
        }
    }

    SUBCASE("structural summary sanity at 30 trials") {
        const TrialSet set = run_trials(*problem, AlgorithmId::LXBBSCA, config, 30, 7, 4);
        CHECK(set.summary.n == 30);
        CHECK(set.summary.min <= set.summary.median);
        CHECK(set.summary.median <= set.summary.max);
        CHECK(set.summary.min <= set.summary.average);
        CHECK(set.summary.average <= set.summary.max);
        CHECK(set.summary.std >= 0.0);
    }

    CHECK_THROWS_AS(run_trials(*problem, AlgorithmId::BBO, config, 0, 1), ConfigError);
}

TEST_CASE("a two-member population on a 1-D problem runs every algorithm") {
    const SphereProblem line(1);
    OptimizerConfig config = small_config(2, 60);
    config.elitism_count = 1; // the default pair would not fit two members
    for (AlgorithmId id : all_algorithms()) {
        const RunResult r = optimize(line, id, config, 4);
        INFO(to_string(id));
        CHECK(r.best.evaluated());
        CHECK(r.best.position.size() == 1);
        CHECK(r.evals_used <= 60);
    }

    // The default elitism pair cannot fit a population of two.
    OptimizerConfig bad = small_config(2, 60);
    CHECK_THROWS_AS(optimize(line, AlgorithmId::LXBBO, bad, 1), ConfigError);
}

TEST_CASE("noisy objectives stay reproducible per seed") {
    const auto problem = make_benchmark(7); // quartic with additive noise
    const OptimizerConfig config = small_config(10, 300);
    const RunResult a = optimize(*problem, AlgorithmId::LXBBSCA, config, 21);
    const RunResult b = optimize(*problem, AlgorithmId::LXBBSCA, config, 21);
    CHECK(a.best.fitness_value() == b.best.fitness_value());
    CHECK(a.best.position == b.best.position);
}

TEST_CASE("all four optimizers run against an engineering problem") {
    const auto problem = make_problem("bridge_network");
    for (AlgorithmId id : all_algorithms()) {
        const RunResult r = optimize(*problem, id, small_config(10, 600), 1);
        INFO(to_string(id));
        CHECK(std::isfinite(r.best.fitness_value()));
        CHECK(r.best.fitness_value() >= 5.003); // cannot beat the corner cost
    }
}
