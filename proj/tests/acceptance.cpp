// Acceptance suite: every release criterion is exercised end to end and
// reported as one [PASS]/[FAIL] line. The binary exits nonzero if any
// criterion fails.
//
// Heavier criteria (the 13-function ordering study, the engineering runs)
// use the same configuration throughout: population 50, budget 30000
// objective evaluations, 30 trials seeded base_seed + trial.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "algorithms.hpp"
#include "benchmarks.hpp"
#include "engineering.hpp"
#include "registry.hpp"
#include "stats.hpp"

using namespace lxb;
namespace fs = std::filesystem;

namespace {

struct Gate {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void note(const std::string& text) { notes.push_back(text); }
};

int g_failed = 0;

void criterion(int index, const std::string& title, const std::function<void(Gate&)>& body) {
    Gate gate;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(gate);
    } catch (const std::exception& e) {
        gate.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = gate.failures.empty();
    if (!ok) ++g_failed;
    std::printf("[%s] criterion %d: %s (%.1f s)\n", ok ? "PASS" : "FAIL", index, title.c_str(),
                seconds);
    for (const std::string& note : gate.notes) std::printf("       %s\n", note.c_str());
    for (const std::string& failure : gate.failures) {
        std::printf("       !! %s\n", failure.c_str());
    }
    std::fflush(stdout);
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

int worker_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(16u, std::max(1u, hw)));
}

OptimizerConfig protocol_config(long long budget = 30000) {
    OptimizerConfig config;
    config.population_size = 50;
    config.eval_budget = budget;
    return config;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(LXB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
}

// ---- criterion bodies -------------------------------------------------------

void operators_suite(Gate& gate) {
    LaplaceParams lp;
    lp.a = 0.0;
    lp.b = 0.5;
    gate.require(close(laplace_beta(1.0, lp), 0.0, 1e-9), "beta(u=1) != 0");
    gate.require(close(laplace_beta(0.5, lp), 0.34657359027997264, 1e-9), "beta(u=0.5)");
    LaplaceParams lp11;
    lp11.a = 1.0;
    lp11.b = 1.0;
    gate.require(close(laplace_beta(0.9, lp11), 0.8946394843421737, 1e-9), "beta(u=0.9)");

    // Branch probabilities over 1e5 draws; the distribution median sits at
    // the location parameter, expressed stably as P(beta <= a) = 1/2.
    {
        LaplaceParams unit;
        unit.a = 0.0;
        unit.b = 1.0;
        RngStream rng(271828);
        const int n = 100000;
        int negative = 0;
        int at_most_a = 0;
        for (int i = 0; i < n; ++i) {
            const double beta = laplace_beta(rng.uniform_open01(), unit);
            if (beta < 0.0) ++negative;
            if (beta <= 0.0) ++at_most_a;
        }
        gate.require(std::abs(negative / double(n) - 0.5) < 0.01, "laplace sign split off 50/50");
        gate.require(std::abs(at_most_a / double(n) - 0.5) < 0.01,
                     "distribution median off the location parameter");
    }

    // Crossover examples and midpoint identity.
    {
        const auto [y1, y2] =
            laplace_crossover(std::vector{2.0}, std::vector{1.0}, std::vector{0.5});
        gate.require(close(y1[0], 2.5, 1e-9) && close(y2[0], 1.5, 1e-9), "crossover example 1");
        const auto [z1, z2] =
            laplace_crossover(std::vector{0.0}, std::vector{4.0}, std::vector{-0.25});
        gate.require(close(z1[0], 1.0, 1e-9) && close(z2[0], 5.0, 1e-9), "crossover example 2");

        RngStream rng(17);
        bool identity = true;
        for (int rep = 0; rep < 100000 && identity; ++rep) {
            const double x1 = rng.uniform(-50.0, 50.0);
            const double x2 = rng.uniform(-50.0, 50.0);
            const double beta = rng.uniform(-4.0, 4.0);
            const auto [a, b] =
                laplace_crossover(std::vector{x1}, std::vector{x2}, std::vector{beta});
            identity = close(0.5 * (a[0] + b[0]), 0.5 * (x1 + x2) + beta * (x1 - x2), 1e-12);
        }
        gate.require(identity, "crossover midpoint identity violated");
    }

    // Blend weight and offspring blend.
    {
        LaplaceParams g;
        g.gamma_min = 0.0;
        g.gamma_max = 1.0;
        g.k = 1.0;
        gate.require(close(blend_gamma(0, 100, g, Eq5Mode::Progress), 0.0, 1e-9), "gamma t=0");
        g.k = 2.0;
        gate.require(close(blend_gamma(100, 100, g, Eq5Mode::Progress), 1.0, 1e-9), "gamma t=T");
        LaplaceParams lit;
        lit.gamma_min = 0.2;
        lit.gamma_max = 0.8;
        lit.k = 2.0;
        gate.require(close(blend_gamma(11, 100, lit, Eq5Mode::Literal), 0.56, 1e-9),
                     "literal gamma");
        gate.require(
            close(blend_offspring(std::vector{2.0}, std::vector{4.0}, 0.25)[0], 3.5, 1e-9),
            "offspring blend");
    }

    // Migration rates.
    {
        const MigrationRates two = migration_rates(2);
        gate.require(close(two.immigration[0], 0.0, 1e-9) && close(two.immigration[1], 1.0, 1e-9),
                     "rates n=2 immigration");
        gate.require(close(two.emigration[0], 1.0, 1e-9) && close(two.emigration[1], 0.0, 1e-9),
                     "rates n=2 emigration");
        const MigrationRates five = migration_rates(5);
        gate.require(close(five.immigration[2], 0.5, 1e-9) && close(five.emigration[2], 0.5, 1e-9),
                     "rates n=5 midpoint");
        const MigrationRates many = migration_rates(31);
        for (int i = 0; i < 31; ++i) {
            if (std::abs(many.immigration[i] + many.emigration[i] - 1.0) > 1e-12) {
                gate.require(false, "lambda + mu != 1");
                break;
            }
        }
    }

    // Sine/cosine update.
    {
        gate.require(close(r1_schedule(0, 10), 2.0, 1e-9) && close(r1_schedule(10, 10), 0.0, 1e-9),
                     "r1 endpoints");
        gate.require(close(r1_schedule(5, 10), 1.0, 1e-9), "r1 midpoint");
        std::vector<ScaControls> sine{{1.0, std::numbers::pi / 2.0, 1.0, 0.3}};
        gate.require(close(sca_step(std::vector{0.0}, std::vector{1.0}, sine)[0], 1.0, 1e-9),
                     "sca sine branch");
        std::vector<ScaControls> cosine{{1.0, 0.0, 2.0, 0.9}};
        gate.require(close(sca_step(std::vector{0.0}, std::vector{1.0}, cosine)[0], 2.0, 1e-9),
                     "sca cosine branch");
        RngStream rng(5);
        bool frozen = true;
        for (int rep = 0; rep < 1000 && frozen; ++rep) {
            const double x = rng.uniform(-5.0, 5.0);
            const double g = rng.uniform(-5.0, 5.0);
            std::vector<ScaControls> c{
                {0.0, rng.uniform(0.0, 6.28), rng.uniform(0.0, 2.0), rng.uniform01()}};
            frozen = sca_step(std::vector{x}, std::vector{g}, c)[0] == x;
        }
        gate.require(frozen, "sca_step with r1=0 moved a point");
    }
}

void benchmark_fidelity(Gate& gate) {
    int checked = 0;
    for (const auto& spec : benchmark_registry()) {
        if (spec.x_star.empty()) continue;
        const double value = evaluate_benchmark(spec.index, spec.x_star, nullptr);
        if (std::abs(value - spec.f_min) > 1e-6) {
            gate.require(false, spec.id + ": |f(x*) - f_min| = " +
                                    std::to_string(std::abs(value - spec.f_min)));
        }
        ++checked;
    }
    gate.note("minimizer identities checked on " + std::to_string(checked) + " functions");

    RngStream rng(99);
    for (int index : {1, 9, 10, 11}) {
        const auto& spec = benchmark_registry()[index - 1];
        for (int rep = 0; rep < 200; ++rep) {
            std::vector<double> x(spec.dim), flipped(spec.dim);
            for (int d = 0; d < spec.dim; ++d) {
                x[d] = rng.uniform(spec.lower, spec.upper);
                flipped[d] = -x[d];
            }
            const double a = evaluate_benchmark(index, x);
            const double b = evaluate_benchmark(index, flipped);
            if (std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(a))) {
                gate.require(false, spec.id + " is not sign-symmetric");
                break;
            }
        }
    }

    std::vector<double> x(30), head(30, 0.0), tail(30, 0.0);
    for (int d = 0; d < 30; ++d) {
        x[d] = rng.uniform(-100.0, 100.0);
        (d < 15 ? head[d] : tail[d]) = x[d];
    }
    gate.require(close(evaluate_benchmark(1, x),
                       evaluate_benchmark(1, head) + evaluate_benchmark(1, tail), 1e-8),
                 "sphere additivity failed");
}

void ordering_study(Gate& gate) {
    const OptimizerConfig config = protocol_config();
    const int threads = worker_threads();
    int wins = 0;
    std::string losses;
    for (int f = 1; f <= 13; ++f) {
        const auto problem = make_benchmark(f);
        const double ours =
            run_trials(*problem, AlgorithmId::LXBBSCA, config, 30, 9000, threads).summary.median;
        const double bbo =
            run_trials(*problem, AlgorithmId::BBO, config, 30, 9000, threads).summary.median;
        const double lxbbo =
            run_trials(*problem, AlgorithmId::LXBBO, config, 30, 9000, threads).summary.median;
        const bool win = ours < bbo && ours < lxbbo;
        if (win) {
            ++wins;
        } else {
            losses += " F" + std::to_string(f);
        }
        std::ostringstream line;
        line << "F" << f << ": LXBBSCA " << ours << " vs BBO " << bbo << " vs LXBBO " << lxbbo
             << (win ? "" : "  [not better]");
        gate.note(line.str());
    }
    gate.note("LXBBSCA strictly best on " + std::to_string(wins) + "/13 medians");
    gate.require(wins >= 10, "needed 10 of 13 median wins, got " + std::to_string(wins) +
                                 " (losses:" + losses + ")");
}

void gear_train_criterion(Gate& gate) {
    // Continuous mode: best over 30 trials.
    {
        const auto problem = make_problem("gear_train");
        const TrialSet set = run_trials(*problem, AlgorithmId::LXBBSCA, protocol_config(), 30, 4100,
                                        worker_threads());
        std::ostringstream line;
        line << "continuous best fitness " << set.summary.min;
        gate.note(line.str());
        gate.require(set.summary.min <= 1e-9, "continuous best above 1e-9");
    }

    // Independent exhaustive oracle over the full integer grid.
    const auto oracle_start = std::chrono::steady_clock::now();
    double oracle_min = 1e300;
    int oracle_arg[4] = {0, 0, 0, 0};
    for (int a = 12; a <= 60; ++a) {
        for (int b = 12; b <= 60; ++b) {
            for (int c = 12; c <= 60; ++c) {
                for (int d = 12; d <= 60; ++d) {
                    const double err =
                        1.0 / 6.931 - (double(a) * double(c)) / (double(b) * double(d));
                    const double value = err * err;
                    if (value < oracle_min) {
                        oracle_min = value;
                        oracle_arg[0] = a;
                        oracle_arg[1] = b;
                        oracle_arg[2] = c;
                        oracle_arg[3] = d;
                    }
                }
            }
        }
    }
    const double oracle_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - oracle_start).count();
    {
        std::ostringstream line;
        line << "grid oracle minimum " << oracle_min << " at (" << oracle_arg[0] << ", "
             << oracle_arg[1] << ", " << oracle_arg[2] << ", " << oracle_arg[3] << ") in "
             << oracle_seconds << " s";
        gate.note(line.str());
    }
    gate.require(oracle_seconds < 60.0, "grid oracle exceeded 60 s");
    gate.require(close(oracle_min, 2.7008571488865134e-12, 1e-20),
                 "grid oracle disagrees with the frozen optimum");

    // Integer mode: within 10x of the oracle in at least 80% of seeds at the
    // stated 30000-evaluation budget.
    {
        EngineeringOptions options;
        options.gear_integer = true;
        const auto problem = make_engineering("gear_train", options);
        auto hit_rate = [&](long long budget) {
            const TrialSet set = run_trials(*problem, AlgorithmId::LXBBSCA,
                                            protocol_config(budget), 30, 4200, worker_threads());
            int hits = 0;
            for (const RunResult& run : set.runs) {
                if (run.best.fitness_value() <= 10.0 * oracle_min) ++hits;
            }
            return hits;
        };
        const int hits = hit_rate(30000);
        gate.note("integer mode within 10x of the oracle in " + std::to_string(hits) +
                  "/30 seeds at budget 30000");
        if (hits < 24) {
            // Context for the failure: the same configuration at a 10x budget.
            // The rounded objective is piecewise constant and only 16 of the
            // 5764801 grid cells lie within 10x of the optimum, so the bar is
            // a budget question, not a correctness one.
            gate.note("same configuration at budget 300000: " +
                      std::to_string(hit_rate(300000)) + "/30 seeds");
        }
        gate.require(hits >= 24, "integer mode hit rate below 80% at budget 30000");
    }
}

void bridge_criterion(Gate& gate) {
    const double corner = bridge_cost(std::vector{0.5, 0.5, 0.5, 0.5, 0.5});
    gate.require(close(corner, 5.0 * std::exp(0.0006), 1e-12), "corner cost identity");
    gate.require(close(corner, 5.003, 5e-4), "corner cost does not round to 5.003");

    const auto problem = make_problem("bridge_network"); // literal box constraints
    const TrialSet set = run_trials(*problem, AlgorithmId::LXBBSCA, protocol_config(), 30, 4300,
                                    worker_threads());
    std::ostringstream line;
    line << "bridge best cost " << set.summary.min << " (box minimum 5.005405)";
    gate.note(line.str());
    gate.require(set.summary.min <= 5.01, "best cost above 5.01");
}

void capsule_criterion(Gate& gate) {
    const double cost = capsule_cost(std::vector{0.5, 0.5, 0.5, 0.5});
    const double expected = 1100.0 * std::pow(0.5, 0.6);
    gate.require(close(cost, expected, 1e-6), "all-0.5 cost differs from the power-law oracle");
    {
        std::ostringstream line;
        line << "all-0.5 cost " << cost << " vs published 725.08";
        gate.note(line.str());
    }

    // The delta against the published table must be visible in the report.
    const fs::path dir = fs::path("acceptance_out") / "capsule";
    fs::remove_all(dir);
    const int rc = run_cli("run --algorithms LXBBSCA --problems space_capsule --trials 5 "
                           "--budget 2000 --seed 11 --out " +
                           dir.string());
    gate.require(rc == 0, "CLI run failed");
    const std::string report = read_file(dir / "report_space_capsule_LXBBSCA.csv");
    gate.require(report.find("725.08") != std::string::npos,
                 "published cost missing from the report");
    gate.require(report.find("725.7293509") != std::string::npos,
                 "recomputed all-0.5 cost missing from the report");
    gate.require(report.find("published reference") != std::string::npos,
                 "reference rows are not marked");
}

void stats_criterion(Gate& gate) {
    gate.require(significance_label(0.693) == "b", "label(0.693)");
    gate.require(significance_label(0.009) == "a", "label(0.009)");
    gate.require(significance_label(0.0) == "a+", "label(0)");

    std::vector<double> a(30), b(30);
    for (int i = 0; i < 30; ++i) {
        a[i] = i;
        b[i] = i + (i + 1.0);
    }
    const WilcoxonResult w = wilcoxon_test(a, b);
    {
        std::ostringstream line;
        line << "saturated signed-rank z = " << w.z;
        gate.note(line.str());
    }
    gate.require(std::abs(std::abs(w.z) - 4.782) <= 0.001, "z saturation off -4.782");
    gate.require(w.sign == '+', "sign convention violated");

    const double p = detail::student_t_two_sided_p(2.045, 29);
    {
        std::ostringstream line;
        line << "p(|t| = 2.045, df = 29) = " << p;
        gate.note(line.str());
    }
    gate.require(std::abs(p - 0.0500) <= 0.0005, "t-table anchor off at 3 significant figures");
}

void determinism_criterion(Gate& gate) {
    const fs::path dir_a = fs::path("acceptance_out") / "rerun_a";
    const fs::path dir_b = fs::path("acceptance_out") / "rerun_b";
    fs::remove_all(dir_a);
    fs::remove_all(dir_b);
    const std::string args =
        "run --algorithms LXBBSCA,BBO --problems F16,bridge_network --trials 4 --budget 3000 "
        "--seed 2024 --out ";
    gate.require(run_cli(args + dir_a.string()) == 0, "first CLI run failed");
    gate.require(run_cli(args + dir_b.string()) == 0, "second CLI run failed");

    int compared = 0;
    for (const auto& entry : fs::recursive_directory_iterator(dir_a)) {
        if (!entry.is_regular_file()) continue;
        const fs::path rel = fs::relative(entry.path(), dir_a);
        if (read_file(entry.path()) != read_file(dir_b / rel)) {
            gate.require(false, "output differs between reruns: " + rel.string());
        }
        ++compared;
    }
    gate.note("compared " + std::to_string(compared) + " files byte for byte");
    gate.require(compared > 0, "no files produced");

    // Wall time should scale about linearly with the evaluation budget.
    const auto problem = make_benchmark(1);
    auto time_budget = [&](long long budget) {
        double best = 1e300;
        for (int rep = 0; rep < 3; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            run_trials(*problem, AlgorithmId::LXBBSCA, protocol_config(budget), 6, 31, 1);
            const double s =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            best = std::min(best, s);
        }
        return best;
    };
    const double t1 = time_budget(20000);
    const double t2 = time_budget(40000);
    const double ratio = t2 / t1;
    std::ostringstream line;
    line << "budget 20000 -> " << t1 << " s, budget 40000 -> " << t2 << " s, ratio " << ratio;
    gate.note(line.str());
    gate.require(ratio >= 1.0 && ratio <= 3.0,
                 "doubling the budget scaled wall time outside [1.0, 3.0]x");
}

} // namespace

int main() {
    std::printf("acceptance suite (population 50, budget 30000, 30 trials unless stated)\n");
    fs::create_directories("acceptance_out");

    criterion(1, "operator unit suite", operators_suite);
    criterion(2, "benchmark fidelity", benchmark_fidelity);
    criterion(3, "LX-BBSCA median ordering on F1-F13", ordering_study);
    criterion(4, "gear train: continuous quality + integer-grid oracle", gear_train_criterion);
    criterion(5, "bridge network corner cost and optimizer quality", bridge_criterion);
    criterion(6, "space capsule cost identity, delta recorded in report", capsule_criterion);
    criterion(7, "statistics engine anchors", stats_criterion);
    criterion(8, "byte-identical reruns and linear budget scaling", determinism_criterion);

    if (g_failed == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failed);
    return 1;
}
