#ifndef LXBBSCA_ALGORITHMS_HPP
#define LXBBSCA_ALGORITHMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "objective.hpp"
#include "operators.hpp"
#include "stats.hpp"

namespace lxb {

enum class AlgorithmId { BBO, LXBBO, SCA, LXBBSCA };

std::string to_string(AlgorithmId id);
/// Case-insensitive; accepts "LX-BBO"/"LX-BBSCA" style aliases.
std::optional<AlgorithmId> algorithm_from_string(std::string_view name);
const std::vector<AlgorithmId>& all_algorithms();

/// Range of the sine/cosine oscillation angle r2.
enum class R2Mode {
    TwoPi, // [0, 2*pi]: full sweep of sine and cosine
    Strict // [0, 2]
};

/// How the ensemble's per-dimension replacement branch fills a variable.
enum class SivReplaceMode { DonorCopy, UniformReset };

struct OptimizerConfig {
    int population_size = 50;
    long long eval_budget = 30000; // objective calls, not iterations
    int elitism_count = 2;
    double mutation_rate = 0.01; // per-variable reset probability (BBO, LX-BBO)
    LaplaceParams laplace;
    double immigration_scale = 1.0; // I
    double emigration_scale = 1.0;  // E
    Eq5Mode eq5_mode = Eq5Mode::Progress;
    R2Mode r2_mode = R2Mode::TwoPi;
    SivReplaceMode siv_replace = SivReplaceMode::DonorCopy;

    void validate() const;
};

/// Runs one seeded trial of the chosen optimizer. Deterministic in
/// (problem, algorithm, config, seed); stops once eval_budget objective
/// calls have been spent, mid-generation if necessary.
RunResult optimize(const ObjectiveProblem& problem, AlgorithmId algorithm,
                   const OptimizerConfig& config, std::uint64_t seed);

RunResult run_bbo(const ObjectiveProblem& problem, const OptimizerConfig& config,
                  std::uint64_t seed);
RunResult run_lxbbo(const ObjectiveProblem& problem, const OptimizerConfig& config,
                    std::uint64_t seed);
RunResult run_sca(const ObjectiveProblem& problem, const OptimizerConfig& config,
                  std::uint64_t seed);
RunResult run_lxbbsca(const ObjectiveProblem& problem, const OptimizerConfig& config,
                      std::uint64_t seed);

struct TrialSet {
    std::vector<RunResult> runs;
    TrialSummary summary; // over final best fitness

    std::vector<double> final_fitness() const;
};

/// n_trials independent runs seeded base_seed + trial index. With threads > 1
/// the trials execute concurrently on private streams; results are merged by
/// trial index, so the outcome is identical for every thread count.
TrialSet run_trials(const ObjectiveProblem& problem, AlgorithmId algorithm,
                    const OptimizerConfig& config, int n_trials, std::uint64_t base_seed,
                    int threads = 1);

} // namespace lxb

#endif
