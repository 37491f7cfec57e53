#ifndef LXBBSCA_OPERATORS_HPP
#define LXBBSCA_OPERATORS_HPP

#include <span>
#include <utility>
#include <vector>

#include "core.hpp"

namespace lxb {

/// Parameters of the Laplace crossover and its offspring blend.
struct LaplaceParams {
    double a = 0.0;         // location of the Laplace spread factor
    double b = 0.5;         // scale, > 0
    double gamma_min = 0.0; // blend bounds, both in [0, 1]
    double gamma_max = 1.0;
    double k = 2.0;         // user exponent of the blend schedule

    void validate() const;
};

/// How the blend weight gamma evolves.
enum class Eq5Mode {
    Progress, // gamma_min + (gamma_max - gamma_min) * (t/T)^k
    Literal   // gamma_min + (gamma_max - gamma_min)^k, constant in t
};

/// Rank-indexed immigration/emigration probabilities (index 0 = best rank).
struct MigrationRates {
    std::vector<double> immigration; // lambda, non-decreasing with worseness
    std::vector<double> emigration;  // mu, non-increasing with worseness
};

/// Per-dimension controls of the sine/cosine position update.
struct ScaControls {
    double r1; // step amplitude, >= 0
    double r2; // oscillation angle
    double r3; // destination weight in [0, 2]
    double r4; // branch selector in [0, 1]
};

/// Laplace-distributed spread factor:
///   a - b*ln(u) for u <= 1/2, a + b*ln(u) otherwise, u in (0, 1].
double laplace_beta(double u, const LaplaceParams& params);

/// Two-parent crossover with per-dimension spread factors:
///   y1[i] = x1[i] + beta[i]*(x1[i] - x2[i])
///   y2[i] = x2[i] + beta[i]*(x1[i] - x2[i])
std::pair<std::vector<double>, std::vector<double>> laplace_crossover(
    std::span<const double> x1, std::span<const double> x2, std::span<const double> beta);

/// Blend weight at iteration t of T.
double blend_gamma(long long t, long long max_iterations, const LaplaceParams& params,
                   Eq5Mode mode = Eq5Mode::Progress);

/// z[i] = gamma*y1[i] + (1 - gamma)*y2[i], gamma in [0, 1].
std::vector<double> blend_offspring(std::span<const double> y1, std::span<const double> y2,
                                    double gamma);

/// Linear rank model for n ranked habitats: the best habitat never
/// immigrates and always emigrates; with unit scales lambda + mu = 1.
MigrationRates migration_rates(int n, double immigration_scale = 1.0,
                               double emigration_scale = 1.0);

/// Step amplitude decreasing linearly from `a` at t = 0 to 0 at t = T.
double r1_schedule(long long t, long long max_iterations, double a = 2.0);

/// Sine/cosine move toward/around the destination point:
///   x' = x + r1*sin(r2)*|r3*gbest - x|  when r4 <= 0.5
///   x' = x + r1*cos(r2)*|r3*gbest - x|  otherwise
std::vector<double> sca_step(std::span<const double> x, std::span<const double> gbest,
                             std::span<const ScaControls> controls);

/// Re-inserts elites saved before variation: each elite that no longer
/// appears in the population displaces the worst remaining member, best
/// elite first. Callers re-sort afterwards.
void elitism_replace(Population& sorted_population, const std::vector<Candidate>& elites);

} // namespace lxb

#endif
