#include "operators.hpp"

#include <algorithm>
#include <cmath>

namespace lxb {

void LaplaceParams::validate() const {
    if (!(b > 0.0)) throw ConfigError("Laplace scale b must be > 0");
    if (!(0.0 <= gamma_min && gamma_min <= gamma_max && gamma_max <= 1.0)) {
        throw ConfigError("gamma bounds must satisfy 0 <= gamma_min <= gamma_max <= 1");
    }
}

double laplace_beta(double u, const LaplaceParams& params) {
    if (!(u > 0.0 && u <= 1.0)) throw StructuralError("laplace_beta needs u in (0, 1]");
    return u <= 0.5 ? params.a - params.b * std::log(u) : params.a + params.b * std::log(u);
}

std::pair<std::vector<double>, std::vector<double>> laplace_crossover(
    std::span<const double> x1, std::span<const double> x2, std::span<const double> beta) {
    if (x1.size() != x2.size() || x1.size() != beta.size()) {
        throw StructuralError("laplace_crossover needs equal-length inputs");
    }
    std::vector<double> y1(x1.size());
    std::vector<double> y2(x1.size());
    for (std::size_t i = 0; i < x1.size(); ++i) {
        const double diff = x1[i] - x2[i];
        y1[i] = x1[i] + beta[i] * diff;
        y2[i] = x2[i] + beta[i] * diff;
    }
    return {std::move(y1), std::move(y2)};
}

double blend_gamma(long long t, long long max_iterations, const LaplaceParams& params,
                   Eq5Mode mode) {
    params.validate();
    const double range = params.gamma_max - params.gamma_min;
    if (mode == Eq5Mode::Literal) {
        return params.gamma_min + std::pow(range, params.k);
    }
    if (max_iterations < 1) throw ConfigError("blend_gamma needs max_iterations >= 1");
    if (t < 0 || t > max_iterations) {
        throw StructuralError("blend_gamma needs 0 <= t <= max_iterations");
    }
    const double progress = static_cast<double>(t) / static_cast<double>(max_iterations);
    return params.gamma_min + range * std::pow(progress, params.k);
}

std::vector<double> blend_offspring(std::span<const double> y1, std::span<const double> y2,
                                    double gamma) {
    if (y1.size() != y2.size()) throw StructuralError("blend_offspring needs equal lengths");
    std::vector<double> z(y1.size());
    for (std::size_t i = 0; i < y1.size(); ++i) {
        z[i] = gamma * y1[i] + (1.0 - gamma) * y2[i];
    }
    return z;
}

MigrationRates migration_rates(int n, double immigration_scale, double emigration_scale) {
    if (n < 2) throw ConfigError("migration rates need at least two habitats");
    if (!(immigration_scale > 0.0) || !(emigration_scale > 0.0)) {
        throw ConfigError("migration scales I, E must be > 0");
    }
    MigrationRates rates;
    rates.immigration.resize(static_cast<std::size_t>(n));
    rates.emigration.resize(static_cast<std::size_t>(n));
    for (int rank = 1; rank <= n; ++rank) {
        rates.immigration[rank - 1] = immigration_scale * (rank - 1) / double(n - 1);
        rates.emigration[rank - 1] = emigration_scale * (n - rank) / double(n - 1);
    }
    return rates;
}

double r1_schedule(long long t, long long max_iterations, double a) {
    if (max_iterations < 1) throw ConfigError("r1_schedule needs max_iterations >= 1");
    if (t < 0 || t > max_iterations) {
        throw StructuralError("r1_schedule needs 0 <= t <= max_iterations");
    }
    return a * (1.0 - static_cast<double>(t) / static_cast<double>(max_iterations));
}

std::vector<double> sca_step(std::span<const double> x, std::span<const double> gbest,
                             std::span<const ScaControls> controls) {
    if (x.size() != gbest.size() || x.size() != controls.size()) {
        throw StructuralError("sca_step needs equal-length inputs");
    }
    std::vector<double> out(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) {
        const ScaControls& c = controls[d];
        const double wave = c.r4 <= 0.5 ? std::sin(c.r2) : std::cos(c.r2);
        out[d] = x[d] + c.r1 * wave * std::abs(c.r3 * gbest[d] - x[d]);
    }
    return out;
}

void elitism_replace(Population& sorted_population, const std::vector<Candidate>& elites) {
    if (elites.size() > sorted_population.size()) {
        throw ConfigError("more elites than population members");
    }
    // An elite that survived variation stays where it is; replacing the worst
    // slot with a duplicate would only shrink diversity. Lost elites move
    // into the worst slots, best elite first.
    std::size_t slot = sorted_population.size();
    for (const Candidate& elite : elites) {
        const bool present =
            std::any_of(sorted_population.begin(), sorted_population.end(),
                        [&](const Candidate& member) {
                            return member.fitness == elite.fitness &&
                                   member.position == elite.position;
                        });
        if (present) continue;
        if (slot == 0) break;
        --slot;
        sorted_population[slot] = elite;
    }
}

} // namespace lxb
