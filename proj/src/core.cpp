#include "core.hpp"

#include <algorithm>
#include <cmath>

namespace lxb {

SearchSpace::SearchSpace(std::vector<double> lo, std::vector<double> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.empty() || lower.size() != upper.size()) {
        throw StructuralError("search space needs matching, non-empty bound vectors");
    }
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (!(lower[i] < upper[i])) {
            throw StructuralError("search space requires lower[i] < upper[i] at dimension " +
                                  std::to_string(i));
        }
    }
}

SearchSpace SearchSpace::cube(int dim, double lo, double hi) {
    if (dim < 1) throw StructuralError("search space dimension must be >= 1");
    return SearchSpace(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
}

void sort_population(Population& population) {
    std::stable_sort(population.begin(), population.end(),
                     [](const Candidate& a, const Candidate& b) {
                         return a.fitness_value() < b.fitness_value();
                     });
}

std::vector<double> clamp_to_bounds(std::span<const double> position, const SearchSpace& space) {
    if (static_cast<int>(position.size()) != space.dim()) {
        throw StructuralError("position length does not match search space dimension");
    }
    std::vector<double> out(position.begin(), position.end());
    clamp_in_place(out, space);
    return out;
}

void clamp_in_place(std::vector<double>& position, const SearchSpace& space) {
    if (static_cast<int>(position.size()) != space.dim()) {
        throw StructuralError("position length does not match search space dimension");
    }
    for (std::size_t i = 0; i < position.size(); ++i) {
        position[i] = std::clamp(position[i], space.lower[i], space.upper[i]);
    }
}

Population random_population(const SearchSpace& space, int n, RngStream& rng) {
    if (n < 2) throw ConfigError("population size must be >= 2 (migration needs two habitats)");
    Population population;
    population.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<double> position(space.dim());
        for (int d = 0; d < space.dim(); ++d) {
            position[d] = rng.uniform(space.lower[d], space.upper[d]);
        }
        population.emplace_back(std::move(position));
    }
    return population;
}

void ConvergenceTrace::update(long long eval_count, double fitness) {
    if (!points_.empty() && eval_count <= points_.back().evals) {
        throw StructuralError("trace eval_count must be strictly increasing");
    }
    const double best = points_.empty() ? fitness : std::min(fitness, points_.back().best);
    points_.push_back({eval_count, best});
}

} // namespace lxb
