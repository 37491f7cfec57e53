#ifndef LXBBSCA_CORE_HPP
#define LXBBSCA_CORE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rng.hpp"

namespace lxb {

/// Malformed data: dimension mismatches, broken orderings, empty inputs.
struct StructuralError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Invalid run settings: population too small, bad budgets, bad parameters.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Box-constrained feasible region: per-dimension lower/upper bounds.
struct SearchSpace {
    std::vector<double> lower;
    std::vector<double> upper;

    SearchSpace(std::vector<double> lo, std::vector<double> hi);

    /// Uniform box [lo, hi]^dim.
    static SearchSpace cube(int dim, double lo, double hi);

    int dim() const { return static_cast<int>(lower.size()); }
};

/// A position with its fitness once evaluated. Unevaluated candidates carry
/// an empty fitness, never a sentinel value.
struct Candidate {
    std::vector<double> position;
    std::optional<double> fitness;

    Candidate() = default;
    explicit Candidate(std::vector<double> pos) : position(std::move(pos)) {}

    bool evaluated() const { return fitness.has_value(); }
    double fitness_value() const { return fitness.value(); }
};

using Population = std::vector<Candidate>;

/// Best-to-worst for minimization (ascending fitness). Stable so that equal
/// fitness keeps insertion order and runs stay deterministic.
void sort_population(Population& population);

/// Coordinates outside the box move to the nearer bound.
std::vector<double> clamp_to_bounds(std::span<const double> position, const SearchSpace& space);
void clamp_in_place(std::vector<double>& position, const SearchSpace& space);

/// n >= 2 candidates with coordinates uniform inside the box, fitness unset.
Population random_population(const SearchSpace& space, int n, RngStream& rng);

/// Best-so-far fitness indexed by objective-evaluation count.
class ConvergenceTrace {
public:
    struct Point {
        long long evals;
        double best;
    };

    /// Appends (eval_count, min(fitness, best so far)). eval_count must
    /// exceed the last recorded count.
    void update(long long eval_count, double fitness);

    bool empty() const { return points_.empty(); }
    std::size_t size() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }
    const Point& back() const { return points_.back(); }

private:
    std::vector<Point> points_;
};

/// Outcome of one seeded optimizer run.
struct RunResult {
    std::string algorithm;
    std::string problem;
    std::uint64_t seed = 0;
    Candidate best;
    ConvergenceTrace trace;
    long long evals_used = 0;
};

} // namespace lxb

#endif
