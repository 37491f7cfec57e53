#ifndef LXBBSCA_BENCHMARKS_HPP
#define LXBBSCA_BENCHMARKS_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "objective.hpp"

namespace lxb {

/// Registry entry for one of the 23 classic test functions (F1..F23).
struct BenchmarkSpec {
    int index;        // 1..23
    std::string id;   // "F1".."F23"
    std::string name;
    int dim;
    double lower;     // uniform box
    double upper;
    double f_min;
    std::vector<double> x_star; // empty when no closed-form minimizer is known
    bool noisy;
};

/// All 23 entries in index order.
const std::vector<BenchmarkSpec>& benchmark_registry();

/// Value of function F<index> (1..23). `noise` feeds the stochastic term of
/// F7; with no stream the deterministic part is returned.
double evaluate_benchmark(int index, std::span<const double> x, RngStream* noise = nullptr);

/// Boundary penalty used by the penalized functions F12/F13:
///   k*(x-a)^m above a, k*(-x-a)^m below -a, 0 inside [-a, a].
double penalty_u(double x, double a, double k, double m);

std::unique_ptr<ObjectiveProblem> make_benchmark(int index);

} // namespace lxb

#endif
