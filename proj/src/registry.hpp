#ifndef LXBBSCA_REGISTRY_HPP
#define LXBBSCA_REGISTRY_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "benchmarks.hpp"
#include "engineering.hpp"

namespace lxb {

struct ProblemInfo {
    std::string id;
    std::string name;
    std::string kind; // "benchmark" or "engineering"
    int dim;
    std::vector<double> lower;
    std::vector<double> upper;
    std::optional<double> f_min;
    bool constrained;
    bool noisy;
};

/// F1..F23 followed by the engineering problems, in registry order.
std::vector<ProblemInfo> list_problems(const EngineeringOptions& options = {});

bool is_problem_id(std::string_view id);

/// id is "F1".."F23" or an engineering id; options only affect the latter.
std::unique_ptr<ObjectiveProblem> make_problem(std::string_view id,
                                               const EngineeringOptions& options = {});

} // namespace lxb

#endif
