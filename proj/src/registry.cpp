#include "registry.hpp"

namespace lxb {

namespace {

std::optional<int> benchmark_index(std::string_view id) {
    if (id.size() < 2 || (id[0] != 'F' && id[0] != 'f')) return std::nullopt;
    int value = 0;
    for (char c : id.substr(1)) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + (c - '0');
    }
    if (value < 1 || value > static_cast<int>(benchmark_registry().size())) return std::nullopt;
    return value;
}

ProblemInfo info_of(const ObjectiveProblem& p, std::string kind) {
    ProblemInfo info;
    info.id = p.id();
    info.name = p.name();
    info.kind = std::move(kind);
    info.dim = p.dim();
    info.lower = p.space().lower;
    info.upper = p.space().upper;
    info.f_min = p.known_minimum();
    info.constrained = p.is_constrained();
    info.noisy = p.is_noisy();
    return info;
}

} // namespace

std::vector<ProblemInfo> list_problems(const EngineeringOptions& options) {
    std::vector<ProblemInfo> out;
    for (const BenchmarkSpec& spec : benchmark_registry()) {
        out.push_back(info_of(*make_benchmark(spec.index), "benchmark"));
    }
    for (const std::string& id : engineering_ids()) {
        out.push_back(info_of(*make_engineering(id, options), "engineering"));
    }
    return out;
}

bool is_problem_id(std::string_view id) {
    if (benchmark_index(id)) return true;
    for (const std::string& known : engineering_ids()) {
        if (id == known) return true;
    }
    return false;
}

std::unique_ptr<ObjectiveProblem> make_problem(std::string_view id,
                                               const EngineeringOptions& options) {
    if (const auto index = benchmark_index(id)) return make_benchmark(*index);
    return make_engineering(id, options);
}

} // namespace lxb
