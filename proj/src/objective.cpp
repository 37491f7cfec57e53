#include "objective.hpp"

namespace lxb {

double ObjectiveProblem::metric_value(std::size_t, std::span<const double>) const {
    throw StructuralError(id() + ": no such metric");
}

} // namespace lxb
