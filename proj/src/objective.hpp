#ifndef LXBBSCA_OBJECTIVE_HPP
#define LXBBSCA_OBJECTIVE_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core.hpp"

namespace lxb {

/// A published comparison result bundled with a problem for reporting.
struct ReferenceRow {
    std::string technique;
    std::vector<double> variables;
    double objective = 0.0;
    std::optional<double> reliability;
    std::string budget_note; // published evaluation-budget column, "" if absent
};

/// A named minimization objective over a box. `evaluate` is what the
/// optimizers call (penalties folded in for constrained problems); noisy
/// objectives draw from the supplied stream and are deterministic given it.
class ObjectiveProblem {
public:
    ObjectiveProblem(std::string id, std::string name, SearchSpace space)
        : id_(std::move(id)), name_(std::move(name)), space_(std::move(space)) {}
    virtual ~ObjectiveProblem() = default;

    const std::string& id() const { return id_; }
    const std::string& name() const { return name_; }
    const SearchSpace& space() const { return space_; }
    int dim() const { return space_.dim(); }

    virtual double evaluate(std::span<const double> x, RngStream* noise = nullptr) const = 0;

    /// Objective without penalty terms; equals evaluate() when unconstrained.
    virtual double raw_objective(std::span<const double> x) const { return evaluate(x); }

    virtual bool is_noisy() const { return false; }
    virtual bool is_constrained() const { return false; }

    virtual std::optional<double> known_minimum() const { return std::nullopt; }
    virtual std::optional<std::vector<double>> known_minimizer() const { return std::nullopt; }

    /// Named diagnostics for reports (constraint slacks, reliabilities, ...).
    virtual std::vector<std::string> metric_names() const { return {}; }
    virtual double metric_value(std::size_t index, std::span<const double> x) const;

    virtual std::span<const ReferenceRow> reference_rows() const { return {}; }

protected:
    void check_dim(std::span<const double> x) const {
        if (static_cast<int>(x.size()) != dim()) {
            throw StructuralError(id_ + ": position has wrong dimension");
        }
    }

private:
    std::string id_;
    std::string name_;
    SearchSpace space_;
};

} // namespace lxb

#endif
