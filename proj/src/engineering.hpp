#ifndef LXBBSCA_ENGINEERING_HPP
#define LXBBSCA_ENGINEERING_HPP

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "objective.hpp"

namespace lxb {

/// Quadratic exterior penalty: raw + coefficient * sum(violation^exponent).
struct PenaltyPolicy {
    double coefficient = 1e6;
    double exponent = 2.0;

    void validate() const;
};

enum class BridgeConstraintMode {
    LiteralBox,        // fifth component bounded to [0.9, 1]
    SystemReliability  // system reliability >= 0.9 enforced by penalty
};

struct EngineeringOptions {
    PenaltyPolicy penalty;
    bool gear_integer = false; // round gear variables to integers before evaluating
    BridgeConstraintMode bridge_mode = BridgeConstraintMode::LiteralBox;
};

/// Squared error between a gear ratio x1*x3/(x2*x4) and the target 1/6.931.
double gear_train(std::span<const double> x);
/// Same with each variable rounded to the nearest tooth count first.
double gear_train_integer(std::span<const double> x);

/// Production cost curve over two capacities; +inf at the x1 = 40 pole.
double gas_production(std::span<const double> x);

struct BeamEval {
    double deflection;
    double g1_slack; // section area minus its 300 limit, negative = satisfied
    double g2_slack; // stress expression minus its 6 limit, negative = satisfied
};
/// Deflection objective plus both constraint slacks.
BeamEval beam_design(std::span<const double> x);

/// Series-parallel life-support system reliability over four module
/// reliabilities.
double capsule_reliability(std::span<const double> r);
/// Weighted power-law component cost, doubled per redundant pair.
double capsule_cost(std::span<const double> r);

/// Sum of exp(beta/(1 - r_j)) component costs; diverges as any r_j -> 1.
double bridge_cost(std::span<const double> r);
/// Ten-term path-polynomial reliability of the five-edge bridge network.
double bridge_reliability(std::span<const double> r);

class EngineeringProblem : public ObjectiveProblem {
public:
    using ObjectiveProblem::ObjectiveProblem;

    /// Positive constraint-violation magnitudes at x (empty when feasible or
    /// unconstrained).
    virtual std::vector<double> violations(std::span<const double>) const { return {}; }

    const PenaltyPolicy& penalty() const { return penalty_; }

    double evaluate(std::span<const double> x, RngStream* = nullptr) const override;
    bool is_constrained() const override;

protected:
    PenaltyPolicy penalty_;
};

/// raw_objective(x) plus the policy's surcharge over all non-box violations;
/// equals the raw value exactly on feasible points. Infeasible sentinels
/// (+inf) propagate untouched.
double penalized_objective(const EngineeringProblem& problem, std::span<const double> x,
                           const PenaltyPolicy& policy);

/// ids: gear_train, gas_production, beam_design, space_capsule, bridge_network
std::unique_ptr<ObjectiveProblem> make_engineering(std::string_view id,
                                                   const EngineeringOptions& options = {});
const std::vector<std::string>& engineering_ids();

} // namespace lxb

#endif
