#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mprisk/cost_model.hpp"
#include "mprisk/dirichlet.hpp"

namespace mprisk {

// CVaR at confidence 1 - epsilon of a descending discrete cost distribution:
//   R = (1/eps) * ( sum_{j<=v} c_j p_j + c_{v+1} (eps - sum_{j<=v} p_j) ),
// v being the longest prefix whose mass does not exceed eps.
// Throws ValidationError for eps outside (0, 1] or a malformed distribution.
double cvar(const CostDistribution& dist, double epsilon);

// Per-label CVaR values for one time interval, in thousands of currency units.
struct RiskProfile {
    double epsilon = 0.1;
    double interval_end = 0.0;
    std::vector<double> values;
};

using ExceedanceFn = std::function<std::vector<double>(const DirichletParams&)>;

// Evaluates the cell probabilities once, then the CVaR of every column.
RiskProfile risk_profile(const DirichletParams& params, const CostMatrix& cm, double epsilon,
                         double interval_end = 0.0, const ExceedanceFn& exceedance = {});

// Same, from precomputed Voronoi cell probabilities.
RiskProfile risk_profile_from_cells(std::span<const double> cell_probs, const CostMatrix& cm, double epsilon,
                                    double interval_end = 0.0);

// Weights (1 - mu) / (1 - mu^K) * mu^(K - k) for k = 1..K.
std::vector<double> accumulation_weights(double mu, std::size_t steps);

// Discounted, normalized running average of interval risk profiles.
// Single owner: one state per tracked trajectory.
class AccumulatedRiskState {
public:
    // Throws ValidationError unless 0 < mu < 1.
    explicit AccumulatedRiskState(double mu);

    // Appends the profile and returns the accumulated per-label risks.
    std::vector<double> accumulate(const RiskProfile& profile);

    double mu() const noexcept { return mu_; }
    std::size_t steps() const noexcept { return history_.size(); }
    const std::vector<RiskProfile>& history() const noexcept { return history_; }
    const std::vector<double>& current() const noexcept { return current_; }

private:
    double mu_;
    std::vector<RiskProfile> history_;
    std::vector<double> current_;
};

struct Decision {
    std::size_t argmin = 0;          // label with the smallest accumulated risk
    bool tie = false;                // several labels share the minimum
    bool gated = false;              // minimum <= eta
    std::optional<std::size_t> risk_output;  // present iff gated
    double t_exec = 0.0;             // horizon - t when gated, else 0
};

Decision decide(std::span<const double> accumulated, double eta, double t, double horizon);

}  // namespace mprisk
