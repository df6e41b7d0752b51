#include "mprisk/risk.hpp"

#include <cmath>
#include <string>

#include "mprisk/error.hpp"

namespace mprisk {

namespace {

void check_distribution(const CostDistribution& dist) {
    if (dist.values.empty() || dist.values.size() != dist.probs.size()) {
        throw ValidationError("cost distribution needs matching, nonempty value and probability lists");
    }
    double mass = 0.0;
    for (std::size_t j = 0; j < dist.probs.size(); ++j) {
        if (!(dist.probs[j] >= 0.0) || !std::isfinite(dist.values[j])) {
            throw ValidationError("cost distribution entry " + std::to_string(j) + " is invalid");
        }
        if (j > 0 && !(dist.values[j] < dist.values[j - 1])) {
            throw ValidationError("cost distribution values must be strictly descending");
        }
        mass += dist.probs[j];
    }
    if (std::abs(mass - 1.0) > 1e-6) throw ValidationError("cost distribution mass " + std::to_string(mass) + " is not 1");
}

}  // namespace

double cvar(const CostDistribution& dist, double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) {
        throw ValidationError("epsilon must lie in (0, 1], got " + std::to_string(epsilon));
    }
    check_distribution(dist);

    // Tail weights p_j / eps keep the boundary cases exact: v = 0 yields c_1 * 1,
    // and eps = p_1 yields c_1 * 1 + c_2 * 0.
    const std::size_t n = dist.values.size();
    std::size_t v = 0;
    double prefix_mass = 0.0;
    double prefix_weight = 0.0;
    double risk = 0.0;
    while (v < n && prefix_mass + dist.probs[v] <= epsilon) {
        prefix_mass += dist.probs[v];
        const double w = dist.probs[v] / epsilon;
        prefix_weight += w;
        risk += dist.values[v] * w;
        ++v;
    }
    if (v < n) risk += dist.values[v] * (1.0 - prefix_weight);
    return risk;
}

RiskProfile risk_profile_from_cells(std::span<const double> cell_probs, const CostMatrix& cm, double epsilon,
                                    double interval_end) {
    if (cell_probs.size() != cm.size()) {
        throw ValidationError("risk_profile: " + std::to_string(cell_probs.size()) + " cell probabilities for a " +
                              std::to_string(cm.size()) + "-label cost matrix");
    }
    RiskProfile profile;
    profile.epsilon = epsilon;
    profile.interval_end = interval_end;
    profile.values.reserve(cm.size());
    for (std::size_t i = 0; i < cm.size(); ++i) {
        profile.values.push_back(cvar(cost_distribution(ordered_cost_vector(cm, i), cell_probs), epsilon));
    }
    return profile;
}

RiskProfile risk_profile(const DirichletParams& params, const CostMatrix& cm, double epsilon, double interval_end,
                         const ExceedanceFn& exceedance) {
    if (params.size() != cm.size()) {
        throw ValidationError("risk_profile: alpha has " + std::to_string(params.size()) +
                              " components, cost matrix has " + std::to_string(cm.size()) + " labels");
    }
    if (!(epsilon > 0.0 && epsilon <= 1.0)) {
        throw ValidationError("epsilon must lie in (0, 1], got " + std::to_string(epsilon));
    }
    const auto cells = exceedance ? exceedance(params) : exceedance_probs(params);
    return risk_profile_from_cells(cells, cm, epsilon, interval_end);
}

std::vector<double> accumulation_weights(double mu, std::size_t steps) {
    if (!(mu > 0.0 && mu < 1.0)) throw ValidationError("mu must lie in (0, 1), got " + std::to_string(mu));
    std::vector<double> w(steps);
    const double norm = (1.0 - mu) / (1.0 - std::pow(mu, static_cast<double>(steps)));
    double power = 1.0;
    for (std::size_t k = steps; k-- > 0;) {
        w[k] = norm * power;
        power *= mu;
    }
    return w;
}

AccumulatedRiskState::AccumulatedRiskState(double mu) : mu_(mu) {
    if (!(mu > 0.0 && mu < 1.0)) throw ValidationError("mu must lie in (0, 1), got " + std::to_string(mu));
}

std::vector<double> AccumulatedRiskState::accumulate(const RiskProfile& profile) {
    if (!history_.empty()) {
        const auto& last = history_.back();
        if (profile.values.size() != last.values.size()) throw ValidationError("accumulate: profile dimension changed");
        if (profile.epsilon != last.epsilon) throw ValidationError("accumulate: profiles must share epsilon");
    }
    history_.push_back(profile);
    const auto w = accumulation_weights(mu_, history_.size());
    current_.assign(profile.values.size(), 0.0);
    for (std::size_t k = 0; k < history_.size(); ++k) {
        for (std::size_t i = 0; i < current_.size(); ++i) current_[i] += w[k] * history_[k].values[i];
    }
    return current_;
}

Decision decide(std::span<const double> accumulated, double eta, double t, double horizon) {
    if (accumulated.empty()) throw ValidationError("decide: empty risk vector");
    Decision d;
    double best = accumulated[0];
    for (std::size_t i = 1; i < accumulated.size(); ++i) {
        if (accumulated[i] < best) {
            best = accumulated[i];
            d.argmin = i;
            d.tie = false;
        } else if (accumulated[i] == best) {
            d.tie = true;
        }
    }
    d.gated = best <= eta;
    if (d.gated) {
        d.risk_output = d.argmin;
        d.t_exec = horizon - t;
    }
    return d;
}

}  // namespace mprisk
