#include "mprisk/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "mprisk/error.hpp"

namespace mprisk::oracles {

McExceedance mc_exceedance(const DirichletParams& params, std::size_t n, Rng& rng) {
    if (n < 10000) throw ValidationError("mc_exceedance needs at least 1e4 draws, got " + std::to_string(n));
    const std::size_t m = params.size();
    std::vector<std::gamma_distribution<double>> gammas;
    for (std::size_t i = 0; i < m; ++i) gammas.emplace_back(params[i], 1.0);

    // Normalization does not move the argmax, so the raw Gamma vector suffices.
    std::vector<std::size_t> hits(m, 0);
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t best = 0;
        double best_value = gammas[0](rng);
        for (std::size_t i = 1; i < m; ++i) {
            const double g = gammas[i](rng);
            if (g > best_value) {
                best_value = g;
                best = i;
            }
        }
        ++hits[best];
    }

    McExceedance out;
    out.draws = n;
    const double nd = static_cast<double>(n);
    for (std::size_t i = 0; i < m; ++i) {
        const double p = static_cast<double>(hits[i]) / nd;
        out.probs.push_back(p);
        out.std_errors.push_back(std::sqrt(p * (1.0 - p) / nd));
    }
    return out;
}

double tail_cvar(std::span<const double> values, std::span<const double> probs, double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) {
        throw ValidationError("tail_cvar: epsilon must lie in (0, 1], got " + std::to_string(epsilon));
    }
    if (values.size() != probs.size() || values.empty()) throw ValidationError("tail_cvar: mismatched inputs");

    std::vector<std::pair<double, double>> outcomes;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (probs[i] < 0.0) throw ValidationError("tail_cvar: negative probability");
        outcomes.emplace_back(values[i], probs[i]);
    }
    std::stable_sort(outcomes.begin(), outcomes.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

    double remaining = epsilon;
    double weighted = 0.0;
    for (const auto& [value, prob] : outcomes) {
        if (remaining <= 0.0) break;
        const double take = std::min(prob, remaining);
        weighted += take * value;
        remaining -= take;
    }
    // A total mass short of epsilon (rounding) leaves the missing sliver at the lowest cost.
    if (remaining > 0.0) weighted += remaining * outcomes.back().first;
    return weighted / epsilon;
}

}  // namespace mprisk::oracles
