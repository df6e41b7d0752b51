#pragma once

// Brute-force reference computations. They deliberately share no code with the
// quadrature and closed-form paths they are used to check.

#include <cstddef>
#include <span>
#include <vector>

#include "mprisk/dirichlet.hpp"

namespace mprisk::oracles {

struct McExceedance {
    std::vector<double> probs;       // empirical Voronoi cell frequencies
    std::vector<double> std_errors;  // binomial standard errors sqrt(p (1 - p) / n)
    std::size_t draws = 0;
};

// Throws ValidationError when n < 1e4.
McExceedance mc_exceedance(const DirichletParams& params, std::size_t n, Rng& rng);

// Mean of the worst epsilon-tail of a discrete distribution, from the definition:
// outcomes sorted by cost, mass accumulated from the top, the boundary atom split.
// Values need not be sorted or unique.
double tail_cvar(std::span<const double> values, std::span<const double> probs, double epsilon);

}  // namespace mprisk::oracles
