#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "mprisk/belief.hpp"

namespace mprisk {

// Seeded random stream used everywhere randomness is needed.
using Rng = std::mt19937_64;

// Concentration vector of a Dirichlet distribution over the belief simplex.
class DirichletParams {
public:
    DirichletParams() = default;
    // Throws ValidationError unless every component is positive and finite and m >= 2.
    explicit DirichletParams(std::vector<double> alpha);

    std::size_t size() const noexcept { return alpha_.size(); }
    double operator[](std::size_t i) const { return alpha_[i]; }
    std::span<const double> alpha() const noexcept { return alpha_; }
    double total() const noexcept;

    bool operator==(const DirichletParams&) const = default;

private:
    std::vector<double> alpha_;
};

// q beliefs observed within [interval_end - interval_length, interval_end).
struct BeliefBatch {
    std::vector<Belief> beliefs;
    double interval_end = 0.0;
    double interval_length = 1.0;

    // Throws ValidationError when q < 2, dimensions disagree, or interval_length <= 0.
    void validate() const;
    std::size_t dimension() const noexcept { return beliefs.empty() ? 0 : beliefs.front().size(); }
};

double log_density(const DirichletParams& params, const Belief& b);

// Sum of log densities of every belief in the batch.
double log_likelihood(const DirichletParams& params, const BeliefBatch& batch);

// n independent draws, each a normalized vector of Gamma(alpha_i, 1) variates.
std::vector<Belief> sample(const DirichletParams& params, Rng& rng, std::size_t n);

struct MleOptions {
    double tol = 1e-10;
    int max_iter = 1000;
};

struct MleResult {
    DirichletParams params;
    int iterations = 0;
    bool converged = false;  // false: best iterate after max_iter steps
};

// Maximum-likelihood concentration estimate by the digamma fixed point
//   alpha_i <- inv_digamma( digamma(sum_j alpha_j) + mean_t log p_{t,i} ),
// started from a method-of-moments guess. Throws NumericalError when every
// belief in the batch is identical (the likelihood grows without bound).
MleResult estimate_mle(const BeliefBatch& batch, const MleOptions& options = {});

// Method-of-moments starting point used by estimate_mle.
DirichletParams moment_initializer(const BeliefBatch& batch);

struct ExceedanceResult {
    std::vector<double> probs;  // renormalized cell masses
    double raw_mass = 0.0;      // sum of the quadrature results before renormalization
    std::size_t panels = 0;     // accepted quadrature panels
};

// Probability that a Dirichlet draw lands in each Voronoi cell V_k:
//   P{V_k} = int_0^inf prod_{i != k} P(alpha_i, x) x^{alpha_k - 1} e^{-x} / Gamma(alpha_k) dx.
// Integrated in log x by adaptive composite Gauss-Legendre with per-panel
// error below tol. Throws NumericalError when the raw mass is off by > 1e-6.
ExceedanceResult exceedance_probs_detailed(const DirichletParams& params, double tol = 1e-8);
std::vector<double> exceedance_probs(const DirichletParams& params, double tol = 1e-8);

}  // namespace mprisk
