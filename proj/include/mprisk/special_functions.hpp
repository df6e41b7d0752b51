#pragma once

// Scalar special functions used by the Dirichlet machinery. All functions are
// pure and reentrant (no reliance on the global `signgam` of std::lgamma).

namespace mprisk::special {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Psi(x) = Gamma'(x) / Gamma(x) for x > 0.
double digamma(double x);

// Psi'(x) for x > 0. Only needed as the Newton slope of inv_digamma.
double trigamma(double x);

// Solves digamma(x) = y for x > 0 by Newton iteration (at most 20 steps).
// Throws NumericalError when |digamma(x) - y| <= 1e-10 is not reached.
double inv_digamma(double y);

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
// Series for x < a + 1, continued fraction otherwise.
double reg_lower_inc_gamma(double a, double x);

// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), computed without
// cancellation in the upper tail.
double reg_upper_inc_gamma(double a, double x);

// ln P(a, exp(log_x)). Accepts log_x far below the double underflow limit, so
// small-x tails of the exceedance integrand stay finite in log space.
double log_reg_lower_inc_gamma(double a, double log_x);

}  // namespace mprisk::special
