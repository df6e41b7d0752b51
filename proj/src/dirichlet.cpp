#include "mprisk/dirichlet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "mprisk/error.hpp"
#include "mprisk/special_functions.hpp"

namespace mprisk {

using special::digamma;
using special::inv_digamma;
using special::log_gamma;
using special::log_reg_lower_inc_gamma;
using special::reg_upper_inc_gamma;

DirichletParams::DirichletParams(std::vector<double> alpha) : alpha_(std::move(alpha)) {
    if (alpha_.size() < 2) throw ValidationError("Dirichlet needs at least 2 components");
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
        if (!(alpha_[i] > 0.0) || !std::isfinite(alpha_[i])) {
            throw ValidationError("alpha[" + std::to_string(i) + "] must be positive and finite, got " +
                                  std::to_string(alpha_[i]));
        }
    }
}

double DirichletParams::total() const noexcept { return std::accumulate(alpha_.begin(), alpha_.end(), 0.0); }

void BeliefBatch::validate() const {
    if (beliefs.size() < 2) throw ValidationError("q < 2: batch has " + std::to_string(beliefs.size()) + " beliefs");
    const std::size_t m = beliefs.front().size();
    for (const auto& b : beliefs) {
        if (b.size() != m) throw ValidationError("beliefs in a batch must share one dimension");
    }
    if (!(interval_length > 0.0)) throw ValidationError("interval_length must be positive");
}

double log_density(const DirichletParams& params, const Belief& b) {
    if (params.size() != b.size()) {
        throw ValidationError("log_density: alpha has " + std::to_string(params.size()) + " components, belief has " +
                              std::to_string(b.size()));
    }
    double out = log_gamma(params.total());
    for (std::size_t i = 0; i < params.size(); ++i) {
        out += (params[i] - 1.0) * std::log(b[i]) - log_gamma(params[i]);
    }
    return out;
}

double log_likelihood(const DirichletParams& params, const BeliefBatch& batch) {
    double out = 0.0;
    for (const auto& b : batch.beliefs) out += log_density(params, b);
    return out;
}

std::vector<Belief> sample(const DirichletParams& params, Rng& rng, std::size_t n) {
    const std::size_t m = params.size();
    std::vector<std::gamma_distribution<double>> gammas;
    gammas.reserve(m);
    for (std::size_t i = 0; i < m; ++i) gammas.emplace_back(params[i], 1.0);

    std::vector<Belief> out;
    out.reserve(n);
    std::vector<double> draw(m);
    while (out.size() < n) {
        double sum = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            draw[i] = gammas[i](rng);
            sum += draw[i];
        }
        if (!(sum > 0.0)) continue;  // every variate underflowed; redraw
        for (auto& v : draw) v /= sum;
        out.push_back(validate_belief(draw, m));
    }
    return out;
}

DirichletParams moment_initializer(const BeliefBatch& batch) {
    batch.validate();
    const std::size_t m = batch.dimension();
    const double q = static_cast<double>(batch.beliefs.size());

    std::vector<double> mean(m, 0.0);
    for (const auto& b : batch.beliefs) {
        for (std::size_t i = 0; i < m; ++i) mean[i] += b[i];
    }
    for (auto& v : mean) v /= q;

    bool identical = true;
    const auto& first = batch.beliefs.front();
    for (const auto& b : batch.beliefs) {
        for (std::size_t i = 0; i < m && identical; ++i) identical = (b[i] == first[i]);
        if (!identical) break;
    }
    if (identical) throw NumericalError("divergent MLE: all beliefs in the batch are identical");

    double var = 0.0;
    for (const auto& b : batch.beliefs) var += (b[0] - mean[0]) * (b[0] - mean[0]);
    var /= (q - 1.0);

    double scale = 1e6;
    if (var > 0.0) scale = std::clamp(mean[0] * (1.0 - mean[0]) / var - 1.0, 1e-2, 1e6);

    std::vector<double> alpha(m);
    for (std::size_t i = 0; i < m; ++i) alpha[i] = scale * mean[i];
    return DirichletParams(std::move(alpha));
}

MleResult estimate_mle(const BeliefBatch& batch, const MleOptions& options) {
    DirichletParams init = moment_initializer(batch);
    const std::size_t m = batch.dimension();
    const double q = static_cast<double>(batch.beliefs.size());

    std::vector<double> mean_log(m, 0.0);
    for (const auto& b : batch.beliefs) {
        for (std::size_t i = 0; i < m; ++i) mean_log[i] += std::log(b[i]);
    }
    for (auto& v : mean_log) v /= q;

    std::vector<double> alpha(init.alpha().begin(), init.alpha().end());
    std::vector<double> next(m);
    MleResult result;
    for (int iter = 1; iter <= options.max_iter; ++iter) {
        const double psi_total = digamma(std::accumulate(alpha.begin(), alpha.end(), 0.0));
        double change = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            next[i] = inv_digamma(psi_total + mean_log[i]);
            // Absolute change below 1, relative above: inv_digamma resolves x to ~1e-15 x.
            change = std::max(change, std::abs(next[i] - alpha[i]) / std::max(1.0, alpha[i]));
        }
        alpha.swap(next);
        result.iterations = iter;
        if (change < options.tol) {
            result.converged = true;
            break;
        }
    }
    result.params = DirichletParams(std::move(alpha));
    return result;
}

// ---------------------------------------------------------------------------
// Exceedance probabilities

namespace {

constexpr std::size_t kGaussOrder = 15;
constexpr int kMaxDepth = 40;
constexpr double kMassTolerance = 1e-6;

struct GaussRule {
    std::array<double, kGaussOrder> nodes{};
    std::array<double, kGaussOrder> weights{};
};

// Legendre roots by Newton iteration from the Chebyshev guess.
GaussRule make_gauss_rule() {
    GaussRule rule;
    const int n = static_cast<int>(kGaussOrder);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

const GaussRule& gauss_rule() {
    static const GaussRule rule = make_gauss_rule();
    return rule;
}

// Integrand for all m cells at s = log x, in the measure ds.
class CellIntegrand {
public:
    explicit CellIntegrand(std::span<const double> alpha) : alpha_(alpha), m_(alpha.size()) {
        log_gamma_alpha_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) log_gamma_alpha_[i] = log_gamma(alpha_[i]);
        log_cdf_.resize(m_);
        prefix_.resize(m_ + 1);
        suffix_.resize(m_ + 1);
    }

    std::size_t size() const noexcept { return m_; }

    // Adds weight * f_k(s) to acc[k] for every cell k.
    void accumulate(double s, double weight, std::span<double> acc) {
        const double x = std::exp(s);
        for (std::size_t i = 0; i < m_; ++i) log_cdf_[i] = log_reg_lower_inc_gamma(alpha_[i], s);
        prefix_[0] = 0.0;
        for (std::size_t i = 0; i < m_; ++i) prefix_[i + 1] = prefix_[i] + log_cdf_[i];
        suffix_[m_] = 0.0;
        for (std::size_t i = m_; i-- > 0;) suffix_[i] = suffix_[i + 1] + log_cdf_[i];
        for (std::size_t k = 0; k < m_; ++k) {
            const double log_f = alpha_[k] * s - x - log_gamma_alpha_[k] + prefix_[k] + suffix_[k + 1];
            acc[k] += weight * std::exp(log_f);
        }
    }

    // ln of prod_i P(alpha_i, e^s): bounds the mass of every cell below e^s.
    double log_joint_cdf(double s) const {
        double out = 0.0;
        for (std::size_t i = 0; i < m_; ++i) out += log_reg_lower_inc_gamma(alpha_[i], s);
        return out;
    }

private:
    std::span<const double> alpha_;
    std::size_t m_;
    std::vector<double> log_gamma_alpha_;
    std::vector<double> log_cdf_;
    std::vector<double> prefix_;
    std::vector<double> suffix_;
};

// Smallest x (up to bisection resolution) with Q(a, x) below target.
double upper_truncation(double a, double target) {
    double lo = a;
    double hi = a + 10.0 * std::sqrt(a) + 10.0;
    while (reg_upper_inc_gamma(a, hi) >= target) {
        lo = hi;
        hi *= 2.0;
    }
    for (int i = 0; i < 100 && (hi - lo) > 1e-9 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (reg_upper_inc_gamma(a, mid) >= target) lo = mid;
        else hi = mid;
    }
    return hi;
}

class PanelIntegrator {
public:
    PanelIntegrator(CellIntegrand& f, double tol, double total_width)
        : f_(f), m_(f.size()), tol_density_(tol / total_width) {}

    std::vector<double> panel(double a, double b) {
        std::vector<double> out(m_, 0.0);
        const auto& rule = gauss_rule();
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        for (std::size_t j = 0; j < kGaussOrder; ++j) {
            f_.accumulate(mid + half * rule.nodes[j], half * rule.weights[j], out);
        }
        return out;
    }

    // Bisects [a, b] until the whole-vs-halves difference is within the panel's share of tol.
    void integrate(double a, double b, const std::vector<double>& whole, int depth, std::vector<double>& total) {
        const double mid = 0.5 * (a + b);
        auto left = panel(a, mid);
        auto right = panel(mid, b);
        double err = 0.0;
        for (std::size_t k = 0; k < m_; ++k) err = std::max(err, std::abs(whole[k] - left[k] - right[k]));
        if (err <= tol_density_ * (b - a) || depth >= kMaxDepth) {
            for (std::size_t k = 0; k < m_; ++k) total[k] += left[k] + right[k];
            ++panels_;
            return;
        }
        integrate(a, mid, left, depth + 1, total);
        integrate(mid, b, right, depth + 1, total);
    }

    std::size_t panels() const noexcept { return panels_; }

private:
    CellIntegrand& f_;
    std::size_t m_;
    double tol_density_;
    std::size_t panels_ = 0;
};

// Panel breakpoints: the truncation ends, a uniform grid, and points around each
// Gamma(alpha_k) mode in log x so narrow peaks are never stepped over.
std::vector<double> breakpoints(std::span<const double> alpha, double s_lo, double s_hi) {
    std::vector<double> pts{s_lo, s_hi};
    constexpr int kUniform = 8;
    for (int j = 1; j < kUniform; ++j) pts.push_back(s_lo + (s_hi - s_lo) * j / kUniform);
    for (double a : alpha) {
        // Gamma(a) in log x has mode log a and width ~ 1/sqrt(a).
        const double centre = std::log(a);
        const double width = 1.0 / std::sqrt(std::max(a, 1.0));
        for (double k : {-6.0, -3.0, -1.5, 0.0, 1.5, 3.0, 6.0}) {
            const double p = centre + k * width;
            if (p > s_lo && p < s_hi) pts.push_back(p);
        }
    }
    std::sort(pts.begin(), pts.end());
    std::vector<double> out;
    const double min_gap = 1e-6 * (s_hi - s_lo);
    for (double p : pts) {
        if (out.empty() || p - out.back() > min_gap) out.push_back(p);
    }
    out.back() = s_hi;
    return out;
}

}  // namespace

ExceedanceResult exceedance_probs_detailed(const DirichletParams& params, double tol) {
    if (params.size() < 2) throw ValidationError("exceedance_probs: params are empty");
    if (!(tol > 0.0) || !std::isfinite(tol)) throw ValidationError("exceedance_probs: tol must be positive");
    const auto alpha = params.alpha();
    const std::size_t m = alpha.size();
    const double tail_target = tol / 10.0;
    const double log_tail_target = std::log(tail_target);

    double s_hi = -std::numeric_limits<double>::infinity();
    for (double a : alpha) s_hi = std::max(s_hi, std::log(upper_truncation(a, tail_target)));

    CellIntegrand integrand(alpha);

    // Below s_lo every Gamma variate is small at once, which bounds each cell's lost mass.
    constexpr double kLowestLogX = -1e4;
    double s_lo = std::min(0.0, s_hi - 1.0);
    while (integrand.log_joint_cdf(s_lo) >= log_tail_target && s_lo > kLowestLogX) s_lo -= 10.0;
    if (s_lo > kLowestLogX) {
        double lo = s_lo;
        double hi = s_lo + 10.0;
        for (int i = 0; i < 60 && hi - lo > 1e-6; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (integrand.log_joint_cdf(mid) >= log_tail_target) hi = mid;
            else lo = mid;
        }
        s_lo = lo;
    } else {
        s_lo = kLowestLogX;
    }

    const auto pts = breakpoints(alpha, s_lo, s_hi);
    PanelIntegrator integrator(integrand, tol, s_hi - s_lo);
    std::vector<double> raw(m, 0.0);
    for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
        auto whole = integrator.panel(pts[j], pts[j + 1]);
        integrator.integrate(pts[j], pts[j + 1], whole, 0, raw);
    }

    ExceedanceResult result;
    result.raw_mass = std::accumulate(raw.begin(), raw.end(), 0.0);
    result.panels = integrator.panels();
    if (!std::isfinite(result.raw_mass) || std::abs(result.raw_mass - 1.0) > kMassTolerance) {
        throw NumericalError("exceedance quadrature mass " + std::to_string(result.raw_mass) +
                             " deviates from 1 by more than 1e-6");
    }
    result.probs.resize(m);
    for (std::size_t k = 0; k < m; ++k) result.probs[k] = std::max(0.0, raw[k]) / result.raw_mass;
    return result;
}

std::vector<double> exceedance_probs(const DirichletParams& params, double tol) {
    return exceedance_probs_detailed(params, tol).probs;
}

}  // namespace mprisk
