#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "mprisk/dirichlet.hpp"
#include "mprisk/error.hpp"
#include "mprisk/oracles.hpp"
#include "test_support.hpp"

using namespace mprisk;

namespace {

Belief belief(std::vector<double> p) { return validate_belief(p); }

BeliefBatch batch_from(const DirichletParams& params, std::uint64_t seed, std::size_t q) {
    Rng rng(seed);
    BeliefBatch b;
    b.beliefs = sample(params, rng, q);
    return b;
}

}  // namespace

TEST_CASE("DirichletParams validation") {
    CHECK_THROWS_AS(DirichletParams({1.0}), ValidationError);
    CHECK_THROWS_AS(DirichletParams({1.0, 0.0}), ValidationError);
    CHECK_THROWS_AS(DirichletParams({1.0, -2.0}), ValidationError);
    CHECK_THROWS_AS(DirichletParams({1.0, INFINITY}), ValidationError);
    CHECK(DirichletParams({2.0, 3.0}).total() == 5.0);
}

TEST_CASE("log_density examples") {
    CHECK(std::abs(log_density(DirichletParams({1.0, 1.0}), belief({0.3, 0.7}))) <= 1e-12);
    CHECK(std::abs(log_density(DirichletParams({2.0, 1.0}), belief({0.5, 0.5}))) <= 1e-12);

    const std::vector<double> a{3.0, 2.0, 4.0};
    const std::vector<double> z{0.2, 0.3, 0.5};
    double ref = boost::math::lgamma(9.0);
    for (std::size_t i = 0; i < 3; ++i) ref += -boost::math::lgamma(a[i]) + (a[i] - 1.0) * std::log(z[i]);
    CHECK(std::abs(log_density(DirichletParams(a), belief(z)) - ref) <= 1e-12);

    CHECK_THROWS_AS(log_density(DirichletParams(a), belief({0.5, 0.5})), ValidationError);
}

TEST_CASE("sample moments and determinism") {
    Rng rng(1);
    const auto flat = sample(DirichletParams({1.0, 1.0}), rng, 1'000'000);
    double m0 = 0.0;
    for (const auto& b : flat) m0 += b[0];
    CHECK(std::abs(m0 / 1e6 - 0.5) <= 0.002);

    const auto skew = sample(DirichletParams({5.0, 2.0, 1.0}), rng, 1'000'000);
    std::vector<double> mean(3, 0.0);
    for (const auto& b : skew) {
        for (std::size_t i = 0; i < 3; ++i) mean[i] += b[i] / 1e6;
    }
    CHECK(std::abs(mean[0] - 0.625) <= 0.002);
    CHECK(std::abs(mean[1] - 0.25) <= 0.002);
    CHECK(std::abs(mean[2] - 0.125) <= 0.002);

    Rng r1(99);
    Rng r2(99);
    const auto s1 = sample(DirichletParams({0.7, 2.0, 3.0}), r1, 10);
    const auto s2 = sample(DirichletParams({0.7, 2.0, 3.0}), r2, 10);
    for (std::size_t t = 0; t < 10; ++t) {
        for (std::size_t i = 0; i < 3; ++i) CHECK(s1[t][i] == s2[t][i]);
    }
}

TEST_CASE("estimate_mle recovers the generating concentration") {
    const auto fit = estimate_mle(batch_from(DirichletParams({5.0, 2.0, 1.0}), 42, 10000));
    CHECK(fit.converged);
    CHECK(fit.iterations <= 200);
    const std::vector<double> truth{5.0, 2.0, 1.0};
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(fit.params[i] / truth[i] - 1.0) <= 0.05);

    const auto sym = estimate_mle(batch_from(DirichletParams({3.0, 3.0, 3.0}), 43, 10000));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(sym.params[i] / sym.params[j] - 1.0) <= 0.05);
    }
}

TEST_CASE("estimate_mle error paths") {
    BeliefBatch same;
    for (int i = 0; i < 5; ++i) same.beliefs.push_back(belief({0.2, 0.3, 0.5}));
    try {
        estimate_mle(same);
        FAIL("expected divergent MLE");
    } catch (const NumericalError& e) {
        CHECK(std::string(e.what()).find("divergent MLE") != std::string::npos);
    }

    BeliefBatch one;
    one.beliefs.push_back(belief({0.2, 0.8}));
    try {
        estimate_mle(one);
        FAIL("expected q < 2");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("q < 2") != std::string::npos);
    }

    BeliefBatch mixed;
    mixed.beliefs = {belief({0.2, 0.8}), belief({0.2, 0.3, 0.5})};
    CHECK_THROWS_AS(estimate_mle(mixed), ValidationError);
}

TEST_CASE("estimate_mle ascends the likelihood from the moment initializer") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::size_t> dim(2, 8);
    for (int c = 0; c < 40; ++c) {
        const DirichletParams truth(testing::random_alpha(rng, dim(rng), 0.2, 50.0));
        const auto batch = batch_from(truth, 1000 + c, 30 + 10 * c);
        const auto init = moment_initializer(batch);
        const auto fit = estimate_mle(batch);
        CHECK(log_likelihood(fit.params, batch) >= log_likelihood(init, batch) - 1e-9);
    }
}

TEST_CASE("exceedance: uniform and m = 2 closed form") {
    const auto t0 = std::chrono::steady_clock::now();
    const auto uni = exceedance_probs(DirichletParams(std::vector<double>(10, 1.0)));
    CHECK(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(1));
    for (double p : uni) CHECK(std::abs(p - 0.1) <= 1e-6);

    // P{Beta(2,1) > 1/2} = 1 - (1/2)^2.
    const auto two = exceedance_probs(DirichletParams({2.0, 1.0}));
    CHECK(std::abs(two[0] - 0.75) <= 1e-6);
    CHECK(std::abs(two[1] - 0.25) <= 1e-6);

    // General m = 2: P{Beta(a, b) > 1/2} from boost's incomplete beta.
    std::mt19937_64 rng(21);
    for (int c = 0; c < 30; ++c) {
        const auto a = testing::random_alpha(rng, 2, 0.1, 200.0);
        const auto p = exceedance_probs(DirichletParams(a));
        CHECK(std::abs(p[0] - boost::math::ibetac(a[0], a[1], 0.5)) <= 1e-6);
    }
}

TEST_CASE("exceedance matches Monte Carlo for a skewed 4-label case") {
    const DirichletParams params({4.2, 1.3, 0.7, 2.5});
    const auto quad = exceedance_probs(params);
    Rng rng(77);
    const auto mc = oracles::mc_exceedance(params, 1'000'000, rng);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(quad[i] - mc.probs[i]) <= 3.0 * mc.std_errors[i]);
}

TEST_CASE("exceedance: mass, permutation equivariance, monotonicity") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::size_t> dim(2, 10);
    for (int c = 0; c < 200; ++c) {
        const auto a = testing::random_alpha(rng, dim(rng), 0.1, 50.0);
        const auto r = exceedance_probs_detailed(DirichletParams(a));
        CHECK(std::abs(r.raw_mass - 1.0) <= 1e-6);
        double s = 0.0;
        for (double p : r.probs) {
            CHECK(p >= 0.0);
            s += p;
        }
        CHECK(std::abs(s - 1.0) <= 1e-12);

        if (c % 4 == 0) {
            std::vector<std::size_t> perm(a.size());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<double> b(a.size());
            for (std::size_t k = 0; k < a.size(); ++k) b[k] = a[perm[k]];
            const auto q = exceedance_probs(DirichletParams(b));
            for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(q[k] - r.probs[perm[k]]) <= 1e-9);
        }
    }
    for (int c = 0; c < 50; ++c) {
        auto a = testing::random_alpha(rng, dim(rng), 0.1, 50.0);
        const std::size_t k = c % a.size();
        const double before = exceedance_probs(DirichletParams(a))[k];
        a[k] *= 1.0 + std::uniform_real_distribution<double>(0.01, 1.0)(rng);
        CHECK(exceedance_probs(DirichletParams(a))[k] >= before - 1e-6);
    }
}

TEST_CASE("exceedance handles extreme concentrations") {
    const auto sharp = exceedance_probs(DirichletParams({1001.0, 1.0, 1.0, 1.0}));
    CHECK(sharp[0] > 1.0 - 1e-9);
    const auto tiny = exceedance_probs(DirichletParams({0.01, 0.01, 0.02}));
    double s = 0.0;
    for (double p : tiny) s += p;
    CHECK(std::abs(s - 1.0) <= 1e-12);
    CHECK(tiny[2] > tiny[0]);
    const auto big = exceedance_probs(DirichletParams({5000.0, 4990.0}));
    CHECK(std::abs(big[0] - boost::math::ibetac(5000.0, 4990.0, 0.5)) <= 1e-6);
}
