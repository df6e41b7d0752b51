// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance [criterion-number ...]; with no arguments every criterion runs.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "mprisk/config.hpp"
#include "mprisk/cost_model.hpp"
#include "mprisk/dirichlet.hpp"
#include "mprisk/oracles.hpp"
#include "mprisk/risk.hpp"
#include "mprisk/scenario.hpp"
#include "mprisk/text_io.hpp"

using namespace mprisk;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double budget_s;  // runtime limit; 0 = none stated
    std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

fs::path src(const std::string& rel) { return fs::path(MPRISK_SOURCE_DIR) / rel; }

std::vector<double> log_uniform(std::mt19937_64& rng, std::size_t m, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    std::vector<double> a(m);
    for (auto& x : a) x = std::exp(u(rng));
    return a;
}

CostDistribution random_distribution(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> size(1, 10);
    std::uniform_real_distribution<double> cost(0.0, 500.0);
    std::vector<double> values(size(rng));
    for (auto& v : values) v = cost(rng);
    std::sort(values.begin(), values.end(), std::greater<>());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::exponential_distribution<double> e(1.0);
    std::vector<double> probs(values.size());
    double s = 0.0;
    for (auto& p : probs) s += (p = e(rng));
    for (auto& p : probs) p /= s;
    return {values, probs};
}

Outcome exceedance_symmetry() {
    const auto p = exceedance_probs(DirichletParams(std::vector<double>(10, 1.0)));
    double worst = 0.0;
    for (double x : p) worst = std::max(worst, std::abs(x - 0.1));
    return {worst <= 1e-6, fmt("max |P{V_k} - 0.1| = %.3g", worst)};
}

// Cells beyond 3 sigma are tolerated up to the expected count plus three Poisson
// standard deviations (about 0.27% of cells exceed 3 sigma by chance alone).
Outcome quadrature_vs_mc() {
    std::mt19937_64 gen(20240601);
    std::uniform_int_distribution<std::size_t> dim(2, 10);
    Rng rng(20240602);
    std::size_t cells = 0;
    std::size_t beyond = 0;
    double max_z = 0.0;
    double worst_mass = 0.0;
    for (int c = 0; c < 50; ++c) {
        const DirichletParams a(log_uniform(gen, dim(gen), 0.1, 50.0));
        const auto quad = exceedance_probs_detailed(a);
        worst_mass = std::max(worst_mass, std::abs(quad.raw_mass - 1.0));
        const auto mc = oracles::mc_exceedance(a, 1'000'000, rng);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double se = std::max(mc.std_errors[i], 1e-6);
            const double z = std::abs(quad.probs[i] - mc.probs[i]) / se;
            max_z = std::max(max_z, z);
            beyond += z > 3.0;
            ++cells;
        }
    }
    const double expected = static_cast<double>(cells) * std::erfc(3.0 / std::sqrt(2.0));
    const auto allowed = static_cast<std::size_t>(std::ceil(expected + 3.0 * std::sqrt(expected)));
    return {beyond <= allowed && worst_mass <= 1e-6,
            fmt("%zu cells, %zu beyond 3 sigma (allowed %zu), max |z| = %.2f, max |mass - 1| = %.2g", cells, beyond,
                allowed, max_z, worst_mass)};
}

Outcome two_label_closed_form() {
    const auto p = exceedance_probs(DirichletParams({2.0, 1.0}));
    const double err = std::max(std::abs(p[0] - 0.75), std::abs(p[1] - 0.25));
    return {err <= 1e-6, fmt("(%.10f, %.10f), max error %.2g", p[0], p[1], err)};
}

Outcome mle_recovery() {
    Rng rng(42);
    BeliefBatch batch;
    batch.beliefs = sample(DirichletParams({5.0, 2.0, 1.0}), rng, 10000);
    const auto fit = estimate_mle(batch);
    const double truth[3] = {5.0, 2.0, 1.0};
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(fit.params[i] / truth[i] - 1.0));
    return {fit.converged && worst <= 0.05 && fit.iterations <= 200,
            fmt("alpha = (%.4f, %.4f, %.4f), max rel error %.4f, %d iterations", fit.params[0], fit.params[1],
                fit.params[2], worst, fit.iterations)};
}

Outcome cvar_oracle() {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    double worst_mean = 0.0;
    std::size_t max_misses = 0;
    for (int c = 0; c < 1000; ++c) {
        const auto d = random_distribution(rng);
        for (int k = 0; k < 10; ++k) {
            const double eps = 1.0 - u(rng);
            worst = std::max(worst, std::abs(cvar(d, eps) - oracles::tail_cvar(d.values, d.probs, eps)));
        }
        double mean = 0.0;
        for (std::size_t j = 0; j < d.values.size(); ++j) mean += d.values[j] * d.probs[j];
        worst_mean = std::max(worst_mean, std::abs(cvar(d, 1.0) - mean));
        for (double f : {1.0, 0.5, 1e-3}) max_misses += cvar(d, d.probs.front() * f) != d.values.front();
    }
    return {worst <= 1e-9 && worst_mean <= 1e-12 && max_misses == 0,
            fmt("max |cvar - tail| = %.2g, eps = 1 mean error %.2g, eps <= p1 misses %zu", worst, worst_mean,
                max_misses)};
}

Outcome monotonicity_and_scaling() {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_real_distribution<double> scale(0.05, 20.0);
    std::size_t mono = 0;
    std::size_t scaling = 0;
    std::size_t argmin = 0;
    for (int c = 0; c < 500; ++c) {
        const auto d = random_distribution(rng);
        std::vector<double> eps(10);
        for (auto& e : eps) e = 1.0 - u(rng);
        std::sort(eps.begin(), eps.end());
        for (std::size_t k = 1; k < eps.size(); ++k) mono += cvar(d, eps[k]) > cvar(d, eps[k - 1]);
        const double s = scale(rng);
        CostDistribution sd = d;
        for (auto& v : sd.values) v *= s;
        for (double e : eps) scaling += std::abs(cvar(sd, e) - s * cvar(d, e)) > 1e-12 * s * d.values.front();
    }
    const auto cm = load_cost_csv(src("costs/gtsrb10.csv")).matrix;
    for (int c = 0; c < 500; ++c) {
        const auto cells = exceedance_probs(DirichletParams(log_uniform(rng, 10, 0.2, 50.0)));
        const double s = scale(rng);
        const double eps = 1.0 - u(rng);
        const auto base = risk_profile_from_cells(cells, cm, eps);
        const auto scaled = risk_profile_from_cells(cells, cm.scaled(s), eps);
        for (std::size_t i = 0; i < 10; ++i) {
            scaling += std::abs(scaled.values[i] - s * base.values[i]) > 1e-12 * s * std::max(1.0, base.values[i]);
        }
        argmin += decide(base.values, 0, 0, 0).argmin != decide(scaled.values, 0, 0, 0).argmin;
    }
    return {mono == 0 && scaling == 0 && argmin == 0,
            fmt("violations: monotonicity %zu, scaling %zu, profile argmin %zu", mono, scaling, argmin)};
}

Outcome accumulation() {
    double worst = 0.0;
    for (int mi = 1; mi <= 9; ++mi) {
        for (std::size_t k = 1; k <= 100; ++k) {
            const auto w = accumulation_weights(mi / 10.0, k);
            worst = std::max(worst, std::abs(std::accumulate(w.begin(), w.end(), 0.0) - 1.0));
        }
    }
    bool identity = true;
    bool fixed_point = true;
    for (int mi = 1; mi <= 9; ++mi) {
        AccumulatedRiskState one(mi / 10.0);
        const RiskProfile p{0.1, 1.0, {17.25, 0.5, 123.0}};
        identity = identity && one.accumulate(p) == p.values;
        AccumulatedRiskState many(mi / 10.0);
        for (int k = 0; k < 100; ++k) {
            const auto acc = many.accumulate(RiskProfile{0.1, double(k), {42.5, 3.0}});
            fixed_point = fixed_point && std::abs(acc[0] - 42.5) <= 1e-12 * 42.5 && std::abs(acc[1] - 3.0) <= 1e-12 * 3.0;
        }
    }
    return {worst <= 1e-12 && identity && fixed_point,
            fmt("max |sum w - 1| = %.2g, K=1 identity %s, constant fixed point %s", worst, identity ? "ok" : "broken",
                fixed_point ? "ok" : "broken")};
}

LoadedRun default_run() { return load_run(load_config(src("configs/default.cfg"))); }

Outcome eta_tradeoff() {
    const auto run = default_run();
    auto setup = run.experiment();
    const auto rows = eta_sweep(setup, run.cost_matrix(), run.actions, {1.0, 10.0, 50.0}, 100);
    bool monotone = true;
    for (std::size_t i = 1; i < rows.size(); ++i) monotone = monotone && rows[i].median <= rows[i - 1].median;
    return {monotone, fmt("median T - t_exec: eta=1 -> %g s, eta=10 -> %g s, eta=50 -> %g s", rows[0].median,
                          rows[1].median, rows[2].median)};
}

Outcome risk_vs_perception() {
    const auto run = default_run();
    const auto& cfg = run.config;
    const auto setup = run.experiment();
    const std::size_t trials = std::max<std::size_t>(500, cfg.compare_trials);
    std::vector<AccuracyPoint> noise;
    for (double b : cfg.noise_sweep) noise.push_back({1.0, b});
    std::vector<AccuracyPoint> quality;
    for (double r : cfg.quality_sweep) quality.push_back({r, cfg.quality_sweep_noise});
    auto rows = compare_outputs(setup, run.cost_matrix(), run.actions, noise, SweepKind::Noise, trials);
    const auto q = compare_outputs(setup, run.cost_matrix(), run.actions, quality, SweepKind::Quality, trials);

    // The noisiest point is the largest noise level of the noise sweep.
    const auto noisiest = std::max_element(rows.begin(), rows.end(),
                                           [](const auto& a, const auto& b) { return a.noise < b.noise; });
    const double noisy_gap = noisiest->risk_accuracy - noisiest->perception_accuracy;
    rows.insert(rows.end(), q.begin(), q.end());

    std::size_t behind = 0;
    double worst_gap = INFINITY;
    std::string table;
    for (const auto& r : rows) {
        const double gap = r.risk_accuracy - r.perception_accuracy;
        behind += gap < -0.02;
        worst_gap = std::min(worst_gap, gap);
        table += fmt(" [%s b=%g r=%g risk %.3f perc %.3f mean-perc %.3f]", r.kind == SweepKind::Noise ? "noise" : "quality",
                     r.noise, r.resolution, r.risk_accuracy, r.perception_accuracy, r.perception_mean_accuracy);
    }
    return {behind == 0 && noisy_gap >= 0.05,
            fmt("%zu trials/point; points behind by > 2%%: %zu; worst gap %+.3f; gap at noisiest %+.3f;", trials, behind,
                worst_gap, noisy_gap) +
                table};
}

Outcome table1_fidelity() {
    const auto path = src("costs/gtsrb10.csv");
    const std::string raw = text::read_file(path);
    const auto table = parse_cost_csv(raw);
    const bool round_trip = format_cost_csv(table) == raw;
    const auto& cm = table.matrix;
    const auto& ls = cm.labels();
    const auto at = ordered_cost_vector(cm, ls.index_of("AT"));
    const bool at_values = at.values == std::vector<double>{123, 117, 110, 50, 45.5, 41.5, 39, 30, 0};
    const bool at_group = at.groups[1] == std::vector<std::size_t>{ls.index_of("DP"), ls.index_of("DE")};
    const auto ss = ordered_cost_vector(cm, ls.index_of("SS"));
    const auto it = std::find(ss.values.begin(), ss.values.end(), 82.0);
    const bool ss_group = it != ss.values.end() &&
                          ss.groups[it - ss.values.begin()] == std::vector<std::size_t>{ls.index_of("RR"), ls.index_of("CO")};
    return {round_trip && at_values && at_group && ss_group,
            fmt("round-trip %s, AT vector %s, AT 117-group %s, SS 82-group %s", round_trip ? "exact" : "differs",
                at_values ? "ok" : "wrong", at_group ? "ok" : "wrong", ss_group ? "ok" : "wrong")};
}

Outcome determinism() {
    const auto base = fs::temp_directory_path() / "mprisk_acceptance_determinism";
    fs::remove_all(base);
    const std::string cfg = src("configs/default.cfg").string();
    auto run = [&](const std::string& name, const std::string& threads) {
        std::ostringstream out;
        std::ostringstream err;
        return cli::run_cli({"--config", cfg, "--seed", "7", "--threads", threads, "--out", (base / name).string(),
                             "simulate"},
                            out, err);
    };
    const int a = run("first", "1");
    const int b = run("second", "1");
    const int c = run("threaded", "4");
    if (a != 0 || b != 0 || c != 0) return {false, fmt("simulate exit codes %d %d %d", a, b, c)};
    std::size_t files = 0;
    std::size_t bytes = 0;
    std::size_t diffs = 0;
    for (const auto& entry : fs::directory_iterator(base / "first")) {
        const auto name = entry.path().filename();
        const auto ref = text::read_file(entry.path());
        diffs += text::read_file(base / "second" / name) != ref;
        diffs += text::read_file(base / "threaded" / name) != ref;
        ++files;
        bytes += ref.size();
    }
    fs::remove_all(base);
    return {files >= 6 && diffs == 0,
            fmt("%zu files, %zu bytes; differing files across runs/thread counts: %zu", files, bytes, diffs)};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "exceedance symmetry, uniform alpha, m = 10", 1.0, exceedance_symmetry},
        {2, "quadrature vs 1e6-draw Monte Carlo on 50 random alpha", 60.0, quadrature_vs_mc},
        {3, "m = 2 closed form, alpha = (2, 1)", 0.0, two_label_closed_form},
        {4, "Dirichlet MLE recovery, alpha* = (5, 2, 1), q = 1e4", 0.0, mle_recovery},
        {5, "CVaR closed form vs tail-averaging definition", 0.0, cvar_oracle},
        {6, "CVaR monotone in epsilon, cost-scaling equivariance", 0.0, monotonicity_and_scaling},
        {7, "accumulated-risk weights, identity, fixed point", 0.0, accumulation},
        {8, "eta trade-off: median T - t_exec nonincreasing in eta", 120.0, eta_tradeoff},
        {9, "risk output vs perception output action accuracy", 300.0, risk_vs_perception},
        {10, "cost table fidelity and CSV round-trip", 0.0, table1_fidelity},
        {11, "simulate determinism across runs and thread counts", 0.0, determinism},
    };

    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));

    int failures = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = c.budget_s == 0.0 || secs < c.budget_s;
        const bool pass = o.pass && in_time;
        failures += !pass;
        std::printf("%s [%02d] %s: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(), secs,
                    in_time ? "" : fmt(", over the %.0f s budget", c.budget_s).c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
