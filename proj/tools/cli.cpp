#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mprisk/belief_csv.hpp"
#include "mprisk/config.hpp"
#include "mprisk/error.hpp"
#include "mprisk/oracles.hpp"
#include "mprisk/text_io.hpp"

namespace mprisk::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;
using text::format_double;

constexpr const char* kUnit = "k";

struct Overrides {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<double> epsilon;
    std::optional<double> mu;
    std::optional<double> eta;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<std::size_t> threads;
};

RunConfig resolve_config(const Overrides& o) {
    RunConfig cfg = load_config(o.config.empty() ? fs::path(MPRISK_DEFAULT_CONFIG) : fs::path(o.config));
    if (o.seed) cfg.seed = *o.seed;
    if (o.trials) cfg.trials = *o.trials;
    if (o.epsilon) cfg.epsilon = *o.epsilon;
    if (o.mu) cfg.mu = *o.mu;
    if (o.eta) cfg.eta = *o.eta;
    if (o.out) cfg.out_dir = *o.out;
    if (o.format) cfg.format = *o.format;
    if (o.threads) cfg.threads = *o.threads;
    return cfg;
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
}

// Writes to <out>/<name> when --out was given, else to the stream.
void emit(const std::string& content, const std::optional<std::string>& out_dir, const std::string& name,
          std::ostream& out) {
    if (out_dir) {
        ensure_dir(*out_dir);
        text::write_file(fs::path(*out_dir) / name, content);
    } else {
        out << content;
    }
}

json label_array(const LabelSet& labels) { return json(labels.labels()); }

std::string csv_row(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += fields[i];
    }
    return line + '\n';
}

// --- estimate ---------------------------------------------------------------

struct EstimateArgs {
    std::string beliefs;
};

int cmd_estimate(const EstimateArgs& a, const Overrides& o, std::ostream& out) {
    const RunConfig cfg = resolve_config(o);
    if (cfg.format != "json" && cfg.format != "csv") throw ValidationError("--format must be json or csv");
    const auto traj = load_belief_csv(a.beliefs);
    const auto batches = group_intervals(traj, cfg.horizon, cfg.intervals);

    json intervals = json::array();
    std::string csv;
    {
        std::vector<std::string> header{"t_end", "q", "iterations", "converged"};
        for (const auto& l : traj.labels.labels()) header.push_back("alpha_" + l);
        csv += csv_row(header);
    }
    for (const auto& batch : batches) {
        const auto fit = estimate_mle(batch);
        const auto alpha = fit.params.alpha();
        intervals.push_back({{"t_end", batch.interval_end},
                             {"q", batch.beliefs.size()},
                             {"alpha", std::vector<double>(alpha.begin(), alpha.end())},
                             {"iterations", fit.iterations},
                             {"converged", fit.converged}});
        std::vector<std::string> row{format_double(batch.interval_end), std::to_string(batch.beliefs.size()),
                                     std::to_string(fit.iterations), fit.converged ? "true" : "false"};
        for (double v : alpha) row.push_back(format_double(v));
        csv += csv_row(row);
    }
    if (cfg.format == "csv") {
        emit(csv, o.out, "estimate.csv", out);
    } else {
        json doc{{"labels", label_array(traj.labels)}, {"intervals", intervals}};
        emit(doc.dump(2) + "\n", o.out, "estimate.json", out);
    }
    return 0;
}

// --- risk -------------------------------------------------------------------

struct RiskArgs {
    std::string alpha;
    std::string beliefs;
    std::string costs;
    std::optional<double> accumulate;
};

std::vector<double> numbers(const json& j, const std::string& what) {
    if (!j.is_array()) throw ValidationError(what + " must be an array of numbers");
    std::vector<double> v;
    for (const auto& x : j) {
        if (!x.is_number()) throw ValidationError(what + " must be an array of numbers");
        v.push_back(x.get<double>());
    }
    return v;
}

// Accepts a bare array, {"alpha": [...]}, or the output of `estimate`.
std::vector<std::pair<double, DirichletParams>> read_alpha_json(const fs::path& path) {
    json doc;
    try {
        doc = json::parse(text::read_file(path));
    } catch (const json::parse_error& e) {
        throw ValidationError("alpha JSON '" + path.string() + "': " + e.what());
    }
    std::vector<std::pair<double, DirichletParams>> out;
    if (doc.is_array()) {
        out.emplace_back(0.0, DirichletParams(numbers(doc, "alpha")));
    } else if (doc.is_object() && doc.contains("alpha")) {
        out.emplace_back(doc.value("t_end", 0.0), DirichletParams(numbers(doc["alpha"], "alpha")));
    } else if (doc.is_object() && doc.contains("intervals") && doc["intervals"].is_array()) {
        for (const auto& iv : doc["intervals"]) {
            if (!iv.is_object() || !iv.contains("alpha")) throw ValidationError("interval entry without alpha");
            out.emplace_back(iv.value("t_end", 0.0), DirichletParams(numbers(iv["alpha"], "alpha")));
        }
    } else {
        throw ValidationError("alpha JSON must be an array, {\"alpha\": [...]}, or estimate output");
    }
    if (out.empty()) throw ValidationError("alpha JSON holds no concentration vectors");
    return out;
}

int cmd_risk(const RiskArgs& a, const Overrides& o, std::ostream& out) {
    RunConfig cfg = resolve_config(o);
    if (!a.costs.empty()) cfg.cost_matrix = a.costs;
    if (!(cfg.epsilon > 0.0 && cfg.epsilon <= 1.0)) throw ValidationError("--epsilon must lie in (0, 1]");
    if (cfg.format != "json" && cfg.format != "csv") throw ValidationError("--format must be json or csv");
    if (a.alpha.empty() == a.beliefs.empty()) throw ValidationError("exactly one of --alpha or --beliefs is required");
    if (a.accumulate && !(*a.accumulate > 0.0 && *a.accumulate < 1.0)) {
        throw ValidationError("--accumulate must lie in (0, 1)");
    }

    const CostTable costs = load_cost_csv(cfg.cost_matrix);
    const CostMatrix& cm = costs.matrix;
    const LabelSet& labels = cm.labels();

    std::vector<std::pair<double, DirichletParams>> steps;
    if (!a.alpha.empty()) {
        steps = read_alpha_json(a.alpha);
    } else {
        const auto traj = load_belief_csv(a.beliefs);
        if (traj.labels != labels) throw ValidationError("belief CSV labels do not match the cost matrix labels");
        for (const auto& batch : group_intervals(traj, cfg.horizon, cfg.intervals)) {
            steps.emplace_back(batch.interval_end, estimate_mle(batch).params);
        }
    }
    for (const auto& [t, p] : steps) {
        if (p.size() != cm.size()) {
            throw ValidationError("alpha has " + std::to_string(p.size()) + " components, cost matrix has " +
                                  std::to_string(cm.size()) + " labels");
        }
    }

    std::optional<AccumulatedRiskState> state;
    if (a.accumulate) state.emplace(*a.accumulate);

    json profiles = json::array();
    std::vector<std::string> header{"t_end", "label", "risk"};
    if (state) header.push_back("accumulated");
    std::string csv = csv_row(header);
    for (const auto& [t, params] : steps) {
        const auto profile = risk_profile(params, cm, cfg.epsilon, t,
                                          [&](const DirichletParams& p) { return exceedance_probs(p, cfg.quadrature_tol); });
        const auto d = decide(profile.values, cfg.eta, t, cfg.horizon);
        json entry{{"t_end", t},
                   {"alpha", std::vector<double>(params.alpha().begin(), params.alpha().end())},
                   {"risk", profile.values},
                   {"argmin", labels[d.argmin]},
                   {"tie", d.tie}};
        std::vector<double> acc;
        if (state) {
            acc = state->accumulate(profile);
            const auto da = decide(acc, cfg.eta, t, cfg.horizon);
            entry["accumulated"] = acc;
            entry["accumulated_argmin"] = labels[da.argmin];
            entry["gated"] = da.gated;
            entry["t_exec"] = da.t_exec;
        }
        profiles.push_back(entry);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            std::vector<std::string> row{format_double(t), labels[i], format_double(profile.values[i])};
            if (state) row.push_back(format_double(acc[i]));
            csv += csv_row(row);
        }
    }

    if (cfg.format == "csv") {
        emit(csv, o.out, "risk.csv", out);
    } else {
        json doc{{"epsilon", cfg.epsilon}, {"unit", kUnit}, {"labels", label_array(labels)}};
        if (a.accumulate) {
            doc["mu"] = *a.accumulate;
            doc["eta"] = cfg.eta;
        }
        doc["profiles"] = profiles;
        emit(doc.dump(2) + "\n", o.out, "risk.json", out);
    }
    return 0;
}

// --- simulate ---------------------------------------------------------------

struct SimulateArgs {
    std::optional<std::size_t> compare_trials;
    bool no_sweeps = false;
};

json trajectory_json(const TrajectoryRecord& rec, std::size_t trial, std::uint64_t seed, const LabelSet& labels) {
    json intervals = json::array();
    for (const auto& iv : rec.intervals) {
        intervals.push_back({{"step", iv.step},
                             {"t", iv.t},
                             {"generator_alpha", std::vector<double>(iv.generator_alpha.alpha().begin(),
                                                                      iv.generator_alpha.alpha().end())},
                             {"alpha", std::vector<double>(iv.estimate.params.alpha().begin(),
                                                            iv.estimate.params.alpha().end())},
                             {"mle_iterations", iv.estimate.iterations},
                             {"mle_converged", iv.estimate.converged},
                             {"risk", iv.profile.values},
                             {"accumulated", iv.accumulated},
                             {"argmin", labels[iv.decision.argmin]},
                             {"tie", iv.decision.tie},
                             {"gated", iv.decision.gated}});
    }
    json j{{"trial", trial},
           {"seed", seed},
           {"ground_truth", labels[rec.ground_truth]},
           {"unit", kUnit},
           {"intervals", intervals}};
    j["decision_step"] = rec.decision_step ? json(*rec.decision_step) : json(nullptr);
    j["o_t"] = labels[rec.final_label];
    j["gated"] = rec.gated;
    j["t_exec"] = rec.t_exec;
    j["action"] = rec.action;
    j["action_correct"] = rec.action_correct;
    return j;
}

std::string accuracy_csv(const std::vector<AccuracyRow>& rows, const LabelSet& labels) {
    std::string csv = csv_row({"noise", "resolution", "trials", "perception_accuracy", "perception_mean_accuracy",
                               "risk_accuracy", "modal_risk_output"});
    for (const auto& r : rows) {
        csv += csv_row({format_double(r.noise), format_double(r.resolution), std::to_string(r.trials),
                        format_double(r.perception_accuracy), format_double(r.perception_mean_accuracy),
                        format_double(r.risk_accuracy), labels[r.modal_risk_output]});
    }
    return csv;
}

int cmd_simulate(const SimulateArgs& a, const Overrides& o, std::ostream& out) {
    RunConfig cfg = resolve_config(o);
    if (a.compare_trials) cfg.compare_trials = *a.compare_trials;
    const LoadedRun run = load_run(cfg);
    const auto setup = run.experiment();
    const auto& labels = run.labels();
    const fs::path dir = cfg.out_dir;
    ensure_dir(dir);

    const auto records = run_trials(setup, run.cost_matrix(), run.actions, cfg.trials);

    std::string jsonl;
    std::string acc = csv_row({"trial", "ground_truth", "step", "t", "label", "risk", "accumulated"});
    std::size_t gated = 0;
    std::size_t correct = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        jsonl += trajectory_json(rec, i, trial_seed(cfg.seed, i), labels).dump() + "\n";
        gated += rec.gated;
        correct += rec.action_correct;
        for (const auto& iv : rec.intervals) {
            for (std::size_t l = 0; l < labels.size(); ++l) {
                acc += csv_row({std::to_string(i), labels[rec.ground_truth], std::to_string(iv.step),
                                format_double(iv.t), labels[l], format_double(iv.profile.values[l]),
                                format_double(iv.accumulated[l])});
            }
        }
    }
    text::write_file(dir / "trajectories.jsonl", jsonl);
    text::write_file(dir / "accumulated_risk.csv", acc);

    const auto sweep = eta_sweep_from_records(records, cfg.eta_sweep, cfg.horizon);
    std::string hist = csv_row({"eta", "time_to_decide", "count"});
    std::string summary = csv_row({"eta", "trials", "median_time_to_decide", "gated_fraction"});
    for (const auto& row : sweep) {
        std::map<double, std::size_t> counts;
        for (std::size_t k = 1; k <= cfg.intervals; ++k) counts[static_cast<double>(k) * cfg.tau()] = 0;
        std::size_t gated_here = 0;
        for (std::size_t i = 0; i < records.size(); ++i) {
            ++counts[row.time_to_decide[i]];
            gated_here += first_gate(records[i], row.eta, cfg.horizon).step.has_value();
        }
        for (const auto& [v, c] : counts) hist += csv_row({format_double(row.eta), format_double(v), std::to_string(c)});
        summary += csv_row({format_double(row.eta), std::to_string(records.size()), format_double(row.median),
                            format_double(static_cast<double>(gated_here) / static_cast<double>(records.size()))});
    }
    text::write_file(dir / "time_to_decide.csv", hist);
    text::write_file(dir / "eta_summary.csv", summary);

    if (!a.no_sweeps) {
        std::vector<AccuracyPoint> noise_points;
        for (double b : cfg.noise_sweep) noise_points.push_back({1.0, b});
        std::vector<AccuracyPoint> quality_points;
        for (double r : cfg.quality_sweep) quality_points.push_back({r, cfg.quality_sweep_noise});
        const auto& cm = run.cost_matrix();
        text::write_file(dir / "accuracy_noise.csv",
                         accuracy_csv(compare_outputs(setup, cm, run.actions, noise_points, SweepKind::Noise,
                                                      cfg.compare_trials),
                                      labels));
        text::write_file(dir / "accuracy_quality.csv",
                         accuracy_csv(compare_outputs(setup, cm, run.actions, quality_points, SweepKind::Quality,
                                                      cfg.compare_trials),
                                      labels));
    }

    json doc{{"trials", records.size()},
             {"seed", cfg.seed},
             {"epsilon", cfg.epsilon},
             {"mu", cfg.mu},
             {"eta", cfg.eta},
             {"unit", kUnit},
             {"gated_fraction", static_cast<double>(gated) / static_cast<double>(records.size())},
             {"action_accuracy", static_cast<double>(correct) / static_cast<double>(records.size())},
             {"out", dir.string()}};
    if (cfg.format == "csv") {
        out << csv_row({"trials", "gated_fraction", "action_accuracy"})
            << csv_row({std::to_string(records.size()), format_double(doc["gated_fraction"].get<double>()),
                        format_double(doc["action_accuracy"].get<double>())});
    } else {
        out << doc.dump(2) << "\n";
    }
    return 0;
}

// --- verify -----------------------------------------------------------------

struct Check {
    std::string name;
    bool pass = false;
    json detail;
};

// Number of |z| > sigma exceedances tolerated among `cells` independent tests:
// the expected count plus three Poisson standard deviations, rounded up.
std::size_t exceedance_budget(std::size_t cells, double sigma) {
    const double expected = static_cast<double>(cells) * std::erfc(sigma / std::sqrt(2.0));
    return static_cast<std::size_t>(std::ceil(expected + 3.0 * std::sqrt(expected)));
}

std::vector<DirichletParams> verify_params(const LoadedRun& run, Rng& rng) {
    const auto& cfg = run.config;
    std::vector<DirichletParams> cases;
    std::uniform_int_distribution<std::size_t> dim(2, 10);
    std::uniform_real_distribution<double> log_alpha(std::log(0.1), std::log(100.0));
    for (std::size_t c = 0; c < cfg.verify_cases; ++c) {
        std::vector<double> alpha(dim(rng));
        for (auto& x : alpha) x = std::exp(log_alpha(rng));
        cases.emplace_back(std::move(alpha));
    }
    // The concentrations the configured experiment actually produces.
    const auto setup = run.experiment();
    GeneratorModel model = setup.model;
    model.ground_truth = 0;
    for (std::size_t k = 1; k <= cfg.intervals; ++k) {
        cases.push_back(interval_params(model, setup.schedule, run.labels().size(), k));
    }
    return cases;
}

std::vector<Check> run_checks(const LoadedRun& run) {
    const auto& cfg = run.config;
    Rng rng(cfg.seed);
    std::vector<Check> checks;

    const auto cases = verify_params(run, rng);
    std::size_t cells = 0;
    std::size_t beyond = 0;
    double max_z = 0.0;
    double worst_mass = 0.0;
    for (const auto& params : cases) {
        const auto quad = exceedance_probs_detailed(params, cfg.quadrature_tol);
        worst_mass = std::max(worst_mass, std::abs(quad.raw_mass - 1.0));
        const auto mc = oracles::mc_exceedance(params, cfg.verify_mc_draws, rng);
        const double n = static_cast<double>(mc.draws);
        for (std::size_t i = 0; i < params.size(); ++i) {
            // Standard error under the quadrature value, floored at one draw.
            const double p = quad.probs[i];
            const double se = std::sqrt(std::max(p * (1.0 - p), 1.0 / n) / n);
            const double z = std::abs(mc.probs[i] - p) / se;
            max_z = std::max(max_z, z);
            beyond += z > cfg.verify_sigma;
            ++cells;
        }
    }
    const auto budget = exceedance_budget(cells, cfg.verify_sigma);
    checks.push_back({"exceedance_vs_monte_carlo",
                      beyond <= budget,
                      {{"cases", cases.size()},
                       {"cells", cells},
                       {"draws", cfg.verify_mc_draws},
                       {"sigma", cfg.verify_sigma},
                       {"cells_beyond_sigma", beyond},
                       {"allowed", budget},
                       {"max_abs_z", max_z}}});
    checks.push_back({"exceedance_mass",
                      worst_mass <= cfg.verify_mass_tol,
                      {{"max_abs_mass_error", worst_mass}, {"tolerance", cfg.verify_mass_tol}}});

    std::uniform_int_distribution<std::size_t> size(1, 12);
    std::uniform_real_distribution<double> cost(0.0, 200.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    std::size_t evaluations = 0;
    for (std::size_t c = 0; c < cfg.verify_cvar_cases; ++c) {
        std::vector<double> values(size(rng));
        for (auto& v : values) v = std::round(cost(rng) * 2.0) / 2.0;
        std::sort(values.begin(), values.end(), std::greater<>());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        std::vector<double> probs(values.size());
        std::gamma_distribution<double> g(0.5, 1.0);
        double total = 0.0;
        for (auto& p : probs) total += (p = g(rng));
        if (!(total > 0.0)) continue;
        for (auto& p : probs) p /= total;

        std::vector<double> eps{1.0, 1.0 - unit(rng)};
        double cum = 0.0;
        for (double p : probs) {
            cum += p;
            if (cum > 0.0 && cum < 1.0) eps.push_back(cum);
        }
        const CostDistribution dist{values, probs};
        for (double e : eps) {
            const double scale = std::max(1.0, values.front());
            worst = std::max(worst, std::abs(cvar(dist, e) - oracles::tail_cvar(values, probs, e)) / scale);
            ++evaluations;
        }
    }
    checks.push_back({"cvar_vs_tail_definition",
                      worst <= cfg.verify_cvar_tol,
                      {{"evaluations", evaluations}, {"max_rel_deviation", worst}, {"tolerance", cfg.verify_cvar_tol}}});
    return checks;
}

int cmd_verify(const Overrides& o, std::ostream& out) {
    const LoadedRun run = load_run(resolve_config(o));
    const auto checks = run_checks(run);
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });

    std::string report;
    if (run.config.format == "json") {
        json arr = json::array();
        for (const auto& c : checks) arr.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        report = json{{"pass", ok}, {"checks", arr}}.dump(2) + "\n";
    } else {
        report = csv_row({"check", "pass", "detail"});
        for (const auto& c : checks) {
            std::string detail = c.detail.dump();
            std::replace(detail.begin(), detail.end(), ',', ';');
            report += csv_row({c.name, c.pass ? "true" : "false", detail});
        }
    }
    emit(report, o.out, run.config.format == "json" ? "verify.json" : "verify.csv", out);
    return ok ? 0 : static_cast<int>(ErrorKind::Numerical);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Risk of misperception from Dirichlet belief estimates", "mprisk"};
    app.require_subcommand(1);
    app.fallthrough();

    Overrides o;
    app.add_option("--config", o.config, "Run configuration file (key = value)");
    app.add_option("--seed", o.seed, "Base random seed; trial i uses seed + i");
    app.add_option("--trials", o.trials, "Number of simulated approaches");
    app.add_option("--epsilon", o.epsilon, "CVaR tail mass in (0, 1]");
    app.add_option("--mu", o.mu, "Accumulation discount in (0, 1)");
    app.add_option("--eta", o.eta, "Risk threshold, thousands of currency units");
    app.add_option("--out", o.out, "Output directory");
    app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);

    EstimateArgs est;
    auto* estimate = app.add_subcommand("estimate", "Fit Dirichlet concentrations per time interval");
    estimate->add_option("--beliefs", est.beliefs, "Belief CSV with header t,p_<label>,...")->required();

    RiskArgs risk_args;
    auto* risk = app.add_subcommand("risk", "Per-label CVaR of misperception");
    risk->add_option("--alpha", risk_args.alpha, "Concentration JSON (array, {\"alpha\":...}, or estimate output)");
    risk->add_option("--beliefs", risk_args.beliefs, "Belief CSV; concentrations are estimated per interval");
    risk->add_option("--costs", risk_args.costs, "Cost matrix CSV (defaults to the config's)");
    risk->add_option("--accumulate", risk_args.accumulate, "Also report the accumulated risk with this mu");

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Synthetic approach experiments");
    simulate->add_option("--compare-trials", sim.compare_trials, "Trials per accuracy-sweep point");
    simulate->add_flag("--no-sweeps", sim.no_sweeps, "Skip the accuracy sweeps");

    auto* verify = app.add_subcommand("verify", "Cross-check quadrature and CVaR against brute-force oracles");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ErrorKind::Validation);
    }

    try {
        if (estimate->parsed()) return cmd_estimate(est, o, out);
        if (risk->parsed()) return cmd_risk(risk_args, o, out);
        if (simulate->parsed()) return cmd_simulate(sim, o, out);
        if (verify->parsed()) return cmd_verify(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(e.kind());
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ErrorKind::Io);
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ErrorKind::Validation);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ErrorKind::Numerical);
    }
    return static_cast<int>(ErrorKind::Validation);
}

}  // namespace mprisk::cli
