#include "mprisk/config.hpp"

#include <cmath>
#include <functional>

#include "mprisk/error.hpp"
#include "mprisk/text_io.hpp"

namespace mprisk {

namespace {

std::vector<double> parse_list(const std::string& value, const std::string& key) {
    std::vector<double> out;
    for (const auto& f : text::split(value, ',')) out.push_back(text::parse_double(f, key));
    return out;
}

std::size_t parse_count(const std::string& value, const std::string& key) {
    const auto v = text::parse_int(value, key);
    if (v < 0) throw ValidationError(key + ": must be nonnegative");
    return static_cast<std::size_t>(v);
}

void require(bool ok, const std::string& field, const std::string& rule) {
    if (!ok) throw ValidationError("config field '" + field + "': " + rule);
}

}  // namespace

void RunConfig::validate() const {
    require(epsilon > 0.0 && epsilon <= 1.0, "epsilon", "must lie in (0, 1]");
    require(mu > 0.0 && mu < 1.0, "mu", "must lie in (0, 1)");
    require(eta >= 0.0, "eta", "must be >= 0");
    require(q >= 2, "q", "must be >= 2");
    require(intervals >= 1, "intervals", "must be >= 1");
    require(horizon > 0.0 && std::isfinite(horizon), "T", "must be positive");
    require(b0 >= 0.0, "b0", "must be >= 0");
    require(noise_ref > 0.0, "noise_ref", "must be positive");
    require(s_min > 0.0, "s_min", "must be positive");
    require(s_max > s_min, "s_max", "must exceed s_min");
    require(kappa > 0.0, "kappa", "must be positive");
    require(trials >= 1, "trials", "must be >= 1");
    require(threads >= 1, "threads", "must be >= 1");
    require(quadrature_tol > 0.0, "quadrature_tol", "must be positive");
    require(!cost_matrix.empty(), "cost_matrix", "is required");
    require(!action_map.empty(), "action_map", "is required");
    require(std::filesystem::exists(cost_matrix), "cost_matrix", "file '" + cost_matrix.string() + "' does not exist");
    require(std::filesystem::exists(action_map), "action_map", "file '" + action_map.string() + "' does not exist");
    for (double e : eta_sweep) require(e >= 0.0, "eta_sweep", "values must be >= 0");
    for (double b : noise_sweep) require(b >= 0.0, "noise_sweep", "values must be >= 0");
    for (double r : quality_sweep) require(r >= 0.0 && r <= 1.0, "quality_sweep", "values must lie in [0, 1]");
    require(quality_sweep_noise >= 0.0, "quality_sweep_noise", "must be >= 0");
    require(compare_trials >= 1, "compare_trials", "must be >= 1");
    require(verify_mc_draws >= 10000, "verify_mc_draws", "must be >= 10000");
    require(verify_sigma > 0.0, "verify_sigma", "must be positive");
    require(verify_cvar_tol > 0.0, "verify_cvar_tol", "must be positive");
    require(verify_mass_tol > 0.0, "verify_mass_tol", "must be positive");
    require(format == "json" || format == "csv", "format", "must be 'json' or 'csv'");
}

RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
    RunConfig cfg;
    auto path_of = [&](const std::string& v) {
        std::filesystem::path p(v);
        return p.is_absolute() ? p : base_dir / p;
    };

    using Setter = std::function<void(const std::string&, const std::string&)>;
    const std::map<std::string, Setter> setters{
        {"labels", [&](auto& v, auto&) { cfg.labels = text::split(v, ','); }},
        {"T", [&](auto& v, auto& k) { cfg.horizon = text::parse_double(v, k); }},
        {"intervals", [&](auto& v, auto& k) { cfg.intervals = parse_count(v, k); }},
        {"q", [&](auto& v, auto& k) { cfg.q = parse_count(v, k); }},
        {"epsilon", [&](auto& v, auto& k) { cfg.epsilon = text::parse_double(v, k); }},
        {"mu", [&](auto& v, auto& k) { cfg.mu = text::parse_double(v, k); }},
        {"eta", [&](auto& v, auto& k) { cfg.eta = text::parse_double(v, k); }},
        {"b0", [&](auto& v, auto& k) { cfg.b0 = text::parse_double(v, k); }},
        {"noise_ref", [&](auto& v, auto& k) { cfg.noise_ref = text::parse_double(v, k); }},
        {"s_min", [&](auto& v, auto& k) { cfg.s_min = text::parse_double(v, k); }},
        {"s_max", [&](auto& v, auto& k) { cfg.s_max = text::parse_double(v, k); }},
        {"kappa", [&](auto& v, auto& k) { cfg.kappa = text::parse_double(v, k); }},
        {"ground_truth", [&](auto& v, auto&) { cfg.ground_truth = v; }},
        {"seed", [&](auto& v, auto& k) { cfg.seed = static_cast<std::uint64_t>(parse_count(v, k)); }},
        {"trials", [&](auto& v, auto& k) { cfg.trials = parse_count(v, k); }},
        {"threads", [&](auto& v, auto& k) { cfg.threads = parse_count(v, k); }},
        {"quadrature_tol", [&](auto& v, auto& k) { cfg.quadrature_tol = text::parse_double(v, k); }},
        {"cost_matrix", [&](auto& v, auto&) { cfg.cost_matrix = path_of(v); }},
        {"action_map", [&](auto& v, auto&) { cfg.action_map = path_of(v); }},
        {"eta_sweep", [&](auto& v, auto& k) { cfg.eta_sweep = parse_list(v, k); }},
        {"noise_sweep", [&](auto& v, auto& k) { cfg.noise_sweep = parse_list(v, k); }},
        {"quality_sweep", [&](auto& v, auto& k) { cfg.quality_sweep = parse_list(v, k); }},
        {"quality_sweep_noise", [&](auto& v, auto& k) { cfg.quality_sweep_noise = text::parse_double(v, k); }},
        {"compare_trials", [&](auto& v, auto& k) { cfg.compare_trials = parse_count(v, k); }},
        {"verify_cases", [&](auto& v, auto& k) { cfg.verify_cases = parse_count(v, k); }},
        {"verify_mc_draws", [&](auto& v, auto& k) { cfg.verify_mc_draws = parse_count(v, k); }},
        {"verify_sigma", [&](auto& v, auto& k) { cfg.verify_sigma = text::parse_double(v, k); }},
        {"verify_cvar_cases", [&](auto& v, auto& k) { cfg.verify_cvar_cases = parse_count(v, k); }},
        {"verify_cvar_tol", [&](auto& v, auto& k) { cfg.verify_cvar_tol = text::parse_double(v, k); }},
        {"verify_mass_tol", [&](auto& v, auto& k) { cfg.verify_mass_tol = text::parse_double(v, k); }},
        {"out", [&](auto& v, auto&) { cfg.out_dir = path_of(v); }},
        {"format", [&](auto& v, auto&) { cfg.format = v; }},
    };

    std::size_t line_no = 0;
    for (const auto& raw : text::split_lines(text)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = text::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ValidationError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(text::trim(line.substr(0, eq)));
        const std::string value(text::trim(line.substr(eq + 1)));
        const auto it = setters.find(key);
        if (it == setters.end()) throw ValidationError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        it->second(value, "config field '" + key + "'");
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    return parse_config(text::read_file(path), path.parent_path());
}

ExperimentSetup LoadedRun::experiment() const {
    ExperimentSetup setup;
    setup.model.base_concentration = config.s_min;
    setup.model.peak_concentration = config.s_max;
    setup.model.confusion_floor = config.kappa;
    setup.model.noise_reference = config.noise_ref;
    if (config.ground_truth) setup.fixed_truth = labels().index_of(*config.ground_truth);
    setup.schedule.horizon = config.horizon;
    setup.schedule.intervals = config.intervals;
    setup.schedule.noise_coeff = config.b0;
    setup.settings.epsilon = config.epsilon;
    setup.settings.mu = config.mu;
    setup.settings.eta = config.eta;
    setup.settings.samples_per_interval = config.q;
    setup.settings.quadrature_tol = config.quadrature_tol;
    setup.seed = config.seed;
    setup.threads = config.threads;
    return setup;
}

LoadedRun load_run(const RunConfig& config) {
    config.validate();
    LoadedRun run{config, load_cost_csv(config.cost_matrix), {}};
    if (!config.labels.empty() && LabelSet(config.labels) != run.labels()) {
        throw ValidationError("config labels do not match the cost CSV header (same identifiers, same order required)");
    }
    run.actions = load_action_csv(config.action_map, run.labels());
    if (config.ground_truth && !run.labels().contains(*config.ground_truth)) {
        throw ValidationError("config field 'ground_truth': unknown label '" + *config.ground_truth + "'");
    }
    return run;
}

}  // namespace mprisk
