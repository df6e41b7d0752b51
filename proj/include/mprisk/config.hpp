#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mprisk/cost_model.hpp"
#include "mprisk/scenario.hpp"

namespace mprisk {

// Run configuration read from a flat "key = value" file ('#' starts a comment).
// Relative paths resolve against the directory of the config file.
struct RunConfig {
    std::vector<std::string> labels;  // empty: take the cost CSV header
    double horizon = 6.0;             // T, seconds
    std::size_t intervals = 6;
    std::size_t q = 30;
    double epsilon = 0.1;
    double mu = 0.5;
    double eta = 10.0;  // thousand currency units
    double b0 = 0.02;
    double noise_ref = 0.02;
    double s_min = 1.0;
    double s_max = 200.0;
    double kappa = 1.0;
    std::optional<std::string> ground_truth;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t threads = 1;
    double quadrature_tol = 1e-8;
    std::filesystem::path cost_matrix;
    std::filesystem::path action_map;

    // Experiment sweeps.
    std::vector<double> eta_sweep{1.0, 10.0, 50.0};
    std::vector<double> noise_sweep{0.0, 0.08, 0.32, 1.28, 5.12};
    std::vector<double> quality_sweep{0.2, 0.4, 0.6, 0.8, 1.0};
    double quality_sweep_noise = 0.04;
    std::size_t compare_trials = 500;

    // Oracle cross-check settings for `verify`.
    std::size_t verify_cases = 10;
    std::size_t verify_mc_draws = 200000;
    double verify_sigma = 3.0;
    std::size_t verify_cvar_cases = 1000;
    double verify_cvar_tol = 1e-9;
    double verify_mass_tol = 1e-6;

    std::filesystem::path out_dir = "out";
    std::string format = "json";

    // Throws ValidationError naming the offending field.
    void validate() const;

    double tau() const { return horizon / static_cast<double>(intervals); }
};

// Parses the key-value text; `base_dir` anchors relative paths.
RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir);
RunConfig load_config(const std::filesystem::path& path);

// Everything a run needs once the referenced files are loaded and cross-checked.
struct LoadedRun {
    RunConfig config;
    CostTable costs;
    ActionMap actions;

    const CostMatrix& cost_matrix() const { return costs.matrix; }
    const LabelSet& labels() const { return costs.matrix.labels(); }
    ExperimentSetup experiment() const;
};

// Loads the cost and action files. Throws ValidationError when the configured
// labels disagree with the cost CSV header, IoError when files are missing.
LoadedRun load_run(const RunConfig& config);

}  // namespace mprisk
