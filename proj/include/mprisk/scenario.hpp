#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mprisk/belief.hpp"
#include "mprisk/cost_model.hpp"
#include "mprisk/dirichlet.hpp"
#include "mprisk/risk.hpp"

namespace mprisk {

// Approach-to-sign schedule: [0, horizon] split into `intervals` steps of length
// tau. Image noise decays as b_t = noise_coeff * horizon / t and the relative
// resolution grows as t / horizon.
struct DegradationSchedule {
    double horizon = 6.0;
    std::size_t intervals = 6;
    double noise_coeff = 0.02;

    void validate() const;
    double tau() const { return horizon / static_cast<double>(intervals); }
    double noise_at(double t) const;
    double quality_at(double t) const { return t / horizon; }
};

// Stand-in for a trained detector: Dirichlet beliefs whose true-label
// concentration grows with input quality while the other labels keep a
// constant confusion floor.
struct GeneratorModel {
    std::size_t ground_truth = 0;
    double base_concentration = 1.0;   // s_min
    double peak_concentration = 200.0; // s_max
    double confusion_floor = 1.0;      // kappa
    double noise_reference = 0.02;     // noise level at which noise alone halves the quality

    void validate(std::size_t m) const;
};

// Concentrations for a given relative resolution in [0, 1] and noise level b >= 0:
// true label s_min + (s_max - s_min) * resolution * nu / (nu + b), others kappa.
DirichletParams belief_params(const GeneratorModel& model, std::size_t m, double resolution, double noise);

// Parameters for step k (1-based) of the schedule.
DirichletParams interval_params(const GeneratorModel& model, const DegradationSchedule& sched, std::size_t m,
                                std::size_t k);

// Total map from labels to high-level actions.
class ActionMap {
public:
    ActionMap() = default;
    // actions[i] is the action of label i.
    ActionMap(LabelSet labels, std::vector<std::string> actions);

    const std::string& action(std::size_t label) const { return actions_.at(label); }
    const LabelSet& labels() const noexcept { return labels_; }
    bool same_action(std::size_t a, std::size_t b) const { return action(a) == action(b); }

private:
    LabelSet labels_;
    std::vector<std::string> actions_;
};

// CSV rows "label,action"; an optional "label,action" header is skipped. Every
// label of `labels` must appear exactly once.
ActionMap parse_action_csv(const std::string& text, const LabelSet& labels);
ActionMap load_action_csv(const std::filesystem::path& path, const LabelSet& labels);

struct RiskSettings {
    double epsilon = 0.1;
    double mu = 0.5;
    double eta = 10.0;
    std::size_t samples_per_interval = 30;  // q
    double quadrature_tol = 1e-8;

    void validate() const;
};

struct IntervalRecord {
    std::size_t step = 0;  // 1-based
    double t = 0.0;        // interval end
    DirichletParams generator_alpha;
    MleResult estimate;
    RiskProfile profile;
    std::vector<double> accumulated;
    Decision decision;
};

struct TrajectoryRecord {
    std::size_t ground_truth = 0;
    std::vector<IntervalRecord> intervals;

    // Executed decision: the first gated interval, if any.
    std::optional<std::size_t> decision_step;
    std::size_t final_label = 0;  // o_t when gated, else the last interval's argmin
    bool gated = false;
    double t_exec = 0.0;
    std::string action;
    bool action_correct = false;
};

// Re-evaluates the gate of a finished trajectory at another threshold.
struct GateOutcome {
    std::optional<std::size_t> step;
    std::size_t label = 0;
    double t_exec = 0.0;
};
GateOutcome first_gate(const TrajectoryRecord& record, double eta, double horizon);

// One approach: per interval draw q beliefs, estimate alpha, compute the risk
// profile, accumulate, and gate on eta.
TrajectoryRecord run_trajectory(const GeneratorModel& model, const DegradationSchedule& sched, const CostMatrix& cm,
                                const ActionMap& actions, const RiskSettings& settings, Rng& rng);

// Same pipeline on externally produced beliefs, one batch per interval.
TrajectoryRecord run_trajectory_from_batches(const std::vector<BeliefBatch>& batches, std::size_t ground_truth,
                                             double horizon, const CostMatrix& cm, const ActionMap& actions,
                                             const RiskSettings& settings);

// Per-trial ground truth cycles through the labels so every sign is covered equally.
std::size_t trial_ground_truth(std::size_t trial, std::size_t m, std::optional<std::size_t> fixed);
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial);

struct ExperimentSetup {
    GeneratorModel model;  // ground_truth is overridden per trial unless fixed_truth is set
    std::optional<std::size_t> fixed_truth;
    DegradationSchedule schedule;
    RiskSettings settings;
    std::uint64_t seed = 1;
    std::size_t threads = 1;
};

struct EtaSweepRow {
    double eta = 0.0;
    std::vector<double> time_to_decide;  // T - t_exec per trial
    double median = 0.0;
};

// Independent trajectories; trial i uses seed base_seed + i and its own state.
std::vector<TrajectoryRecord> run_trials(const ExperimentSetup& setup, const CostMatrix& cm, const ActionMap& actions,
                                         std::size_t trials);

std::vector<EtaSweepRow> eta_sweep_from_records(const std::vector<TrajectoryRecord>& records,
                                                const std::vector<double>& etas, double horizon);

// Distribution of T - t_exec per threshold. Trajectories are computed once per
// trial and gated at every eta, so all thresholds see identical beliefs.
std::vector<EtaSweepRow> eta_sweep(const ExperimentSetup& setup, const CostMatrix& cm, const ActionMap& actions,
                                   const std::vector<double>& etas, std::size_t trials);

enum class SweepKind { Noise, Quality };

struct AccuracyRow {
    SweepKind kind = SweepKind::Noise;
    double resolution = 1.0;
    double noise = 0.0;
    std::size_t trials = 0;
    double perception_accuracy = 0.0;       // action of argmax of each belief, averaged over beliefs
    double perception_mean_accuracy = 0.0;  // action of argmax of the interval's mean belief
    double risk_accuracy = 0.0;             // action of argmin of the single-interval risk profile
    std::size_t modal_risk_output = 0;
};

struct AccuracyPoint {
    double resolution = 1.0;
    double noise = 0.0;
};

// Single-interval comparison of perception output and risk output; no accumulation.
AccuracyRow compare_point(const ExperimentSetup& setup, const CostMatrix& cm, const ActionMap& actions,
                          AccuracyPoint point, SweepKind kind, std::size_t trials);

std::vector<AccuracyRow> compare_outputs(const ExperimentSetup& setup, const CostMatrix& cm, const ActionMap& actions,
                                         const std::vector<AccuracyPoint>& points, SweepKind kind,
                                         std::size_t trials);

double median(std::vector<double> values);

}  // namespace mprisk
