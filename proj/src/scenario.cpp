#include "mprisk/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "mprisk/error.hpp"
#include "mprisk/parallel.hpp"
#include "mprisk/text_io.hpp"

namespace mprisk {

void DegradationSchedule::validate() const {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) throw ValidationError("T must be positive");
    if (intervals < 1) throw ValidationError("intervals must be >= 1");
    if (!(noise_coeff >= 0.0) || !std::isfinite(noise_coeff)) throw ValidationError("b0 must be nonnegative");
}

double DegradationSchedule::noise_at(double t) const {
    if (noise_coeff == 0.0) return 0.0;
    return noise_coeff * horizon / t;
}

void GeneratorModel::validate(std::size_t m) const {
    if (ground_truth >= m) throw ValidationError("ground truth label index out of range");
    if (!(base_concentration > 0.0)) throw ValidationError("s_min must be positive");
    if (!(peak_concentration > base_concentration)) throw ValidationError("s_max must exceed s_min");
    if (!(confusion_floor > 0.0)) throw ValidationError("kappa must be positive");
    if (!(noise_reference > 0.0)) throw ValidationError("noise_ref must be positive");
}

DirichletParams belief_params(const GeneratorModel& model, std::size_t m, double resolution, double noise) {
    model.validate(m);
    if (!(resolution >= 0.0 && resolution <= 1.0)) throw ValidationError("resolution must lie in [0, 1]");
    if (!(noise >= 0.0) || std::isnan(noise)) throw ValidationError("noise level must be nonnegative");
    const double noise_quality = std::isinf(noise) ? 0.0 : model.noise_reference / (model.noise_reference + noise);
    const double quality = resolution * noise_quality;
    std::vector<double> alpha(m, model.confusion_floor);
    alpha[model.ground_truth] =
        model.base_concentration + (model.peak_concentration - model.base_concentration) * quality;
    return DirichletParams(std::move(alpha));
}

DirichletParams interval_params(const GeneratorModel& model, const DegradationSchedule& sched, std::size_t m,
                                std::size_t k) {
    sched.validate();
    if (k < 1 || k > sched.intervals) throw ValidationError("interval index out of range");
    const double t = static_cast<double>(k) * sched.tau();
    const double resolution = static_cast<double>(k) / static_cast<double>(sched.intervals);
    return belief_params(model, m, resolution, sched.noise_at(t));
}

ActionMap::ActionMap(LabelSet labels, std::vector<std::string> actions)
    : labels_(std::move(labels)), actions_(std::move(actions)) {
    if (actions_.size() != labels_.size()) throw ValidationError("action map must cover every label");
    for (std::size_t i = 0; i < actions_.size(); ++i) {
        if (actions_[i].empty()) throw ValidationError("label '" + labels_[i] + "' has an empty action");
    }
}

ActionMap parse_action_csv(const std::string& text, const LabelSet& labels) {
    std::vector<std::optional<std::string>> actions(labels.size());
    std::size_t line_no = 0;
    for (const auto& line : text::split_lines(text)) {
        ++line_no;
        const auto trimmed = text::trim(line);
        if (trimmed.empty() || trimmed.front() == '#') continue;
        const auto fields = text::split(trimmed, ',');
        const std::string where = "action CSV line " + std::to_string(line_no);
        if (fields.size() != 2) throw ValidationError(where + ": expected 'label,action'");
        if (fields[0] == "label" && fields[1] == "action") continue;
        if (!labels.contains(fields[0])) throw ValidationError(where + ": unknown label '" + fields[0] + "'");
        auto& slot = actions[labels.index_of(fields[0])];
        if (slot) throw ValidationError(where + ": label '" + fields[0] + "' mapped twice");
        slot = fields[1];
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!actions[i]) throw ValidationError("action CSV has no entry for label '" + labels[i] + "'");
        out.push_back(*actions[i]);
    }
    return ActionMap(labels, std::move(out));
}

ActionMap load_action_csv(const std::filesystem::path& path, const LabelSet& labels) {
    return parse_action_csv(text::read_file(path), labels);
}

void RiskSettings::validate() const {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw ValidationError("epsilon must lie in (0, 1]");
    if (!(mu > 0.0 && mu < 1.0)) throw ValidationError("mu must lie in (0, 1)");
    if (!(eta >= 0.0) || std::isnan(eta)) throw ValidationError("eta must be nonnegative");
    if (samples_per_interval < 2) throw ValidationError("q must be >= 2");
    if (!(quadrature_tol > 0.0)) throw ValidationError("quadrature tolerance must be positive");
}

namespace {

void finish_trajectory(TrajectoryRecord& rec, const ActionMap& actions, double eta, double horizon) {
    const auto gate = first_gate(rec, eta, horizon);
    rec.decision_step = gate.step;
    rec.gated = gate.step.has_value();
    rec.final_label = gate.label;
    rec.t_exec = gate.t_exec;
    rec.action = actions.action(rec.final_label);
    rec.action_correct = actions.same_action(rec.final_label, rec.ground_truth);
}

IntervalRecord evaluate_interval(const BeliefBatch& batch, std::size_t step, const CostMatrix& cm,
                                 const RiskSettings& settings, double horizon, AccumulatedRiskState& state) {
    IntervalRecord iv;
    iv.step = step;
    iv.t = batch.interval_end;
    iv.estimate = estimate_mle(batch);
    const auto cells = exceedance_probs(iv.estimate.params, settings.quadrature_tol);
    iv.profile = risk_profile_from_cells(cells, cm, settings.epsilon, batch.interval_end);
    iv.accumulated = state.accumulate(iv.profile);
    iv.decision = decide(iv.accumulated, settings.eta, iv.t, horizon);
    return iv;
}

}  // namespace

GateOutcome first_gate(const TrajectoryRecord& record, double eta, double horizon) {
    GateOutcome out;
    for (const auto& iv : record.intervals) {
        const auto d = decide(iv.accumulated, eta, iv.t, horizon);
        if (d.gated) {
            out.step = iv.step;
            out.label = d.argmin;
            out.t_exec = d.t_exec;
            return out;
        }
    }
    if (!record.intervals.empty()) out.label = decide(record.intervals.back().accumulated, eta, 0.0, 0.0).argmin;
    return out;
}

TrajectoryRecord run_trajectory(const GeneratorModel& model, const DegradationSchedule& sched, const CostMatrix& cm,
                                const ActionMap& actions, const RiskSettings& settings, Rng& rng) {
    settings.validate();
    sched.validate();
    const std::size_t m = cm.size();
    model.validate(m);
    if (actions.labels().size() != m) throw ValidationError("action map and cost matrix disagree on labels");

    TrajectoryRecord rec;
    rec.ground_truth = model.ground_truth;
    AccumulatedRiskState state(settings.mu);
    for (std::size_t k = 1; k <= sched.intervals; ++k) {
        const auto alpha = interval_params(model, sched, m, k);
        BeliefBatch batch;
        batch.beliefs = sample(alpha, rng, settings.samples_per_interval);
        batch.interval_end = static_cast<double>(k) * sched.tau();
        batch.interval_length = sched.tau();
        auto iv = evaluate_interval(batch, k, cm, settings, sched.horizon, state);
        iv.generator_alpha = alpha;
        rec.intervals.push_back(std::move(iv));
    }
    finish_trajectory(rec, actions, settings.eta, sched.horizon);
    return rec;
}

TrajectoryRecord run_trajectory_from_batches(const std::vector<BeliefBatch>& batches, std::size_t ground_truth,
                                             double horizon, const CostMatrix& cm, const ActionMap& actions,
                                             const RiskSettings& settings) {
    settings.validate();
    if (ground_truth >= cm.size()) throw ValidationError("ground truth label index out of range");
    TrajectoryRecord rec;
    rec.ground_truth = ground_truth;
    AccumulatedRiskState state(settings.mu);
    std::size_t step = 0;
    for (const auto& batch : batches) {
        batch.validate();
        if (batch.dimension() != cm.size()) throw ValidationError("belief dimension does not match the cost matrix");
        rec.intervals.push_back(evaluate_interval(batch, ++step, cm, settings, horizon, state));
    }
    finish_trajectory(rec, actions, settings.eta, horizon);
    return rec;
}

std::size_t trial_ground_truth(std::size_t trial, std::size_t m, std::optional<std::size_t> fixed) {
    return fixed ? *fixed : trial % m;
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial) { return base_seed + trial; }

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<TrajectoryRecord> run_trials(const ExperimentSetup& setup, const CostMatrix& cm, const ActionMap& actions,
                                         std::size_t trials) {
    const std::size_t m = cm.size();
    return parallel_map(trials, setup.threads, [&](std::size_t trial) {
        GeneratorModel model = setup.model;
        model.ground_truth = trial_ground_truth(trial, m, setup.fixed_truth);
        Rng rng(trial_seed(setup.seed, trial));
        return run_trajectory(model, setup.schedule, cm, actions, setup.settings, rng);
    });
}

std::vector<EtaSweepRow> eta_sweep_from_records(const std::vector<TrajectoryRecord>& records,
                                                const std::vector<double>& etas, double horizon) {
    std::vector<EtaSweepRow> rows;
    for (double eta : etas) {
        if (!(eta >= 0.0)) throw ValidationError("eta values must be nonnegative");
        EtaSweepRow row;
        row.eta = eta;
        for (const auto& rec : records) row.time_to_decide.push_back(horizon - first_gate(rec, eta, horizon).t_exec);
        row.median = median(row.time_to_decide);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<EtaSweepRow> eta_sweep(const ExperimentSetup& setup, const CostMatrix& cm, const ActionMap& actions,
                                   const std::vector<double>& etas, std::size_t trials) {
    for (double eta : etas) {
        if (!(eta >= 0.0)) throw ValidationError("eta values must be nonnegative");
    }
    return eta_sweep_from_records(run_trials(setup, cm, actions, trials), etas, setup.schedule.horizon);
}

AccuracyRow compare_point(const ExperimentSetup& setup, const CostMatrix& cm, const ActionMap& actions,
                          AccuracyPoint point, SweepKind kind, std::size_t trials) {
    if (trials < 1) throw ValidationError("trials must be >= 1");
    setup.settings.validate();
    const std::size_t m = cm.size();

    struct Outcome {
        double perception_ok;  // fraction of beliefs whose argmax has the right action
        bool perception_mean_ok;
        bool risk_ok;
        std::size_t risk_label;
    };
    auto outcomes = parallel_map(trials, setup.threads, [&](std::size_t trial) {
        GeneratorModel model = setup.model;
        model.ground_truth = trial_ground_truth(trial, m, setup.fixed_truth);
        Rng rng(trial_seed(setup.seed, trial));
        const auto alpha = belief_params(model, m, point.resolution, point.noise);

        BeliefBatch batch;
        batch.beliefs = sample(alpha, rng, setup.settings.samples_per_interval);
        std::vector<double> mean(m, 0.0);
        std::size_t per_belief_hits = 0;
        for (const auto& b : batch.beliefs) {
            for (std::size_t i = 0; i < m; ++i) mean[i] += b[i];
            per_belief_hits += actions.same_action(voronoi_cell(b).index, model.ground_truth);
        }
        const std::size_t perceived_mean = voronoi_cell(mean).index;

        const auto fit = estimate_mle(batch);
        const auto cells = exceedance_probs(fit.params, setup.settings.quadrature_tol);
        const auto profile = risk_profile_from_cells(cells, cm, setup.settings.epsilon);
        const std::size_t risk_label = decide(profile.values, 0.0, 0.0, 0.0).argmin;
        return Outcome{static_cast<double>(per_belief_hits) / static_cast<double>(batch.beliefs.size()),
                       actions.same_action(perceived_mean, model.ground_truth),
                       actions.same_action(risk_label, model.ground_truth), risk_label};
    });

    AccuracyRow row;
    row.kind = kind;
    row.resolution = point.resolution;
    row.noise = point.noise;
    row.trials = trials;
    double perception_hits = 0.0;
    std::size_t perception_mean_hits = 0;
    std::size_t risk_hits = 0;
    std::vector<std::size_t> counts(m, 0);
    for (const auto& o : outcomes) {
        perception_hits += o.perception_ok;
        perception_mean_hits += o.perception_mean_ok;
        risk_hits += o.risk_ok;
        ++counts[o.risk_label];
    }
    row.perception_accuracy = perception_hits / static_cast<double>(trials);
    row.perception_mean_accuracy = static_cast<double>(perception_mean_hits) / static_cast<double>(trials);
    row.risk_accuracy = static_cast<double>(risk_hits) / static_cast<double>(trials);
    row.modal_risk_output = static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
    return row;
}

std::vector<AccuracyRow> compare_outputs(const ExperimentSetup& setup, const CostMatrix& cm, const ActionMap& actions,
                                         const std::vector<AccuracyPoint>& points, SweepKind kind,
                                         std::size_t trials) {
    std::vector<AccuracyRow> rows;
    for (const auto& p : points) rows.push_back(compare_point(setup, cm, actions, p, kind, trials));
    return rows;
}

}  // namespace mprisk
