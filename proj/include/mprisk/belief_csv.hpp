#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "mprisk/belief.hpp"
#include "mprisk/dirichlet.hpp"

namespace mprisk {

// Timestamped beliefs from a detector log. Header "t,p_<label_1>,...,p_<label_m>".
struct BeliefTrajectory {
    LabelSet labels;
    std::vector<double> times;
    std::vector<Belief> beliefs;
};

// Malformed rows are reported with their line number; rejected beliefs with
// their data-row index (0-based) and line number.
BeliefTrajectory parse_belief_csv(const std::string& text);
BeliefTrajectory load_belief_csv(const std::filesystem::path& path);

// Buckets rows into steps of length horizon / intervals. A row at time t goes to
// step floor(t / tau) + 1, with t = horizon folded into the last step. Empty steps
// are dropped; times outside [0, horizon] are rejected.
std::vector<BeliefBatch> group_intervals(const BeliefTrajectory& traj, double horizon, std::size_t intervals);

}  // namespace mprisk
