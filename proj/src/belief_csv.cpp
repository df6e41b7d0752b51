#include "mprisk/belief_csv.hpp"

#include <algorithm>
#include <cmath>

#include "mprisk/error.hpp"
#include "mprisk/text_io.hpp"

namespace mprisk {

BeliefTrajectory parse_belief_csv(const std::string& text) {
    const auto lines = text::split_lines(text);
    std::size_t line_no = 0;
    while (line_no < lines.size() && text::trim(lines[line_no]).empty()) ++line_no;
    if (line_no == lines.size()) throw ValidationError("belief CSV is empty");

    const auto header = text::split(lines[line_no], ',');
    if (header.size() < 3 || text::trim(header[0]) != "t") {
        throw ValidationError("belief CSV line " + std::to_string(line_no + 1) + ": header must be t,p_<label>,...");
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i < header.size(); ++i) {
        const auto h = text::trim(header[i]);
        if (h.size() < 3 || h.substr(0, 2) != "p_") {
            throw ValidationError("belief CSV header column '" + std::string(h) + "' must look like p_<label>");
        }
        names.emplace_back(h.substr(2));
    }

    BeliefTrajectory out{LabelSet(std::move(names)), {}, {}};
    const std::size_t m = out.labels.size();
    std::vector<double> row(m);
    for (++line_no; line_no < lines.size(); ++line_no) {
        if (text::trim(lines[line_no]).empty()) continue;
        const std::string where = "belief CSV line " + std::to_string(line_no + 1);
        const auto fields = text::split(lines[line_no], ',');
        if (fields.size() != m + 1) {
            throw ValidationError(where + ": expected " + std::to_string(m + 1) + " fields, got " +
                                  std::to_string(fields.size()));
        }
        const double t = text::parse_double(fields[0], where + " time");
        for (std::size_t i = 0; i < m; ++i) row[i] = text::parse_double(fields[i + 1], where);
        try {
            out.beliefs.push_back(validate_belief(row, m));
        } catch (const ValidationError& e) {
            throw ValidationError("belief row " + std::to_string(out.beliefs.size()) + " (" + where + "): " + e.what());
        }
        out.times.push_back(t);
    }
    return out;
}

BeliefTrajectory load_belief_csv(const std::filesystem::path& path) {
    return parse_belief_csv(text::read_file(path));
}

std::vector<BeliefBatch> group_intervals(const BeliefTrajectory& traj, double horizon, std::size_t intervals) {
    if (!(horizon > 0.0) || intervals == 0) throw ValidationError("horizon and interval count must be positive");
    const double tau = horizon / static_cast<double>(intervals);
    std::vector<BeliefBatch> steps(intervals);
    for (std::size_t k = 0; k < intervals; ++k) {
        steps[k].interval_end = tau * static_cast<double>(k + 1);
        steps[k].interval_length = tau;
    }
    for (std::size_t r = 0; r < traj.beliefs.size(); ++r) {
        const double t = traj.times[r];
        if (!(t >= 0.0 && t <= horizon)) {
            throw ValidationError("belief row " + std::to_string(r) + ": time " + text::format_double(t) +
                                  " outside [0, " + text::format_double(horizon) + "]");
        }
        const auto k = std::min(intervals - 1, static_cast<std::size_t>(std::floor(t / tau)));
        steps[k].beliefs.push_back(traj.beliefs[r]);
    }
    std::erase_if(steps, [](const BeliefBatch& b) { return b.beliefs.empty(); });
    return steps;
}

}  // namespace mprisk
