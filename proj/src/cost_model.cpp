#include "mprisk/cost_model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "mprisk/error.hpp"
#include "mprisk/text_io.hpp"

namespace mprisk {

CostMatrix::CostMatrix(LabelSet labels, std::vector<double> costs) : labels_(std::move(labels)), costs_(std::move(costs)) {
    const std::size_t m = labels_.size();
    if (costs_.size() != m * m) {
        throw ValidationError("cost matrix has " + std::to_string(costs_.size()) + " entries, expected " +
                              std::to_string(m * m));
    }
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            const double c = costs_[j * m + i];
            const std::string where = "cost(" + labels_[j] + "," + labels_[i] + ")";
            if (!std::isfinite(c) || c < 0.0) throw ValidationError(where + " must be finite and nonnegative");
            if (i == j && c != 0.0) throw ValidationError(where + " is on the diagonal and must be 0");
        }
    }
}

double CostMatrix::max_cost() const noexcept {
    return costs_.empty() ? 0.0 : *std::max_element(costs_.begin(), costs_.end());
}

CostMatrix CostMatrix::permuted(std::span<const std::size_t> perm) const {
    const std::size_t m = size();
    if (perm.size() != m) throw ValidationError("permutation length does not match the cost matrix");
    std::vector<std::string> labels(m);
    std::vector<double> costs(m * m);
    for (std::size_t a = 0; a < m; ++a) {
        labels[a] = labels_[perm[a]];
        for (std::size_t b = 0; b < m; ++b) costs[a * m + b] = (*this)(perm[a], perm[b]);
    }
    return CostMatrix(LabelSet(std::move(labels)), std::move(costs));
}

CostMatrix CostMatrix::scaled(double factor) const {
    if (!(factor > 0.0) || !std::isfinite(factor)) throw ValidationError("cost scale factor must be positive");
    std::vector<double> costs = costs_;
    for (auto& c : costs) c *= factor;
    return CostMatrix(labels_, std::move(costs));
}

OrderedCostVector ordered_cost_vector(const CostMatrix& cm, std::size_t perceived_label) {
    const std::size_t m = cm.size();
    if (perceived_label >= m) throw ValidationError("perceived label index out of range");
    std::map<double, std::vector<std::size_t>, std::greater<>> by_value;
    for (std::size_t j = 0; j < m; ++j) by_value[cm(j, perceived_label)].push_back(j);

    OrderedCostVector out;
    out.perceived_label = perceived_label;
    for (auto& [value, group] : by_value) {
        out.values.push_back(value);
        out.groups.push_back(std::move(group));
    }
    return out;
}

CostDistribution cost_distribution(const OrderedCostVector& ocv, std::span<const double> cell_probs) {
    std::size_t m = 0;
    for (const auto& g : ocv.groups) m += g.size();
    if (cell_probs.size() != m) {
        throw ValidationError("cost_distribution: " + std::to_string(cell_probs.size()) +
                              " cell probabilities for " + std::to_string(m) + " labels");
    }
    CostDistribution out;
    out.values = ocv.values;
    out.probs.reserve(ocv.groups.size());
    for (const auto& group : ocv.groups) {
        double p = 0.0;
        for (std::size_t k : group) p += cell_probs[k];
        out.probs.push_back(p);
    }
    return out;
}

CostTable parse_cost_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& line : text::split_lines(text)) {
        if (text::trim(line).empty()) continue;
        rows.push_back(text::split(line, ','));
    }
    if (rows.empty()) throw ValidationError("cost CSV is empty");
    const auto& header = rows.front();
    if (header.size() < 3) throw ValidationError("cost CSV header needs a corner cell and at least 2 labels");

    CostTable table;
    table.corner = header.front();
    std::vector<std::string> labels(header.begin() + 1, header.end());
    const std::size_t m = labels.size();
    if (rows.size() != m + 1) {
        throw ValidationError("cost CSV has " + std::to_string(rows.size() - 1) + " data rows, expected " +
                              std::to_string(m));
    }
    std::vector<double> costs;
    costs.reserve(m * m);
    for (std::size_t j = 0; j < m; ++j) {
        const auto& row = rows[j + 1];
        const std::string where = "cost CSV line " + std::to_string(j + 2);
        if (row.size() != m + 1) throw ValidationError(where + ": expected " + std::to_string(m + 1) + " fields");
        if (row.front() != labels[j]) {
            throw ValidationError(where + ": row label '" + row.front() + "' does not match column label '" +
                                  labels[j] + "'");
        }
        for (std::size_t i = 0; i < m; ++i) costs.push_back(text::parse_double(row[i + 1], where));
    }
    table.matrix = CostMatrix(LabelSet(std::move(labels)), std::move(costs));
    return table;
}

CostTable load_cost_csv(const std::filesystem::path& path) { return parse_cost_csv(text::read_file(path)); }

std::string format_cost_csv(const CostTable& table) {
    const auto& cm = table.matrix;
    const std::size_t m = cm.size();
    std::string out = table.corner;
    for (const auto& l : cm.labels().labels()) out += "," + l;
    out += "\n";
    for (std::size_t j = 0; j < m; ++j) {
        out += cm.labels()[j];
        for (std::size_t i = 0; i < m; ++i) out += "," + text::format_double(cm(j, i));
        out += "\n";
    }
    return out;
}

}  // namespace mprisk
