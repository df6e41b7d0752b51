#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "mprisk/belief.hpp"

namespace mprisk {

// Misperception costs in thousands of currency units. Entry (j, i) is the cost
// of perceiving true label j as label i. The diagonal is exactly zero.
class CostMatrix {
public:
    CostMatrix() = default;
    // `costs` is row-major m x m. Throws ValidationError on shape, sign, or diagonal violations.
    CostMatrix(LabelSet labels, std::vector<double> costs);

    std::size_t size() const noexcept { return labels_.size(); }
    const LabelSet& labels() const noexcept { return labels_; }
    double operator()(std::size_t true_label, std::size_t perceived) const { return costs_[true_label * size() + perceived]; }
    double max_cost() const noexcept;
    std::span<const double> row_major() const noexcept { return costs_; }

    // Same costs with labels and matrix rows/columns reordered: new label k is old label perm[k].
    CostMatrix permuted(std::span<const std::size_t> perm) const;
    CostMatrix scaled(double factor) const;

private:
    LabelSet labels_;
    std::vector<double> costs_;
};

// Unique costs of one column in strictly descending order, each paired with the
// true labels that attain it.
struct OrderedCostVector {
    std::size_t perceived_label = 0;
    std::vector<double> values;
    std::vector<std::vector<std::size_t>> groups;

    std::size_t size() const noexcept { return values.size(); }
};

// Discrete distribution of the cost incurred when acting on one perceived label.
struct CostDistribution {
    std::vector<double> values;  // descending
    std::vector<double> probs;
};

// Groups by exact floating-point equality; costs are authored constants.
OrderedCostVector ordered_cost_vector(const CostMatrix& cm, std::size_t perceived_label);

// probs[j] = sum of cell_probs over the true labels in group j.
CostDistribution cost_distribution(const OrderedCostVector& ocv, std::span<const double> cell_probs);

// CSV: header row "<corner>,<label_1>,...,<label_m>", then one row per true
// label "<label_j>,C_j1,...,C_jm". Row and column labels must agree in order.
struct CostTable {
    std::string corner = "Sign";
    CostMatrix matrix;
};

CostTable parse_cost_csv(const std::string& text);
CostTable load_cost_csv(const std::filesystem::path& path);
// Numbers are written in shortest round-trip form, so load + write is byte-stable.
std::string format_cost_csv(const CostTable& table);

}  // namespace mprisk
