#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mprisk {

// Lower clamp applied to every belief component so that log p stays finite.
inline constexpr double kBeliefFloor = 1e-10;
// Raw belief sums further than this from 1 are treated as corrupted input.
inline constexpr double kBeliefSumTolerance = 1e-3;

// Ordered, unique label identifiers. Index <-> identifier is a bijection.
class LabelSet {
public:
    LabelSet() = default;
    explicit LabelSet(std::vector<std::string> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& operator[](std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    // Throws ValidationError for unknown identifiers.
    std::size_t index_of(std::string_view label) const;
    bool contains(std::string_view label) const noexcept;

    bool operator==(const LabelSet&) const = default;

private:
    std::vector<std::string> labels_;
};

// A point on the probability simplex: nonnegative components summing to one.
class Belief {
public:
    Belief() = default;

    std::size_t size() const noexcept { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }
    std::span<const double> values() const noexcept { return p_; }

    // True when validation had to raise at least one component to the floor.
    bool clamped() const noexcept { return clamped_; }

private:
    friend Belief validate_belief(std::span<const double> raw, std::size_t m);

    std::vector<double> p_;
    bool clamped_ = false;
};

// Clamps each entry to [kBeliefFloor, 1] and renormalizes.
// Throws ValidationError on a dimension mismatch, non-finite or negative entries,
// or a raw sum further than kBeliefSumTolerance from 1.
Belief validate_belief(std::span<const double> raw, std::size_t m);
inline Belief validate_belief(std::span<const double> raw) { return validate_belief(raw, raw.size()); }

struct CellAssignment {
    std::size_t index = 0;
    bool tie = false;  // several components share the maximum
};

// Voronoi cell of the simplex containing the point, i.e. the argmax label.
// Exact ties resolve to the lowest index and set the tie flag.
CellAssignment voronoi_cell(std::span<const double> p);
inline CellAssignment voronoi_cell(const Belief& b) { return voronoi_cell(b.values()); }

}  // namespace mprisk
