#include "mprisk/belief.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "mprisk/error.hpp"

namespace mprisk {

namespace {
// Negative entries beyond rounding noise are rejected rather than clamped.
constexpr double kNegativeSlack = 1e-9;
}  // namespace

LabelSet::LabelSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() < 2) {
        throw ValidationError("label set needs at least 2 labels, got " + std::to_string(labels_.size()));
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw ValidationError("empty label identifier");
        if (!seen.insert(l).second) throw ValidationError("duplicate label '" + l + "'");
    }
}

std::size_t LabelSet::index_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw ValidationError("unknown label '" + std::string(label) + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

bool LabelSet::contains(std::string_view label) const noexcept {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

Belief validate_belief(std::span<const double> raw, std::size_t m) {
    if (raw.size() != m) {
        throw ValidationError("belief has " + std::to_string(raw.size()) + " components, expected " +
                              std::to_string(m));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!std::isfinite(raw[i])) throw ValidationError("belief component " + std::to_string(i) + " is not finite");
        if (raw[i] < -kNegativeSlack) {
            throw ValidationError("belief component " + std::to_string(i) + " is negative (" +
                                  std::to_string(raw[i]) + ")");
        }
        sum += raw[i];
    }
    if (std::abs(sum - 1.0) > kBeliefSumTolerance) {
        throw ValidationError("belief sums to " + std::to_string(sum) + ", not 1");
    }

    Belief b;
    b.p_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        double v = raw[i];
        if (v < kBeliefFloor) {
            v = kBeliefFloor;
            b.clamped_ = true;
        } else if (v > 1.0) {
            v = 1.0;
        }
        b.p_[i] = v;
    }
    const double total = std::accumulate(b.p_.begin(), b.p_.end(), 0.0);
    for (auto& v : b.p_) v /= total;
    return b;
}

CellAssignment voronoi_cell(std::span<const double> p) {
    CellAssignment out;
    if (p.empty()) return out;
    double best = p[0];
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (p[i] > best) {
            best = p[i];
            out.index = i;
            out.tie = false;
        } else if (p[i] == best) {
            out.tie = true;
        }
    }
    return out;
}

}  // namespace mprisk
