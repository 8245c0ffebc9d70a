#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "equil/classical/phase_space.hpp"

namespace equil::classical {

// Partition of the unit torus into N outcome cells built from an axis-aligned
// grid. Axis a is cut at the interior points cuts[a] (strictly increasing,
// inside (0, 1)); every grid box carries an outcome label in [0, N) and every
// label is used by at least one box. A point lying exactly on a cut belongs to
// the lower box.
class Partition {
public:
    Partition(std::vector<std::vector<double>> cuts, std::vector<std::size_t> labels);

    // Intervals [0, c1], (c1, c2], ... on a one-dimensional torus, one cell each.
    static Partition intervals(std::vector<double> cuts);

    std::size_t dimension() const noexcept { return cuts_.size(); }
    std::size_t cell_count() const noexcept { return cell_count_; }
    std::size_t box_count() const noexcept { return labels_.size(); }
    const std::vector<std::vector<double>>& cuts() const noexcept { return cuts_; }
    const std::vector<std::size_t>& labels() const noexcept { return labels_; }

    std::size_t cell_of(const PhasePoint& x) const;

    // Lebesgue measure of each cell.
    std::vector<double> cell_volumes() const;

private:
    std::vector<std::vector<double>> cuts_;
    std::vector<std::size_t> labels_;
    std::size_t cell_count_ = 0;
};

// Random grid partition of [0,1)^dimension with exactly `cells` outcomes.
// The grid has at least `cells` boxes; labels are a random surjection.
Partition random_box_partition(std::size_t dimension, std::size_t cells, std::mt19937_64& rng);

}  // namespace equil::classical
