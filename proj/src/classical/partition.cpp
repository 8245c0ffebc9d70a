#include "equil/classical/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "equil/errors.hpp"

namespace equil::classical {

Partition::Partition(std::vector<std::vector<double>> cuts, std::vector<std::size_t> labels)
    : cuts_(std::move(cuts)), labels_(std::move(labels)) {
    if (cuts_.empty())
        throw DomainError("partition needs at least one axis");
    std::size_t boxes = 1;
    for (const auto& axis : cuts_) {
        for (std::size_t i = 0; i < axis.size(); ++i) {
            if (!(axis[i] > 0.0 && axis[i] < 1.0))
                throw DomainError("partition cuts must lie strictly inside (0, 1)");
            if (i > 0 && !(axis[i] > axis[i - 1]))
                throw DomainError("partition cuts must be strictly increasing");
        }
        boxes *= axis.size() + 1;
    }
    if (labels_.size() != boxes) {
        std::ostringstream msg;
        msg << "partition grid has " << boxes << " boxes but " << labels_.size() << " labels";
        throw DimensionError(msg.str());
    }
    cell_count_ = *std::max_element(labels_.begin(), labels_.end()) + 1;
    std::vector<bool> used(cell_count_, false);
    for (std::size_t l : labels_)
        used[l] = true;
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw DomainError("partition labels must use every cell index in [0, N)");
}

Partition Partition::intervals(std::vector<double> cuts) {
    std::vector<std::size_t> labels(cuts.size() + 1);
    std::iota(labels.begin(), labels.end(), std::size_t{0});
    return Partition({std::move(cuts)}, std::move(labels));
}

std::size_t Partition::cell_of(const PhasePoint& x) const {
    if (x.dimension() != cuts_.size())
        throw DimensionError("partition dimension does not match the point");
    std::size_t box = 0;
    for (std::size_t a = 0; a < cuts_.size(); ++a) {
        const auto& axis = cuts_[a];
        // lower_bound puts points equal to a cut into the lower interval.
        const auto idx = static_cast<std::size_t>(
            std::lower_bound(axis.begin(), axis.end(), x[a]) - axis.begin());
        box = box * (axis.size() + 1) + idx;
    }
    return labels_[box];
}

std::vector<double> Partition::cell_volumes() const {
    std::vector<double> vol(cell_count_, 0.0);
    const std::size_t boxes = labels_.size();
    for (std::size_t box = 0; box < boxes; ++box) {
        std::size_t rest = box;
        double v = 1.0;
        for (std::size_t a = cuts_.size(); a-- > 0;) {
            const auto& axis = cuts_[a];
            const std::size_t idx = rest % (axis.size() + 1);
            rest /= axis.size() + 1;
            const double lo = idx == 0 ? 0.0 : axis[idx - 1];
            const double hi = idx == axis.size() ? 1.0 : axis[idx];
            v *= hi - lo;
        }
        vol[labels_[box]] += v;
    }
    return vol;
}

Partition random_box_partition(std::size_t dimension, std::size_t cells, std::mt19937_64& rng) {
    if (dimension == 0 || cells == 0)
        throw DomainError("random_box_partition needs a dimension and at least one cell");
    // Smallest per-axis interval count whose grid has at least `cells` boxes.
    std::size_t per_axis = 1;
    auto grid_size = [&](std::size_t m) {
        std::size_t b = 1;
        for (std::size_t a = 0; a < dimension; ++a)
            b *= m;
        return b;
    };
    while (grid_size(per_axis) < cells)
        ++per_axis;

    std::uniform_real_distribution<double> unit(0.05, 0.95);
    std::vector<std::vector<double>> cuts(dimension);
    for (auto& axis : cuts) {
        while (axis.size() < per_axis - 1) {
            axis.clear();
            for (std::size_t i = 0; i + 1 < per_axis; ++i)
                axis.push_back(unit(rng));
            std::sort(axis.begin(), axis.end());
            // Keep boxes from degenerating to slivers.
            bool ok = true;
            for (std::size_t i = 1; i < axis.size(); ++i)
                ok = ok && axis[i] - axis[i - 1] > 0.02;
            if (!ok)
                axis.clear();
        }
    }

    const std::size_t boxes = grid_size(per_axis);
    std::vector<std::size_t> order(boxes);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> labels(boxes);
    std::uniform_int_distribution<std::size_t> pick(0, cells - 1);
    for (std::size_t i = 0; i < boxes; ++i)
        labels[order[i]] = i < cells ? i : pick(rng);
    return Partition(std::move(cuts), std::move(labels));
}

}  // namespace equil::classical
