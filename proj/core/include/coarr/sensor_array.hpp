#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace coarr {

using Position = std::int64_t;

/// Physical linear array: a strictly increasing set of non-negative integer
/// sensor positions, in multiples of the base inter-sensor spacing.
class SensorArray {
public:
    SensorArray() = default;

    explicit SensorArray(std::vector<Position> positions)
        : positions_(std::move(positions)) {
        for (std::size_t i = 0; i < positions_.size(); ++i) {
            if (positions_[i] < 0)
                throw std::invalid_argument("sensor positions must be non-negative");
            if (i > 0 && positions_[i] <= positions_[i - 1])
                throw std::invalid_argument("sensor positions must be strictly increasing");
        }
    }

    /// Builds from an arbitrary collection: sorts and removes duplicates.
    static SensorArray from_unsorted(std::vector<Position> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return SensorArray(std::move(v));
    }

    const std::vector<Position>& positions() const { return positions_; }
    std::size_t size() const { return positions_.size(); }
    bool empty() const { return positions_.empty(); }

    Position min() const { return positions_.front(); }
    Position max() const { return positions_.back(); }
    Position aperture() const { return empty() ? 0 : max() - min(); }
    bool is_normalized() const { return !empty() && min() == 0; }

    bool contains(Position p) const {
        return std::binary_search(positions_.begin(), positions_.end(), p);
    }

    /// Shifts the array so that the first sensor sits at 0.
    SensorArray normalized() const {
        std::vector<Position> v(positions_);
        for (auto& p : v) p -= positions_.front();
        return SensorArray(std::move(v));
    }

    bool operator==(const SensorArray&) const = default;

private:
    std::vector<Position> positions_;
};

}  // namespace coarr
