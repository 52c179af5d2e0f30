#pragma once

#include <cstdint>
#include <vector>

#include "coarr/sensor_array.hpp"

namespace coarr {

enum class CoArrayKind { sum, difference };

/// Virtual array of pairwise sums or differences of sensor positions.
/// Difference co-arrays are symmetric about 0 and may contain negative
/// elements; sum co-arrays of a normalized array span [0, 2L].
class CoArray {
public:
    CoArray() = default;
    CoArray(std::vector<Position> elements, CoArrayKind kind)
        : elements_(std::move(elements)), kind_(kind) {}

    const std::vector<Position>& elements() const { return elements_; }
    CoArrayKind kind() const { return kind_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    Position min() const { return elements_.front(); }
    Position max() const { return elements_.back(); }

    bool contains(Position p) const {
        return std::binary_search(elements_.begin(), elements_.end(), p);
    }

    bool operator==(const CoArray&) const = default;

private:
    std::vector<Position> elements_;
    CoArrayKind kind_ = CoArrayKind::sum;
};

CoArray sum_coarray(const SensorArray& d);
CoArray diff_coarray(const SensorArray& d);

struct ContiguousRun {
    std::int64_t length = 0;  // h: number of consecutive integers
    Position offset = 0;      // s: first element of the run (smallest s on ties)
};

/// Longest run {s, s+1, ..., s+h-1} contained in the co-array.
ContiguousRun contiguous_dof(const CoArray& c);

/// Smallest non-negative integer missing from the co-array.
Position first_hole(const CoArray& c);

/// True iff the co-array is a full integer interval [min, max].
bool is_contiguous(const CoArray& c);

}  // namespace coarr
