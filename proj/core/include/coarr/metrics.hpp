#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

#include "coarr/coarray.hpp"
#include "coarr/sensor_array.hpp"
#include "coarr/varsigma.hpp"

namespace coarr {

using Rational = boost::rational<std::int64_t>;

/// Scalar figures of merit of a normalized array.
struct ArrayMetrics {
    std::int64_t n_sensors = 0;
    Position aperture = 0;
    std::int64_t contiguous_dofs = 0;   // H, maximized over the offset
    Position contiguous_offset = 0;     // s of the maximal run
    Position first_hole = 0;            // of the sum co-array
    Rational redundancy{1};             // N(N+1)/2 / H
    std::int64_t total_dofs = 0;        // |D + D|
    std::vector<std::int64_t> weights;  // S(d), d = 1..L (index d-1)
    Varsigma varsigma;                  // reference aperture = own aperture
    bool symmetric = false;
};

/// Unordered-pair displacement multiplicities S(1..L).
std::vector<std::int64_t> weight_function(const SensorArray& d);

Varsigma varsigma(const SensorArray& d, Position reference_aperture);

bool is_symmetric(const SensorArray& d);

/// Lemma-1 membership test: sum kind checks {0,1,L-1,L} subset of D;
/// difference kind checks {0,1,L} or its mirror {0,L-1,L}.
bool check_necessary_sensors(const SensorArray& d, CoArrayKind kind);

ArrayMetrics metrics(const SensorArray& d);

}  // namespace coarr
