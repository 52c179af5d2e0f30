#pragma once

#include <cstdint>

#include "coarr/coarray.hpp"
#include "coarr/sensor_array.hpp"

namespace coarr {

/// Nested-array parameters: dense ULA of n1 sensors plus a sparse ULA of n2
/// sensors with pitch n1+1.
struct NestedParams {
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
};

/// Klove-Mossige parameters: a CNA core plus n3 sub-sampled ULA blocks.
struct KloveParams {
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    std::int64_t n3 = 0;
};

/// Generator array plus mirror shift; the symmetric array is
/// G union (max G - G + shift).
struct ShiftedGenerator {
    SensorArray generator;  // normalized
    Position shift = 0;     // lambda >= 0
};

/// Reduced-redundancy array: prefix, uniform mid section with pitch
/// mid_spacing, and suffix, sized to hit total_sensors exactly.
struct RraParams {
    SensorArray prefix;
    SensorArray suffix;
    Position mid_spacing = 1;
    std::int64_t total_sensors = 0;
};

SensorArray ula(std::int64_t n);
SensorArray nested(const NestedParams& p);
SensorArray cna(const NestedParams& p);
SensorArray kma(const KloveParams& p);
SensorArray ka(const KloveParams& p);
SensorArray symmetrize(const ShiftedGenerator& g);
SensorArray rra(const RraParams& p);

struct ConditionPair {
    bool c1 = false;  // (G-G) u (G+G-L) u (L-(G+G)) covers {0:max G}
    bool c2 = false;  // G+G covers {0:lambda-1}
};

/// Exact evaluation of the two contiguity conditions; c1 && c2 holds iff the
/// sum co-array of symmetrize(g) is contiguous.
ConditionPair check_conditions(const ShiftedGenerator& g);

/// Shortcut checks, each of which implies the corresponding exact condition.
struct SufficientConditions {
    bool c1_via_diff_contiguous = false;
    bool c1_via_sum_contiguous_small_shift = false;  // contiguous sums and lambda <= max G + 1
    bool c2_via_shift_le_1 = false;
    bool c2_via_shift_le_3_two_sensors = false;
    bool c2_via_sum_contiguous = false;              // contiguous sums and lambda <= 2 max G + 1
};
SufficientConditions sufficient_conditions(const ShiftedGenerator& g);

/// First hole of the nested-array sum co-array, in closed form.
Position na_first_hole(const NestedParams& p);

/// First hole of the Klove-Mossige sum co-array, in closed form
/// (three case branches).
Position kma_first_hole(const KloveParams& p);

// Closed-form property accessors (case analyses included).
Position cna_aperture(const NestedParams& p);
std::int64_t cna_sensor_count(const NestedParams& p);
std::int64_t cna_unit_spacings(const NestedParams& p);
Position ka_aperture(const KloveParams& p);  // requires n2 >= 1
std::int64_t ka_sensor_count(const KloveParams& p);
std::int64_t ka_unit_spacings(const KloveParams& p);
std::int64_t kma_sensor_count(const KloveParams& p);

}  // namespace coarr
