#include "coarr/constructions.hpp"

#include <boost/dynamic_bitset.hpp>
#include <stdexcept>

namespace coarr {

namespace {

void require_valid(const NestedParams& p) {
    if (p.n1 < 0 || p.n2 < 0) throw std::invalid_argument("negative nested parameter");
    if (p.n1 == 0 && p.n2 == 0) throw std::invalid_argument("empty array: n1 = n2 = 0");
}

void require_valid(const KloveParams& p) {
    if (p.n1 < 0 || p.n2 < 0 || p.n3 < 0)
        throw std::invalid_argument("negative Klove parameter");
    if (p.n1 == 0 && p.n2 == 0)
        throw std::invalid_argument("Klove-Mossige array undefined for n1 = n2 = 0");
}

// D3 of the Klove-Mossige construction: n3 copies of {0:n1:n1^2} spaced by
// n1^2 + max(CNA) + 1.
void append_d3(std::vector<Position>& out, const KloveParams& p, Position base) {
    const Position max_cna = cna_aperture({p.n1, p.n2});
    const Position period = p.n1 * p.n1 + max_cna + 1;
    for (std::int64_t i = 0; i < p.n3; ++i) {
        const Position block = base + i * period;
        if (p.n1 == 0) {
            out.push_back(block);
        } else {
            for (Position v = 0; v <= p.n1 * p.n1; v += p.n1) out.push_back(block + v);
        }
    }
}

// Pairwise-sum membership bitset over [0, 2*max].
boost::dynamic_bitset<> sum_set(const std::vector<Position>& p) {
    boost::dynamic_bitset<> s(static_cast<std::size_t>(2 * p.back() + 1));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i; j < p.size(); ++j)
            s.set(static_cast<std::size_t>(p[i] + p[j]));
    return s;
}

// Non-negative pairwise-difference membership bitset over [0, max].
boost::dynamic_bitset<> diff_set(const std::vector<Position>& p) {
    boost::dynamic_bitset<> s(static_cast<std::size_t>(p.back() + 1));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i; j < p.size(); ++j)
            s.set(static_cast<std::size_t>(p[j] - p[i]));
    return s;
}

}  // namespace

SensorArray ula(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("ULA needs at least one sensor");
    std::vector<Position> v(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    return SensorArray(std::move(v));
}

SensorArray nested(const NestedParams& p) {
    require_valid(p);
    std::vector<Position> v;
    for (Position i = 0; i < p.n1; ++i) v.push_back(i);
    for (std::int64_t i = 0; i < p.n2; ++i) v.push_back(p.n1 + i * (p.n1 + 1));
    return SensorArray::from_unsorted(std::move(v));
}

SensorArray cna(const NestedParams& p) {
    require_valid(p);
    std::vector<Position> v;
    for (Position i = 0; i < p.n1; ++i) v.push_back(i);
    for (std::int64_t i = 0; i < p.n2; ++i) v.push_back(p.n1 + i * (p.n1 + 1));
    for (Position i = 0; i < p.n1; ++i) v.push_back(p.n2 * (p.n1 + 1) + i);
    return SensorArray::from_unsorted(std::move(v));
}

SensorArray kma(const KloveParams& p) {
    require_valid(p);
    std::vector<Position> v = cna({p.n1, p.n2}).positions();
    append_d3(v, p, 2 * cna_aperture({p.n1, p.n2}) + 1);
    return SensorArray::from_unsorted(std::move(v));
}

SensorArray ka(const KloveParams& p) {
    require_valid(p);
    const Position max_cna = cna_aperture({p.n1, p.n2});
    const auto core = cna({p.n1, p.n2}).positions();
    std::vector<Position> v = core;
    append_d3(v, p, 2 * max_cna + 1);
    const Position tail = (p.n3 + 2) * max_cna + p.n3 * (p.n1 * p.n1 + 1) + 1;
    for (Position q : core) v.push_back(q + tail);
    return SensorArray::from_unsorted(std::move(v));
}

SensorArray symmetrize(const ShiftedGenerator& g) {
    if (g.generator.empty()) throw std::invalid_argument("empty generator");
    if (!g.generator.is_normalized()) throw std::invalid_argument("generator must be normalized");
    if (g.shift < 0) throw std::invalid_argument("shift must be non-negative");
    const Position top = g.generator.max();
    std::vector<Position> v = g.generator.positions();
    for (Position q : g.generator.positions()) v.push_back(top - q + g.shift);
    return SensorArray::from_unsorted(std::move(v));
}

SensorArray rra(const RraParams& p) {
    if (p.prefix.empty() || p.suffix.empty())
        throw std::invalid_argument("prefix and suffix must be non-empty");
    if (!p.prefix.is_normalized() || !p.suffix.is_normalized())
        throw std::invalid_argument("prefix and suffix must be normalized");
    if (p.mid_spacing < 1) throw std::invalid_argument("mid spacing must be positive");
    const std::int64_t np = static_cast<std::int64_t>(p.prefix.size());
    const std::int64_t ns = static_cast<std::int64_t>(p.suffix.size());
    const std::int64_t mid_count = p.total_sensors - np - ns + 2;
    if (mid_count < 1) throw std::invalid_argument("inconsistent sensor count");
    const Position max_mid = (mid_count - 1) * p.mid_spacing;
    std::vector<Position> v = p.prefix.positions();
    for (std::int64_t i = 0; i < mid_count; ++i)
        v.push_back(p.prefix.max() + i * p.mid_spacing);
    for (Position q : p.suffix.positions())
        v.push_back(p.prefix.max() + max_mid + q);
    auto out = SensorArray::from_unsorted(std::move(v));
    if (static_cast<std::int64_t>(out.size()) != p.total_sensors)
        throw std::invalid_argument("inconsistent sensor count");
    return out;
}

ConditionPair check_conditions(const ShiftedGenerator& g) {
    if (g.generator.empty()) throw std::invalid_argument("empty generator");
    if (!g.generator.is_normalized()) throw std::invalid_argument("generator must be normalized");
    const auto& pos = g.generator.positions();
    const Position top = g.generator.max();
    const Position l = top + g.shift;
    const auto sums = sum_set(pos);
    const auto diffs = diff_set(pos);
    auto in_sums = [&](Position v) {
        return v >= 0 && v <= 2 * top && sums.test(static_cast<std::size_t>(v));
    };
    ConditionPair c{true, true};
    for (Position t = 0; t <= top; ++t) {
        const bool covered = diffs.test(static_cast<std::size_t>(t)) ||
                             in_sums(t + l) || in_sums(l - t);
        if (!covered) {
            c.c1 = false;
            break;
        }
    }
    for (Position t = 0; t < g.shift; ++t) {
        if (!in_sums(t)) {
            c.c2 = false;
            break;
        }
    }
    return c;
}

SufficientConditions sufficient_conditions(const ShiftedGenerator& g) {
    if (g.generator.empty()) throw std::invalid_argument("empty generator");
    if (!g.generator.is_normalized()) throw std::invalid_argument("generator must be normalized");
    const Position top = g.generator.max();
    const bool diff_cont = is_contiguous(diff_coarray(g.generator));
    const bool sum_cont = is_contiguous(sum_coarray(g.generator));
    SufficientConditions s;
    s.c1_via_diff_contiguous = diff_cont;
    s.c1_via_sum_contiguous_small_shift = sum_cont && g.shift <= top + 1;
    s.c2_via_shift_le_1 = g.shift <= 1;
    // the two-sensor shortcut needs position 1 to be present, which the
    // necessary-sensor condition guarantees for any contiguity candidate
    s.c2_via_shift_le_3_two_sensors = g.shift <= 3 && g.generator.size() >= 2 &&
                                      g.generator.positions()[1] == 1;
    s.c2_via_sum_contiguous = sum_cont && g.shift <= 2 * top + 1;
    return s;
}

Position na_first_hole(const NestedParams& p) {
    require_valid(p);
    if (p.n1 == 0 || p.n2 == 0) return 2 * (p.n1 + p.n2) - 1;
    return p.n2 * (p.n1 + 1) + p.n1;
}

Position kma_first_hole(const KloveParams& p) {
    require_valid(p);
    const Position max_cna = cna_aperture({p.n1, p.n2});
    if (p.n1 + p.n2 == 1) {
        // degenerates to a ULA, so the sum co-array is contiguous
        const Position max_g = kma(p).max();
        return 2 * max_g + 1;
    }
    const Position h = p.n3 * (max_cna + 1 + p.n1 * p.n1) + 2 * max_cna + 1;
    // the extra covered point above h exists only when a replicated block is
    // present and the sparse mid-section has a single element with n1 >= 2
    if (p.n1 >= 2 && p.n2 == 1 && p.n3 >= 1) return h + 1;
    return h;
}

Position cna_aperture(const NestedParams& p) {
    require_valid(p);
    return (p.n1 + 1) * (p.n2 + 1) - 2;
}

std::int64_t cna_sensor_count(const NestedParams& p) {
    require_valid(p);
    return p.n2 == 0 ? p.n1 : 2 * p.n1 + p.n2;
}

std::int64_t cna_unit_spacings(const NestedParams& p) {
    require_valid(p);
    if (p.n2 == 0) return p.n1 - 1;
    if (p.n1 == 0) return p.n2 - 1;
    return 2 * p.n1;
}

Position ka_aperture(const KloveParams& p) {
    require_valid(p);
    if (p.n2 < 1) throw std::invalid_argument("KA aperture formula requires n2 >= 1");
    return (p.n1 + 1) * (p.n3 * (p.n1 + p.n2) + 3 * p.n2 + 3) - 5;
}

std::int64_t ka_sensor_count(const KloveParams& p) {
    require_valid(p);
    return 2 * cna_sensor_count({p.n1, p.n2}) + p.n3 * (p.n1 + 1);
}

std::int64_t ka_unit_spacings(const KloveParams& p) {
    require_valid(p);
    if (p.n1 == 0 && p.n2 == 1) return p.n3 + 1;
    if (p.n1 == 0) return 2 * (p.n2 - 1);
    if (p.n2 < 1) throw std::invalid_argument("KA unit-spacing formula requires n2 >= 1");
    if (p.n1 == 1) return p.n3 + 4;
    return 4 * p.n1;
}

std::int64_t kma_sensor_count(const KloveParams& p) {
    require_valid(p);
    return cna_sensor_count({p.n1, p.n2}) + p.n3 * (p.n1 + 1);
}

}  // namespace coarr
