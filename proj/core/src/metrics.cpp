#include "coarr/metrics.hpp"

#include <stdexcept>

namespace coarr {

Varsigma Varsigma::from_weights(const std::vector<std::int64_t>& weights,
                                Position reference_aperture) {
    if (reference_aperture < 1) return Varsigma{};
    int width = 0;
    for (Position v = reference_aperture; v > 0; v /= 10) ++width;
    std::int64_t cap = 1;
    for (int i = 0; i < width; ++i) cap *= 10;
    Varsigma out;
    out.width_ = width;
    out.digits_.reserve(weights.size() * static_cast<std::size_t>(width));
    for (std::int64_t w : weights) {
        if (w < 0 || w >= cap)
            throw std::invalid_argument("weight does not fit in the digit width");
        std::string block(static_cast<std::size_t>(width), '0');
        for (int i = width - 1; i >= 0 && w > 0; --i, w /= 10)
            block[static_cast<std::size_t>(i)] = static_cast<char>('0' + w % 10);
        out.digits_ += block;
    }
    return out;
}

std::string Varsigma::to_string() const {
    std::string frac = digits_;
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (frac.empty()) return "0";
    return "0." + frac;
}

std::vector<std::int64_t> weight_function(const SensorArray& d) {
    if (d.empty()) throw std::invalid_argument("empty array");
    const auto& p = d.positions();
    const Position span = d.aperture();
    std::vector<std::int64_t> s(static_cast<std::size_t>(span), 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            ++s[static_cast<std::size_t>(p[j] - p[i] - 1)];
    return s;
}

Varsigma varsigma(const SensorArray& d, Position reference_aperture) {
    if (d.empty()) throw std::invalid_argument("empty array");
    if (d.aperture() == 0) return Varsigma{};
    if (reference_aperture < d.aperture())
        throw std::invalid_argument("reference aperture smaller than array aperture");
    return Varsigma::from_weights(weight_function(d), reference_aperture);
}

bool is_symmetric(const SensorArray& d) {
    if (d.empty()) throw std::invalid_argument("empty array");
    const auto& p = d.positions();
    const Position l = p.back();
    for (std::size_t i = 0, j = p.size() - 1; i <= j; ++i) {
        if (p[i] != l - p[j]) return false;
        if (j == 0) break;
        --j;
    }
    return true;
}

bool check_necessary_sensors(const SensorArray& d, CoArrayKind kind) {
    if (d.size() < 2 || !d.is_normalized())
        throw std::invalid_argument("need a normalized array with at least 2 sensors");
    const Position l = d.max();
    if (kind == CoArrayKind::sum)
        return d.contains(1) && d.contains(l - 1);
    return d.contains(1) || d.contains(l - 1);
}

ArrayMetrics metrics(const SensorArray& d) {
    if (d.empty()) throw std::invalid_argument("empty array");
    if (!d.is_normalized()) throw std::invalid_argument("array must start at 0");

    ArrayMetrics m;
    m.n_sensors = static_cast<std::int64_t>(d.size());
    m.aperture = d.aperture();

    const CoArray sums = sum_coarray(d);
    const ContiguousRun run = contiguous_dof(sums);
    m.contiguous_dofs = run.length;
    m.contiguous_offset = run.offset;
    m.first_hole = first_hole(sums);
    m.total_dofs = static_cast<std::int64_t>(sums.size());
    m.redundancy = Rational(m.n_sensors * (m.n_sensors + 1) / 2, m.contiguous_dofs);
    m.weights = weight_function(d);
    m.varsigma = m.aperture > 0 ? varsigma(d, m.aperture) : Varsigma{};
    m.symmetric = is_symmetric(d);
    return m;
}

}  // namespace coarr
