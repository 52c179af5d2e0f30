#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "coarr/sensor_array.hpp"

namespace coarr {

/// Exact decimal value of the closely-spaced-sensor regularizer
///   varsigma = sum_d S(d) * 10^(-d*w),  w = floor(log10 L_ref) + 1.
///
/// Every S(d) fits in w digits (S(d) <= L <= L_ref < 10^w), so the decimal
/// expansion is just the concatenation of zero-padded w-digit blocks. Storing
/// the digit string keeps comparisons exact; no floating point is involved.
class Varsigma {
public:
    Varsigma() = default;  // zero

    /// weights[i] = S(i+1); reference_aperture fixes the digit width.
    static Varsigma from_weights(const std::vector<std::int64_t>& weights,
                                 Position reference_aperture);

    /// Fractional digits, one w-digit block per displacement.
    const std::string& digits() const { return digits_; }
    int block_width() const { return width_; }

    /// Decimal rendering, e.g. "0.040203" (trailing zeros trimmed).
    std::string to_string() const;

    // Compares as decimal fractions: lexicographic on digits padded with '0'.
    friend std::strong_ordering operator<=>(const Varsigma& a, const Varsigma& b) {
        const std::size_t n = std::max(a.digits_.size(), b.digits_.size());
        for (std::size_t i = 0; i < n; ++i) {
            const char ca = i < a.digits_.size() ? a.digits_[i] : '0';
            const char cb = i < b.digits_.size() ? b.digits_[i] : '0';
            if (ca != cb) return ca <=> cb;
        }
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Varsigma& a, const Varsigma& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    std::string digits_;
    int width_ = 1;
};

}  // namespace coarr
