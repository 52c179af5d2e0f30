#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coarr/metrics.hpp"

namespace coarr {

/// Bound pair for an asymptotic quantity; lower == upper when exact.
/// An empty upper models an unbounded quantity (RRA redundancy).
struct BoundPair {
    Rational lower{0};
    std::optional<Rational> upper;

    bool exact() const { return upper && *upper == lower; }
    double lo() const { return boost::rational_cast<double>(lower); }
    double hi() const {
        return upper ? boost::rational_cast<double>(*upper)
                     : std::numeric_limits<double>::infinity();
    }
    static BoundPair exactly(Rational v) { return {v, v}; }
};

/// Stored literature constants: asymptotic redundancy and filling-ratio
/// bounds. These are reference values, not re-derived here.
struct AsymptoticConstants {
    static BoundPair general_mra_redundancy();     // (1.090, 1.730)
    static BoundPair restricted_mra_redundancy();  // (1.190, 1.917)
    static Rational na_redundancy();               // 2
    static Rational cna_redundancy();              // 2
    static Rational kas_redundancy();              // 2
    static Rational ka_redundancy();               // 23/12
    static Rational kma_redundancy();              // 7/4
    static Rational kma_filling_ratio();           // 7/11
};

/// One closed-form family row: H(N), L(N), S1(N) as exact rationals in N,
/// plus the asymptotic constants. Formula rows are representative scaling
/// laws; they hold exactly only at family-specific N.
struct FamilyRow {
    std::string name;
    std::function<Rational(std::int64_t)> contiguous_dofs;  // H(N); null if n/a
    std::function<Rational(std::int64_t)> aperture;         // L(N); null if n/a
    std::function<Rational(std::int64_t)> unit_spacings;    // S1(N); null if n/a
    BoundPair redundancy;  // R_inf
    BoundPair filling;     // F_inf
    bool contiguous_sum_coarray = false;
    // General-MRA rows are definitionally at least as good as the restricted
    // reference; ratio intervals get clamped at 1 accordingly.
    bool dominates_reference = false;
};

std::vector<FamilyRow> closed_form_rows();

struct Interval {
    double lo = 0, hi = 0;
};

enum class RatioKind { h_over_href, n_over_nref, l_over_lref };
enum class LimitVariable { h, n, l };

/// Asymptotic ratio of a family against a reference, from (R_inf, F_inf)
/// pairs, following the relative-ratio identities.
Interval asymptotic_ratio(RatioKind kind, LimitVariable limit,
                          const BoundPair& r, const BoundPair& f,
                          const BoundPair& r_ref, const BoundPair& f_ref,
                          bool clamp_at_one = false);

struct RatioRow {
    std::string family;
    Interval h_ratio_n;  // lim H/H_ref as N -> inf
    Interval h_ratio_l;  // as L -> inf
    Interval n_ratio_h;  // lim N/N_ref as H -> inf
    Interval n_ratio_l;  // as L -> inf
    Interval l_ratio_h;  // lim L/L_ref as H -> inf
    Interval l_ratio_n;  // as N -> inf
};

/// All ratio rows against the restricted-MRA reference.
std::vector<RatioRow> ratio_table();

}  // namespace coarr
