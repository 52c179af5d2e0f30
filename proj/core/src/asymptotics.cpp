#include "coarr/asymptotics.hpp"

#include <cmath>

namespace coarr {

BoundPair AsymptoticConstants::general_mra_redundancy() {
    return {Rational(109, 100), Rational(173, 100)};
}
BoundPair AsymptoticConstants::restricted_mra_redundancy() {
    return {Rational(119, 100), Rational(1917, 1000)};
}
Rational AsymptoticConstants::na_redundancy() { return Rational(2); }
Rational AsymptoticConstants::cna_redundancy() { return Rational(2); }
Rational AsymptoticConstants::kas_redundancy() { return Rational(2); }
Rational AsymptoticConstants::ka_redundancy() { return Rational(23, 12); }
Rational AsymptoticConstants::kma_redundancy() { return Rational(7, 4); }
Rational AsymptoticConstants::kma_filling_ratio() { return Rational(7, 11); }

namespace {
Rational quad(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t q,
              std::int64_t n) {
    return Rational(a * n * n + b * n + c, q);
}
const BoundPair kOne = BoundPair::exactly(Rational(1));
const BoundPair kHalfToOne{Rational(1, 2), Rational(1)};
}  // namespace

std::vector<FamilyRow> closed_form_rows() {
    std::vector<FamilyRow> rows;
    rows.push_back({"MRA", nullptr, nullptr, nullptr,
                    AsymptoticConstants::general_mra_redundancy(), kHalfToOne, false,
                    true});
    // H and L oriented per the constructed arrays: the N(L) inversion
    // sqrt(4L+5)-1 and the total-DoF count H+N/2-1 both pin the aperture to
    // (N^2+2N-4)/4 and the contiguous DoFs to (N^2+4N)/4.
    rows.push_back({"NA",
                    [](std::int64_t n) { return quad(1, 4, 0, 4, n); },
                    [](std::int64_t n) { return quad(1, 2, -4, 4, n); },
                    [](std::int64_t n) { return Rational(n, 2); },
                    BoundPair::exactly(AsymptoticConstants::na_redundancy()),
                    BoundPair::exactly(Rational(1, 2)), false, false});
    rows.push_back({"KMA",
                    [](std::int64_t n) { return quad(2, 8, 1, 7, n); },
                    [](std::int64_t n) { return quad(11, 16, -61, 49, n); },
                    [](std::int64_t n) { return Rational(2 * n + 4, 7); },
                    BoundPair::exactly(AsymptoticConstants::kma_redundancy()),
                    BoundPair::exactly(AsymptoticConstants::kma_filling_ratio()),
                    false, false});
    rows.push_back({"R-MRA", nullptr, nullptr, nullptr,
                    AsymptoticConstants::restricted_mra_redundancy(), kOne, true,
                    false});
    rows.push_back({"RRA",
                    [](std::int64_t n) { return Rational(30 * n - 706); },
                    [](std::int64_t n) { return Rational(15 * n - 353); },
                    [](std::int64_t) { return Rational(10); },
                    BoundPair{Rational(1)},  // unbounded redundancy
                    kOne, true, false});
    rows.push_back({"CNA",
                    [](std::int64_t n) { return quad(1, 6, -3, 4, n); },
                    [](std::int64_t n) { return quad(1, 6, -7, 8, n); },
                    [](std::int64_t n) { return Rational(n - 1, 2); },
                    BoundPair::exactly(AsymptoticConstants::cna_redundancy()), kOne,
                    true, false});
    rows.push_back({"KA_S",
                    [](std::int64_t n) { return quad(1, 10, -83, 4, n); },
                    [](std::int64_t n) { return quad(1, 10, -87, 8, n); },
                    [](std::int64_t) { return Rational(8); },
                    BoundPair::exactly(AsymptoticConstants::kas_redundancy()), kOne,
                    true, false});
    rows.push_back({"KA_R",
                    [](std::int64_t n) { return quad(6, 36, -15, 23, n); },
                    [](std::int64_t n) { return quad(3, 18, -19, 23, n); },
                    [](std::int64_t n) { return Rational(4 * n + 12, 23); },
                    BoundPair::exactly(AsymptoticConstants::ka_redundancy()), kOne,
                    true, false});
    return rows;
}

Interval asymptotic_ratio(RatioKind kind, LimitVariable limit, const BoundPair& r,
                          const BoundPair& f, const BoundPair& r_ref,
                          const BoundPair& f_ref, bool clamp_at_one) {
    Interval out;
    switch (kind) {
        case RatioKind::h_over_href:
            if (limit == LimitVariable::n) {
                out = {r_ref.lo() / r.hi(), r_ref.hi() / r.lo()};
            } else {  // L -> inf
                out = {f.lo() / f_ref.hi(), f.hi() / f_ref.lo()};
            }
            if (clamp_at_one) out.lo = std::max(out.lo, 1.0);
            break;
        case RatioKind::n_over_nref:
            if (limit == LimitVariable::h) {
                out = {std::sqrt(r.lo() / r_ref.hi()), std::sqrt(r.hi() / r_ref.lo())};
            } else {  // L -> inf
                out = {std::sqrt(r.lo() / r_ref.hi()) * std::sqrt(f.lo() / f_ref.hi()),
                       std::sqrt(r.hi() / r_ref.lo()) * std::sqrt(f.hi() / f_ref.lo())};
            }
            if (clamp_at_one) out.hi = std::min(out.hi, 1.0);
            break;
        case RatioKind::l_over_lref:
            if (limit == LimitVariable::h) {
                out = {f_ref.lo() / f.hi(), f_ref.hi() / f.lo()};
            } else {  // N -> inf
                out = {(r_ref.lo() / r.hi()) * (f_ref.lo() / f.hi()),
                       (r_ref.hi() / r.lo()) * (f_ref.hi() / f.lo())};
            }
            if (clamp_at_one) out.lo = std::max(out.lo, 1.0);
            break;
    }
    return out;
}

std::vector<RatioRow> ratio_table() {
    const BoundPair r_ref = AsymptoticConstants::restricted_mra_redundancy();
    const BoundPair f_ref = kOne;
    std::vector<RatioRow> out;
    for (const FamilyRow& row : closed_form_rows()) {
        const bool self = row.name == "R-MRA";
        const BoundPair r = self ? f_ref /*exactly one after self-division*/ : row.redundancy;
        RatioRow rr;
        rr.family = row.name;
        if (self) {
            rr = {row.name, {1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}};
        } else if (!row.redundancy.upper && row.name == "RRA") {
            // unbounded redundancy: ratios degenerate to 0 / infinity
            const double inf = std::numeric_limits<double>::infinity();
            rr = {row.name, {0, 0}, {1, 1}, {inf, inf}, {inf, inf}, {1, 1}, {0, 0}};
        } else {
            rr.h_ratio_n = asymptotic_ratio(RatioKind::h_over_href, LimitVariable::n,
                                            r, row.filling, r_ref, f_ref,
                                            row.dominates_reference);
            rr.h_ratio_l = asymptotic_ratio(RatioKind::h_over_href, LimitVariable::l,
                                            r, row.filling, r_ref, f_ref, false);
            rr.n_ratio_h = asymptotic_ratio(RatioKind::n_over_nref, LimitVariable::h,
                                            r, row.filling, r_ref, f_ref,
                                            row.dominates_reference);
            rr.n_ratio_l = asymptotic_ratio(RatioKind::n_over_nref, LimitVariable::l,
                                            r, row.filling, r_ref, f_ref,
                                            row.dominates_reference);
            rr.l_ratio_h = asymptotic_ratio(RatioKind::l_over_lref, LimitVariable::h,
                                            r, row.filling, r_ref, f_ref, false);
            rr.l_ratio_n = asymptotic_ratio(RatioKind::l_over_lref, LimitVariable::n,
                                            r, row.filling, r_ref, f_ref,
                                            row.dominates_reference);
        }
        out.push_back(std::move(rr));
    }
    return out;
}

}  // namespace coarr
