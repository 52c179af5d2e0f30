#include "coarr/optimize.hpp"

#include <cmath>
#include <stdexcept>

namespace coarr {

namespace detail {

// varsigma comparison with a shared digit width (the larger aperture of the
// two candidates fixes the reference).
bool varsigma_less(const SensorArray& a, const SensorArray& b) {
    const Position ref = std::max(a.aperture(), b.aperture());
    if (ref == 0) return false;
    const Varsigma va = varsigma(a, ref);
    const Varsigma vb = varsigma(b, ref);
    return va < vb;
}

// Deterministic tie-break: smaller varsigma, then lexicographically smaller
// positions. Returns true when `cand` should replace `best`.
bool tie_break_replaces(const SensorArray& cand, const SensorArray& best) {
    if (varsigma_less(cand, best)) return true;
    if (varsigma_less(best, cand)) return false;
    return cand.positions() < best.positions();
}

}  // namespace detail

TwoVarSolution solve_two_var(
    double relaxed_optimum,
    const std::function<std::optional<std::int64_t>(std::int64_t)>& integrality_map,
    const std::function<std::int64_t(std::int64_t, std::int64_t)>& objective) {
    const std::int64_t r = std::llround(relaxed_optimum);
    const std::int64_t cap = static_cast<std::int64_t>(relaxed_optimum) + 1;
    for (std::int64_t k = 0; k <= cap; ++k) {
        std::optional<TwoVarSolution> found;
        for (const std::int64_t sign : {-1, +1}) {
            if (k == 0 && sign > 0) break;
            const std::int64_t x = r + sign * k;
            if (x < 0) continue;
            const auto y = integrality_map(x);
            if (!y) continue;
            TwoVarSolution cand{x, *y, sign * k};
            if (!found || objective(cand.x, cand.y) > objective(found->x, found->y))
                found = cand;
        }
        if (found) return *found;
    }
    throw std::runtime_error("no feasible point within the scan range");
}

CnaOptimum cna_opt(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("need at least one sensor");
    CnaOptimum out;
    out.trace.k_residue = static_cast<int>(n % 4);
    out.trace.m = (n - out.trace.k_residue) / 4;
    out.trace.alpha = (out.trace.k_residue + 1) % 4 - 1;
    const std::int64_t a = out.trace.alpha;
    out.trace.beta = Rational((a - 1) * (a - 1), 8);
    out.params = {(n - a) / 4, (n + a) / 2};
    out.aperture = boost::rational_cast<std::int64_t>(
        Rational(n * n + 6 * n - 7, 8) - out.trace.beta);
    out.unit_spacings = (n - a) / 2;
    return out;
}

SearchOutcome ka_r_grid(std::int64_t n, bool record_trace) {
    if (n < 2) throw std::invalid_argument("need at least two sensors");
    std::optional<SensorArray> best;
    KloveParams best_params;
    Position best_aperture = -1;
    std::vector<std::string> trace;

    for (std::int64_t n1 = 0; n1 <= (n - 2) / 4; ++n1) {
        for (std::int64_t n3 = 0; n3 <= (n - 4 * n1) / (n1 + 1); ++n3) {
            const std::int64_t t = n - (n1 + 1) * n3;
            if (t % 2 != 0) continue;
            const std::int64_t n2 = t / 2 - 2 * n1;
            if (n2 < 0 || (n1 == 0 && n2 == 0)) continue;
            const KloveParams p{n1, n2, n3};
            if (ka_sensor_count(p) != n) continue;
            const SensorArray cand = ka(p);
            if (static_cast<std::int64_t>(cand.size()) != n) continue;
            const Position l = cand.max();
            if (record_trace)
                trace.push_back("n1=" + std::to_string(n1) + " n2=" + std::to_string(n2) +
                                " n3=" + std::to_string(n3) + " L=" + std::to_string(l));
            if (l > best_aperture ||
                (l == best_aperture && detail::tie_break_replaces(cand, *best))) {
                best = cand;
                best_params = p;
                best_aperture = l;
            }
        }
    }
    if (!best) throw std::runtime_error("no feasible Klove parameters");

    SearchOutcome out;
    out.array = *best;
    out.klove_params = best_params;
    out.aperture = best_aperture;
    const ContiguousRun run = contiguous_dof(sum_coarray(*best));
    out.contiguous_dofs = run.length;
    out.contiguous_offset = run.offset;
    out.varsigma = varsigma(*best, best_aperture);
    out.trace = std::move(trace);
    return out;
}

std::optional<KloveParams> ka_r_closed(std::int64_t n) {
    if ((n + 3) % 23 != 0) return std::nullopt;
    if ((9 * n - 42) % (n + 26) != 0) return std::nullopt;
    const KloveParams p{(n + 3) / 23, 5 * (n + 3) / 23, (9 * n - 42) / (n + 26)};
    if (ka_sensor_count(p) != n) return std::nullopt;
    return p;
}

namespace {

SearchOutcome finish_outcome(SensorArray array, std::optional<NestedParams> np,
                             std::optional<KloveParams> kp) {
    SearchOutcome out;
    out.aperture = array.aperture();
    const ContiguousRun run = contiguous_dof(sum_coarray(array));
    out.contiguous_dofs = run.length;
    out.contiguous_offset = run.offset;
    out.varsigma = out.aperture > 0 ? varsigma(array, out.aperture) : Varsigma{};
    out.array = std::move(array);
    out.nested_params = np;
    out.klove_params = kp;
    return out;
}

}  // namespace

SearchOutcome na_opt(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("need at least two sensors");
    std::optional<SensorArray> best;
    NestedParams best_params;
    std::int64_t best_h = -1;
    auto consider = [&](const NestedParams& p) {
        const SensorArray cand = nested(p);
        if (static_cast<std::int64_t>(cand.size()) != n) return;
        const std::int64_t h = contiguous_dof(sum_coarray(cand)).length;
        if (h > best_h || (h == best_h && detail::tie_break_replaces(cand, *best))) {
            best = cand;
            best_params = p;
            best_h = h;
        }
    };
    for (std::int64_t n1 = n - 1; n1 >= 0; --n1) consider({n1, n - n1});
    consider({n, 0});
    if (!best) throw std::runtime_error("no feasible nested parameters");
    return finish_outcome(*best, best_params, std::nullopt);
}

SearchOutcome kma_opt(std::int64_t n, std::optional<Position> aperture) {
    if (n < 2) throw std::invalid_argument("need at least two sensors");
    std::optional<SensorArray> best;
    KloveParams best_params;
    std::int64_t best_h = -1;
    auto consider = [&](const KloveParams& p) {
        if (kma_sensor_count(p) != n) return;
        const SensorArray cand = kma(p);
        if (static_cast<std::int64_t>(cand.size()) != n) return;
        if (aperture && cand.max() != *aperture) return;
        const std::int64_t h = contiguous_dof(sum_coarray(cand)).length;
        if (h > best_h || (h == best_h && detail::tie_break_replaces(cand, *best))) {
            best = cand;
            best_params = p;
            best_h = h;
        }
    };
    for (std::int64_t n1 = 0; n1 <= n; ++n1) {
        for (std::int64_t n3 = 0; (n1 + 1) * n3 <= n; ++n3) {
            const std::int64_t n2 = n - 2 * n1 - (n1 + 1) * n3;
            if (n2 >= 1) consider({n1, n2, n3});
            if (n1 >= 1 && n1 + (n1 + 1) * n3 == n) consider({n1, 0, n3});
        }
    }
    if (!best) throw std::runtime_error("no feasible Klove-Mossige parameters");
    return finish_outcome(*best, std::nullopt, best_params);
}

GridSizeBound grid_size_bound(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("need at least two sensors");
    GridSizeBound out;
    for (std::int64_t n1 = 0; n1 <= (n - 2) / 4; ++n1)
        out.actual += (n - 4 * n1) / (n1 + 1) + 1;
    out.bound = (static_cast<double>(n) + 4) * std::log(static_cast<double>(n) / 2 + 2) -
                3.0 * (static_cast<double>(n) + 2) / 4;
    return out;
}

}  // namespace coarr
