// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. `--slow` additionally runs the full-scale sensing experiment
// (10^4-point grid, 1000 trials); the default run uses a scaled-down version.

#include <cmath>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "coarr/asymptotics.hpp"
#include "coarr/coarray.hpp"
#include "coarr/constructions.hpp"
#include "coarr/metrics.hpp"
#include "coarr/optimize.hpp"
#include "coarr/sensing.hpp"

using namespace coarr;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " " << id << ": " << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << '\n';
    if (!ok) ++failures;
}

// ------------------------------------------------------------------ 1
void c1_cna_closed_form() {
    bool ok = true;
    std::string detail;
    for (std::int64_t n = 2; n <= 200 && ok; ++n) {
        Position brute = -1;
        for (std::int64_t n1 = 0; n1 <= n; ++n1)
            for (std::int64_t n2 : {n - 2 * n1, std::int64_t{0}}) {
                if (n2 < 0 || (n1 == 0 && n2 == 0)) continue;
                if (cna_sensor_count({n1, n2}) != n) continue;
                brute = std::max(brute, cna_aperture({n1, n2}));
            }
        if (cna_opt(n).aperture != brute) {
            ok = false;
            detail = "mismatch at N=" + std::to_string(n);
        }
    }
    report(1, "closed-form CNA aperture equals exhaustive sweep, N in [2,200]", ok,
           detail);
}

// ------------------------------------------------------------------ 2
void c2_klove_grid_closed_form() {
    bool ok = true;
    std::string detail;
    for (std::int64_t n : {20, 43, 66, 112, 250}) {
        const SearchOutcome s = ka_r_grid(n);
        const std::int64_t n1 = (n + 3) / 23;
        const std::int64_t n3 = (9 * n - 42) / (n + 26);
        const Position l = (3 * n * n + 18 * n - 19) / 23;
        if (!s.klove_params || s.klove_params->n1 != n1 || s.klove_params->n2 != 5 * n1 ||
            s.klove_params->n3 != n3 || s.aperture != l) {
            ok = false;
            detail = "mismatch at N=" + std::to_string(n);
        }
    }
    report(2, "grid-search optimum matches the closed-form parameter family", ok, detail);
}

// ------------------------------------------------------------------ 3
void c3_contiguity_suites() {
    bool ok = true;
    std::string detail;
    auto full_interval = [](const CoArray& c, Position top) {
        return is_contiguous(c) && c.max() == top &&
               c.size() == static_cast<std::size_t>(top + 1);
    };
    for (std::int64_t n1 = 0; n1 <= 6 && ok; ++n1)
        for (std::int64_t n2 = 0; n2 <= 6 && ok; ++n2) {
            if (n1 == 0 && n2 == 0) continue;
            const SensorArray c = cna({n1, n2});
            if (!full_interval(sum_coarray(c), 2 * c.max())) {
                ok = false;
                detail = "cna sum not full interval";
            }
            if (!is_contiguous(diff_coarray(nested({n1, n2})))) {
                ok = false;
                detail = "nested diff not contiguous";
            }
        }
    for (std::int64_t n1 = 0; n1 <= 5 && ok; ++n1)
        for (std::int64_t n2 = 0; n2 <= 5 && ok; ++n2)
            for (std::int64_t n3 = 0; n3 <= 5 && ok; ++n3) {
                if (n1 == 0 && n2 == 0) continue;
                const SensorArray a = ka({n1, n2, n3});
                if (!full_interval(sum_coarray(a), 2 * a.max())) {
                    ok = false;
                    detail = "ka sum not full interval";
                }
                if (!is_contiguous(diff_coarray(kma({n1, n2, n3})))) {
                    ok = false;
                    detail = "kma diff not contiguous";
                }
            }
    report(3, "construction families have the advertised contiguous co-arrays", ok,
           detail);
}

// ------------------------------------------------------------------ 4
void c4_first_hole_closed_form() {
    bool ok = true;
    std::string detail;
    for (std::int64_t n1 = 0; n1 <= 5 && ok; ++n1)
        for (std::int64_t n2 = 0; n2 <= 5 && ok; ++n2)
            for (std::int64_t n3 = 0; n3 <= 5 && ok; ++n3) {
                if (n1 == 0 && n2 == 0) continue;
                const KloveParams p{n1, n2, n3};
                if (kma_first_hole(p) != first_hole(sum_coarray(kma(p)))) {
                    ok = false;
                    detail = "mismatch at (" + std::to_string(n1) + "," +
                             std::to_string(n2) + "," + std::to_string(n3) + ")";
                }
            }
    report(4, "first-hole closed form matches the brute-force sum co-array", ok, detail);
}

// ------------------------------------------------------------------ 5
void c5_condition_equivalence() {
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(20260823);
    std::uniform_int_distribution<Position> pos(0, 12);
    std::uniform_int_distribution<int> cnt(0, 7);
    for (int t = 0; t < 500 && ok; ++t) {
        std::vector<Position> v{0};
        for (int i = cnt(rng); i > 0; --i) v.push_back(pos(rng));
        const SensorArray g = SensorArray::from_unsorted(std::move(v));
        for (Position lambda = 0; lambda <= 2 * g.max() + 2; ++lambda) {
            const ConditionPair c = check_conditions({g, lambda});
            const bool cont = is_contiguous(sum_coarray(symmetrize({g, lambda})));
            if ((c.c1 && c.c2) != cont) {
                ok = false;
                detail = "generator/shift disagreement at trial " + std::to_string(t);
                break;
            }
        }
    }
    report(5, "symmetric-generator conditions are equivalent to sum contiguity", ok,
           detail);
}

// ------------------------------------------------------------------ 6
void c6_mra_tables() {
    bool ok = true;
    std::string detail;
    const SearchOutcome r8 = mra_search(8, true);
    if (r8.contiguous_dofs != 27 || r8.array != SensorArray({0, 1, 2, 5, 8, 11, 12, 13})) {
        ok = false;
        detail = "restricted 8-sensor winner wrong";
    }
    const SearchOutcome g8 = mra_search(8, false);
    if (g8.contiguous_dofs != 27 || g8.array != SensorArray({0, 1, 3, 5, 7, 8, 17, 18})) {
        ok = false;
        detail = "general 8-sensor winner wrong";
    }
    // Seven sensors, restricted: two arrays tile aperture 10; the varsigma
    // tie-break (the same rule that selects the 8-sensor winners) picks the
    // one with the fewest closely spaced sensors.
    const auto all7 = mra_search_all(7, true);
    bool has_alternative = false;
    for (const SearchOutcome& s : all7)
        if (s.array == SensorArray({0, 1, 2, 5, 8, 9, 10})) has_alternative = true;
    const SearchOutcome r7 = mra_search(7, true);
    if (all7.size() != 2 || !has_alternative ||
        r7.array != SensorArray({0, 1, 3, 5, 7, 9, 10}) || r7.aperture != 10) {
        ok = false;
        detail = "restricted 7-sensor tie set wrong";
    }
    report(6, "exhaustive searches reproduce the 7/8-sensor optima", ok, detail);
}

// ------------------------------------------------------------------ 7
void c7_grid_bound() {
    bool ok = true;
    std::string detail;
    for (std::int64_t n : {10, 100, 1000, 10000}) {
        const GridSizeBound g = grid_size_bound(n);
        if (static_cast<double>(g.actual) > g.bound) {
            ok = false;
            detail = "bound violated at N=" + std::to_string(n);
        }
    }
    report(7, "grid size stays below (N+4)ln(N/2+2) - 3(N+2)/4", ok, detail);
}

// ------------------------------------------------------------------ 8
void c8_redundancy_approach() {
    bool ok = true;
    std::string detail;
    const Rational limit(23, 12);
    std::vector<Rational> r;
    for (std::int64_t k = 1; k <= 20; ++k) {
        const SensorArray a = ka({k, 5 * k, 9});
        const std::int64_t n = static_cast<std::int64_t>(a.size());
        if (n != 23 * k + 9) {
            ok = false;
            detail = "sensor count off at k=" + std::to_string(k);
        }
        const ArrayMetrics m = metrics(a);
        r.emplace_back(n * (n + 1) / 2, m.contiguous_dofs);
        if (!(r.back() < limit)) {
            ok = false;
            detail = "R >= 23/12 at k=" + std::to_string(k);
        }
    }
    // redundancy climbs toward 23/12; the k=1 member overshoots the k=2 one
    // slightly, so monotonicity is checked from k=2 on plus the end-to-end
    // increase
    if (!(r[19] > r[0])) {
        ok = false;
        detail = "R(20) <= R(1)";
    }
    for (std::size_t i = 1; i + 1 < r.size(); ++i)
        if (!(r[i] < r[i + 1])) {
            ok = false;
            detail = "not increasing at k=" + std::to_string(i + 1);
        }
    report(8, "family redundancy approaches 23/12 from below", ok, detail);
}

// ------------------------------------------------------------------ 9
void c9_sensing_experiment(bool slow) {
    bool ok = true;
    std::string detail;
    // the 17-sensor aperture-70 sweep winner: contiguous DoFs 101 vs the
    // 21-sensor Klove array's 141 over the same aperture
    const SearchOutcome kmopt = kma_opt(17, 70);
    const SensorArray karr = ka({2, 5, 1});
    if (!kmopt.klove_params || kmopt.contiguous_dofs != 101 || kmopt.aperture != 70 ||
        metrics(karr).contiguous_dofs != 141 || karr.max() != 70) {
        ok = false;
        detail = "array figures of merit wrong";
    }

    sensing::ExperimentConfig cfg;
    cfg.arrays = {{"KMA", kmopt.array}, {"KA_R", karr}};
    cfg.grid_points = slow ? 10000 : 2001;
    cfg.trials = slow ? 1000 : 50;
    cfg.seed = 20260823;
    const sensing::ExperimentResult res = sensing::run_experiment(cfg);

    double kma_mean[2] = {0, 0}, ka_mean[2] = {0, 0};
    for (const auto& m : res.means) {
        const int snr_idx = m.snr_db ? 1 : 0;
        (m.array_name == "KMA" ? kma_mean : ka_mean)[snr_idx] = m.mean_rmse_deg;
    }
    std::ostringstream os;
    os << "mean RMSE deg (noiseless, 5 dB): KMA " << kma_mean[0] << ", " << kma_mean[1]
       << "; KA_R " << ka_mean[0] << ", " << ka_mean[1];
    if (!(ka_mean[0] < kma_mean[0] && ka_mean[1] < kma_mean[1])) {
        ok = false;
        detail = "ordering violated";
    }
    if (slow) {
        // magnitude targets are soft: warn, do not fail (RNG-dependent)
        const double target[4] = {8.6, 16.2, 4.2, 7.9};  // KMA inf/5dB, KA inf/5dB
        const double got[4] = {kma_mean[0], kma_mean[1], ka_mean[0], ka_mean[1]};
        for (int i = 0; i < 4; ++i)
            if (std::abs(got[i] - target[i]) > 0.5 * target[i])
                std::cout << "WARN 9: mean " << got[i] << " outside +-50% of "
                          << target[i] << '\n';
    }
    report(9, "higher contiguous DoFs give lower OMP angle RMSE", ok,
           detail.empty() ? os.str() : detail);
}

// ------------------------------------------------------------------ 10
void c10_perfect_arrays() {
    bool ok = true;
    std::string detail;
    const SensorArray expect[3] = {SensorArray({0}), SensorArray({0, 1}),
                                   SensorArray({0, 1, 2})};
    const Rational r_expect[3] = {Rational(1), Rational(1), Rational(6, 5)};
    for (std::int64_t n = 1; n <= 3; ++n) {
        const SearchOutcome s = mra_search(n, true);
        if (s.array != expect[n - 1] ||
            metrics(s.array).redundancy != r_expect[n - 1]) {
            ok = false;
            detail = "mismatch at n=" + std::to_string(n);
        }
    }
    report(10, "tiny restricted optima are the perfect arrays", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    bool slow = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--slow") == 0) slow = true;

    c1_cna_closed_form();
    c2_klove_grid_closed_form();
    c3_contiguity_suites();
    c4_first_hole_closed_form();
    c5_condition_equivalence();
    c6_mra_tables();
    c7_grid_bound();
    c8_redundancy_approach();
    c9_sensing_experiment(slow);
    c10_perfect_arrays();

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
