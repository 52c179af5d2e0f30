#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coarr/constructions.hpp"
#include "coarr/metrics.hpp"

namespace coarr {

/// Result of a parameter search. Aperture / contiguous DoFs are recomputed
/// from the emitted array, never taken from a formula.
struct SearchOutcome {
    SensorArray array;
    std::optional<NestedParams> nested_params;
    std::optional<KloveParams> klove_params;
    Position aperture = 0;
    std::int64_t contiguous_dofs = 0;
    Position contiguous_offset = 0;
    Varsigma varsigma;
    std::vector<std::string> trace;  // evaluated candidates, when requested
};

/// Bookkeeping of the closed-form CNA solution.
struct ClosedFormTrace {
    int alpha = 0;           // (k+1) mod 4 - 1, in {-1,0,1,2}
    Rational beta{0};        // (alpha-1)^2 / 8
    int k_residue = 0;       // N mod 4
    std::int64_t m = 0;      // (N - k) / 4
};

struct CnaOptimum {
    NestedParams params;
    ClosedFormTrace trace;
    Position aperture = 0;        // (N^2+6N-7)/8 - beta
    std::int64_t unit_spacings = 0;  // (N - alpha)/2
};

struct TwoVarSolution {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t k = 0;  // offset from the rounded relaxed optimum
};

/// Concave two-variable integer program helper: scans x = round(z) + k
/// outward in k until the integrality map yields a feasible y. On a |k| tie
/// the candidate with the larger objective wins.
TwoVarSolution solve_two_var(
    double relaxed_optimum,
    const std::function<std::optional<std::int64_t>(std::int64_t)>& integrality_map,
    const std::function<std::int64_t(std::int64_t, std::int64_t)>& objective);

/// Closed-form minimum-redundancy CNA parameters for n sensors.
CnaOptimum cna_opt(std::int64_t n);

/// Grid search over (n1, n3) for the minimum-redundancy Klove array,
/// maximizing aperture with exact varsigma tie-breaking.
SearchOutcome ka_r_grid(std::int64_t n, bool record_trace = false);

/// Closed-form KA parameters; available only for n in {20, 43, 66, 112, 250}.
std::optional<KloveParams> ka_r_closed(std::int64_t n);

/// Brute-force sweeps maximizing the offset-maximized contiguous DoFs H.
SearchOutcome na_opt(std::int64_t n);
SearchOutcome kma_opt(std::int64_t n,
                      std::optional<Position> aperture = std::nullopt);

struct MraOptions {
    std::int64_t max_sensors = 12;  // refuse larger exhaustive searches
};

/// Exhaustive minimum-redundancy search. Restricted mode additionally
/// requires the sum co-array to be a full interval {0 : 2L}. Ties on the
/// objective are broken by smallest varsigma, then lexicographically
/// smallest positions.
SearchOutcome mra_search(std::int64_t n, bool restricted,
                         const MraOptions& options = {});

/// All tied optima of the restricted/general search (for table emission).
std::vector<SearchOutcome> mra_search_all(std::int64_t n, bool restricted,
                                          const MraOptions& options = {});

struct GridSizeBound {
    std::int64_t actual = 0;  // grid points visited by ka_r_grid
    double bound = 0;         // (N+4) ln(N/2+2) - 3(N+2)/4
};
GridSizeBound grid_size_bound(std::int64_t n);

}  // namespace coarr
