#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coarr/sensor_array.hpp"

namespace coarr::sensing {

using Complex = std::complex<double>;

/// K unit-modulus scatterers at strictly increasing azimuths (degrees).
struct Scene {
    std::vector<double> angles_deg;
    std::vector<Complex> coefficients;

    std::int64_t k_count() const { return static_cast<std::int64_t>(angles_deg.size()); }
    void validate() const;
};

/// Physical array, inter-sensor spacing in wavelengths, and the angular
/// search grid (degrees, strictly increasing).
struct MeasurementModel {
    SensorArray array;
    double delta = 0.5;
    std::vector<double> grid_deg;

    void validate() const;
};

/// Matched-filtered snapshot x = (A (.) A) gamma + n of length N^2.
struct Measurement {
    Eigen::VectorXcd x;
    double noise_variance = 0.0;
};

struct OmpResult {
    std::vector<std::int64_t> support;       // grid indices, selection order
    std::vector<double> estimated_angles;    // degrees, same order as support
    Eigen::VectorXcd coefficients;           // least-squares refit amplitudes
    double residual_norm = 0.0;
    bool regularized = false;  // ridge fallback was needed in some refit
};

/// Steering matrix: entry (n, i) = exp(j 2 pi d_n delta sin(angle_i)).
Eigen::MatrixXcd steering_matrix(const MeasurementModel& m,
                                 const std::vector<double>& angles_deg);

/// Columnwise Kronecker product A (.) A: N^2 x V, row n*N + m holds
/// exp(j 2 pi (d_n + d_m) delta sin(angle)).
Eigen::MatrixXcd khatri_rao_dictionary(const MeasurementModel& m);

/// Simulate one snapshot. snr_db empty => noiseless. Noise is i.i.d.
/// circular complex normal with per-entry variance sigma^2 = K * 10^(-snr/10)
/// (scene SNR is K / sigma^2 with unit-power scatterers). Deterministic in
/// the seed.
Measurement simulate(const MeasurementModel& m, const Scene& s,
                     std::optional<double> snr_db, std::uint64_t seed);

/// Greedy orthogonal matching pursuit: k iterations, each selecting the
/// column maximizing |<column, residual>| / ||column|| (lowest index on
/// ties), followed by a least-squares refit over the selected set. A
/// numerically singular refit falls back to a trace-scaled ridge
/// (1e-10 * trace / k) and sets `regularized`.
OmpResult omp(const Eigen::VectorXcd& x, const Eigen::MatrixXcd& dictionary,
              const MeasurementModel& m, std::int64_t k);

/// Angle RMSE in degrees: both lists sorted ascending and paired elementwise.
double rmse(const OmpResult& est, const Scene& truth);

struct ExperimentConfig {
    std::vector<std::pair<std::string, SensorArray>> arrays;
    std::int64_t grid_points = 10000;
    double grid_lo_deg = -75.0, grid_hi_deg = 75.0;
    std::int64_t k_count = 65;
    double scene_lo_deg = -60.0, scene_hi_deg = 60.0;
    std::int64_t trials = 1000;
    // Empty optional = noiseless.
    std::vector<std::optional<double>> snrs_db = {std::nullopt, 5.0};
    std::uint64_t seed = 0;
    double delta = 0.5;
    int threads = 0;  // 0 = hardware concurrency
};

struct TrialRecord {
    std::string array_name;
    std::optional<double> snr_db;
    std::int64_t trial = 0;
    double rmse_deg = 0.0;
};

/// Sparse spectrum of one representative trial, for plotting.
struct SpectrumRecord {
    std::string array_name;
    std::optional<double> snr_db;
    std::vector<double> estimated_angles_deg;
    std::vector<double> magnitudes;
    std::vector<double> true_angles_deg;
};

struct ExperimentResult {
    std::vector<TrialRecord> records;
    // Aggregated in config order: one mean per (array, snr) pair.
    struct Mean {
        std::string array_name;
        std::optional<double> snr_db;
        double mean_rmse_deg = 0.0;
    };
    std::vector<Mean> means;
    std::vector<SpectrumRecord> spectra;  // from trial 0 of each pair
};

/// Monte-Carlo experiment. Scene angles are uniformly spaced over
/// [scene_lo, scene_hi] and snapped to the grid; scatterer phases are
/// redrawn per trial. Trial t uses an RNG stream derived from (seed, pair,
/// t), so results are independent of the execution schedule.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace coarr::sensing
