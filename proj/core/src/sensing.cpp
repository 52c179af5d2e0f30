#include "coarr/sensing.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace coarr::sensing {

namespace {
constexpr double kDegToRad = std::numbers::pi / 180.0;

void check_angles(const std::vector<double>& angles, const char* what) {
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (angles[i] < -90.0 || angles[i] > 90.0)
            throw std::invalid_argument(std::string(what) + " outside [-90, 90]");
        if (i > 0 && angles[i] <= angles[i - 1])
            throw std::invalid_argument(std::string(what) + " not strictly increasing");
    }
}
}  // namespace

void Scene::validate() const {
    if (angles_deg.size() != coefficients.size())
        throw std::invalid_argument("scene angle/coefficient count mismatch");
    check_angles(angles_deg, "scene angles");
    for (const Complex& g : coefficients)
        if (std::abs(std::abs(g) - 1.0) > 1e-12)
            throw std::invalid_argument("scene coefficients must be unit modulus");
}

void MeasurementModel::validate() const {
    if (array.empty()) throw std::invalid_argument("empty array");
    if (delta <= 0) throw std::invalid_argument("spacing must be positive");
    check_angles(grid_deg, "grid angles");
}

Eigen::MatrixXcd steering_matrix(const MeasurementModel& m,
                                 const std::vector<double>& angles_deg) {
    check_angles(angles_deg, "angles");
    const auto& d = m.array.positions();
    const Eigen::Index n = static_cast<Eigen::Index>(d.size());
    const Eigen::Index v = static_cast<Eigen::Index>(angles_deg.size());
    Eigen::MatrixXcd a(n, v);
    for (Eigen::Index i = 0; i < v; ++i) {
        const double s = std::sin(angles_deg[static_cast<std::size_t>(i)] * kDegToRad);
        for (Eigen::Index r = 0; r < n; ++r) {
            const double phase =
                2.0 * std::numbers::pi * static_cast<double>(d[static_cast<std::size_t>(r)]) *
                m.delta * s;
            a(r, i) = Complex(std::cos(phase), std::sin(phase));
        }
    }
    return a;
}

Eigen::MatrixXcd khatri_rao_dictionary(const MeasurementModel& m) {
    const Eigen::MatrixXcd a = steering_matrix(m, m.grid_deg);
    const Eigen::Index n = a.rows(), v = a.cols();
    Eigen::MatrixXcd out(n * n, v);
    // Row n*N + m carries the phase of d_n + d_m; built as the columnwise
    // Kronecker product of A with itself.
    for (Eigen::Index i = 0; i < v; ++i)
        for (Eigen::Index rn = 0; rn < n; ++rn)
            out.col(i).segment(rn * n, n) = a(rn, i) * a.col(i);
    return out;
}

Measurement simulate(const MeasurementModel& m, const Scene& s,
                     std::optional<double> snr_db, std::uint64_t seed) {
    m.validate();
    s.validate();
    const Eigen::MatrixXcd a = steering_matrix(m, s.angles_deg);
    const Eigen::Index n = a.rows();
    Eigen::VectorXcd gamma(s.k_count());
    for (Eigen::Index k = 0; k < gamma.size(); ++k)
        gamma(k) = s.coefficients[static_cast<std::size_t>(k)];

    Measurement out;
    out.x = Eigen::VectorXcd::Zero(n * n);
    for (Eigen::Index k = 0; k < gamma.size(); ++k) {
        const auto col = a.col(k);
        for (Eigen::Index rn = 0; rn < n; ++rn)
            out.x.segment(rn * n, n) += gamma(k) * col(rn) * col;
    }

    if (snr_db) {
        const double k_count = static_cast<double>(s.k_count());
        out.noise_variance = k_count * std::pow(10.0, -*snr_db / 10.0);
        std::mt19937_64 rng(seed);
        // Circular complex normal: each part has variance sigma^2 / 2.
        std::normal_distribution<double> part(0.0, std::sqrt(out.noise_variance / 2.0));
        for (Eigen::Index i = 0; i < out.x.size(); ++i)
            out.x(i) += Complex(part(rng), part(rng));
    }
    return out;
}

OmpResult omp(const Eigen::VectorXcd& x, const Eigen::MatrixXcd& dictionary,
              const MeasurementModel& m, std::int64_t k) {
    const Eigen::Index v = dictionary.cols();
    if (k < 1 || k > v) throw std::invalid_argument("sparsity exceeds grid size");
    if (x.size() != dictionary.rows())
        throw std::invalid_argument("measurement/dictionary size mismatch");

    Eigen::VectorXd inv_norms(v);
    for (Eigen::Index i = 0; i < v; ++i) {
        const double nrm = dictionary.col(i).norm();
        inv_norms(i) = nrm > 0 ? 1.0 / nrm : 0.0;
    }

    OmpResult out;
    std::vector<char> selected(static_cast<std::size_t>(v), 0);
    Eigen::VectorXcd residual = x;
    Eigen::MatrixXcd basis(x.size(), k);

    for (std::int64_t it = 0; it < k; ++it) {
        const Eigen::VectorXd score =
            (dictionary.adjoint() * residual).cwiseAbs().cwiseProduct(inv_norms);
        Eigen::Index pick = -1;
        double best = -1.0;
        for (Eigen::Index i = 0; i < v; ++i) {
            if (selected[static_cast<std::size_t>(i)]) continue;
            if (score(i) > best) {  // strict: lowest index wins ties
                best = score(i);
                pick = i;
            }
        }
        selected[static_cast<std::size_t>(pick)] = 1;
        out.support.push_back(pick);
        out.estimated_angles.push_back(m.grid_deg[static_cast<std::size_t>(pick)]);
        basis.col(it) = dictionary.col(pick);

        const auto sub = basis.leftCols(it + 1);
        Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(sub);
        if (qr.rank() < it + 1) {
            // Near-duplicate grid columns: ridge-regularized normal equations.
            Eigen::MatrixXcd gram = sub.adjoint() * sub;
            const double ridge =
                1e-10 * gram.trace().real() / static_cast<double>(it + 1);
            gram += ridge * Eigen::MatrixXcd::Identity(it + 1, it + 1);
            out.coefficients = gram.ldlt().solve(sub.adjoint() * x);
            out.regularized = true;
        } else {
            out.coefficients = qr.solve(x);
        }
        residual = x - sub * out.coefficients;
    }
    out.residual_norm = residual.norm();
    return out;
}

double rmse(const OmpResult& est, const Scene& truth) {
    if (est.estimated_angles.size() != truth.angles_deg.size())
        throw std::invalid_argument("support size does not match scene size");
    std::vector<double> a = est.estimated_angles;
    std::vector<double> b = truth.angles_deg;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(acc / static_cast<double>(a.size()));
}

namespace {

std::vector<double> linspace(double lo, double hi, std::int64_t n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return out;
}

// Snap target angles onto distinct grid points (nearest, advancing on reuse).
std::vector<double> snap_to_grid(const std::vector<double>& targets,
                                 const std::vector<double>& grid) {
    std::vector<double> out;
    std::size_t cursor = 0;
    for (double t : targets) {
        while (cursor + 1 < grid.size() &&
               std::abs(grid[cursor + 1] - t) <= std::abs(grid[cursor] - t))
            ++cursor;
        out.push_back(grid[cursor]);
        ++cursor;  // keep snapped angles distinct
    }
    return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t pair_idx, std::uint64_t trial) {
    std::seed_seq seq{seed, pair_idx, trial};
    std::uint64_t out[2];
    seq.generate(reinterpret_cast<std::uint32_t*>(out),
                 reinterpret_cast<std::uint32_t*>(out) + 4);
    return out[0] ^ out[1];
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("need at least one trial");
    if (config.arrays.empty()) throw std::invalid_argument("no arrays configured");
    if (config.k_count < 1) throw std::invalid_argument("need at least one scatterer");

    const std::vector<double> grid =
        linspace(config.grid_lo_deg, config.grid_hi_deg, config.grid_points);
    const std::vector<double> angles = snap_to_grid(
        linspace(config.scene_lo_deg, config.scene_hi_deg, config.k_count), grid);

    ExperimentResult result;
    std::uint64_t pair_idx = 0;
    for (const auto& [name, array] : config.arrays) {
        MeasurementModel model{array, config.delta, grid};
        const Eigen::MatrixXcd dict = khatri_rao_dictionary(model);
        for (const auto& snr : config.snrs_db) {
            std::vector<TrialRecord> records(static_cast<std::size_t>(config.trials));
            SpectrumRecord spectrum{name, snr, {}, {}, angles};

            auto run_trial = [&](std::int64_t t) {
                std::mt19937_64 rng(mix_seed(config.seed, pair_idx, static_cast<std::uint64_t>(t)));
                std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
                Scene scene;
                scene.angles_deg = angles;
                for (std::int64_t k = 0; k < config.k_count; ++k) {
                    const double p = phase(rng);
                    scene.coefficients.emplace_back(std::cos(p), std::sin(p));
                }
                const Measurement meas = simulate(model, scene, snr, rng());
                const OmpResult est = omp(meas.x, dict, model, config.k_count);
                records[static_cast<std::size_t>(t)] = {name, snr, t, rmse(est, scene)};
                if (t == 0) {
                    for (std::size_t i = 0; i < est.support.size(); ++i) {
                        spectrum.estimated_angles_deg.push_back(est.estimated_angles[i]);
                        spectrum.magnitudes.push_back(
                            std::abs(est.coefficients(static_cast<Eigen::Index>(i))));
                    }
                }
            };

            int threads = config.threads > 0
                              ? config.threads
                              : static_cast<int>(std::thread::hardware_concurrency());
            threads = std::max(1, std::min<int>(threads, static_cast<int>(config.trials)));
            if (threads == 1) {
                for (std::int64_t t = 0; t < config.trials; ++t) run_trial(t);
            } else {
                std::atomic<std::int64_t> next{0};
                std::vector<std::thread> pool;
                for (int w = 0; w < threads; ++w)
                    pool.emplace_back([&] {
                        for (std::int64_t t = next.fetch_add(1); t < config.trials;
                             t = next.fetch_add(1))
                            run_trial(t);
                    });
                for (auto& th : pool) th.join();
            }

            double mean = 0.0;
            for (const TrialRecord& r : records) mean += r.rmse_deg;
            mean /= static_cast<double>(config.trials);
            result.means.push_back({name, snr, mean});
            result.spectra.push_back(std::move(spectrum));
            result.records.insert(result.records.end(),
                                  std::make_move_iterator(records.begin()),
                                  std::make_move_iterator(records.end()));
            ++pair_idx;
        }
    }
    return result;
}

}  // namespace coarr::sensing
