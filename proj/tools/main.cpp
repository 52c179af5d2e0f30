// coarr: construct sparse arrays, compute co-array metrics, run parameter
// searches, and drive the active-sensing OMP experiment.
//
// Exit codes: 0 success, 2 usage/parameter error, 3 resource-limit refusal.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "coarr/asymptotics.hpp"
#include "coarr/constructions.hpp"
#include "coarr/metrics.hpp"
#include "coarr/optimize.hpp"
#include "coarr/sensing.hpp"

namespace {

using nlohmann::json;
using namespace coarr;

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

std::string positions_str(const SensorArray& d) {
    std::ostringstream os;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) os << ' ';
        os << d.positions()[i];
    }
    return os.str();
}

json metrics_json(const ArrayMetrics& m) {
    return json{{"n_sensors", m.n_sensors},
                {"aperture", m.aperture},
                {"contiguous_dofs", m.contiguous_dofs},
                {"contiguous_offset", m.contiguous_offset},
                {"first_hole", m.first_hole},
                {"redundancy", rational_str(m.redundancy)},
                {"total_dofs", m.total_dofs},
                {"weights", m.weights},
                {"varsigma", m.varsigma.to_string()},
                {"symmetric", m.symmetric}};
}

struct Emit {
    std::string format = "text";
    std::string out_path;

    void write(const std::string& body) const {
        if (out_path.empty()) {
            std::cout << body;
        } else {
            std::ofstream f(out_path);
            if (!f) throw std::runtime_error("cannot open output file: " + out_path);
            f << body;
        }
    }
};

void emit_record(const Emit& emit, const std::string& command, const SensorArray& d,
                 const json& extra) {
    const ArrayMetrics m = metrics(d);
    if (emit.format == "json") {
        json rec{{"schema_version", "1"},
                 {"command", command},
                 {"positions", d.positions()},
                 {"metrics", metrics_json(m)}};
        for (auto it = extra.begin(); it != extra.end(); ++it) rec[it.key()] = it.value();
        emit.write(rec.dump(2) + "\n");
    } else if (emit.format == "csv") {
        std::ostringstream os;
        os << "positions,n_sensors,aperture,contiguous_dofs,contiguous_offset,"
              "first_hole,redundancy,total_dofs,varsigma,symmetric\n";
        os << '"' << positions_str(d) << "\"," << m.n_sensors << ',' << m.aperture << ','
           << m.contiguous_dofs << ',' << m.contiguous_offset << ',' << m.first_hole
           << ',' << rational_str(m.redundancy) << ',' << m.total_dofs << ','
           << m.varsigma.to_string() << ',' << (m.symmetric ? "true" : "false") << '\n';
        emit.write(os.str());
    } else {
        std::ostringstream os;
        os << "positions: " << positions_str(d) << '\n'
           << "N = " << m.n_sensors << "  L = " << m.aperture << "  H = "
           << m.contiguous_dofs << " (offset " << m.contiguous_offset << ")\n"
           << "first hole = " << m.first_hole << "  R = " << rational_str(m.redundancy)
           << "  |D+D| = " << m.total_dofs << "  varsigma = " << m.varsigma.to_string()
           << (m.symmetric ? "  symmetric" : "") << '\n';
        if (!extra.empty()) os << extra.dump() << '\n';
        emit.write(os.str());
    }
}

SensorArray parse_positions(const std::vector<std::int64_t>& raw) {
    return SensorArray(std::vector<Position>(raw.begin(), raw.end()));
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
    std::string kind;
    std::int64_t n = 0, n1 = 0, n2 = 0, n3 = 0;
    std::vector<std::int64_t> generator, prefix, suffix;
    std::int64_t lambda = 0, spacing = 1;
};

SensorArray build_array(const GenerateArgs& a) {
    if (a.kind == "ula") return ula(a.n);
    if (a.kind == "nested") return nested({a.n1, a.n2});
    if (a.kind == "cna") return cna({a.n1, a.n2});
    if (a.kind == "kma") return kma({a.n1, a.n2, a.n3});
    if (a.kind == "ka") return ka({a.n1, a.n2, a.n3});
    if (a.kind == "symmetric")
        return symmetrize({parse_positions(a.generator), a.lambda});
    if (a.kind == "rra")
        return rra({parse_positions(a.prefix), parse_positions(a.suffix), a.spacing, a.n});
    throw std::invalid_argument("unknown construction kind: " + a.kind);
}

// ---------------------------------------------------------------- optimize

json params_json(const std::optional<NestedParams>& np,
                 const std::optional<KloveParams>& kp) {
    json out = json::object();
    if (np) out["params"] = {{"n1", np->n1}, {"n2", np->n2}};
    if (kp) out["params"] = {{"n1", kp->n1}, {"n2", kp->n2}, {"n3", kp->n3}};
    return out;
}

void run_optimize(const Emit& emit, const std::string& family, std::int64_t n,
                  std::int64_t mra_limit, bool trace) {
    if (family == "cna") {
        const CnaOptimum opt = cna_opt(n);
        json extra{{"params", {{"n1", opt.params.n1}, {"n2", opt.params.n2}}},
                   {"alpha", opt.trace.alpha},
                   {"beta", rational_str(opt.trace.beta)},
                   {"closed_form_aperture", opt.aperture},
                   {"closed_form_unit_spacings", opt.unit_spacings}};
        emit_record(emit, "optimize cna", cna(opt.params), extra);
        return;
    }
    SearchOutcome out;
    if (family == "ka") {
        out = ka_r_grid(n, trace);
    } else if (family == "na") {
        out = na_opt(n);
    } else if (family == "kma") {
        out = kma_opt(n);
    } else if (family == "mra" || family == "mra-restricted") {
        out = mra_search(n, family == "mra-restricted", {mra_limit});
    } else {
        throw std::invalid_argument("unknown optimizer family: " + family);
    }
    json extra = params_json(out.nested_params, out.klove_params);
    if (!out.trace.empty()) extra["trace"] = out.trace;
    emit_record(emit, "optimize " + family, out.array, extra);
}

// ------------------------------------------------------------------ tables

std::string interval_csv(const Interval& i) {
    std::ostringstream os;
    os << i.lo << ',' << i.hi;
    return os.str();
}

void run_tables(const Emit& emit, const std::string& which, std::int64_t n_min,
                std::int64_t n_max) {
    std::ostringstream os;
    if (which == "fig5" || which == "fig6" || which == "fig7") {
        os << "family,n,value\n";
        for (std::int64_t n = n_min; n <= n_max; ++n) {
            auto row = [&](const std::string& name, const SensorArray& d) {
                const ArrayMetrics m = metrics(d);
                std::int64_t value;
                if (which == "fig5") {
                    value = m.aperture;
                } else if (which == "fig7") {
                    value = m.weights.empty() ? 0 : m.weights[0];
                } else {
                    os << name << ',' << n << ',' << rational_str(m.redundancy) << '\n';
                    return;
                }
                os << name << ',' << n << ',' << value << '\n';
            };
            row("CNA", cna(cna_opt(n).params));
            row("KA_R", ka_r_grid(n).array);
            row("NA", na_opt(n).array);
            row("KMA", kma_opt(n).array);
        }
    } else if (which == "I") {
        os << "n,aperture,contiguous_dofs,redundancy,varsigma,positions\n";
        for (std::int64_t n = std::max<std::int64_t>(n_min, 1);
             n <= std::min<std::int64_t>(n_max, 8); ++n) {
            const SearchOutcome out = mra_search(n, true);
            const ArrayMetrics m = metrics(out.array);
            os << n << ',' << out.aperture << ',' << out.contiguous_dofs << ','
               << rational_str(m.redundancy) << ',' << out.varsigma.to_string() << ",\""
               << positions_str(out.array) << "\"\n";
        }
    } else if (which == "II") {
        os << "mode,n,aperture,contiguous_dofs,varsigma,positions\n";
        auto rows = [&](std::int64_t n, bool restricted) {
            for (const SearchOutcome& out : mra_search_all(n, restricted)) {
                os << (restricted ? "restricted" : "general") << ',' << n << ','
                   << out.aperture << ',' << out.contiguous_dofs << ','
                   << out.varsigma.to_string() << ",\"" << positions_str(out.array)
                   << "\"\n";
            }
        };
        rows(7, true);
        rows(8, true);
        rows(8, false);
    } else if (which == "III") {
        os << "family,redundancy_lo,redundancy_hi,filling_lo,filling_hi,"
              "contiguous_sum_coarray\n";
        for (const FamilyRow& row : closed_form_rows()) {
            os << row.name << ',' << row.redundancy.lo() << ',' << row.redundancy.hi()
               << ',' << row.filling.lo() << ',' << row.filling.hi() << ','
               << (row.contiguous_sum_coarray ? "true" : "false") << '\n';
        }
    } else if (which == "IV") {
        os << "family,h_ratio_n_lo,h_ratio_n_hi,h_ratio_l_lo,h_ratio_l_hi,"
              "n_ratio_h_lo,n_ratio_h_hi,n_ratio_l_lo,n_ratio_l_hi,"
              "l_ratio_h_lo,l_ratio_h_hi,l_ratio_n_lo,l_ratio_n_hi\n";
        for (const RatioRow& r : ratio_table()) {
            os << r.family << ',' << interval_csv(r.h_ratio_n) << ','
               << interval_csv(r.h_ratio_l) << ',' << interval_csv(r.n_ratio_h) << ','
               << interval_csv(r.n_ratio_l) << ',' << interval_csv(r.l_ratio_h) << ','
               << interval_csv(r.l_ratio_n) << '\n';
        }
    } else {
        throw std::invalid_argument("unknown table: " + which);
    }
    emit.write(os.str());
}

// --------------------------------------------------------------------- omp

std::optional<double> snr_from_json(const json& v) {
    if (v.is_null()) return std::nullopt;
    return v.get<double>();
}

sensing::ExperimentConfig parse_experiment_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read config file: " + path);
    json cfg = json::parse(f);

    sensing::ExperimentConfig out;
    if (!cfg.contains("seed"))
        throw std::invalid_argument("config requires an explicit seed");
    out.seed = cfg.at("seed").get<std::uint64_t>();
    out.trials = cfg.at("trials").get<std::int64_t>();
    if (out.trials < 1) throw std::invalid_argument("trials must be positive");
    if (cfg.contains("grid")) {
        out.grid_points = cfg["grid"].value("points", out.grid_points);
        out.grid_lo_deg = cfg["grid"].value("lo", out.grid_lo_deg);
        out.grid_hi_deg = cfg["grid"].value("hi", out.grid_hi_deg);
    }
    if (cfg.contains("scene")) {
        out.k_count = cfg["scene"].value("k", out.k_count);
        out.scene_lo_deg = cfg["scene"].value("lo", out.scene_lo_deg);
        out.scene_hi_deg = cfg["scene"].value("hi", out.scene_hi_deg);
    }
    if (cfg.contains("snrs_db")) {
        out.snrs_db.clear();
        for (const json& v : cfg["snrs_db"]) out.snrs_db.push_back(snr_from_json(v));
    }
    out.delta = cfg.value("delta", out.delta);
    out.threads = cfg.value("threads", out.threads);

    for (const json& spec : cfg.at("arrays")) {
        const std::string name = spec.at("name").get<std::string>();
        if (spec.contains("positions")) {
            out.arrays.emplace_back(
                name, parse_positions(spec["positions"].get<std::vector<std::int64_t>>()));
        } else {
            GenerateArgs a;
            a.kind = spec.at("kind").get<std::string>();
            a.n = spec.value("n", std::int64_t{0});
            a.n1 = spec.value("n1", std::int64_t{0});
            a.n2 = spec.value("n2", std::int64_t{0});
            a.n3 = spec.value("n3", std::int64_t{0});
            a.lambda = spec.value("lambda", std::int64_t{0});
            out.arrays.emplace_back(name, build_array(a));
        }
    }
    return out;
}

std::string snr_str(const std::optional<double>& snr) {
    if (!snr) return "inf";
    std::ostringstream os;
    os << *snr;
    return os.str();
}

void run_omp(const std::string& config_path, const std::string& csv_path,
             const std::string& spectra_path, int threads_override) {
    sensing::ExperimentConfig cfg = parse_experiment_config(config_path);
    if (threads_override > 0) cfg.threads = threads_override;

    const sensing::ExperimentResult result = sensing::run_experiment(cfg);

    std::cout << "array,snr_db,mean_rmse_deg\n";
    for (const auto& m : result.means)
        std::cout << m.array_name << ',' << snr_str(m.snr_db) << ',' << m.mean_rmse_deg
                  << '\n';

    if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f) throw std::runtime_error("cannot open output file: " + csv_path);
        f << "trial,array,snr_db,rmse_deg\n";
        for (const auto& r : result.records)
            f << r.trial << ',' << r.array_name << ',' << snr_str(r.snr_db) << ','
              << r.rmse_deg << '\n';
    }
    if (!spectra_path.empty()) {
        json spectra = json::array();
        for (const auto& s : result.spectra) {
            spectra.push_back(
                {{"array", s.array_name},
                 {"snr_db", s.snr_db ? json(*s.snr_db) : json(nullptr)},
                 {"estimated_angles_deg", s.estimated_angles_deg},
                 {"magnitudes", s.magnitudes},
                 {"true_angles_deg", s.true_angles_deg}});
        }
        std::ofstream f(spectra_path);
        if (!f) throw std::runtime_error("cannot open output file: " + spectra_path);
        f << json{{"schema_version", "1"}, {"spectra", spectra}}.dump(2) << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparse array synthesis with contiguous sum/difference co-arrays"};
    app.require_subcommand(1);

    Emit emit;
    GenerateArgs gen;
    auto add_emit = [&](CLI::App* cmd) {
        cmd->add_option("--format", emit.format, "json, csv, or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", emit.out_path, "write to file instead of stdout");
    };

    CLI::App* cmd_gen = app.add_subcommand("generate", "construct an array");
    cmd_gen->add_option("kind", gen.kind, "ula|nested|cna|kma|ka|rra|symmetric")
        ->required();
    cmd_gen->add_option("--n", gen.n);
    cmd_gen->add_option("--n1", gen.n1);
    cmd_gen->add_option("--n2", gen.n2);
    cmd_gen->add_option("--n3", gen.n3);
    cmd_gen->add_option("--generator", gen.generator, "generator positions");
    cmd_gen->add_option("--lambda", gen.lambda, "mirror shift");
    cmd_gen->add_option("--prefix", gen.prefix);
    cmd_gen->add_option("--suffix", gen.suffix);
    cmd_gen->add_option("--spacing", gen.spacing, "mid-section pitch");
    add_emit(cmd_gen);

    std::string opt_family;
    std::int64_t opt_n = 0, mra_limit = 12;
    bool opt_trace = false;
    CLI::App* cmd_opt = app.add_subcommand("optimize", "minimum-redundancy parameters");
    cmd_opt->add_option("family", opt_family, "cna|ka|na|kma|mra|mra-restricted")
        ->required();
    cmd_opt->add_option("--n", opt_n, "sensor count")->required();
    cmd_opt->add_option("--limit", mra_limit, "exhaustive search sensor limit");
    cmd_opt->add_flag("--trace", opt_trace, "record evaluated grid candidates");
    add_emit(cmd_opt);

    std::string which;
    std::int64_t n_min = 4, n_max = 50;
    CLI::App* cmd_tab = app.add_subcommand("tables", "computed table/figure data (CSV)");
    cmd_tab->add_option("--which", which, "I|II|III|IV|fig5|fig6|fig7")->required();
    cmd_tab->add_option("--n-min", n_min);
    cmd_tab->add_option("--n-max", n_max);
    add_emit(cmd_tab);

    std::string config_path, csv_path, spectra_path;
    int threads = 0;
    if (const char* env = std::getenv("COARR_THREADS")) threads = std::atoi(env);
    CLI::App* cmd_omp = app.add_subcommand("omp", "active-sensing OMP experiment");
    cmd_omp->add_option("--config", config_path, "JSON experiment config")->required();
    cmd_omp->add_option("--out-csv", csv_path, "per-trial RMSE records");
    cmd_omp->add_option("--out-spectra", spectra_path, "JSON spectra dump");
    cmd_omp->add_option("--threads", threads, "worker threads (default: COARR_THREADS)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_gen->parsed()) {
            std::ostringstream cmdline;
            cmdline << "generate " << gen.kind;
            emit_record(emit, cmdline.str(), build_array(gen), json::object());
        } else if (cmd_opt->parsed()) {
            run_optimize(emit, opt_family, opt_n, mra_limit, opt_trace);
        } else if (cmd_tab->parsed()) {
            run_tables(emit, which, n_min, n_max);
        } else if (cmd_omp->parsed()) {
            run_omp(config_path, csv_path, spectra_path, threads);
        }
    } catch (const std::length_error& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
