#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "ringjsa/config.hpp"
#include "ringjsa/field.hpp"
#include "ringjsa/fourier.hpp"
#include "ringjsa/io.hpp"
#include "ringjsa/measured.hpp"
#include "ringjsa/schmidt.hpp"
#include "ringjsa/sweep.hpp"
#include "ringjsa/units.hpp"
#include "ringjsa/version.hpp"

namespace ringjsa::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

struct Options {
    std::string config_path;
    std::string out_dir = ".";
    std::size_t workers = 0;  // 0 keeps the config value
    std::string input;        // measured: overrides measured.path
};

// Shared state of one subcommand run: resolved config, output bookkeeping, metadata.
class Run {
public:
    Run(std::string command, RunConfig config, const Options& opt, std::ostream& log)
        : command_(std::move(command)), config_(std::move(config)), dir_(opt.out_dir), log_(log) {
        fs::create_directories(dir_);
        meta_["tool"] = "ringjsa";
        meta_["version"] = kVersion;
        meta_["subcommand"] = command_;
        meta_["config_file"] = opt.config_path;
        start_ = std::chrono::steady_clock::now();
    }

    RunConfig& config() { return config_; }
    json& meta() { return meta_; }
    std::ostream& log() { return log_; }

    /// Fills resonator.gamma_ghz by calibration when the config leaves it out.
    ResonatorParams resonator() {
        if (!config_.resonator.gamma_ghz) {
            const auto& c = config_.calibrate;
            log_ << fmt::format("resonator.gamma_ghz not set; calibrating over [{}, {}] GHz\n", c.lo_ghz, c.hi_ghz);
            const auto r = calibrate(config_);
            config_.resonator.gamma_ghz = rad_to_ghz(r.gamma);
            meta_["calibration"] = {{"gamma_ghz", rad_to_ghz(r.gamma)}, {"purity", r.purity},
                                    {"bracketed", r.bracketed}, {"warning", r.warning}};
            gamma_source_ = "calibrated";
        }
        return resonator_params(config_.resonator);
    }

    static CalibrationResult calibrate(const RunConfig& config) {
        const auto& c = config.calibrate;
        return calibrate_linewidth(ghz_to_rad(config.pump.fwhm_ghz), {c.eta, ps_to_s(c.delay_ps), c.phase},
                                   ghz_to_rad(c.lo_ghz), ghz_to_rad(c.hi_ghz), calibration_options(config));
    }

    /// Comment block for every output file: version, command and the resolved configuration.
    std::vector<std::string> header(const std::vector<std::string>& extra = {}) const {
        std::vector<std::string> lines{fmt::format("ringjsa {}", kVersion), "subcommand: " + command_};
        if (gamma_source_) {
            lines.push_back(fmt::format("resonator.gamma_source: {}", *gamma_source_));
        }
        for (auto& l : describe(config_)) {
            lines.push_back(std::move(l));
        }
        lines.insert(lines.end(), extra.begin(), extra.end());
        return lines;
    }

    void table(const std::string& name, const Table& t, const std::vector<std::string>& extra = {}) {
        const auto path = dir_ / name;
        write_table(t, path, header(extra));
        outputs_.push_back(path.string());
    }

    HeatmapInfo heatmap(const std::string& name, const Eigen::MatrixXd& values, HeatmapScale scale,
                        const std::vector<std::string>& extra = {}) {
        const auto path = dir_ / name;
        auto info = write_heatmap_pgm(values, path, scale, header(extra));
        outputs_.push_back(path.string());
        outputs_.push_back(info.csv_path.string());
        meta_["heatmaps"][name] = {{"nan_cells", info.nan_cells}, {"low", info.low}, {"high", info.high}};
        return info;
    }

    void warn(const std::string& message) {
        log_ << "warning: " << message << '\n';
        meta_["warnings"].push_back(message);
    }

    void finish() {
        meta_["config"] = json::object();
        for (const auto& line : describe(config_)) {
            const auto colon = line.find(": ");
            meta_["config"][line.substr(0, colon)] = line.substr(colon + 2);
        }
        meta_["workers"] = config_.workers;
        meta_["elapsed_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        meta_["outputs"] = outputs_;
        const auto path = dir_ / (command_ + "_run.json");
        std::ofstream(path, std::ios::binary) << meta_.dump(2) << '\n';
        log_ << fmt::format("{}: wrote {} files and {}\n", command_, outputs_.size(), path.string());
    }

private:
    std::string command_;
    RunConfig config_;
    fs::path dir_;
    std::ostream& log_;
    json meta_;
    std::vector<std::string> outputs_;
    std::optional<std::string> gamma_source_;
    std::chrono::steady_clock::time_point start_;
};

Table spectrum_table(const std::vector<std::pair<std::string, const ComplexSpectrum*>>& columns) {
    Table t;
    t.columns.push_back("freq_ghz");
    for (const auto& [name, s] : columns) {
        t.columns.insert(t.columns.end(), {name + "_re", name + "_im", name + "_abs2"});
    }
    const auto& grid = columns.front().second->grid();
    for (std::size_t k = 0; k < grid.size(); ++k) {
        std::vector<double> row{rad_to_ghz(grid.point(k))};
        for (const auto& [name, s] : columns) {
            const auto v = (*s)[k];
            row.insert(row.end(), {v.real(), v.imag(), std::norm(v)});
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table time_table(const TimeSeries& series) {
    Table t{{"time_ps", "re", "im", "abs2"}, {}};
    for (std::size_t k = 0; k < series.values.size(); ++k) {
        const auto v = series.values[k];
        t.rows.push_back({s_to_ps(series.times[k]), v.real(), v.imag(), std::norm(v)});
    }
    return t;
}

Table coefficient_table(const std::vector<double>& lambdas) {
    Table t{{"k", "lambda"}, {}};
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        t.rows.push_back({static_cast<double>(k), lambdas[k]});
    }
    return t;
}

FrequencyGrid pulse_grid(const RunConfig& c) {
    double span = 8.0 * ghz_to_rad(c.pump.fwhm_ghz);
    if (c.resonator.gamma_ghz) {
        span = std::max(span, 40.0 * ghz_to_rad(*c.resonator.gamma_ghz));
    }
    return FrequencyGrid::make(c.grid.field_n, span, ghz_to_rad(c.pump.center_ghz));
}

void cmd_pulse(Run& run) {
    const auto spec = pump_spec(run.config().pump);
    const auto grid = pulse_grid(run.config());
    const auto envelope = build_envelope(spec, grid);
    run.table("pulse_spectrum.csv", spectrum_table({{"pump", &envelope}}));
    run.table("pulse_time.csv", time_table(fourier_to_time(envelope)));
    json pulses = json::array();
    for (const auto& p : pulse_sequence(spec)) {
        pulses.push_back({{"amplitude", p.amplitude}, {"delay_ps", s_to_ps(p.delay)}, {"phase", p.phase}});
    }
    run.meta()["pulses"] = pulses;
}

void cmd_field(Run& run) {
    const auto res = run.resonator();
    const auto spec = pump_spec(run.config().pump);
    const auto report = field_report(spec, res, pulse_grid(run.config()));
    run.table("field_spectrum.csv", spectrum_table({{"pump", &report.pump}, {"field", &report.spectral}}));
    run.table("field_time.csv", time_table(report.temporal));
}

void cmd_jsa(Run& run) {
    const auto res = run.resonator();
    const auto settings = simulation_settings(run.config(), res);
    const auto spec = pump_spec(run.config().pump);
    const auto jsa = simulate_jsa(spec, settings, run.config().workers);
    const auto d = schmidt_decompose(jsa);
    const std::vector<std::string> summary{fmt::format("purity: {}", format_number(d.purity())),
                                           fmt::format("schmidt_number: {}", format_number(1.0 / d.purity()))};
    const auto& m = jsa.values();
    const auto intensity = jsi(jsa);
    Table t{{"signal_ghz", "idler_ghz", "re", "im", "jsi"}, {}};
    t.rows.reserve(static_cast<std::size_t>(m.size()));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            t.rows.push_back({rad_to_ghz(jsa.signal_grid().point(static_cast<std::size_t>(r))),
                              rad_to_ghz(jsa.idler_grid().point(static_cast<std::size_t>(c))), m(r, c).real(),
                              m(r, c).imag(), intensity(r, c)});
        }
    }
    run.table("jsa.csv", t, summary);
    run.heatmap("jsi.pgm", intensity, HeatmapScale::Fixed, summary);
    run.table("schmidt.csv", coefficient_table(d.coefficients), summary);
    run.meta()["purity"] = d.purity();
    run.meta()["schmidt_number"] = 1.0 / d.purity();
    run.log() << fmt::format("purity {}\n", format_number(d.purity()));
}

void cmd_sweep(Run& run) {
    const auto res = run.resonator();
    const auto result = run_sweep_job(sweep_job(run.config(), res));
    run.table("sweep.csv", result.table);
    if (result.map) {
        const auto info = run.heatmap("sweep.pgm", result.map->values, run.config().sweep.heatmap_scale);
        Eigen::Index r = 0, c = 0;
        if (info.nan_cells < static_cast<std::size_t>(result.map->values.size())) {
            result.map->values.unaryExpr([](double v) { return std::isnan(v) ? -1.0 : v; }).maxCoeff(&r, &c);
            run.meta()["max_purity"] = result.map->values(r, c);
            run.meta()["argmax"] = {{"row", r}, {"col", c}};
        }
    }
    for (const auto& d : result.diagnostics) {
        run.warn(d);
    }
}

void cmd_calibrate(Run& run) {
    const auto r = Run::calibrate(run.config());
    run.config().resonator.gamma_ghz = rad_to_ghz(r.gamma);
    Table scan{{"gamma_ghz", "purity"}, {}};
    for (std::size_t k = 0; k < r.scan_gammas.size(); ++k) {
        scan.rows.push_back({rad_to_ghz(r.scan_gammas[k]), r.scan_purities[k]});
    }
    run.table("calibration_scan.csv", scan);
    run.table("calibration.csv", Table{{"gamma_ghz", "purity", "bracketed", "evaluations"},
                                       {{rad_to_ghz(r.gamma), r.purity, r.bracketed ? 1.0 : 0.0,
                                         static_cast<double>(r.evaluations)}}});
    run.meta()["gamma_ghz"] = rad_to_ghz(r.gamma);
    run.meta()["purity"] = r.purity;
    run.meta()["bracketed"] = r.bracketed;
    if (!r.warning.empty()) {
        run.warn(r.warning);
    }
    run.log() << fmt::format("gamma* {} GHz, dual purity {}\n", format_number(rad_to_ghz(r.gamma)),
                             format_number(r.purity));
}

void cmd_measured(Run& run) {
    const auto& m = run.config().measured;
    if (m.path.empty()) {
        throw ConfigError({"measured.path: required for the measured subcommand (or pass --input)"});
    }
    const auto grid = load_jsi(fs::path(m.path), m.format);
    const auto est = estimate_purity_from_jsi(grid, m.floor);
    const std::vector<std::string> summary{
        "estimate: phase-blind (JSA approximated by sqrt(JSI))",
        fmt::format("grid: {} x {}", grid.signal_axis_ghz.size(), grid.idler_axis_ghz.size())};
    run.table("measured_purity.csv",
              Table{{"purity", "schmidt_number", "clamped_cells", "phase_blind"},
                    {{est.purity, 1.0 / est.purity, static_cast<double>(est.clamped_cells), 1.0}}},
              summary);
    run.table("measured_schmidt.csv", coefficient_table(est.schmidt_coefficients), summary);
    run.meta()["purity"] = est.purity;
    run.meta()["phase_blind"] = true;
    run.meta()["clamped_cells"] = est.clamped_cells;
    if (!est.warning.empty()) {
        run.warn(est.warning);
    }
    run.log() << fmt::format("purity estimate {} (phase-blind)\n", format_number(est.purity));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral purity of ring-resonator photon-pair sources with shaped pump pulses", "ringjsa"};
    app.set_version_flag("--version", kVersion);
    bool seed = false;
    app.add_flag("--seed-config", seed, "Print a commented default configuration and exit");

    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-c,--config", opt.config_path, "YAML configuration file (defaults when omitted)")
            ->check(CLI::ExistingFile);
        sub->add_option("-o,--out", opt.out_dir, "Output directory")->capture_default_str();
        sub->add_option("-j,--workers", opt.workers, "Worker threads (overrides the config)")
            ->check(CLI::Range(1, 1024));
        return sub;
    };
    using Handler = void (*)(Run&);
    const std::vector<std::tuple<const char*, const char*, Handler>> commands{
        {"pulse", "Pump envelope in frequency and time", cmd_pulse},
        {"field", "In-resonator pump field, spectral and temporal", cmd_field},
        {"jsa", "Joint spectral amplitude, JSI heatmap and purity", cmd_jsa},
        {"sweep", "Purity heatmap (eta or phase) or pulse-train study", cmd_sweep},
        {"calibrate", "Ring linewidth maximizing the dual-pulse purity", cmd_calibrate},
        {"measured", "Phase-blind purity estimate from a measured JSI", cmd_measured},
    };
    for (const auto& [name, help, handler] : commands) {
        auto* sub = add_common(app.add_subcommand(name, help));
        if (std::string_view(name) == "measured") {
            sub->add_option("-i,--input", opt.input, "JSI file (overrides measured.path)");
        }
    }
    app.require_subcommand(0, 1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }
    if (seed) {
        out << seed_config_text();
        return 0;
    }
    const auto selected = app.get_subcommands();
    if (selected.empty()) {
        err << app.help();
        return 1;
    }
    const std::string name = selected.front()->get_name();
    try {
        RunConfig config = opt.config_path.empty() ? parse_config_text("") : parse_config(opt.config_path);
        if (opt.workers) {
            config.workers = opt.workers;
        }
        if (!opt.input.empty()) {
            config.measured.path = opt.input;
        }
        Run run(name, std::move(config), opt, err);
        for (const auto& [cmd, help, handler] : commands) {
            if (name == cmd) {
                handler(run);
            }
        }
        run.finish();
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return 1;
}

}  // namespace ringjsa::cli
