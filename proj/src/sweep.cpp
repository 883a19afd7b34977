#include "ringjsa/sweep.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "parallel.hpp"
#include "ringjsa/schmidt.hpp"
#include "ringjsa/units.hpp"

namespace ringjsa {
namespace {

struct CellOutcome {
    double value = std::numeric_limits<double>::quiet_NaN();
    std::optional<std::string> error;
};

// Evaluates every spec independently. Results and diagnostics come back in input
// order, whatever the worker count.
std::vector<CellOutcome> evaluate_cells(const std::vector<PumpSpec>& specs, const SimulationSettings& settings,
                                        std::size_t workers) {
    std::vector<CellOutcome> out(specs.size());
    detail::parallel_for(specs.size(), workers, [&](std::size_t i) {
        try {
            out[i].value = simulate_purity(specs[i], settings);
        } catch (const std::exception& e) {
            out[i].error = e.what();
        }
    });
    return out;
}

PurityMap assemble_map(const std::vector<double>& rows, const std::vector<double>& cols,
                       const std::vector<CellOutcome>& cells) {
    PurityMap map;
    map.row_axis = rows;
    map.col_axis = cols;
    map.values.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const auto& c = cells[i * cols.size() + j];
            map.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = c.value;
            if (c.error) {
                map.diagnostics.push_back(fmt::format("cell ({}, {}): {}", i, j, *c.error));
            }
        }
    }
    return map;
}

void require_axis(const std::vector<double>& axis, double lo, double hi, const char* name) {
    if (axis.empty()) {
        throw std::invalid_argument(fmt::format("{} axis is empty", name));
    }
    for (double v : axis) {
        if (!std::isfinite(v) || v < lo || v > hi) {
            throw std::invalid_argument(fmt::format("{} axis value {} outside [{}, {}]", name, v, lo, hi));
        }
    }
}

std::string join(const std::vector<double>& values, double scale = 1.0) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += fmt::format("{}{:.9g}", i == 0 ? "" : " ", values[i] * scale);
    }
    return out;
}

}  // namespace

SimulationSettings SimulationSettings::paper_defaults(double gamma) {
    SimulationSettings s;
    s.pulse = PulseParams::from_fwhm(ghz_to_rad(41.0));
    s.resonator = ResonatorParams::uniform(gamma);
    return s;
}

JsaMatrix simulate_jsa(const PumpSpec& spec, const SimulationSettings& settings, std::size_t workers) {
    const auto& res = settings.resonator;
    res.validate();
    JsaOptions options;
    options.interpolation = settings.interpolation;
    options.workers = workers;
    if (settings.pump_points > 0) {
        options.pump_grid = FrequencyGrid::make(settings.pump_points,
                                                std::max(8.0 * spec.base.fwhm(), 40.0 * res.gamma_pump));
    }
    const auto signal = default_jsa_grid(res.gamma_signal, settings.jsa_points, settings.span_factor);
    const auto idler = default_jsa_grid(res.gamma_idler, settings.jsa_points, settings.span_factor);
    return compute_jsa(spec, res, signal, idler, options);
}

double simulate_purity(const PumpSpec& spec, const SimulationSettings& settings) {
    return purity(simulate_jsa(spec, settings));
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n == 0) {
        return {};
    }
    if (n == 1) {
        return {lo};
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    out.back() = hi;
    return out;
}

CalibrationResult calibrate_linewidth(double pump_fwhm, const DualConfig& dual, double lo, double hi,
                                      const CalibrationOptions& options) {
    if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi)) {
        throw std::invalid_argument("calibration range requires 0 < lo < hi");
    }
    if (options.scan_points < 3) {
        throw std::invalid_argument("calibration scan needs at least 3 points");
    }
    SimulationSettings settings = options.settings;
    settings.pulse = PulseParams::from_fwhm(pump_fwhm, settings.pulse.center_detuning);
    const PumpSpec spec = PumpSpec::dual(settings.pulse, dual.eta, dual.phase, dual.delay);
    spec.validate();

    auto objective = [&](double log_gamma) {
        SimulationSettings s = settings;
        s.resonator = ResonatorParams::uniform(std::exp(log_gamma));
        return simulate_purity(spec, s);
    };

    CalibrationResult result;
    const auto logs = linspace(std::log(lo), std::log(hi), options.scan_points);
    result.scan_purities.resize(logs.size());
    detail::parallel_for(logs.size(), options.workers,
                         [&](std::size_t i) { result.scan_purities[i] = objective(logs[i]); });
    for (double x : logs) {
        result.scan_gammas.push_back(std::exp(x));
    }
    result.evaluations = logs.size();

    std::size_t best = 0;
    for (std::size_t i = 1; i < logs.size(); ++i) {
        if (result.scan_purities[i] > result.scan_purities[best]) {
            best = i;
        }
    }
    result.gamma = result.scan_gammas[best];
    result.purity = result.scan_purities[best];
    if (best == 0 || best + 1 == logs.size()) {
        result.warning = "purity maximum lies on the edge of the scan range; returning the scan argmax";
        return result;
    }

    // Golden-section maximization of purity(log gamma) inside the scan bracket.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = logs[best - 1], b = logs[best + 1];
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = objective(c), fd = objective(d);
    result.evaluations += 2;
    while (b - a > options.log_tolerance) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = objective(d);
        }
        ++result.evaluations;
    }
    const double x = fc > fd ? c : d;
    const double fx = std::max(fc, fd);
    if (fx < result.purity) {
        result.warning = "purity is not unimodal inside the scan bracket; returning the scan argmax";
        return result;
    }
    result.gamma = std::exp(x);
    result.purity = fx;
    result.bracketed = true;
    return result;
}

PurityMap sweep_eta(const SimulationSettings& settings, std::pair<double, double> delays,
                    std::pair<double, double> phases, const std::vector<double>& eta1_axis,
                    const std::vector<double>& eta2_axis, std::size_t workers) {
    require_axis(eta1_axis, 0.0, 1.0, "eta1");
    require_axis(eta2_axis, 0.0, 1.0, "eta2");
    std::vector<PumpSpec> specs;
    specs.reserve(eta1_axis.size() * eta2_axis.size());
    for (double e1 : eta1_axis) {
        for (double e2 : eta2_axis) {
            specs.push_back(
                PumpSpec::triple(settings.pulse, {e1, phases.first}, {e2, phases.second}, delays.first, delays.second));
        }
    }
    return assemble_map(eta1_axis, eta2_axis, evaluate_cells(specs, settings, workers));
}

PurityMap sweep_phase(const SimulationSettings& settings, std::pair<double, double> etas,
                      std::pair<double, double> delays, const std::vector<double>& phi1_axis,
                      const std::vector<double>& phi2_axis, std::size_t workers) {
    const double two_pi = 2.0 * std::numbers::pi;
    require_axis(phi1_axis, 0.0, two_pi, "phi1");
    require_axis(phi2_axis, 0.0, two_pi, "phi2");
    std::vector<PumpSpec> specs;
    specs.reserve(phi1_axis.size() * phi2_axis.size());
    for (double p1 : phi1_axis) {
        for (double p2 : phi2_axis) {
            specs.push_back(
                PumpSpec::triple(settings.pulse, {etas.first, p1}, {etas.second, p2}, delays.first, delays.second));
        }
    }
    return assemble_map(phi1_axis, phi2_axis, evaluate_cells(specs, settings, workers));
}

TrainTable sweep_train(const SimulationSettings& settings, PumpKind kind, double parameter,
                       const std::vector<double>& delays, std::size_t n_max, std::size_t workers) {
    if (kind != PumpKind::TrainConstant && kind != PumpKind::TrainCascade) {
        throw std::invalid_argument("train sweep requires a train-constant or train-cascade kind");
    }
    if (n_max < 2) {
        throw std::invalid_argument("train sweep requires n_max >= 2");
    }
    require_axis(delays, 0.0, std::numeric_limits<double>::max(), "delay");
    std::vector<PumpSpec> specs;
    for (double d : delays) {
        for (std::size_t n = 1; n <= n_max; ++n) {
            specs.push_back(kind == PumpKind::TrainConstant ? PumpSpec::train_constant(settings.pulse, n, parameter, d)
                                                            : PumpSpec::train_cascade(settings.pulse, n, parameter, d));
        }
    }
    std::vector<double> ns;
    for (std::size_t n = 1; n <= n_max; ++n) {
        ns.push_back(static_cast<double>(n));
    }
    PurityMap map = assemble_map(delays, ns, evaluate_cells(specs, settings, workers));
    return {delays, n_max, std::move(map.values), std::move(map.diagnostics)};
}

std::string_view to_string(SweepKind kind) {
    switch (kind) {
        case SweepKind::Eta: return "eta";
        case SweepKind::Phase: return "phase";
        case SweepKind::Train: return "train";
    }
    return "unknown";
}

SweepKind parse_sweep_kind(std::string_view name) {
    for (auto k : {SweepKind::Eta, SweepKind::Phase, SweepKind::Train}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw std::invalid_argument(fmt::format("unknown sweep type '{}'", name));
}

void SweepJob::validate() const {
    settings.pulse.validate();
    settings.resonator.validate();
    if (workers == 0) {
        throw std::invalid_argument("workers must be >= 1");
    }
    switch (kind) {
        case SweepKind::Eta:
            require_axis(axis1, 0.0, 1.0, "eta1");
            require_axis(axis2, 0.0, 1.0, "eta2");
            break;
        case SweepKind::Phase:
            require_axis(axis1, 0.0, 2.0 * std::numbers::pi, "phi1");
            require_axis(axis2, 0.0, 2.0 * std::numbers::pi, "phi2");
            break;
        case SweepKind::Train:
            if (train_kind != PumpKind::TrainConstant && train_kind != PumpKind::TrainCascade) {
                throw std::invalid_argument("train sweep requires a train kind");
            }
            if (n_max < 2) {
                throw std::invalid_argument("train sweep requires n_max >= 2");
            }
            if (!(train_parameter >= 0.0 && train_parameter <= 1.0)) {
                throw std::invalid_argument("train parameter must lie in [0, 1]");
            }
            require_axis(train_delays, 0.0, std::numeric_limits<double>::max(), "delay");
            break;
    }
}

SweepResult run_sweep_job(const SweepJob& job) {
    job.validate();
    const auto start = std::chrono::steady_clock::now();
    const auto& s = job.settings;
    SweepResult result;
    auto& md = result.metadata;
    md.emplace_back("sweep.type", std::string(to_string(job.kind)));
    md.emplace_back("pump.fwhm_ghz", fmt::format("{:.9g}", rad_to_ghz(s.pulse.fwhm())));
    md.emplace_back("resonator.gamma_pump_ghz", fmt::format("{:.9g}", rad_to_ghz(s.resonator.gamma_pump)));
    md.emplace_back("resonator.gamma_signal_ghz", fmt::format("{:.9g}", rad_to_ghz(s.resonator.gamma_signal)));
    md.emplace_back("resonator.gamma_idler_ghz", fmt::format("{:.9g}", rad_to_ghz(s.resonator.gamma_idler)));
    md.emplace_back("grid.n", std::to_string(s.jsa_points));
    md.emplace_back("grid.span_factor", fmt::format("{:.9g}", s.span_factor));
    md.emplace_back("grid.pump_n", s.pump_points == 0 ? "auto" : std::to_string(s.pump_points));
    md.emplace_back("grid.interpolation", s.interpolation == Interpolation::Linear ? "linear" : "cubic");

    if (job.kind == SweepKind::Train) {
        md.emplace_back("sweep.train_kind", std::string(to_string(job.train_kind)));
        md.emplace_back("sweep.train_parameter", fmt::format("{:.9g}", job.train_parameter));
        md.emplace_back("sweep.train_delays_ps", join(job.train_delays, 1e12));
        md.emplace_back("sweep.n_max", std::to_string(job.n_max));
        TrainTable t = sweep_train(s, job.train_kind, job.train_parameter, job.train_delays, job.n_max, job.workers);
        result.table.columns = {"delay_ps", "n_pulses", "purity"};
        for (std::size_t i = 0; i < t.delays.size(); ++i) {
            for (std::size_t n = 1; n <= t.n_max; ++n) {
                result.table.rows.push_back({s_to_ps(t.delays[i]), static_cast<double>(n),
                                             t.purity(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1))});
            }
        }
        result.diagnostics = t.diagnostics;
        result.train = std::move(t);
    } else {
        PurityMap map;
        md.emplace_back("sweep.delays_ps", join({job.delays.first, job.delays.second}, 1e12));
        if (job.kind == SweepKind::Eta) {
            md.emplace_back("sweep.phases_rad", join({job.phases.first, job.phases.second}));
            md.emplace_back("sweep.axis1", join(job.axis1));
            md.emplace_back("sweep.axis2", join(job.axis2));
            map = sweep_eta(s, job.delays, job.phases, job.axis1, job.axis2, job.workers);
            result.table.columns = {"eta1", "eta2", "purity"};
        } else {
            md.emplace_back("sweep.etas", join({job.etas.first, job.etas.second}));
            md.emplace_back("sweep.axis1", join(job.axis1));
            md.emplace_back("sweep.axis2", join(job.axis2));
            map = sweep_phase(s, job.etas, job.delays, job.axis1, job.axis2, job.workers);
            result.table.columns = {"phi1_rad", "phi2_rad", "purity"};
        }
        for (std::size_t i = 0; i < map.row_axis.size(); ++i) {
            for (std::size_t j = 0; j < map.col_axis.size(); ++j) {
                result.table.rows.push_back({map.row_axis[i], map.col_axis[j],
                                             map.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))});
            }
        }
        result.diagnostics = map.diagnostics;
        result.map = std::move(map);
    }
    result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace ringjsa
