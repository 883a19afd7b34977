#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringjsa/jsa.hpp"
#include "ringjsa/table.hpp"

namespace ringjsa {

/// Everything besides the pump shape needed to turn a PumpSpec into a purity.
struct SimulationSettings {
    PulseParams pulse;
    ResonatorParams resonator;
    std::size_t jsa_points = 512;  // per axis
    double span_factor = 40.0;     // JSA span in signal/idler linewidths
    std::size_t pump_points = 0;   // 0 selects default_pump_grid()
    Interpolation interpolation = Interpolation::Linear;

    static SimulationSettings paper_defaults(double gamma);
};

JsaMatrix simulate_jsa(const PumpSpec& spec, const SimulationSettings& settings, std::size_t workers = 1);
double simulate_purity(const PumpSpec& spec, const SimulationSettings& settings);

/// n evenly spaced values from lo to hi inclusive; value i is lo + (hi - lo) * i / (n - 1).
std::vector<double> linspace(double lo, double hi, std::size_t n);

struct DualConfig {
    double eta = 0.55;
    double delay = 10e-12;
    double phase = 3.141592653589793;
};

struct CalibrationOptions {
    std::size_t scan_points = 64;
    double log_tolerance = 1e-4;  // golden-section stops when the log-gamma bracket is narrower
    std::size_t workers = 1;
    SimulationSettings settings;  // resonator field is overwritten per trial
};

struct CalibrationResult {
    double gamma = 0.0;
    double purity = 0.0;
    bool bracketed = false;
    std::string warning;
    std::vector<double> scan_gammas;
    std::vector<double> scan_purities;
    std::size_t evaluations = 0;
};

/// Linewidth (applied to pump, signal and idler) that maximizes the purity of
/// the given dual-pulse pump: log-spaced scan over [lo, hi] followed by
/// golden-section refinement between the neighbours of the scan maximum. If
/// the maximum sits on a scan edge, the scan argmax is returned with bracketed = false.
CalibrationResult calibrate_linewidth(double pump_fwhm, const DualConfig& dual, double lo, double hi,
                                      const CalibrationOptions& options = {});

struct PurityMap {
    std::vector<double> row_axis;
    std::vector<double> col_axis;
    Eigen::MatrixXd values;  // NaN marks a failed cell
    std::vector<std::string> diagnostics;
};

/// Triple pulse purity over (eta1 rows) x (eta2 columns) at fixed delays and phases.
PurityMap sweep_eta(const SimulationSettings& settings, std::pair<double, double> delays,
                    std::pair<double, double> phases, const std::vector<double>& eta1_axis,
                    const std::vector<double>& eta2_axis, std::size_t workers = 1);

/// Triple pulse purity over (phi1 rows) x (phi2 columns) at fixed splitting ratios and delays.
PurityMap sweep_phase(const SimulationSettings& settings, std::pair<double, double> etas,
                      std::pair<double, double> delays, const std::vector<double>& phi1_axis,
                      const std::vector<double>& phi2_axis, std::size_t workers = 1);

struct TrainTable {
    std::vector<double> delays;
    std::size_t n_max = 0;
    Eigen::MatrixXd purity;  // delays x n (column k holds n = k + 1)
    std::vector<std::string> diagnostics;
};

/// Purity for n = 1..n_max pulses per delay. `parameter` is tail_ratio for
/// train-constant and eta for train-cascade.
TrainTable sweep_train(const SimulationSettings& settings, PumpKind kind, double parameter,
                       const std::vector<double>& delays, std::size_t n_max, std::size_t workers = 1);

enum class SweepKind { Eta, Phase, Train };

struct SweepJob {
    SweepKind kind = SweepKind::Phase;
    SimulationSettings settings;
    std::vector<double> axis1;  // eta1 or phi1
    std::vector<double> axis2;  // eta2 or phi2
    std::pair<double, double> etas{0.8, 0.8};
    std::pair<double, double> phases{3.141592653589793, 3.141592653589793};
    std::pair<double, double> delays{20e-12, 40e-12};
    PumpKind train_kind = PumpKind::TrainCascade;
    double train_parameter = 0.55;
    std::vector<double> train_delays{5e-12, 10e-12, 20e-12};
    std::size_t n_max = 8;
    std::size_t workers = 1;

    /// Throws std::invalid_argument on empty or out-of-range axes and bad train settings.
    void validate() const;
};

struct SweepResult {
    Table table;
    std::optional<PurityMap> map;
    std::optional<TrainTable> train;
    /// Fully resolved job configuration; identical jobs give identical entries.
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> diagnostics;
    double elapsed_seconds = 0.0;
};

SweepResult run_sweep_job(const SweepJob& job);

std::string_view to_string(SweepKind kind);
SweepKind parse_sweep_kind(std::string_view name);

}  // namespace ringjsa
