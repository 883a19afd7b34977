#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringjsa/io.hpp"
#include "ringjsa/measured.hpp"
#include "ringjsa/sweep.hpp"

namespace ringjsa {

/// Every problem found while reading a configuration, reported together.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
    std::vector<std::string> problems_;
};

struct AxisRange {
    double min = 0.0;
    double max = 1.0;
    std::size_t count = 41;
};

// Units follow the file: GHz, ps and radians.
struct PumpConfig {
    double fwhm_ghz = 41.0;
    double center_ghz = 0.0;
    PumpKind kind = PumpKind::Dual;
    std::vector<double> etas{0.55};
    std::vector<double> phases{3.141592653589793};
    /// One value (delay unit) or one per delayed pulse.
    std::vector<double> delays_ps{10.0};
    std::size_t n_pulses = 2;
    std::optional<double> tail_ratio;  // required for train-constant
    double train_eta = 0.55;
};

struct ResonatorConfig {
    std::optional<double> gamma_ghz;  // absent: use calibrate_linewidth
    std::optional<double> gamma_signal_ghz;
    std::optional<double> gamma_idler_ghz;
};

struct GridConfig {
    std::size_t n = 512;
    double span_factor = 40.0;
    std::size_t pump_n = 0;
    std::size_t field_n = 1024;
    Interpolation interpolation = Interpolation::Linear;
};

struct SweepConfig {
    SweepKind type = SweepKind::Phase;
    AxisRange axis1{0.0, 6.283185307179586, 41};
    AxisRange axis2{0.0, 6.283185307179586, 41};
    std::vector<double> etas{0.8, 0.8};
    std::vector<double> phases{3.141592653589793, 3.141592653589793};
    std::vector<double> delays_ps{20.0, 40.0};
    PumpKind train_kind = PumpKind::TrainCascade;
    double train_param = 0.55;
    std::vector<double> train_delays_ps{5.0, 10.0, 20.0};
    std::size_t n_max = 8;
    HeatmapScale heatmap_scale = HeatmapScale::MinMax;
};

struct CalibrateConfig {
    double lo_ghz = 0.5;
    double hi_ghz = 20.0;
    double eta = 0.55;
    double delay_ps = 10.0;
    double phase = 3.141592653589793;
    std::size_t scan_points = 64;
    double log_tolerance = 1e-4;
};

struct MeasuredConfig {
    std::string path;
    JsiFormat format = JsiFormat::Matrix;
    double floor = 0.0;
};

struct RunConfig {
    PumpConfig pump;
    ResonatorConfig resonator;
    GridConfig grid;
    SweepConfig sweep;
    CalibrateConfig calibrate;
    MeasuredConfig measured;
    std::size_t workers = 1;
};

/// Parses YAML text. Unknown keys, type errors and out-of-range values are
/// collected into one ConfigError. Phases accept numbers or forms like "pi", "pi/2", "1.5pi".
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config(const std::filesystem::path& path);

/// Checks cross-field constraints (list lengths per pump kind, ranges). Throws ConfigError.
void validate(const RunConfig& config);

PulseParams pulse_params(const PumpConfig& pump);
PumpSpec pump_spec(const PumpConfig& pump);
/// Resonator in rad/s; requires resonator.gamma_ghz to be set.
ResonatorParams resonator_params(const ResonatorConfig& resonator);
SimulationSettings simulation_settings(const RunConfig& config, const ResonatorParams& resonator);
CalibrationOptions calibration_options(const RunConfig& config);
SweepJob sweep_job(const RunConfig& config, const ResonatorParams& resonator);

/// "key: value" lines describing the fully resolved configuration, in schema order.
/// Execution-only settings (workers) are left out so outputs do not depend on them.
std::vector<std::string> describe(const RunConfig& config);

/// Commented YAML listing every key with its default.
std::string seed_config_text();

}  // namespace ringjsa
