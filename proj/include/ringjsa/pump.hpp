#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringjsa/resonator.hpp"
#include "ringjsa/spectrum.hpp"

namespace ringjsa {

/// sech^2 base pulse. `sigma` is the scale parameter; the intensity FWHM is
/// 2*arccosh(sqrt 2)*sigma.
struct PulseParams {
    double sigma = 0.0;
    double center_detuning = 0.0;

    static PulseParams from_fwhm(double fwhm, double center_detuning = 0.0);
    double fwhm() const;
    void validate() const;
};

enum class PumpKind { Single, Dual, Triple, Cascade, TrainConstant, TrainCascade };

std::string_view to_string(PumpKind kind);
/// Accepts "single", "dual", "triple", "cascade", "train-constant", "train-cascade".
PumpKind parse_pump_kind(std::string_view name);

/// One Mach-Zehnder stage: power fraction kept in the undelayed arm and the
/// phase given to the split-off pulse.
struct Stage {
    double eta = 1.0;
    double phase = 0.0;
};

struct PumpSpec {
    PumpKind kind = PumpKind::Single;
    PulseParams base;
    std::vector<Stage> stages;
    double delay_unit = 20e-12;
    /// Optional explicit delays of pulses 1..n-1 relative to pulse 0; empty means k * delay_unit.
    std::vector<double> delays;
    std::size_t n_pulses = 1;
    std::optional<double> tail_ratio;  // train-constant
    std::optional<double> train_eta;   // train-cascade

    static PumpSpec single(PulseParams base);
    static PumpSpec dual(PulseParams base, double eta, double phase, double delay);
    static PumpSpec triple(PulseParams base, Stage first, Stage second, double delay1, double delay2);
    static PumpSpec cascade(PulseParams base, std::vector<Stage> stages, double delay_unit);
    static PumpSpec train_constant(PulseParams base, std::size_t n, double tail_ratio, double delay_unit);
    static PumpSpec train_cascade(PulseParams base, std::size_t n, double eta, double delay_unit);

    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;
    std::size_t pulse_count() const;
};

/// One copy of the base pulse: real amplitude, delay (s) and phase relative to pulse 0.
struct Pulse {
    double amplitude = 0.0;
    double delay = 0.0;
    double phase = 0.0;
};

/// Amplitudes produced by a cascade of splitters with the given power ratios:
/// a_0 = sqrt(eta_1), a_k = sqrt(eta_{k+1} * prod_{j<=k}(1 - eta_j)), a_last = sqrt(prod(1 - eta_j)).
std::vector<double> cascade_amplitudes(const std::vector<double>& etas);

/// Resolves any pump spec to its explicit pulse list. Squared amplitudes sum to 1.
std::vector<Pulse> pulse_sequence(const PumpSpec& spec);

/// sech^2((w - w0) / sigma)
double sech2_envelope(double omega, const PulseParams& params);

ComplexSpectrum single_envelope(const PulseParams& params, const FrequencyGrid& grid);
ComplexSpectrum dual_envelope(const PumpSpec& spec, const FrequencyGrid& grid);
ComplexSpectrum triple_envelope(const PumpSpec& spec, const FrequencyGrid& grid);
ComplexSpectrum cascade_envelope(const std::vector<Stage>& stages, double delay_unit, const PulseParams& params,
                                 const FrequencyGrid& grid, const std::vector<double>& explicit_delays = {});
ComplexSpectrum train_envelope(const PumpSpec& spec, const FrequencyGrid& grid);

/// L(w)^-1 * alpha_single(w), scaled to unit energy on the grid.
ComplexSpectrum target_envelope(const PulseParams& params, const ResonatorParams& resonator,
                                const FrequencyGrid& grid);

/// Dispatches on spec.kind.
ComplexSpectrum build_envelope(const PumpSpec& spec, const FrequencyGrid& grid);

}  // namespace ringjsa
