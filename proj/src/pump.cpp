#include "ringjsa/pump.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ringjsa/units.hpp"

namespace ringjsa {
namespace {

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

void check_ratio(double value, const char* what) {
    require(std::isfinite(value) && value >= 0.0 && value <= 1.0,
            std::string(what) + " must lie in [0, 1], got " + std::to_string(value));
}

std::vector<Pulse> make_pulses(const std::vector<double>& amplitudes, const std::vector<double>& phases,
                               const std::vector<double>& explicit_delays, double delay_unit) {
    std::vector<Pulse> pulses(amplitudes.size());
    for (std::size_t k = 0; k < amplitudes.size(); ++k) {
        pulses[k].amplitude = amplitudes[k];
        pulses[k].phase = k == 0 ? 0.0 : phases[k - 1];
        if (k > 0) {
            pulses[k].delay = explicit_delays.empty() ? static_cast<double>(k) * delay_unit : explicit_delays[k - 1];
        }
    }
    return pulses;
}

ComplexSpectrum synthesize(const std::vector<Pulse>& pulses, const PulseParams& base, const FrequencyGrid& grid) {
    std::vector<Complex> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double omega = grid.point(i);
        const double detuning = omega - base.center_detuning;
        Complex comb{0.0, 0.0};
        for (const auto& p : pulses) {
            comb += p.amplitude * std::polar(1.0, p.phase - p.delay * detuning);
        }
        out[i] = comb * sech2_envelope(omega, base);
    }
    return ComplexSpectrum(grid, std::move(out));
}

}  // namespace

PulseParams PulseParams::from_fwhm(double fwhm, double center_detuning) {
    PulseParams p{fwhm / kSech2FwhmFactor, center_detuning};
    p.validate();
    return p;
}

double PulseParams::fwhm() const { return kSech2FwhmFactor * sigma; }

void PulseParams::validate() const {
    require(sigma > 0.0 && std::isfinite(sigma), "pulse sigma must be positive");
    require(std::isfinite(center_detuning), "pulse center detuning must be finite");
}

std::string_view to_string(PumpKind kind) {
    switch (kind) {
        case PumpKind::Single: return "single";
        case PumpKind::Dual: return "dual";
        case PumpKind::Triple: return "triple";
        case PumpKind::Cascade: return "cascade";
        case PumpKind::TrainConstant: return "train-constant";
        case PumpKind::TrainCascade: return "train-cascade";
    }
    return "unknown";
}

PumpKind parse_pump_kind(std::string_view name) {
    for (auto kind : {PumpKind::Single, PumpKind::Dual, PumpKind::Triple, PumpKind::Cascade,
                      PumpKind::TrainConstant, PumpKind::TrainCascade}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    throw std::invalid_argument("unknown pump kind '" + std::string(name) + "'");
}

PumpSpec PumpSpec::single(PulseParams base) {
    PumpSpec s;
    s.kind = PumpKind::Single;
    s.base = base;
    return s;
}

PumpSpec PumpSpec::dual(PulseParams base, double eta, double phase, double delay) {
    PumpSpec s;
    s.kind = PumpKind::Dual;
    s.base = base;
    s.stages = {{eta, phase}};
    s.delay_unit = delay;
    return s;
}

PumpSpec PumpSpec::triple(PulseParams base, Stage first, Stage second, double delay1, double delay2) {
    PumpSpec s;
    s.kind = PumpKind::Triple;
    s.base = base;
    s.stages = {first, second};
    s.delay_unit = delay1;
    s.delays = {delay1, delay2};
    return s;
}

PumpSpec PumpSpec::cascade(PulseParams base, std::vector<Stage> stages, double delay_unit) {
    PumpSpec s;
    s.kind = PumpKind::Cascade;
    s.base = base;
    s.stages = std::move(stages);
    s.delay_unit = delay_unit;
    return s;
}

PumpSpec PumpSpec::train_constant(PulseParams base, std::size_t n, double tail_ratio, double delay_unit) {
    PumpSpec s;
    s.kind = PumpKind::TrainConstant;
    s.base = base;
    s.n_pulses = n;
    s.tail_ratio = tail_ratio;
    s.delay_unit = delay_unit;
    return s;
}

PumpSpec PumpSpec::train_cascade(PulseParams base, std::size_t n, double eta, double delay_unit) {
    PumpSpec s;
    s.kind = PumpKind::TrainCascade;
    s.base = base;
    s.n_pulses = n;
    s.train_eta = eta;
    s.delay_unit = delay_unit;
    return s;
}

void PumpSpec::validate() const {
    base.validate();
    require(std::isfinite(delay_unit) && delay_unit >= 0.0, "delay_unit must be non-negative");
    for (const auto& st : stages) {
        check_ratio(st.eta, "splitting ratio eta");
        require(std::isfinite(st.phase), "stage phase must be finite");
    }
    switch (kind) {
        case PumpKind::Single:
            require(stages.empty(), "single pump takes no stages");
            break;
        case PumpKind::Dual:
            require(stages.size() == 1, "dual pump requires exactly 1 stage");
            break;
        case PumpKind::Triple:
            require(stages.size() == 2, "triple pump requires exactly 2 stages");
            break;
        case PumpKind::Cascade:
            require(!stages.empty() && stages.size() <= 3, "cascade pump requires 1 to 3 stages");
            break;
        case PumpKind::TrainConstant:
            require(n_pulses >= 1, "pulse train requires n_pulses >= 1");
            require(tail_ratio.has_value(), "train-constant requires tail_ratio");
            check_ratio(*tail_ratio, "tail_ratio");
            break;
        case PumpKind::TrainCascade:
            require(n_pulses >= 1, "pulse train requires n_pulses >= 1");
            require(train_eta.has_value(), "train-cascade requires eta");
            check_ratio(*train_eta, "train eta");
            break;
    }
    if (!delays.empty()) {
        require(delays.size() + 1 == pulse_count(), "explicit delay list must have one entry per delayed pulse");
        for (double d : delays) {
            require(std::isfinite(d) && d >= 0.0, "delays must be non-negative");
        }
    }
}

std::size_t PumpSpec::pulse_count() const {
    switch (kind) {
        case PumpKind::TrainConstant:
        case PumpKind::TrainCascade:
            return n_pulses;
        default:
            return stages.size() + 1;
    }
}

std::vector<double> cascade_amplitudes(const std::vector<double>& etas) {
    std::vector<double> amps;
    amps.reserve(etas.size() + 1);
    double remaining = 1.0;
    for (double eta : etas) {
        amps.push_back(std::sqrt(remaining * eta));
        remaining *= 1.0 - eta;
    }
    amps.push_back(std::sqrt(remaining));
    return amps;
}

std::vector<Pulse> pulse_sequence(const PumpSpec& spec) {
    spec.validate();
    const double pi = std::numbers::pi;
    switch (spec.kind) {
        case PumpKind::TrainConstant: {
            const std::size_t n = spec.n_pulses;
            const double r = *spec.tail_ratio;
            const double norm = 1.0 / std::sqrt(1.0 + static_cast<double>(n - 1) * r * r);
            std::vector<double> amps(n, r * norm);
            amps[0] = norm;
            return make_pulses(amps, std::vector<double>(n - 1, pi), spec.delays, spec.delay_unit);
        }
        case PumpKind::TrainCascade: {
            const std::size_t n = spec.n_pulses;
            auto amps = cascade_amplitudes(std::vector<double>(n - 1, *spec.train_eta));
            return make_pulses(amps, std::vector<double>(n - 1, pi), spec.delays, spec.delay_unit);
        }
        default: {
            std::vector<double> etas;
            std::vector<double> phases;
            for (const auto& st : spec.stages) {
                etas.push_back(st.eta);
                phases.push_back(st.phase);
            }
            return make_pulses(cascade_amplitudes(etas), phases, spec.delays, spec.delay_unit);
        }
    }
}

double sech2_envelope(double omega, const PulseParams& params) {
    const double c = std::cosh((omega - params.center_detuning) / params.sigma);
    return 1.0 / (c * c);
}

ComplexSpectrum single_envelope(const PulseParams& params, const FrequencyGrid& grid) {
    params.validate();
    return synthesize({Pulse{1.0, 0.0, 0.0}}, params, grid);
}

ComplexSpectrum dual_envelope(const PumpSpec& spec, const FrequencyGrid& grid) {
    require(spec.kind == PumpKind::Dual, "dual_envelope requires a dual pump spec");
    return synthesize(pulse_sequence(spec), spec.base, grid);
}

ComplexSpectrum triple_envelope(const PumpSpec& spec, const FrequencyGrid& grid) {
    require(spec.kind == PumpKind::Triple, "triple_envelope requires a triple pump spec");
    return synthesize(pulse_sequence(spec), spec.base, grid);
}

ComplexSpectrum cascade_envelope(const std::vector<Stage>& stages, double delay_unit, const PulseParams& params,
                                 const FrequencyGrid& grid, const std::vector<double>& explicit_delays) {
    PumpSpec spec = PumpSpec::cascade(params, stages, delay_unit);
    spec.delays = explicit_delays;
    return synthesize(pulse_sequence(spec), params, grid);
}

ComplexSpectrum train_envelope(const PumpSpec& spec, const FrequencyGrid& grid) {
    require(spec.kind == PumpKind::TrainConstant || spec.kind == PumpKind::TrainCascade,
            "train_envelope requires a train pump spec");
    return synthesize(pulse_sequence(spec), spec.base, grid);
}

ComplexSpectrum target_envelope(const PulseParams& params, const ResonatorParams& resonator,
                                const FrequencyGrid& grid) {
    params.validate();
    resonator.validate();
    std::vector<Complex> out(grid.size());
    double energy = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double omega = grid.point(i);
        out[i] = sech2_envelope(omega, params) / lorentzian(omega, resonator.gamma_pump);
        energy += std::norm(out[i]);
    }
    const double scale = 1.0 / std::sqrt(energy * grid.spacing());
    for (auto& v : out) {
        v *= scale;
    }
    return ComplexSpectrum(grid, std::move(out));
}

ComplexSpectrum build_envelope(const PumpSpec& spec, const FrequencyGrid& grid) {
    switch (spec.kind) {
        case PumpKind::Single:
            spec.validate();
            return single_envelope(spec.base, grid);
        case PumpKind::Dual: return dual_envelope(spec, grid);
        case PumpKind::Triple: return triple_envelope(spec, grid);
        case PumpKind::Cascade: return cascade_envelope(spec.stages, spec.delay_unit, spec.base, grid, spec.delays);
        case PumpKind::TrainConstant:
        case PumpKind::TrainCascade: return train_envelope(spec, grid);
    }
    throw std::invalid_argument("unhandled pump kind");
}

}  // namespace ringjsa
