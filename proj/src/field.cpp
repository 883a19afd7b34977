#include "ringjsa/field.hpp"

#include <algorithm>

namespace ringjsa {

FieldReport field_report(const PumpSpec& spec, const ResonatorParams& resonator, const FrequencyGrid& grid) {
    ComplexSpectrum pump = build_envelope(spec, grid);
    ComplexSpectrum spectral = in_resonator_field(pump, resonator);
    TimeSeries temporal = fourier_to_time(spectral);
    return {std::move(pump), std::move(spectral), std::move(temporal)};
}

FrequencyGrid default_field_grid(const PulseParams& pulse, const ResonatorParams& resonator) {
    return FrequencyGrid::make(1024, std::max(8.0 * pulse.fwhm(), 40.0 * resonator.gamma_pump));
}

double energy_after(const TimeSeries& series, double t_start) {
    double acc = 0.0;
    for (std::size_t k = 0; k < series.values.size(); ++k) {
        if (series.times[k] >= t_start) {
            acc += std::norm(series.values[k]);
        }
    }
    return acc * series.step;
}

}  // namespace ringjsa
