#pragma once

#include "ringjsa/fourier.hpp"
#include "ringjsa/pump.hpp"

namespace ringjsa {

struct FieldReport {
    ComplexSpectrum pump;      // alpha(w)
    ComplexSpectrum spectral;  // A_p(w) = L(w) alpha(w)
    TimeSeries temporal;       // a_p(t)
};

FieldReport field_report(const PumpSpec& spec, const ResonatorParams& resonator, const FrequencyGrid& grid);

/// Default pulse/field grid: 1024 points over max(8 * pump FWHM, 40 * gamma_pump).
FrequencyGrid default_field_grid(const PulseParams& pulse, const ResonatorParams& resonator);

/// Rectangle-rule integral of |a(t)|^2 over t >= t_start.
double energy_after(const TimeSeries& series, double t_start);

}  // namespace ringjsa
