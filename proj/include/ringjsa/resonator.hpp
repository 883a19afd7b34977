#pragma once

#include "ringjsa/spectrum.hpp"

namespace ringjsa {

/// Lorentzian field-enhancement linewidths (FWHM, rad/s) of the three ring resonances.
struct ResonatorParams {
    double gamma_pump = 0.0;
    double gamma_signal = 0.0;
    double gamma_idler = 0.0;

    static ResonatorParams uniform(double gamma) { return {gamma, gamma, gamma}; }
    void validate() const;
};

/// Unit-peak field enhancement L(w) = (g/2) / (g/2 + i w). Throws on gamma <= 0.
Complex lorentzian(double omega, double gamma);

/// A_p(w) = L(w) * alpha(w) in pump-detuning coordinates.
ComplexSpectrum in_resonator_field(const ComplexSpectrum& pump, const ResonatorParams& resonator);

}  // namespace ringjsa
