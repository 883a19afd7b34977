#include "ringjsa/resonator.hpp"

#include <cmath>
#include <stdexcept>

namespace ringjsa {

void ResonatorParams::validate() const {
    auto check = [](double g, const char* name) {
        if (!(g > 0.0) || !std::isfinite(g)) {
            throw std::invalid_argument(std::string("resonator linewidth ") + name + " must be positive");
        }
    };
    check(gamma_pump, "gamma_pump");
    check(gamma_signal, "gamma_signal");
    check(gamma_idler, "gamma_idler");
}

Complex lorentzian(double omega, double gamma) {
    if (!(gamma > 0.0)) {
        throw std::invalid_argument("lorentzian linewidth must be positive");
    }
    const double half = 0.5 * gamma;
    return half / Complex(half, omega);
}

ComplexSpectrum in_resonator_field(const ComplexSpectrum& pump, const ResonatorParams& resonator) {
    resonator.validate();
    const FrequencyGrid& grid = pump.grid();
    std::vector<Complex> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out[i] = lorentzian(grid.point(i), resonator.gamma_pump) * pump[i];
    }
    return ComplexSpectrum(grid, std::move(out));
}

}  // namespace ringjsa
