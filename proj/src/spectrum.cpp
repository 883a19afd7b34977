#include "ringjsa/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace ringjsa {

ComplexSpectrum::ComplexSpectrum(FrequencyGrid grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
        throw std::invalid_argument("spectrum length does not match its grid");
    }
    for (const auto& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument("spectrum contains a non-finite sample");
        }
    }
}

double ComplexSpectrum::energy() const {
    double acc = 0.0;
    for (const auto& v : values_) {
        acc += std::norm(v);
    }
    return acc * grid_.spacing();
}

double TimeSeries::energy() const {
    double acc = 0.0;
    for (const auto& v : values) {
        acc += std::norm(v);
    }
    return acc * step;
}

}  // namespace ringjsa
