#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ringjsa/grid.hpp"

namespace ringjsa {

using Complex = std::complex<double>;

/// Complex amplitude sampled on a FrequencyGrid. Immutable once built.
class ComplexSpectrum {
public:
    /// Throws std::invalid_argument on a length mismatch or any non-finite sample.
    ComplexSpectrum(FrequencyGrid grid, std::vector<Complex> values);

    const FrequencyGrid& grid() const { return grid_; }
    std::span<const Complex> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    const Complex& operator[](std::size_t i) const { return values_[i]; }

    /// sum |v|^2 * spacing
    double energy() const;

private:
    FrequencyGrid grid_;
    std::vector<Complex> values_;
};

struct TimeSeries {
    std::vector<double> times;
    std::vector<Complex> values;
    double step = 0.0;

    double energy() const;
};

}  // namespace ringjsa
