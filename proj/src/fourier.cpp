#include "ringjsa/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fft.hpp"

namespace ringjsa {
namespace {

constexpr double kPi = std::numbers::pi;

// exp(i*pi*num/den) with the numerator reduced mod 2*den first, so large
// indices do not lose phase precision.
Complex unit_phase(long long num, long long den) {
    long long r = num % (2 * den);
    if (r < 0) {
        r += 2 * den;
    }
    return std::polar(1.0, kPi * static_cast<double>(r) / static_cast<double>(den));
}

}  // namespace

TimeSeries fourier_to_time(const ComplexSpectrum& spectrum) {
    const FrequencyGrid& grid = spectrum.grid();
    const auto n = static_cast<long long>(grid.size());
    std::vector<Complex> buf(spectrum.values().begin(), spectrum.values().end());
    for (long long k = 1; k < n; k += 2) {
        buf[static_cast<std::size_t>(k)] = -buf[static_cast<std::size_t>(k)];
    }
    detail::fft_inplace(buf, detail::FftSign::Backward);

    TimeSeries out;
    out.step = grid.time_step();
    out.times = grid.time_points();
    out.values.resize(buf.size());
    const double scale = grid.spacing() / std::sqrt(2.0 * kPi);
    const Complex global = unit_phase(n - 1, 2);
    for (long long j = 0; j < n; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        const Complex shift = std::polar(1.0, grid.center() * out.times[ju]);
        out.values[ju] = scale * global * shift * unit_phase(-j * (n - 1), n) * buf[ju];
    }
    return out;
}

ComplexSpectrum time_to_freq(const TimeSeries& series, const FrequencyGrid& grid) {
    const auto n = static_cast<long long>(grid.size());
    if (series.values.size() != grid.size()) {
        throw std::invalid_argument("time series length does not match the frequency grid");
    }
    std::vector<Complex> buf(series.values.size());
    for (long long j = 0; j < n; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        const Complex shift = std::polar(1.0, -grid.center() * grid.time_point(ju));
        buf[ju] = series.values[ju] * shift * unit_phase(j * (n - 1), n);
    }
    detail::fft_inplace(buf, detail::FftSign::Forward);

    const double scale = grid.time_step() / std::sqrt(2.0 * kPi);
    const Complex global = unit_phase(-(n - 1), 2);
    for (long long k = 0; k < n; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        buf[ku] *= (k % 2 == 0 ? scale : -scale) * global;
    }
    return ComplexSpectrum(grid, std::move(buf));
}

}  // namespace ringjsa
