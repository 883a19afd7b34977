#pragma once

#include "ringjsa/spectrum.hpp"

namespace ringjsa {

// Unitary continuous-transform convention, sampled on the grid's conjugate axes:
//   a(t) = 1/sqrt(2 pi) * Integral A(w) exp(+i w t) dw
//   A(w) = 1/sqrt(2 pi) * Integral a(t) exp(-i w t) dt
// A spectral factor exp(-i w T) therefore delays the pulse to t = +T, and the
// discrete transforms satisfy Parseval exactly: sum|A|^2 dw == sum|a|^2 dt.

TimeSeries fourier_to_time(const ComplexSpectrum& spectrum);

/// Inverse of fourier_to_time. `series` must carry grid.size() samples on grid.time_points().
ComplexSpectrum time_to_freq(const TimeSeries& series, const FrequencyGrid& grid);

}  // namespace ringjsa
