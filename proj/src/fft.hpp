#pragma once

#include <complex>
#include <span>

namespace ringjsa::detail {

enum class FftSign { Forward, Backward };

// Unnormalized in-place DFT. Forward uses exp(-2*pi*i*jk/n), Backward exp(+2*pi*i*jk/n).
void fft_inplace(std::span<std::complex<double>> data, FftSign sign);

}  // namespace ringjsa::detail
