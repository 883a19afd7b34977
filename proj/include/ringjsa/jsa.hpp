#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>

#include "ringjsa/pump.hpp"
#include "ringjsa/resonator.hpp"

namespace ringjsa {

/// Discretized joint spectral amplitude, rows = signal detuning, columns = idler detuning.
class JsaMatrix {
public:
    /// Throws std::invalid_argument if the shape disagrees with the grids or an entry is not finite.
    JsaMatrix(FrequencyGrid signal_grid, FrequencyGrid idler_grid, Eigen::MatrixXcd values);

    const FrequencyGrid& signal_grid() const { return signal_grid_; }
    const FrequencyGrid& idler_grid() const { return idler_grid_; }
    const Eigen::MatrixXcd& values() const { return values_; }

    /// sqrt(sum |phi|^2 dWs dWi)
    double norm() const;
    /// Rescales so that norm() == 1. Throws on an all-zero matrix.
    void normalize();

private:
    FrequencyGrid signal_grid_;
    FrequencyGrid idler_grid_;
    Eigen::MatrixXcd values_;
};

enum class Interpolation { Linear, Cubic };

struct JsaOptions {
    Interpolation interpolation = Interpolation::Linear;
    std::size_t workers = 1;
    /// Grid for the pump envelope and kernel; default_pump_grid() when unset.
    std::optional<FrequencyGrid> pump_grid;
};

/// K(W) = Integral f(d) f(W - d) dd with f = alpha * L_pump, evaluated by zero-padded FFT
/// autoconvolution. The result lives on a 2n-point grid with the pump spacing whose
/// point k is 2*center + (k - n + 1) * spacing; the last sample is outside the support and zero.
ComplexSpectrum pump_kernel(const ComplexSpectrum& pump, const ResonatorParams& resonator);

/// Samples K at an arbitrary sum frequency. Zero outside the kernel grid.
Complex sample_kernel(const ComplexSpectrum& kernel, double omega, Interpolation interpolation);

/// At least 4096 points over max(8 * FWHM, 40 * gamma_pump), refined until the spacing
/// resolves both gamma_pump / 8 and the finest delay fringe of the pulse train.
FrequencyGrid default_pump_grid(const PumpSpec& spec, const ResonatorParams& resonator);

/// `n_points` over span_factor linewidths, centered on resonance.
FrequencyGrid default_jsa_grid(double gamma, std::size_t n_points = 512, double span_factor = 40.0);

/// phi(Ws, Wi) = L_s(Ws) L_i(Wi) K(Ws + Wi), normalized to unit norm.
/// Throws std::invalid_argument when a grid spacing exceeds a quarter of its linewidth.
JsaMatrix compute_jsa(const PumpSpec& spec, const ResonatorParams& resonator, const FrequencyGrid& signal_grid,
                      const FrequencyGrid& idler_grid, const JsaOptions& options = {});

/// Same, for an explicit pump envelope (e.g. target_envelope).
JsaMatrix compute_jsa(const ComplexSpectrum& pump, const ResonatorParams& resonator, const FrequencyGrid& signal_grid,
                      const FrequencyGrid& idler_grid, const JsaOptions& options = {});

/// |phi|^2 scaled to a unit maximum.
Eigen::MatrixXd jsi(const JsaMatrix& jsa);

}  // namespace ringjsa
