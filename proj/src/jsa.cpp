#include "ringjsa/jsa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fft.hpp"
#include "parallel.hpp"
#include "ringjsa/units.hpp"

namespace ringjsa {
namespace {

constexpr std::size_t kMinPumpPoints = 4096;
constexpr std::size_t kMaxPumpPoints = std::size_t{1} << 20;

void require_resolved(const FrequencyGrid& grid, double gamma, const char* axis) {
    if (grid.spacing() > 0.25 * gamma) {
        throw std::invalid_argument(std::string(axis) + " grid spacing " + std::to_string(grid.spacing()) +
                                    " rad/s exceeds a quarter of its linewidth " + std::to_string(gamma) + " rad/s");
    }
}

Complex kernel_at(std::span<const Complex> k, long long i) {
    if (i < 0 || i >= static_cast<long long>(k.size())) {
        return {0.0, 0.0};
    }
    return k[static_cast<std::size_t>(i)];
}

}  // namespace

JsaMatrix::JsaMatrix(FrequencyGrid signal_grid, FrequencyGrid idler_grid, Eigen::MatrixXcd values)
    : signal_grid_(signal_grid), idler_grid_(idler_grid), values_(std::move(values)) {
    if (static_cast<std::size_t>(values_.rows()) != signal_grid_.size() ||
        static_cast<std::size_t>(values_.cols()) != idler_grid_.size()) {
        throw std::invalid_argument("JSA matrix shape does not match its grids");
    }
    if (!values_.allFinite()) {
        throw std::invalid_argument("JSA matrix contains non-finite entries");
    }
}

double JsaMatrix::norm() const {
    return std::sqrt(values_.squaredNorm() * signal_grid_.spacing() * idler_grid_.spacing());
}

void JsaMatrix::normalize() {
    const double n = norm();
    if (!(n > 0.0)) {
        throw std::invalid_argument("cannot normalize an all-zero JSA");
    }
    values_ /= n;
}

ComplexSpectrum pump_kernel(const ComplexSpectrum& pump, const ResonatorParams& resonator) {
    const ComplexSpectrum field = in_resonator_field(pump, resonator);
    const FrequencyGrid& grid = field.grid();
    const std::size_t n = grid.size();
    const double h = grid.spacing();

    std::vector<Complex> buf(2 * n, Complex{0.0, 0.0});
    std::copy(field.values().begin(), field.values().end(), buf.begin());
    detail::fft_inplace(buf, detail::FftSign::Forward);
    for (auto& v : buf) {
        v *= v;
    }
    detail::fft_inplace(buf, detail::FftSign::Backward);
    const double scale = h / static_cast<double>(2 * n);
    for (auto& v : buf) {
        v *= scale;
    }
    buf.back() = Complex{0.0, 0.0};

    const auto kernel_grid =
        FrequencyGrid::make(2 * n, static_cast<double>(2 * n - 1) * h, 2.0 * grid.center() + 0.5 * h);
    return ComplexSpectrum(kernel_grid, std::move(buf));
}

Complex sample_kernel(const ComplexSpectrum& kernel, double omega, Interpolation interpolation) {
    const FrequencyGrid& grid = kernel.grid();
    const double x = (omega - grid.front()) / grid.spacing();
    const double fl = std::floor(x);
    if (fl < -2.0 || fl > static_cast<double>(grid.size()) + 1.0) {
        return {0.0, 0.0};
    }
    const auto i = static_cast<long long>(fl);
    const double t = x - fl;
    const auto k = kernel.values();
    if (interpolation == Interpolation::Linear) {
        return (1.0 - t) * kernel_at(k, i) + t * kernel_at(k, i + 1);
    }
    // Catmull-Rom
    const Complex p0 = kernel_at(k, i - 1);
    const Complex p1 = kernel_at(k, i);
    const Complex p2 = kernel_at(k, i + 1);
    const Complex p3 = kernel_at(k, i + 2);
    const double t2 = t * t;
    const double t3 = t2 * t;
    return 0.5 * ((2.0 * p1) + (-p0 + p2) * t + (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * t2 +
                  (-p0 + 3.0 * p1 - 3.0 * p2 + p3) * t3);
}

FrequencyGrid default_pump_grid(const PumpSpec& spec, const ResonatorParams& resonator) {
    resonator.validate();
    const double span = std::max(8.0 * spec.base.fwhm(), 40.0 * resonator.gamma_pump);
    double max_delay = 0.0;
    for (const auto& p : pulse_sequence(spec)) {
        max_delay = std::max(max_delay, p.delay);
    }
    double spacing = resonator.gamma_pump / 8.0;
    if (max_delay > 0.0) {
        spacing = std::min(spacing, kTwoPi / (16.0 * max_delay));
    }
    const auto wanted = static_cast<std::size_t>(std::ceil(span / spacing)) + 1;
    const std::size_t n = std::clamp(next_power_of_two(wanted), kMinPumpPoints, kMaxPumpPoints);
    return FrequencyGrid::make(n, span);
}

FrequencyGrid default_jsa_grid(double gamma, std::size_t n_points, double span_factor) {
    return FrequencyGrid::make(n_points, span_factor * gamma);
}

JsaMatrix compute_jsa(const PumpSpec& spec, const ResonatorParams& resonator, const FrequencyGrid& signal_grid,
                      const FrequencyGrid& idler_grid, const JsaOptions& options) {
    spec.validate();
    resonator.validate();
    const FrequencyGrid pump_grid = options.pump_grid.value_or(default_pump_grid(spec, resonator));
    return compute_jsa(build_envelope(spec, pump_grid), resonator, signal_grid, idler_grid, options);
}

JsaMatrix compute_jsa(const ComplexSpectrum& pump, const ResonatorParams& resonator, const FrequencyGrid& signal_grid,
                      const FrequencyGrid& idler_grid, const JsaOptions& options) {
    resonator.validate();
    require_resolved(signal_grid, resonator.gamma_signal, "signal");
    require_resolved(idler_grid, resonator.gamma_idler, "idler");
    require_resolved(pump.grid(), resonator.gamma_pump, "pump");

    const ComplexSpectrum kernel = pump_kernel(pump, resonator);

    const std::size_t rows = signal_grid.size();
    const std::size_t cols = idler_grid.size();
    std::vector<Complex> idler_l(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        idler_l[j] = lorentzian(idler_grid.point(j), resonator.gamma_idler);
    }
    Eigen::MatrixXcd values(rows, cols);
    detail::parallel_for(rows, options.workers, [&](std::size_t i) {
        const double ws = signal_grid.point(i);
        const Complex ls = lorentzian(ws, resonator.gamma_signal);
        for (std::size_t j = 0; j < cols; ++j) {
            const Complex k = sample_kernel(kernel, ws + idler_grid.point(j), options.interpolation);
            values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = ls * idler_l[j] * k;
        }
    });

    JsaMatrix jsa(signal_grid, idler_grid, std::move(values));
    jsa.normalize();
    return jsa;
}

Eigen::MatrixXd jsi(const JsaMatrix& jsa) {
    Eigen::MatrixXd out = jsa.values().cwiseAbs2();
    const double peak = out.maxCoeff();
    if (peak > 0.0) {
        out /= peak;
    }
    return out;
}

}  // namespace ringjsa
