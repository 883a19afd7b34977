#include "ringjsa/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ringjsa {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
    std::size_t p = 1;
    while (p < n) {
        p <<= 1;
    }
    return p;
}

FrequencyGrid FrequencyGrid::make(std::size_t n_points, double span, double center) {
    if (n_points < 16 || !is_power_of_two(n_points)) {
        throw std::invalid_argument("grid size must be a power of two >= 16, got " + std::to_string(n_points));
    }
    if (!(span > 0.0) || !std::isfinite(span)) {
        throw std::invalid_argument("grid span must be positive and finite");
    }
    if (!std::isfinite(center)) {
        throw std::invalid_argument("grid center must be finite");
    }
    return FrequencyGrid(n_points, span, center);
}

std::vector<double> FrequencyGrid::points() const {
    std::vector<double> out(n_points_);
    for (std::size_t i = 0; i < n_points_; ++i) {
        out[i] = point(i);
    }
    return out;
}

double FrequencyGrid::time_step() const {
    return 2.0 * std::numbers::pi / (static_cast<double>(n_points_) * spacing());
}

double FrequencyGrid::time_point(std::size_t k) const {
    return (static_cast<double>(k) - 0.5 * static_cast<double>(n_points_)) * time_step();
}

std::vector<double> FrequencyGrid::time_points() const {
    std::vector<double> out(n_points_);
    for (std::size_t k = 0; k < n_points_; ++k) {
        out[k] = time_point(k);
    }
    return out;
}

}  // namespace ringjsa
