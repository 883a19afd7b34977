#pragma once

#include <cstddef>
#include <vector>

namespace ringjsa {

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

/// Uniform angular-detuning axis shared by every spectrum.
///
/// Points are symmetric about `center`: point(i) = center + (i - (n-1)/2) * spacing.
/// The conjugate time axis has the same number of samples with
/// time_step = 2*pi / (n * spacing), centered so that t = 0 is sample n/2.
class FrequencyGrid {
public:
    /// Throws std::invalid_argument unless n_points is a power of two >= 16 and span > 0.
    static FrequencyGrid make(std::size_t n_points, double span, double center = 0.0);

    std::size_t size() const { return n_points_; }
    double span() const { return span_; }
    double center() const { return center_; }
    double spacing() const { return span_ / static_cast<double>(n_points_ - 1); }
    double front() const { return point(0); }
    double back() const { return point(n_points_ - 1); }

    double point(std::size_t i) const {
        return center_ + (static_cast<double>(i) - 0.5 * static_cast<double>(n_points_ - 1)) * spacing();
    }
    std::vector<double> points() const;

    double time_step() const;
    double time_point(std::size_t k) const;
    std::vector<double> time_points() const;

    bool operator==(const FrequencyGrid&) const = default;

private:
    FrequencyGrid(std::size_t n, double span, double center) : n_points_(n), span_(span), center_(center) {}

    std::size_t n_points_;
    double span_;
    double center_;
};

}  // namespace ringjsa
