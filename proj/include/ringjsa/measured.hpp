#pragma once

#include <Eigen/Dense>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ringjsa/errors.hpp"

namespace ringjsa {

/// Measured joint spectral intensity on its native grid. Rows follow the
/// signal axis, columns the idler axis; both axes in GHz.
struct JsiGrid {
    std::vector<double> signal_axis_ghz;
    std::vector<double> idler_axis_ghz;
    Eigen::MatrixXd intensity;

    /// Throws std::invalid_argument on shape mismatch, non-monotone axes or non-finite cells.
    void validate() const;
};

enum class JsiFormat {
    Long,    // rows "signal_GHz,idler_GHz,intensity", any order, one per grid cell
    Matrix,  // header row "<label>,idler...", then rows "signal,intensity..."
};

std::string_view to_string(JsiFormat format);
/// Accepts "long" and "matrix".
JsiFormat parse_jsi_format(std::string_view name);

/// Blank lines and '#' lines are skipped. Errors throw ParseError with the offending line.
JsiGrid load_jsi(std::istream& in, JsiFormat format);
JsiGrid load_jsi(const std::filesystem::path& path, JsiFormat format);

/// Writes the matrix layout read by load_jsi.
void save_jsi(const JsiGrid& grid, const std::filesystem::path& path, const std::vector<std::string>& comments = {});

struct JsiEstimate {
    double purity = 0.0;
    std::vector<double> schmidt_coefficients;
    /// Always true: sqrt(JSI) drops the JSA phase, so this is an estimate.
    bool phase_blind = true;
    std::size_t clamped_cells = 0;
    /// Non-empty when an axis spacing deviates from uniform by more than 1%.
    std::string warning;
};

/// Clamps intensities below `floor` to zero, takes the elementwise square root
/// and Schmidt-decomposes the result. Throws std::invalid_argument if nothing survives.
JsiEstimate estimate_purity_from_jsi(const JsiGrid& grid, double floor = 0.0);

}  // namespace ringjsa
