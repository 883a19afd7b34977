#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "ringjsa/errors.hpp"
#include "ringjsa/table.hpp"

namespace ringjsa {

/// Numeric text used by every writer: 10 significant digits, "nan" for NaN.
std::string format_number(double value);

/// CSV text: each comment as "# <line>", then "# col,col,...", then one row per line (LF).
std::string format_table(const Table& table, const std::vector<std::string>& comments = {});

/// Throws std::invalid_argument on ragged rows and std::runtime_error on IO failure.
void write_table(const Table& table, const std::filesystem::path& path,
                 const std::vector<std::string>& comments = {});

struct TableFile {
    Table table;
    std::vector<std::string> comments;  // '#' lines other than the column header, prefix stripped
};

/// Reads a file produced by write_table. The last '#' line before the data is the column header.
TableFile read_table(const std::filesystem::path& path);

enum class HeatmapScale { MinMax, Fixed };

struct HeatmapInfo {
    std::size_t nan_cells = 0;
    double low = 0.0;   // value mapped to level 0
    double high = 0.0;  // value mapped to level 255
    std::filesystem::path csv_path;
};

/// Gray levels 0..255 for each cell. MinMax maps the finite range onto 0..255
/// (a constant matrix maps to 0), Fixed maps [0, 1] with clamping. NaN cells get 0.
Eigen::MatrixXi heatmap_levels(const Eigen::MatrixXd& values, HeatmapScale scale, HeatmapInfo* info = nullptr);

/// Writes an ASCII P2 graymap (row 0 at top) and a sibling CSV (same stem,
/// columns row,col,value) holding the unscaled values.
HeatmapInfo write_heatmap_pgm(const Eigen::MatrixXd& values, const std::filesystem::path& path,
                              HeatmapScale scale, const std::vector<std::string>& comments = {});

}  // namespace ringjsa
