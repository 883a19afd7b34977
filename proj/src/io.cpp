#include "ringjsa/io.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "text.hpp"

namespace ringjsa {
namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error(fmt::format("cannot open '{}' for writing", path.string()));
    }
    out << text;
    if (!out.flush()) {
        throw std::runtime_error(fmt::format("failed writing '{}'", path.string()));
    }
}

void append_comments(std::string& out, const std::vector<std::string>& comments) {
    for (const auto& c : comments) {
        out += c.empty() ? "#\n" : "# " + c + "\n";
    }
}

}  // namespace

std::string format_number(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    return fmt::format("{:.10g}", value);
}

std::string format_table(const Table& table, const std::vector<std::string>& comments) {
    std::string out;
    append_comments(out, comments);
    out += "# ";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out += (i ? "," : "") + table.columns[i];
    }
    out += '\n';
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        if (row.size() != table.columns.size()) {
            throw std::invalid_argument(
                fmt::format("table row {} has {} values, expected {}", r, row.size(), table.columns.size()));
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += (i ? "," : "") + format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

void write_table(const Table& table, const std::filesystem::path& path, const std::vector<std::string>& comments) {
    write_file(path, format_table(table, comments));
}

TableFile read_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error(fmt::format("cannot open '{}'", path.string()));
    }
    TableFile result;
    std::vector<std::string> hashes;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            if (!result.table.rows.empty()) {
                throw ParseError(lineno, "comment after data");
            }
            hashes.push_back(detail::trim(line.substr(1)));
            continue;
        }
        const auto fields = detail::split_csv(line);
        std::vector<double> row;
        row.reserve(fields.size());
        for (std::size_t i = 0; i < fields.size(); ++i) {
            row.push_back(detail::parse_double(fields[i], lineno, i + 1));
        }
        if (!result.table.rows.empty() && row.size() != result.table.rows.front().size()) {
            throw ParseError(lineno, fmt::format("expected {} fields, found {}", result.table.rows.front().size(),
                                                 row.size()));
        }
        result.table.rows.push_back(std::move(row));
    }
    if (hashes.empty()) {
        throw ParseError(lineno, "missing '#' column header");
    }
    for (auto& name : detail::split_csv(hashes.back())) {
        result.table.columns.push_back(detail::trim(name));
    }
    hashes.pop_back();
    result.comments = std::move(hashes);
    if (!result.table.rows.empty() && result.table.rows.front().size() != result.table.columns.size()) {
        throw ParseError(lineno, "column header does not match row width");
    }
    return result;
}

Eigen::MatrixXi heatmap_levels(const Eigen::MatrixXd& values, HeatmapScale scale, HeatmapInfo* info) {
    HeatmapInfo local;
    double lo = 0.0, hi = 1.0;
    if (scale == HeatmapScale::MinMax) {
        lo = std::numeric_limits<double>::infinity();
        hi = -lo;
        for (Eigen::Index k = 0; k < values.size(); ++k) {
            const double v = values.data()[k];
            if (std::isfinite(v)) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
        if (!std::isfinite(lo)) {
            lo = hi = 0.0;
        }
    }
    Eigen::MatrixXi levels(values.rows(), values.cols());
    for (Eigen::Index r = 0; r < values.rows(); ++r) {
        for (Eigen::Index c = 0; c < values.cols(); ++c) {
            const double v = values(r, c);
            if (!std::isfinite(v)) {
                levels(r, c) = 0;
                ++local.nan_cells;
                continue;
            }
            const double t = hi > lo ? std::clamp((v - lo) / (hi - lo), 0.0, 1.0) : 0.0;
            levels(r, c) = static_cast<int>(std::lround(255.0 * t));
        }
    }
    local.low = lo;
    local.high = hi;
    if (info) {
        *info = local;
    }
    return levels;
}

HeatmapInfo write_heatmap_pgm(const Eigen::MatrixXd& values, const std::filesystem::path& path, HeatmapScale scale,
                              const std::vector<std::string>& comments) {
    HeatmapInfo info;
    const Eigen::MatrixXi levels = heatmap_levels(values, scale, &info);

    std::string pgm = "P2\n";
    append_comments(pgm, comments);
    pgm += fmt::format("# scale: {}, low {}, high {}, nan_cells {}\n",
                       scale == HeatmapScale::MinMax ? "minmax" : "fixed", format_number(info.low),
                       format_number(info.high), info.nan_cells);
    pgm += fmt::format("{} {}\n255\n", levels.cols(), levels.rows());
    for (Eigen::Index r = 0; r < levels.rows(); ++r) {
        for (Eigen::Index c = 0; c < levels.cols(); ++c) {
            pgm += fmt::format("{}{}", c ? " " : "", levels(r, c));
        }
        pgm += '\n';
    }
    write_file(path, pgm);

    Table cells;
    cells.columns = {"row", "col", "value"};
    for (Eigen::Index r = 0; r < values.rows(); ++r) {
        for (Eigen::Index c = 0; c < values.cols(); ++c) {
            cells.rows.push_back({static_cast<double>(r), static_cast<double>(c), values(r, c)});
        }
    }
    auto csv_comments = comments;
    csv_comments.push_back(fmt::format("nan_cells: {}", info.nan_cells));
    info.csv_path = std::filesystem::path(path).replace_extension(".csv");
    write_table(cells, info.csv_path, csv_comments);
    return info;
}

}  // namespace ringjsa
