#include "ringjsa/measured.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "ringjsa/io.hpp"
#include "ringjsa/schmidt.hpp"
#include "text.hpp"

namespace ringjsa {
namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> fields;
};

std::vector<Line> data_lines(std::istream& in) {
    std::vector<Line> out;
    std::string text;
    std::size_t n = 0;
    while (std::getline(in, text)) {
        ++n;
        if (!text.empty() && text.back() == '\r') {
            text.pop_back();
        }
        const auto t = detail::trim(text);
        if (t.empty() || t[0] == '#') {
            continue;
        }
        out.push_back({n, detail::split_csv(t)});
    }
    return out;
}

// +1 increasing, -1 decreasing, 0 otherwise.
int monotone_direction(const std::vector<double>& axis) {
    if (axis.size() < 2) {
        return 1;
    }
    const bool up = std::adjacent_find(axis.begin(), axis.end(), std::greater_equal<>()) == axis.end();
    const bool down = std::adjacent_find(axis.begin(), axis.end(), std::less_equal<>()) == axis.end();
    return up ? 1 : (down ? -1 : 0);
}

JsiGrid load_long(const std::vector<Line>& lines) {
    std::map<std::pair<double, double>, std::pair<double, std::size_t>> cells;
    std::map<double, bool> signals, idlers;
    for (const auto& l : lines) {
        if (l.fields.size() != 3) {
            throw ParseError(l.number, fmt::format("expected 3 fields, found {}", l.fields.size()));
        }
        const double s = detail::parse_double(l.fields[0], l.number, 1);
        const double i = detail::parse_double(l.fields[1], l.number, 2);
        const double v = detail::parse_double(l.fields[2], l.number, 3);
        if (!std::isfinite(s) || !std::isfinite(i) || !std::isfinite(v)) {
            throw ParseError(l.number, "non-finite value");
        }
        auto [it, inserted] = cells.try_emplace({s, i}, v, l.number);
        if (!inserted) {
            throw ParseError(l.number, fmt::format("duplicate coordinate ({}, {}) first given on line {}", s, i,
                                                   it->second.second));
        }
        signals[s] = true;
        idlers[i] = true;
    }
    if (cells.empty()) {
        throw ParseError(0, "no data rows");
    }
    JsiGrid g;
    for (const auto& kv : signals) g.signal_axis_ghz.push_back(kv.first);
    for (const auto& kv : idlers) g.idler_axis_ghz.push_back(kv.first);
    g.intensity.resize(static_cast<Eigen::Index>(signals.size()), static_cast<Eigen::Index>(idlers.size()));
    for (std::size_t r = 0; r < g.signal_axis_ghz.size(); ++r) {
        for (std::size_t c = 0; c < g.idler_axis_ghz.size(); ++c) {
            auto it = cells.find({g.signal_axis_ghz[r], g.idler_axis_ghz[c]});
            if (it == cells.end()) {
                throw ParseError(lines.back().number, fmt::format("grid cell ({}, {}) is missing",
                                                                  g.signal_axis_ghz[r], g.idler_axis_ghz[c]));
            }
            g.intensity(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = it->second.first;
        }
    }
    return g;
}

JsiGrid load_matrix(const std::vector<Line>& lines) {
    if (lines.size() < 2) {
        throw ParseError(lines.empty() ? 0 : lines.front().number, "matrix layout needs a header and data rows");
    }
    const auto& header = lines.front();
    if (header.fields.size() < 2) {
        throw ParseError(header.number, "header needs a label and at least one idler value");
    }
    JsiGrid g;
    for (std::size_t k = 1; k < header.fields.size(); ++k) {
        g.idler_axis_ghz.push_back(detail::parse_double(header.fields[k], header.number, k + 1));
    }
    if (monotone_direction(g.idler_axis_ghz) == 0) {
        throw ParseError(header.number, "idler axis is not strictly monotone");
    }
    const std::size_t width = header.fields.size();
    g.intensity.resize(static_cast<Eigen::Index>(lines.size() - 1), static_cast<Eigen::Index>(width - 1));
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto& l = lines[r];
        if (l.fields.size() != width) {
            throw ParseError(l.number, fmt::format("ragged row: expected {} fields, found {}", width, l.fields.size()));
        }
        const double s = detail::parse_double(l.fields[0], l.number, 1);
        if (!g.signal_axis_ghz.empty()) {
            const double prev = g.signal_axis_ghz.back();
            if (s == prev) {
                throw ParseError(l.number, fmt::format("duplicate signal coordinate {}", s));
            }
            if (g.signal_axis_ghz.size() >= 2 &&
                ((s > prev) != (prev > g.signal_axis_ghz[g.signal_axis_ghz.size() - 2]))) {
                throw ParseError(l.number, "signal axis is not strictly monotone");
            }
        }
        g.signal_axis_ghz.push_back(s);
        for (std::size_t k = 1; k < width; ++k) {
            const double v = detail::parse_double(l.fields[k], l.number, k + 1);
            if (!std::isfinite(v)) {
                throw ParseError(l.number, fmt::format("field {} is not finite", k + 1));
            }
            g.intensity(static_cast<Eigen::Index>(r - 1), static_cast<Eigen::Index>(k - 1)) = v;
        }
    }
    return g;
}

std::optional<std::string> uniformity_issue(const std::vector<double>& axis, const char* name) {
    if (axis.size() < 3) {
        return std::nullopt;
    }
    const double mean = (axis.back() - axis.front()) / static_cast<double>(axis.size() - 1);
    double worst = 0.0;
    for (std::size_t k = 1; k < axis.size(); ++k) {
        worst = std::max(worst, std::abs((axis[k] - axis[k - 1]) - mean) / std::abs(mean));
    }
    if (worst > 0.01) {
        return fmt::format("{} axis spacing deviates from uniform by {:.3g}%", name, 100.0 * worst);
    }
    return std::nullopt;
}

}  // namespace

void JsiGrid::validate() const {
    if (intensity.rows() != static_cast<Eigen::Index>(signal_axis_ghz.size()) ||
        intensity.cols() != static_cast<Eigen::Index>(idler_axis_ghz.size())) {
        throw std::invalid_argument("JSI intensity shape does not match its axes");
    }
    if (intensity.size() == 0) {
        throw std::invalid_argument("JSI grid is empty");
    }
    if (monotone_direction(signal_axis_ghz) == 0 || monotone_direction(idler_axis_ghz) == 0) {
        throw std::invalid_argument("JSI axes must be strictly monotone");
    }
    if (!intensity.allFinite()) {
        throw std::invalid_argument("JSI intensities must be finite");
    }
}

std::string_view to_string(JsiFormat format) { return format == JsiFormat::Long ? "long" : "matrix"; }

JsiFormat parse_jsi_format(std::string_view name) {
    if (name == "long") return JsiFormat::Long;
    if (name == "matrix") return JsiFormat::Matrix;
    throw std::invalid_argument(fmt::format("unknown JSI format '{}' (expected long or matrix)", name));
}

JsiGrid load_jsi(std::istream& in, JsiFormat format) {
    const auto lines = data_lines(in);
    JsiGrid g = format == JsiFormat::Long ? load_long(lines) : load_matrix(lines);
    g.validate();
    return g;
}

JsiGrid load_jsi(const std::filesystem::path& path, JsiFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error(fmt::format("cannot open '{}'", path.string()));
    }
    return load_jsi(in, format);
}

void save_jsi(const JsiGrid& grid, const std::filesystem::path& path, const std::vector<std::string>& comments) {
    grid.validate();
    std::string out;
    for (const auto& c : comments) {
        out += "# " + c + "\n";
    }
    out += "signal_ghz\\idler_ghz";
    for (double i : grid.idler_axis_ghz) {
        out += "," + format_number(i);
    }
    out += '\n';
    for (std::size_t r = 0; r < grid.signal_axis_ghz.size(); ++r) {
        out += format_number(grid.signal_axis_ghz[r]);
        for (Eigen::Index c = 0; c < grid.intensity.cols(); ++c) {
            out += "," + format_number(grid.intensity(static_cast<Eigen::Index>(r), c));
        }
        out += '\n';
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << out) || !file.flush()) {
        throw std::runtime_error(fmt::format("failed writing '{}'", path.string()));
    }
}

JsiEstimate estimate_purity_from_jsi(const JsiGrid& grid, double floor) {
    grid.validate();
    if (!(floor >= 0.0) || !std::isfinite(floor)) {
        throw std::invalid_argument("JSI floor must be a finite nonnegative number");
    }
    JsiEstimate est;
    Eigen::MatrixXd amplitude(grid.intensity.rows(), grid.intensity.cols());
    for (Eigen::Index k = 0; k < amplitude.size(); ++k) {
        const double v = grid.intensity.data()[k];
        if (v < floor || v < 0.0) {
            amplitude.data()[k] = 0.0;
            ++est.clamped_cells;
        } else {
            amplitude.data()[k] = std::sqrt(v);
        }
    }
    if (amplitude.isZero(0.0)) {
        throw std::invalid_argument("JSI is all zero after clamping");
    }
    const auto d = schmidt_decompose(amplitude);
    est.purity = d.purity();
    est.schmidt_coefficients = d.coefficients;
    auto s = uniformity_issue(grid.signal_axis_ghz, "signal");
    auto i = uniformity_issue(grid.idler_axis_ghz, "idler");
    if (s && i) {
        est.warning = *s + "; " + *i;
    } else if (s || i) {
        est.warning = s ? *s : *i;
    }
    return est;
}

}  // namespace ringjsa
