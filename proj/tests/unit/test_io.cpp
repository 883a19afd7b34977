#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "ringjsa/io.hpp"

using namespace ringjsa;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / ("ringjsa_io_" + name); }

}  // namespace

TEST(format_number, ten_significant_digits) {
    EXPECT_EQ(format_number(2.0), "2");
    EXPECT_EQ(format_number(1.0 / 3.0), "0.3333333333");
    EXPECT_EQ(format_number(1.5e-20), "1.5e-20");
    EXPECT_EQ(format_number(std::numeric_limits<double>::quiet_NaN()), "nan");
}

TEST(write_table, empty_table_is_header_only) {
    Table t{{"a", "b"}, {}};
    EXPECT_EQ(format_table(t), "# a,b\n");
    EXPECT_EQ(format_table(t, {"k: v", ""}), "# k: v\n#\n# a,b\n");
}

TEST(write_table, ragged_rows_are_rejected) {
    Table t{{"a", "b"}, {{1.0}}};
    EXPECT_THROW(format_table(t), std::invalid_argument);
}

TEST(write_table, round_trip_and_determinism) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> mant(1.0, 10.0);
    std::uniform_int_distribution<int> expo(-30, 30);
    Table t{{"x", "y", "z"}, {}};
    for (int r = 0; r < 200; ++r) {
        std::vector<double> row;
        for (int c = 0; c < 3; ++c) {
            row.push_back((c == 1 ? -1.0 : 1.0) * mant(rng) * std::pow(10.0, expo(rng)));
        }
        t.rows.push_back(row);
    }
    t.rows.push_back({0.0, std::numeric_limits<double>::quiet_NaN(), 1.0});
    const auto p = scratch("table.csv");
    write_table(t, p, {"version: test", "seed: 11"});
    const auto first = slurp(p);
    write_table(t, p, {"version: test", "seed: 11"});
    EXPECT_EQ(slurp(p), first);
    EXPECT_EQ(first.find('\r'), std::string::npos);

    auto back = read_table(p);
    fs::remove(p);
    EXPECT_EQ(back.table.columns, t.columns);
    EXPECT_EQ(back.comments, (std::vector<std::string>{"version: test", "seed: 11"}));
    ASSERT_EQ(back.table.rows.size(), t.rows.size());
    for (std::size_t r = 0; r + 1 < t.rows.size(); ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            EXPECT_LE(std::abs(back.table.rows[r][c] - t.rows[r][c]), 1e-9 * std::abs(t.rows[r][c]));
        }
    }
    EXPECT_TRUE(std::isnan(back.table.rows.back()[1]));
}

TEST(read_table, reports_bad_lines) {
    const auto p = scratch("bad.csv");
    std::ofstream(p) << "# a,b\n1,2\n3\n";
    try {
        read_table(p);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    fs::remove(p);
}

TEST(heatmap, constant_matrix_has_equal_pixels) {
    auto lv = heatmap_levels(Eigen::MatrixXd::Constant(3, 4, 0.7), HeatmapScale::MinMax);
    EXPECT_EQ(lv.minCoeff(), lv.maxCoeff());
}

TEST(heatmap, fixed_scale_two_by_two) {
    Eigen::MatrixXd m(2, 2);
    m << 0, 1, 1, 0;
    Eigen::MatrixXi expect(2, 2);
    expect << 0, 255, 255, 0;
    EXPECT_EQ(heatmap_levels(m, HeatmapScale::Fixed), expect);
}

TEST(heatmap, pgm_layout_nan_count_and_sibling_csv) {
    Eigen::MatrixXd m(2, 3);
    m << 0.1, 0.2, std::numeric_limits<double>::quiet_NaN(), 0.4, 0.9, 0.5;
    const auto p = scratch("map.pgm");
    auto info = write_heatmap_pgm(m, p, HeatmapScale::MinMax, {"kind: test"});
    EXPECT_EQ(info.nan_cells, 1u);
    EXPECT_DOUBLE_EQ(info.low, 0.1);
    EXPECT_DOUBLE_EQ(info.high, 0.9);

    std::istringstream pgm(slurp(p));
    std::string magic, line;
    pgm >> magic;
    EXPECT_EQ(magic, "P2");
    std::getline(pgm, line);
    while (pgm.peek() == '#') {
        std::getline(pgm, line);
    }
    int w, h, maxv;
    pgm >> w >> h >> maxv;
    EXPECT_EQ(w, 3);
    EXPECT_EQ(h, 2);
    EXPECT_EQ(maxv, 255);
    std::vector<int> px(6);
    for (auto& v : px) pgm >> v;
    EXPECT_EQ(px, (std::vector<int>{0, 32, 0, 96, 255, 128}));  // row 0 first, argmax at (1,1)

    auto csv = read_table(info.csv_path);
    EXPECT_EQ(csv.table.rows.size(), 6u);
    EXPECT_DOUBLE_EQ(csv.table.rows[4][2], 0.9);
    fs::remove(p);
    fs::remove(info.csv_path);
}
