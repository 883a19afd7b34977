#include <gtest/gtest.h>

#include <stdexcept>

#include "ringjsa/grid.hpp"
#include "ringjsa/units.hpp"

using namespace ringjsa;

TEST(grid, sixteen_points_unit_spacing) {
    auto g = FrequencyGrid::make(16, 15.0, 0.0);
    EXPECT_DOUBLE_EQ(g.spacing(), 1.0);
    EXPECT_DOUBLE_EQ(g.front(), -7.5);
    EXPECT_DOUBLE_EQ(g.back(), 7.5);
    for (std::size_t i = 1; i < g.size(); ++i) {
        EXPECT_NEAR(g.point(i) - g.point(i - 1), 1.0, 1e-15);
    }
}

TEST(grid, paper_scale_spacing) {
    const double span = kTwoPi * 2e12;
    auto g = FrequencyGrid::make(1024, span, 0.0);
    EXPECT_DOUBLE_EQ(g.spacing(), span / 1023.0);
}

TEST(grid, rejects_bad_sizes_and_spans) {
    EXPECT_THROW(FrequencyGrid::make(15, 1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(FrequencyGrid::make(8, 1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(FrequencyGrid::make(48, 1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(FrequencyGrid::make(16, 0.0, 0.0), std::invalid_argument);
    EXPECT_THROW(FrequencyGrid::make(16, -3.0, 0.0), std::invalid_argument);
}

TEST(grid, center_shifts_points) {
    auto g = FrequencyGrid::make(32, 31.0, 100.0);
    EXPECT_DOUBLE_EQ(g.point(0), 84.5);
    EXPECT_DOUBLE_EQ(g.point(31), 115.5);
}

TEST(grid, conjugate_time_axis_spans_two_pi_over_spacing) {
    auto g = FrequencyGrid::make(64, 63.0 * 2.0, 0.0);
    const double dt = g.time_step();
    EXPECT_NEAR(dt * 64.0, kTwoPi / g.spacing(), 1e-12);
    EXPECT_DOUBLE_EQ(g.time_point(32), 0.0);
    EXPECT_EQ(g.time_points().size(), 64u);
}

TEST(units, conversions_round_trip) {
    EXPECT_NEAR(rad_to_ghz(ghz_to_rad(41.0)), 41.0, 41.0 * 1e-12);
    EXPECT_NEAR(s_to_ps(ps_to_s(20.0)), 20.0, 20.0 * 1e-12);
    EXPECT_NEAR(ghz_to_rad(1.0), 6.283185307179586e9, 1e-3);
    EXPECT_NEAR(kSech2FwhmFactor, 1.762747174039086, 1e-12);
}
