#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ringjsa/jsa.hpp"
#include "ringjsa/schmidt.hpp"
#include "support/oracles.hpp"
#include "support/paper_setup.hpp"

using namespace ringjsa;

namespace {

ComplexSpectrum spikes(const FrequencyGrid& g, const std::vector<std::pair<std::size_t, Complex>>& at) {
    std::vector<Complex> v(g.size(), 0.0);
    for (auto [i, w] : at) {
        v[i] = w;
    }
    return ComplexSpectrum(g, v);
}

}  // namespace

TEST(pump_kernel, single_spike_squares_onto_twice_the_detuning) {
    auto g = FrequencyGrid::make(64, 63.0);
    auto res = ResonatorParams::uniform(4.0);
    const std::size_t i0 = 40;
    auto k = pump_kernel(spikes(g, {{i0, 0.7}}), res);
    ASSERT_EQ(k.size(), 128u);
    EXPECT_DOUBLE_EQ(k.grid().spacing(), g.spacing());
    EXPECT_NEAR(k.grid().point(2 * i0), 2.0 * g.point(i0), 1e-12);

    const Complex f = 0.7 * lorentzian(g.point(i0), res.gamma_pump);
    EXPECT_LT(std::abs(k[2 * i0] - g.spacing() * f * f), 1e-14);
    for (std::size_t m = 0; m < k.size(); ++m) {
        if (m != 2 * i0) {
            EXPECT_LT(std::abs(k[m]), 1e-14);
        }
    }
}

TEST(pump_kernel, two_spikes_give_binomial_weights) {
    auto g = FrequencyGrid::make(64, 63.0);
    auto res = ResonatorParams::uniform(4.0);
    const std::size_t i = 20, j = 63 - i;  // +-d
    auto k = pump_kernel(spikes(g, {{i, 1.0}, {j, 1.0}}), res);
    const double a = std::abs(k[2 * i]);
    const double b = std::abs(k[i + j]);
    const double c = std::abs(k[2 * j]);
    EXPECT_NEAR(k.grid().point(i + j), 0.0, 1e-12);
    EXPECT_NEAR(b / a, 2.0, 1e-12);
    EXPECT_NEAR(c / a, 1.0, 1e-12);
}

TEST(pump_kernel, fft_matches_direct_quadrature) {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> nd;
    auto g = FrequencyGrid::make(256, 40.0, 1.5);
    std::vector<Complex> v(256);
    for (auto& x : v) {
        x = {nd(rng), nd(rng)};
    }
    auto res = ResonatorParams::uniform(3.0);
    auto k = pump_kernel(ComplexSpectrum(g, v), res);

    std::vector<oracle::cd> f(256);
    for (std::size_t i = 0; i < 256; ++i) {
        f[i] = v[i] * oracle::lorentz(g.point(i), 3.0);
    }
    auto direct = oracle::direct_autoconvolution(f, g.spacing());
    double peak = 0.0, err = 0.0;
    for (std::size_t m = 0; m < direct.size(); ++m) {
        peak = std::max(peak, std::abs(direct[m]));
        err = std::max(err, std::abs(direct[m] - k[m]));
    }
    EXPECT_LT(err / peak, 1e-8);
    EXPECT_LT(std::abs(k[511]), 1e-300);
    // Kernel grid is centered on twice the pump center (plus half a step).
    EXPECT_NEAR(k.grid().point(255), 2.0 * 1.5, 1e-12);
}

TEST(sample_kernel, linear_and_cubic_are_exact_on_nodes_and_zero_outside) {
    auto g = FrequencyGrid::make(32, 31.0);
    std::vector<Complex> v(32);
    for (std::size_t i = 0; i < 32; ++i) {
        v[i] = {std::sin(0.3 * static_cast<double>(i)), 0.1 * static_cast<double>(i)};
    }
    ComplexSpectrum s(g, v);
    for (std::size_t i = 0; i < 32; ++i) {
        EXPECT_LT(std::abs(sample_kernel(s, g.point(i), Interpolation::Linear) - v[i]), 1e-12);
        EXPECT_LT(std::abs(sample_kernel(s, g.point(i), Interpolation::Cubic) - v[i]), 1e-12);
    }
    const Complex mid = sample_kernel(s, 0.5 * (g.point(3) + g.point(4)), Interpolation::Linear);
    EXPECT_LT(std::abs(mid - 0.5 * (v[3] + v[4])), 1e-12);
    EXPECT_EQ(sample_kernel(s, g.back() + 5.0, Interpolation::Linear), Complex(0.0, 0.0));
    EXPECT_EQ(sample_kernel(s, g.front() - 5.0, Interpolation::Cubic), Complex(0.0, 0.0));
}

TEST(compute_jsa, broad_flat_pump_gives_separable_state) {
    const double gs = 1.0e9;
    ResonatorParams res{1000.0 * gs, gs, gs};
    auto pulse = PulseParams::from_fwhm(1000.0 * gs);
    JsaOptions opt;
    opt.pump_grid = FrequencyGrid::make(4096, 8000.0 * gs);
    auto grid = FrequencyGrid::make(128, 20.0 * gs);
    auto jsa = compute_jsa(PumpSpec::single(pulse), res, grid, grid, opt);
    EXPECT_GT(purity(jsa), 1.0 - 1e-5);
}

TEST(compute_jsa, normalized_and_exchange_symmetric) {
    auto res = paper::resonator();
    auto grid = default_jsa_grid(res.gamma_signal, 256);
    auto jsa = compute_jsa(paper::triple(), res, grid, grid);
    EXPECT_NEAR(jsa.norm(), 1.0, 1e-9);
    const auto& m = jsa.values();
    EXPECT_LE((m - m.transpose()).cwiseAbs().maxCoeff(), 1e-10 * m.cwiseAbs().maxCoeff());
}

TEST(compute_jsa, workers_do_not_change_the_result) {
    auto res = paper::resonator();
    auto grid = default_jsa_grid(res.gamma_signal, 256);
    JsaOptions one, four;
    four.workers = 4;
    auto a = compute_jsa(paper::best_dual(), res, grid, grid, one);
    auto b = compute_jsa(paper::best_dual(), res, grid, grid, four);
    EXPECT_TRUE(a.values() == b.values());
}

TEST(compute_jsa, rejects_under_resolved_grids) {
    auto res = paper::resonator();
    auto coarse = FrequencyGrid::make(16, 40.0 * res.gamma_signal);
    auto fine = default_jsa_grid(res.gamma_signal, 256);
    EXPECT_THROW(compute_jsa(paper::best_dual(), res, coarse, fine), std::invalid_argument);
    EXPECT_THROW(compute_jsa(paper::best_dual(), res, fine, coarse), std::invalid_argument);
    JsaOptions opt;
    opt.pump_grid = FrequencyGrid::make(64, 8.0 * paper::kPulse.fwhm());
    EXPECT_THROW(compute_jsa(paper::best_dual(), res, fine, fine, opt), std::invalid_argument);
}

TEST(compute_jsa, single_pulse_purity_near_the_ring_limit) {
    auto res = paper::resonator();
    auto grid = default_jsa_grid(res.gamma_signal);
    const double p = purity(compute_jsa(PumpSpec::single(paper::kPulse), res, grid, grid));
    EXPECT_NEAR(p, 0.92, 0.02);
}

TEST(compute_jsa, target_pump_is_nearly_separable) {
    auto res = paper::resonator();
    auto pump_grid = default_pump_grid(PumpSpec::single(paper::kPulse), res);
    auto grid = default_jsa_grid(res.gamma_signal);
    auto target = target_envelope(paper::kPulse, res, pump_grid);
    EXPECT_GE(purity(compute_jsa(target, res, grid, grid)), 0.999);
}

TEST(compute_jsa, matches_direct_quadrature_on_commensurate_grids) {
    auto res = paper::resonator();
    const double gamma = res.gamma_pump;
    const double h = gamma / 16.0;
    JsaOptions opt;
    opt.pump_grid = FrequencyGrid::make(4096, 4095.0 * h);
    auto grid = FrequencyGrid::make(64, 63.0 * 4.0 * h);  // sums land on kernel nodes

    auto jsa = compute_jsa(paper::best_dual(), res, grid, grid, opt);

    oracle::Pump p{paper::kPulse.sigma, {0.55}, {paper::kPi}, {10e-12}};
    Eigen::MatrixXcd direct(64, 64);
    for (Eigen::Index i = 0; i < 64; ++i) {
        for (Eigen::Index j = 0; j < 64; ++j) {
            direct(i, j) = oracle::direct_jsa_entry(p, gamma, gamma, gamma, grid.point(static_cast<std::size_t>(i)),
                                                    grid.point(static_cast<std::size_t>(j)), h / 2.0, 128.0 * gamma);
        }
    }
    direct /= std::sqrt(direct.squaredNorm() * grid.spacing() * grid.spacing());
    const double peak = direct.cwiseAbs().maxCoeff();
    EXPECT_LT((jsa.values() - direct).cwiseAbs().maxCoeff(), 1e-6 * peak);
    EXPECT_NEAR(purity(jsa), oracle::density_matrix_purity(direct), 1e-6);
}

TEST(jsi, unit_peak_phase_blind_and_symmetric) {
    auto res = paper::resonator();
    auto grid = default_jsa_grid(res.gamma_signal, 64, 15.0);
    auto jsa = compute_jsa(paper::best_dual(), res, grid, grid);
    auto i1 = jsi(jsa);
    EXPECT_DOUBLE_EQ(i1.maxCoeff(), 1.0);
    EXPECT_GE(i1.minCoeff(), 0.0);
    EXPECT_LE((i1 - i1.transpose()).cwiseAbs().maxCoeff(), 1e-10);

    JsaMatrix rotated(jsa.signal_grid(), jsa.idler_grid(), jsa.values() * std::polar(1.0, 0.83));
    EXPECT_LE((jsi(rotated) - i1).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(jsi, rank_one_jsa_gives_outer_product) {
    auto g = FrequencyGrid::make(16, 15.0);
    Eigen::VectorXcd u = Eigen::VectorXcd::Random(16), v = Eigen::VectorXcd::Random(16);
    JsaMatrix jsa(g, g, u * v.transpose());
    auto i = jsi(jsa);
    Eigen::MatrixXd outer = u.cwiseAbs2() * v.cwiseAbs2().transpose();
    outer /= outer.maxCoeff();
    EXPECT_LE((i - outer).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(jsa_matrix, invariants) {
    auto g = FrequencyGrid::make(16, 15.0);
    auto h = FrequencyGrid::make(32, 15.0);
    EXPECT_THROW(JsaMatrix(g, h, Eigen::MatrixXcd::Ones(16, 16)), std::invalid_argument);
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Ones(16, 16);
    bad(3, 4) = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(JsaMatrix(g, g, bad), std::invalid_argument);
    JsaMatrix zero(g, g, Eigen::MatrixXcd::Zero(16, 16));
    EXPECT_THROW(zero.normalize(), std::invalid_argument);
}
