// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "ringjsa/field.hpp"
#include "ringjsa/fourier.hpp"
#include "ringjsa/io.hpp"
#include "ringjsa/measured.hpp"
#include "ringjsa/schmidt.hpp"
#include "ringjsa/sweep.hpp"
#include "ringjsa/units.hpp"
#include "support/oracles.hpp"

using namespace ringjsa;

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, std::string note) {
        ok = ok && cond;
        notes.push_back((cond ? "" : "!") + std::move(note));
    }
};

std::size_t workers() { return std::max(1u, std::thread::hardware_concurrency()); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const PulseParams kPulse = PulseParams::from_fwhm(ghz_to_rad(41.0));

PumpSpec best_dual() { return PumpSpec::dual(kPulse, 0.55, kPi, 10e-12); }
PumpSpec paper_triple() { return PumpSpec::triple(kPulse, {0.8, kPi}, {0.8, kPi}, 20e-12, 40e-12); }

struct PaperConfig {
    const char* name;
    PumpSpec spec;
};

std::vector<PaperConfig> paper_configs() {
    return {{"single", PumpSpec::single(kPulse)},
            {"dual", best_dual()},
            {"triple", paper_triple()},
            {"quadruple", PumpSpec::cascade(kPulse, {{0.8, kPi}, {0.8, kPi}, {0.5, kPi}}, 20e-12)},
            {"train-cascade n=4", PumpSpec::train_cascade(kPulse, 4, 0.55, 10e-12)}};
}

// Shared across criteria: criteria 2-5 run at the calibrated linewidth.
struct State {
    double gamma = 0.0;
    double dual_purity = 0.0;
    SimulationSettings settings() const { return SimulationSettings::paper_defaults(gamma); }
};

Check calibration(State& st) {
    Check c;
    CalibrationOptions opt;
    opt.workers = workers();
    opt.settings = SimulationSettings::paper_defaults(1.0);
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = calibrate_linewidth(ghz_to_rad(41.0), {0.55, 10e-12, kPi}, ghz_to_rad(0.5), ghz_to_rad(20.0), opt);
    const double elapsed = seconds_since(t0);
    st.gamma = r.gamma;
    st.dual_purity = r.purity;
    c.require(r.purity >= 0.99, fmt::format("gamma* = 2pi*{:.4f} GHz, dual purity {:.5f} (>= 0.99)",
                                            rad_to_ghz(r.gamma), r.purity));
    c.require(elapsed < 120.0, fmt::format("runtime {:.1f} s (< 120 s)", elapsed));
    c.require(r.bracketed, "maximum bracketed inside [0.5, 20] GHz");

    // Independent dense scan around gamma*: nothing nearby may beat it.
    std::vector<double> dense(33);
    const auto logs = linspace(std::log(0.8 * r.gamma), std::log(1.25 * r.gamma), dense.size());
    for (std::size_t k = 0; k < dense.size(); ++k) {
        dense[k] = simulate_purity(best_dual(), SimulationSettings::paper_defaults(std::exp(logs[k])));
    }
    const double best = *std::max_element(dense.begin(), dense.end());
    c.require(r.purity >= best - 1e-6, fmt::format("dense 33-point scan over [0.8, 1.25] gamma* peaks at {:.6f}", best));
    return c;
}

Check single_limit(const State& st) {
    Check c;
    const double p = simulate_purity(PumpSpec::single(kPulse), st.settings());
    c.require(std::abs(p - 0.92) <= 0.02, fmt::format("single purity at gamma* {:.4f} (0.92 +- 0.02)", p));
    // fwhm / gamma from r*/10 to r*: gamma runs from 10 gamma* down to gamma*.
    const auto logs = linspace(std::log(10.0 * st.gamma), std::log(st.gamma), 10);
    std::vector<double> ps;
    for (double lg : logs) {
        ps.push_back(simulate_purity(PumpSpec::single(kPulse), SimulationSettings::paper_defaults(std::exp(lg))));
    }
    bool monotone = true;
    for (std::size_t k = 1; k < ps.size(); ++k) {
        monotone = monotone && ps[k] > ps[k - 1];
    }
    c.require(monotone, fmt::format("purity rises monotonically over fwhm/gamma in [{:.2f}, {:.2f}]: {:.4f} -> {:.4f}",
                                    kPulse.fwhm() / (10.0 * st.gamma), kPulse.fwhm() / st.gamma, ps.front(),
                                    ps.back()));
    return c;
}

Check triple_anchor(const State& st) {
    Check c;
    const double p = simulate_purity(paper_triple(), st.settings());
    c.require(std::abs(p - 0.828) <= 0.05, fmt::format("triple purity {:.4f} (0.828 +- 0.05)", p));
    c.require(p < st.dual_purity, fmt::format("triple {:.4f} < dual {:.5f}", p, st.dual_purity));
    return c;
}

Check heatmap_structure(const State& st) {
    Check c;
    const auto axis = linspace(0.0, 2.0 * kPi, 41);
    const auto t0 = std::chrono::steady_clock::now();
    const auto map = sweep_phase(st.settings(), {0.8, 0.8}, {20e-12, 40e-12}, axis, axis, workers());
    const auto& v = map.values;
    const double n = static_cast<double>(v.size());
    const double high = (v.array() >= 0.95).cast<double>().sum() / n;
    const double low = (v.array() <= 0.93).cast<double>().sum() / n;
    Eigen::Index r = 0, col = 0;
    const double max = v.maxCoeff(&r, &col);
    c.require(map.diagnostics.empty() && v.allFinite(), "all 41x41 cells evaluated");
    c.require(max > 0.95, fmt::format("max purity {:.4f} at phi = ({:.3f}, {:.3f}) (> 0.95)", max,
                                      axis[static_cast<std::size_t>(r)], axis[static_cast<std::size_t>(col)]));
    c.require(high < 0.15, fmt::format("{:.2f}% of cells >= 0.95 (< 15%)", 100.0 * high));
    c.require(low >= 0.70, fmt::format("{:.2f}% of cells <= 0.93 (>= 70%)", 100.0 * low));
    c.notes.push_back(fmt::format("{:.0f} s", seconds_since(t0)));
    return c;
}

Check train_study(const State& st) {
    Check c;
    const std::vector<double> delays{5e-12, 10e-12, 20e-12};
    const auto t = sweep_train(st.settings(), PumpKind::TrainCascade, 0.55, delays, 8, workers());
    for (Eigen::Index d = 0; d < t.purity.rows(); ++d) {
        const double two = t.purity(d, 1);
        const double best_more = t.purity.row(d).tail(6).maxCoeff();
        c.require(best_more <= two, fmt::format("{:.0f} ps: n=2 {:.4f}, best n>2 {:.4f}", s_to_ps(delays[d]), two,
                                                best_more));
    }
    return c;
}

Check oracle_equivalence(const State& st) {
    Check c;
    const auto res = ResonatorParams::uniform(st.gamma);
    const double gamma = st.gamma;
    const double h = gamma / 16.0;
    JsaOptions opt;
    opt.pump_grid = FrequencyGrid::make(4096, 4095.0 * h);
    const auto grid = FrequencyGrid::make(64, 63.0 * 4.0 * h);
    const std::vector<std::pair<const char*, std::pair<PumpSpec, oracle::Pump>>> cases{
        {"dual", {best_dual(), {kPulse.sigma, {0.55}, {kPi}, {10e-12}}}},
        {"triple", {paper_triple(), {kPulse.sigma, {0.8, 0.8}, {kPi, kPi}, {20e-12, 40e-12}}}}};
    for (const auto& [name, pair] : cases) {
        const auto jsa = compute_jsa(pair.first, res, grid, grid, opt);
        Eigen::MatrixXcd direct(64, 64);
        for (Eigen::Index i = 0; i < 64; ++i) {
            for (Eigen::Index j = 0; j < 64; ++j) {
                direct(i, j) = oracle::direct_jsa_entry(pair.second, gamma, gamma, gamma,
                                                        grid.point(static_cast<std::size_t>(i)),
                                                        grid.point(static_cast<std::size_t>(j)), h / 2.0, 128.0 * gamma);
            }
        }
        direct /= std::sqrt(direct.squaredNorm() * grid.spacing() * grid.spacing());
        const double err = (jsa.values() - direct).cwiseAbs().maxCoeff() / direct.cwiseAbs().maxCoeff();
        const double dp = std::abs(purity(jsa) - oracle::density_matrix_purity(direct));
        c.require(err <= 1e-6, fmt::format("{} entrywise {:.2e} of peak", name, err));
        c.require(dp <= 1e-6, fmt::format("{} purity diff {:.2e}", name, dp));
    }
    return c;
}

Check schmidt_oracle() {
    Check c;
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<int> dim(1, 8);
    double worst = 0.0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        const auto m = oracle::random_complex_matrix(rng, dim(rng), dim(rng));
        worst = std::max(worst, std::abs(purity(m) - oracle::density_matrix_purity(m)));
    }
    c.require(worst <= 1e-10, fmt::format("{} trials, max |purity - tr(rho^2)| = {:.2e}", trials, worst));
    return c;
}

Check properties(const State& st) {
    Check c;
    const auto settings = st.settings();
    const auto res = settings.resonator;

    // purity invariances
    std::mt19937_64 rng(7);
    double inv = 0.0;
    for (int t = 0; t < 200; ++t) {
        const auto m = oracle::random_complex_matrix(rng, 1 + t % 8, 1 + (t / 8) % 8);
        const double p = purity(m);
        const std::complex<double> phase = std::polar(1.0, 0.1 * t);
        inv = std::max({inv, std::abs(purity(Eigen::MatrixXcd(m * phase)) - p),
                        std::abs(purity(Eigen::MatrixXcd(m * (0.01 + t))) - p),
                        std::abs(purity(Eigen::MatrixXcd(m.transpose())) - p)});
    }
    const auto triple_jsa = simulate_jsa(paper_triple(), settings, workers());
    const double pt = purity(triple_jsa);
    inv = std::max({inv, std::abs(purity(Eigen::MatrixXcd(triple_jsa.values() * std::polar(1.0, 2.0))) - pt),
                    std::abs(purity(Eigen::MatrixXcd(triple_jsa.values() * 3.7)) - pt),
                    std::abs(purity(Eigen::MatrixXcd(triple_jsa.values().transpose())) - pt)});
    c.require(inv <= 1e-12, fmt::format("phase/scale/transpose invariance {:.1e}", inv));

    // exchange symmetry and grid doubling on every paper configuration
    double sym = 0.0, drift = 0.0;
    std::string worst_drift;
    for (const auto& cfg : paper_configs()) {
        const auto jsa = simulate_jsa(cfg.spec, settings, workers());
        const auto& v = jsa.values();
        sym = std::max(sym, (v - v.transpose()).cwiseAbs().maxCoeff() / v.cwiseAbs().maxCoeff());
        auto fine = settings;
        fine.jsa_points = 2 * settings.jsa_points;
        const double d = std::abs(purity(simulate_jsa(cfg.spec, fine, workers())) - purity(jsa));
        if (d >= drift) {
            drift = d;
            worst_drift = cfg.name;
        }
    }
    c.require(sym <= 1e-10, fmt::format("exchange symmetry {:.1e} of peak", sym));
    c.require(drift < 1e-3, fmt::format("N -> 2N purity drift {:.1e} (worst: {})", drift, worst_drift));

    // Parseval for every transform the library exposes
    double parseval = 0.0;
    for (const auto& cfg : paper_configs()) {
        const auto rep = field_report(cfg.spec, res, default_field_grid(kPulse, res));
        for (const auto* s : {&rep.pump, &rep.spectral}) {
            const auto t = fourier_to_time(*s);
            parseval = std::max(parseval, std::abs(t.energy() - s->energy()) / s->energy());
            const auto back = time_to_freq(t, s->grid());
            parseval = std::max(parseval, std::abs(back.energy() - t.energy()) / t.energy());
        }
    }
    c.require(parseval <= 1e-9, fmt::format("Parseval {:.1e} relative", parseval));

    // sweep determinism
    SweepJob job;
    job.kind = SweepKind::Phase;
    job.settings = settings;
    job.settings.jsa_points = 256;
    job.axis1 = linspace(0.0, 2.0 * kPi, 6);
    job.axis2 = job.axis1;
    job.workers = 1;
    const auto one = format_table(run_sweep_job(job).table);
    job.workers = 8;
    const auto eight = format_table(run_sweep_job(job).table);
    c.require(one == eight, fmt::format("sweep CSV byte-identical for 1 and 8 workers ({} bytes)", one.size()));
    return c;
}

Check sqrt_jsi(const State& st) {
    Check c;
    for (const auto& [name, spec] : {std::pair{"single", PumpSpec::single(kPulse)}, std::pair{"triple", paper_triple()}}) {
        const auto jsa = simulate_jsa(spec, st.settings(), workers());
        JsiGrid g;
        for (std::size_t k = 0; k < jsa.signal_grid().size(); ++k) {
            g.signal_axis_ghz.push_back(rad_to_ghz(jsa.signal_grid().point(k)));
            g.idler_axis_ghz.push_back(rad_to_ghz(jsa.idler_grid().point(k)));
        }
        g.intensity = jsa.values().cwiseAbs2();
        const auto path = std::filesystem::temp_directory_path() / fmt::format("ringjsa_acceptance_{}.csv", name);
        save_jsi(g, path);
        const auto loaded = load_jsi(path, JsiFormat::Matrix);
        std::filesystem::remove(path);
        const double est = estimate_purity_from_jsi(loaded).purity;
        const double direct = purity(Eigen::MatrixXd(jsa.values().cwiseAbs()));
        c.require(std::abs(est - direct) <= 0.01,
                  fmt::format("{}: sqrt(JSI) via file {:.5f} vs |Phi| {:.5f} (complex {:.5f})", name, est, direct,
                              purity(jsa.values())));
    }
    return c;
}

}  // namespace

int main() {
    State st;
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"1 calibration", [&] { return calibration(st); }},
        {"2 single-pulse limit", [&] { return single_limit(st); }},
        {"3 triple-pulse anchor", [&] { return triple_anchor(st); }},
        {"4 phase heatmap structure", [&] { return heatmap_structure(st); }},
        {"5 train study", [&] { return train_study(st); }},
        {"6 JSA oracle equivalence", [&] { return oracle_equivalence(st); }},
        {"7 Schmidt oracle", [] { return schmidt_oracle(); }},
        {"8 property suite", [&] { return properties(st); }},
        {"9 sqrt(JSI) pipeline", [&] { return sqrt_jsi(st); }},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c = run();
        } catch (const std::exception& e) {
            c.require(false, fmt::format("exception: {}", e.what()));
        }
        failures += c.ok ? 0 : 1;
        std::string detail;
        for (const auto& n : c.notes) {
            detail += (detail.empty() ? "" : "; ") + n;
        }
        fmt::print("{} [{}] {} ({:.1f} s)\n", c.ok ? "PASS" : "FAIL", name, detail, seconds_since(t0));
        std::fflush(stdout);
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
    return failures == 0 ? 0 : 1;
}
