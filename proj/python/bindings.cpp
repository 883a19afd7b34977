#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "ringjsa/config.hpp"
#include "ringjsa/field.hpp"
#include "ringjsa/fourier.hpp"
#include "ringjsa/jsa.hpp"
#include "ringjsa/measured.hpp"
#include "ringjsa/schmidt.hpp"
#include "ringjsa/sweep.hpp"
#include "ringjsa/units.hpp"
#include "ringjsa/version.hpp"

namespace py = pybind11;
using namespace ringjsa;

namespace {

std::vector<Complex> to_vector(const ComplexSpectrum& s) { return {s.values().begin(), s.values().end()}; }

py::dict spectrum_dict(const ComplexSpectrum& s) {
    py::dict d;
    d["omega"] = s.grid().points();
    d["values"] = to_vector(s);
    return d;
}

py::dict series_dict(const TimeSeries& t) {
    py::dict d;
    d["t"] = t.times;
    d["values"] = t.values;
    return d;
}

py::dict jsa_dict(const JsaMatrix& jsa) {
    py::dict d;
    d["signal"] = jsa.signal_grid().points();
    d["idler"] = jsa.idler_grid().points();
    d["values"] = jsa.values();
    return d;
}

}  // namespace

PYBIND11_MODULE(_ringjsa, m) {
    m.doc() = "Spectral purity of ring-resonator photon pairs pumped by shaped pulses. "
              "Frequencies are angular detunings in rad/s, times in seconds.";
    m.attr("__version__") = kVersion;

    m.def("ghz_to_rad", &ghz_to_rad);
    m.def("rad_to_ghz", &rad_to_ghz);
    m.def("ps_to_s", &ps_to_s);
    m.def("s_to_ps", &s_to_ps);

    py::class_<FrequencyGrid>(m, "FrequencyGrid")
        .def_static("make", &FrequencyGrid::make, py::arg("n"), py::arg("span"), py::arg("center") = 0.0)
        .def_property_readonly("size", &FrequencyGrid::size)
        .def_property_readonly("span", &FrequencyGrid::span)
        .def_property_readonly("center", &FrequencyGrid::center)
        .def_property_readonly("spacing", &FrequencyGrid::spacing)
        .def_property_readonly("time_step", &FrequencyGrid::time_step)
        .def("points", &FrequencyGrid::points)
        .def("time_points", &FrequencyGrid::time_points);

    py::class_<PulseParams>(m, "PulseParams")
        .def(py::init<>())
        .def_static("from_fwhm", &PulseParams::from_fwhm, py::arg("fwhm"), py::arg("center_detuning") = 0.0)
        .def_readwrite("sigma", &PulseParams::sigma)
        .def_readwrite("center_detuning", &PulseParams::center_detuning)
        .def("fwhm", &PulseParams::fwhm);

    py::class_<ResonatorParams>(m, "ResonatorParams")
        .def(py::init<double, double, double>(), py::arg("gamma_pump"), py::arg("gamma_signal"),
             py::arg("gamma_idler"))
        .def_static("uniform", &ResonatorParams::uniform, py::arg("gamma"))
        .def_readwrite("gamma_pump", &ResonatorParams::gamma_pump)
        .def_readwrite("gamma_signal", &ResonatorParams::gamma_signal)
        .def_readwrite("gamma_idler", &ResonatorParams::gamma_idler);

    py::enum_<PumpKind>(m, "PumpKind")
        .value("single", PumpKind::Single)
        .value("dual", PumpKind::Dual)
        .value("triple", PumpKind::Triple)
        .value("cascade", PumpKind::Cascade)
        .value("train_constant", PumpKind::TrainConstant)
        .value("train_cascade", PumpKind::TrainCascade);

    py::class_<Stage>(m, "Stage")
        .def(py::init<double, double>(), py::arg("eta"), py::arg("phase"))
        .def_readwrite("eta", &Stage::eta)
        .def_readwrite("phase", &Stage::phase);

    py::class_<PumpSpec>(m, "PumpSpec")
        .def_static("single", &PumpSpec::single, py::arg("base"))
        .def_static("dual", &PumpSpec::dual, py::arg("base"), py::arg("eta"), py::arg("phase"), py::arg("delay"))
        .def_static("triple", &PumpSpec::triple, py::arg("base"), py::arg("first"), py::arg("second"),
                    py::arg("delay1"), py::arg("delay2"))
        .def_static("cascade", &PumpSpec::cascade, py::arg("base"), py::arg("stages"), py::arg("delay_unit"))
        .def_static("train_constant", &PumpSpec::train_constant, py::arg("base"), py::arg("n"),
                    py::arg("tail_ratio"), py::arg("delay_unit"))
        .def_static("train_cascade", &PumpSpec::train_cascade, py::arg("base"), py::arg("n"), py::arg("eta"),
                    py::arg("delay_unit"))
        .def_readonly("kind", &PumpSpec::kind)
        .def_readonly("base", &PumpSpec::base)
        .def("pulse_count", &PumpSpec::pulse_count)
        .def("pulses", [](const PumpSpec& s) {
            py::list out;
            for (const auto& p : pulse_sequence(s)) {
                out.append(py::make_tuple(p.amplitude, p.delay, p.phase));
            }
            return out;
        }, "List of (amplitude, delay, phase) per pulse.");

    m.def("pump_envelope", [](const PumpSpec& s, const FrequencyGrid& g) { return spectrum_dict(build_envelope(s, g)); },
          py::arg("spec"), py::arg("grid"), "Pump spectrum alpha(omega) on the grid: {'omega', 'values'}.");
    m.def("to_time", [](const FrequencyGrid& g, const std::vector<Complex>& v) {
        return series_dict(fourier_to_time(ComplexSpectrum(g, v)));
    }, py::arg("grid"), py::arg("values"), "Unitary inverse Fourier transform: {'t', 'values'}.");
    m.def("field", [](const PumpSpec& s, const ResonatorParams& r, std::optional<FrequencyGrid> g) {
        const auto rep = field_report(s, r, g ? *g : default_field_grid(s.base, r));
        py::dict d;
        d["pump"] = spectrum_dict(rep.pump);
        d["spectral"] = spectrum_dict(rep.spectral);
        d["temporal"] = series_dict(rep.temporal);
        return d;
    }, py::arg("spec"), py::arg("resonator"), py::arg("grid") = py::none());

    m.def("jsa", [](const PumpSpec& s, const ResonatorParams& r, std::size_t n, double span_factor,
                    std::size_t workers) {
        SimulationSettings settings;
        settings.pulse = s.base;
        settings.resonator = r;
        settings.jsa_points = n;
        settings.span_factor = span_factor;
        py::gil_scoped_release release;
        auto jsa = simulate_jsa(s, settings, workers);
        py::gil_scoped_acquire acquire;
        return jsa_dict(jsa);
    }, py::arg("spec"), py::arg("resonator"), py::arg("n") = 512, py::arg("span_factor") = 40.0,
       py::arg("workers") = 1, "Normalized JSA: {'signal', 'idler', 'values'} (rows follow the signal axis).");

    m.def("purity", [](const Eigen::MatrixXcd& a) { return purity(a); }, py::arg("matrix"));
    m.def("schmidt_coefficients", [](const Eigen::MatrixXcd& a) { return schmidt_decompose(a).coefficients; },
          py::arg("matrix"));

    m.def("calibrate_linewidth", [](double fwhm, double eta, double delay, double phase, double lo, double hi,
                                    std::size_t scan_points, std::size_t workers) {
        CalibrationOptions o;
        o.scan_points = scan_points;
        o.workers = workers;
        o.settings = SimulationSettings::paper_defaults(1.0);
        CalibrationResult r;
        {
            py::gil_scoped_release release;
            r = calibrate_linewidth(fwhm, {eta, delay, phase}, lo, hi, o);
        }
        py::dict d;
        d["gamma"] = r.gamma;
        d["purity"] = r.purity;
        d["bracketed"] = r.bracketed;
        d["warning"] = r.warning;
        d["scan_gammas"] = r.scan_gammas;
        d["scan_purities"] = r.scan_purities;
        return d;
    }, py::arg("fwhm"), py::arg("eta") = 0.55, py::arg("delay") = 10e-12, py::arg("phase") = 3.141592653589793,
       py::arg("lo") = ghz_to_rad(0.5), py::arg("hi") = ghz_to_rad(20.0), py::arg("scan_points") = 64,
       py::arg("workers") = 1);

    m.def("sweep_phase", [](const PulseParams& pulse, const ResonatorParams& r, std::pair<double, double> etas,
                            std::pair<double, double> delays, const std::vector<double>& phi1,
                            const std::vector<double>& phi2, std::size_t n, std::size_t workers) {
        SimulationSettings s;
        s.pulse = pulse;
        s.resonator = r;
        s.jsa_points = n;
        py::gil_scoped_release release;
        return sweep_phase(s, etas, delays, phi1, phi2, workers).values;
    }, py::arg("pulse"), py::arg("resonator"), py::arg("etas"), py::arg("delays"), py::arg("phi1"), py::arg("phi2"),
       py::arg("n") = 512, py::arg("workers") = 1, "Purity matrix (phi1 rows, phi2 columns); NaN marks failed cells.");

    m.def("sweep_eta", [](const PulseParams& pulse, const ResonatorParams& r, std::pair<double, double> delays,
                          std::pair<double, double> phases, const std::vector<double>& eta1,
                          const std::vector<double>& eta2, std::size_t n, std::size_t workers) {
        SimulationSettings s;
        s.pulse = pulse;
        s.resonator = r;
        s.jsa_points = n;
        py::gil_scoped_release release;
        return sweep_eta(s, delays, phases, eta1, eta2, workers).values;
    }, py::arg("pulse"), py::arg("resonator"), py::arg("delays"), py::arg("phases"), py::arg("eta1"),
       py::arg("eta2"), py::arg("n") = 512, py::arg("workers") = 1);

    m.def("estimate_purity_from_jsi", [](const std::vector<double>& signal_ghz, const std::vector<double>& idler_ghz,
                                         const Eigen::MatrixXd& intensity, double floor) {
        const auto e = estimate_purity_from_jsi(JsiGrid{signal_ghz, idler_ghz, intensity}, floor);
        py::dict d;
        d["purity"] = e.purity;
        d["schmidt_coefficients"] = e.schmidt_coefficients;
        d["phase_blind"] = e.phase_blind;
        d["warning"] = e.warning;
        return d;
    }, py::arg("signal_ghz"), py::arg("idler_ghz"), py::arg("intensity"), py::arg("floor") = 0.0);

    m.def("load_jsi", [](const std::filesystem::path& path, const std::string& format) {
        const auto g = load_jsi(path, parse_jsi_format(format));
        return py::make_tuple(g.signal_axis_ghz, g.idler_axis_ghz, g.intensity);
    }, py::arg("path"), py::arg("format") = "matrix", "Returns (signal_ghz, idler_ghz, intensity).");

    m.def("seed_config", &seed_config_text);
    m.def("resolve_config", [](const std::string& text) { return describe(parse_config_text(text)); },
          py::arg("yaml_text"), "Validated configuration as 'key: value' lines; raises ValueError on problems.");

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
}
