#include "ringjsa/config.hpp"

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <regex>
#include <set>
#include <sstream>

#include "ringjsa/units.hpp"

namespace ringjsa {
namespace {

std::string join_problems(const std::vector<std::string>& problems) {
    std::string out = "invalid configuration:";
    for (const auto& p : problems) {
        out += "\n  " + p;
    }
    return out;
}

std::optional<double> parse_angle(const std::string& text) {
    static const std::regex pi_form(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*))?\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, pi_form)) {
        double coef = 1.0;
        const std::string c = m[1].str();
        if (c == "-") {
            coef = -1.0;
        } else if (!c.empty() && c != "+") {
            coef = std::stod(c);
        }
        const double den = m[2].matched ? std::stod(m[2].str()) : 1.0;
        if (den == 0.0) {
            return std::nullopt;
        }
        return coef * std::numbers::pi / den;
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size()) {
            return v;
        }
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

// Missing keys come back as a null node rather than yaml-cpp's invalid node.
YAML::Node child(const YAML::Node& parent, const char* key) {
    if (parent && parent.IsMap()) {
        for (const auto& kv : parent) {
            if (kv.first.Scalar() == key) {
                return kv.second;
            }
        }
    }
    return YAML::Node(YAML::NodeType::Null);
}

// Walks one YAML document, recording problems instead of throwing.
class Reader {
public:
    std::vector<std::string> problems;

    void keys(const YAML::Node& node, const std::string& where, const std::set<std::string>& allowed) {
        if (!node || node.IsNull()) {
            return;
        }
        if (!node.IsMap()) {
            problems.push_back(fmt::format("{}: expected a mapping", where.empty() ? "<root>" : where));
            return;
        }
        for (const auto& kv : node) {
            const auto key = kv.first.as<std::string>();
            if (!allowed.count(key)) {
                problems.push_back(fmt::format("{}: unknown key", where.empty() ? key : where + "." + key));
            }
        }
    }

    template <class T>
    bool scalar(const YAML::Node& parent, const std::string& where, const char* key, T& out) {
        const auto node = child(parent, key);
        if (!node || node.IsNull()) {
            return false;
        }
        try {
            out = node.as<T>();
            return true;
        } catch (const YAML::Exception&) {
            problems.push_back(fmt::format("{}.{}: cannot read '{}' as {}", where, key, dump(node), type_name<T>()));
            return false;
        }
    }

    void number(const YAML::Node& parent, const std::string& where, const char* key, double& out, double lo,
                double hi, bool open_lo = false) {
        double v = out;
        if (!scalar(parent, where, key, v)) {
            return;
        }
        if (!std::isfinite(v) || v < lo || v > hi || (open_lo && v == lo)) {
            problems.push_back(fmt::format("{}.{}: {} outside {}{}, {}]", where, key, v, open_lo ? "(" : "[", lo, hi));
            return;
        }
        out = v;
    }

    void count(const YAML::Node& parent, const std::string& where, const char* key, std::size_t& out,
               std::size_t lo, std::size_t hi) {
        long long v = static_cast<long long>(out);
        if (!scalar(parent, where, key, v)) {
            return;
        }
        if (v < static_cast<long long>(lo) || v > static_cast<long long>(hi)) {
            problems.push_back(fmt::format("{}.{}: {} outside [{}, {}]", where, key, v, lo, hi));
            return;
        }
        out = static_cast<std::size_t>(v);
    }

    void angle(const YAML::Node& node, const std::string& where, double& out) {
        const auto text = node.Scalar();
        auto v = node.IsScalar() ? parse_angle(text) : std::nullopt;
        if (!v || !std::isfinite(*v)) {
            problems.push_back(fmt::format("{}: cannot read '{}' as an angle", where, dump(node)));
            return;
        }
        out = *v;
    }

    // Accepts a scalar or a sequence.
    void list(const YAML::Node& parent, const std::string& where, const char* key, std::vector<double>& out,
              bool angles, double lo, double hi) {
        const auto node = child(parent, key);
        if (!node || node.IsNull()) {
            return;
        }
        std::vector<YAML::Node> items;
        if (node.IsSequence()) {
            for (const auto& n : node) items.push_back(n);
        } else {
            items.push_back(node);
        }
        std::vector<double> values;
        const auto before = problems.size();
        for (std::size_t k = 0; k < items.size(); ++k) {
            const std::string at = fmt::format("{}.{}[{}]", where, key, k);
            double v = 0.0;
            if (angles) {
                angle(items[k], at, v);
            } else {
                try {
                    v = items[k].as<double>();
                } catch (const YAML::Exception&) {
                    problems.push_back(fmt::format("{}: cannot read '{}' as a number", at, dump(items[k])));
                    continue;
                }
            }
            if (!angles && (!std::isfinite(v) || v < lo || v > hi)) {
                problems.push_back(fmt::format("{}: {} outside [{}, {}]", at, v, lo, hi));
            }
            values.push_back(v);
        }
        if (problems.size() == before) {
            out = std::move(values);
        }
    }

    template <class E, class F>
    void choice(const YAML::Node& parent, const std::string& where, const char* key, E& out, F parse) {
        std::string text;
        if (!scalar(parent, where, key, text)) {
            return;
        }
        try {
            out = parse(text);
        } catch (const std::exception& e) {
            problems.push_back(fmt::format("{}.{}: {}", where, key, e.what()));
        }
    }

    bool axis(const YAML::Node& parent, const std::string& where, const char* key, AxisRange& out) {
        const auto node = child(parent, key);
        if (!node || node.IsNull()) {
            return false;
        }
        const std::string at = where + "." + key;
        keys(node, at, {"min", "max", "count"});
        if (!node.IsMap()) {
            return false;
        }
        for (auto [name, target] : {std::pair{"min", &out.min}, std::pair{"max", &out.max}}) {
            if (!child(node, name).IsNull()) {
                angle(child(node, name), at + "." + name, *target);
            }
        }
        count(node, at, "count", out.count, 1, 100000);
        if (out.max < out.min) {
            problems.push_back(fmt::format("{}: max {} below min {}", at, out.max, out.min));
        }
        return true;
    }

private:
    static std::string dump(const YAML::Node& n) {
        if (n.IsScalar()) {
            return n.Scalar();
        }
        YAML::Emitter e;
        e << YAML::Flow << n;
        return e.c_str();
    }

    template <class T>
    static const char* type_name() {
        if constexpr (std::is_same_v<T, double>) {
            return "a number";
        } else if constexpr (std::is_same_v<T, long long>) {
            return "an integer";
        } else {
            return "a string";
        }
    }
};

Interpolation parse_interpolation(const std::string& s) {
    if (s == "linear") return Interpolation::Linear;
    if (s == "cubic") return Interpolation::Cubic;
    throw std::invalid_argument(fmt::format("unknown interpolation '{}' (expected linear or cubic)", s));
}

HeatmapScale parse_scale(const std::string& s) {
    if (s == "minmax") return HeatmapScale::MinMax;
    if (s == "fixed") return HeatmapScale::Fixed;
    throw std::invalid_argument(fmt::format("unknown heatmap scale '{}' (expected minmax or fixed)", s));
}

PumpKind parse_train_kind(const std::string& s) {
    const auto k = parse_pump_kind(s);
    if (k != PumpKind::TrainConstant && k != PumpKind::TrainCascade) {
        throw std::invalid_argument(fmt::format("'{}' is not a train kind (expected train-constant or train-cascade)", s));
    }
    return k;
}

constexpr double kBig = 1e9;

// Stage and delay defaults that depend on the pump kind; explicit keys override them.
void apply_kind_defaults(PumpConfig& pump) {
    const double pi = std::numbers::pi;
    switch (pump.kind) {
        case PumpKind::Dual:
            break;
        case PumpKind::Triple:
            pump.etas = {0.8, 0.8};
            pump.phases = {pi, pi};
            pump.delays_ps = {20.0, 40.0};
            break;
        case PumpKind::Single:
        case PumpKind::Cascade:
            pump.etas.clear();
            pump.phases.clear();
            pump.delays_ps = {20.0};
            break;
        case PumpKind::TrainConstant:
        case PumpKind::TrainCascade:
            pump.etas.clear();
            pump.phases.clear();
            pump.delays_ps = {10.0};
            break;
    }
}

void require_size(std::vector<std::string>& problems, const std::string& key, std::size_t have,
                  std::initializer_list<std::size_t> allowed) {
    for (auto a : allowed) {
        if (have == a) return;
    }
    std::string list;
    for (auto a : allowed) list += (list.empty() ? "" : " or ") + std::to_string(a);
    problems.push_back(fmt::format("{}: has {} entries, expected {} for this pump kind", key, have, list));
}

std::string fmt_list(const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
        out += fmt::format("{}{}", k ? ", " : "", v[k]);
    }
    return out + "]";
}

// Checks that stand alone; they stay meaningful even when other keys failed to parse.
std::vector<std::string> independent_problems(const RunConfig& c) {
    std::vector<std::string> p;
    const auto& r = c.resonator;
    if ((r.gamma_signal_ghz || r.gamma_idler_ghz) && !r.gamma_ghz) {
        p.push_back("resonator.gamma_signal_ghz/gamma_idler_ghz: require resonator.gamma_ghz");
    }
    if (!is_power_of_two(c.grid.n)) {
        p.push_back(fmt::format("grid.n: {} is not a power of two", c.grid.n));
    }
    if (c.grid.pump_n != 0 && !is_power_of_two(c.grid.pump_n)) {
        p.push_back(fmt::format("grid.pump_n: {} is not a power of two (or 0 for automatic)", c.grid.pump_n));
    }
    if (!is_power_of_two(c.grid.field_n)) {
        p.push_back(fmt::format("grid.field_n: {} is not a power of two", c.grid.field_n));
    }
    const auto& s = c.sweep;
    require_size(p, "sweep.delays_ps", s.delays_ps.size(), {2});
    if (s.type == SweepKind::Phase) {
        require_size(p, "sweep.etas", s.etas.size(), {2});
    }
    if (s.type == SweepKind::Eta) {
        require_size(p, "sweep.phases", s.phases.size(), {2});
        for (const auto* a : {&s.axis1, &s.axis2}) {
            if (a->min < 0.0 || a->max > 1.0) {
                p.push_back(fmt::format("sweep.axis{}: eta range [{}, {}] outside [0, 1]", a == &s.axis1 ? 1 : 2,
                                        a->min, a->max));
            }
        }
    }
    if (s.type == SweepKind::Phase) {
        for (const auto* a : {&s.axis1, &s.axis2}) {
            if (a->min < 0.0 || a->max > 2.0 * std::numbers::pi + 1e-12) {
                p.push_back(fmt::format("sweep.axis{}: phase range [{}, {}] outside [0, 2pi]",
                                        a == &s.axis1 ? 1 : 2, a->min, a->max));
            }
        }
    }
    if (c.calibrate.hi_ghz <= c.calibrate.lo_ghz) {
        p.push_back(fmt::format("calibrate.hi_ghz: {} must exceed calibrate.lo_ghz {}", c.calibrate.hi_ghz,
                                c.calibrate.lo_ghz));
    }
    return p;
}

// Pump list lengths and the pump spec itself; run once every key parsed.
std::vector<std::string> pump_problems(const RunConfig& c) {
    std::vector<std::string> p;
    const auto& pump = c.pump;
    const std::size_t m = pump.etas.size();
    switch (pump.kind) {
        case PumpKind::Single:
            break;
        case PumpKind::Dual:
            require_size(p, "pump.stages.eta", m, {1});
            require_size(p, "pump.stages.phase", pump.phases.size(), {1});
            require_size(p, "pump.delay_ps", pump.delays_ps.size(), {1});
            break;
        case PumpKind::Triple:
            require_size(p, "pump.stages.eta", m, {2});
            require_size(p, "pump.stages.phase", pump.phases.size(), {2});
            require_size(p, "pump.delay_ps", pump.delays_ps.size(), {1, 2});
            break;
        case PumpKind::Cascade:
            if (m == 0) {
                p.push_back("pump.stages.eta: cascade needs at least one stage");
            }
            require_size(p, "pump.stages.phase", pump.phases.size(), {m});
            require_size(p, "pump.delay_ps", pump.delays_ps.size(), {1, m});
            break;
        case PumpKind::TrainConstant:
            if (!pump.tail_ratio) {
                p.push_back("pump.tail_ratio: required for train-constant (the amplitude ratio has no default)");
            }
            [[fallthrough]];
        case PumpKind::TrainCascade:
            require_size(p, "pump.delay_ps", pump.delays_ps.size(), {1});
            break;
    }
    if (p.empty()) {
        try {
            pump_spec(pump).validate();
        } catch (const std::exception& e) {
            p.push_back(fmt::format("pump: {}", e.what()));
        }
    }
    return p;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error(join_problems(problems)), problems_(std::move(problems)) {}

RunConfig parse_config_text(const std::string& text) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ConfigError({fmt::format("line {}: {}", e.mark.line + 1, e.msg)});
    }
    RunConfig c;
    Reader r;
    r.keys(root, "", {"pump", "resonator", "grid", "sweep", "calibrate", "measured", "workers"});
    if (!root || root.IsNull() || !root.IsMap()) {
        if (!r.problems.empty()) throw ConfigError(r.problems);
        return c;
    }

    const auto pump = child(root, "pump");
    r.keys(pump, "pump", {"fwhm_ghz", "center_ghz", "kind", "stages", "delay_ps", "n_pulses", "tail_ratio", "train_eta"});
    if (pump.IsMap()) {
        r.number(pump, "pump", "fwhm_ghz", c.pump.fwhm_ghz, 0.0, kBig, true);
        r.number(pump, "pump", "center_ghz", c.pump.center_ghz, -kBig, kBig);
        r.choice(pump, "pump", "kind", c.pump.kind, [](const std::string& s) { return parse_pump_kind(s); });
        apply_kind_defaults(c.pump);
        const auto stages = child(pump, "stages");
        r.keys(stages, "pump.stages", {"eta", "phase"});
        if (stages.IsMap()) {
            r.list(stages, "pump.stages", "eta", c.pump.etas, false, 0.0, 1.0);
            r.list(stages, "pump.stages", "phase", c.pump.phases, true, 0.0, 0.0);
        }
        r.list(pump, "pump", "delay_ps", c.pump.delays_ps, false, 0.0, kBig);
        r.count(pump, "pump", "n_pulses", c.pump.n_pulses, 1, 64);
        double tail = 0.0;
        if (!child(pump, "tail_ratio").IsNull()) {
            const auto before = r.problems.size();
            r.number(pump, "pump", "tail_ratio", tail, 0.0, 1.0);
            if (r.problems.size() == before) c.pump.tail_ratio = tail;
        }
        r.number(pump, "pump", "train_eta", c.pump.train_eta, 0.0, 1.0);
    }

    const auto res = child(root, "resonator");
    r.keys(res, "resonator", {"gamma_ghz", "gamma_signal_ghz", "gamma_idler_ghz"});
    if (res.IsMap()) {
        for (auto [key, target] : {std::pair{"gamma_ghz", &c.resonator.gamma_ghz},
                                   std::pair{"gamma_signal_ghz", &c.resonator.gamma_signal_ghz},
                                   std::pair{"gamma_idler_ghz", &c.resonator.gamma_idler_ghz}}) {
            double v = 0.0;
            const auto before = r.problems.size();
            if (!child(res, key).IsNull()) {
                r.number(res, "resonator", key, v, 0.0, kBig, true);
                if (r.problems.size() == before) *target = v;
            }
        }
    }

    const auto grid = child(root, "grid");
    r.keys(grid, "grid", {"n", "span_factor", "pump_n", "field_n", "interpolation"});
    if (grid.IsMap()) {
        r.count(grid, "grid", "n", c.grid.n, 16, 8192);
        r.number(grid, "grid", "span_factor", c.grid.span_factor, 0.0, 1e4, true);
        r.count(grid, "grid", "pump_n", c.grid.pump_n, 0, std::size_t{1} << 22);
        r.count(grid, "grid", "field_n", c.grid.field_n, 16, std::size_t{1} << 22);
        r.choice(grid, "grid", "interpolation", c.grid.interpolation, parse_interpolation);
    }

    const auto sweep = child(root, "sweep");
    r.keys(sweep, "sweep", {"type", "axis1", "axis2", "etas", "phases", "delays_ps", "train_kind", "train_param",
                            "train_delays_ps", "n_max", "heatmap_scale"});
    if (sweep.IsMap()) {
        r.choice(sweep, "sweep", "type", c.sweep.type, [](const std::string& s) { return parse_sweep_kind(s); });
        if (c.sweep.type == SweepKind::Eta) {
            c.sweep.axis1 = c.sweep.axis2 = AxisRange{0.0, 1.0, 41};
        }
        r.axis(sweep, "sweep", "axis1", c.sweep.axis1);
        r.axis(sweep, "sweep", "axis2", c.sweep.axis2);
        r.list(sweep, "sweep", "etas", c.sweep.etas, false, 0.0, 1.0);
        r.list(sweep, "sweep", "phases", c.sweep.phases, true, 0.0, 0.0);
        r.list(sweep, "sweep", "delays_ps", c.sweep.delays_ps, false, 0.0, kBig);
        r.choice(sweep, "sweep", "train_kind", c.sweep.train_kind, parse_train_kind);
        r.number(sweep, "sweep", "train_param", c.sweep.train_param, 0.0, 1.0);
        r.list(sweep, "sweep", "train_delays_ps", c.sweep.train_delays_ps, false, 0.0, kBig);
        r.count(sweep, "sweep", "n_max", c.sweep.n_max, 2, 64);
        r.choice(sweep, "sweep", "heatmap_scale", c.sweep.heatmap_scale, parse_scale);
    }

    const auto cal = child(root, "calibrate");
    r.keys(cal, "calibrate", {"lo_ghz", "hi_ghz", "eta", "delay_ps", "phase", "scan_points", "log_tolerance"});
    if (cal.IsMap()) {
        r.number(cal, "calibrate", "lo_ghz", c.calibrate.lo_ghz, 0.0, kBig, true);
        r.number(cal, "calibrate", "hi_ghz", c.calibrate.hi_ghz, 0.0, kBig, true);
        r.number(cal, "calibrate", "eta", c.calibrate.eta, 0.0, 1.0);
        r.number(cal, "calibrate", "delay_ps", c.calibrate.delay_ps, 0.0, kBig);
        if (!child(cal, "phase").IsNull()) {
            r.angle(child(cal, "phase"), "calibrate.phase", c.calibrate.phase);
        }
        r.count(cal, "calibrate", "scan_points", c.calibrate.scan_points, 3, 100000);
        r.number(cal, "calibrate", "log_tolerance", c.calibrate.log_tolerance, 0.0, 1.0, true);
    }

    const auto meas = child(root, "measured");
    r.keys(meas, "measured", {"path", "format", "floor"});
    if (meas.IsMap()) {
        r.scalar(meas, "measured", "path", c.measured.path);
        r.choice(meas, "measured", "format", c.measured.format, [](const std::string& s) { return parse_jsi_format(s); });
        r.number(meas, "measured", "floor", c.measured.floor, 0.0, 1e300);
    }
    r.count(root, "", "workers", c.workers, 1, 1024);
    for (auto& p : r.problems) {
        if (p.starts_with(".")) p.erase(0, 1);
    }

    for (auto& p : independent_problems(c)) {
        r.problems.push_back(std::move(p));
    }
    if (r.problems.empty()) {
        r.problems = pump_problems(c);
    }
    if (!r.problems.empty()) {
        throw ConfigError(r.problems);
    }
    return c;
}

RunConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError({fmt::format("cannot open config file '{}'", path.string())});
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

void validate(const RunConfig& config) {
    auto p = independent_problems(config);
    for (auto& q : pump_problems(config)) {
        p.push_back(std::move(q));
    }
    if (!p.empty()) {
        throw ConfigError(std::move(p));
    }
}

PulseParams pulse_params(const PumpConfig& pump) {
    return PulseParams::from_fwhm(ghz_to_rad(pump.fwhm_ghz), ghz_to_rad(pump.center_ghz));
}

PumpSpec pump_spec(const PumpConfig& pump) {
    const auto base = pulse_params(pump);
    std::vector<double> delays;
    for (double d : pump.delays_ps) {
        delays.push_back(ps_to_s(d));
    }
    const double unit = delays.empty() ? 20e-12 : delays.front();
    switch (pump.kind) {
        case PumpKind::Single:
            return PumpSpec::single(base);
        case PumpKind::Dual:
            return PumpSpec::dual(base, pump.etas.at(0), pump.phases.at(0), unit);
        case PumpKind::Triple:
            return PumpSpec::triple(base, {pump.etas.at(0), pump.phases.at(0)}, {pump.etas.at(1), pump.phases.at(1)},
                                    unit, delays.size() > 1 ? delays[1] : 2.0 * unit);
        case PumpKind::Cascade: {
            std::vector<Stage> stages;
            for (std::size_t k = 0; k < pump.etas.size(); ++k) {
                stages.push_back({pump.etas[k], pump.phases.at(k)});
            }
            auto spec = PumpSpec::cascade(base, std::move(stages), unit);
            if (delays.size() > 1) {
                spec.delays = delays;
            }
            return spec;
        }
        case PumpKind::TrainConstant:
            return PumpSpec::train_constant(base, pump.n_pulses, pump.tail_ratio.value_or(0.0), unit);
        case PumpKind::TrainCascade:
            return PumpSpec::train_cascade(base, pump.n_pulses, pump.train_eta, unit);
    }
    throw std::invalid_argument("unknown pump kind");
}

ResonatorParams resonator_params(const ResonatorConfig& resonator) {
    if (!resonator.gamma_ghz) {
        throw std::invalid_argument("resonator.gamma_ghz is not set");
    }
    const double g = ghz_to_rad(*resonator.gamma_ghz);
    ResonatorParams p{g, ghz_to_rad(resonator.gamma_signal_ghz.value_or(*resonator.gamma_ghz)),
                      ghz_to_rad(resonator.gamma_idler_ghz.value_or(*resonator.gamma_ghz))};
    p.validate();
    return p;
}

SimulationSettings simulation_settings(const RunConfig& config, const ResonatorParams& resonator) {
    SimulationSettings s;
    s.pulse = pulse_params(config.pump);
    s.resonator = resonator;
    s.jsa_points = config.grid.n;
    s.span_factor = config.grid.span_factor;
    s.pump_points = config.grid.pump_n;
    s.interpolation = config.grid.interpolation;
    return s;
}

CalibrationOptions calibration_options(const RunConfig& config) {
    CalibrationOptions o;
    o.scan_points = config.calibrate.scan_points;
    o.log_tolerance = config.calibrate.log_tolerance;
    o.workers = config.workers;
    o.settings = simulation_settings(config, ResonatorParams::uniform(1.0));
    return o;
}

SweepJob sweep_job(const RunConfig& config, const ResonatorParams& resonator) {
    const auto& s = config.sweep;
    SweepJob job;
    job.kind = s.type;
    job.settings = simulation_settings(config, resonator);
    job.axis1 = linspace(s.axis1.min, s.axis1.max, s.axis1.count);
    job.axis2 = linspace(s.axis2.min, s.axis2.max, s.axis2.count);
    if (s.etas.size() == 2) job.etas = {s.etas[0], s.etas[1]};
    if (s.phases.size() == 2) job.phases = {s.phases[0], s.phases[1]};
    job.delays = {ps_to_s(s.delays_ps.at(0)), ps_to_s(s.delays_ps.at(1))};
    job.train_kind = s.train_kind;
    job.train_parameter = s.train_param;
    job.train_delays.clear();
    for (double d : s.train_delays_ps) job.train_delays.push_back(ps_to_s(d));
    job.n_max = s.n_max;
    job.workers = config.workers;
    return job;
}

std::vector<std::string> describe(const RunConfig& c) {
    auto opt = [](const std::optional<double>& v, const char* none) {
        return v ? fmt::format("{}", *v) : std::string(none);
    };
    auto axis = [](const AxisRange& a) { return fmt::format("{{min: {}, max: {}, count: {}}}", a.min, a.max, a.count); };
    return {
        fmt::format("pump.fwhm_ghz: {}", c.pump.fwhm_ghz),
        fmt::format("pump.center_ghz: {}", c.pump.center_ghz),
        fmt::format("pump.kind: {}", to_string(c.pump.kind)),
        fmt::format("pump.stages.eta: {}", fmt_list(c.pump.etas)),
        fmt::format("pump.stages.phase: {}", fmt_list(c.pump.phases)),
        fmt::format("pump.delay_ps: {}", fmt_list(c.pump.delays_ps)),
        fmt::format("pump.n_pulses: {}", c.pump.n_pulses),
        fmt::format("pump.tail_ratio: {}", opt(c.pump.tail_ratio, "unset")),
        fmt::format("pump.train_eta: {}", c.pump.train_eta),
        fmt::format("resonator.gamma_ghz: {}", opt(c.resonator.gamma_ghz, "calibrate")),
        fmt::format("resonator.gamma_signal_ghz: {}", opt(c.resonator.gamma_signal_ghz, "gamma_ghz")),
        fmt::format("resonator.gamma_idler_ghz: {}", opt(c.resonator.gamma_idler_ghz, "gamma_ghz")),
        fmt::format("grid.n: {}", c.grid.n),
        fmt::format("grid.span_factor: {}", c.grid.span_factor),
        fmt::format("grid.pump_n: {}", c.grid.pump_n),
        fmt::format("grid.field_n: {}", c.grid.field_n),
        fmt::format("grid.interpolation: {}", c.grid.interpolation == Interpolation::Linear ? "linear" : "cubic"),
        fmt::format("sweep.type: {}", to_string(c.sweep.type)),
        fmt::format("sweep.axis1: {}", axis(c.sweep.axis1)),
        fmt::format("sweep.axis2: {}", axis(c.sweep.axis2)),
        fmt::format("sweep.etas: {}", fmt_list(c.sweep.etas)),
        fmt::format("sweep.phases: {}", fmt_list(c.sweep.phases)),
        fmt::format("sweep.delays_ps: {}", fmt_list(c.sweep.delays_ps)),
        fmt::format("sweep.train_kind: {}", to_string(c.sweep.train_kind)),
        fmt::format("sweep.train_param: {}", c.sweep.train_param),
        fmt::format("sweep.train_delays_ps: {}", fmt_list(c.sweep.train_delays_ps)),
        fmt::format("sweep.n_max: {}", c.sweep.n_max),
        fmt::format("sweep.heatmap_scale: {}", c.sweep.heatmap_scale == HeatmapScale::MinMax ? "minmax" : "fixed"),
        fmt::format("calibrate.lo_ghz: {}", c.calibrate.lo_ghz),
        fmt::format("calibrate.hi_ghz: {}", c.calibrate.hi_ghz),
        fmt::format("calibrate.eta: {}", c.calibrate.eta),
        fmt::format("calibrate.delay_ps: {}", c.calibrate.delay_ps),
        fmt::format("calibrate.phase: {}", c.calibrate.phase),
        fmt::format("calibrate.scan_points: {}", c.calibrate.scan_points),
        fmt::format("calibrate.log_tolerance: {}", c.calibrate.log_tolerance),
        fmt::format("measured.path: {}", c.measured.path.empty() ? "unset" : c.measured.path),
        fmt::format("measured.format: {}", to_string(c.measured.format)),
        fmt::format("measured.floor: {}", c.measured.floor),
    };
}

std::string seed_config_text() {
    return R"(# ringjsa run configuration. Every key is optional; the values below are the defaults.
# Frequencies in GHz, delays in ps, phases in radians ("pi", "pi/2", "1.5pi" also work).

pump:
  fwhm_ghz: 41            # intensity FWHM of the sech^2 base pulse
  center_ghz: 0           # detuning of the pulse center from the pump resonance
  kind: dual              # single | dual | triple | cascade | train-constant | train-cascade
  # Stage and delay defaults follow the kind: triple uses eta [0.8, 0.8], phase [pi, pi],
  # delay_ps [20, 40]; trains use delay_ps [10]; cascade needs explicit stages.
  stages:
    eta: [0.55]           # splitter power ratios: 1 for dual, 2 for triple, n-1 for cascade
    phase: [pi]           # phase of each split-off pulse
  delay_ps: [10]          # one value (delay unit) or one per delayed pulse
  n_pulses: 2             # trains only
  # tail_ratio: 0.5       # train-constant amplitude ratio of pulses 2..n; required for that kind
  train_eta: 0.55         # train-cascade splitter ratio

resonator:
  # gamma_ghz: 1.87       # ring linewidth; when absent it is found by calibration
  # gamma_signal_ghz: 1.87
  # gamma_idler_ghz: 1.87

grid:
  n: 512                  # JSA points per axis (power of two)
  span_factor: 40         # JSA span in signal/idler linewidths
  pump_n: 0               # pump/kernel grid points, 0 = automatic
  field_n: 1024           # points for the pulse and field subcommands
  interpolation: linear   # linear | cubic

sweep:
  type: phase             # phase | eta | train
  axis1: {min: 0, max: 2pi, count: 41}   # phi1 (or eta1, default 0..1)
  axis2: {min: 0, max: 2pi, count: 41}   # phi2 (or eta2, default 0..1)
  etas: [0.8, 0.8]        # fixed splitting ratios for phase sweeps
  phases: [pi, pi]        # fixed phases for eta sweeps
  delays_ps: [20, 40]     # triple-pulse delays for both heatmaps
  train_kind: train-cascade
  train_param: 0.55       # tail_ratio (train-constant) or eta (train-cascade)
  train_delays_ps: [5, 10, 20]
  n_max: 8
  heatmap_scale: minmax   # minmax | fixed (0..1)

calibrate:
  lo_ghz: 0.5
  hi_ghz: 20
  eta: 0.55
  delay_ps: 10
  phase: pi
  scan_points: 64
  log_tolerance: 1.0e-4

measured:
  # path: jsi.csv
  format: matrix          # matrix | long
  floor: 0

workers: 1
)";
}

}  // namespace ringjsa
