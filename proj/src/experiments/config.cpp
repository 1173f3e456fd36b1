#include "cqed/experiments/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "cqed/errors.hpp"

namespace cqed::experiments {
namespace {

std::string trim(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = text.find_last_not_of(" \t\r");
    return std::string(text.substr(first, last - first + 1));
}

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view key, std::string_view text)
{
    const std::string s = trim(text);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(v)) {
        throw ConfigError(std::string(key) + ": expected a finite number, got '" + s + "'");
    }
    return v;
}

int parse_int(std::string_view key, std::string_view text)
{
    const std::string s = trim(text);
    int v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) {
        throw ConfigError(std::string(key) + ": expected an integer, got '" + s + "'");
    }
    return v;
}

bool parse_bool(std::string_view key, std::string_view text)
{
    const std::string s = trim(text);
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw ConfigError(std::string(key) + ": expected true or false, got '" + s + "'");
}

std::vector<double> parse_list(std::string_view key, std::string_view text)
{
    std::vector<double> out;
    const std::string s = trim(text);
    if (s.empty()) return out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_double(key, item));
    return out;
}

std::string format_list(const std::vector<double>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += format_double(values[i]);
    }
    return out;
}

struct Field {
    std::string key;
    std::function<std::string(const ScenarioConfig&)> get;
    std::function<void(ScenarioConfig&, std::string_view)> set;
};

Field number(std::string key, double SystemParams::*member)
{
    return {key, [member](const ScenarioConfig& c) { return format_double(c.params.*member); },
            [key, member](ScenarioConfig& c, std::string_view v) { c.params.*member = parse_double(key, v); }};
}

const std::vector<Field>& fields()
{
    static const std::vector<Field> table = [] {
        std::vector<Field> f;
        f.push_back({"scenario", [](const ScenarioConfig& c) { return std::string(to_string(c.scenario)); },
                     [](ScenarioConfig& c, std::string_view v) { c.scenario = scenario_from_string(trim(v)); }});
        f.push_back(number("nu_c", &SystemParams::nu_c));
        f.push_back(number("nu_d", &SystemParams::nu_d));
        f.push_back(number("nu_l", &SystemParams::nu_l));
        f.push_back(number("g", &SystemParams::g));
        f.push_back(number("kappa", &SystemParams::kappa));
        f.push_back(number("gamma", &SystemParams::gamma));
        f.push_back(number("gamma_d", &SystemParams::gamma_d));
        f.push_back(number("gamma_r", &SystemParams::gamma_r));
        f.push_back(number("j1", &SystemParams::j1));
        f.push_back(number("j2", &SystemParams::j2));
        f.push_back(number("delta", &SystemParams::delta));
        f.push_back({"drive_target",
                     [](const ScenarioConfig& c) { return std::string(to_string(c.params.drive_target)); },
                     [](ScenarioConfig& c, std::string_view v) {
                         try {
                             c.params.drive_target = drive_target_from_string(trim(v));
                         } catch (const InvalidArgument& e) {
                             throw ConfigError(std::string("drive_target: ") + e.what());
                         }
                     }});
        f.push_back({"fock_levels", [](const ScenarioConfig& c) { return std::to_string(c.params.hilbert.fock_levels); },
                     [](ScenarioConfig& c, std::string_view v) {
                         c.params.hilbert.fock_levels = parse_int("fock_levels", v);
                     }});
        f.push_back({"n_max", [](const ScenarioConfig& c) { return std::to_string(c.params.cf.n_max); },
                     [](ScenarioConfig& c, std::string_view v) { c.params.cf.n_max = parse_int("n_max", v); }});
        f.push_back({"conv_tol", [](const ScenarioConfig& c) { return format_double(c.params.cf.conv_tol); },
                     [](ScenarioConfig& c, std::string_view v) {
                         c.params.cf.conv_tol = parse_double("conv_tol", v);
                     }});
        f.push_back({"z_epsilon",
                     [](const ScenarioConfig& c) {
                         return c.params.cf.z_epsilon ? format_double(*c.params.cf.z_epsilon) : std::string("auto");
                     },
                     [](ScenarioConfig& c, std::string_view v) {
                         if (trim(v) == "auto") c.params.cf.z_epsilon.reset();
                         else c.params.cf.z_epsilon = parse_double("z_epsilon", v);
                     }});
        f.push_back({"sweep.variable", [](const ScenarioConfig& c) { return c.sweep.variable; },
                     [](ScenarioConfig& c, std::string_view v) { c.sweep.variable = trim(v); }});
        f.push_back({"sweep.start", [](const ScenarioConfig& c) { return format_double(c.sweep.start); },
                     [](ScenarioConfig& c, std::string_view v) { c.sweep.start = parse_double("sweep.start", v); }});
        f.push_back({"sweep.stop", [](const ScenarioConfig& c) { return format_double(c.sweep.stop); },
                     [](ScenarioConfig& c, std::string_view v) { c.sweep.stop = parse_double("sweep.stop", v); }});
        f.push_back({"sweep.count", [](const ScenarioConfig& c) { return std::to_string(c.sweep.count); },
                     [](ScenarioConfig& c, std::string_view v) { c.sweep.count = parse_int("sweep.count", v); }});
        f.push_back({"output_path", [](const ScenarioConfig& c) { return c.output_path; },
                     [](ScenarioConfig& c, std::string_view v) { c.output_path = trim(v); }});
        f.push_back({"observable", [](const ScenarioConfig& c) { return std::string(to_string(c.observable)); },
                     [](ScenarioConfig& c, std::string_view v) {
                         try {
                             c.observable = observable_from_string(trim(v));
                         } catch (const InvalidArgument& e) {
                             throw ConfigError(std::string("observable: ") + e.what());
                         }
                     }});
        f.push_back({"series", [](const ScenarioConfig& c) { return format_list(c.series); },
                     [](ScenarioConfig& c, std::string_view v) { c.series = parse_list("series", v); }});
        f.push_back({"detuning_multiples", [](const ScenarioConfig& c) { return format_list(c.detuning_multiples); },
                     [](ScenarioConfig& c, std::string_view v) {
                         c.detuning_multiples = parse_list("detuning_multiples", v);
                     }});
        f.push_back({"pump_at_lower_polariton",
                     [](const ScenarioConfig& c) { return std::string(c.pump_at_lower_polariton ? "true" : "false"); },
                     [](ScenarioConfig& c, std::string_view v) {
                         c.pump_at_lower_polariton = parse_bool("pump_at_lower_polariton", v);
                     }});
        f.push_back({"polariton_uses_zero_drive",
                     [](const ScenarioConfig& c) { return std::string(c.polariton_uses_zero_drive ? "true" : "false"); },
                     [](ScenarioConfig& c, std::string_view v) {
                         c.polariton_uses_zero_drive = parse_bool("polariton_uses_zero_drive", v);
                     }});
        f.push_back({"window_kappas", [](const ScenarioConfig& c) { return format_double(c.window_kappas); },
                     [](ScenarioConfig& c, std::string_view v) { c.window_kappas = parse_double("window_kappas", v); }});
        f.push_back({"spectral_points", [](const ScenarioConfig& c) { return std::to_string(c.spectral_points); },
                     [](ScenarioConfig& c, std::string_view v) {
                         c.spectral_points = parse_int("spectral_points", v);
                     }});
        f.push_back({"probe_step", [](const ScenarioConfig& c) { return format_double(c.probe_step); },
                     [](ScenarioConfig& c, std::string_view v) { c.probe_step = parse_double("probe_step", v); }});
        return f;
    }();
    return table;
}

bool is_param_key(std::string_view key)
{
    static const std::vector<std::string> keys = {"nu_c", "nu_d",    "nu_l", "g",  "kappa", "gamma",
                                                  "gamma_d", "gamma_r", "j1", "j2", "delta"};
    return std::find(keys.begin(), keys.end(), key) != keys.end();
}

} // namespace

std::string_view to_string(Scenario scenario)
{
    switch (scenario) {
    case Scenario::Fig1: return "fig1";
    case Scenario::Fig2: return "fig2";
    case Scenario::Fig3: return "fig3";
    case Scenario::Fig5: return "fig5";
    case Scenario::Fig6: return "fig6";
    case Scenario::Custom: return "custom";
    }
    return "custom";
}

Scenario scenario_from_string(std::string_view text)
{
    for (auto s : {Scenario::Fig1, Scenario::Fig2, Scenario::Fig3, Scenario::Fig5, Scenario::Fig6, Scenario::Custom}) {
        if (to_string(s) == text) return s;
    }
    throw ConfigError("scenario: unknown value '" + std::string(text) + "'");
}

std::vector<double> SweepSpec::grid() const
{
    std::vector<double> out(static_cast<std::size_t>(std::max(count, 0)));
    for (int i = 0; i < count; ++i) {
        // Endpoints are reproduced exactly.
        out[i] = i == count - 1 ? stop : start + (stop - start) * i / (count - 1);
    }
    return out;
}

ScenarioConfig ScenarioConfig::defaults(Scenario scenario)
{
    ScenarioConfig c;
    c.scenario = scenario;
    auto& p = c.params;

    const auto resonant_cavity_set = [&] {
        p.g = 30.0;
        p.kappa = 3.0;
        p.gamma = 1.0;
        p.gamma_d = 1.0;
        p.gamma_r = 0.0;
        p.j2 = 0.01;
        p.drive_target = DriveTarget::Cavity;
        c.pump_at_lower_polariton = true;
        c.observable = Observable::Intensity;
    };
    const auto off_resonant_set = [&] {
        p.kappa = 17.0;
        p.gamma = 1.0;
        p.gamma_d = 3.0;
        p.gamma_r = 0.1;
        p.j2 = 0.35;
        p.nu_c = -8.0 * p.kappa;
        p.drive_target = DriveTarget::QD;
        c.observable = Observable::SpectrumPeakNearCavity;
        c.spectral_points = 61;
    };

    switch (scenario) {
    case Scenario::Fig1:
        resonant_cavity_set();
        c.series = {0.1, 0.5, 1.0, 2.0, 3.0};
        c.sweep = {"probe_offset", -50.0, 50.0, 2001};
        c.output_path = "fig1.csv";
        break;
    case Scenario::Fig2:
        resonant_cavity_set();
        c.series = {0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0, 2.25, 2.5, 2.75, 3.0};
        c.sweep = {"polariton_offset", -6.0, 6.0, 241};
        c.output_path = "fig2.csv";
        break;
    case Scenario::Fig3:
        resonant_cavity_set();
        p.hilbert.fock_levels = 5;
        c.sweep = {"j1", 1.0, 8.0, 15};
        c.window_kappas = 1.0;
        c.output_path = "fig3.csv";
        break;
    case Scenario::Fig5:
        off_resonant_set();
        p.g = 0.0;
        c.series = {0.25, 1.0, 1.75, 2.5};
        c.sweep = {"delta", -10.0, 10.0, 201};
        c.output_path = "fig5.csv";
        break;
    case Scenario::Fig6:
        off_resonant_set();
        p.j1 = 1.75;
        c.series = {1.0, 2.0, 3.0, 4.0, 5.0};
        c.detuning_multiples = {4.0, 8.0, 12.0};
        c.sweep = {"delta", -9.0, 9.0, 73};
        c.output_path = "fig6.csv";
        break;
    case Scenario::Custom:
        p.g = 30.0;
        p.kappa = 3.0;
        p.gamma = 1.0;
        p.gamma_d = 1.0;
        p.j1 = 0.1;
        p.j2 = 0.01;
        p.drive_target = DriveTarget::Cavity;
        c.sweep = {"delta", -50.0, 50.0, 201};
        c.output_path = "custom.csv";
        break;
    }
    return c;
}

void ScenarioConfig::validate() const
{
    try {
        params.validate_structure();
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    }
    if (!(params.kappa > 0.0 || params.gamma > 0.0)) {
        throw ConfigError("kappa, gamma: at least one must be > 0");
    }
    if (sweep.count < 2) throw ConfigError("sweep.count: must be >= 2");
    if (!(sweep.start < sweep.stop)) throw ConfigError("sweep.start: must be < sweep.stop");

    std::vector<std::string> allowed;
    switch (scenario) {
    case Scenario::Fig1: allowed = {"probe_offset"}; break;
    case Scenario::Fig2: allowed = {"polariton_offset"}; break;
    case Scenario::Fig3: allowed = {"j1"}; break;
    case Scenario::Fig5:
    case Scenario::Fig6: allowed = {"delta"}; break;
    case Scenario::Custom: break;
    }
    if (scenario == Scenario::Custom) {
        if (!is_param_key(sweep.variable) && sweep.variable != "probe_offset") {
            throw ConfigError("sweep.variable: '" + sweep.variable + "' is not a SystemParams field");
        }
    } else if (std::find(allowed.begin(), allowed.end(), sweep.variable) == allowed.end()) {
        throw ConfigError("sweep.variable: " + std::string(to_string(scenario)) + " sweeps " + allowed.front());
    }

    const bool needs_series = scenario == Scenario::Fig1 || scenario == Scenario::Fig2 ||
                              scenario == Scenario::Fig5 || scenario == Scenario::Fig6;
    if (needs_series && series.empty()) throw ConfigError("series: must not be empty");
    if (scenario == Scenario::Fig6 && detuning_multiples.empty()) {
        throw ConfigError("detuning_multiples: must not be empty");
    }
    if (!(window_kappas > 0.0)) throw ConfigError("window_kappas: must be > 0");
    if (spectral_points < 5) throw ConfigError("spectral_points: must be >= 5");
    if (!(probe_step > 0.0)) throw ConfigError("probe_step: must be > 0");
}

const std::vector<std::string>& config_keys()
{
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& f : fields()) k.push_back(f.key);
        return k;
    }();
    return keys;
}

void apply_setting(ScenarioConfig& config, std::string_view key, std::string_view value)
{
    const std::string k = trim(key);
    for (const auto& f : fields()) {
        if (f.key == k) {
            f.set(config, value);
            return;
        }
    }
    throw ConfigError("unknown key '" + k + "'");
}

std::string format_config(const ScenarioConfig& config)
{
    std::string out;
    for (const auto& f : fields()) out += f.key + " = " + f.get(config) + "\n";
    return out;
}

ScenarioConfig parse_config(std::string_view text)
{
    std::vector<std::pair<std::string, std::string>> settings;
    std::string scenario_name = "custom";
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trim(line.substr(0, line.find('#')));
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        std::string key = trim(std::string_view(body).substr(0, eq));
        std::string value = trim(std::string_view(body).substr(eq + 1));
        if (key == "scenario") scenario_name = value;
        settings.emplace_back(std::move(key), std::move(value));
    }
    // The scenario picks the defaults; every other key overrides them.
    ScenarioConfig config = ScenarioConfig::defaults(scenario_from_string(scenario_name));
    for (const auto& [key, value] : settings) apply_setting(config, key, value);
    return config;
}

void write_config(const ScenarioConfig& config, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << format_config(config);
    if (!out) throw Error("failed writing " + path.string());
}

ScenarioConfig read_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

} // namespace cqed::experiments
