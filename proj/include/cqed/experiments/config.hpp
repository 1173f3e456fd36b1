// config.hpp: scenario configuration and its flat key/value text form

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cqed/params.hpp"
#include "cqed/spectra.hpp"

namespace cqed::experiments {

enum class Scenario { Fig1, Fig2, Fig3, Fig5, Fig6, Custom };

std::string_view to_string(Scenario scenario);
Scenario scenario_from_string(std::string_view text);

struct SweepSpec {
    std::string variable; // a SystemParams key, or probe_offset
    double start = 0.0;
    double stop = 0.0;
    int count = 2;

    std::vector<double> grid() const;
};

struct ScenarioConfig {
    Scenario scenario = Scenario::Custom;
    SystemParams params;
    SweepSpec sweep;
    std::string output_path;

    Observable observable = Observable::Intensity;
    std::vector<double> series;             // per-curve values (j1 or g, per scenario)
    std::vector<double> detuning_multiples; // fig6: QD-cavity detuning in units of kappa
    bool pump_at_lower_polariton = false;   // place nu_l at omega_- (fig1-3)
    bool polariton_uses_zero_drive = false; // evaluate omega_- at J -> 0 instead of J1
    double window_kappas = 3.0;             // spectral/probe window half-width
    int spectral_points = 601;
    double probe_step = 0.05;               // GHz, inner probe sweeps (fig2, fig3)

    static ScenarioConfig defaults(Scenario scenario);

    // Throws ConfigError naming the offending field.
    void validate() const;
};

// Every key accepted by read_config/apply_setting, in output order.
const std::vector<std::string>& config_keys();

// Applies one `key = value` assignment. Throws ConfigError on unknown keys
// or unparseable values.
void apply_setting(ScenarioConfig& config, std::string_view key, std::string_view value);

std::string format_config(const ScenarioConfig& config);
ScenarioConfig parse_config(std::string_view text);

void write_config(const ScenarioConfig& config, const std::filesystem::path& path);
ScenarioConfig read_config(const std::filesystem::path& path);

} // namespace cqed::experiments
