// cqed-sim: command-line driver for the figure scenarios, custom sweeps and
// single-point emission spectra.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cqed/errors.hpp"
#include "cqed/experiments/config.hpp"
#include "cqed/experiments/csv.hpp"
#include "cqed/experiments/scenario.hpp"
#include "cqed/spectra.hpp"

namespace ex = cqed::experiments;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

void apply_overrides(ex::ScenarioConfig& config, const std::vector<std::string>& settings)
{
    for (const auto& s : settings) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw cqed::ConfigError("--set expects key=value, got '" + s + "'");
        ex::apply_setting(config, s.substr(0, eq), s.substr(eq + 1));
    }
}

void emit(const ex::ResultTable& table, const std::string& path)
{
    if (path == "-") {
        std::cout << ex::format_csv(table);
        return;
    }
    ex::write_csv(table, path);
    std::fprintf(stderr, "wrote %zu rows to %s\n", table.rows.size(), path.c_str());
    for (const auto& line : table.provenance) {
        if (line.rfind("result.", 0) == 0) std::fprintf(stderr, "  %s\n", line.c_str());
    }
}

ex::ResultTable spectrum_table(const ex::ScenarioConfig& config, int points, double half_width, int jobs)
{
    const auto& p = config.params;
    const double centre = p.nu_c - p.nu_l;
    std::vector<double> grid(points);
    for (int k = 0; k < points; ++k) {
        grid[k] = cqed::angular(centre - half_width + 2.0 * half_width * k / (points - 1));
    }
    const auto spectrum = cqed::emission_spectrum(p, grid, jobs);

    ex::ResultTable table;
    table.columns = {"omega", "omega_from_cavity", "emission"};
    table.provenance.push_back(std::string("tool = ") + ex::kToolVersion);
    table.provenance.push_back("omega is relative to the pump, linear GHz");
    std::string cfg = ex::format_config(config);
    for (std::size_t b = 0, e; b < cfg.size(); b = e + 1) {
        e = cfg.find('\n', b);
        table.provenance.push_back("config." + cfg.substr(b, e - b));
    }
    table.provenance.push_back("z_epsilon_angular = " + std::to_string(spectrum.z_epsilon));
    if (!spectrum.ladders_converged) table.provenance.push_back("warning = ladder truncation not converged");
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double omega = cqed::linear(grid[k]);
        table.add_row({omega, omega - centre, spectrum.values[k]});
    }
    return table;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bichromatically driven quantum-dot cavity QED simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ex::kToolVersion));

    int jobs = 1;
    std::vector<std::string> settings;
    std::string out;

    std::string config_path;
    auto* run = app.add_subcommand("run", "Run the scenario described by a config file");
    run->add_option("--config", config_path, "Flat key = value config file")->required()->check(CLI::ExistingFile);
    run->add_option("--out", out, "Output CSV path ('-' for stdout); defaults to output_path");

    const std::vector<ex::Scenario> figures = {ex::Scenario::Fig1, ex::Scenario::Fig2, ex::Scenario::Fig3,
                                               ex::Scenario::Fig5, ex::Scenario::Fig6};
    std::vector<CLI::App*> figure_commands;
    for (auto s : figures) {
        auto* cmd = app.add_subcommand(std::string(ex::to_string(s)), "Run the " + std::string(ex::to_string(s)) +
                                                                          " scenario with its default parameters");
        cmd->add_option("--out", out, "Output CSV path ('-' for stdout)");
        figure_commands.push_back(cmd);
    }

    std::string spectrum_config;
    int points = 601;
    double half_width = NAN;
    auto* spectrum = app.add_subcommand("spectrum", "Dump the cavity emission spectrum at one parameter point");
    spectrum->add_option("--config", spectrum_config, "Config file (custom defaults otherwise)")
        ->check(CLI::ExistingFile);
    spectrum->add_option("--points", points, "Spectral grid points")->check(CLI::Range(3, 1000000));
    spectrum->add_option("--half-width", half_width, "Half-width around the cavity in GHz (default window_kappas*kappa)");
    spectrum->add_option("--out", out, "Output CSV path ('-' for stdout)")->default_val("-");

    std::string defaults_name;
    auto* defaults = app.add_subcommand("defaults", "Print the default config of a scenario");
    defaults->add_option("scenario", defaults_name, "fig1, fig2, fig3, fig5, fig6 or custom")->required();

    for (auto* cmd : {run, spectrum}) {
        cmd->add_option("--set", settings, "Override a config key (key=value), repeatable");
        cmd->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber);
    }
    for (auto* cmd : figure_commands) {
        cmd->add_option("--set", settings, "Override a config key (key=value), repeatable");
        cmd->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (defaults->parsed()) {
            std::cout << ex::format_config(ex::ScenarioConfig::defaults(ex::scenario_from_string(defaults_name)));
            return 0;
        }
        if (spectrum->parsed()) {
            auto config = spectrum_config.empty() ? ex::ScenarioConfig::defaults(ex::Scenario::Custom)
                                                  : ex::read_config(spectrum_config);
            apply_overrides(config, settings);
            config.validate();
            if (std::isnan(half_width)) half_width = config.window_kappas * config.params.kappa;
            if (!(half_width > 0.0)) throw cqed::ConfigError("--half-width must be > 0");
            emit(spectrum_table(config, points, half_width, jobs), out);
            return 0;
        }

        ex::ScenarioConfig config;
        if (run->parsed()) {
            config = ex::read_config(config_path);
        } else {
            for (std::size_t i = 0; i < figures.size(); ++i) {
                if (figure_commands[i]->parsed()) config = ex::ScenarioConfig::defaults(figures[i]);
            }
        }
        apply_overrides(config, settings);
        if (!out.empty()) config.output_path = out;
        emit(ex::run_scenario(config, {jobs}), config.output_path);
        return 0;
    } catch (const cqed::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const cqed::InvalidArgument& e) {
        std::fprintf(stderr, "invalid parameters: %s\n", e.what());
        return kExitConfig;
    } catch (const cqed::SolverError& e) {
        std::fprintf(stderr, "solver error: %s\n", e.what());
        return kExitSolver;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
