#include "cqed/experiments/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>

#include "cqed/errors.hpp"
#include "cqed/experiments/knee.hpp"
#include "cqed/oracles.hpp"
#include "cqed/parallel.hpp"
#include "cqed/spectra.hpp"

namespace cqed::experiments {
namespace {

std::string fmt(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 10);
    return std::string(buf, res.ptr);
}

std::string fmt_exact(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::vector<std::string> split_lines(const std::string& text)
{
    std::vector<std::string> out;
    std::size_t begin = 0;
    while (begin < text.size()) {
        const auto end = text.find('\n', begin);
        out.push_back(text.substr(begin, end == std::string::npos ? std::string::npos : end - begin));
        if (end == std::string::npos) break;
        begin = end + 1;
    }
    return out;
}

std::string fmt_list(const std::vector<double>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + fmt(values[i]);
    return out.empty() ? "none" : out;
}

std::vector<double> locations(const std::vector<Extremum>& extrema)
{
    std::vector<double> out;
    for (const auto& e : extrema) out.push_back(e.location);
    return out;
}

template <typename Fn>
auto with_context(const std::string& label, Fn&& fn)
{
    try {
        return fn();
    } catch (const SolverError& e) {
        throw SolverError(std::string(e.what()) + " (at " + label + ")");
    }
}

ResultTable start_table(const ScenarioConfig& config, std::vector<std::string> columns)
{
    ResultTable table;
    table.columns = std::move(columns);
    table.provenance.push_back(std::string("tool = ") + kToolVersion);
    for (const auto& line : split_lines(format_config(config))) table.provenance.push_back("config." + line);
    table.provenance.push_back("grid.sweep = " + fmt(config.sweep.start) + " .. " + fmt(config.sweep.stop) +
                               " (" + std::to_string(config.sweep.count) + " points)");
    table.provenance.push_back("grid.spectral_points = " + std::to_string(config.spectral_points));
    table.provenance.push_back("units = GHz (linear frequency)");
    return table;
}

SweepOptions sweep_options(const ScenarioConfig& config, const RunOptions& options)
{
    SweepOptions out;
    out.jobs = options.jobs;
    out.peak.window_kappas = config.window_kappas;
    out.peak.spectral_points = config.spectral_points;
    return out;
}

void place_pump(const ScenarioConfig& config, SystemParams& params)
{
    if (config.pump_at_lower_polariton) {
        params.nu_l = lower_polariton_pump(params, config.polariton_uses_zero_drive);
    }
}

ResultTable run_fig1(const ScenarioConfig& config, const RunOptions& options)
{
    ResultTable table = start_table(config, {"j1", "probe_offset", "delta", "intensity", "baseline", "deviation"});
    const auto offsets = config.sweep.grid();
    for (double j1 : config.series) {
        const std::string label = "j1=" + fmt(j1);
        SystemParams p = config.params;
        p.j1 = j1;
        place_pump(config, p);
        std::vector<double> deltas;
        for (double o : offsets) deltas.push_back(o + p.nu_c - p.nu_l);
        const auto sweep = with_context(label, [&] {
            return probe_sweep(p, deltas, Observable::Intensity, sweep_options(config, options));
        });
        for (std::size_t i = 0; i < offsets.size(); ++i) {
            table.add_row({j1, offsets[i], deltas[i], sweep.y[i], sweep.background, sweep.y[i] - sweep.background});
        }
        std::vector<double> peaks;
        for (const auto& e : peaks_only(sweep.extrema)) peaks.push_back(e.location - p.nu_c + p.nu_l);
        table.provenance.push_back("result.pump_offset[" + label + "] = " + fmt(p.nu_l - p.nu_c));
        table.provenance.push_back("result.peaks[" + label + "] = " + fmt_list(peaks));
    }
    return table;
}

ResultTable run_fig2(const ScenarioConfig& config, const RunOptions& options)
{
    ResultTable table = start_table(
        config, {"j1", "polariton_offset", "probe_offset", "intensity", "baseline", "deviation"});
    const auto offsets = config.sweep.grid();
    for (double j1 : config.series) {
        const std::string label = "j1=" + fmt(j1);
        SystemParams p = config.params;
        p.j1 = j1;
        place_pump(config, p);
        AnalyticParams analytic = AnalyticParams::from(p);
        if (config.polariton_uses_zero_drive) analytic.j1 = 0.0;
        const double omega_plus = linear(polariton_peaks(analytic).omega_plus);
        std::vector<double> deltas;
        for (double o : offsets) deltas.push_back(o + omega_plus - p.nu_l);
        auto opts = sweep_options(config, options);
        opts.reference = omega_plus - p.nu_l;
        const auto sweep = with_context(label, [&] { return probe_sweep(p, deltas, Observable::Intensity, opts); });
        for (std::size_t i = 0; i < offsets.size(); ++i) {
            table.add_row({j1, offsets[i], deltas[i] + p.nu_l - p.nu_c, sweep.y[i], sweep.background,
                           sweep.y[i] - sweep.background});
        }
        std::vector<double> peaks;
        for (const auto& e : peaks_only(sweep.extrema)) peaks.push_back(e.location + p.nu_l - omega_plus);
        const double separation = peaks.size() == 2 ? peaks[1] - peaks[0] : NAN;
        table.provenance.push_back("result.peaks[" + label + "] = " + fmt_list(peaks));
        table.provenance.push_back("result.separation[" + label + "] = " + fmt(separation));
    }
    return table;
}

ResultTable run_fig3(const ScenarioConfig& config, const RunOptions& options)
{
    ResultTable table = start_table(config, {"j1", "pump_offset", "peak_offset", "peak_deviation"});
    const double half = config.window_kappas * config.params.kappa;
    const int count = static_cast<int>(std::lround(2.0 * half / config.probe_step)) + 1;

    // Two-photon resonance with the lower second-manifold polariton, seen
    // from a pump on the lower first-manifold polariton.
    SystemParams start = config.params;
    start.j1 = config.sweep.start;
    place_pump(config, start);
    const auto analytic = AnalyticParams::from(start);
    double previous = linear(jc_eigenvalues(2, analytic).lower) - start.nu_l - start.nu_c;

    std::vector<KneePoint> track;
    for (double j1 : config.sweep.grid()) {
        const std::string label = "j1=" + fmt(j1);
        SystemParams p = config.params;
        p.j1 = j1;
        place_pump(config, p);
        const double to_delta = p.nu_c - p.nu_l;
        std::vector<double> deltas(count);
        for (int k = 0; k < count; ++k) deltas[k] = previous - half + 2.0 * half * k / (count - 1) + to_delta;
        auto opts = sweep_options(config, options);
        opts.reference = previous + to_delta;
        const auto sweep = with_context(label, [&] { return probe_sweep(p, deltas, Observable::Intensity, opts); });

        const auto peaks = peaks_only(sweep.extrema);
        double location = NAN;
        double height = NAN;
        if (!peaks.empty()) {
            const auto nearest = *std::min_element(peaks.begin(), peaks.end(), [&](const auto& a, const auto& b) {
                return std::abs(a.location - *opts.reference) < std::abs(b.location - *opts.reference);
            });
            location = nearest.location - to_delta;
            height = nearest.value;
            previous = location;
            track.push_back({j1, location});
        }
        table.add_row({j1, p.nu_l - p.nu_c, location, height});
    }

    if (track.size() >= 6) {
        if (const auto knee = detect_knee(track)) {
            table.provenance.push_back("result.knee_j1 = " + fmt(knee->location));
            table.provenance.push_back("result.knee_slope_before = " + fmt(knee->slope_before));
            table.provenance.push_back("result.knee_slope_after = " + fmt(knee->slope_after));
            table.provenance.push_back("result.knee_residual = " + fmt(knee->residual));
        } else {
            table.provenance.push_back("result.knee_j1 = none");
        }
    } else {
        table.provenance.push_back("result.knee_j1 = none (fewer than 6 tracked points)");
    }
    return table;
}

ResultTable run_fig5(const ScenarioConfig& config, const RunOptions& options)
{
    ResultTable table = start_table(config, {"j1", "delta", "emission", "emission_baseline", "emission_deviation",
                                             "rho_ee", "rho_ee_deviation", "rho_ee_analytic_deviation"});
    const auto deltas = config.sweep.grid();
    table.provenance.push_back("emission = " + std::string(to_string(config.observable)));
    for (double j1 : config.series) {
        const std::string label = "j1=" + fmt(j1);
        SystemParams p = config.params;
        p.j1 = j1;
        place_pump(config, p);
        const auto opts = sweep_options(config, options);
        const auto emission = with_context(label, [&] { return probe_sweep(p, deltas, config.observable, opts); });
        const auto population =
            with_context(label, [&] { return probe_sweep(p, deltas, Observable::ExcitedPopulation, opts); });
        const auto analytic = AnalyticParams::from(p);
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            const double formula =
                rho_ee_second_order(angular(deltas[i]), analytic) - rho_ee_unprobed(analytic);
            table.add_row({j1, deltas[i], emission.y[i], emission.background, emission.y[i] - emission.background,
                           population.y[i], population.y[i] - population.background, formula});
        }
        table.provenance.push_back("result.emission_dips[" + label + "] = " +
                                   fmt_list(locations(dips_only(emission.extrema))));
        table.provenance.push_back("result.rho_ee_dips[" + label + "] = " +
                                   fmt_list(locations(dips_only(population.extrema))));
    }
    return table;
}

ResultTable run_fig6(const ScenarioConfig& config, const RunOptions& options)
{
    ResultTable table = start_table(
        config, {"g", "detuning", "delta", "emission", "emission_baseline", "emission_deviation"});
    table.provenance.push_back("emission = " + std::string(to_string(config.observable)));
    const auto deltas = config.sweep.grid();
    std::vector<AsymmetryPoint> differences;
    std::vector<RatioPoint> ratios;
    for (double multiple : config.detuning_multiples) {
        for (double g : config.series) {
            SystemParams p = config.params;
            p.g = g;
            const double detuning = multiple * p.kappa;
            p.nu_c = p.nu_d - detuning;
            const std::string label = "g=" + fmt(g) + ",detuning=" + fmt(detuning);
            const auto sweep = with_context(label, [&] {
                return probe_sweep(p, deltas, config.observable, sweep_options(config, options));
            });
            const auto deviation = sweep.deviation();
            for (std::size_t i = 0; i < deltas.size(); ++i) {
                table.add_row({g, detuning, deltas[i], sweep.y[i], sweep.background, deviation[i]});
            }
            try {
                const auto asym = peak_asymmetry(deltas, deviation);
                differences.push_back({g, detuning, asym.difference});
                ratios.push_back({g * g / detuning, asym.excess_ratio});
                table.provenance.push_back("result.peak_difference[" + label + "] = " + fmt(asym.difference));
                table.provenance.push_back("result.excess_ratio[" + label + "] = " + fmt(asym.excess_ratio));
            } catch (const Error& e) {
                table.provenance.push_back("result.peak_difference[" + label + "] = none (" + e.what() + ")");
            }
        }
    }

    double max_difference = 0.0;
    for (const auto& d : differences) max_difference = std::max(max_difference, d.difference);
    double max_ratio = 0.0;
    for (const auto& r : ratios) max_ratio = std::max(max_ratio, std::abs(r.ratio));
    try {
        const auto fit = fit_asymmetry(differences);
        table.provenance.push_back("result.asymmetry_fit.c = " + fmt(fit.c));
        table.provenance.push_back("result.asymmetry_fit.alpha = " + fmt(fit.alpha));
        table.provenance.push_back("result.asymmetry_fit.relative_residual = " +
                                   fmt(max_difference > 0 ? fit.residual / max_difference : 0.0));
    } catch (const Error& e) {
        table.provenance.push_back(std::string("result.asymmetry_fit = failed (") + e.what() + ")");
    }
    try {
        const auto fit = fit_peak_ratio(ratios);
        table.provenance.push_back("result.ratio_fit.alpha = " + fmt(fit.alpha));
        table.provenance.push_back("result.ratio_fit.beta = " + fmt(fit.beta));
        table.provenance.push_back("result.ratio_fit.relative_residual = " +
                                   fmt(max_ratio > 0 ? fit.residual / max_ratio : 0.0));
    } catch (const Error& e) {
        table.provenance.push_back(std::string("result.ratio_fit = failed (") + e.what() + ")");
    }
    return table;
}

ResultTable run_custom(const ScenarioConfig& config, const RunOptions& options)
{
    const std::string& variable = config.sweep.variable;
    ResultTable table = start_table(config, {variable, std::string(to_string(config.observable))});
    const auto grid = config.sweep.grid();
    PeakOptions peak{config.window_kappas, config.spectral_points, true};
    const auto values = parallel_map(grid.size(), options.jobs, [&](std::size_t i) {
        ScenarioConfig point = config;
        if (variable == "probe_offset") {
            place_pump(point, point.params);
            point.params.delta = grid[i] + point.params.nu_c - point.params.nu_l;
        } else {
            apply_setting(point, variable, fmt_exact(grid[i]));
            place_pump(point, point.params);
        }
        return with_context(variable + "=" + fmt(grid[i]),
                            [&] { return evaluate_observable(point.params, config.observable, peak); });
    });
    for (std::size_t i = 0; i < grid.size(); ++i) table.add_row({grid[i], values[i]});
    return table;
}

} // namespace

double lower_polariton_pump(const SystemParams& params, bool zero_drive)
{
    AnalyticParams analytic = AnalyticParams::from(params);
    if (zero_drive) analytic.j1 = 0.0;
    return linear(polariton_peaks(analytic).omega_minus);
}

PeakAsymmetry peak_asymmetry(const std::vector<double>& delta, const std::vector<double>& deviation)
{
    const auto peaks = peaks_only(find_extrema(delta, deviation));
    if (peaks.size() < 2) throw NoSplitting("deviation curve has fewer than two peaks");
    PeakAsymmetry out;
    out.left_height = peaks.front().value;
    out.right_height = peaks.back().value;
    const double larger = std::max(out.left_height, out.right_height);
    const double smaller = std::min(out.left_height, out.right_height);
    out.difference = larger - smaller;
    out.excess_ratio = smaller > 0.0 ? larger / smaller - 1.0 : NAN;
    return out;
}

ResultTable run_scenario(const ScenarioConfig& config, const RunOptions& options)
{
    config.validate();
    switch (config.scenario) {
    case Scenario::Fig1: return run_fig1(config, options);
    case Scenario::Fig2: return run_fig2(config, options);
    case Scenario::Fig3: return run_fig3(config, options);
    case Scenario::Fig5: return run_fig5(config, options);
    case Scenario::Fig6: return run_fig6(config, options);
    case Scenario::Custom: return run_custom(config, options);
    }
    throw ConfigError("scenario: unsupported");
}

} // namespace cqed::experiments
