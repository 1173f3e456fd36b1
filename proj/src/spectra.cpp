#include "cqed/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/tools/minima.hpp>

#include "cqed/errors.hpp"
#include "cqed/parallel.hpp"

namespace cqed {
namespace {

DensityVector regression_initial(const SystemParams& params, const FloquetHarmonics& ss)
{
    const ModeOperators ops(params.hilbert);
    return vectorize(ops.a * unvectorize(ss.time_averaged));
}

double observable_of(const SystemParams& params, const Operator& (*pick)(const ModeOperators&))
{
    const FloquetHarmonics ss = steady_state(params);
    const ModeOperators ops(params.hilbert);
    return expectation(pick(ops), ss.time_averaged).real();
}

} // namespace

Spectrum emission_spectrum(const SystemParams& params, std::span<const double> omega_grid, int jobs)
{
    params.validate();
    const Liouvillians l = build_liouvillians(params);
    const FloquetHarmonics ss = steady_state(params, l);
    const DensityVector initial = regression_initial(params, ss);

    Spectrum out;
    out.omega.assign(omega_grid.begin(), omega_grid.end());
    out.values = parallel_map(omega_grid.size(), jobs,
                              [&](std::size_t i) { return emission_at(params, l, initial, omega_grid[i]); });
    out.params = params;
    out.z_epsilon = params.z_epsilon_angular();
    out.ladders_converged = ss.converged;
    return out;
}

double emission_at(const SystemParams& params, const Liouvillians& l, const DensityVector& initial,
                   double omega)
{
    const Complex z(params.z_epsilon_angular(), omega);
    const Ladders ladders = cf_ladders(l, z, params.delta_angular(), params.cf);
    const DensityVector m0 = rho0_laplace(z, initial, ladders, l);
    const ModeOperators ops(params.hilbert);
    return expectation(ops.a.adjoint(), m0).real();
}

double cavity_intensity(const SystemParams& params)
{
    return observable_of(params, [](const ModeOperators& ops) -> const Operator& { return ops.number; });
}

double excited_population(const SystemParams& params)
{
    return observable_of(params,
                         [](const ModeOperators& ops) -> const Operator& { return ops.excited_projector; });
}

std::string_view to_string(Observable observable)
{
    switch (observable) {
    case Observable::Intensity: return "intensity";
    case Observable::SpectrumPeakNearCavity: return "peak_near_cavity";
    case Observable::ExcitedPopulation: return "rho_ee";
    }
    return "intensity";
}

Observable observable_from_string(std::string_view text)
{
    if (text == "intensity") return Observable::Intensity;
    if (text == "peak_near_cavity") return Observable::SpectrumPeakNearCavity;
    if (text == "rho_ee") return Observable::ExcitedPopulation;
    throw InvalidArgument("unknown observable '" + std::string(text) +
                          "' (expected intensity, peak_near_cavity or rho_ee)");
}

SpectralPeak peak_near_cavity(const SystemParams& params, const PeakOptions& options)
{
    params.validate();
    if (!(params.kappa > 0.0)) throw InvalidArgument("peak_near_cavity needs kappa > 0");
    if (options.spectral_points < 3) throw InvalidArgument("spectral_points must be >= 3");

    const Liouvillians l = build_liouvillians(params);
    const FloquetHarmonics ss = steady_state(params, l);
    const DensityVector initial = regression_initial(params, ss);
    const auto spectrum = [&](double omega) { return emission_at(params, l, initial, omega); };

    const double centre = params.cavity_detuning();
    const double half = options.window_kappas * angular(params.kappa);
    const int count = options.spectral_points;
    std::vector<double> grid(count), values(count);
    for (int k = 0; k < count; ++k) {
        grid[k] = centre - half + (2.0 * half) * k / (count - 1);
        values[k] = spectrum(grid[k]);
    }

    const auto peaks = peaks_only(find_extrema(grid, values, centre));
    if (peaks.empty()) {
        const auto best = std::max_element(values.begin(), values.end()) - values.begin();
        return {grid[best], values[best]};
    }
    const auto nearest = *std::min_element(peaks.begin(), peaks.end(), [&](const auto& a, const auto& b) {
        return std::abs(a.location - centre) < std::abs(b.location - centre);
    });
    if (!options.refine) return {nearest.location, nearest.value};

    // Bracket the selected maximum by its neighbouring grid points.
    const double step = 2.0 * half / (count - 1);
    const auto index = static_cast<long>(std::lround((nearest.location - grid.front()) / step));
    const double lo = grid[std::max<long>(index - 1, 0)];
    const double hi = grid[std::min<long>(index + 1, count - 1)];
    const auto [omega, negated] = boost::math::tools::brent_find_minima(
        [&](double w) { return -spectrum(w); }, lo, hi, 40);
    if (-negated < nearest.value) return {nearest.location, nearest.value};
    return {omega, -negated};
}

double evaluate_observable(const SystemParams& params, Observable observable, const PeakOptions& peak)
{
    switch (observable) {
    case Observable::Intensity: return cavity_intensity(params);
    case Observable::ExcitedPopulation: return excited_population(params);
    case Observable::SpectrumPeakNearCavity: return peak_near_cavity(params, peak).value;
    }
    return 0.0;
}

std::vector<double> SweepResult::deviation() const
{
    std::vector<double> out(y.size());
    std::transform(y.begin(), y.end(), out.begin(), [&](double v) { return v - background; });
    return out;
}

SweepResult probe_sweep(const SystemParams& params, std::span<const double> delta_grid,
                        Observable observable, const SweepOptions& options)
{
    SystemParams unprobed = params;
    unprobed.j2 = 0.0;

    SweepResult out;
    out.observable = observable;
    out.x.assign(delta_grid.begin(), delta_grid.end());
    out.background = evaluate_observable(unprobed, observable, options.peak);
    out.y = parallel_map(delta_grid.size(), options.jobs, [&](std::size_t i) {
        SystemParams p = params;
        p.delta = delta_grid[i];
        return evaluate_observable(p, observable, options.peak);
    });
    const auto dev = out.deviation();
    out.extrema = find_extrema(out.x, dev, options.reference);
    return out;
}

} // namespace cqed
