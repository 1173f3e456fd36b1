// spectra.hpp: cavity emission spectrum, steady-state observables, probe
// sweeps and extremum extraction

#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cqed/floquet.hpp"
#include "cqed/params.hpp"

namespace cqed {

struct Spectrum {
    std::vector<double> omega;  // rad/ns, relative to the pump
    std::vector<double> values;
    SystemParams params;
    double z_epsilon = 0.0;     // rad/ns actually used
    bool ladders_converged = true;
};

// S(w) = Re tr{a^dag M_0(eps + i w)} with M(0) = a rho_ss.
Spectrum emission_spectrum(const SystemParams& params, std::span<const double> omega_grid,
                           int jobs = 1);

// Same, reusing an already computed steady state.
double emission_at(const SystemParams& params, const Liouvillians& liouvillians,
                   const DensityVector& initial, double omega);

// Time-averaged <a^dag a>.
double cavity_intensity(const SystemParams& params);

// Time-averaged <sigma^dag sigma>.
double excited_population(const SystemParams& params);

enum class ExtremumKind { Peak, Dip };

struct Extremum {
    double location;
    double value;
    ExtremumKind kind;
};

// Interior local maxima and minima, refined by a three-point parabola.
// Plateaus count once; their location is the plateau point nearest
// `reference` (the plateau centre when no reference is given).
std::vector<Extremum> find_extrema(std::span<const double> x, std::span<const double> y,
                                   std::optional<double> reference = std::nullopt);

std::vector<Extremum> peaks_only(const std::vector<Extremum>& extrema);
std::vector<Extremum> dips_only(const std::vector<Extremum>& extrema);

enum class Observable { Intensity, SpectrumPeakNearCavity, ExcitedPopulation };

std::string_view to_string(Observable observable);
Observable observable_from_string(std::string_view text);

struct PeakOptions {
    double window_kappas = 3.0; // search window half-width around the cavity, in kappa
    int spectral_points = 601;  // coarse grid before refinement
    bool refine = true;         // Brent refinement of the selected maximum
};

struct SpectralPeak {
    double omega; // rad/ns relative to the pump
    double value;
};

// Local maximum of the emission spectrum nearest the cavity frequency within
// Dc +/- window_kappas * kappa.
SpectralPeak peak_near_cavity(const SystemParams& params, const PeakOptions& options = {});

struct SweepOptions {
    int jobs = 1;
    PeakOptions peak;
    std::optional<double> reference; // tie-break reference for find_extrema
};

struct SweepResult {
    std::vector<double> x;  // probe detuning delta, linear GHz
    std::vector<double> y;  // observable with the probe on
    Observable observable = Observable::Intensity;
    double background = 0.0; // observable with J2 = 0
    std::vector<Extremum> extrema; // of y - background

    std::vector<double> deviation() const;
};

double evaluate_observable(const SystemParams& params, Observable observable,
                           const PeakOptions& peak = {});

SweepResult probe_sweep(const SystemParams& params, std::span<const double> delta_grid,
                        Observable observable, const SweepOptions& options = {});

} // namespace cqed
