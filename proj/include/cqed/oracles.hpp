// oracles.hpp: closed-form results used for validation, pump placement and
// fitting the coupling-induced asymmetry

#pragma once

#include <span>
#include <utility>

#include "cqed/params.hpp"

namespace cqed {

// All frequencies in rad/ns; temperature in kelvin.
struct AnalyticParams {
    double omega_c = 0.0; // reference cavity frequency for absolute results
    double g = 0.0;
    double kappa = 0.0;
    double gamma = 0.0;
    double gamma_d = 0.0;
    double j1 = 0.0;
    double j2 = 0.0;
    double qd_cavity_detuning = 0.0; // omega_d - omega_c
    double temperature = 0.0;

    static AnalyticParams from(const SystemParams& params);
};

struct ManifoldPair {
    double upper;
    double lower;
};

// n omega_c + (D +/- sqrt(4 g^2 n + D^2)) / 2.  Throws InvalidArgument for n < 1.
ManifoldPair jc_eigenvalues(int n, const AnalyticParams& params);

// Unnormalized cavity transmission at drive detuning omega = omega_l - omega_c,
// using J = params.j1 as the drive strength.
double transmission_analytic(double omega, const AnalyticParams& params);

struct PolaritonPeaks {
    double omega_plus;
    double omega_minus;
};

// omega_c +/- sqrt(sqrt(g^2 (g^2 + J^2) + 2 g^2 gamma (gamma + kappa)) - gamma^2).
// Throws NoSplitting when the outer radicand is negative.
PolaritonPeaks polariton_peaks(const AnalyticParams& params);

// Excited-state population of a bichromatically driven bare two-level
// emitter (g = 0), second order in the probe strength.
double rho_ee_second_order(double delta, const AnalyticParams& params);

// J1^2 / (2 J1^2 + gamma (gamma + gamma_d))
double rho_ee_unprobed(const AnalyticParams& params);

// Bose-Einstein occupation at angular frequency |detuning| (rad/ns) and
// temperature (K). Throws InvalidArgument for zero detuning or T <= 0.
double phonon_occupation(double detuning, double temperature);

struct AsymmetryPoint {
    double g;
    double detuning;
    double difference;
};

struct AsymmetryFit {
    double c;
    double alpha;
    double residual; // root-mean-square
};

// Least squares for difference = c g^2 / (alpha + detuning).
AsymmetryFit fit_asymmetry(std::span<const AsymmetryPoint> points);

struct RatioPoint {
    double x; // g^2 / detuning
    double ratio;
};

struct RatioFit {
    double alpha;
    double beta;
    double residual; // root-mean-square
};

double peak_ratio_model(double x, double alpha, double beta);

// Least squares for ratio = 2 alpha x / (1 + beta - alpha x). Only
// alpha / (1 + beta) is identifiable; beta stays at its starting value 0
// unless the data pull it elsewhere.
RatioFit fit_peak_ratio(std::span<const RatioPoint> points);

} // namespace cqed
