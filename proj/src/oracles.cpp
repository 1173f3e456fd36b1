#include "cqed/oracles.hpp"

#include <cmath>
#include <string>

#include "cqed/errors.hpp"

namespace cqed {
namespace {

constexpr double kHbar = 1.054571817e-34;     // J s
constexpr double kBoltzmann = 1.380649e-23;   // J / K

} // namespace

AnalyticParams AnalyticParams::from(const SystemParams& params)
{
    AnalyticParams out;
    out.omega_c = angular(params.nu_c);
    out.g = angular(params.g);
    out.kappa = angular(params.kappa);
    out.gamma = angular(params.gamma);
    out.gamma_d = angular(params.gamma_d);
    out.j1 = angular(params.j1);
    out.j2 = angular(params.j2);
    out.qd_cavity_detuning = angular(params.nu_d - params.nu_c);
    return out;
}

ManifoldPair jc_eigenvalues(int n, const AnalyticParams& p)
{
    if (n < 1) throw InvalidArgument("manifold index must be >= 1, got " + std::to_string(n));
    const double d = p.qd_cavity_detuning;
    const double root = std::sqrt(4.0 * p.g * p.g * n + d * d);
    return {n * p.omega_c + 0.5 * (d + root), n * p.omega_c + 0.5 * (d - root)};
}

double transmission_analytic(double omega, const AnalyticParams& p)
{
    const double j2 = p.j1 * p.j1;
    const double g2 = p.g * p.g;
    const double qd = p.qd_cavity_detuning - omega;
    const double lorentz = p.gamma * p.gamma + qd * qd;
    const double denominator = g2 * g2 + 2.0 * g2 * (0.5 * j2 + p.gamma * p.kappa + qd * omega) +
                               lorentz * (j2 + p.kappa * p.kappa + omega * omega);
    if (denominator == 0.0) throw InvalidArgument("transmission denominator vanishes");
    return j2 * lorentz / denominator;
}

PolaritonPeaks polariton_peaks(const AnalyticParams& p)
{
    const double g2 = p.g * p.g;
    const double inner = std::sqrt(g2 * (g2 + p.j1 * p.j1) + 2.0 * g2 * p.gamma * (p.gamma + p.kappa));
    const double radicand = inner - p.gamma * p.gamma;
    if (radicand < 0.0) {
        throw NoSplitting("no polariton splitting: radicand " + std::to_string(radicand) + " < 0");
    }
    const double split = std::sqrt(radicand);
    return {p.omega_c + split, p.omega_c - split};
}

double rho_ee_unprobed(const AnalyticParams& p)
{
    const double j1s = p.j1 * p.j1;
    const double saturation = 2.0 * j1s + p.gamma * (p.gamma + p.gamma_d);
    if (saturation == 0.0) throw InvalidArgument("rho_ee undefined for J1 = gamma = 0");
    return j1s / saturation;
}

double rho_ee_second_order(double delta, const AnalyticParams& p)
{
    const double gam = p.gamma;
    const double gd = p.gamma_d;
    const double G = gam + gd; // coherence decay rate
    const double J1s = p.j1 * p.j1;
    const double J1q = J1s * J1s;
    const double d2 = delta * delta;
    const double d4 = d2 * d2;
    const double saturation = 2.0 * J1s + gam * G;

    const double numerator = 8.0 * J1q * G * (-2.0 * G * G - 3.0 * d2) +
                             G * G * G * (4.0 * gam * gam + d2) * (G * G + d2) +
                             4.0 * J1s * d2 * (-3.0 * gam * G * G + gd * d2);
    const double denominator =
        saturation * saturation * (G * G + d2) *
        (4.0 * saturation * saturation + (-8.0 * J1s + 5.0 * gam * gam + 2.0 * gam * gd + gd * gd) * d2 + d4);
    if (denominator == 0.0) throw InvalidArgument("rho_ee correction denominator vanishes");
    return rho_ee_unprobed(p) + gam * p.j2 * p.j2 * numerator / denominator;
}

double phonon_occupation(double detuning, double temperature)
{
    if (detuning == 0.0) throw InvalidArgument("phonon occupation diverges at zero detuning");
    if (!(temperature > 0.0)) throw InvalidArgument("temperature must be > 0 K");
    const double x = kHbar * std::abs(detuning) * 1e9 / (kBoltzmann * temperature);
    return 1.0 / std::expm1(x);
}

} // namespace cqed
