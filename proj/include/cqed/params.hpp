// params.hpp: physical parameters and truncation settings for one simulation
//
// All frequencies and rates are LINEAR frequencies in GHz (the "X/2pi = Y GHz"
// convention). Solvers convert to angular units (rad/ns) through the
// accessors below; nothing else should multiply by 2pi.

#pragma once

#include <optional>
#include <string_view>

#include "cqed/types.hpp"

namespace cqed {

enum class DriveTarget { Cavity, QD };

std::string_view to_string(DriveTarget target);
DriveTarget drive_target_from_string(std::string_view text);

struct HilbertConfig {
    int fock_levels = 3; // photon basis states |0>..|fock_levels-1>
    static constexpr int qd_levels = 2;

    int dim() const { return qd_levels * fock_levels; }
};

struct CFConfig {
    int n_max = 3;          // ladder depth
    double conv_tol = 1e-10; // bound on the relative weight of the outermost harmonic
    // Regularization of Re(z) for spectral resolvents, linear GHz.
    // Unset means 1e-6 of the largest of kappa and gamma.
    std::optional<double> z_epsilon;
};

struct SystemParams {
    double nu_c = 0.0; // cavity
    double nu_d = 0.0; // quantum dot
    double nu_l = 0.0; // pump laser
    double g = 0.0;
    double kappa = 0.0;
    double gamma = 0.0;
    double gamma_d = 0.0;
    double gamma_r = 0.0;
    double j1 = 0.0;
    double j2 = 0.0;
    double delta = 0.0; // probe minus pump
    DriveTarget drive_target = DriveTarget::QD;
    HilbertConfig hilbert;
    CFConfig cf;

    // Angular-unit views (rad/ns).
    double cavity_detuning() const { return angular(nu_c - nu_l); }
    double qd_detuning() const { return angular(nu_d - nu_l); }
    double delta_angular() const { return angular(delta); }
    double z_epsilon_angular() const;

    // Checks finiteness, non-negative rates and truncation settings.
    void validate_structure() const;
    // validate_structure() plus the dissipation requirement (kappa > 0 or gamma > 0).
    void validate() const;
};

} // namespace cqed
