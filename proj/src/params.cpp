#include "cqed/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cqed/errors.hpp"

namespace cqed {

std::string_view to_string(DriveTarget target)
{
    return target == DriveTarget::Cavity ? "cavity" : "qd";
}

DriveTarget drive_target_from_string(std::string_view text)
{
    if (text == "cavity") return DriveTarget::Cavity;
    if (text == "qd") return DriveTarget::QD;
    throw InvalidArgument("drive_target must be 'cavity' or 'qd', got '" + std::string(text) + "'");
}

double SystemParams::z_epsilon_angular() const
{
    if (cf.z_epsilon) return angular(*cf.z_epsilon);
    return angular(1e-6 * std::max(kappa, gamma));
}

void SystemParams::validate_structure() const
{
    const std::pair<const char*, double> values[] = {
        {"nu_c", nu_c}, {"nu_d", nu_d}, {"nu_l", nu_l}, {"g", g},
        {"kappa", kappa}, {"gamma", gamma}, {"gamma_d", gamma_d}, {"gamma_r", gamma_r},
        {"j1", j1}, {"j2", j2}, {"delta", delta}, {"conv_tol", cf.conv_tol}};
    for (const auto& [name, value] : values) {
        if (!std::isfinite(value)) throw InvalidArgument(std::string(name) + " must be finite");
    }
    const std::pair<const char*, double> rates[] = {
        {"kappa", kappa}, {"gamma", gamma}, {"gamma_d", gamma_d}, {"gamma_r", gamma_r}, {"j2", j2}};
    for (const auto& [name, value] : rates) {
        if (value < 0.0) throw InvalidArgument(std::string(name) + " must be >= 0");
    }
    if (hilbert.fock_levels < 2) throw InvalidDimension("fock_levels must be >= 2");
    if (cf.n_max < 1) throw InvalidArgument("n_max must be >= 1");
    if (!(cf.conv_tol > 0.0)) throw InvalidArgument("conv_tol must be > 0");
    if (cf.z_epsilon && !(*cf.z_epsilon >= 0.0)) throw InvalidArgument("z_epsilon must be >= 0");
}

void SystemParams::validate() const
{
    validate_structure();
    if (!(kappa > 0.0 || gamma > 0.0)) {
        throw InvalidArgument("kappa or gamma must be > 0 for a unique steady state");
    }
}

} // namespace cqed
