// time_domain.hpp: direct fixed-step RK4 integration of the time-dependent
// master equation, used to cross-check the continued-fraction results.

#pragma once

#include <vector>

#include "cqed/liouvillian.hpp"
#include "cqed/params.hpp"

namespace cqed {

struct Trajectory {
    std::vector<double> times;          // ns
    std::vector<DensityVector> states;
};

// Largest step (ns) the integrator accepts: 0.05 / max(angular rates, delta).
double max_stable_step(const SystemParams& params);

// Integrates from `initial` (the ground state |g,0> when empty) to t_end,
// keeping every `stride`-th state. Throws InvalidArgument when dt exceeds
// max_stable_step and IntegrationError when the trace drifts by more than 1e-6.
Trajectory time_domain_integrate(const SystemParams& params, double t_end, double dt,
                                 const DensityVector& initial = {}, int stride = 1);

// Settles for `settle_time` ns, then averages rho(t) over one beat period
// 2 pi / delta sampled at `steps_per_period` equally spaced points.
DensityVector beat_average(const SystemParams& params, double settle_time,
                           int steps_per_period = 0);

} // namespace cqed
