// floquet.hpp: periodic master equation solved by matrix continued fractions
//
// With rho(t) = sum_n rho_n(t) e^{i n delta t} the harmonics obey
//   (z + i n delta) rho_n(z) - rho(0) delta_{n0}
//       = L0 rho_n(z) + L+ rho_{n-1}(z) + L- rho_{n+1}(z).
// Eliminating n > 0 and n < 0 through rho_n = S_n rho_{n-1} and
// rho_{-n} = T_{-n} rho_{-n+1} gives
//   S_n    = -[L0 - (z + i n delta) + L- S_{n+1}]^{-1} L+
//   T_{-n} = -[L0 - (z - i n delta) + L+ T_{-n-1}]^{-1} L-
// truncated with S_{n_max+1} = T_{-n_max-1} = 0, and
//   rho_0(z) = [z - L0 - L- S_1 - L+ T_{-1}]^{-1} rho(0).

#pragma once

#include <vector>

#include "cqed/liouvillian.hpp"
#include "cqed/params.hpp"
#include "cqed/types.hpp"

namespace cqed {

struct Ladders {
    std::vector<Superoperator> s; // s[k] = S_{k+1}
    std::vector<Superoperator> t; // t[k] = T_{-(k+1)}
    bool zero = false;            // L+ = L- = 0; every rung vanishes

    int n_max() const { return static_cast<int>(s.size()); }
    const Superoperator& s1() const { return s.front(); }
    const Superoperator& t_minus1() const { return t.front(); }
};

// delta in rad/ns. Throws SingularResolvent naming the failing rung.
Ladders cf_ladders(const Liouvillians& liouvillians, Complex z, double delta,
                   const CFConfig& config);

// L0 + L- S_1 + L+ T_{-1}
Superoperator effective_generator(const Liouvillians& liouvillians, const Ladders& ladders);

// Laplace-domain zeroth harmonic for initial condition rho(0).
DensityVector rho0_laplace(Complex z, const DensityVector& initial, const Ladders& ladders,
                           const Liouvillians& liouvillians);

// Laplace transform of the full rho(t) = sum_n rho_n(t) e^{i n delta t}, i.e.
// sum_n rho_n(z - i n delta), each term from its own continued-fraction solve.
DensityVector laplace_transform_full(Complex z, const DensityVector& initial,
                                     const Liouvillians& liouvillians, double delta,
                                     const CFConfig& config);

struct FloquetHarmonics {
    int n_max = 0;
    int dim = 0;                       // Hilbert dimension
    std::vector<DensityVector> rho;    // rho[n + n_max], trace(rho_0) = 1
    DensityVector time_averaged;       // rho_0 - tr(rho_1) rho_{-1} - tr(rho_{-1}) rho_1
    double ladder_tail = 0.0;          // (|rho_{n_max}| + |rho_{-n_max}|) / |rho_0|
    bool converged = true;             // ladder_tail <= conv_tol

    const DensityVector& at(int n) const { return rho.at(static_cast<std::size_t>(n + n_max)); }
};

// Periodic steady state. The zeroth harmonic is the null vector of the
// z = 0 effective generator, taken from its singular-value decomposition.
// Throws DegenerateSteadyState if the null space is not one-dimensional.
FloquetHarmonics steady_state(const SystemParams& params);
FloquetHarmonics steady_state(const SystemParams& params, const Liouvillians& liouvillians);

} // namespace cqed
