#include "cqed/operators.hpp"

#include <cmath>

#include "cqed/errors.hpp"

namespace cqed {

Operator annihilation(int fock_levels)
{
    if (fock_levels < 2) throw InvalidDimension("fock_levels must be >= 2");
    Operator a = Operator::Zero(fock_levels, fock_levels);
    for (int n = 1; n < fock_levels; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

Operator lowering()
{
    Operator s = Operator::Zero(2, 2);
    s(0, 1) = 1.0; // |g><e|
    return s;
}

ModeOperators::ModeOperators(const HilbertConfig& config)
    : dim(config.dim()),
      identity(Operator::Identity(config.dim(), config.dim())),
      a(tensor(Operator::Identity(2, 2), annihilation(config.fock_levels))),
      sigma(tensor(lowering(), Operator::Identity(config.fock_levels, config.fock_levels))),
      number(a.adjoint() * a),
      excited_projector(sigma.adjoint() * sigma)
{
}

Operator drive_operator(const ModeOperators& ops, DriveTarget target)
{
    return target == DriveTarget::Cavity ? ops.a : ops.sigma;
}

Operator build_h0(const SystemParams& params)
{
    params.validate_structure();
    const ModeOperators ops(params.hilbert);
    const Operator drive = drive_operator(ops, params.drive_target);

    Operator h = params.cavity_detuning() * ops.number
               + params.qd_detuning() * ops.excited_projector
               + angular(params.g) * (ops.sigma.adjoint() * ops.a + ops.sigma * ops.a.adjoint())
               + angular(params.j1) * (drive + drive.adjoint());
    return h;
}

} // namespace cqed
