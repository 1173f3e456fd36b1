#include "cqed/liouvillian.hpp"

#include <cmath>

#include "cqed/errors.hpp"

namespace cqed {

Operator unvectorize(const DensityVector& v)
{
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
    if (d == 0 || d * d != v.size()) {
        throw InvalidDimension("vector length " + std::to_string(v.size()) + " is not a square");
    }
    return Eigen::Map<const Operator>(v.data(), d, d);
}

Eigen::RowVectorXcd trace_functional(int dim)
{
    Eigen::RowVectorXcd t = Eigen::RowVectorXcd::Zero(dim * dim);
    for (int i = 0; i < dim; ++i) t(i * dim + i) = 1.0;
    return t;
}

Superoperator left_multiply(const Operator& a)
{
    return tensor(Operator::Identity(a.rows(), a.rows()), a);
}

Superoperator right_multiply(const Operator& b)
{
    return tensor(b.transpose(), Operator::Identity(b.rows(), b.rows()));
}

Superoperator commutator_superop(const Operator& h)
{
    const Complex minus_i(0.0, -1.0);
    return minus_i * (left_multiply(h) - right_multiply(h));
}

Superoperator dissipator(const Operator& c)
{
    if (c.rows() != c.cols()) throw InvalidDimension("collapse operator must be square");
    const Operator cdc = c.adjoint() * c;
    return tensor(c.conjugate(), c) - 0.5 * left_multiply(cdc) - 0.5 * right_multiply(cdc);
}

int Liouvillians::dim() const
{
    return static_cast<int>(std::llround(std::sqrt(static_cast<double>(l0.rows()))));
}

Liouvillians build_liouvillians(const SystemParams& params)
{
    params.validate_structure();
    const ModeOperators ops(params.hilbert);
    const Operator drive = drive_operator(ops, params.drive_target);

    Liouvillians out;
    out.l0 = commutator_superop(build_h0(params));
    const auto add_channel = [&](double rate, const Operator& c) {
        if (rate > 0.0) out.l0 += dissipator(std::sqrt(2.0 * angular(rate)) * c);
    };
    add_channel(params.gamma, ops.sigma);
    add_channel(params.kappa, ops.a);
    add_channel(params.gamma_d, ops.excited_projector);
    add_channel(params.gamma_r, ops.a.adjoint() * ops.sigma);

    const double j2 = angular(params.j2);
    out.l_plus = j2 * commutator_superop(drive);
    out.l_minus = j2 * commutator_superop(drive.adjoint());
    return out;
}

Complex expectation(const Operator& op, const DensityVector& rho)
{
    // tr(op rho) = sum_ij op_ij rho_ji = vec(op^T) . vec(rho)
    const Operator opt = op.transpose();
    return (Eigen::Map<const DensityVector>(opt.data(), opt.size()).transpose() * rho)(0);
}

} // namespace cqed
