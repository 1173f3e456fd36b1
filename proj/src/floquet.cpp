#include "cqed/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "cqed/errors.hpp"

namespace cqed {
namespace {

constexpr double kMinRcond = 1e-14;

bool is_zero(const Superoperator& m) { return m.cwiseAbs().maxCoeff() == 0.0; }

// Every column of L+ and L- is traceless (they are commutators), and so is
// every column of L-+ S. Hence for a rung matrix A = L0 - s + L-+ S we have
// t A = -s t, and the solution X of A X = B (B traceless) is traceless for
// s != 0. Adding u t, with t u != 0, leaves that solution unchanged and
// removes the zero mode that makes A singular at s = 0 (delta = 0 in the
// steady state).
struct TraceAugmentation {
    explicit TraceAugmentation(const Liouvillians& l)
    {
        const int d = l.dim();
        const double scale = std::max(1.0, l.l0.cwiseAbs().maxCoeff());
        const DensityVector unit = vectorize(Operator::Identity(d, d)) * (scale / d);
        term = unit * trace_functional(d);
    }
    Superoperator term;
};

Superoperator solve_rung(const Superoperator& lhs, const Superoperator& rhs, int rung)
{
    Eigen::PartialPivLU<Superoperator> lu(lhs);
    const double rcond = lu.rcond();
    if (!(rcond > kMinRcond)) {
        throw SingularResolvent(rung, "singular resolvent at ladder rung n = " + std::to_string(rung) +
                                          " (rcond = " + std::to_string(rcond) + ")");
    }
    return -lu.solve(rhs);
}

} // namespace

Ladders cf_ladders(const Liouvillians& l, Complex z, double delta, const CFConfig& config)
{
    if (config.n_max < 1) throw InvalidArgument("n_max must be >= 1");
    const auto n_max = config.n_max;
    const auto size = l.l0.rows();

    Ladders out;
    out.s.assign(n_max, Superoperator::Zero(size, size));
    out.t.assign(n_max, Superoperator::Zero(size, size));
    if (is_zero(l.l_plus) && is_zero(l.l_minus)) {
        out.zero = true;
        return out;
    }

    const TraceAugmentation aug(l);
    const Complex i(0.0, 1.0);
    for (int n = n_max; n >= 1; --n) {
        Superoperator a = l.l0 + aug.term;
        a.diagonal().array() -= z + i * (n * delta);
        if (n < n_max) a.noalias() += l.l_minus * out.s[n];
        out.s[n - 1] = solve_rung(a, l.l_plus, n);
    }
    for (int n = n_max; n >= 1; --n) {
        Superoperator a = l.l0 + aug.term;
        a.diagonal().array() -= z - i * (n * delta);
        if (n < n_max) a.noalias() += l.l_plus * out.t[n];
        out.t[n - 1] = solve_rung(a, l.l_minus, -n);
    }
    return out;
}

Superoperator effective_generator(const Liouvillians& l, const Ladders& ladders)
{
    Superoperator out = l.l0;
    if (!ladders.zero) {
        out.noalias() += l.l_minus * ladders.s1();
        out.noalias() += l.l_plus * ladders.t_minus1();
    }
    return out;
}

DensityVector rho0_laplace(Complex z, const DensityVector& initial, const Ladders& ladders,
                           const Liouvillians& l)
{
    if (initial.size() != l.l0.rows()) throw InvalidDimension("initial state has the wrong length");
    Superoperator a = -effective_generator(l, ladders);
    a.diagonal().array() += z;
    Eigen::PartialPivLU<Superoperator> lu(a);
    const double rcond = lu.rcond();
    if (!(rcond > kMinRcond)) {
        throw SingularResolvent(0, "singular zeroth-harmonic resolvent at z = (" + std::to_string(z.real()) +
                                       ", " + std::to_string(z.imag()) +
                                       "); increase z_epsilon to regularize the zero mode");
    }
    return lu.solve(initial);
}

DensityVector laplace_transform_full(Complex z, const DensityVector& initial, const Liouvillians& l,
                                     double delta, const CFConfig& config)
{
    const Complex i(0.0, 1.0);
    DensityVector sum = DensityVector::Zero(initial.size());
    for (int n = -config.n_max; n <= config.n_max; ++n) {
        const Complex shifted = z - i * (n * delta);
        const Ladders ladders = cf_ladders(l, shifted, delta, config);
        DensityVector rho = rho0_laplace(shifted, initial, ladders, l);
        for (int k = 1; k <= std::abs(n); ++k) {
            rho = (n > 0 ? ladders.s[k - 1] : ladders.t[k - 1]) * rho;
        }
        sum += rho;
    }
    return sum;
}

FloquetHarmonics steady_state(const SystemParams& params)
{
    params.validate();
    return steady_state(params, build_liouvillians(params));
}

FloquetHarmonics steady_state(const SystemParams& params, const Liouvillians& l)
{
    params.validate();
    const CFConfig& config = params.cf;
    const Ladders ladders = cf_ladders(l, Complex(0.0, 0.0), params.delta_angular(), config);
    const Superoperator generator = effective_generator(l, ladders);

    Eigen::BDCSVD<Superoperator> svd(generator, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const auto n = sv.size();
    if (sv(n - 2) <= 1e-8 * sv(0)) {
        throw DegenerateSteadyState("steady state is not unique: second-smallest singular value " +
                                    std::to_string(sv(n - 2)) + " vs largest " + std::to_string(sv(0)));
    }

    const int d = l.dim();
    DensityVector rho0 = svd.matrixV().col(n - 1);
    const Complex trace = (trace_functional(d) * rho0)(0);
    if (std::abs(trace) < 1e-300) throw DegenerateSteadyState("null vector has zero trace");
    rho0 /= trace;

    FloquetHarmonics out;
    out.n_max = config.n_max;
    out.dim = d;
    out.rho.assign(2 * config.n_max + 1, DensityVector());
    out.rho[config.n_max] = rho0;
    for (int k = 1; k <= config.n_max; ++k) {
        out.rho[config.n_max + k] = ladders.s[k - 1] * out.rho[config.n_max + k - 1];
        out.rho[config.n_max - k] = ladders.t[k - 1] * out.rho[config.n_max - k + 1];
    }

    const auto tr = trace_functional(d);
    const Complex tr_plus = (tr * out.at(1))(0);
    const Complex tr_minus = (tr * out.at(-1))(0);
    out.time_averaged = rho0 - tr_plus * out.at(-1) - tr_minus * out.at(1);

    out.ladder_tail = (out.at(config.n_max).norm() + out.at(-config.n_max).norm()) / rho0.norm();
    // Truncating the outermost rung perturbs rho_0 at second order in its weight.
    out.converged = out.ladder_tail * out.ladder_tail <= config.conv_tol;
    return out;
}

} // namespace cqed
