#include "cqed/time_domain.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <string>

#include "cqed/errors.hpp"

namespace cqed {
namespace {

class Rk4Stepper {
public:
    Rk4Stepper(const SystemParams& params, const DensityVector& initial)
        : l_(build_liouvillians(params)),
          delta_(params.delta_angular()),
          probe_(angular(params.j2) != 0.0),
          trace_(trace_functional(l_.dim())),
          state_(initial)
    {
        if (state_.size() == 0) {
            state_ = DensityVector::Zero(l_.l0.rows());
            state_(0) = 1.0; // |g,0><g,0|
        }
        if (state_.size() != l_.l0.rows()) throw InvalidDimension("initial state has the wrong length");
        initial_trace_ = (trace_ * state_)(0);
    }

    void step(double t, double dt)
    {
        k1_ = rhs(t, state_);
        tmp_ = state_ + (0.5 * dt) * k1_;
        k2_ = rhs(t + 0.5 * dt, tmp_);
        tmp_ = state_ + (0.5 * dt) * k2_;
        k3_ = rhs(t + 0.5 * dt, tmp_);
        tmp_ = state_ + dt * k3_;
        k4_ = rhs(t + dt, tmp_);
        state_ += (dt / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);

        const double drift = std::abs((trace_ * state_)(0) - initial_trace_);
        if (!(drift <= 1e-6)) {
            throw IntegrationError("trace drifted by " + std::to_string(drift) + " at t = " +
                                   std::to_string(t + dt) + " ns; reduce dt");
        }
    }

    const DensityVector& state() const { return state_; }

private:
    DensityVector rhs(double t, const DensityVector& v) const
    {
        DensityVector out = l_.l0 * v;
        if (probe_) {
            const Complex phase = std::polar(1.0, delta_ * t);
            out += phase * (l_.l_plus * v) + std::conj(phase) * (l_.l_minus * v);
        }
        return out;
    }

    Liouvillians l_;
    double delta_;
    bool probe_;
    Eigen::RowVectorXcd trace_;
    DensityVector state_;
    Complex initial_trace_;
    DensityVector k1_, k2_, k3_, k4_, tmp_;
};

} // namespace

double max_stable_step(const SystemParams& params)
{
    double fastest = 0.0;
    for (double rate : {std::abs(params.nu_c - params.nu_l), std::abs(params.nu_d - params.nu_l),
                        std::abs(params.g), std::abs(params.j1), params.j2, 2.0 * params.kappa,
                        2.0 * params.gamma, 2.0 * params.gamma_d, 2.0 * params.gamma_r,
                        std::abs(params.delta)}) {
        fastest = std::max(fastest, angular(rate));
    }
    return fastest > 0.0 ? 0.05 / fastest : 1.0;
}

Trajectory time_domain_integrate(const SystemParams& params, double t_end, double dt,
                                 const DensityVector& initial, int stride)
{
    params.validate_structure();
    if (!(dt > 0.0) || dt > max_stable_step(params) * (1.0 + 1e-12)) {
        throw InvalidArgument("dt = " + std::to_string(dt) + " ns exceeds the stable step " +
                              std::to_string(max_stable_step(params)) + " ns");
    }
    if (!(t_end >= 0.0)) throw InvalidArgument("t_end must be >= 0");
    stride = std::max(stride, 1);

    Rk4Stepper stepper(params, initial);
    const auto steps = static_cast<long>(std::ceil(t_end / dt - 1e-9));
    Trajectory out;
    out.times.push_back(0.0);
    out.states.push_back(stepper.state());
    for (long k = 0; k < steps; ++k) {
        stepper.step(k * dt, dt);
        if ((k + 1) % stride == 0 || k + 1 == steps) {
            out.times.push_back((k + 1) * dt);
            out.states.push_back(stepper.state());
        }
    }
    return out;
}

DensityVector beat_average(const SystemParams& params, double settle_time, int steps_per_period)
{
    params.validate_structure();
    if (params.delta == 0.0) throw InvalidArgument("beat averaging needs a nonzero delta");
    const double period = 1.0 / std::abs(params.delta); // ns, delta in GHz
    const auto steps = std::max<long>(steps_per_period,
                                      static_cast<long>(std::ceil(period / max_stable_step(params))));
    const double dt = period / static_cast<double>(steps);
    const auto settle_steps = static_cast<long>(std::ceil(settle_time / dt));

    Rk4Stepper stepper(params, DensityVector());
    long k = 0;
    for (; k < settle_steps; ++k) stepper.step(k * dt, dt);

    // Equally spaced samples of a periodic function: the rectangle rule is the
    // trapezoid rule here.
    DensityVector sum = DensityVector::Zero(stepper.state().size());
    for (long m = 0; m < steps; ++m, ++k) {
        sum += stepper.state();
        stepper.step(k * dt, dt);
    }
    return sum / static_cast<double>(steps);
}

} // namespace cqed
