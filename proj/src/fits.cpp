#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include <unsupported/Eigen/NonLinearOptimization>

#include "cqed/errors.hpp"
#include "cqed/oracles.hpp"

namespace cqed {
namespace {

struct ResidualFunctor {
    using Scalar = double;
    enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
    using InputType = Eigen::VectorXd;
    using ValueType = Eigen::VectorXd;
    using JacobianType = Eigen::MatrixXd;
};

// diff = c g^2 / (alpha + D);  x = (c, alpha)
struct AsymmetryModel : ResidualFunctor {
    std::span<const AsymmetryPoint> data;
    int inputs() const { return 2; }
    int values() const { return static_cast<int>(data.size()); }

    int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const
    {
        for (std::size_t i = 0; i < data.size(); ++i) {
            const auto& p = data[i];
            f(i) = x(0) * p.g * p.g / (x(1) + p.detuning) - p.difference;
        }
        return 0;
    }
    int df(const Eigen::VectorXd& x, Eigen::MatrixXd& j) const
    {
        for (std::size_t i = 0; i < data.size(); ++i) {
            const auto& p = data[i];
            const double inv = 1.0 / (x(1) + p.detuning);
            j(i, 0) = p.g * p.g * inv;
            j(i, 1) = -x(0) * p.g * p.g * inv * inv;
        }
        return 0;
    }
};

// ratio = 2 alpha x / (1 + beta - alpha x);  params = (alpha, beta)
struct RatioModel : ResidualFunctor {
    std::span<const RatioPoint> data;
    int inputs() const { return 2; }
    int values() const { return static_cast<int>(data.size()); }

    int operator()(const Eigen::VectorXd& q, Eigen::VectorXd& f) const
    {
        for (std::size_t i = 0; i < data.size(); ++i) {
            f(i) = peak_ratio_model(data[i].x, q(0), q(1)) - data[i].ratio;
        }
        return 0;
    }
    int df(const Eigen::VectorXd& q, Eigen::MatrixXd& j) const
    {
        for (std::size_t i = 0; i < data.size(); ++i) {
            const double x = data[i].x;
            const double den = 1.0 + q(1) - q(0) * x;
            j(i, 0) = 2.0 * x * (1.0 + q(1)) / (den * den);
            j(i, 1) = -2.0 * q(0) * x / (den * den);
        }
        return 0;
    }
};

template <typename Model>
double minimize(Model& model, Eigen::VectorXd& x)
{
    Eigen::LevenbergMarquardt<Model> lm(model);
    lm.parameters.ftol = 1e-15;
    lm.parameters.xtol = 1e-15;
    lm.parameters.maxfev = 2000;
    lm.minimize(x);
    if (!x.allFinite()) throw FitError("least-squares iteration diverged");
    Eigen::VectorXd f(model.values());
    model(x, f);
    return std::sqrt(f.squaredNorm() / static_cast<double>(f.size()));
}

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const auto n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace

AsymmetryFit fit_asymmetry(std::span<const AsymmetryPoint> points)
{
    if (points.size() < 3) throw FitError("asymmetry fit needs at least 3 points");
    std::set<double> detunings;
    std::vector<double> all_detunings;
    double max_diff = 0.0;
    double min_g2 = INFINITY;
    for (const auto& p : points) {
        detunings.insert(p.detuning);
        all_detunings.push_back(p.detuning);
        max_diff = std::max(max_diff, std::abs(p.difference));
        if (p.g != 0.0) min_g2 = std::min(min_g2, p.g * p.g);
    }
    if (!std::isfinite(min_g2)) throw FitError("degenerate design: every g is zero");

    const double alpha0 = median(all_detunings);
    if (max_diff == 0.0) return {0.0, alpha0, 0.0};
    if (detunings.size() < 2) throw FitError("degenerate design: alpha needs at least two detunings");

    AsymmetryModel model;
    model.data = points;
    Eigen::VectorXd x(2);
    x << max_diff * (alpha0 + *detunings.begin()) / min_g2, alpha0;
    const double residual = minimize(model, x);
    return {x(0), x(1), residual};
}

double peak_ratio_model(double x, double alpha, double beta)
{
    return 2.0 * alpha * x / (1.0 + beta - alpha * x);
}

RatioFit fit_peak_ratio(std::span<const RatioPoint> points)
{
    if (points.size() < 2) throw FitError("ratio fit needs at least 2 points");
    double sxy = 0.0, sxx = 0.0;
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& p : points) {
        sxy += p.x * p.ratio;
        sxx += p.x * p.x;
        lo = std::min(lo, p.x);
        hi = std::max(hi, p.x);
    }
    if (sxx == 0.0) throw FitError("degenerate design: every x is zero");

    RatioModel model;
    model.data = points;
    Eigen::VectorXd q(2);
    q << 0.5 * sxy / sxx, 0.0;
    const double residual = minimize(model, q);

    // The denominator is linear in x, so checking the ends covers the range.
    const double at_lo = 1.0 + q(1) - q(0) * lo;
    const double at_hi = 1.0 + q(1) - q(0) * hi;
    if (at_lo * at_hi <= 0.0 || at_lo == 0.0) {
        throw FitError("fitted ratio model has a pole inside the data range");
    }
    return {q(0), q(1), residual};
}

} // namespace cqed
