#include "cqed/experiments/knee.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/tools/minima.hpp>

#include "cqed/errors.hpp"

namespace cqed::experiments {
namespace {

struct LinearFit {
    Eigen::Vector3d coef = Eigen::Vector3d::Zero();
    double sse = 0.0;
};

LinearFit fit_hinge(const std::vector<KneePoint>& pts, double k)
{
    const auto n = static_cast<Eigen::Index>(pts.size());
    Eigen::MatrixXd design(n, 3);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        design(i, 0) = 1.0;
        design(i, 1) = pts[i].x;
        design(i, 2) = std::max(0.0, pts[i].x - k);
        y(i) = pts[i].y;
    }
    LinearFit out;
    out.coef = design.colPivHouseholderQr().solve(y);
    out.sse = (design * out.coef - y).squaredNorm();
    return out;
}

} // namespace

std::optional<KneeResult> detect_knee(std::span<const KneePoint> points)
{
    if (points.size() < 6) {
        throw InvalidArgument("knee detection needs at least 6 points, got " + std::to_string(points.size()));
    }
    std::vector<KneePoint> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.x < b.x; });

    // Straight line: the hinge column vanishes for k at the right end.
    const LinearFit line = fit_hinge(pts, pts.back().x);
    if (line.sse == 0.0) return std::nullopt;

    // SSE(k) is smooth between data abscissae; minimize inside each interval
    // that leaves at least two points on either side.
    double best_k = 0.0;
    double best_sse = INFINITY;
    const auto sse = [&](double k) { return fit_hinge(pts, k).sse; };
    for (std::size_t i = 1; i + 2 < pts.size(); ++i) {
        const double lo = pts[i].x;
        const double hi = pts[i + 1].x;
        if (!(hi > lo)) continue;
        const auto [k, value] = boost::math::tools::brent_find_minima(sse, lo, hi, 50);
        for (const auto& [cand, val] : {std::pair{k, value}, std::pair{lo, sse(lo)}, std::pair{hi, sse(hi)}}) {
            if (val < best_sse) {
                best_sse = val;
                best_k = cand;
            }
        }
    }

    const LinearFit hinge = fit_hinge(pts, best_k);
    const double b = hinge.coef(1);
    const double c = hinge.coef(2);
    const double scale = std::max({std::abs(line.coef(1)), std::abs(b), std::abs(b + c)});
    if (!(hinge.sse <= 0.5 * line.sse) || !(std::abs(c) > 1e-6 * scale)) return std::nullopt;

    return KneeResult{best_k, b, b + c, std::sqrt(hinge.sse / static_cast<double>(pts.size()))};
}

} // namespace cqed::experiments
