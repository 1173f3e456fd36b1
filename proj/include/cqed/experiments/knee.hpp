// knee.hpp: breakpoint of a two-segment continuous piecewise-linear fit

#pragma once

#include <optional>
#include <span>

namespace cqed::experiments {

struct KneePoint {
    double x;
    double y;
};

struct KneeResult {
    double location;     // breakpoint x
    double slope_before;
    double slope_after;
    double residual;     // root-mean-square of the hinge fit
};

// Fits y = a + b x + c max(0, x - k) over k, choosing k by least squares.
// Returns nullopt when the slope change is not significant: the hinge must
// halve the straight-line residual and change the slope by more than 1e-6
// of the slope scale. Throws InvalidArgument for fewer than six points.
std::optional<KneeResult> detect_knee(std::span<const KneePoint> points);

} // namespace cqed::experiments
