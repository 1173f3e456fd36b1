#include "cqed/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "cqed/errors.hpp"

namespace cqed {
namespace {

// Vertex of the parabola through three points, clamped to [x0, x2].
std::pair<double, double> parabola_vertex(double x0, double y0, double x1, double y1, double x2,
                                          double y2)
{
    const double u0 = x0 - x1;
    const double u2 = x2 - x1;
    const double d0 = y0 - y1;
    const double d2 = y2 - y1;
    const double q = (d0 / u0 - d2 / u2) / (u0 - u2);
    if (q == 0.0 || !std::isfinite(q)) return {x1, y1};
    const double p = d0 / u0 - q * u0;
    const double u = std::clamp(-p / (2.0 * q), std::min(u0, u2), std::max(u0, u2));
    return {x1 + u, y1 + p * u + q * u * u};
}

} // namespace

std::vector<Extremum> find_extrema(std::span<const double> x, std::span<const double> y,
                                   std::optional<double> reference)
{
    if (x.size() != y.size()) throw InvalidDimension("find_extrema: x and y differ in length");
    std::vector<Extremum> out;
    const std::size_t n = y.size();
    if (n < 3) return out;

    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start;
        while (end + 1 < n && y[end + 1] == y[start]) ++end;
        if (start > 0 && end + 1 < n) {
            const double left = y[start - 1];
            const double right = y[end + 1];
            const bool peak = left < y[start] && right < y[start];
            const bool dip = left > y[start] && right > y[start];
            if (peak || dip) {
                const auto kind = peak ? ExtremumKind::Peak : ExtremumKind::Dip;
                if (start == end) {
                    const auto [loc, val] = parabola_vertex(x[start - 1], left, x[start], y[start],
                                                            x[start + 1], right);
                    out.push_back({loc, val, kind});
                } else if (reference) {
                    std::size_t best = start;
                    for (std::size_t k = start; k <= end; ++k) {
                        if (std::abs(x[k] - *reference) < std::abs(x[best] - *reference)) best = k;
                    }
                    out.push_back({x[best], y[start], kind});
                } else {
                    out.push_back({0.5 * (x[start] + x[end]), y[start], kind});
                }
            }
        }
        start = end + 1;
    }
    return out;
}

std::vector<Extremum> peaks_only(const std::vector<Extremum>& extrema)
{
    std::vector<Extremum> out;
    std::copy_if(extrema.begin(), extrema.end(), std::back_inserter(out),
                 [](const Extremum& e) { return e.kind == ExtremumKind::Peak; });
    return out;
}

std::vector<Extremum> dips_only(const std::vector<Extremum>& extrema)
{
    std::vector<Extremum> out;
    std::copy_if(extrema.begin(), extrema.end(), std::back_inserter(out),
                 [](const Extremum& e) { return e.kind == ExtremumKind::Dip; });
    return out;
}

} // namespace cqed
