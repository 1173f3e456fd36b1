// scenario.hpp: figure scenarios and generic sweeps

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cqed/experiments/config.hpp"
#include "cqed/experiments/csv.hpp"

namespace cqed::experiments {

inline constexpr const char* kToolVersion = "cqed-sim 1.0.0";

struct RunOptions {
    int jobs = 1;
};

// Per-scenario columns are listed in the README. Scenario-level results
// (knee location, fits) are appended to the provenance as "result." lines.
ResultTable run_scenario(const ScenarioConfig& config, const RunOptions& options = {});

// nu_l placed on the lower polariton omega_- (linear GHz).
double lower_polariton_pump(const SystemParams& params, bool zero_drive = false);

// Peak-height difference and excess ratio (larger / smaller - 1) of the two
// outermost peaks of a fig6 deviation curve.
struct PeakAsymmetry {
    double left_height;
    double right_height;
    double difference;
    double excess_ratio;
};
PeakAsymmetry peak_asymmetry(const std::vector<double>& delta, const std::vector<double>& deviation);

} // namespace cqed::experiments
