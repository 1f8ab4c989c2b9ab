#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bigjump/events.hpp"

namespace bigjump {

/// The three dimensionless ratios of the scaling regime. The asymptotic
/// equivalence is claimed along sequences where all three vanish:
///   r1 = n x^-alpha          (large-deviation condition)
///   r2 = n x^-alpha / c^(2 alpha)
///   r3 = n x^-alpha / (b^2 c^(alpha - 2))
struct RegimeRatios {
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;
};

RegimeRatios ratios(double alpha, const EventParams& params);

/// Reporting convention for "all ratios are small"; not a theorem constant.
inline constexpr double kDefaultRegimeThreshold = 0.2;

bool regime_valid(const RegimeRatios& r, double threshold = kDefaultRegimeThreshold);

struct ThresholdPair {
    double c = 0.0;
    double b = 0.0;
};

/// Default (c, b) choice: c = b = r1^(1/(4 alpha)), clipped to (0, 0.9].
/// Unclipped this gives r2 = sqrt(r1) and r3 = r1^(3/4), so one knob (r1)
/// drives all three ratios to zero together. Requires r1 < 1.
ThresholdPair default_cb(double alpha, int n, double x);

struct SequencePoint {
    EventParams params;
    RegimeRatios ratios;
};

/// Parameter sequence along a strictly increasing x grid with fixed n.
/// (c, b) come from default_cb unless overridden. Every point must satisfy
/// r1 < 1; violations are rejected with a diagnostic.
std::vector<SequencePoint> sequence(double alpha, int n, std::span<const double> x_grid,
                                    std::optional<double> c_override = std::nullopt,
                                    std::optional<double> b_override = std::nullopt);

/// Custom sequence with n varying alongside x (paired grids of equal
/// length). Only the large-deviation condition r1 < 1 is validated per
/// point, so sequences with fixed x and growing n are expressible and get
/// rejected exactly when they leave the regime.
std::vector<SequencePoint> sequence(double alpha, std::span<const int> n_grid,
                                    std::span<const double> x_grid,
                                    std::optional<double> c_override = std::nullopt,
                                    std::optional<double> b_override = std::nullopt);

} // namespace bigjump
