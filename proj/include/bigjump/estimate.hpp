#pragma once

#include <cstdint>
#include <string>

namespace bigjump {

enum class Method { Crude, Decomposition, ConditionalBigJump, ConditionalMid };

const char* to_string(Method m);

/// A point estimate with provenance. For indicator-mean estimators,
/// value = weight * hits / samples, so hits is recoverable from the value.
struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::int64_t samples = 0;
    std::int64_t hits = 0;     // raw indicator count behind the mean
    double weight = 1.0;       // known factor applied to the indicator mean
    std::uint64_t seed = 0;
    double ci_level = 0.99;
    Method method = Method::Crude;
    bool degenerate = false;   // zero hits: ci_hi is a one-sided upper bound
};

/// Build an Estimate from integer counts: Wilson interval at ci_level
/// (delta-scaled by the weight for conditional estimators), binomial
/// standard error, one-sided Wilson upper bound when hits == 0.
Estimate make_indicator_estimate(std::int64_t hits, std::int64_t samples, double weight,
                                 std::uint64_t seed, double ci_level, Method method);

} // namespace bigjump
