#pragma once

#include <array>
#include <cstdint>

#include "bigjump/estimate.hpp"
#include "bigjump/events.hpp"
#include "bigjump/tail_model.hpp"

namespace bigjump {

/// Sampling budget and reproducibility knobs shared by every estimator.
///
/// The sample index space is split into fixed-size chunks; chunk k draws
/// from RandomStream(seed, k) regardless of which worker runs it, and
/// per-chunk counts are merged as integers in chunk order. Results are
/// therefore bit-identical for any worker count.
struct McOptions {
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    double ci_level = 0.99;
    int workers = 0;  // 0 = use all hardware threads
};

/// Mean of 1(S_n > x) over i.i.d. replications, Wilson CI.
Estimate estimate_crude(const TailModel& model, const EventParams& params,
                        const McOptions& opts);

/// One classification pass over a shared batch: per-class estimates of the
/// five decomposition terms restricted to {S_n > x}, plus their total.
/// With the same (seed, samples), total matches estimate_crude bit-exactly.
struct Decomposition {
    std::array<Estimate, kNumEventClasses> terms;  // indexed by EventClass
    Estimate total;
};

Decomposition estimate_decomposition(const TailModel& model, const EventParams& params,
                                     const McOptions& opts);

enum class BigSign { Positive, Negative };

/// Conditional estimator of p11p (sign +) or p11m (sign -): the designated
/// coordinate is drawn from law(X | X > x) (negated for sign -), the rest
/// i.i.d. from the model, and the indicator mean is multiplied by the known
/// weight n P(X > x). Unbiased because the n one-big events are disjoint
/// for c < 1 and the coordinates are exchangeable.
Estimate estimate_one_big(const TailModel& model, const EventParams& params, BigSign sign,
                          const McOptions& opts);

/// Same conditional batch evaluated with and without the residual-sum
/// condition |S_n - X_1| <= bx, so the indicator nesting
/// refined <= one_big holds sample by sample.
struct OneBigRefined {
    Estimate one_big;   // p11p
    Estimate refined;   // the refined one-big-jump event
};

OneBigRefined estimate_one_big_refined(const TailModel& model, const EventParams& params,
                                       const McOptions& opts);

/// Conditional estimator of the refined event probability alone.
Estimate estimate_refined(const TailModel& model, const EventParams& params,
                          const McOptions& opts);

/// Conditional estimator of p10: the designated coordinate is drawn from
/// law(X | cx < |X| <= x), weight n P(cx < |X| <= x) = 2n (tail(cx) - tail(x)).
/// An empty stratum yields a degenerate zero estimate.
Estimate estimate_one_mid(const TailModel& model, const EventParams& params,
                          const McOptions& opts);

} // namespace bigjump
