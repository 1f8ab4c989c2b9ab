#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace bigjump {

/// Inverse of the standard normal CDF. Accurate to ~1e-14 after refinement.
double normal_quantile(double p);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Two-sided Wilson score interval for a binomial proportion, given the
/// normal quantile z of the desired coverage.
Interval wilson_interval(std::int64_t successes, std::int64_t trials, double z);

/// One-sided Wilson upper bound for the zero-success case.
double wilson_upper_zero(std::int64_t trials, double z_one_sided);

/// Two-sided Kolmogorov-Smirnov statistic of a sample against a CDF.
/// Sorts a copy of the sample.
template <typename Cdf>
double ks_statistic(std::vector<double> sample, Cdf&& cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double F = cdf(sample[i]);
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - F));
        d = std::max(d, std::abs(static_cast<double>(i) / n - F));
    }
    return d;
}

} // namespace bigjump
