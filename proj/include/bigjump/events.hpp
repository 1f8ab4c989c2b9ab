#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace bigjump {

/// The deviation event {S_n > x} and its decomposition thresholds.
/// n >= 1, x > 0, c in (0, 1), b in (0, 1); c < 1 guarantees the "exactly
/// one coordinate exceeds c x" events are disjoint across coordinates.
struct EventParams {
    int n;
    double x;
    double c;
    double b;

    EventParams(int n_, double x_, double c_, double b_) : n(n_), x(x_), c(c_), b(b_) {
        if (n < 1) throw std::domain_error("EventParams: n must be >= 1");
        if (!(x > 0.0) || !std::isfinite(x))
            throw std::domain_error("EventParams: x must be a positive real");
        if (!(c > 0.0) || !(c < 1.0))
            throw std::domain_error("EventParams: c must lie in (0, 1)");
        if (!(b > 0.0) || !(b < 1.0))
            throw std::domain_error("EventParams: b must lie in (0, 1)");
    }

    double big_threshold() const { return c * x; }     // cx
    double residual_bound() const { return b * x; }    // bx
};

/// Five-way classification of a sample vector by how many coordinates
/// exceed cx in absolute value and where the single exceeding one sits.
/// Classification is of the whole sample space; intersecting with {S_n > x}
/// happens at estimation time.
enum class EventClass : int {
    ZeroBig = 0,   // max |X_j| <= cx
    MultiBig = 1,  // at least two |X_j| > cx
    OneMid = 2,    // exactly one, with cx < |X_i| <= x
    OneNegBig = 3, // exactly one, with X_i < -x
    OnePosBig = 4, // exactly one, with X_i > x
};

inline constexpr std::size_t kNumEventClasses = 5;

const char* to_string(EventClass c);

struct Classification {
    EventClass cls = EventClass::ZeroBig;
    std::optional<int> big_index;   // the unique i with |X_i| > cx, when one exists
    std::optional<bool> refined;    // only for OnePosBig: |S_n - X_i| <= bx
};

/// Fixed left-to-right summation order; every consumer of a sample vector
/// must agree on this for bit-exact shared-batch identities.
inline double sum_left_to_right(std::span<const double> v) {
    double s = 0.0;
    for (double u : v) s += u;
    return s;
}

/// Classify with the sample sum already known (hot path for the estimators).
/// Boundary conventions follow the event definitions exactly:
/// |X_j| <= cx non-strict, |X_i| > cx strict, X_i > x strict,
/// |X_i| <= x non-strict, |S_n - X_i| <= bx non-strict.
inline Classification classify_with_sum(std::span<const double> sample,
                                        const EventParams& p, double sum) {
    if (static_cast<int>(sample.size()) != p.n)
        throw std::invalid_argument("classify: sample length does not match params.n");
    const double cx = p.big_threshold();
    int exceed_count = 0;
    int exceed_index = -1;
    for (std::size_t j = 0; j < sample.size(); ++j) {
        if (std::abs(sample[j]) > cx) {
            ++exceed_count;
            exceed_index = static_cast<int>(j);
            if (exceed_count >= 2) break;
        }
    }
    Classification out;
    if (exceed_count == 0) {
        out.cls = EventClass::ZeroBig;
        return out;
    }
    if (exceed_count >= 2) {
        out.cls = EventClass::MultiBig;
        return out;
    }
    out.big_index = exceed_index;
    const double v = sample[static_cast<std::size_t>(exceed_index)];
    if (v > p.x) {
        out.cls = EventClass::OnePosBig;
        out.refined = std::abs(sum - v) <= p.residual_bound();
    } else if (v < -p.x) {
        out.cls = EventClass::OneNegBig;
    } else {
        out.cls = EventClass::OneMid;
    }
    return out;
}

inline Classification classify(std::span<const double> sample, const EventParams& p) {
    return classify_with_sum(sample, p, sum_left_to_right(sample));
}

/// The residual-sum condition |S_n - X_i| <= bx of the refined event.
/// Contract: the sample must classify as OnePosBig at big_index.
bool refined_ok(std::span<const double> sample, const EventParams& p, int big_index);

struct PartitionCounts {
    std::array<std::int64_t, kNumEventClasses> per_class{};
    std::int64_t exceed = 0;  // #{S_n > x}; equals the sum of per_class
    std::int64_t total = 0;   // batch size
};

/// Per-class counts restricted to {S_n > x}. The five counts sum to the
/// exceedance count exactly (integer identity).
PartitionCounts partition_check(std::span<const std::vector<double>> batch,
                                const EventParams& p);

} // namespace bigjump
