#include "bigjump/events.hpp"

namespace bigjump {

const char* to_string(EventClass c) {
    switch (c) {
        case EventClass::ZeroBig: return "p0";
        case EventClass::MultiBig: return "pge2";
        case EventClass::OneMid: return "p10";
        case EventClass::OneNegBig: return "p11m";
        case EventClass::OnePosBig: return "p11p";
    }
    return "?";
}

bool refined_ok(std::span<const double> sample, const EventParams& p, int big_index) {
    const double sum = sum_left_to_right(sample);
    const Classification cl = classify_with_sum(sample, p, sum);
    if (cl.cls != EventClass::OnePosBig || !cl.big_index || *cl.big_index != big_index)
        throw std::logic_error("refined_ok: sample is not OnePosBig at the given index");
    return std::abs(sum - sample[static_cast<std::size_t>(big_index)]) <=
           p.residual_bound();
}

PartitionCounts partition_check(std::span<const std::vector<double>> batch,
                                const EventParams& p) {
    if (batch.empty()) throw std::invalid_argument("partition_check: batch is empty");
    PartitionCounts out;
    out.total = static_cast<std::int64_t>(batch.size());
    for (const auto& sample : batch) {
        const double sum = sum_left_to_right(sample);
        if (!(sum > p.x)) continue;
        const Classification cl = classify_with_sum(sample, p, sum);
        ++out.per_class[static_cast<std::size_t>(cl.cls)];
        ++out.exceed;
    }
    return out;
}

} // namespace bigjump
