#include "bigjump/estimators.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "bigjump/stats.hpp"

namespace bigjump {

const char* to_string(Method m) {
    switch (m) {
        case Method::Crude: return "crude";
        case Method::Decomposition: return "decomposition";
        case Method::ConditionalBigJump: return "cond_big_jump";
        case Method::ConditionalMid: return "cond_mid";
    }
    return "?";
}

Estimate make_indicator_estimate(std::int64_t hits, std::int64_t samples, double weight,
                                 std::uint64_t seed, double ci_level, Method method) {
    if (samples <= 0) throw std::invalid_argument("make_indicator_estimate: samples <= 0");
    if (!(ci_level > 0.0) || !(ci_level < 1.0))
        throw std::invalid_argument("make_indicator_estimate: ci_level outside (0, 1)");
    Estimate e;
    e.samples = samples;
    e.hits = hits;
    e.weight = weight;
    e.seed = seed;
    e.ci_level = ci_level;
    e.method = method;
    const double n = static_cast<double>(samples);
    const double phat = static_cast<double>(hits) / n;
    e.value = weight * phat;
    e.std_error = weight * std::sqrt(phat * (1.0 - phat) / n);
    if (hits == 0) {
        e.degenerate = true;
        e.ci_lo = 0.0;
        e.ci_hi = weight * wilson_upper_zero(samples, normal_quantile(ci_level));
        return e;
    }
    const double z = normal_quantile(0.5 + 0.5 * ci_level);
    const Interval iv = wilson_interval(hits, samples, z);
    e.ci_lo = weight * iv.lo;
    e.ci_hi = weight * iv.hi;
    return e;
}

namespace {

constexpr std::int64_t kChunkSize = 1 << 16;

int resolve_workers(int requested, std::int64_t chunks) {
    int w = requested > 0 ? requested
                          : static_cast<int>(std::thread::hardware_concurrency());
    if (w < 1) w = 1;
    if (static_cast<std::int64_t>(w) > chunks) w = static_cast<int>(chunks);
    return w;
}

// Runs `kernel(chunk_index, chunk_samples)` over the fixed chunk grid and
// returns the per-chunk results indexed by chunk. The kernel must derive all
// randomness from RandomStream(seed, chunk_index); scheduling order is the
// only thing workers influence, and it never reaches the results.
template <typename Counts, typename Kernel>
std::vector<Counts> run_chunks(std::int64_t samples, int workers, Kernel kernel) {
    const std::int64_t chunks = (samples + kChunkSize - 1) / kChunkSize;
    std::vector<Counts> results(static_cast<std::size_t>(chunks));
    auto run_one = [&](std::int64_t k) {
        const std::int64_t begin = k * kChunkSize;
        const std::int64_t count = std::min(kChunkSize, samples - begin);
        results[static_cast<std::size_t>(k)] = kernel(static_cast<std::uint64_t>(k), count);
    };
    const int nw = resolve_workers(workers, chunks);
    if (nw <= 1) {
        for (std::int64_t k = 0; k < chunks; ++k) run_one(k);
        return results;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nw));
    for (int t = 0; t < nw; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::int64_t k = next.fetch_add(1);
                if (k >= chunks) return;
                run_one(k);
            }
        });
    }
    for (auto& th : pool) th.join();
    return results;
}

void require_samples(const McOptions& opts) {
    if (opts.samples < 1000)
        throw std::invalid_argument("estimator: samples must be >= 1000");
}

struct CrudeCounts {
    std::int64_t hits = 0;
};

struct DecompCounts {
    std::array<std::int64_t, kNumEventClasses> per_class{};
    std::int64_t exceed = 0;
};

struct CondCounts {
    std::int64_t plain = 0;
    std::int64_t refined = 0;
};

} // namespace

Estimate estimate_crude(const TailModel& model, const EventParams& params,
                        const McOptions& opts) {
    require_samples(opts);
    const std::size_t n = static_cast<std::size_t>(params.n);
    auto kernel = [&](std::uint64_t chunk, std::int64_t count) {
        RandomStream rng(opts.seed, chunk);
        std::vector<double> buf(n);
        CrudeCounts c;
        for (std::int64_t i = 0; i < count; ++i) {
            for (auto& v : buf) v = model.sample_value(rng);
            if (sum_left_to_right(buf) > params.x) ++c.hits;
        }
        return c;
    };
    std::int64_t hits = 0;
    for (const auto& c : run_chunks<CrudeCounts>(opts.samples, opts.workers, kernel))
        hits += c.hits;
    return make_indicator_estimate(hits, opts.samples, 1.0, opts.seed, opts.ci_level,
                                   Method::Crude);
}

Decomposition estimate_decomposition(const TailModel& model, const EventParams& params,
                                     const McOptions& opts) {
    require_samples(opts);
    const std::size_t n = static_cast<std::size_t>(params.n);
    auto kernel = [&](std::uint64_t chunk, std::int64_t count) {
        RandomStream rng(opts.seed, chunk);
        std::vector<double> buf(n);
        DecompCounts c;
        for (std::int64_t i = 0; i < count; ++i) {
            for (auto& v : buf) v = model.sample_value(rng);
            const double s = sum_left_to_right(buf);
            if (!(s > params.x)) continue;
            const Classification cl = classify_with_sum(buf, params, s);
            ++c.per_class[static_cast<std::size_t>(cl.cls)];
            ++c.exceed;
        }
        return c;
    };
    DecompCounts sum;
    for (const auto& c : run_chunks<DecompCounts>(opts.samples, opts.workers, kernel)) {
        for (std::size_t k = 0; k < kNumEventClasses; ++k) sum.per_class[k] += c.per_class[k];
        sum.exceed += c.exceed;
    }
    Decomposition out;
    for (std::size_t k = 0; k < kNumEventClasses; ++k)
        out.terms[k] = make_indicator_estimate(sum.per_class[k], opts.samples, 1.0, opts.seed,
                                               opts.ci_level, Method::Decomposition);
    out.total = make_indicator_estimate(sum.exceed, opts.samples, 1.0, opts.seed,
                                        opts.ci_level, Method::Decomposition);
    return out;
}

namespace {

// Shared kernel of the conditional one-big estimators. The designated
// coordinate is X_1 by exchangeability; sign -1 negates the conditional
// tail draw. Counts both the plain indicator and, for sign +, the refined
// one on the same replicate.
OneBigRefined one_big_impl(const TailModel& model, const EventParams& params, double sign,
                           const McOptions& opts) {
    require_samples(opts);
    const double tail_x = model.tail(params.x);
    if (!(tail_x > 0.0)) {  // impossible for these families; guard anyway
        Estimate zero = make_indicator_estimate(0, opts.samples, 0.0, opts.seed,
                                                opts.ci_level, Method::ConditionalBigJump);
        zero.degenerate = true;
        return {zero, zero};
    }
    const double weight = static_cast<double>(params.n) * tail_x;
    const double cx = params.big_threshold();
    const double bx = params.residual_bound();
    const int rest = params.n - 1;
    auto kernel = [&](std::uint64_t chunk, std::int64_t count) {
        RandomStream rng(opts.seed, chunk);
        CondCounts c;
        for (std::int64_t i = 0; i < count; ++i) {
            const double x1 = sign * model.quantile_tail(rng.next_unit_oo() * tail_x);
            double s = x1;
            double max_abs = 0.0;
            for (int j = 0; j < rest; ++j) {
                const double v = model.sample_value(rng);
                s += v;
                max_abs = std::max(max_abs, std::abs(v));
            }
            if (s > params.x && max_abs <= cx) {
                ++c.plain;
                if (std::abs(s - x1) <= bx) ++c.refined;
            }
        }
        return c;
    };
    CondCounts sum;
    for (const auto& c : run_chunks<CondCounts>(opts.samples, opts.workers, kernel)) {
        sum.plain += c.plain;
        sum.refined += c.refined;
    }
    OneBigRefined out;
    out.one_big = make_indicator_estimate(sum.plain, opts.samples, weight, opts.seed,
                                          opts.ci_level, Method::ConditionalBigJump);
    out.refined = make_indicator_estimate(sum.refined, opts.samples, weight, opts.seed,
                                          opts.ci_level, Method::ConditionalBigJump);
    return out;
}

} // namespace

Estimate estimate_one_big(const TailModel& model, const EventParams& params, BigSign sign,
                          const McOptions& opts) {
    return one_big_impl(model, params, sign == BigSign::Positive ? 1.0 : -1.0, opts)
        .one_big;
}

OneBigRefined estimate_one_big_refined(const TailModel& model, const EventParams& params,
                                       const McOptions& opts) {
    return one_big_impl(model, params, 1.0, opts);
}

Estimate estimate_refined(const TailModel& model, const EventParams& params,
                          const McOptions& opts) {
    return one_big_impl(model, params, 1.0, opts).refined;
}

Estimate estimate_one_mid(const TailModel& model, const EventParams& params,
                          const McOptions& opts) {
    require_samples(opts);
    const double cx = params.big_threshold();
    const double tail_lo = model.tail(cx);
    const double tail_hi = model.tail(params.x);
    const double stratum = 2.0 * (tail_lo - tail_hi);  // P(cx < |X| <= x)
    if (!(stratum > 0.0)) {
        Estimate zero = make_indicator_estimate(0, opts.samples, 0.0, opts.seed,
                                                opts.ci_level, Method::ConditionalMid);
        zero.degenerate = true;
        return zero;
    }
    const double weight = static_cast<double>(params.n) * stratum;
    const int rest = params.n - 1;
    auto kernel = [&](std::uint64_t chunk, std::int64_t count) {
        RandomStream rng(opts.seed, chunk);
        CondCounts c;
        for (std::int64_t i = 0; i < count; ++i) {
            const double x1 = model.sample_band_conditional_value(cx, params.x, rng);
            double s = x1;
            double max_abs = 0.0;
            for (int j = 0; j < rest; ++j) {
                const double v = model.sample_value(rng);
                s += v;
                max_abs = std::max(max_abs, std::abs(v));
            }
            if (s > params.x && max_abs <= cx) ++c.plain;
        }
        return c;
    };
    std::int64_t hits = 0;
    for (const auto& c : run_chunks<CondCounts>(opts.samples, opts.workers, kernel))
        hits += c.plain;
    return make_indicator_estimate(hits, opts.samples, weight, opts.seed, opts.ci_level,
                                   Method::ConditionalMid);
}

} // namespace bigjump
