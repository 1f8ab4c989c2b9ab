#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bigjump/bounds.hpp"
#include "bigjump/estimators.hpp"
#include "bigjump/regime.hpp"

using namespace bigjump;

namespace {

McOptions opts(std::int64_t samples, std::uint64_t seed, int workers = 0) {
    McOptions o;
    o.samples = samples;
    o.seed = seed;
    o.workers = workers;
    return o;
}

bool agree(const Estimate& a, const Estimate& b, double k = 4.0) {
    const double se = std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error);
    return std::abs(a.value - b.value) <= k * se;
}

} // namespace

TEST_CASE("sample budget precondition") {
    const TailModel m(1.0, 1.0, Variant::PurePareto);
    EventParams p(2, 10.0, 0.3, 0.3);
    CHECK_THROWS_AS(estimate_crude(m, p, opts(999, 1)), std::invalid_argument);
}

TEST_CASE("crude n=1 recovers the exact tail") {
    const TailModel m(1.0, 1.0, Variant::PurePareto);
    EventParams p(1, 4.0, 0.3, 0.3);
    const Estimate e = estimate_crude(m, p, opts(1000000, 313));
    CHECK(std::abs(e.value - 0.125) <= 4.0 * e.std_error);
    CHECK(e.ci_lo <= e.value);
    CHECK(e.value <= e.ci_hi);
    CHECK(e.method == Method::Crude);
}

TEST_CASE("crude n=2 agrees with the convolution oracle") {
    const TailModel m(1.0, 1.0, Variant::PurePareto);
    EventParams p(2, 20.0, 0.3, 0.3);
    const double truth = convolution_oracle(m, 2, 20.0);
    const Estimate e = estimate_crude(m, p, opts(1000000, 707));
    CHECK(std::abs(e.value - truth) <= 4.0 * e.std_error);
}

TEST_CASE("decomposition: partition identity is exact on the shared batch") {
    const TailModel m(1.0, 1.0, Variant::PurePareto);
    EventParams p(5, 20.0, 0.3, 0.3);
    const auto o = opts(200000, 99);
    const Decomposition d = estimate_decomposition(m, p, o);
    const Estimate crude = estimate_crude(m, p, o);

    std::int64_t count_sum = 0;
    for (const auto& t : d.terms) {
        count_sum += t.hits;
        // hits are recoverable from the reported value
        CHECK(static_cast<std::int64_t>(std::llround(t.value * static_cast<double>(t.samples))) ==
              t.hits);
    }
    CHECK(count_sum == d.total.hits);
    CHECK(d.total.hits == crude.hits);
    CHECK(d.total.value == crude.value);  // bit-exact: same counts, same division
}

TEST_CASE("decomposition: one-pos-big dominates at large x") {
    const TailModel m(1.0, 1.0, Variant::PurePareto);
    EventParams p(10, 100.0, 0.3, 0.3);
    const Decomposition d = estimate_decomposition(m, p, opts(1000000, 11));
    const double share =
        d.terms[static_cast<std::size_t>(EventClass::OnePosBig)].value / d.total.value;
    CHECK(share > 0.5);
}

TEST_CASE("decomposition: no-big-jump share decays along growing x") {
    const TailModel m(1.0, 1.0, Variant::PurePareto);
    double prev_share = 1.0;
    for (double x : {50.0, 100.0, 200.0}) {
        const auto cb = default_cb(1.0, 10, x);
        EventParams p(10, x, cb.c, cb.b);
        const Decomposition d = estimate_decomposition(m, p, opts(1000000, 17));
        const double share =
            d.terms[static_cast<std::size_t>(EventClass::ZeroBig)].value / d.total.value;
        CHECK(share < prev_share);
        prev_share = share;
    }
}

TEST_CASE("one-big estimator: n=1 degenerates to the exact tail") {
    const TailModel m(1.2, 1.0, Variant::PurePareto);
    EventParams p(1, 50.0, 0.3, 0.3);
    const Estimate e = estimate_one_big(m, p, BigSign::Positive, opts(1000, 1));
    CHECK(e.value == m.tail(50.0));  // indicator is identically 1
    CHECK(e.hits == e.samples);

    const Estimate neg = estimate_one_big(m, p, BigSign::Negative, opts(1000, 1));
    CHECK(neg.value == 0.0);  // S_1 > x impossible with X_1 < -x
    CHECK(neg.degenerate);
}

TEST_CASE("conditional estimators cross-validate against decomposition") {
    const TailModel m(1.0, 1.0, Variant::PurePareto);
    EventParams p(5, 50.0, 0.3, 0.3);
    const Decomposition d = estimate_decomposition(m, p, opts(1000000, 555));

    const Estimate big = estimate_one_big(m, p, BigSign::Positive, opts(1000000, 556));
    CHECK(agree(big, d.terms[static_cast<std::size_t>(EventClass::OnePosBig)]));

    const Estimate mid = estimate_one_mid(m, p, opts(1000000, 557));
    CHECK(agree(mid, d.terms[static_cast<std::size_t>(EventClass::OneMid)]));
}

TEST_CASE("unbiasedness at reachable scale across the parameter grid") {
    for (double alpha : {0.8, 1.0, 1.5}) {
        for (int n : {2, 5, 10}) {
            // x with r1 = n x^-alpha = 0.02, comfortably estimable
            const double x = std::pow(static_cast<double>(n) / 0.02, 1.0 / alpha);
            const auto cb = default_cb(alpha, n, x);
            const TailModel m(alpha, 1.0, Variant::PurePareto);
            EventParams p(n, x, cb.c, cb.b);
            const auto d = estimate_decomposition(m, p, opts(300000, 42));
            const auto big = estimate_one_big(m, p, BigSign::Positive, opts(300000, 43));
            const auto mid = estimate_one_mid(m, p, opts(300000, 44));
            CAPTURE(alpha);
            CAPTURE(n);
            CHECK(agree(big, d.terms[static_cast<std::size_t>(EventClass::OnePosBig)]));
            CHECK(agree(mid, d.terms[static_cast<std::size_t>(EventClass::OneMid)]));
        }
    }
}

TEST_CASE("refined nests inside one-big on the shared batch") {
    const TailModel m(1.2, 1.0, Variant::PurePareto);
    EventParams p(10, 100.0, 0.4, 0.4);
    const OneBigRefined pair = estimate_one_big_refined(m, p, opts(200000, 7));
    CHECK(pair.refined.hits <= pair.one_big.hits);
    CHECK(pair.refined.value <= pair.one_big.value);
}

TEST_CASE("refined is nondecreasing in b on a fixed batch") {
    const TailModel m(1.2, 1.0, Variant::PurePareto);
    std::int64_t prev_hits = -1;
    for (double b : {0.1, 0.3, 0.6, 0.9}) {
        EventParams p(10, 100.0, 0.4, b);
        const Estimate e = estimate_refined(m, p, opts(200000, 7));  // same seed
        CHECK(e.hits >= prev_hits);
        prev_hits = e.hits;
    }
}

TEST_CASE("negative big jumps are far rarer than positive ones") {
    const TailModel m(1.0, 1.0, Variant::PurePareto);
    EventParams p(5, 1000.0, 0.2, 0.2);
    const Estimate pos = estimate_one_big(m, p, BigSign::Positive, opts(1000000, 21));
    const Estimate neg = estimate_one_big(m, p, BigSign::Negative, opts(1000000, 22));
    CHECK(neg.value < 0.05 * pos.value);
}

TEST_CASE("one-mid weight and empty stratum") {
    const TailModel m(1.0, 1.0, Variant::PurePareto);
    EventParams p(5, 100.0, 0.3, 0.3);
    const Estimate e = estimate_one_mid(m, p, opts(1000, 3));
    const double stratum = 2.0 * (m.tail(30.0) - m.tail(100.0));  // 2(1/60 - 1/200)
    CHECK(e.weight == 5.0 * stratum);
    CHECK(stratum == doctest::Approx(2.0 * (1.0 / 60.0 - 1.0 / 200.0)).epsilon(1e-15));

    // x below the cutoff: tail(cx) = tail(x) = 1/2, the stratum is empty
    EventParams empty(5, 0.9, 0.5, 0.5);
    const Estimate z = estimate_one_mid(m, empty, opts(1000, 3));
    CHECK(z.value == 0.0);
    CHECK(z.degenerate);
}

TEST_CASE("difference between one-big and refined obeys the analytic bound") {
    const TailModel m(1.0, 1.0, Variant::PurePareto);
    EventParams p(5, 50.0, 0.3, 0.3);
    const OneBigRefined pair = estimate_one_big_refined(m, p, opts(1000000, 61));
    const double gap = pair.one_big.value - pair.refined.value;
    CHECK(gap <= diff_bound(m, p) + 4.0 * pair.one_big.std_error);
}

TEST_CASE("crude estimate dominates the Feller-type lower bound") {
    for (double alpha : {0.8, 1.0, 1.5}) {
        for (int n : {2, 5}) {
            const double x = std::pow(static_cast<double>(n) / 0.02, 1.0 / alpha);
            const TailModel m(alpha, 1.0, Variant::PurePareto);
            EventParams p(n, x, 0.3, 0.3);
            const Estimate e = estimate_crude(m, p, opts(200000, 88));
            CHECK(e.value >= feller_lower_bound(m, n, x) - 3.0 * e.std_error);
        }
    }
}

TEST_CASE("worker count never changes the result") {
    const TailModel m(1.2, 1.0, Variant::SmoothPareto);
    EventParams p(5, 50.0, 0.3, 0.3);
    const Estimate e1 = estimate_crude(m, p, opts(300000, 5, 1));
    const Estimate e4 = estimate_crude(m, p, opts(300000, 5, 4));
    CHECK(e1.value == e4.value);
    CHECK(e1.std_error == e4.std_error);
    CHECK(e1.hits == e4.hits);

    const Decomposition d1 = estimate_decomposition(m, p, opts(300000, 5, 1));
    const Decomposition d8 = estimate_decomposition(m, p, opts(300000, 5, 8));
    for (std::size_t k = 0; k < kNumEventClasses; ++k)
        CHECK(d1.terms[k].hits == d8.terms[k].hits);

    const Estimate b1 = estimate_one_big(m, p, BigSign::Positive, opts(300000, 5, 1));
    const Estimate b3 = estimate_one_big(m, p, BigSign::Positive, opts(300000, 5, 3));
    CHECK(b1.value == b3.value);
    CHECK(b1.hits == b3.hits);
}

TEST_CASE("degenerate zero-hit estimate carries a one-sided upper bound") {
    const TailModel m(1.5, 1.0, Variant::PurePareto);
    EventParams p(1, 1e9, 0.3, 0.3);  // tail ~ 1.6e-14, no hits at 10^4 samples
    const Estimate e = estimate_crude(m, p, opts(10000, 9));
    CHECK(e.hits == 0);
    CHECK(e.degenerate);
    CHECK(e.value == 0.0);
    CHECK(e.ci_hi > 0.0);
    CHECK(e.ci_hi < 1e-3);
}
