#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "bigjump/regime.hpp"

using namespace bigjump;

TEST_CASE("ratios: worked example") {
    EventParams p(10, 1000.0, 0.3, 0.3);
    const RegimeRatios r = ratios(1.0, p);
    CHECK(r.r1 == doctest::Approx(0.01).epsilon(1e-14));
    CHECK(r.r2 == doctest::Approx(0.01 / 0.09).epsilon(1e-12));
    CHECK(r.r3 == doctest::Approx(0.01 / (0.09 / 0.3)).epsilon(1e-12));
}

TEST_CASE("ratios: r3^2 = r1 r2 whenever b = c") {
    for (double alpha : {0.8, 1.0, 1.3, 1.9}) {
        for (double c : {0.1, 0.35, 0.8}) {
            EventParams p(7, 123.0, c, c);
            const RegimeRatios r = ratios(alpha, p);
            CHECK(r.r3 * r.r3 == doctest::Approx(r.r1 * r.r2).epsilon(1e-12));
        }
    }
}

TEST_CASE("ratios: boundary point r1 = 1 is representable") {
    EventParams p(1, 1.0, 0.5, 0.5);
    CHECK(ratios(1.0, p).r1 == 1.0);
}

TEST_CASE("ratios: invariance under x -> lambda x, n -> lambda^alpha n") {
    // alpha = 0.5, lambda = 4: lambda^alpha = 2
    EventParams p1(3, 10.0, 0.4, 0.4);
    EventParams p2(6, 40.0, 0.4, 0.4);
    CHECK(ratios(0.5, p1).r1 == doctest::Approx(ratios(0.5, p2).r1).epsilon(1e-14));
    // alpha = 1, lambda = 3
    EventParams q1(2, 7.0, 0.4, 0.4);
    EventParams q2(6, 21.0, 0.4, 0.4);
    CHECK(ratios(1.0, q1).r1 == doctest::Approx(ratios(1.0, q2).r1).epsilon(1e-14));
}

TEST_CASE("default_cb: worked example and induced ratios") {
    const ThresholdPair cb = default_cb(1.2, 10, 1000.0);
    CHECK(cb.c == cb.b);
    CHECK(cb.c == doctest::Approx(0.2873).epsilon(1e-3));

    const double r1 = 10.0 * std::pow(1000.0, -1.2);
    CHECK(r1 == doctest::Approx(2.512e-3).epsilon(1e-3));
    EventParams p(10, 1000.0, cb.c, cb.b);
    const RegimeRatios r = ratios(1.2, p);
    CHECK(r.r2 == doctest::Approx(std::sqrt(r1)).epsilon(1e-12));
    CHECK(r.r3 == doctest::Approx(std::pow(r1, 0.75)).epsilon(1e-12));
    CHECK(r.r2 == doctest::Approx(0.0501).epsilon(1e-2));
    CHECK(r.r3 == doctest::Approx(0.0112).epsilon(1e-2));
}

TEST_CASE("default_cb: clipping and the large-deviation guard") {
    // r1 = 0.9 -> raw c = 0.9^(1/4) ~ 0.974, clipped
    const ThresholdPair cb = default_cb(1.0, 9, 10.0);
    CHECK(cb.c == 0.9);
    CHECK(cb.b == 0.9);

    CHECK_THROWS_AS(default_cb(1.0, 10, 5.0), std::domain_error);   // r1 = 2
    CHECK_THROWS_AS(default_cb(1.0, 10, 10.0), std::domain_error);  // r1 = 1
}

TEST_CASE("default_cb output stays in (0, 0.9]") {
    for (double alpha : {0.8, 1.2, 1.9}) {
        for (double x : {2.0, 10.0, 1e3, 1e9}) {
            for (int n : {1, 5}) {
                if (!(n * std::pow(x, -alpha) < 1.0)) continue;
                const ThresholdPair cb = default_cb(alpha, n, x);
                CHECK(cb.c > 0.0);
                CHECK(cb.c <= 0.9);
            }
        }
    }
}

TEST_CASE("sequence: worked example, ratios strictly decreasing") {
    const std::vector<double> grid = {100.0, 316.22776601683796, 1000.0};
    const auto seq = sequence(1.0, 5, grid);
    REQUIRE(seq.size() == 3);
    CHECK(seq[0].ratios.r1 == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(seq[1].ratios.r1 == doctest::Approx(0.0158).epsilon(1e-3));
    CHECK(seq[2].ratios.r1 == doctest::Approx(0.005).epsilon(1e-12));
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        CHECK(seq[i].ratios.r1 > seq[i + 1].ratios.r1);
        CHECK(seq[i].ratios.r2 > seq[i + 1].ratios.r2);
        CHECK(seq[i].ratios.r3 > seq[i + 1].ratios.r3);
    }
}

TEST_CASE("sequence: rejection diagnostics") {
    const std::vector<double> bad_order = {100.0, 100.0};
    CHECK_THROWS_AS(sequence(1.0, 5, bad_order), std::invalid_argument);

    const std::vector<double> out_of_regime = {2.0, 4.0};  // r1 = 2.5, 1.25 at n=5
    CHECK_THROWS_AS(sequence(1.0, 5, out_of_regime), std::domain_error);

    CHECK_THROWS_AS(sequence(1.0, 5, std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("paired-grid sequence: fixed x with growing n is rejected at r1 >= 1") {
    const std::vector<int> ns = {2, 5, 20};
    const std::vector<double> xs = {10.0, 10.0, 10.0};
    // alpha = 1: r1 = {0.2, 0.5, 2.0} -> the last point leaves the regime
    CHECK_THROWS_AS(sequence(1.0, ns, xs), std::domain_error);

    const std::vector<int> ok_ns = {2, 5};
    const std::vector<double> ok_xs = {10.0, 10.0};
    const auto seq = sequence(1.0, ok_ns, ok_xs);
    REQUIRE(seq.size() == 2);
    CHECK(seq[0].params.n == 2);
    CHECK(seq[1].params.n == 5);
    CHECK(seq[1].ratios.r1 == doctest::Approx(0.5).epsilon(1e-14));

    const std::vector<int> mismatched = {1, 2, 3};
    CHECK_THROWS_AS(sequence(1.0, mismatched, ok_xs), std::invalid_argument);
}

TEST_CASE("sequence honors explicit overrides") {
    const std::vector<double> grid = {100.0, 1000.0};
    const auto seq = sequence(1.2, 4, grid, 0.25, 0.5);
    for (const auto& pt : seq) {
        CHECK(pt.params.c == 0.25);
        CHECK(pt.params.b == 0.5);
    }
    // c override only: b follows c
    const auto seq2 = sequence(1.2, 4, grid, 0.25, std::nullopt);
    for (const auto& pt : seq2) CHECK(pt.params.b == 0.25);
}

TEST_CASE("regime validity threshold") {
    EventParams good(1, 1000.0, 0.5, 0.5);
    CHECK(regime_valid(ratios(1.5, good), 0.2));
    EventParams bad(50, 100.0, 0.1, 0.1);
    CHECK_FALSE(regime_valid(ratios(1.5, bad), 0.2));
}
