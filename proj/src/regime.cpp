#include "bigjump/regime.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bigjump {

RegimeRatios ratios(double alpha, const EventParams& params) {
    if (!(alpha > 0.0) || !(alpha < 2.0))
        throw std::domain_error("ratios: alpha must lie in (0, 2)");
    RegimeRatios r;
    r.r1 = static_cast<double>(params.n) * std::pow(params.x, -alpha);
    r.r2 = r.r1 / std::pow(params.c, 2.0 * alpha);
    r.r3 = r.r1 / (params.b * params.b * std::pow(params.c, alpha - 2.0));
    return r;
}

bool regime_valid(const RegimeRatios& r, double threshold) {
    return r.r1 < threshold && r.r2 < threshold && r.r3 < threshold;
}

ThresholdPair default_cb(double alpha, int n, double x) {
    if (!(alpha > 0.0) || !(alpha < 2.0))
        throw std::domain_error("default_cb: alpha must lie in (0, 2)");
    if (n < 1 || !(x > 0.0)) throw std::domain_error("default_cb: need n >= 1 and x > 0");
    const double r1 = static_cast<double>(n) * std::pow(x, -alpha);
    if (!(r1 < 1.0))
        throw std::domain_error("default_cb: r1 = " + std::to_string(r1) +
                                " >= 1, not in the large-deviation regime");
    const double c = std::min(0.9, std::pow(r1, 1.0 / (4.0 * alpha)));
    return {c, c};
}

namespace {

SequencePoint make_point(double alpha, int n, double x, std::optional<double> c_override,
                         std::optional<double> b_override) {
    const double r1 = static_cast<double>(n) * std::pow(x, -alpha);
    if (!(r1 < 1.0))
        throw std::domain_error("sequence: point n = " + std::to_string(n) +
                                ", x = " + std::to_string(x) + " has r1 = " +
                                std::to_string(r1) +
                                " >= 1 (outside the large-deviation regime)");
    ThresholdPair cb;
    if (c_override || b_override) {
        cb.c = c_override.value_or(default_cb(alpha, n, x).c);
        cb.b = b_override.value_or(cb.c);
    } else {
        cb = default_cb(alpha, n, x);
    }
    EventParams params(n, x, cb.c, cb.b);
    return {params, ratios(alpha, params)};
}

} // namespace

std::vector<SequencePoint> sequence(double alpha, int n, std::span<const double> x_grid,
                                    std::optional<double> c_override,
                                    std::optional<double> b_override) {
    if (x_grid.empty()) throw std::invalid_argument("sequence: empty x grid");
    for (std::size_t i = 0; i + 1 < x_grid.size(); ++i) {
        if (!(x_grid[i] < x_grid[i + 1]))
            throw std::invalid_argument("sequence: x grid must be strictly increasing");
    }
    std::vector<SequencePoint> out;
    out.reserve(x_grid.size());
    for (double x : x_grid) out.push_back(make_point(alpha, n, x, c_override, b_override));
    return out;
}

std::vector<SequencePoint> sequence(double alpha, std::span<const int> n_grid,
                                    std::span<const double> x_grid,
                                    std::optional<double> c_override,
                                    std::optional<double> b_override) {
    if (n_grid.size() != x_grid.size() || x_grid.empty())
        throw std::invalid_argument("sequence: n and x grids must pair up, nonempty");
    std::vector<SequencePoint> out;
    out.reserve(x_grid.size());
    for (std::size_t i = 0; i < x_grid.size(); ++i)
        out.push_back(make_point(alpha, n_grid[i], x_grid[i], c_override, b_override));
    return out;
}

} // namespace bigjump
