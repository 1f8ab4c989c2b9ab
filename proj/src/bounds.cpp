#include "bigjump/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bigjump/quadrature.hpp"

namespace bigjump {

double feller_lower_bound(const TailModel& model, int n, double x) {
    if (n < 1) throw std::domain_error("feller_lower_bound: n must be >= 1");
    if (!(x > 0.0)) throw std::domain_error("feller_lower_bound: x must be positive");
    return 0.25 * (-std::expm1(-2.0 * static_cast<double>(n) * model.tail(x)));
}

double p0_chebyshev_bound(const TailModel& model, const EventParams& params) {
    const double ey2 = model.truncated_second_moment(params.big_threshold());
    return std::min(1.0, static_cast<double>(params.n) * ey2 / (params.x * params.x));
}

double pge2_bound(const TailModel& model, const EventParams& params) {
    if (params.n < 2) return 0.0;
    const double pair_tail = 2.0 * model.tail(params.big_threshold());  // P(|X| > cx)
    const double pairs = 0.5 * static_cast<double>(params.n) *
                         static_cast<double>(params.n - 1);
    return std::min(1.0, pairs * pair_tail * pair_tail);
}

P10Integral p10_integral(const TailModel& model, const EventParams& params,
                         double rel_tol) {
    const double a = model.alpha();
    const double n = static_cast<double>(params.n);
    const double x = params.x;
    const double cx = params.big_threshold();
    P10Integral out;
    out.u_x = x - std::sqrt(n) * std::pow(cx, 1.0 - 0.5 * a);

    const double cap = n * std::pow(cx, 2.0 - a);
    auto g = [=](double u) {
        const double d = x - u;
        return n * std::pow(u, -1.0 - a) * std::min(1.0, cap / (d * d));
    };
    const double b1 = std::clamp(0.5 * x, cx, x);
    const double b2 = std::clamp(out.u_x, b1, x);
    QuadratureOptions opts;
    opts.rel_tol = rel_tol;
    if (b1 > cx) out.i1 = integrate(g, cx, b1, opts).value;
    if (b2 > b1) out.i2 = integrate(g, b1, b2, opts).value;
    if (x > b2) out.i3 = integrate(g, b2, x, opts).value;
    out.total = out.i1 + out.i2 + out.i3;
    out.i2_relaxed = std::pow(2.0, 1.0 + a) * std::pow(n, 1.5) * std::pow(x, -1.0 - a) *
                     std::pow(cx, 1.0 - 0.5 * a);
    return out;
}

double p11m_bound(const TailModel& model, const EventParams& params) {
    if (params.n < 2) return 0.0;
    const double ey2 = model.truncated_second_moment(params.big_threshold());
    const double cheb =
        std::min(1.0, static_cast<double>(params.n - 1) * ey2 / (params.x * params.x));
    return std::min(1.0, static_cast<double>(params.n) * model.tail(params.x) * cheb);
}

double diff_bound(const TailModel& model, const EventParams& params) {
    if (params.n < 2) return 0.0;
    const double ey2 = model.truncated_second_moment(params.big_threshold());
    const double bx = params.residual_bound();
    const double cheb = std::min(1.0, static_cast<double>(params.n - 1) * ey2 / (bx * bx));
    return std::min(1.0, static_cast<double>(params.n) * model.tail(params.x) * cheb);
}

double convolution_oracle(const TailModel& model, int n, double x, double rel_tol) {
    if (n == 1) return model.tail(x);
    if (n != 2)
        throw std::invalid_argument("convolution_oracle: only n in {1, 2} is supported");
    auto h = [&](double u) { return model.pdf(u) * model.tail(x - u); };
    const double u0 = model.u0();
    // Kinks: support edges of the density and of the shifted tail.
    std::vector<double> breaks = {-u0, 0.0, u0, 0.5 * x, x - u0, x, x + u0};
    QuadratureOptions opts;
    opts.rel_tol = rel_tol;
    return integrate_real_line(h, std::move(breaks), opts).value;
}

LemmaBounds all_bounds(const TailModel& model, const EventParams& params, double rel_tol) {
    LemmaBounds out;
    out.feller_lower = feller_lower_bound(model, params.n, params.x);
    out.p0_upper = p0_chebyshev_bound(model, params);
    out.pge2_upper = pge2_bound(model, params);
    out.p10_upper_I = p10_integral(model, params, rel_tol);
    out.p11m_upper = p11m_bound(model, params);
    out.diff_upper = diff_bound(model, params);
    return out;
}

} // namespace bigjump
