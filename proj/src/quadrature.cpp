#include "bigjump/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace bigjump {

namespace {

// 15-point Kronrod nodes on [-1, 1]; the odd-index nodes (plus the center)
// form the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

double safe_eval(const std::function<double(double)>& f, double u) {
    const double v = f(u);
    return std::isfinite(v) ? v : 0.0;
}

Segment gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = safe_eval(f, c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double f1 = safe_eval(f, c - h * kXgk[j]);
        const double f2 = safe_eval(f, c + h * kXgk[j]);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    Segment s;
    s.a = a;
    s.b = b;
    s.value = resk * h;
    s.error = std::abs(resk - resg) * std::abs(h);
    return s;
}

QuadratureResult adapt(const std::function<double(double)>& f, double a, double b,
                       const QuadratureOptions& opts) {
    QuadratureResult res;
    if (!(a < b)) {
        res.converged = true;
        return res;
    }
    std::priority_queue<Segment> heap;
    Segment whole = gk15(f, a, b);
    double total = whole.value;
    double err = whole.error;
    double stuck_err = 0.0;  // error on intervals too narrow to split further
    heap.push(whole);
    int n = 1;
    while (!heap.empty() &&
           err + stuck_err > std::max(opts.abs_tol, opts.rel_tol * std::abs(total)) &&
           n < opts.max_intervals) {
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            stuck_err += worst.error;
            err -= worst.error;
            continue;
        }
        Segment l = gk15(f, worst.a, mid);
        Segment r = gk15(f, mid, worst.b);
        total += l.value + r.value - worst.value;
        err += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
        ++n;
    }
    res.value = total;
    res.error = std::max(err, 0.0) + stuck_err;
    res.intervals = n;
    res.converged = res.error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
    return res;
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts) {
    return adapt(f, a, b, opts);
}

QuadratureResult integrate_right_tail(const std::function<double(double)>& f, double a,
                                      const QuadratureOptions& opts) {
    auto g = [&f, a](double t) {
        const double om = 1.0 - t;
        return f(a + t / om) / (om * om);
    };
    return adapt(g, 0.0, 1.0, opts);
}

QuadratureResult integrate_left_tail(const std::function<double(double)>& f, double b,
                                     const QuadratureOptions& opts) {
    auto g = [&f, b](double t) {
        const double om = 1.0 - t;
        return f(b - t / om) / (om * om);
    };
    return adapt(g, 0.0, 1.0, opts);
}

QuadratureResult integrate_real_line(const std::function<double(double)>& f,
                                     std::vector<double> breakpoints,
                                     const QuadratureOptions& opts) {
    if (breakpoints.empty())
        throw std::invalid_argument("integrate_real_line: need at least one breakpoint");
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

    QuadratureResult out;
    out.converged = true;
    auto absorb = [&out](const QuadratureResult& piece) {
        out.value += piece.value;
        out.error += piece.error;
        out.intervals += piece.intervals;
        out.converged = out.converged && piece.converged;
    };
    absorb(integrate_left_tail(f, breakpoints.front(), opts));
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        absorb(adapt(f, breakpoints[i], breakpoints[i + 1], opts));
    absorb(integrate_right_tail(f, breakpoints.back(), opts));
    return out;
}

double power_integral(double a, double b, double e) {
    if (!(a > 0.0) || !(b >= a))
        throw std::domain_error("power_integral: need 0 < a <= b");
    if (a == b) return 0.0;
    const double p = e + 1.0;
    if (p == 0.0) return std::log(b / a);
    // a^p * expm1(p log(b/a)) / p, stable when p log(b/a) is small
    return std::pow(a, p) * std::expm1(p * std::log(b / a)) / p;
}

} // namespace bigjump
