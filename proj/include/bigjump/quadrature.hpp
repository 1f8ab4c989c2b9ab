#pragma once

#include <functional>
#include <vector>

namespace bigjump {

struct QuadratureOptions {
    double rel_tol = 1e-8;
    double abs_tol = 0.0;
    int max_intervals = 4000;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;   // estimated absolute error
    int intervals = 0;
    bool converged = false;
};

/// Globally adaptive Gauss-Kronrod 7/15 on a finite interval [a, b].
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

/// Integral over [a, +inf), via the substitution u = a + t/(1-t).
QuadratureResult integrate_right_tail(const std::function<double(double)>& f, double a,
                                      const QuadratureOptions& opts = {});

/// Integral over (-inf, b], via the substitution u = b - t/(1-t).
QuadratureResult integrate_left_tail(const std::function<double(double)>& f, double b,
                                     const QuadratureOptions& opts = {});

/// Integral over the whole real line. `breakpoints` (at least one, sorted or
/// not) mark kinks or support edges; the finite pieces between consecutive
/// breakpoints are integrated separately from the two infinite tails.
QuadratureResult integrate_real_line(const std::function<double(double)>& f,
                                     std::vector<double> breakpoints,
                                     const QuadratureOptions& opts = {});

/// Exact integral of w^e over [a, b] for 0 < a <= b, stable for e near -1.
double power_integral(double a, double b, double e);

} // namespace bigjump
