#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigjump/quadrature.hpp"
#include "bigjump/rng.hpp"

namespace bigjump {

enum class Variant { PurePareto, SmoothPareto };

const char* to_string(Variant v);
Variant variant_from_string(const std::string& s);

/// Symmetric power-law distribution with tail index alpha in (0, 2) and
/// scale u0 > 0. Two exact families:
///
///   PurePareto:   f(u) = (alpha/2) u0^alpha |u|^(-1-alpha)       for |u| >= u0
///   SmoothPareto: f(u) = (alpha/2) u0^alpha (u0 + |u|)^(-1-alpha) everywhere
///
/// Everything (tail, quantile, truncated moments) is closed form, so Monte
/// Carlo estimators can be validated against exact values. Immutable after
/// construction; safe to share across threads.
class TailModel {
public:
    TailModel(double alpha, double u0, Variant variant)
        : alpha_(alpha), u0_(u0), variant_(variant) {
        if (!(alpha > 0.0) || !(alpha < 2.0))
            throw std::domain_error("TailModel: alpha must lie strictly in (0, 2)");
        if (!(u0 > 0.0) || !std::isfinite(u0))
            throw std::domain_error("TailModel: u0 must be a positive real");
        inv_alpha_ = 1.0 / alpha;
        u0a_ = std::pow(u0, alpha);
    }

    double alpha() const { return alpha_; }
    double u0() const { return u0_; }
    Variant variant() const { return variant_; }

    /// Smallest t for which conditioning on {X > t} is inside the support.
    double support_start() const {
        return variant_ == Variant::PurePareto ? u0_ : 0.0;
    }

    double pdf(double u) const {
        const double au = std::abs(u);
        if (variant_ == Variant::PurePareto) {
            if (au < u0_) return 0.0;
            return 0.5 * alpha_ * u0a_ * std::pow(au, -1.0 - alpha_);
        }
        return 0.5 * alpha_ * u0a_ * std::pow(u0_ + au, -1.0 - alpha_);
    }

    /// P(X > u), total on the reals.
    double tail(double u) const {
        if (u < 0.0) return 1.0 - tail(-u);
        if (variant_ == Variant::PurePareto)
            return u <= u0_ ? 0.5 : 0.5 * std::pow(u / u0_, -alpha_);
        return 0.5 * std::pow(u0_ / (u0_ + u), alpha_);
    }

    double cdf(double u) const { return 1.0 - tail(u); }

    /// Inverse of tail() on the positive half: the u with tail(u) = p.
    double quantile_tail(double p) const {
        if (!(p > 0.0) || !(p <= 0.5))
            throw std::domain_error("quantile_tail: p must lie in (0, 0.5]");
        if (variant_ == Variant::PurePareto)
            return u0_ * std::pow(2.0 * p, -inv_alpha_);
        return u0_ * (std::pow(2.0 * p, -inv_alpha_) - 1.0);
    }

    /// E[X^2 1(|X| <= T)], closed form for both variants.
    double truncated_second_moment(double T) const {
        if (!(T >= 0.0)) throw std::domain_error("truncated_second_moment: T must be >= 0");
        if (variant_ == Variant::PurePareto) {
            if (T <= u0_) return 0.0;
            return alpha_ * u0a_ * power_integral(u0_, T, 1.0 - alpha_);
        }
        if (T == 0.0) return 0.0;
        // 2 int_0^T u^2 f equals alpha u0^a int_{u0}^{u0+T} (w - u0)^2 w^(-1-a) dw
        const double hi = u0_ + T;
        return alpha_ * u0a_ *
               (power_integral(u0_, hi, 1.0 - alpha_) -
                2.0 * u0_ * power_integral(u0_, hi, -alpha_) +
                u0_ * u0_ * power_integral(u0_, hi, -1.0 - alpha_));
    }

    /// One i.i.d. draw by inversion: a uniform sign and a magnitude from
    /// quantile_tail of a uniform on (0, 1/2]. Pure function of the stream.
    double sample_value(RandomStream& rng) const {
        const double sign = rng.next_bool() ? 1.0 : -1.0;
        const double p = 0.5 * rng.next_unit_open();
        return sign * quantile_tail(p);
    }

    std::vector<double> sample(RandomStream& rng, std::int64_t count) const {
        if (count < 1) throw std::invalid_argument("sample: count must be >= 1");
        std::vector<double> out(static_cast<std::size_t>(count));
        for (auto& v : out) v = sample_value(rng);
        return out;
    }

    /// One draw from law(X | X > t), by inversion of tail(u)/tail(t).
    double sample_tail_conditional_value(double t, RandomStream& rng) const {
        if (!(t >= support_start()))
            throw std::domain_error("sample_tail_conditional: t below the support");
        return quantile_tail(rng.next_unit_oo() * tail(t));
    }

    std::vector<double> sample_tail_conditional(double t, RandomStream& rng,
                                                std::int64_t count) const {
        if (count < 1) throw std::invalid_argument("sample_tail_conditional: count must be >= 1");
        std::vector<double> out(static_cast<std::size_t>(count));
        for (auto& v : out) v = sample_tail_conditional_value(t, rng);
        return out;
    }

    /// One draw from law(X | lo < |X| <= hi): symmetric sign, magnitude by
    /// inversion on the stratum.
    double sample_band_conditional_value(double lo, double hi, RandomStream& rng) const {
        if (!(lo >= 0.0) || !(hi > lo))
            throw std::domain_error("sample_band_conditional: need 0 <= lo < hi");
        const double tl = tail(lo);
        const double th = tail(hi);
        if (!(tl > th)) throw std::domain_error("sample_band_conditional: empty magnitude band");
        const double sign = rng.next_bool() ? 1.0 : -1.0;
        const double tau = th + rng.next_unit_oo() * (tl - th);
        return sign * quantile_tail(tau);
    }

private:
    double alpha_;
    double u0_;
    Variant variant_;
    double inv_alpha_;
    double u0a_;  // u0^alpha
};

} // namespace bigjump
