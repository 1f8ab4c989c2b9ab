#include "bigjump/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "bigjump/bounds.hpp"
#include "bigjump/estimators.hpp"
#include "bigjump/regime.hpp"

namespace bigjump {

const std::vector<std::string> kEstimatorNames = {
    "crude", "decomposition", "one_big_pos", "one_big_neg", "one_mid", "refined"};

void validate(const ExperimentSpec& spec) {
    auto fail = [](const std::string& field, const std::string& why) {
        throw std::invalid_argument("field '" + field + "': " + why);
    };
    if (!(spec.alpha > 0.0) || !(spec.alpha < 2.0)) fail("alpha", "must lie in (0, 2)");
    if (!(spec.u0 > 0.0) || !std::isfinite(spec.u0)) fail("u0", "must be a positive real");
    if (spec.sweep.empty()) fail("sweep", "must contain at least one (n, x) point");
    for (const auto& pt : spec.sweep) {
        if (pt.n < 1) fail("sweep.n", "must be >= 1");
        if (!(pt.x > 0.0) || !std::isfinite(pt.x)) fail("sweep.x", "must be a positive real");
        if (pt.c && (!(*pt.c > 0.0) || !(*pt.c < 1.0))) fail("sweep.c", "must lie in (0, 1)");
        if (pt.b && (!(*pt.b > 0.0) || !(*pt.b < 1.0))) fail("sweep.b", "must lie in (0, 1)");
    }
    for (const auto& e : spec.estimators) {
        if (std::find(kEstimatorNames.begin(), kEstimatorNames.end(), e) ==
            kEstimatorNames.end())
            fail("estimators", "unknown estimator '" + e + "'");
    }
    if (spec.samples < 1000) fail("samples", "must be >= 1000");
    if (!(spec.ci_level > 0.0) || !(spec.ci_level < 1.0)) fail("ci_level", "must lie in (0, 1)");
    if (spec.workers < 0) fail("workers", "must be >= 0 (0 = auto)");
    if (spec.format != "csv" && spec.format != "json") fail("format", "must be csv or json");
    if (!(spec.regime_threshold > 0.0)) fail("regime_threshold", "must be positive");
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct RowFactory {
    const ExperimentSpec& spec;
    const EventParams& params;
    const RegimeRatios& rr;

    ReportRow base() const {
        ReportRow r;
        r.alpha = spec.alpha;
        r.variant = to_string(spec.variant);
        r.n = params.n;
        r.x = params.x;
        r.c = params.c;
        r.b = params.b;
        r.r1 = rr.r1;
        r.r2 = rr.r2;
        r.r3 = rr.r3;
        r.seed = spec.seed;
        return r;
    }

    ReportRow from_estimate(const Estimate& e, const std::string& target,
                            double wall) const {
        ReportRow r = base();
        r.method = to_string(e.method);
        r.target = target;
        r.value = e.value;
        r.std_error = e.std_error;
        r.ci_lo = e.ci_lo;
        r.ci_hi = e.ci_hi;
        r.samples = e.samples;
        r.wall_time = wall;
        return r;
    }

    ReportRow analytic(const std::string& target, double value, double wall) const {
        ReportRow r = base();
        r.method = "analytic";
        r.target = target;
        r.value = value;
        r.ci_lo = value;
        r.ci_hi = value;
        r.wall_time = wall;
        return r;
    }
};

} // namespace

std::vector<double> parse_x_values(const std::string& token) {
    const auto c1 = token.find(':');
    if (c1 == std::string::npos) {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size())
            throw std::invalid_argument("field 'x': cannot parse '" + token + "'");
        return {v};
    }
    const auto c2 = token.find(':', c1 + 1);
    if (c2 == std::string::npos)
        throw std::invalid_argument("field 'x': range needs lo:hi:count, got '" + token + "'");
    std::string count_part = token.substr(c2 + 1);
    bool log_spaced = false;
    if (count_part.size() > 4 && count_part.substr(count_part.size() - 4) == "-log") {
        log_spaced = true;
        count_part = count_part.substr(0, count_part.size() - 4);
    }
    const double lo = std::stod(token.substr(0, c1));
    const double hi = std::stod(token.substr(c1 + 1, c2 - c1 - 1));
    const long count = std::stol(count_part);
    if (count < 1) throw std::invalid_argument("field 'x': range count must be >= 1");
    if (count == 1) return {lo};
    if (!(lo < hi)) throw std::invalid_argument("field 'x': range needs lo < hi");
    if (log_spaced && !(lo > 0.0))
        throw std::invalid_argument("field 'x': log range needs lo > 0");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(count - 1);
        out.push_back(log_spaced ? lo * std::pow(hi / lo, t) : lo + t * (hi - lo));
    }
    return out;
}

std::vector<ReportRow> run(const ExperimentSpec& spec) {
    validate(spec);
    TailModel model(spec.alpha, spec.u0, spec.variant);
    McOptions mc;
    mc.samples = spec.samples;
    mc.seed = spec.seed;
    mc.ci_level = spec.ci_level;
    mc.workers = spec.workers;

    std::vector<ReportRow> rows;
    for (const auto& pt : spec.sweep) {
        const double r1 = static_cast<double>(pt.n) * std::pow(pt.x, -spec.alpha);
        double c;
        if (pt.c) {
            c = *pt.c;
        } else if (r1 < 1.0) {
            c = default_cb(spec.alpha, pt.n, pt.x).c;
        } else {
            c = 0.9;  // no valid default outside the large-deviation regime
            std::fprintf(stderr,
                         "bigjump: sweep point n=%d x=%g has r1=%g >= 1; using c=b=0.9\n",
                         pt.n, pt.x, r1);
        }
        const double b = pt.b ? *pt.b : c;
        EventParams params(pt.n, pt.x, c, b);
        const RegimeRatios rr = ratios(spec.alpha, params);
        if (!regime_valid(rr, spec.regime_threshold)) {
            std::fprintf(stderr,
                         "bigjump: point n=%d x=%g outside regime threshold %g "
                         "(r1=%g r2=%g r3=%g); estimators still run\n",
                         pt.n, pt.x, spec.regime_threshold, rr.r1, rr.r2, rr.r3);
        }
        RowFactory rf{spec, params, rr};

        for (const auto& name : spec.estimators) {
            const auto t0 = std::chrono::steady_clock::now();
            if (name == "crude") {
                const Estimate e = estimate_crude(model, params, mc);
                rows.push_back(rf.from_estimate(e, "total", seconds_since(t0)));
            } else if (name == "decomposition") {
                const Decomposition d = estimate_decomposition(model, params, mc);
                const double wall = seconds_since(t0);
                for (std::size_t k = 0; k < kNumEventClasses; ++k)
                    rows.push_back(rf.from_estimate(
                        d.terms[k], to_string(static_cast<EventClass>(k)), wall));
                rows.push_back(rf.from_estimate(d.total, "total", wall));
            } else if (name == "one_big_pos") {
                const Estimate e = estimate_one_big(model, params, BigSign::Positive, mc);
                rows.push_back(rf.from_estimate(e, "p11p", seconds_since(t0)));
            } else if (name == "one_big_neg") {
                const Estimate e = estimate_one_big(model, params, BigSign::Negative, mc);
                rows.push_back(rf.from_estimate(e, "p11m", seconds_since(t0)));
            } else if (name == "one_mid") {
                const Estimate e = estimate_one_mid(model, params, mc);
                rows.push_back(rf.from_estimate(e, "p10", seconds_since(t0)));
            } else if (name == "refined") {
                const Estimate e = estimate_refined(model, params, mc);
                rows.push_back(rf.from_estimate(e, "refined", seconds_since(t0)));
            }
        }

        // Bounds are cheap; always emitted.
        const auto t0 = std::chrono::steady_clock::now();
        const LemmaBounds lb = all_bounds(model, params);
        const double wall = seconds_since(t0);
        rows.push_back(rf.analytic("feller_lower", lb.feller_lower, wall));
        rows.push_back(rf.analytic("p0_upper", lb.p0_upper, wall));
        rows.push_back(rf.analytic("pge2_upper", lb.pge2_upper, wall));
        rows.push_back(rf.analytic("u_x", lb.p10_upper_I.u_x, wall));
        rows.push_back(rf.analytic("p10_I1", lb.p10_upper_I.i1, wall));
        rows.push_back(rf.analytic("p10_I2", lb.p10_upper_I.i2, wall));
        rows.push_back(rf.analytic("p10_I3", lb.p10_upper_I.i3, wall));
        rows.push_back(rf.analytic("p10_I", lb.p10_upper_I.total, wall));
        rows.push_back(rf.analytic("p10_I2_relaxed", lb.p10_upper_I.i2_relaxed, wall));
        rows.push_back(rf.analytic("p11m_upper", lb.p11m_upper, wall));
        rows.push_back(rf.analytic("diff_upper", lb.diff_upper, wall));
    }
    return rows;
}

void apply_json(ExperimentSpec& spec, const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
    // Scalars first, then the sweep: an explicit "sweep" array wins over the
    // n/x/c/b convenience keys, and the convenience keys combine regardless
    // of the order they appear in the file.
    std::optional<int> conv_n;
    std::optional<std::vector<double>> conv_x;
    std::optional<double> conv_c, conv_b;
    std::optional<nlohmann::json> sweep_json;
    for (const auto& [key, val] : j.items()) {
        if (key == "alpha") {
            spec.alpha = val.get<double>();
        } else if (key == "variant") {
            spec.variant = variant_from_string(val.get<std::string>());
        } else if (key == "u0") {
            spec.u0 = val.get<double>();
        } else if (key == "sweep") {
            sweep_json = val;
        } else if (key == "n") {
            conv_n = val.get<int>();
        } else if (key == "x") {
            std::vector<double> xs;
            if (val.is_string()) {
                xs = parse_x_values(val.get<std::string>());
            } else if (val.is_array()) {
                for (const auto& v : val) xs.push_back(v.get<double>());
            } else {
                xs.push_back(val.get<double>());
            }
            conv_x = std::move(xs);
        } else if (key == "c") {
            conv_c = val.get<double>();
        } else if (key == "b") {
            conv_b = val.get<double>();
        } else if (key == "estimators") {
            spec.estimators.clear();
            for (const auto& v : val) spec.estimators.push_back(v.get<std::string>());
        } else if (key == "samples") {
            spec.samples = val.get<std::int64_t>();
        } else if (key == "seed") {
            spec.seed = val.get<std::uint64_t>();
        } else if (key == "ci_level") {
            spec.ci_level = val.get<double>();
        } else if (key == "workers") {
            spec.workers = val.get<int>();
        } else if (key == "out") {
            spec.out = val.get<std::string>();
        } else if (key == "format") {
            spec.format = val.get<std::string>();
        } else if (key == "regime_threshold") {
            spec.regime_threshold = val.get<double>();
        } else {
            throw std::invalid_argument("config: unknown field '" + key + "'");
        }
    }
    if (sweep_json) {
        spec.sweep.clear();
        for (const auto& p : *sweep_json) {
            SweepPoint pt;
            pt.n = p.at("n").get<int>();
            pt.x = p.at("x").get<double>();
            if (p.contains("c")) pt.c = p.at("c").get<double>();
            if (p.contains("b")) pt.b = p.at("b").get<double>();
            spec.sweep.push_back(pt);
        }
    } else if (conv_n || conv_x || conv_c || conv_b) {
        if (conv_x) {
            const int n = conv_n.value_or(spec.sweep.empty() ? 1 : spec.sweep.front().n);
            spec.sweep.clear();
            for (double x : *conv_x) spec.sweep.push_back({n, x, {}, {}});
        } else if (conv_n) {
            for (auto& pt : spec.sweep) pt.n = *conv_n;
            if (spec.sweep.empty())
                throw std::invalid_argument("config: field 'n' given without 'x' or 'sweep'");
        }
        for (auto& pt : spec.sweep) {
            if (conv_c) pt.c = *conv_c;
            if (conv_b) pt.b = *conv_b;
        }
    }
}

ExperimentSpec spec_from_json(const nlohmann::json& j) {
    ExperimentSpec spec;
    apply_json(spec, j);
    return spec;
}

nlohmann::json spec_to_json(const ExperimentSpec& spec) {
    nlohmann::json j;
    j["alpha"] = spec.alpha;
    j["variant"] = to_string(spec.variant);
    j["u0"] = spec.u0;
    nlohmann::json sweep = nlohmann::json::array();
    for (const auto& pt : spec.sweep) {
        nlohmann::json p;
        p["n"] = pt.n;
        p["x"] = pt.x;
        if (pt.c) p["c"] = *pt.c;
        if (pt.b) p["b"] = *pt.b;
        sweep.push_back(std::move(p));
    }
    j["sweep"] = std::move(sweep);
    j["estimators"] = spec.estimators;
    j["samples"] = spec.samples;
    j["seed"] = spec.seed;
    j["ci_level"] = spec.ci_level;
    j["workers"] = spec.workers;
    j["out"] = spec.out;
    j["format"] = spec.format;
    j["regime_threshold"] = spec.regime_threshold;
    return j;
}

nlohmann::json report_document(const ExperimentSpec& spec,
                               std::span<const ReportRow> rows) {
    nlohmann::json doc;
    doc["metadata"] = {{"seed", spec.seed}, {"config", spec_to_json(spec)}};
    doc["rows"] = rows_to_json(rows);
    return doc;
}

} // namespace bigjump
