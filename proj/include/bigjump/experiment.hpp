#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bigjump/regime.hpp"
#include "bigjump/report.hpp"
#include "bigjump/tail_model.hpp"

namespace bigjump {

struct SweepPoint {
    int n = 1;
    double x = 0.0;
    std::optional<double> c;  // default: regime::default_cb
    std::optional<double> b;  // default: the resolved c
};

/// A declarative experiment: one spec = one reproducible report.
struct ExperimentSpec {
    double alpha = 1.0;
    Variant variant = Variant::PurePareto;
    double u0 = 1.0;
    std::vector<SweepPoint> sweep;
    std::vector<std::string> estimators;  // subset of kEstimatorNames, in run order
    std::int64_t samples = 100000;
    std::uint64_t seed = 1;
    double ci_level = 0.99;
    int workers = 0;  // 0 = all hardware threads
    std::string out;  // empty = stdout
    std::string format = "csv";
    double regime_threshold = kDefaultRegimeThreshold;
};

extern const std::vector<std::string> kEstimatorNames;

/// Throws std::invalid_argument naming the offending field.
void validate(const ExperimentSpec& spec);

/// Executes the sweep: resolves (c, b), computes the regime ratios, runs the
/// requested estimators, and always evaluates the analytic bounds. Output is
/// deterministic given (spec, seed) for any worker count; only the wall_time
/// column varies. Points with r1 >= 1 are flagged on stderr and still run.
std::vector<ReportRow> run(const ExperimentSpec& spec);

/// "A:B:K" or "A:B:K-log": K points from A to B, linearly or log-spaced.
/// A plain number yields a single value.
std::vector<double> parse_x_values(const std::string& token);

ExperimentSpec spec_from_json(const nlohmann::json& j);
void apply_json(ExperimentSpec& spec, const nlohmann::json& j);
nlohmann::json spec_to_json(const ExperimentSpec& spec);

/// Full report document: rows plus a metadata block echoing the seed and
/// the resolved configuration.
nlohmann::json report_document(const ExperimentSpec& spec,
                               std::span<const ReportRow> rows);

} // namespace bigjump
