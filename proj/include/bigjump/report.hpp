#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace bigjump {

/// One output row: a sweep point crossed with an estimator or bound target.
struct ReportRow {
    double alpha = 0.0;
    std::string variant;
    int n = 0;
    double x = 0.0;
    double c = 0.0;
    double b = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;
    std::string method;   // crude | decomposition | cond_big_jump | cond_mid | analytic
    std::string target;   // which p-term, total, refined, or bound
    double value = 0.0;
    double std_error = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    double wall_time = 0.0;  // seconds; informational only, never compared
};

/// The documented CSV column list, in ReportRow field order.
extern const char* const kCsvHeader;

/// %.17g: enough digits for an exact double round trip.
std::string format_double(double v);

std::string to_csv(std::span<const ReportRow> rows);

/// Rows as an array of flat JSON objects with keys identical to the CSV
/// columns. Numbers round-trip bit-exactly.
nlohmann::json rows_to_json(std::span<const ReportRow> rows);

std::vector<ReportRow> rows_from_json(const nlohmann::json& arr);

/// CSV with the wall_time column blanked, for byte-identity comparisons.
std::string to_csv_without_wall_time(std::span<const ReportRow> rows);

} // namespace bigjump
