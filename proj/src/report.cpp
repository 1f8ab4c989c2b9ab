#include "bigjump/report.hpp"

#include <cstdio>

namespace bigjump {

const char* const kCsvHeader =
    "alpha,variant,n,x,c,b,r1,r2,r3,method,target,value,stderr,ci_lo,ci_hi,samples,seed,"
    "wall_time";

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void append_row(std::string& out, const ReportRow& r, bool with_wall_time) {
    out += format_double(r.alpha);
    out += ',';
    out += r.variant;
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    out += format_double(r.x);
    out += ',';
    out += format_double(r.c);
    out += ',';
    out += format_double(r.b);
    out += ',';
    out += format_double(r.r1);
    out += ',';
    out += format_double(r.r2);
    out += ',';
    out += format_double(r.r3);
    out += ',';
    out += r.method;
    out += ',';
    out += r.target;
    out += ',';
    out += format_double(r.value);
    out += ',';
    out += format_double(r.std_error);
    out += ',';
    out += format_double(r.ci_lo);
    out += ',';
    out += format_double(r.ci_hi);
    out += ',';
    out += std::to_string(r.samples);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    if (with_wall_time) out += format_double(r.wall_time);
    out += '\n';
}

} // namespace

std::string to_csv(std::span<const ReportRow> rows) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& r : rows) append_row(out, r, true);
    return out;
}

std::string to_csv_without_wall_time(std::span<const ReportRow> rows) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& r : rows) append_row(out, r, false);
    return out;
}

nlohmann::json rows_to_json(std::span<const ReportRow> rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json o;
        o["alpha"] = r.alpha;
        o["variant"] = r.variant;
        o["n"] = r.n;
        o["x"] = r.x;
        o["c"] = r.c;
        o["b"] = r.b;
        o["r1"] = r.r1;
        o["r2"] = r.r2;
        o["r3"] = r.r3;
        o["method"] = r.method;
        o["target"] = r.target;
        o["value"] = r.value;
        o["stderr"] = r.std_error;
        o["ci_lo"] = r.ci_lo;
        o["ci_hi"] = r.ci_hi;
        o["samples"] = r.samples;
        o["seed"] = r.seed;
        o["wall_time"] = r.wall_time;
        arr.push_back(std::move(o));
    }
    return arr;
}

std::vector<ReportRow> rows_from_json(const nlohmann::json& arr) {
    std::vector<ReportRow> rows;
    rows.reserve(arr.size());
    for (const auto& o : arr) {
        ReportRow r;
        r.alpha = o.at("alpha").get<double>();
        r.variant = o.at("variant").get<std::string>();
        r.n = o.at("n").get<int>();
        r.x = o.at("x").get<double>();
        r.c = o.at("c").get<double>();
        r.b = o.at("b").get<double>();
        r.r1 = o.at("r1").get<double>();
        r.r2 = o.at("r2").get<double>();
        r.r3 = o.at("r3").get<double>();
        r.method = o.at("method").get<std::string>();
        r.target = o.at("target").get<std::string>();
        r.value = o.at("value").get<double>();
        r.std_error = o.at("stderr").get<double>();
        r.ci_lo = o.at("ci_lo").get<double>();
        r.ci_hi = o.at("ci_hi").get<double>();
        r.samples = o.at("samples").get<std::int64_t>();
        r.seed = o.at("seed").get<std::uint64_t>();
        r.wall_time = o.at("wall_time").get<double>();
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace bigjump
