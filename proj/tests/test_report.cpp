#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>
#include <vector>

#include "bigjump/report.hpp"

using namespace bigjump;

namespace {

ReportRow sample_row() {
    ReportRow r;
    r.alpha = 1.2;
    r.variant = "pure";
    r.n = 10;
    r.x = 316.22776601683796;
    r.c = 0.38312676877890316;
    r.b = r.c;
    r.r1 = 0.01;
    r.r2 = 0.1;
    r.r3 = 0.0316227766016838;
    r.method = "cond_big_jump";
    r.target = "p11p";
    r.value = 0.004730198712;
    r.std_error = 1.4e-6;
    r.ci_lo = 0.00472;
    r.ci_hi = 0.00474;
    r.samples = 10000000;
    r.seed = 987654321123456789ULL;
    r.wall_time = 1.25;
    return r;
}

} // namespace

TEST_CASE("CSV header is the documented column list, verbatim") {
    CHECK(std::string(kCsvHeader) ==
          "alpha,variant,n,x,c,b,r1,r2,r3,method,target,value,stderr,ci_lo,ci_hi,samples,"
          "seed,wall_time");
    const std::vector<ReportRow> rows = {sample_row()};
    const std::string csv = to_csv(rows);
    CHECK(csv.substr(0, csv.find('\n')) == kCsvHeader);
}

TEST_CASE("17-digit doubles round-trip exactly through CSV text") {
    const std::vector<double> tricky = {0.1,
                                        1.0 / 3.0,
                                        1e-300,
                                        0x1.fffffffffffffp-1,
                                        316.22776601683796,
                                        2.512e-3,
                                        -0.0,
                                        123456789.123456789};
    for (double v : tricky) {
        const std::string s = format_double(v);
        const double back = std::strtod(s.c_str(), nullptr);
        CHECK(back == v);
    }
}

TEST_CASE("JSON parse-back reproduces every field bit-exactly") {
    std::vector<ReportRow> rows = {sample_row()};
    rows.push_back(sample_row());
    rows[1].value = 1.0 / 7.0;
    rows[1].target = "refined";

    const nlohmann::json arr = rows_to_json(rows);
    const std::string text = arr.dump();
    const nlohmann::json parsed = nlohmann::json::parse(text);
    const std::vector<ReportRow> back = rows_from_json(parsed);

    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].alpha == rows[i].alpha);
        CHECK(back[i].variant == rows[i].variant);
        CHECK(back[i].n == rows[i].n);
        CHECK(back[i].x == rows[i].x);
        CHECK(back[i].c == rows[i].c);
        CHECK(back[i].b == rows[i].b);
        CHECK(back[i].r1 == rows[i].r1);
        CHECK(back[i].r2 == rows[i].r2);
        CHECK(back[i].r3 == rows[i].r3);
        CHECK(back[i].method == rows[i].method);
        CHECK(back[i].target == rows[i].target);
        CHECK(back[i].value == rows[i].value);
        CHECK(back[i].std_error == rows[i].std_error);
        CHECK(back[i].ci_lo == rows[i].ci_lo);
        CHECK(back[i].ci_hi == rows[i].ci_hi);
        CHECK(back[i].samples == rows[i].samples);
        CHECK(back[i].seed == rows[i].seed);
        CHECK(back[i].wall_time == rows[i].wall_time);
    }
}

TEST_CASE("wall_time is the only column dropped by the comparison form") {
    std::vector<ReportRow> rows = {sample_row()};
    const std::string full = to_csv(rows);
    ReportRow other = sample_row();
    other.wall_time = 99.0;
    const std::vector<ReportRow> rows2 = {other};
    CHECK(to_csv(rows) != to_csv(rows2));
    CHECK(to_csv_without_wall_time(rows) == to_csv_without_wall_time(rows2));
}
