// bigjump: rare-event experiment runner for sums of symmetric heavy-tailed
// i.i.d. random variables. Estimates P(S_n > x), its five-way event
// decomposition, the refined one-big-jump probability, the analytic lemma
// bounds, and the scaling-regime ratios, with reproducible parallel sampling.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bigjump/experiment.hpp"

namespace {

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bigjump: single-big-jump rare-event simulation lab"};

    std::string config_path;
    double alpha = -1.0;
    std::string variant;
    double u0 = -1.0;
    int n = -1;
    std::vector<std::string> x_tokens;
    double c = -1.0, b = -1.0;
    std::int64_t samples = -1;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string estimators;
    double ci_level = -1.0;
    int workers = -1;
    std::string out_path;
    std::string format;

    app.add_option("--config", config_path, "JSON config file (flags override it)");
    app.add_option("--alpha", alpha, "tail index in (0, 2)");
    app.add_option("--variant", variant, "tail family: pure | smooth");
    app.add_option("--u0", u0, "scale / cutoff (> 0)");
    app.add_option("--n", n, "number of summands");
    app.add_option("--x", x_tokens,
                   "deviation level; repeatable; ranges as lo:hi:count or lo:hi:count-log");
    app.add_option("--c", c, "big-jump threshold fraction in (0, 1); default from the regime");
    app.add_option("--b", b, "residual-sum fraction in (0, 1); default = c");
    app.add_option("--samples", samples, "Monte Carlo sample budget per point (>= 1000)");
    auto* seed_opt = app.add_option("--seed", seed, "64-bit master seed");
    app.add_option("--estimators", estimators,
                   "comma list of: " + join(bigjump::kEstimatorNames, ","));
    app.add_option("--ci-level", ci_level, "confidence level for intervals, default 0.99");
    app.add_option("--workers", workers, "worker threads (0 = all cores)");
    app.add_option("--out", out_path, "output path (default: stdout)");
    app.add_option("--format", format, "csv | json");

    try {
        app.parse(argc, argv);
        seed_given = seed_opt->count() > 0;

        bigjump::ExperimentSpec spec;
        spec.estimators = {"crude"};
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw std::runtime_error("cannot open config file '" + config_path + "'");
            nlohmann::json j;
            in >> j;
            bigjump::apply_json(spec, j);
        }

        // Flags override the file.
        if (alpha >= 0.0) spec.alpha = alpha;
        if (!variant.empty()) spec.variant = bigjump::variant_from_string(variant);
        if (u0 >= 0.0) spec.u0 = u0;
        if (!x_tokens.empty()) {
            std::vector<double> xs;
            for (const auto& tok : x_tokens) {
                auto vals = bigjump::parse_x_values(tok);
                xs.insert(xs.end(), vals.begin(), vals.end());
            }
            const int nn = n > 0 ? n : (spec.sweep.empty() ? 1 : spec.sweep.front().n);
            spec.sweep.clear();
            for (double x : xs) spec.sweep.push_back({nn, x, {}, {}});
        } else if (n > 0) {
            for (auto& pt : spec.sweep) pt.n = n;
            if (spec.sweep.empty())
                throw std::invalid_argument("field 'x': --n given without --x or a config sweep");
        }
        if (c > 0.0)
            for (auto& pt : spec.sweep) pt.c = c;
        if (b > 0.0)
            for (auto& pt : spec.sweep) pt.b = b;
        if (samples > 0) spec.samples = samples;
        if (seed_given) spec.seed = seed;
        if (!estimators.empty()) spec.estimators = split_csv(estimators);
        if (ci_level > 0.0) spec.ci_level = ci_level;
        if (workers >= 0) spec.workers = workers;
        if (!out_path.empty()) spec.out = out_path;
        if (!format.empty()) spec.format = format;

        const std::vector<bigjump::ReportRow> rows = bigjump::run(spec);

        std::string payload;
        if (spec.format == "json") {
            payload = bigjump::report_document(spec, rows).dump(2);
            payload += '\n';
        } else {
            payload = bigjump::to_csv(rows);
        }
        if (spec.out.empty()) {
            std::cout << payload;
        } else {
            std::ofstream outf(spec.out, std::ios::binary);
            if (!outf) throw std::runtime_error("cannot write output path '" + spec.out + "'");
            outf << payload;
            if (!outf) throw std::runtime_error("write failed for output path '" + spec.out + "'");
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
