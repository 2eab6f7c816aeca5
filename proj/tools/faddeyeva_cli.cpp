// Command-line front end: point evaluation, grid sweeps with reference
// columns, region maps (CSV/PGM) and remedy-on/off benchmarks.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "faddeyeva/bench.hpp"
#include "faddeyeva/evaluator.hpp"
#include "faddeyeva/gridio.hpp"
#include "faddeyeva/oracle.hpp"
#include "faddeyeva/regions.hpp"
#include "faddeyeva/version.hpp"

namespace {

using faddeyeva::classify;
using faddeyeva::default_params;
using faddeyeva::EvalOptions;
using faddeyeva::RegionLabel;
using faddeyeva::Status;
using faddeyeva::to_string;
using faddeyeva::gridio::format_double;
using faddeyeva::gridio::GridOptions;
using faddeyeva::gridio::GridSpec;
using faddeyeva::gridio::Scale;

struct EvalArgs {
    double re = 0.0;
    double im = 0.0;
    bool no_remedy = false;
    std::string engine = "fast";
    std::string format = "text";
};

int run_eval(const EvalArgs& a) {
    const auto& params = default_params();
    if (a.engine == "oracle") {
        if (a.re < 0.0 || a.im < 0.0 || a.re > 30.0 || a.im > 30.0) {
            std::cerr << "eval: oracle engine supports the first quadrant up to 30+30i\n";
            return 1;
        }
        const auto ref = faddeyeva::oracle::w_ref({a.re, a.im});
        const RegionLabel region = classify(a.re, a.im, params, !a.no_remedy);
        if (a.format == "json") {
            nlohmann::json j;
            j["re"] = faddeyeva::oracle::to_decimal_string(ref.re);
            j["im"] = faddeyeva::oracle::to_decimal_string(ref.im);
            j["region"] = to_string(region);
            j["terms"] = 0;
            j["status"] = "ok";
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "value: " << faddeyeva::oracle::to_decimal_string(ref.re) << " + "
                      << faddeyeva::oracle::to_decimal_string(ref.im) << "i\n"
                      << "region: " << to_string(region) << "\nterms: 0\nstatus: ok\n";
        }
        return 0;
    }
    faddeyeva::EvalResult res;
    try {
        res = faddeyeva::w({a.re, a.im}, params, EvalOptions{!a.no_remedy});
    } catch (const std::invalid_argument& e) {
        std::cerr << "eval: " << e.what() << "\n";
        return 1;
    }
    const char* status = res.status == Status::ok ? "ok" : "overflow";
    if (a.format == "json") {
        nlohmann::json j;
        j["re"] = res.value.real();
        j["im"] = res.value.imag();
        j["region"] = to_string(res.region);
        j["terms"] = res.terms_used;
        j["status"] = status;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "value: " << format_double(res.value.real()) << " + "
                  << format_double(res.value.imag()) << "i\n"
                  << "region: " << to_string(res.region) << "\n"
                  << "terms: " << res.terms_used << "\n"
                  << "status: " << status << "\n";
    }
    return res.status == Status::ok ? 0 : 2;
}

struct GridArgs {
    GridSpec spec{};
    std::string x_scale = "linear";
    std::string y_scale = "linear";
    std::string out;
    std::string pgm;
    bool no_remedy = false;
    bool with_ref = false;
    int threads = 1;
    int digits = 25;
};

Scale parse_scale(const std::string& s) {
    return s == "log" ? Scale::log : Scale::linear;
}

void add_axis_options(CLI::App* cmd, GridArgs& g) {
    cmd->add_option("--x-min", g.spec.x_min)->required();
    cmd->add_option("--x-max", g.spec.x_max)->required();
    cmd->add_option("--x-points", g.spec.x_points)->required();
    cmd->add_option("--x-scale", g.x_scale, "linear|log")
        ->check(CLI::IsMember({"linear", "log"}));
    cmd->add_option("--y-min", g.spec.y_min)->required();
    cmd->add_option("--y-max", g.spec.y_max)->required();
    cmd->add_option("--y-points", g.spec.y_points)->required();
    cmd->add_option("--y-scale", g.y_scale, "linear|log")
        ->check(CLI::IsMember({"linear", "log"}));
}

int run_grid(GridArgs g) {
    try {
        g.spec.x_scale = parse_scale(g.x_scale);
        g.spec.y_scale = parse_scale(g.y_scale);
        GridOptions opts;
        opts.remedy = !g.no_remedy;
        opts.with_ref = g.with_ref;
        opts.threads = g.threads;
        opts.oracle_digits = g.digits;
        const auto rows = faddeyeva::gridio::run_grid(g.spec, opts);
        std::ofstream out(g.out, std::ios::binary);
        if (!out) {
            std::cerr << "grid: cannot open " << g.out << " for writing\n";
            return 1;
        }
        faddeyeva::gridio::write_csv(rows, g.with_ref, out);
        if (!out.flush()) {
            std::cerr << "grid: write failed for " << g.out << "\n";
            return 1;
        }
        const auto s = faddeyeva::gridio::summarize(rows);
        if (g.with_ref) {
            std::cout << "rows=" << s.rows << " max_relerr_mod=" << format_double(s.max_mod_rel)
                      << " at (x=" << format_double(s.mod_x) << ",y=" << format_double(s.mod_y)
                      << ") max_relerr_component=" << format_double(s.max_comp_rel) << " at (x="
                      << format_double(s.comp_x) << ",y=" << format_double(s.comp_y) << ")\n";
        } else {
            std::cout << "rows=" << s.rows << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "grid: " << e.what() << "\n";
        return 1;
    }
}

int run_regions_map(GridArgs g) {
    try {
        g.spec.x_scale = parse_scale(g.x_scale);
        g.spec.y_scale = parse_scale(g.y_scale);
        std::ofstream out(g.out, std::ios::binary);
        if (!out) {
            std::cerr << "regions-map: cannot open " << g.out << " for writing\n";
            return 1;
        }
        faddeyeva::gridio::write_regions_csv(g.spec, !g.no_remedy, out);
        if (!out.flush()) {
            std::cerr << "regions-map: write failed for " << g.out << "\n";
            return 1;
        }
        if (!g.pgm.empty()) {
            std::ofstream pgm(g.pgm, std::ios::binary);
            if (!pgm) {
                std::cerr << "regions-map: cannot open " << g.pgm << " for writing\n";
                return 1;
            }
            faddeyeva::gridio::write_regions_pgm(g.spec, !g.no_remedy, pgm);
            if (!pgm.flush()) {
                std::cerr << "regions-map: write failed for " << g.pgm << "\n";
                return 1;
            }
        }
        std::cout << "rows=" << static_cast<long>(g.spec.x_points) * g.spec.y_points << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "regions-map: " << e.what() << "\n";
        return 1;
    }
}

struct BenchArgs {
    std::string region = "strip";
    std::size_t samples = 100000;
    std::uint64_t seed = faddeyeva::bench::kDefaultSeed;
    int reps = 8;
};

int run_bench(const BenchArgs& b) {
    const auto pts = faddeyeva::bench::sample_points(b.region, b.samples, b.seed);
    const auto on = faddeyeva::bench::run(pts, true, b.reps);
    const auto off = faddeyeva::bench::run(pts, false, b.reps);
    std::printf("region=%s samples=%zu reps=%d\n", b.region.c_str(), pts.size(), b.reps);
    std::printf("remedy-on:  median=%.1f ns  p99=%.1f ns\n", on.median_ns, on.p99_ns);
    std::printf("remedy-off: median=%.1f ns  p99=%.1f ns\n", off.median_ns, off.p99_ns);
    std::printf("median ratio (off/on) = %.3f\n", off.median_ns / on.median_ns);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Faddeyeva function w(z): region-partitioned double-precision evaluator"};
    app.set_version_flag("--version", std::string("faddeyeva ") + faddeyeva::kVersion +
                                          " (tuning tables " + faddeyeva::kTuningTableVersion +
                                          ")");
    app.require_subcommand(1);

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate w(z) at one point");
    eval->add_option("--re", eval_args.re, "Real part of z")->required();
    eval->add_option("--im", eval_args.im, "Imaginary part of z")->required();
    eval->add_flag("--no-remedy", eval_args.no_remedy, "Disable the near-axis strip kernel");
    eval->add_option("--engine", eval_args.engine, "fast|oracle")
        ->check(CLI::IsMember({"fast", "oracle"}));
    eval->add_option("--format", eval_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    GridArgs grid_args;
    auto* grid = app.add_subcommand("grid", "Sweep a grid and write CSV");
    add_axis_options(grid, grid_args);
    grid->add_option("--out", grid_args.out, "Output CSV path")->required();
    grid->add_flag("--no-remedy", grid_args.no_remedy);
    grid->add_flag("--with-ref", grid_args.with_ref, "Add oracle columns and relative errors");
    grid->add_option("--threads", grid_args.threads, "Worker threads (output is order-stable)");
    grid->add_option("--digits", grid_args.digits, "Oracle digits (20..50)");

    GridArgs map_args;
    auto* rmap = app.add_subcommand("regions-map", "Write the region partition as CSV/PGM");
    add_axis_options(rmap, map_args);
    rmap->add_option("--out", map_args.out, "Output CSV path")->required();
    rmap->add_option("--pgm", map_args.pgm, "Optional PGM (P2) heatmap path");
    rmap->add_flag("--no-remedy", map_args.no_remedy);

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Time remedy-on vs remedy-off evaluation");
    bench->add_option("--region", bench_args.region, "strip|S|R|Q|all")
        ->check(CLI::IsMember({"strip", "S", "R", "Q", "all"}));
    bench->add_option("--samples", bench_args.samples, "Number of sample points");
    bench->add_option("--seed", bench_args.seed, "RNG seed");
    bench->add_option("--reps", bench_args.reps, "Evaluations per timed sample");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (eval->parsed()) return run_eval(eval_args);
    if (grid->parsed()) return run_grid(grid_args);
    if (rmap->parsed()) return run_regions_map(map_args);
    if (bench->parsed()) return run_bench(bench_args);
    return 1;
}
