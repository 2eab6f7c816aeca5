#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "faddeyeva/evaluator.hpp"
#include "faddeyeva/oracle.hpp"
#include "faddeyeva/regions.hpp"

namespace faddeyeva::gridio {

enum class Scale { linear, log };

struct GridSpec {
    double x_min;
    double x_max;
    int x_points;
    Scale x_scale;
    double y_min;
    double y_max;
    int y_points;
    Scale y_scale;
};

inline void validate(const GridSpec& s) {
    const auto check_axis = [](double lo, double hi, int n, Scale sc, const char* name) {
        if (n < 2) throw std::invalid_argument(std::string(name) + ": points must be >= 2");
        if (!(lo < hi)) throw std::invalid_argument(std::string(name) + ": min must be < max");
        if (sc == Scale::log && !(lo > 0.0))
            throw std::invalid_argument(std::string(name) + ": log scale requires min > 0");
    };
    check_axis(s.x_min, s.x_max, s.x_points, s.x_scale, "x axis");
    check_axis(s.y_min, s.y_max, s.y_points, s.y_scale, "y axis");
}

/// i-th grid coordinate; endpoints land exactly on min and max.
inline double axis_value(double lo, double hi, int n, Scale sc, int i) {
    if (i == 0) return lo;
    if (i == n - 1) return hi;
    if (sc == Scale::linear) return lo + (hi - lo) * (static_cast<double>(i) / (n - 1));
    return lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
}

struct GridRow {
    double x;
    double y;
    double re_w;
    double im_w;
    std::string re_ref;
    std::string im_ref;
    double relerr_re;
    double relerr_im;
    double relerr_mod;
    RegionLabel region;
    int terms;
};

struct GridOptions {
    bool remedy = true;
    bool with_ref = false;
    int threads = 1;
    int oracle_digits = 25;
};

/// Evaluates the grid in x-major order. Rows may be computed concurrently but
/// land in a preallocated vector, so the output order and bytes do not depend
/// on the thread count.
inline std::vector<GridRow> run_grid(const GridSpec& spec, const GridOptions& opts,
                                     const TuningParams& p = default_params()) {
    validate(spec);
    const std::size_t total = static_cast<std::size_t>(spec.x_points) * spec.y_points;
    std::vector<GridRow> rows(total);
    const auto cell = [&](std::size_t idx) {
        const int i = static_cast<int>(idx) / spec.y_points;
        const int j = static_cast<int>(idx) % spec.y_points;
        const double x = axis_value(spec.x_min, spec.x_max, spec.x_points, spec.x_scale, i);
        const double y = axis_value(spec.y_min, spec.y_max, spec.y_points, spec.y_scale, j);
        GridRow& row = rows[idx];
        row.x = x;
        row.y = y;
        const EvalResult res = w({x, y}, p, {opts.remedy});
        row.re_w = res.value.real();
        row.im_w = res.value.imag();
        row.region = res.region;
        row.terms = res.terms_used;
        row.relerr_re = row.relerr_im = row.relerr_mod = 0.0;
        if (opts.with_ref) {
            const oracle::RefValue ref = oracle::w_ref({x, y}, opts.oracle_digits);
            row.re_ref = oracle::to_decimal_string(ref.re);
            row.im_ref = oracle::to_decimal_string(ref.im);
            const oracle::RelErr e = oracle::relerr(res.value, ref);
            row.relerr_re = e.re_rel;
            row.relerr_im = e.im_rel;
            row.relerr_mod = e.mod_rel;
        }
    };
    const int nthreads = opts.threads > 1 ? opts.threads : 1;
    if (nthreads == 1) {
        for (std::size_t idx = 0; idx < total; ++idx) cell(idx);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t idx = t; idx < total; idx += nthreads) cell(idx);
            });
        }
        for (auto& th : pool) th.join();
    }
    return rows;
}

struct GridSummary {
    std::size_t rows = 0;
    double max_mod_rel = 0.0;
    double mod_x = 0.0;
    double mod_y = 0.0;
    double max_comp_rel = 0.0;
    double comp_x = 0.0;
    double comp_y = 0.0;
};

inline GridSummary summarize(const std::vector<GridRow>& rows) {
    GridSummary s;
    s.rows = rows.size();
    for (const auto& r : rows) {
        if (r.relerr_mod > s.max_mod_rel) {
            s.max_mod_rel = r.relerr_mod;
            s.mod_x = r.x;
            s.mod_y = r.y;
        }
        const double comp = r.relerr_re > r.relerr_im ? r.relerr_re : r.relerr_im;
        if (comp > s.max_comp_rel) {
            s.max_comp_rel = comp;
            s.comp_x = r.x;
            s.comp_y = r.y;
        }
    }
    return s;
}

/// Shortest decimal string that round-trips to the same double.
inline std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline constexpr const char* kGridCsvHeader =
    "x,y,re_w,im_w,re_ref,im_ref,relerr_re,relerr_im,relerr_mod,region,terms";

inline void write_csv(const std::vector<GridRow>& rows, bool with_ref, std::ostream& out) {
    out << kGridCsvHeader << '\n';
    for (const auto& r : rows) {
        out << format_double(r.x) << ',' << format_double(r.y) << ','
            << format_double(r.re_w) << ',' << format_double(r.im_w) << ',';
        if (with_ref) {
            out << r.re_ref << ',' << r.im_ref << ',' << format_double(r.relerr_re) << ','
                << format_double(r.relerr_im) << ',' << format_double(r.relerr_mod) << ',';
        } else {
            out << ",,,,,";
        }
        out << to_string(r.region) << ',' << r.terms << '\n';
    }
}

inline void write_regions_csv(const GridSpec& spec, bool remedy, std::ostream& out,
                              const TuningParams& p = default_params()) {
    validate(spec);
    out << "x,y,region\n";
    for (int i = 0; i < spec.x_points; ++i) {
        const double x = axis_value(spec.x_min, spec.x_max, spec.x_points, spec.x_scale, i);
        for (int j = 0; j < spec.y_points; ++j) {
            const double y = axis_value(spec.y_min, spec.y_max, spec.y_points, spec.y_scale, j);
            out << format_double(x) << ',' << format_double(y) << ','
                << to_string(classify(x, y, p, remedy)) << '\n';
        }
    }
}

inline int region_gray(RegionLabel r) {
    switch (r) {
        case RegionLabel::S: return 64;
        case RegionLabel::R: return 128;
        case RegionLabel::Q: return 192;
        case RegionLabel::RemedyStrip: return 255;
    }
    return 0;
}

/// 8-bit P2 heatmap of the partition; the top pixel row is the largest y.
inline void write_regions_pgm(const GridSpec& spec, bool remedy, std::ostream& out,
                              const TuningParams& p = default_params()) {
    validate(spec);
    out << "P2\n" << spec.x_points << ' ' << spec.y_points << "\n255\n";
    for (int j = spec.y_points - 1; j >= 0; --j) {
        const double y = axis_value(spec.y_min, spec.y_max, spec.y_points, spec.y_scale, j);
        for (int i = 0; i < spec.x_points; ++i) {
            const double x = axis_value(spec.x_min, spec.x_max, spec.x_points, spec.x_scale, i);
            if (i) out << ' ';
            out << region_gray(classify(x, y, p, remedy));
        }
        out << '\n';
    }
}

}  // namespace faddeyeva::gridio
