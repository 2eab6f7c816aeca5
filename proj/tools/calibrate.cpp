// Calibration sweeps: verifies the committed tuning tables against the
// extended-precision oracle and reports worst-case errors per region, the
// minimal upward-Taylor depth over the strip, and Dawson branch accuracy.
// Run after touching any schedule knot or generated table.

#include <atomic>
#include <cstdlib>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "faddeyeva/dawson.hpp"
#include "faddeyeva/evaluator.hpp"
#include "faddeyeva/oracle.hpp"
#include "faddeyeva/regions.hpp"

using namespace faddeyeva;

namespace {

struct Worst {
    double err = 0.0;
    double x = 0.0;
    double y = 0.0;
};

void update(Worst& w, double err, double x, double y) {
    if (err > w.err) w = {err, x, y};
}

double comp_err(Complex v, const oracle::RefValue& ref) {
    const auto e = oracle::relerr(v, ref);
    return e.re_rel > e.im_rel ? e.re_rel : e.im_rel;
}

template <typename F>
void parallel_points(const std::vector<Complex>& pts, const F& f) {
    const unsigned n = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= pts.size()) return;
                f(i, pts[i]);
            }
        });
    }
    for (auto& th : pool) th.join();
}

void sweep_region(const char* name, const std::vector<Complex>& pts) {
    std::vector<double> errs(pts.size());
    parallel_points(pts, [&](std::size_t i, Complex z) {
        const auto ref = oracle::w_ref(z, 25);
        errs[i] = comp_err(w(z).value, ref);
    });
    Worst worst;
    for (std::size_t i = 0; i < pts.size(); ++i)
        update(worst, errs[i], pts[i].real(), pts[i].imag());
    std::printf("%-18s points=%zu worst componentwise=%.3e at (%.6g, %.6g)\n", name,
                pts.size(), worst.err, worst.x, worst.y);
}

std::vector<Complex> random_grid(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 30.0);
    std::vector<Complex> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = u(rng);
        const double y = u(rng);
        pts.emplace_back(x, y);
    }
    return pts;
}

std::vector<Complex> q_grid() {
    std::vector<Complex> pts;
    for (int i = 0; i <= 60; ++i) {
        const double r = 1.0 + 0.1 * i * i / 6.0;  // rho from 1 to 61
        for (int j = 0; j < 24; ++j) {
            const double th = (j + 0.5) * 1.5707963267948966 / 24;
            const double x = 6.3 * r * std::cos(th);
            const double y = 4.4 * r * std::sin(th);
            if (x > 30.0 || y > 30.0) continue;
            if (classify(x, y) != RegionLabel::Q) continue;
            pts.emplace_back(x, y);
        }
    }
    return pts;
}

std::vector<Complex> r_grid() {
    std::vector<Complex> pts;
    for (int i = 0; i <= 40; ++i) {
        const double r = 0.2921 + i * (0.9999 - 0.2921) / 40;
        for (int j = 0; j < 24; ++j) {
            const double th = (j + 0.5) * 1.5707963267948966 / 24;
            const double x = 6.3 * r * std::cos(th);
            const double y = 4.4 * r * std::sin(th);
            if (classify(x, y) != RegionLabel::R) continue;
            pts.emplace_back(x, y);
        }
    }
    return pts;
}

std::vector<Complex> band_grid() {
    // The near-axis band just above the strip, where the R/Q kernels must
    // already meet the global target on their own.
    std::vector<Complex> pts;
    for (int i = 0; i <= 90; ++i) {
        const double x = 1.85 + i * (20.0 - 1.85) / 90;
        for (int j = 0; j < 10; ++j) {
            const double y = 0.0317 * std::pow(0.25 / 0.0317, j / 9.0);
            pts.emplace_back(x, y);
        }
    }
    return pts;
}

std::vector<Complex> strip_grid(int nx, int ny) {
    std::vector<Complex> pts;
    const auto& p = default_params();
    for (int i = 0; i < nx; ++i) {
        const double x = p.strip_x_min + i * (p.strip_x_max - p.strip_x_min) / (nx - 1);
        for (int j = 0; j < ny; ++j) {
            const double y = 1e-20 * std::pow(p.strip_y_max / 1e-20, j / (ny - 1.0));
            pts.emplace_back(x, y);
        }
    }
    return pts;
}

Complex upward_with_degree(Complex z, int degree) {
    const TaylorCoeffs tc = taylor_coeffs(z.real(), degree);
    const Complex u(0.0, z.imag());
    Complex s = tc.c[degree];
    for (int n = degree - 1; n >= 0; --n) s = s * u + tc.c[n];
    return s;
}

void sweep_strip() {
    const auto pts = strip_grid(100, 25);
    std::vector<oracle::RefValue> refs(pts.size());
    parallel_points(pts, [&](std::size_t i, Complex z) { refs[i] = oracle::w_ref(z, 25); });
    for (int degree = 4; degree <= 9; ++degree) {
        Worst worst;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double e = comp_err(upward_with_degree(pts[i], degree), refs[i]);
            update(worst, e, pts[i].real(), pts[i].imag());
        }
        std::printf("strip degree=%d worst componentwise=%.3e at (%.6g, %.6g)%s\n", degree,
                    worst.err, worst.x, worst.y, worst.err <= 5e-13 ? "  <= 5e-13" : "");
    }
}

void sweep_dawson() {
    Worst worst;
    for (int i = 0; i < 4000; ++i) {
        const double x = 1e-8 * std::pow(100.0 / 1e-8, i / 3999.0);
        const auto ref = oracle::f_ref(x, 25);
        const double v = dawson(x);
        const double e = static_cast<double>(abs(oracle::BigFloat(v) - ref) / ref);
        update(worst, e, x, 0.0);
    }
    std::printf("dawson             points=4000 worst rel=%.3e at x=%.6g\n", worst.err, worst.x);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string which = argc > 1 ? argv[1] : "all";
    if (which == "q" || which == "all") sweep_region("region Q", q_grid());
    if (which == "r" || which == "all") sweep_region("region R", r_grid());
    if (which == "band" || which == "all") sweep_region("band above strip", band_grid());
    if (which == "strip" || which == "all") sweep_strip();
    if (which == "dawson" || which == "all") sweep_dawson();
    if (which == "random") {
        const std::size_t n = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 20000;
        const std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 1;
        sweep_region("random [0,30]^2", random_grid(n, seed));
    }
    return 0;
}
