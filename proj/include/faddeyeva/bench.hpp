#pragma once

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "faddeyeva/evaluator.hpp"
#include "faddeyeva/regions.hpp"

namespace faddeyeva::bench {

inline constexpr std::uint64_t kDefaultSeed = 0x680f2025u;

/// Deterministic sample of points lying in the named region ("strip", "S",
/// "R", "Q") or anywhere in [0,30]^2 ("all").
inline std::vector<Complex> sample_points(const std::string& region, std::size_t n,
                                          std::uint64_t seed = kDefaultSeed,
                                          const TuningParams& p = default_params()) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Complex> pts;
    pts.reserve(n);
    if (region == "strip") {
        while (pts.size() < n) {
            const double x = p.strip_x_min + (p.strip_x_max - p.strip_x_min) * u(rng);
            const double y = p.strip_y_max * u(rng);
            pts.emplace_back(x, y);
        }
        return pts;
    }
    if (region == "all") {
        while (pts.size() < n) pts.emplace_back(30.0 * u(rng), 30.0 * u(rng));
        return pts;
    }
    RegionLabel want;
    if (region == "S") want = RegionLabel::S;
    else if (region == "R") want = RegionLabel::R;
    else if (region == "Q") want = RegionLabel::Q;
    else throw std::invalid_argument("bench: unknown region " + region);
    while (pts.size() < n) {
        const double x = 30.0 * u(rng);
        const double y = 30.0 * u(rng);
        if (classify(x, y, p, false) == want) pts.emplace_back(x, y);
    }
    return pts;
}

struct Timing {
    double median_ns;
    double p99_ns;
};

inline Timing run(const std::vector<Complex>& pts, bool remedy, int reps = 8,
                  const TuningParams& p = default_params()) {
    std::vector<double> per_eval;
    per_eval.reserve(pts.size());
    volatile double sink = 0.0;
    const EvalOptions opts{remedy};
    for (const Complex& z : pts) {
        const auto t0 = std::chrono::steady_clock::now();
        double acc = 0.0;
        for (int r = 0; r < reps; ++r) acc += w(z, p, opts).value.imag();
        const auto t1 = std::chrono::steady_clock::now();
        sink = sink + acc;
        per_eval.push_back(
            std::chrono::duration<double, std::nano>(t1 - t0).count() / reps);
    }
    std::sort(per_eval.begin(), per_eval.end());
    Timing t;
    t.median_ns = per_eval[per_eval.size() / 2];
    t.p99_ns = per_eval[std::min(per_eval.size() - 1,
                                 static_cast<std::size_t>(per_eval.size() * 0.99))];
    return t;
}

}  // namespace faddeyeva::bench
