#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>

namespace faddeyeva {

/// Region of the first-quadrant partition a point evaluates in.
enum class RegionLabel { S, R, Q, RemedyStrip };

inline const char* to_string(RegionLabel r) {
    switch (r) {
        case RegionLabel::S: return "S";
        case RegionLabel::R: return "R";
        case RegionLabel::Q: return "Q";
        case RegionLabel::RemedyStrip: return "RemedyStrip";
    }
    return "?";
}

/// One knot of a clamped piecewise-linear schedule over rho.
struct ScheduleKnot {
    double rho;
    double value;
};

namespace detail {

// Continued-fraction depth for the outer region, sampled from the calibrated
// depth curve. Clamped to [3, 16] by nu_for; below rho = 1 the same table
// carries on as the recursion start of the downward-Taylor scheme.
inline constexpr ScheduleKnot kNuKnots[] = {
    {0.292, 40.87},  {0.35, 40.36},  {0.40, 39.83},  {0.45, 39.22},
    {0.50, 38.52},   {0.55, 37.71},  {0.60, 36.80},  {0.65, 35.76},
    {0.70, 34.57},   {0.75, 33.20},  {0.80, 31.60},  {0.85, 29.70},
    {0.90, 27.33},   {0.925, 25.88}, {0.95, 24.12},  {0.97, 22.32},
    {0.985, 20.49},  {0.995, 18.60}, {1.0, 17.0},    {1.25, 16.17},
    {1.5, 15.43},    {2.0, 14.18},   {2.5, 13.15},   {3.0, 12.30},
    {4.0, 10.97},    {5.0, 9.97},    {7.0, 8.57},    {10.0, 7.28},
    {15.0, 6.09},    {25.0, 4.98},   {50.0, 4.05},   {100.0, 3.54},
    {200.0, 3.27},
};

// Shift of the downward-Taylor recurrence. Zero at and beyond the outer
// contour, where the plain continued fraction takes over.
inline constexpr ScheduleKnot kShiftKnots[] = {
    {0.292, 1.7981}, {0.35, 1.7611}, {0.40, 1.7230}, {0.45, 1.6789},
    {0.50, 1.6281},  {0.55, 1.5701}, {0.60, 1.5040}, {0.65, 1.4287},
    {0.70, 1.3426},  {0.75, 1.2435}, {0.80, 1.1280}, {0.85, 0.9904},
    {0.90, 0.8195},  {0.925, 0.7143},{0.95, 0.5870}, {0.97, 0.4570},
    {0.985, 0.3244}, {0.995, 0.1878},{1.0, 0.0},
};

// Number of resummed Taylor terms of the downward scheme.
inline constexpr ScheduleKnot kKapnKnots[] = {
    {0.292, 39.52}, {0.35, 38.85}, {0.40, 38.16}, {0.45, 37.36},
    {0.50, 36.44},  {0.55, 35.40}, {0.60, 34.20}, {0.65, 32.84},
    {0.70, 31.28},  {0.75, 29.49}, {0.80, 27.40}, {0.85, 24.91},
    {0.90, 21.82},  {0.925, 19.92},{0.95, 17.62}, {0.97, 15.27},
    {0.985, 12.87}, {0.995, 10.40},{1.0, 7.0},
};

inline double interpolate(std::span<const ScheduleKnot> knots, double rho) {
    if (rho <= knots.front().rho) return knots.front().value;
    if (rho >= knots.back().rho) return knots.back().value;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        if (rho <= knots[i + 1].rho) {
            const double t = (rho - knots[i].rho) / (knots[i + 1].rho - knots[i].rho);
            return knots[i].value + t * (knots[i + 1].value - knots[i].value);
        }
    }
    return knots.back().value;
}

}  // namespace detail

/// Region constants and the calibrated term-count schedules. All constants
/// are exact decimal literals; the schedules are clamped piecewise-linear
/// functions of rho committed by the calibration sweep.
struct TuningParams {
    double x0 = 6.3;
    double y0 = 4.4;
    double rho_inner = 0.292;
    double rho_outer = 1.0;
    double strip_x_min = 1.8396;
    double strip_x_max = 20.0;
    double strip_y_max = 0.031623;
    int upward_terms = 7;     // Taylor terms added on top of the axis value
    int target_digits = 13;
    std::span<const ScheduleKnot> nu_schedule{detail::kNuKnots};
    std::span<const ScheduleKnot> h_schedule{detail::kShiftKnots};
    std::span<const ScheduleKnot> kapn_schedule{detail::kKapnKnots};
};

inline const TuningParams& default_params() {
    static const TuningParams p{};
    return p;
}

inline constexpr const char* kTuningTableVersion = "2025.08";

/// Elliptic region metric rho(z) = sqrt((x/x0)^2 + (y/y0)^2), evaluated on
/// (|x|, |y|). Zero only at the origin.
inline double rho(double x, double y, const TuningParams& p = default_params()) {
    return std::hypot(std::fabs(x) / p.x0, std::fabs(y) / p.y0);
}

/// Maps a first-quadrant point to its evaluation region. The remedy strip
/// test takes precedence over the rho comparisons; bounds are inclusive.
inline RegionLabel classify(double x, double y, const TuningParams& p = default_params(),
                            bool remedy_enabled = true) {
    x = std::fabs(x);
    y = std::fabs(y);
    if (remedy_enabled && x >= p.strip_x_min && x <= p.strip_x_max && y <= p.strip_y_max)
        return RegionLabel::RemedyStrip;
    const double r = rho(x, y, p);
    if (r <= p.rho_inner) return RegionLabel::S;
    if (r < p.rho_outer) return RegionLabel::R;
    return RegionLabel::Q;
}

/// Continued-fraction depth for region Q; monotone nonincreasing in rho and
/// clamped to [3, 16].
inline int nu_for(double rho_val, const TuningParams& p = default_params()) {
    const double v = detail::interpolate(p.nu_schedule, rho_val);
    return std::clamp(static_cast<int>(std::lround(v)), 3, 16);
}

/// Shift, resummation length and recursion start for the downward-Taylor
/// scheme in region R.
struct DownwardParams {
    double h;
    int kapn;
    int nu;
};

inline DownwardParams downward_params(double rho_val, const TuningParams& p = default_params()) {
    DownwardParams d;
    d.h = detail::interpolate(p.h_schedule, rho_val);
    d.kapn = static_cast<int>(std::lround(detail::interpolate(p.kapn_schedule, rho_val)));
    d.nu = static_cast<int>(std::lround(detail::interpolate(p.nu_schedule, rho_val)));
    if (d.kapn > d.nu) d.kapn = d.nu;
    return d;
}

}  // namespace faddeyeva
