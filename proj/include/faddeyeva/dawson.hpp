#pragma once

#include <cmath>
#include <stdexcept>

#include "faddeyeva/detail/dawson_tables.hpp"

namespace faddeyeva {

enum class DawsonMethod { maclaurin, rational_mid, asymptotic };

struct DawsonResult {
    double value;
    DawsonMethod method;
};

namespace detail {

inline constexpr double kDawsonMaclaurinMax = 0.5;
inline constexpr double kDawsonAsymptoticMin = 6.0;

inline double dawson_maclaurin(double ax) {
    // F(x) = sum_k (-2)^k x^(2k+1) / (2k+1)!!
    const double x2 = ax * ax;
    double term = ax;
    double sum = ax;
    for (int k = 1; k < 40; ++k) {
        term *= -2.0 * x2 / (2 * k + 1);
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    }
    return sum;
}

inline double dawson_clenshaw(const DawsonChebInterval& iv, double ax) {
    const double t = (2.0 * ax - (iv.lo + iv.hi)) / (iv.hi - iv.lo);
    const double t2 = 2.0 * t;
    double b1 = 0.0, b2 = 0.0;
    for (int j = iv.count - 1; j >= 1; --j) {
        const double tmp = t2 * b1 - b2 + iv.coeffs[j];
        b2 = b1;
        b1 = tmp;
    }
    return t * b1 - b2 + iv.coeffs[0];
}

inline double dawson_asymptotic(double ax) {
    // F(x) ~ (1/2x) sum_k (2k-1)!! / (2x^2)^k, summed until the terms stop
    // improving or fall below the rounding floor.
    const double inv2x2 = 1.0 / (2.0 * ax * ax);
    double term = 1.0 / (2.0 * ax);
    double sum = term;
    for (int k = 1; k < 60; ++k) {
        const double next = term * static_cast<double>(2 * k - 1) * inv2x2;
        if (next >= term || next < 1e-17 * sum) break;
        term = next;
        sum += term;
    }
    return sum;
}

}  // namespace detail

/// Dawson's integral F(x) = exp(-x^2) * integral_0^x exp(t^2) dt together
/// with the branch that produced it. Odd in x by construction: the value is
/// computed on |x| and the sign is applied afterwards.
inline DawsonResult dawson_eval(double x) {
    if (std::isnan(x)) throw std::invalid_argument("dawson: NaN argument");
    const double ax = std::fabs(x);
    double v = 0.0;
    DawsonMethod m;
    if (ax < detail::kDawsonMaclaurinMax) {
        v = detail::dawson_maclaurin(ax);
        m = DawsonMethod::maclaurin;
    } else if (ax < detail::kDawsonAsymptoticMin) {
        for (const auto& iv : detail::kDawsonChebIntervals) {
            if (ax <= iv.hi) {
                v = detail::dawson_clenshaw(iv, ax);
                break;
            }
        }
        m = DawsonMethod::rational_mid;
    } else {
        v = detail::dawson_asymptotic(ax);
        m = DawsonMethod::asymptotic;
    }
    return {std::copysign(v, x), m};
}

inline double dawson(double x) { return dawson_eval(x).value; }

}  // namespace faddeyeva
