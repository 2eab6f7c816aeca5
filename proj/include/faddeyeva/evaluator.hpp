#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "faddeyeva/dawson.hpp"
#include "faddeyeva/regions.hpp"

namespace faddeyeva {

using Complex = std::complex<double>;

inline constexpr double kTwoOverSqrtPi = 1.1283791670955125739;  // 2/sqrt(pi)
inline constexpr double kSeriesTol = 1e-16;

enum class Status { ok, overflow };

struct EvalResult {
    Complex value;
    RegionLabel region;
    int terms_used;
    Status status;
};

/// Taylor coefficients of w about a real point: c[n] = w^(n)(x)/n!, and the
/// Dawson components d[n] = Im(c[n]) / (2/sqrt(pi)).
struct TaylorCoeffs {
    std::vector<Complex> c;
    std::vector<double> d;
};

/// w on the real axis: exp(-x^2) + i (2/sqrt(pi)) F(x). The real part
/// underflows gracefully to zero for x beyond ~26.6.
inline Complex w_real_axis(double x) {
    return {std::exp(-x * x), kTwoOverSqrtPi * dawson(x)};
}

/// Power series for the innermost region, split as the closed-form even part
/// exp(-z^2) plus the odd part i z * sum_k (-z^2)^k / Gamma(k+3/2).
inline std::pair<Complex, int> w_powerseries(Complex z, double tol = kSeriesTol) {
    const Complex zsq = z * z;
    const Complex even = std::exp(-zsq);
    Complex term = kTwoOverSqrtPi;  // 1/Gamma(3/2)
    Complex sum = term;
    int k = 0;
    while (k < 100) {
        ++k;
        term *= -zsq / (k + 0.5);
        sum += term;
        if (std::abs(term) < tol * std::abs(sum)) break;
    }
    return {even + Complex(0.0, 1.0) * z * sum, k + 1};
}

/// nu-th convergent of the Laplace continued fraction by backward recurrence.
inline Complex w_cf(Complex z, int nu) {
    const Complex t(z.imag(), -z.real());  // -i z
    Complex r = 0.0;
    for (int n = nu - 1; n >= 0; --n) {
        r = 0.5 / (t + static_cast<double>(n + 1) * r);
    }
    return kTwoOverSqrtPi * r;
}

/// Downward Taylor scheme: the continued-fraction recurrence runs at the
/// shifted point t + h and the kapn leading terms are resummed through the
/// descending powers of 2h. With h = 0 and kapn = 0 this degenerates to the
/// plain nu-convergent.
inline Complex w_downward(Complex z, double h, int kapn, int nu) {
    const Complex t(z.imag(), -z.real());
    Complex r = 0.0;
    Complex s = 0.0;
    double lambda = std::pow(2.0 * h, kapn);
    const bool resum = h > 0.0;
    for (int n = nu - 1; n >= 0; --n) {
        r = 0.5 / (Complex(h, 0.0) + t + static_cast<double>(n + 1) * r);
        if (resum && n <= kapn) {
            s = r * (lambda + s);
            lambda /= 2.0 * h;
        }
    }
    Complex w = kTwoOverSqrtPi * (resum ? s : r);
    if (z.imag() == 0.0) w = Complex(std::exp(-z.real() * z.real()), w.imag());
    return w;
}

/// Coefficients c[0..n_max] of the Taylor expansion of w about z0 = x,
/// via c_{n+1} = -(2/(n+1)) (x c_n + c_{n-1}) seeded from the axis value and
/// the derivative w'(x) = -2x w(x) + 2i/sqrt(pi).
inline TaylorCoeffs taylor_coeffs(double x, int n_max) {
    TaylorCoeffs tc;
    tc.c.resize(n_max + 1);
    tc.c[0] = w_real_axis(x);
    if (n_max >= 1) tc.c[1] = -2.0 * x * tc.c[0] + Complex(0.0, kTwoOverSqrtPi);
    for (int n = 1; n < n_max; ++n) {
        tc.c[n + 1] = (-2.0 / (n + 1)) * (x * tc.c[n] + tc.c[n - 1]);
    }
    tc.d.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) tc.d[n] = tc.c[n].imag() / kTwoOverSqrtPi;
    return tc;
}

/// Upward Taylor kernel for the remedy strip: Horner evaluation of
/// sum_{n=0}^{upward_terms} c_n (iy)^n. At y = 0 this is exactly the axis
/// value.
inline Complex w_upward(Complex z, const TuningParams& p = default_params()) {
    const TaylorCoeffs tc = taylor_coeffs(z.real(), p.upward_terms);
    const Complex u(0.0, z.imag());
    Complex s = tc.c[p.upward_terms];
    for (int n = p.upward_terms - 1; n >= 0; --n) s = s * u + tc.c[n];
    return s;
}

struct ExtendResult {
    Complex value;
    Status status;
};

/// Extends a first-quadrant value to the full plane through
/// w(-conj(z)) = conj(w(z)) and w(-z) = 2 exp(-z^2) - w(z). The y < 0 branch
/// computes exp(-z^2) explicitly and reports overflow past double range.
inline ExtendResult extend_full_plane(Complex z, Complex w_first_quadrant) {
    const double x = z.real();
    const double y = z.imag();
    if (y >= 0.0) {  // -0.0 lands here: negative zero counts as +0
        if (x < 0.0) return {std::conj(w_first_quadrant), Status::ok};
        return {w_first_quadrant, Status::ok};
    }
    // y < 0: w(z) = 2 exp(-z^2) - w(-z)
    const double re_z2 = (x - y) * (x + y);  // x^2 - y^2
    const double im_z2 = 2.0 * x * y;
    if (-re_z2 > std::log(std::numeric_limits<double>::max() / 2.0)) {
        const double c = std::cos(im_z2);
        const double s = std::sin(im_z2);
        const double inf = std::numeric_limits<double>::infinity();
        return {Complex(std::copysign(inf, c), std::copysign(inf, -s)), Status::overflow};
    }
    const double mag = 2.0 * std::exp(-re_z2);
    const Complex refl(mag * std::cos(im_z2), -mag * std::sin(im_z2));
    const Complex w_neg_z = (x > 0.0) ? std::conj(w_first_quadrant) : w_first_quadrant;
    return {refl - w_neg_z, Status::ok};
}

struct EvalOptions {
    bool remedy_enabled = true;
};

/// Faddeyeva function w(z) for any finite complex argument: maps z to the
/// first quadrant, dispatches on the region partition, then applies the
/// symmetry extension.
inline EvalResult w(Complex z, const TuningParams& p = default_params(),
                    EvalOptions opts = {}) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("w: argument must have finite components");
    const double xa = std::fabs(z.real());
    const double ya = std::fabs(z.imag());
    const Complex zq(xa, ya);
    const RegionLabel label = classify(xa, ya, p, opts.remedy_enabled);
    Complex wq;
    int terms = 0;
    switch (label) {
        case RegionLabel::S: {
            auto [v, k] = w_powerseries(zq);
            wq = v;
            terms = k;
            break;
        }
        case RegionLabel::RemedyStrip: {
            wq = w_upward(zq, p);
            terms = p.upward_terms;
            break;
        }
        case RegionLabel::Q: {
            const int nu = nu_for(rho(xa, ya, p), p);
            wq = w_cf(zq, nu);
            if (ya == 0.0) wq = Complex(std::exp(-xa * xa), wq.imag());
            terms = nu;
            break;
        }
        case RegionLabel::R: {
            const DownwardParams dp = downward_params(rho(xa, ya, p), p);
            wq = w_downward(zq, dp.h, dp.kapn, dp.nu);
            terms = dp.nu;
            break;
        }
    }
    const auto ext = extend_full_plane(z, wq);
    return {ext.value, label, terms, ext.status};
}

}  // namespace faddeyeva
