#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "faddeyeva/evaluator.hpp"
#include "faddeyeva/oracle.hpp"

using namespace faddeyeva;

namespace {

double comp_err(Complex v, const oracle::RefValue& ref) {
    const auto e = oracle::relerr(v, ref);
    return std::max(e.re_rel, e.im_rel);
}

// Known 16-digit value of w(100i) = e^{10000} erfc(100), from the alternating
// asymptotic expansion of erfc (error below the first omitted term).
constexpr double kW100i = 0.005641613782989433;

}  // namespace

TEST_CASE("w at the origin and on the axes") {
    const auto r0 = w({0.0, 0.0});
    CHECK(r0.value == Complex(1.0, 0.0));
    CHECK(r0.region == RegionLabel::S);
    CHECK(r0.status == Status::ok);
    CHECK(r0.terms_used >= 1);

    const auto r1 = w({1.0, 0.0});
    CHECK(r1.value.real() == Catch::Approx(0.36787944117144233).epsilon(1e-14));
    CHECK(r1.value.imag() == Catch::Approx(0.60715770584139372).epsilon(1e-13));
    // coarse 8-digit anchors
    CHECK(r1.value.real() == Catch::Approx(0.36787944).margin(5e-9));
    CHECK(r1.value.imag() == Catch::Approx(0.60715771).margin(5e-9));

    const auto ri = w({0.0, 1.0});
    CHECK(ri.value.real() == Catch::Approx(0.42758358).margin(5e-9));
    CHECK(ri.value.imag() == 0.0);
}

TEST_CASE("w overflows for large negative imaginary arguments") {
    const auto r = w({0.0, -30.0});
    CHECK(r.status == Status::overflow);
    CHECK(std::isinf(r.value.real()));
    CHECK(std::isinf(r.value.imag()));
}

TEST_CASE("w rejects non-finite arguments") {
    const double nan = std::nan("");
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(w({nan, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(w({0.0, nan}), std::invalid_argument);
    CHECK_THROWS_AS(w({inf, 1.0}), std::invalid_argument);
}

TEST_CASE("negative zero components are treated as +0") {
    const auto a = w({1.0, -0.0});
    const auto b = w({1.0, 0.0});
    CHECK(a.value == b.value);
    CHECK(a.status == Status::ok);
    const auto c = w({-0.0, 1.0});
    CHECK(c.value == w({0.0, 1.0}).value);
}

TEST_CASE("power series kernel") {
    const auto [w0, t0] = w_powerseries({0.0, 0.0});
    CHECK(w0 == Complex(1.0, 0.0));
    CHECK(t0 >= 1);

    const auto [whalf, t1] = w_powerseries({0.0, 0.5});
    CHECK(whalf.real() == Catch::Approx(0.6156903441929259).epsilon(1e-14));
    CHECK(whalf.real() == Catch::Approx(0.61569034).margin(5e-9));
    CHECK(whalf.imag() == 0.0);

    const auto [wq, t2] = w_powerseries({0.1, 0.0});
    CHECK(wq.real() == Catch::Approx(0.9900498337491681).epsilon(1e-14));
    CHECK(wq.imag() == Catch::Approx(0.11208866436449538).epsilon(1e-13));
    CHECK(wq.real() == Catch::Approx(0.99004983).margin(5e-9));
    CHECK(wq.imag() == Catch::Approx(0.11208866).margin(5e-9));
}

TEST_CASE("power series even part equals exp(-z^2)") {
    // The analytic identity behind the even/odd split, checked in extended
    // precision; the double-level series is then compared against std::exp.
    using oracle::BigFloat;
    using oracle::detail::BigComplex;
    using oracle::detail::cnorm;
    for (double xr : {0.0, 0.3, 0.9, 1.2}) {
        for (double yi : {0.0, 0.25, 0.8}) {
            if (std::hypot(xr, yi) > 1.3) continue;
            const BigComplex z2(BigFloat(xr) * xr - BigFloat(yi) * yi,
                                2 * BigFloat(xr) * yi);
            BigComplex term(BigFloat(1), BigFloat(0));
            BigComplex sum = term;
            for (int k = 1; k < 80; ++k) {
                term = term * z2;
                term /= BigFloat(-k);
                sum += term;
            }
            const BigComplex ref = oracle::detail::cexp(-z2.re, -z2.im);
            CHECK(static_cast<double>(cnorm(sum - ref) / cnorm(ref)) < 1e-30);

            const Complex ed = std::exp(-Complex(xr, yi) * Complex(xr, yi));
            CHECK(std::abs(ed - Complex(static_cast<double>(ref.re),
                                        static_cast<double>(ref.im))) <=
                  4 * std::numeric_limits<double>::epsilon() * std::abs(ed));
        }
    }
}

TEST_CASE("continued fraction kernel") {
    const Complex z(0.0, 100.0);
    const Complex w1 = w_cf(z, 1);
    CHECK(w1.real() == Catch::Approx(0.005641895835477563).epsilon(1e-15));
    CHECK(w1.imag() == 0.0);

    const Complex w3 = w_cf(z, 3);
    CHECK(w3.real() == Catch::Approx(0.00564162).margin(5e-9));

    // convergent order at a far-field point
    const double e1 = std::fabs(w_cf(z, 1).real() - kW100i);
    const double e2 = std::fabs(w_cf(z, 2).real() - kW100i);
    const double e3 = std::fabs(w_cf(z, 3).real() - kW100i);
    CHECK(e1 >= e2);
    CHECK(e2 >= e3);
}

TEST_CASE("continued fraction at the validity boundary") {
    const Complex z(20.0, 1e-10);
    const auto ref = oracle::w_ref({20.0, 1e-10}, 25);
    CHECK(comp_err(w_cf(z, 16), ref) <= 1e-13);
}

TEST_CASE("downward Taylor kernel") {
    // h = 0, kapn = 0 degenerates to the plain convergent
    const Complex z(3.0, 2.0);
    CHECK(w_downward(z, 0.0, 0, 12) == w_cf(z, 12));

    const DownwardParams d1 = downward_params(rho(3.0, 2.0));
    CHECK(comp_err(w_downward({3.0, 2.0}, d1.h, d1.kapn, d1.nu),
                   oracle::w_ref({3.0, 2.0}, 25)) <= 1e-12);
    const DownwardParams d2 = downward_params(rho(1.0, 3.0));
    CHECK(comp_err(w_downward({1.0, 3.0}, d2.h, d2.kapn, d2.nu),
                   oracle::w_ref({1.0, 3.0}, 25)) <= 1e-12);

    // frozen anchors
    const Complex w32 = w({3.0, 2.0}).value;
    CHECK(w32.real() == Catch::Approx(0.09271076642644333).epsilon(1e-12));
    CHECK(w32.imag() == Catch::Approx(0.12831696222826158).epsilon(1e-12));

    // axis handling: the real part comes from exp(-x^2) directly
    const Complex wax = w_downward({3.0, 0.0}, 1.0, 10, 20);
    CHECK(wax.real() == std::exp(-9.0));
}

TEST_CASE("w on the real axis") {
    CHECK(w_real_axis(0.0) == Complex(1.0, 0.0));
    const Complex w1 = w_real_axis(1.0);
    CHECK(w1.real() == Catch::Approx(0.36787944117144233).epsilon(1e-15));
    CHECK(w1.imag() == Catch::Approx(0.60715770584139372).epsilon(1e-14));

    const Complex w20 = w_real_axis(20.0);
    CHECK(w20.real() == std::exp(-400.0));
    const double f20 = static_cast<double>(oracle::f_ref(20.0, 25));
    CHECK(w20.imag() == Catch::Approx(kTwoOverSqrtPi * f20).epsilon(1e-14));

    // graceful underflow of the real part: subnormal by 27, zero past 27.3
    CHECK(w_real_axis(27.0).real() < 1e-300);
    CHECK(w_real_axis(28.0).real() == 0.0);
    CHECK(std::isfinite(w_real_axis(28.0).imag()));
}

TEST_CASE("taylor coefficients at x = 0") {
    const TaylorCoeffs tc = taylor_coeffs(0.0, 3);
    CHECK(tc.c[0] == Complex(1.0, 0.0));
    CHECK(tc.c[1] == Complex(0.0, kTwoOverSqrtPi));
    CHECK(tc.c[2].real() == -1.0);
    CHECK(tc.c[2].imag() == 0.0);
    CHECK(tc.d[0] == 0.0);
    CHECK(tc.d[1] == 1.0);
    CHECK(tc.d[2] == 0.0);
    CHECK(tc.d[3] == Catch::Approx(-2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("taylor coefficients at x = 1") {
    const TaylorCoeffs tc = taylor_coeffs(1.0, 2);
    CHECK(tc.d[0] == Catch::Approx(0.5380795069127684).epsilon(1e-13));
    CHECK(tc.d[1] == Catch::Approx(-0.07615901382553684).epsilon(1e-11));
    CHECK(tc.d[2] == Catch::Approx(-0.4619204930872316).epsilon(1e-13));
    // coarse 8-digit anchors
    CHECK(tc.d[0] == Catch::Approx(0.53807951).margin(5e-9));
    CHECK(tc.d[1] == Catch::Approx(-0.07615902).margin(5e-9));
    CHECK(tc.d[2] == Catch::Approx(-0.46192049).margin(5e-9));
}

TEST_CASE("taylor coefficients split into exp and Dawson components") {
    // b_n: coefficients of exp(-z^2) about x, same recurrence seeded with
    // (exp(-x^2), 0); d_n: Dawson recurrence. c_n must equal
    // b_n + (2/sqrt(pi)) i d_n.
    const double x = 2.3;
    const int n_max = 9;
    const TaylorCoeffs tc = taylor_coeffs(x, n_max);
    std::vector<double> b(n_max + 1), d(n_max + 1);
    b[0] = std::exp(-x * x);
    b[1] = -2.0 * x * b[0];
    d[0] = dawson(x);
    d[1] = 1.0 - 2.0 * x * d[0];
    for (int n = 1; n < n_max; ++n) {
        b[n + 1] = (-2.0 / (n + 1)) * (x * b[n] + b[n - 1]);
        d[n + 1] = (-2.0 / (n + 1)) * (x * d[n] + d[n - 1]);
    }
    for (int n = 0; n <= n_max; ++n) {
        CHECK(tc.c[n].real() == Catch::Approx(b[n]).margin(1e-15 * std::fabs(b[0]) + 1e-300));
        CHECK(tc.c[n].imag() == Catch::Approx(kTwoOverSqrtPi * d[n]).epsilon(1e-12));
        CHECK(tc.d[n] == Catch::Approx(d[n]).epsilon(1e-12));
    }
}

TEST_CASE("first Taylor coefficient matches an oracle finite difference") {
    using oracle::BigFloat;
    using oracle::detail::BigComplex;
    using oracle::detail::cexp;
    using oracle::detail::cnorm;
    const double h = 1e-6;
    for (double x : {1.0, 3.7, 6.3, 12.5, 19.0}) {
        const auto up = oracle::w_ref({x, h}, 30);
        // w(x - ih) = 2 exp(-(x-ih)^2) - conj(w(x + ih))
        const BigComplex wp(up.re, up.im);
        const BigComplex e = cexp(BigFloat(h) * h - BigFloat(x) * x, 2 * BigFloat(x) * h);
        const BigComplex wm(2 * e.re - wp.re, 2 * e.im + wp.im);
        // (wp - wm) / (2ih)
        const BigComplex diff(wp.re - wm.re, wp.im - wm.im);
        const BigComplex fd(diff.im / (2 * BigFloat(h)), -diff.re / (2 * BigFloat(h)));
        const Complex c1 = taylor_coeffs(x, 1).c[1];
        const BigComplex delta(fd.re - BigFloat(c1.real()), fd.im - BigFloat(c1.imag()));
        CHECK(static_cast<double>(cnorm(delta) / cnorm(fd)) <= 1e-8);
    }
}

TEST_CASE("upward Taylor kernel") {
    // y = 0 reproduces the axis value exactly
    for (double x : {1.8396, 5.0, 12.0, 20.0}) {
        CHECK(w_upward({x, 0.0}) == w_real_axis(x));
    }
    CHECK(comp_err(w_upward({6.3, 0.01}), oracle::w_ref({6.3, 0.01}, 25)) <= 5e-13);
    CHECK(comp_err(w_upward({6.3, 0.031623}), oracle::w_ref({6.3, 0.031623}, 25)) <= 5e-13);
    CHECK(comp_err(w_upward({1.8396, 0.031623}), oracle::w_ref({1.8396, 0.031623}, 25)) <=
          5e-13);
    CHECK(w({6.3, 1e-6}).terms_used == default_params().upward_terms);
}

TEST_CASE("no term of the strip sum outgrows the leading terms") {
    const auto& p = default_params();
    const double y = p.strip_y_max;
    for (int i = 0; i <= 200; ++i) {
        const double x = 0.1 * i;
        if (x > 20.0) break;
        const TaylorCoeffs tc = taylor_coeffs(x, p.upward_terms);
        const double bound = std::abs(tc.c[0]) + std::abs(tc.c[1]) * y + 1.0;
        double yn = 1.0;
        for (int n = 0; n < p.upward_terms; ++n) {
            CHECK(std::abs(tc.c[n]) * yn <= bound);
            yn *= y;
        }
    }
}

TEST_CASE("symmetry: w(-conj z) equals conj(w(z)) bitwise") {
    for (double x : {0.3, 1.0, 2.4, 6.3, 11.0, 25.0}) {
        for (double y : {0.0, 1e-8, 0.02, 0.7, 4.1, 22.0}) {
            const Complex a = w({-x, y}).value;
            const Complex b = std::conj(w({x, y}).value);
            CHECK(a.real() == b.real());
            CHECK(a.imag() == b.imag());
        }
    }
    // w(-1) = conj(w(1))
    const Complex m1 = w({-1.0, 0.0}).value;
    CHECK(m1.real() == Catch::Approx(0.36787944).margin(5e-9));
    CHECK(m1.imag() == Catch::Approx(-0.60715771).margin(5e-9));
}

TEST_CASE("reflection: w(z) + w(-z) = 2 exp(-z^2) for y < 0") {
    for (double x : {0.0, 0.8, 3.0, 9.5}) {
        for (double y : {-0.3, -1.7, -5.0}) {
            const Complex z(x, y);
            const Complex wz = w(z).value;
            const Complex lhs = wz + w(-z).value;
            const Complex rhs = 2.0 * std::exp(-z * z);
            // relative to the participating magnitudes; when exp(-z^2) is far
            // below |w| the identity lives under the rounding of w itself
            const double scale = std::max(std::abs(rhs), std::abs(wz));
            CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("first-quadrant values pass through the extension unchanged") {
    const Complex z(2.0, 3.0);
    const Complex wq = w(z).value;
    const auto ext = extend_full_plane(z, wq);
    CHECK(ext.value == wq);
    CHECK(ext.status == Status::ok);
}

TEST_CASE("adjacent kernels agree across region boundaries") {
    const auto& p = default_params();
    const double eps = 1e-12;
    const auto agree = [&](Complex za, Complex zb) {
        const auto ra = w(za);
        const auto rb = w(zb);
        INFO("regions " << to_string(ra.region) << " vs " << to_string(rb.region));
        CHECK(std::abs(ra.value - rb.value) <= 1e-11 * std::abs(ra.value));
    };
    // inner contour, rho = 0.292, several directions
    for (double th : {0.1, 0.5, 0.9, 1.4}) {
        const double c = std::cos(th), s = std::sin(th);
        const double x = p.x0 * p.rho_inner * c;
        const double y = p.y0 * p.rho_inner * s;
        if (classify(x, y) == RegionLabel::RemedyStrip) continue;
        agree({x - eps, y}, {x + eps, y});
    }
    // outer contour, rho = 1
    for (double th : {0.15, 0.6, 1.0, 1.45}) {
        const double c = std::cos(th), s = std::sin(th);
        const double x = p.x0 * c;
        const double y = p.y0 * s;
        if (classify(x, y) == RegionLabel::RemedyStrip) continue;
        agree({x - eps, y}, {x + eps, y});
    }
    // strip edges: left (against S), right (against Q), top (against R/Q)
    agree({p.strip_x_min - eps, 0.01}, {p.strip_x_min + eps, 0.01});
    agree({p.strip_x_max - eps, 0.01}, {p.strip_x_max + eps, 0.01});
    agree({4.0, p.strip_y_max - eps}, {4.0, p.strip_y_max + eps});
    agree({10.0, p.strip_y_max - eps}, {10.0, p.strip_y_max + eps});
}
