#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "faddeyeva/detail/gauss_legendre.hpp"

namespace faddeyeva::oracle {

// Working precision of the reference computations. Generous headroom above
// the largest claimable digit count: the corner-path decomposition loses at
// most ~9 digits to cancellation anywhere on the supported domain.
inline constexpr unsigned kWorkingDigits = 80;

using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<kWorkingDigits>>;

class PrecisionFailure : public std::runtime_error {
  public:
    explicit PrecisionFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Extended-precision reference value of w(z).
struct RefValue {
    BigFloat re;
    BigFloat im;
    int digits_claimed;
};

namespace detail {

using faddeyeva::detail::kGaussLegendreNodes;
using faddeyeva::detail::kGaussLegendreOrder;
using faddeyeva::detail::kGaussLegendreWeights;

struct BigComplex {
    BigFloat re;
    BigFloat im;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    BigComplex& operator+=(const BigComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator*(const BigFloat& s, const BigComplex& a) {
        return {s * a.re, s * a.im};
    }
    BigComplex& operator/=(const BigFloat& s) {
        re /= s;
        im /= s;
        return *this;
    }
};

inline BigFloat cnorm(const BigComplex& a) { return sqrt(a.re * a.re + a.im * a.im); }

inline BigComplex cexp(const BigFloat& re, const BigFloat& im) {
    const BigFloat m = exp(re);
    return {m * cos(im), m * sin(im)};
}

inline const BigFloat& sqrt_pi() {
    static const BigFloat v = sqrt(4 * atan(BigFloat(1)));
    return v;
}

struct GaussRule {
    std::vector<BigFloat> nodes;
    std::vector<BigFloat> weights;
};

inline const GaussRule& gauss_rule() {
    static const GaussRule rule = [] {
        GaussRule r;
        for (int i = 0; i < kGaussLegendreOrder; ++i) {
            r.nodes.emplace_back(kGaussLegendreNodes[i]);
            r.weights.emplace_back(kGaussLegendreWeights[i]);
        }
        return r;
    }();
    return rule;
}

template <typename F>
BigComplex composite_gl(const F& f, const BigFloat& a, const BigFloat& b, int panels) {
    const GaussRule& rule = gauss_rule();
    BigComplex total;
    const BigFloat h = (b - a) / panels;
    const BigFloat half = h / 2;
    for (int m = 0; m < panels; ++m) {
        const BigFloat mid = a + m * h + half;
        BigComplex acc;
        for (int i = 0; i < kGaussLegendreOrder; ++i) {
            acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
        }
        total += half * acc;
    }
    return total;
}

/// Doubles the panel count until two successive composite rules agree to the
/// requested number of digits. Enforced, not assumed.
template <typename F>
BigComplex refine(const F& f, const BigFloat& a, const BigFloat& b, int m0, int digits) {
    if (b <= a) return {};
    const BigFloat tol = pow(BigFloat(10), -digits);
    int m = m0 < 1 ? 1 : m0;
    BigComplex prev = composite_gl(f, a, b, m);
    constexpr int kPanelCap = 1 << 15;
    while (m < kPanelCap) {
        m *= 2;
        const BigComplex cur = composite_gl(f, a, b, m);
        BigFloat scale = cnorm(cur);
        if (scale == 0) scale = 1;
        if (cnorm(cur - prev) <= scale * tol) return cur;
        prev = cur;
    }
    throw PrecisionFailure("oracle quadrature did not reach the requested digits");
}

/// integral_0^x exp(t^2) dt as the positive-term series
/// x * sum_n x^(2n) / (n! (2n+1)); cancellation-free.
inline BigFloat exp_integral_series(const BigFloat& x) {
    if (x == 0) return BigFloat(0);
    const BigFloat x2 = x * x;
    const BigFloat floor = pow(BigFloat(10), -static_cast<int>(kWorkingDigits) - 5);
    BigFloat term(1);
    BigFloat sum(1);
    long n = 0;
    const double x2d = static_cast<double>(x2);
    while (true) {
        ++n;
        term *= x2 / n;
        sum += term / (2 * n + 1);
        if (static_cast<double>(n) > x2d && term < floor * sum) break;
        if (n > 200000) throw PrecisionFailure("exp_integral_series did not converge");
    }
    return x * sum;
}

inline int require_digits(int digits) {
    if (digits < 20 || digits > 50)
        throw std::invalid_argument("oracle: digits must lie in [20, 50]");
    return digits;
}

}  // namespace detail

/// Reference w(z) for the first quadrant, x <= 30, y <= 30, computed from a
/// corner-path split of integral_0^z exp(t^2) dt.
///
/// For y <= 1 the path runs along the real axis and then vertically:
///   w = exp(-z^2) (1 + 2i/sqrt(pi) (I1 + i integral_0^y exp((x+is)^2) ds)).
/// For y > 1 it runs up the imaginary axis first, which keeps every
/// intermediate bounded by the result's own scale:
///   w = 2/sqrt(pi) (exp(-x^2 - 2ixy) J(y) + i K),
///   J = integral_0^inf exp(-v^2 - 2yv) dv,
///   K = integral_0^{p*} exp(p^2 - 2xp - 2iyp) dp.
inline RefValue w_ref(std::complex<double> z, int digits = 25) {
    using namespace detail;
    require_digits(digits);
    const double xd = z.real();
    const double yd = z.imag();
    if (!(xd >= 0.0) || !(yd >= 0.0) || xd > 30.0 || yd > 30.0)
        throw std::domain_error("w_ref: supported domain is [0,30] x [0,30]");
    const BigFloat x(xd);
    const BigFloat y(yd);
    const BigFloat two_over_rtpi = 2 / sqrt_pi();
    const int qdigits = digits + 8;

    if (yd <= 1.0) {
        const BigFloat i1 = exp_integral_series(x);
        BigComplex i2;
        if (yd > 0.0) {
            const auto f = [&x](const BigFloat& s) {
                return cexp(x * x - s * s, 2 * x * s);
            };
            const int m0 = static_cast<int>(xd * yd / 4.0) + 1;
            i2 = refine(f, BigFloat(0), y, m0, qdigits);
        }
        // 1 + (2i/sqrt(pi)) (i1 + i*i2)
        const BigComplex total(1 - two_over_rtpi * i2.re,
                               two_over_rtpi * (i1 - i2.im));
        const BigComplex pre = cexp(y * y - x * x, -2 * x * y);
        const BigComplex w = pre * total;
        return {w.re, w.im, digits};
    }

    const BigFloat cut = BigFloat(static_cast<int>(kWorkingDigits) + 10) * log(BigFloat(10));
    const BigFloat vstar = -y + sqrt(y * y + cut);
    const auto fJ = [&y](const BigFloat& v) {
        return BigComplex(exp(-v * v - 2 * y * v), BigFloat(0));
    };
    int m0 = static_cast<int>(static_cast<double>(vstar) * yd / 4.0) + 1;
    const BigComplex jv = refine(fJ, BigFloat(0), vstar, m0, qdigits);

    BigComplex kv;
    if (xd > 0.0) {
        BigFloat pstar = x;
        if (x * x > cut) pstar = x - sqrt(x * x - cut);
        const auto fK = [&x, &y](const BigFloat& p) {
            return cexp(p * p - 2 * x * p, -2 * y * p);
        };
        m0 = static_cast<int>(static_cast<double>(pstar) * yd / 4.0) + 1;
        kv = refine(fK, BigFloat(0), pstar, m0, qdigits);
    }
    const BigComplex t1 = cexp(-x * x, -2 * x * y) * jv;
    const BigComplex w(two_over_rtpi * (t1.re - kv.im), two_over_rtpi * (t1.im + kv.re));
    return {w.re, w.im, digits};
}

/// Dual-route reference: the entire-series representation
/// w(z) = sum_n (iz)^n / Gamma(n/2 + 1), usable for |z| <= 6 at this working
/// precision. Test support for cross-checking w_ref.
inline RefValue w_ref_series(std::complex<double> z, int digits = 25) {
    using namespace detail;
    require_digits(digits);
    if (std::abs(z) > 6.0)
        throw std::domain_error("w_ref_series: |z| must be <= 6");
    const BigComplex iz(BigFloat(-z.imag()), BigFloat(z.real()));
    BigComplex power(BigFloat(1), BigFloat(0));  // (iz)^n
    BigFloat gamma_even(1);                      // Gamma(k+1) for n = 2k
    BigFloat gamma_odd = sqrt_pi() / 2;          // Gamma(k+3/2) for n = 2k+1
    BigComplex sum;
    BigFloat peak(0);
    const BigFloat floor = pow(BigFloat(10), -static_cast<int>(kWorkingDigits) - 2);
    const double z2 = std::norm(z);
    for (long n = 0; n < 4000; ++n) {
        const long k = n / 2;
        BigComplex term = power;
        if (n % 2 == 0) {
            if (k > 0) gamma_even *= k;  // Gamma(k+1)
            term /= gamma_even;
        } else {
            if (k > 0) gamma_odd *= BigFloat(2 * k + 1) / 2;  // Gamma(k+3/2)
            term /= gamma_odd;
        }
        sum += term;
        const BigFloat mag = cnorm(term);
        if (mag > peak) peak = mag;
        if (static_cast<double>(n) > 2.0 * z2 + 8.0 && mag < floor * peak) break;
        power = power * iz;
    }
    return {sum.re, sum.im, digits};
}

/// Reference Dawson integral F(x) = exp(-x^2) integral_0^x exp(t^2) dt for
/// 0 <= x <= 100. Positive-term series up to x = 25, asymptotic beyond.
inline BigFloat f_ref(double x, int digits = 25) {
    using namespace detail;
    require_digits(digits);
    if (!(x >= 0.0) || x > 100.0)
        throw std::domain_error("f_ref: supported domain is [0, 100]");
    const BigFloat xb(x);
    if (x <= 25.0) {
        return exp(-xb * xb) * exp_integral_series(xb);
    }
    const BigFloat inv2x2 = 1 / (2 * xb * xb);
    const BigFloat floor = pow(BigFloat(10), -static_cast<int>(kWorkingDigits) - 2);
    BigFloat term = 1 / (2 * xb);
    BigFloat sum = term;
    for (long k = 1; k < 4000; ++k) {
        const BigFloat next = term * (2 * k - 1) * inv2x2;
        if (next >= term) throw PrecisionFailure("f_ref: asymptotic tail did not reach the floor");
        term = next;
        sum += term;
        if (term < floor * sum) break;
    }
    return sum;
}

struct RelErr {
    double re_rel;
    double im_rel;
    double mod_rel;
};

/// Componentwise and modulus relative error of a double-precision value
/// against a reference. Components whose reference magnitude falls below
/// 1e-300 of the reference modulus are reported as absolute error scaled by
/// the modulus, so vanishing components do not read as relative-1 failures.
inline RelErr relerr(std::complex<double> approx, const RefValue& ref) {
    using namespace detail;
    const BigFloat mod = cnorm({ref.re, ref.im});
    if (mod == 0) throw std::domain_error("relerr: reference modulus is zero");
    const BigFloat guard = BigFloat("1e-300") * mod;
    const auto component = [&](double a, const BigFloat& r) {
        const BigFloat diff = abs(BigFloat(a) - r);
        if (abs(r) < guard) return static_cast<double>(diff / mod);
        return static_cast<double>(diff / abs(r));
    };
    RelErr e;
    e.re_rel = component(approx.real(), ref.re);
    e.im_rel = component(approx.imag(), ref.im);
    const BigComplex diff(BigFloat(approx.real()) - ref.re, BigFloat(approx.imag()) - ref.im);
    e.mod_rel = static_cast<double>(cnorm(diff) / mod);
    return e;
}

/// Fixed-width decimal rendering used for reference columns in CSV output.
/// In scientific form the stream precision counts digits after the point,
/// hence the minus one.
inline std::string to_decimal_string(const BigFloat& v, int significant = 25) {
    return v.str(significant - 1, std::ios_base::scientific);
}

}  // namespace faddeyeva::oracle
