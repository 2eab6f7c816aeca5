#!/usr/bin/env python3
"""Generate the Chebyshev tables used by the mid-range branch of dawson().

Dawson's integral F(x) = exp(-x^2) * integral_0^x exp(t^2) dt is interpolated
on three subintervals of [0.5, 6.0] at Chebyshev nodes in 40-digit arithmetic.
Coefficients are truncated once the tail falls below 1e-18 of the largest
coefficient, which leaves the double-precision Clenshaw evaluation at a few
ulp (validated against the extended-precision oracle by the test suite).

Run from the repository root:

    python3 calibration/fit_dawson.py > include/faddeyeva/detail/dawson_tables.hpp
"""
import mpmath as mp

mp.mp.dps = 40

INTERVALS = [(0.5, 2.5), (2.5, 4.25), (4.25, 6.0)]
FIT_ORDER = 44
TAIL = mp.mpf("1e-18")


def dawson(x):
    return mp.sqrt(mp.pi) / 2 * mp.exp(-x * x) * mp.erfi(x)


def cheb_coeffs(a, b, n):
    a, b = mp.mpf(a), mp.mpf(b)
    vals = [
        dawson((b + a) / 2 + (b - a) / 2 * mp.cos(mp.pi * (k + mp.mpf(1) / 2) / n))
        for k in range(n)
    ]
    out = []
    for j in range(n):
        s = mp.fsum(
            vals[k] * mp.cos(mp.pi * j * (k + mp.mpf(1) / 2) / n) for k in range(n)
        )
        out.append(2 * s / n)
    out[0] /= 2
    return out


def emit():
    print("// Generated by calibration/fit_dawson.py -- do not edit by hand.")
    print("#pragma once")
    print()
    print("namespace faddeyeva::detail {")
    print()
    names = []
    for idx, (a, b) in enumerate(INTERVALS):
        co = cheb_coeffs(a, b, FIT_ORDER)
        mx = max(abs(c) for c in co)
        keep = next(j + 1 for j in range(FIT_ORDER - 1, 0, -1) if abs(co[j]) > TAIL * mx)
        name = f"kDawsonCheb{idx}"
        names.append((name, a, b, keep))
        print(f"inline constexpr double {name}[{keep}] = {{")
        for c in co[:keep]:
            print(f"    {float(c)!r},")
        print("};")
        print()
    print("struct DawsonChebInterval {")
    print("    double lo;")
    print("    double hi;")
    print("    const double* coeffs;")
    print("    int count;")
    print("};")
    print()
    print(f"inline constexpr DawsonChebInterval kDawsonChebIntervals[{len(names)}] = {{")
    for name, a, b, keep in names:
        print(f"    {{{a!r}, {b!r}, {name}, {keep}}},")
    print("};")
    print()
    print("}  // namespace faddeyeva::detail")


if __name__ == "__main__":
    emit()
