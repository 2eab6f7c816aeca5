#!/usr/bin/env python3
"""Generate the fixed Gauss-Legendre rule used by the reference oracle.

Nodes and weights of the 32-point rule on [-1, 1] are computed by Newton
iteration on the Legendre polynomial at 100-digit precision and emitted as
decimal strings; the oracle parses them into its working precision once.

Run from the repository root:

    python3 calibration/gauss_legendre_table.py > include/faddeyeva/detail/gauss_legendre.hpp
"""
import mpmath as mp

ORDER = 32
DIGITS = 100


def legendre_and_derivative(n, t):
    p0, p1 = mp.mpf(1), t
    for j in range(2, n + 1):
        p0, p1 = p1, ((2 * j - 1) * t * p1 - (j - 1) * p0) / j
    dp = n * (t * p1 - p0) / (t * t - 1)
    return p1, dp


def rule(n):
    nodes, weights = [], []
    for k in range(1, n // 2 + 1):
        t = mp.cos(mp.pi * (k - mp.mpf(1) / 4) / (n + mp.mpf(1) / 2))
        for _ in range(200):
            p, dp = legendre_and_derivative(n, t)
            dt = p / dp
            t -= dt
            if abs(dt) < mp.mpf(10) ** (-(DIGITS + 5)):
                break
        _, dp = legendre_and_derivative(n, t)
        w = 2 / ((1 - t * t) * dp * dp)
        nodes.append(t)
        weights.append(w)
    full = [(-t, w) for t, w in zip(nodes, weights)]
    full += [(t, w) for t, w in zip(reversed(nodes), reversed(weights))]
    return full


def emit():
    with mp.workdps(DIGITS + 10):
        pairs = rule(ORDER)
        print("// Generated by calibration/gauss_legendre_table.py -- do not edit by hand.")
        print("#pragma once")
        print()
        print("namespace faddeyeva::detail {")
        print()
        print(f"inline constexpr int kGaussLegendreOrder = {ORDER};")
        print()
        print(f"inline constexpr const char* kGaussLegendreNodes[{ORDER}] = {{")
        for t, _ in pairs:
            print(f'    "{mp.nstr(t, DIGITS, strip_zeros=False)}",')
        print("};")
        print()
        print(f"inline constexpr const char* kGaussLegendreWeights[{ORDER}] = {{")
        for _, w in pairs:
            print(f'    "{mp.nstr(w, DIGITS, strip_zeros=False)}",')
        print("};")
        print()
        print("}  // namespace faddeyeva::detail")


if __name__ == "__main__":
    emit()
