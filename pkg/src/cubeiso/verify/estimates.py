"""Sampled checks of the real-variable binomial estimates.

Each check draws parameters inside the stated domain and compares both sides
at a relative tolerance of 1e-9.  Conditional statements of the form
"if LHS < RHS + c*W then P(c)" are tested at the smallest admissible c: the
conclusion only weakens as c grows, so c* = (LHS - RHS)/W is the sharpest
instance.
"""
from __future__ import annotations

import math
from functools import partial

import mpmath
import numpy as np

from ..binomials import (
    binom_real,
    f_k,
    f_k_derivatives,
    phi,
    second_derivative_floor,
    x_from_size,
)
from .report import SuiteReport, chunk_rng, timed

RTOL = 1e-9
DERIV_RTOL = 1e-6
MAX_K = 12
MAX_X = 40.0


def _ge(a: float, b: float, rtol: float = RTOL) -> bool:
    return a >= b - rtol * max(abs(a), abs(b), 1.0)


def _le(a: float, b: float, rtol: float = RTOL) -> bool:
    return _ge(b, a, rtol)


class _Checker:
    def __init__(self, report: SuiteReport):
        self.report = report

    def __call__(self, name: str, ok: bool, **params) -> None:
        self.report.instances += 1
        self.report.bump(name)
        if not ok:
            self.report.violations += 1
            self.report.bump(f"{name}_violations")
            self.report.witness({"check": name, **{k: float(v) for k, v in params.items()}})


def _uniform(rng, lo, hi):
    return float(lo + (hi - lo) * rng.random())


# -- phi -----------------------------------------------------------------------

def check_phi(check, max_k: int = 30) -> None:
    for k in range(3, max_k + 1):
        check("phi_endpoints", phi(1, k) == 0.0 and phi(k + 1, k) == 0.0, k=k)
        check("phi_at_2", phi(2, k) > 0.75, k=k, value=phi(2, k))
        ts = np.linspace(1, k + 1, 41)
        vals = [phi(float(t), k) for t in ts]
        for j in range(1, len(ts) - 1):
            mid = vals[j]
            chord = (vals[j - 1] + vals[j + 1]) / 2
            check("phi_concave", _ge(mid, chord), k=k, t=ts[j])


# -- derivatives of f_k ----------------------------------------------------------

def _mp_f(t, k):
    """f_k(t) in high precision: C(x, k-1) where C(x, k) = t."""

    def poly(x, j):
        out = mpmath.mpf(1)
        for i in range(j):
            out *= (x - i) / (i + 1)
        return out

    x0 = mpmath.mpf(x_from_size(float(t), k))
    x = mpmath.findroot(lambda x: poly(x, k) - t, x0)
    return poly(x, k - 1)


def check_derivatives(check, rng, count: int) -> None:
    with mpmath.workdps(40):
        for _ in range(count):
            k = int(rng.integers(2, MAX_K + 1))
            x = _uniform(rng, k - 1 + 0.05, MAX_X)
            t = binom_real(x, k)
            d1, d2 = f_k_derivatives(t, k)
            tm = mpmath.mpf(t)
            _, n1, n2 = (float(v) for v in mpmath.diffs(partial(_mp_f, k=k), tm, 2))
            check("deriv_first", abs(d1 - n1) <= DERIV_RTOL * abs(n1), k=k, x=x)
            check("deriv_second", abs(d2 - n2) <= DERIV_RTOL * abs(n2), k=k, x=x)


def check_second_derivative_floor(check, rng, count: int) -> None:
    for _ in range(count):
        k = int(rng.integers(2, MAX_K + 1))
        alpha = _uniform(rng, 0.01, 3.0)
        x = _uniform(rng, k - 1 + alpha, max(MAX_X, k + alpha))
        t = binom_real(x, k)
        _, d2 = f_k_derivatives(t, k)
        check("second_derivative_floor", -d2 > second_derivative_floor(t, k, alpha) * (1 - RTOL), k=k, x=x, alpha=alpha)


# -- concavity corollary and mean value bound ----------------------------------

def check_concave_corollary(check, rng, count: int) -> None:
    for _ in range(count):
        ell = int(rng.integers(2, MAX_K + 1))
        x = _uniform(rng, ell, MAX_X)
        z = _uniform(rng, 0, binom_real(x - 1, ell - 1))
        q = f_k(binom_real(x, ell) - z, ell) + f_k(z, ell - 1)
        check("concave_corollary", _ge(q, binom_real(x, ell - 1)), ell=ell, x=x, z=z)


def check_mvt(check, rng, count: int) -> None:
    for _ in range(count):
        k = int(rng.integers(1, MAX_K + 1))
        x = _uniform(rng, k - 1, MAX_X)
        c = _uniform(rng, 0, 10)
        lhs = binom_real(x + c, k)
        rhs = binom_real(x, k) + c * binom_real(x - 1, k - 1)
        check("mvt", _ge(lhs, rhs), k=k, x=x, c=c)


# -- ratio and shift approximations ------------------------------------------------

def check_binomial_ratio(check, rng, count: int) -> None:
    for _ in range(count):
        k = int(rng.integers(1, MAX_K + 1))
        y = _uniform(rng, k - 1 + 1e-3, MAX_X)
        x = _uniform(rng, y, MAX_X + 10)
        ratio = binom_real(x, k) / binom_real(y, k)
        lo = (x / y) ** k
        hi = ((x - k + 1) / (y - k + 1)) ** k
        check("ratio_sandwich", _le(lo, ratio) and _le(ratio, hi), k=k, x=x, y=y)
        theta = _uniform(rng, 0, 1)
        xt = (1 + theta) * y * (1 + _uniform(rng, 0, 0.5))
        check("ratio_i", _ge(binom_real(xt, k), (1 + theta) ** k * binom_real(y, k)), k=k, y=y, theta=theta)
        # (ii): the least x with C(x,k) >= (1+theta) C(y,k) is the sharpest case
        y2 = _uniform(rng, 1.01 * k, MAX_X)
        alpha = y2 / k - 1
        x2 = x_from_size((1 + theta) * binom_real(y2, k), k)
        bound = (1 + alpha * theta / (2 * k * (1 + alpha))) * y2
        check("ratio_ii", _ge(x2, bound), k=k, y=y2, theta=theta)
    for k in range(1, MAX_K + 1):
        y = k + 0.5
        check("ratio_equal", binom_real(y, k) / binom_real(y, k) == 1.0, k=k)


def _within(a: float, b: float, c: float) -> bool:
    """a = (1 +- c) b."""
    return _le(abs(a - b), c * abs(b)) if b else abs(a) <= RTOL


def check_shift_approx(check, rng, count: int) -> None:
    for _ in range(count):
        k = int(rng.integers(2, MAX_K + 1))
        y = _uniform(rng, k - 1 + 1e-3, MAX_X)
        c = _uniform(rng, 1e-6, 0.5)
        r = _uniform(rng, 0, c)
        x = x_from_size((1 + r) * binom_real(y, k), k)
        check("shift_k_minus_1", _within(binom_real(x - 1, k - 1), binom_real(y - 1, k - 1), c), k=k, y=y, c=c)
        if y > k:
            cc = (y + k) / (y - k) * c
            check("shift_down", _within(binom_real(x - 1, k), binom_real(y - 1, k), cc), k=k, y=y, c=c)
        check("shift_up", _within(binom_real(x + 1, k), binom_real(y + 1, k), c), k=k, y=y, c=c)


# -- Taylor and defect estimates on f_k minus a chord -------------------------------

def _chord_setup(rng):
    """(k, a, b, w, m, g) with g = f_k minus its chord on [a, b] and -g'' >= m on [a, a+w]."""
    k = int(rng.integers(2, MAX_K + 1))
    xa = _uniform(rng, k - 1 + 0.01, MAX_X - 1)
    xb = _uniform(rng, xa + 0.5, MAX_X)
    a, b = binom_real(xa, k), binom_real(xb, k)
    w = _uniform(rng, 0, (b - a) / 2)
    fa, fb = f_k(a, k), f_k(b, k)

    def g(t):
        return f_k(t, k) - (fa + (fb - fa) * (t - a) / (b - a))

    # the floor is decreasing in t, and x(t) >= xa on [a, a+w]
    m = second_derivative_floor(a + w, k, xa - (k - 1))
    return k, a, b, w, m, g


def check_taylor(check, rng, count: int) -> None:
    for _ in range(count):
        k, a, b, w, m, g = _chord_setup(rng)
        d = _uniform(rng, 0, w)
        check("taylor", _ge(g(a + d), d * w * m / 4), k=k, a=a, b=b, w=w, d=d)


def check_defect(check, rng, count: int) -> None:
    for _ in range(count):
        k, a, b, w, m, g = _chord_setup(rng)
        y = _uniform(rng, a, (a + b) / 2)
        z = a + b - y
        Phi = g(y) + g(z)
        check("defect", _le(y - a, 4 * Phi / (m * w)), k=k, a=a, b=b, w=w, y=y)


# -- specific instances ----------------------------------------------------------------

def _log_int(rng, hi: int) -> int:
    """Integer in [0, hi], log-uniform so that small values are well represented."""
    if hi <= 0:
        return 0
    return min(hi, int(math.exp(_uniform(rng, 0, math.log(hi + 1)))) - 1 + int(rng.integers(0, 2)))


def check_defect_apps(check, rng, count: int) -> None:
    for _ in range(count):
        ell = int(rng.integers(2, 9))
        n = int(rng.integers(ell + 1, 31))
        x = _uniform(rng, ell, n)
        Cn = math.comb(n, ell)
        Cx = binom_real(x, ell)
        Cx1 = binom_real(x, ell - 1)
        width = binom_real(x - 1, ell - 1)

        # (i)
        X = int(rng.integers(max(0, math.ceil(Cn - Cx / 4)), Cn + 1))
        y = _log_int(rng, X // 2)
        z = X - y
        cstar = (f_k(y, ell) + f_k(z, ell) - 1 - f_k(X, ell)) * x / Cx1
        ok = y == 0 if cstar <= 0 else _le(y, 400 * cstar * width)
        check("defectapps_i", ok, ell=ell, n=n, x=x, y=y, X=X)

        # (ii)
        top = math.ceil(Cx / 4) - 1
        if top >= 1:
            E = int(rng.integers(1, top + 1))
            y = E + _log_int(rng, (Cn - E) // 2)
            z = Cn + E - y
            cstar = (f_k(y, ell) + f_k(z, ell) - f_k(E, ell) - math.comb(n, ell - 1)) * x / Cx1
            ok = y == E if cstar <= 0 else _le(y - E, 400 * cstar * width)
            check("defectapps_ii", ok, ell=ell, n=n, x=x, y=y, E=E)

        # (iii) with the largest admissible theta
        theta = Cn / Cx - 1
        if theta > 1e-6:
            y = Cx + (Cn - Cx) / 2 * rng.random() ** 3
            z = Cx + Cn - y
            excess = f_k(y, ell) + f_k(z, ell) - Cx1 - math.comb(n, ell - 1)
            cstar = max(excess, 0.0) * x / Cx
            check("defectapps_iii", _le(y - Cx, 72 * cstar / theta * width), ell=ell, n=n, x=x, y=y, theta=theta)
            if x > ell and Cx < math.comb(n - 1, ell) + math.comb(n - 1, ell - 1) / 2:
                cprime = max(excess, 0.0) / (ell * (x - ell) / x ** 3 * Cx1)
                bound = 250 * cprime * binom_real(x - 3, ell - 2)
                check("defectapps_iii_furthermore", _le(y - Cx, bound), ell=ell, n=n, x=x, y=y)


def check_defect_app2(check, rng, count: int) -> None:
    for _ in range(count):
        k = int(rng.integers(3, MAX_K + 1))
        x = _uniform(rng, k, MAX_X)
        X = binom_real(x - 1, k)
        Y = binom_real(x - 1, k - 1)
        y = Y * rng.random() ** 3 if rng.random() < 0.5 else Y * (1 - rng.random() ** 3)
        C = binom_real(x, k - 1)
        cstar = max(f_k(X + y, k) + f_k(Y - y, k - 1) - C, 0.0) * x / C
        c = cstar * (1 + RTOL)
        below = _le(y, 600 * c * Y)
        above = y > (1 - 600 * c) * Y * (1 - RTOL)
        check("defectapp2", below or above, k=k, x=x, y=y)
        if x >= k + 1:
            below = _le(y, 1e7 * c * binom_real(x - 2, k - 1))
            check("defectapp2_furthermore", below or above, k=k, x=x, y=y)


def suite_estimates_numeric(points: int = 100_000, seed: int = 0) -> SuiteReport:
    """All real-variable estimates on random points of their domains (k <= 12, x <= 40)."""
    report = SuiteReport("estimates_numeric", {"points": points, "seed": seed, "rtol": RTOL, "deriv_rtol": DERIV_RTOL})
    check = _Checker(report)
    sampled = [
        check_second_derivative_floor,
        check_concave_corollary,
        check_mvt,
        check_binomial_ratio,
        check_shift_approx,
        check_taylor,
        check_defect,
        check_defect_apps,
        check_defect_app2,
    ]
    each = max(1, points // (len(sampled) + 1))
    with timed(report):
        check_phi(check)
        check_derivatives(check, chunk_rng(seed, 0), max(1, min(400, points // 250)))
        for j, fn in enumerate(sampled, start=1):
            fn(check, chunk_rng(seed, j), each)
    return report
