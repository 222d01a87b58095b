"""Binomial coefficients, the shadow transfer function f_k, and closed-form bounds.

Exact values are Python ints (arbitrary precision).  Real-variable quantities
use floats; the root ``x`` with C(x, k) = t is found by bracketed Newton.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from math import comb

from .orders import layer_split, sum_upper


def binom_exact(a: int, b: int) -> int:
    """C(a, b) for integers; zero outside 0 <= b <= a, polynomial value for a < 0."""
    if b < 0:
        return 0
    if a >= 0:
        return comb(a, b) if b <= a else 0
    # C(a, b) = (-1)^b C(b - a - 1, b)
    return (-1) ** b * comb(b - a - 1, b)


def binom_real(x: float, k: int) -> float:
    """x(x-1)...(x-k+1)/k! as a polynomial in real x."""
    if k < 0:
        return 0.0
    out = 1.0
    for i in range(k):
        out *= (x - i) / (i + 1)
    return out


def g_k(x: float, k: int) -> float:
    """sum_{i<k} 1/(x-i); C(x,k)*g_k(x,k) is d/dx C(x,k)."""
    if k >= 1 and x <= k - 1:
        raise ValueError(f"g_k needs x > k-1 (k={k}, x={x})")
    return sum(1.0 / (x - i) for i in range(k))


def g_prime(x: float, k: int) -> float:
    return -sum(1.0 / (x - i) ** 2 for i in range(k))


def _integer_root(t, k: int) -> int | None:
    """Integer a >= k-1 with C(a, k) = t, if one exists."""
    if isinstance(t, float):
        if not t.is_integer():
            return None
        t = int(t)
    if not isinstance(t, int):
        return None
    if k == 0:
        return None
    if t == 0:
        return k - 1
    # C(a, k) >= (a-k+1)^k / k!, so a <= k - 1 + (k! t)^(1/k)
    lo, hi = k, k
    while comb(hi, k) < t:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if comb(mid, k) < t:
            lo = mid + 1
        else:
            hi = mid
    return lo if comb(lo, k) == t else None


def x_from_size(t: float, k: int, tol: float = 1e-12, max_iter: int = 200) -> float:
    """The unique x >= k-1 with C(x, k) = t."""
    if t < 0:
        raise ValueError("size must be >= 0")
    if k < 1:
        raise ValueError("k must be >= 1")
    a = _integer_root(t, k)
    if a is not None:
        return float(a)
    t = float(t)
    if k == 1:
        return t
    lo = float(k - 1)
    hi = float(k)
    while binom_real(hi, k) < t:
        hi = k - 1 + 2 * (hi - k + 1)
    # starting guess from C(x, k) ~ (x - (k-1)/2)^k / k!
    x = (math.lgamma(k + 1) + math.log(t)) / k if t > 0 else 0.0
    x = min(max(math.exp(x) + (k - 1) / 2, lo), hi)
    for _ in range(max_iter):
        fx = binom_real(x, k) - t
        if fx == 0:
            return x
        if fx > 0:
            hi = x
        else:
            lo = x
        deriv = binom_real(x, k) * g_k(x, k) if x > k - 1 else 0.0
        step_ok = deriv > 0
        if step_ok:
            nx = x - fx / deriv
            step_ok = lo < nx < hi
        if not step_ok:
            nx = 0.5 * (lo + hi)
        if abs(nx - x) <= 4e-16 * max(1.0, abs(x)) or hi - lo <= 4e-16 * hi:
            x = nx
            break
        x = nx
    if hi - lo > tol and abs(binom_real(x, k) - t) > tol * max(1.0, t):
        raise ArithmeticError(f"root of C(x,{k}) = {t} did not converge")
    return x


def f_k(t: float, k: int) -> float:
    """f_k(t) = C(x, k-1) where C(x, k) = t and x >= k-1; f_1 is identically 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return 1.0
    a = _integer_root(t, k)
    if a is not None:
        return float(comb(a, k - 1))
    return binom_real(x_from_size(t, k), k - 1)


def f_k_derivatives(t: float, k: int) -> tuple[float, float]:
    """(f_k'(t), f_k''(t)) from the closed forms in x = x_from_size(t, k)."""
    if k < 2:
        raise ValueError("derivatives are stated for k >= 2")
    x = x_from_size(t, k)
    if x <= k - 1:
        raise ValueError("derivatives need t > 0")
    gk = g_k(x, k)
    gk1 = g_k(x, k - 1)
    d1 = k * gk1 / ((x - k + 1) * gk)
    d2 = k * (g_prime(x, k - 1) - gk1 ** 2) / (t * (x - k + 1) ** 2 * gk ** 3)
    return d1, d2


def second_derivative_floor(t: float, k: int, alpha: float) -> float:
    """((2 + 1/alpha)^2 (x-k+1) t)^{-1}: lower bound on -f_k''(t) when x >= k-1+alpha."""
    x = x_from_size(t, k)
    return 1.0 / ((2 + 1 / alpha) ** 2 * (x - k + 1) * t)


def mvt_lower(x: float, c: float, k: int, rtol: float = 1e-12) -> bool:
    """C(x+c, k) >= C(x, k) + c*C(x-1, k-1)."""
    lhs = binom_real(x + c, k)
    rhs = binom_real(x, k) + c * binom_real(x - 1, k - 1)
    return lhs >= rhs - rtol * max(1.0, abs(rhs))


def cascade(m: int, k: int) -> list[tuple[int, int]]:
    """k-cascade of m: [(a_k, k), (a_{k-1}, k-1), ...] with a_k > a_{k-1} > ... and m = sum C(a_i, i)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    out = []
    i = k
    while m > 0 and i >= 1:
        a = i
        while comb(a + 1, i) <= m:
            a += 1
        out.append((a, i))
        m -= comb(a, i)
        i -= 1
    if m:
        raise AssertionError("cascade left a remainder")
    return out


def kk_shadow_size(m: int, k: int) -> int:
    """|shadow of the first m k-sets in colex|, from the cascade of m."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return sum(comb(a, i - 1) for a, i in cascade(m, k))


def kk_exact_bound(n: int, k: int, m: int) -> int:
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside [1, {n}]")
    if not 0 <= m <= comb(n, k):
        raise ValueError(f"m={m} outside [0, C({n},{k})]")
    return kk_shadow_size(m, k)


def harper_exact_bound(n: int, m: int) -> int:
    """|vertex boundary of the first m sets in simplicial order|."""
    k, r = layer_split(n, m)
    if k < 0 or m == 0:
        return 0
    shadow = kk_shadow_size(r, k) if k >= 1 else 0
    return comb(n, k) - r + shadow


def blov_layer(n: int, m: int) -> int:
    """k with C(n, >= k+1) < m <= C(n, >= k)."""
    if not 1 <= m <= 1 << n:
        raise ValueError(f"m={m} outside [1, 2^{n}]")
    k = n
    while sum_upper(n, k) < m:
        k -= 1
    return k


def blov_bound(n: int, m: int, k: int | None = None) -> float:
    """C(n,k) - C(x,k) + C(x,k-1) where m = C(n, >= k+1) + C(x, k)."""
    if k is None:
        k = blov_layer(n, m)
    if k < 1:
        raise ValueError("the bound needs k >= 1")
    t = m - sum_upper(n, k + 1)
    if not 0 <= t <= comb(n, k):
        raise ValueError(f"m={m} is not C({n},>={k + 1}) + C(x,{k}) with x <= {n}")
    x = x_from_size(t, k)
    return comb(n, k) - binom_real(x, k) + binom_real(x, k - 1)


def lym_plus_bound(n: int, k: int, size: float) -> float:
    """C(n-1,k-1) + alpha*C(n-1,k-2) for size = C(n-1,k) + alpha*C(n-1,k-1)."""
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside [1, {n}]")
    base = comb(n - 1, k)
    width = comb(n - 1, k - 1)
    alpha = (size - base) / width
    if not 0 <= alpha <= 1:
        raise ValueError(f"size {size} outside [C({n - 1},{k}), C({n},{k})]")
    return width + alpha * binom_exact(n - 1, k - 2)


def phi(t: float, k: int) -> float:
    """k - (t-1)/2 - k/(x-k+1) with C(x, k) = t, x in [k, k+1]."""
    if k < 3:
        raise ValueError("phi is defined for k >= 3")
    if not 1 <= t <= k + 1:
        raise ValueError(f"t={t} outside [1, {k + 1}]")
    x = x_from_size(t, k)
    return k - (t - 1) / 2 - k / (x - k + 1)


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    family_size: int
    x_root: float | None
    lovasz_bound: float | None
    exact_bound: int | None

    def to_dict(self) -> dict:
        return asdict(self)


def kk_report(n: int, k: int, m: int) -> BoundReport:
    return BoundReport(n, k, m, x_from_size(m, k), f_k(m, k), kk_exact_bound(n, k, m))


def harper_report(n: int, m: int) -> BoundReport:
    exact = harper_exact_bound(n, m)
    k, _ = layer_split(n, m)
    if m >= 1 and blov_layer(n, m) >= 1:
        k = blov_layer(n, m)
        x = x_from_size(m - sum_upper(n, k + 1), k)
        return BoundReport(n, k, m, x, blov_bound(n, m, k), exact)
    return BoundReport(n, k, m, None, None, exact)
