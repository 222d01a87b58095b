"""Search for dense families with small boundary excess that are far from every Hamming ball.

Exploratory only: nothing here passes or fails.  The excess of A is
|boundary(A)| / L(A) - 1 where L is the real-variable lower bound, and the
distance is min |A ^ H| / |A| over Hamming balls H of every radius and centre.
When |A| is not a ball size, part of that distance is forced; ``size_gap``
records the smallest | |A| - |H| | so it can be subtracted.
"""
from __future__ import annotations

from math import sqrt

import numpy as np

from .. import kernels
from ..binomials import blov_bound
from ..constructions import hamming_ball
from ..orders import sum_upper
from ..subsets import CubeFamily, bits_from_bool, bool_from_bits
from .report import chunk_rng
from .sampling import planted
from .search import nearest_ball_any_radius

MAX_EXPLORE_N = 12


def ball_product(n: int, d: int) -> CubeFamily:
    """H x {0,1}^d with H the Hamming ball of radius floor((n-d-1)/2) in the first n-d coordinates."""
    if not 0 <= d < n:
        raise ValueError("need 0 <= d < n")
    low = n - d
    H = bool_from_bits(hamming_ball(low, (low - 1) // 2).bits, low)
    idx = np.arange(1 << n) & ((1 << low) - 1)
    return CubeFamily(n, bits_from_bool(H[idx]))


def _row(A: CubeFamily, source: str) -> dict | None:
    n, m = A.n, A.size()
    if not 1 <= m < 1 << n:
        return None
    boundary = kernels.vertex_boundary(A.bits, n).bit_count()
    lov = blov_bound(n, m)
    dist, radius, center = nearest_ball_any_radius(A)
    excess = boundary / lov - 1
    gap = min(abs(m - sum_upper(n, n - r)) for r in range(n + 1))
    return {
        "source": source,
        "size": m,
        "density": m / (1 << n),
        "boundary": boundary,
        "lovasz": lov,
        "excess": excess,
        "excess_sqrt_n": excess * sqrt(n),
        "ball_distance": dist,
        "relative_distance": dist / m,
        "size_gap": gap,
        "radius": radius,
        "center": center,
    }


def explore_dense_conjecture(n: int = 10, epsilon: float = 0.1, trials: int = 200, seed: int = 0, top: int = 10) -> dict:
    """Best witnesses: density >= epsilon and relative ball distance > epsilon, smallest excess first."""
    if not 1 <= n <= MAX_EXPLORE_N:
        raise ValueError(f"explore needs 1 <= n <= {MAX_EXPLORE_N}")
    rows = []
    for d in range(n):
        rows.append(_row(ball_product(n, d), f"product d={d}"))
    for r in range(n):
        rows.append(_row(hamming_ball(n, r), f"ball r={r}"))
    rng = chunk_rng(seed, 0)
    for j in range(trials):
        if j % 2:
            base = ball_product(n, int(rng.integers(0, n)))
        else:
            base = hamming_ball(n, int(rng.integers(0, n)), int(rng.integers(0, 1 << n)))
        rows.append(_row(planted(rng, base), f"planted trial={j}"))
    rows = [r for r in rows if r is not None and r["density"] >= epsilon]
    far = sorted((r for r in rows if r["relative_distance"] > epsilon), key=lambda r: (r["excess"], r["source"]))
    products = [r for r in rows if r["source"].startswith("product")]
    return {
        "n": n,
        "epsilon": epsilon,
        "trials": trials,
        "seed": seed,
        "candidates": len(rows),
        "products": products,
        "witnesses": far[:top],
    }
