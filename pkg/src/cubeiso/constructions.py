"""Named families: Hamming balls, generalised balls, perturbed segments and cliques,
the projected ball, stars and covers, and the extremal EKR and Katona families.

Constructors use the concrete labels ([s] prefixes, element 1 for stars,
colex-maximal sets at the top end).  Use :func:`cubeiso.subsets.permute` or
:func:`cubeiso.subsets.translate` for isomorphic copies.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .binomials import kk_shadow_size
from .orders import colex_masks, simplicial_segment_bits, sum_upper
from .subsets import (
    MAX_CUBE_N,
    CubeFamily,
    UniformFamily,
    _as_mask,
    bits_from_bool,
    layer_bits,
    translate,
    upper_bits,
)


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_CUBE_N:
        raise ValueError(f"n={n} outside [1, {MAX_CUBE_N}]")


def hamming_ball(n: int, radius: int, center=None) -> CubeFamily:
    """All vertices within distance ``radius`` of ``center`` (default [n])."""
    _check_n(n)
    if not 0 <= radius <= n:
        raise ValueError(f"radius {radius} outside [0, {n}]")
    c = (1 << n) - 1 if center is None else _as_mask(center, n)
    # the ball around the empty set is everything of size <= radius
    around_empty = CubeFamily(n, ((1 << (1 << n)) - 1) & ~upper_bits(n, radius + 1))
    return translate(around_empty, c)


def gen_ball_G1(n: int, k: int, s: int) -> CubeFamily:
    """binom([n], >= k+1) together with binom([s], k)."""
    _check_n(n)
    if not 0 <= k <= s <= n:
        raise ValueError(f"need 0 <= k <= s <= n, got k={k}, s={s}, n={n}")
    # masks of subsets of [s] are < 2^s, so the [s]-cube layer embeds as is
    return CubeFamily(n, upper_bits(n, k + 1) | layer_bits(s, k))


def gen_ball_G2(n: int, k: int, s: int) -> CubeFamily:
    """binom([n], >= k+1) together with binom([s-1], k) and binom([s-1], k-1)."""
    _check_n(n)
    if not 1 <= k <= s <= n:
        raise ValueError(f"need 1 <= k <= s <= n, got k={k}, s={s}, n={n}")
    return CubeFamily(n, upper_bits(n, k + 1) | layer_bits(s - 1, k) | layer_bits(s - 1, k - 1))


def perturbed_segment_J(n: int, m: int, D: int, E: int) -> CubeFamily:
    """I_{m-D} together with I_{m+E} minus I_m (simplicial order)."""
    _check_n(n)
    if not (0 <= D <= m and E >= 0 and m + E <= 1 << n):
        raise ValueError(f"need 0 <= D <= m and m+E <= 2^n (m={m}, D={D}, E={E})")
    top = simplicial_segment_bits(n, m + E) & ~simplicial_segment_bits(n, m)
    return CubeFamily(n, simplicial_segment_bits(n, m - D) | top)


def perturbed_clique_Jk(n: int, k: int, s: int, E1: int, E2: int) -> UniformFamily:
    """I^(k)_{C(s-1,k)+E1} together with I^(k)_{C(s,k)+E2} minus I^(k)_{C(s,k)}."""
    if not 1 <= k <= s <= n:
        raise ValueError(f"need 1 <= k <= s <= n, got k={k}, s={s}, n={n}")
    width = comb(s - 1, k - 1)
    if not (0 <= E1 <= width and 0 <= E2 <= width):
        raise ValueError(f"E1, E2 must lie in [0, C({s - 1},{k - 1})={width}]")
    base = comb(s, k)
    if base + E2 > comb(n, k):
        raise ValueError(f"C({s},{k})+E2 exceeds C({n},{k})")
    members = colex_masks(n, k, 0, comb(s - 1, k) + E1) + colex_masks(n, k, base, E2)
    return UniformFamily(n, k, members)


def projected_ball(n: int) -> CubeFamily:
    """{A : |A & [n-2]| >= k-1} for odd n = 2k-1."""
    _check_n(n)
    if n < 3 or n % 2 == 0:
        raise ValueError("projected ball needs odd n >= 3")
    k = (n + 1) // 2
    x = np.arange(1 << n, dtype=np.uint64)
    inner = np.bitwise_count(x & np.uint64((1 << (n - 2)) - 1))
    return CubeFamily(n, bits_from_bool(inner >= k - 1))


def _layer(n: int, k: int) -> list[int]:
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside [0, {n}]")
    return colex_masks(n, k)


def star(n: int, k: int, i: int = 1) -> UniformFamily:
    """All k-subsets of [n] containing i."""
    if not 1 <= i <= n:
        raise ValueError(f"element {i} outside [1, {n}]")
    bit = 1 << (i - 1)
    return UniformFamily(n, k, [m for m in _layer(n, k) if m & bit])


def cover_ST(n: int, k: int, T) -> UniformFamily:
    """All k-subsets of [n] meeting T."""
    t = _as_mask(T, n)
    return UniformFamily(n, k, [m for m in _layer(n, k) if m & t])


def ekr_parts(n: int, k: int, E: int) -> tuple[UniformFamily, UniformFamily]:
    """(F_out, F_in) for the extremal intersecting family F_E."""
    if not 2 * k < n:
        raise ValueError(f"need 2k < n, got k={k}, n={n}")
    if not 0 <= E <= comb(n - 2, k - 1):
        raise ValueError(f"E={E} outside [0, C({n - 2},{k - 1})]")
    # colex on subsets of {2..n} is colex on [n-1] shifted up by one
    out = [m << 1 for m in colex_masks(n - 1, k, comb(n - 1, k) - E, E)]
    inside = [m for m in _layer(n, k) if m & 1 and all(m & o for o in out)]
    return UniformFamily(n, k, out), UniformFamily(n, k, inside)


def ekr_extremal_F(n: int, k: int, E: int) -> UniformFamily:
    out, inside = ekr_parts(n, k, E)
    return UniformFamily(n, k, out.members + inside.members)


def _iterated_colex_shadow(m: int, k: int, steps: int) -> int:
    for j in range(steps):
        if m == 0:
            return 0
        m = kk_shadow_size(m, k - j)
    return m


def katona_removed_count(n: int, k: int, E: int) -> int:
    """Least E' with |shadow^{t-1}(I^(k)_{C(n,k)-E'})| <= C(n, n-k+1) - E, t = 2k-n."""
    t = 2 * k - n
    if t < 2 or k > n:
        raise ValueError(f"need t = 2k-n >= 2, got k={k}, n={n}")
    if not 0 <= E <= comb(n - 1, k - 1):
        raise ValueError(f"E={E} outside [0, C({n - 1},{k - 1})]")
    total = comb(n, k)
    target = comb(n, n - k + 1) - E
    prev = None
    for removed in range(total + 1):
        size = _iterated_colex_shadow(total - removed, k, t - 1)
        if prev is not None and size > prev:
            raise AssertionError("iterated shadow of colex segments is not monotone")
        if size <= target:
            return removed
        prev = size
    raise AssertionError(f"no feasible E' for n={n}, k={k}, E={E}")


def katona_extremal_G(n: int, k: int, E: int) -> CubeFamily:
    """binom([n], >= k) plus the first E colex (k-1)-sets minus the last E' colex k-sets.

    The result is t-intersecting only while E <= C(n-2, k-1): past that the
    added (k-1)-sets use element n-1 and two of them can meet in t-1 points.
    """
    _check_n(n)
    removed = katona_removed_count(n, k, E)
    bits = upper_bits(n, k)
    for m in colex_masks(n, k - 1, 0, E):
        bits |= 1 << m
    for m in colex_masks(n, k, comb(n, k) - removed, removed):
        bits &= ~(1 << m)
    G = CubeFamily(n, bits)
    if G.size() != sum_upper(n, k) + E - removed:
        raise AssertionError("katona family has the wrong size")
    return G


KINDS = (
    "hamming_ball",
    "gen_ball_G1",
    "gen_ball_G2",
    "J_mDE",
    "Jk_sE1E2",
    "projected_ball",
    "star",
    "cover_ST",
    "ekr_F_E",
    "katona_G_E",
)


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    params: dict = field(default_factory=dict)

    def build(self):
        p = self.params
        k = self.kind
        if k == "hamming_ball":
            return hamming_ball(p["n"], p["radius"], p.get("center"))
        if k == "gen_ball_G1":
            return gen_ball_G1(p["n"], p["k"], p["s"])
        if k == "gen_ball_G2":
            return gen_ball_G2(p["n"], p["k"], p["s"])
        if k == "J_mDE":
            return perturbed_segment_J(p["n"], p["m"], p["D"], p["E"])
        if k == "Jk_sE1E2":
            return perturbed_clique_Jk(p["n"], p["k"], p["s"], p["E1"], p["E2"])
        if k == "projected_ball":
            return projected_ball(p["n"])
        if k == "star":
            return star(p["n"], p["k"], p.get("i", 1))
        if k == "cover_ST":
            return cover_ST(p["n"], p["k"], p["T"])
        if k == "ekr_F_E":
            return ekr_extremal_F(p["n"], p["k"], p["E"])
        if k == "katona_G_E":
            return katona_extremal_G(p["n"], p["k"], p["E"])
        raise ValueError(f"unknown construction {k!r}; expected one of {', '.join(KINDS)}")

