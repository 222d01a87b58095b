"""Colex order on k-sets and the simplicial order on all subsets of [n].

Colex: A < B iff max(A ^ B) lies in B.  For sets of equal size this is plain
integer order of the masks, which everything below leans on.

Simplicial: larger sets first; colex inside each size layer.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb

import numpy as np

from .subsets import (
    CubeFamily,
    Subset,
    UniformFamily,
    bits_from_bool,
    upper_bits,
)


def _cmp(a: int, b: int) -> int:
    return (a > b) - (a < b)


def colex_compare(A: Subset, B: Subset) -> int:
    """-1, 0 or 1 as A is before, equal to, or after B in colex."""
    if len(A) != len(B):
        raise ValueError("colex compares sets of equal size only")
    return _cmp(A.mask, B.mask)


def colex_rank(A: Subset | int) -> int:
    """0-based colex rank: sum of C(a_i - 1, i) over A = {a_1 < ... < a_k}."""
    mask = A.mask if isinstance(A, Subset) else A
    rank = 0
    i = 0
    pos = 0
    while mask:
        if mask & 1:
            i += 1
            rank += comb(pos, i)
        mask >>= 1
        pos += 1
    return rank


def colex_unrank_mask(k: int, rank: int) -> int:
    """Mask of the k-set with the given colex rank (ground set unbounded)."""
    if rank < 0:
        raise ValueError("rank must be >= 0")
    mask = 0
    for i in range(k, 0, -1):
        # largest c with C(c, i) <= rank; c >= i - 1
        c = i - 1
        while comb(c + 1, i) <= rank:
            c += 1
        mask |= 1 << c
        rank -= comb(c, i)
    return mask


def colex_unrank(n: int, k: int, rank: int) -> Subset:
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside [0, {n}]")
    if not 0 <= rank < comb(n, k):
        raise ValueError(f"rank {rank} outside [0, C({n},{k}))")
    return Subset(colex_unrank_mask(k, rank), n)


def next_colex(mask: int) -> int:
    """Next mask with the same popcount (Gosper's hack)."""
    c = mask & -mask
    r = mask + c
    return (((r ^ mask) >> 2) // c) | r


def colex_masks(n: int, k: int, start: int = 0, count: int | None = None) -> list[int]:
    """Masks with colex ranks start, start+1, ... (count of them, default to the end)."""
    total = comb(n, k)
    if count is None:
        count = total - start
    if start < 0 or count < 0 or start + count > total:
        raise ValueError(f"range [{start}, {start + count}) outside [0, C({n},{k})]")
    if count == 0:
        return []
    if k == 0:
        return [0]
    m = colex_unrank_mask(k, start)
    out = [m]
    for _ in range(count - 1):
        m = next_colex(m)
        out.append(m)
    return out


def initial_segment_colex(n: int, k: int, m: int) -> UniformFamily:
    """The m colex-smallest k-subsets of [n]."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside [0, {n}]")
    if not 0 <= m <= comb(n, k):
        raise ValueError(f"m={m} outside [0, C({n},{k})]")
    return UniformFamily(n, k, colex_masks(n, k, 0, m))


def final_segment_colex(n: int, k: int, m: int) -> UniformFamily:
    """The m colex-largest k-subsets of [n]."""
    total = comb(n, k)
    if not 0 <= m <= total:
        raise ValueError(f"m={m} outside [0, C({n},{k})]")
    return UniformFamily(n, k, colex_masks(n, k, total - m, m))


def simplicial_compare(A: Subset, B: Subset) -> int:
    if A.n != B.n:
        raise ValueError("sets over different ground sets")
    if len(A) != len(B):
        return -1 if len(A) > len(B) else 1
    return _cmp(A.mask, B.mask)


def sum_upper(n: int, k: int) -> int:
    """C(n, >= k) = sum of C(n, i) for i >= k."""
    return sum(comb(n, i) for i in range(max(k, 0), n + 1))


def simplicial_rank(A: Subset) -> int:
    return sum_upper(A.n, len(A) + 1) + colex_rank(A)


def simplicial_unrank(n: int, rank: int) -> Subset:
    if not 0 <= rank < 1 << n:
        raise ValueError(f"rank {rank} outside [0, 2^{n})")
    k = n
    while rank >= comb(n, k):
        rank -= comb(n, k)
        k -= 1
    return Subset(colex_unrank_mask(k, rank), n)


def layer_split(n: int, m: int) -> tuple[int, int]:
    """(k, r) with m = C(n, >= k+1) + r and 0 <= r < C(n, k); k = -1 when m = 2^n."""
    if not 0 <= m <= 1 << n:
        raise ValueError(f"m={m} outside [0, 2^{n}]")
    k = n
    while k >= 0 and m >= comb(n, k):
        m -= comb(n, k)
        k -= 1
    return k, m


@lru_cache(maxsize=4096)
def _colex_prefix_bits(n: int, k: int, r: int) -> int:
    if r == 0:
        return 0
    flags = np.zeros(1 << n, dtype=bool)
    flags[colex_masks(n, k, 0, r)] = True
    return bits_from_bool(flags)


@lru_cache(maxsize=1 << 14)
def simplicial_segment_bits(n: int, m: int) -> int:
    k, r = layer_split(n, m)
    if k < 0:
        return (1 << (1 << n)) - 1
    return upper_bits(n, k + 1) | _colex_prefix_bits(n, k, r)


def initial_segment_simplicial(n: int, m: int) -> CubeFamily:
    """The first m subsets of [n] in the simplicial order."""
    return CubeFamily(n, simplicial_segment_bits(n, m))


def is_colex_initial(F: UniformFamily) -> bool:
    m = F.size()
    if m == 0:
        return True
    return F.members[-1] == colex_unrank_mask(F.k, m - 1) if F.k else m == 1


def is_simplicial_initial(F: CubeFamily) -> bool:
    return F.bits == simplicial_segment_bits(F.n, F.size())


def is_initial_segment(F: CubeFamily | UniformFamily) -> bool:
    """True iff F equals the initial segment of its own size in its order."""
    if isinstance(F, UniformFamily):
        return is_colex_initial(F)
    return is_simplicial_initial(F)


def is_ball_like(F: CubeFamily) -> bool:
    """binom([n], >= k+1) <= F <= binom([n], >= k) for some k."""
    n = F.n
    for k in range(-1, n + 1):
        if upper_bits(n, k + 1) & ~F.bits == 0 and F.bits & ~upper_bits(n, max(k, 0)) == 0:
            return True
    return False


__all__ = [
    "colex_compare",
    "colex_rank",
    "colex_unrank",
    "colex_unrank_mask",
    "colex_masks",
    "next_colex",
    "initial_segment_colex",
    "final_segment_colex",
    "simplicial_compare",
    "simplicial_rank",
    "simplicial_unrank",
    "sum_upper",
    "layer_split",
    "simplicial_segment_bits",
    "initial_segment_simplicial",
    "is_colex_initial",
    "is_simplicial_initial",
    "is_initial_segment",
    "is_ball_like",
]
