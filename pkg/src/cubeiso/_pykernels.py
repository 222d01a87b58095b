"""Pure-Python kernels over dense cube bitsets.

A family over {0,1}^n is a Python int whose bit ``x`` is set iff vertex ``x``
is a member.  Batch routines work on numpy ``uint64`` arrays where each word
holds a whole family (n <= 6).
"""
from functools import cache, lru_cache

import numpy as np

BACKEND = "python"


@cache
def direction_masks(n):
    """Return (lo, hi, full): lo[i] marks vertices with bit i clear."""
    N = 1 << n
    full = (1 << N) - 1
    lo = []
    for i in range(n):
        s = 1 << i
        # s ones then s zeros, doubled up to N bits
        pat = (1 << s) - 1
        filled = 2 * s
        while filled < N:
            pat |= pat << filled
            filled *= 2
        lo.append(pat & full)
    hi = [full ^ m for m in lo]
    lo = tuple(lo)
    hi = tuple(hi)
    return lo, hi, full


def vertex_boundary(bits, n):
    lo, hi, _ = direction_masks(n)
    nb = bits
    for i in range(n):
        s = 1 << i
        nb |= ((bits & lo[i]) << s) | ((bits & hi[i]) >> s)
    return nb & ~bits


def neighborhood(bits, n):
    lo, hi, _ = direction_masks(n)
    nb = bits
    for i in range(n):
        s = 1 << i
        nb |= ((bits & lo[i]) << s) | ((bits & hi[i]) >> s)
    return nb


def lower_shadow(bits, n):
    _, hi, _ = direction_masks(n)
    out = 0
    for i in range(n):
        out |= (bits & hi[i]) >> (1 << i)
    return out


@lru_cache(maxsize=1 << 16)
def eligible_mask(n, u, v):
    """Vertices x with u a subset of x and v disjoint from x."""
    lo, hi, full = direction_masks(n)
    m = full
    for i in range(n):
        b = 1 << i
        if u & b:
            m &= hi[i]
        elif v & b:
            m &= lo[i]
    return m


def _shift(bits, d):
    return bits << d if d >= 0 else bits >> -d


def _moved(bits, n, u, v):
    d = v - u
    return bits & eligible_mask(n, u, v) & ~_shift(bits, -d)


def compress(bits, n, u, v):
    """Apply the (u, v) compression; return (new_bits, number_moved)."""
    moved = _moved(bits, n, u, v)
    if not moved:
        return bits, 0
    return (bits & ~moved) | _shift(moved, v - u), moved.bit_count()


def first_effective(bits, n, us, vs, start=0):
    """Index of the first candidate pair (us[j], vs[j]), j >= start, that moves a member."""
    for j in range(start, len(us)):
        u = int(us[j])
        v = int(vs[j])
        if bits & eligible_mask(n, u, v) & ~_shift(bits, u - v):
            return j
    return -1


_LO64 = (
    0x5555555555555555,
    0x3333333333333333,
    0x0F0F0F0F0F0F0F0F,
    0x00FF00FF00FF00FF,
    0x0000FFFF0000FFFF,
    0x00000000FFFFFFFF,
)


def boundary_sizes(words, n):
    if n > 6:
        raise ValueError("boundary_sizes packs one family per word; n must be <= 6")
    x = np.asarray(words, dtype=np.uint64)
    full = np.uint64((1 << (1 << n)) - 1) if n < 6 else np.uint64(0xFFFFFFFFFFFFFFFF)
    nb = x.copy()
    for i in range(n):
        s = np.uint64(1 << i)
        lo = np.uint64(_LO64[i])
        hi = np.uint64(~_LO64[i] & 0xFFFFFFFFFFFFFFFF)
        nb |= ((x & lo) << s) | ((x & hi) >> s)
    nb &= ~x
    nb &= full
    return np.bitwise_count(nb).astype(np.int64)


def union_table(masks):
    """OR of every subfamily: out[S] = OR of masks[j] over bits j of S."""
    masks = np.asarray(masks, dtype=np.uint64)
    m = len(masks)
    out = np.zeros(1 << m, dtype=np.uint64)
    for j in range(m):
        half = 1 << j
        np.bitwise_or(out[:half], masks[j], out=out[half:2 * half])
    return out


def popcount(words):
    return np.bitwise_count(np.asarray(words, dtype=np.uint64)).astype(np.int64)
