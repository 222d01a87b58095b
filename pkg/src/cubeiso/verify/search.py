"""Exhaustive nearest-structure searches over cube automorphisms.

Distances from A to every XOR-translate of a family G come from one
correlation, computed with the fast Walsh-Hadamard transform:
|A ^ (G + c)| = |A| + |G| - 2 * sum_x A[x] G[x ^ c].
Permutations of [n] are covered by enumerating supports explicitly.
"""
from __future__ import annotations

from itertools import combinations
from math import comb

import numpy as np

from ..subsets import CubeFamily, UniformFamily, bits_from_bool, bool_from_bits

MAX_SEARCH_N = 16


def fwht(a: np.ndarray) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform of a length-2^n vector."""
    a = np.array(a, dtype=np.int64)
    N = len(a)
    h = 1
    while h < N:
        a = a.reshape(-1, 2, h)
        a = np.stack((a[:, 0] + a[:, 1], a[:, 0] - a[:, 1]), axis=1).reshape(N)
        h *= 2
    return a


def xor_correlation(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """out[c] = sum_x a[x] * b[x ^ c]."""
    N = len(a)
    return fwht(fwht(a) * fwht(b)) // N


def translate_distances(A: np.ndarray, G: np.ndarray) -> np.ndarray:
    """|A ^ (G xor c)| for every centre c, with A and G given as 0/1 vectors."""
    corr = xor_correlation(A.astype(np.int64), G.astype(np.int64))
    return int(A.sum()) + int(G.sum()) - 2 * corr


def _indicator(F: CubeFamily) -> np.ndarray:
    if F.n > MAX_SEARCH_N:
        raise ValueError(f"exhaustive search needs n <= {MAX_SEARCH_N}")
    return bool_from_bits(F.bits, F.n)


def _sizes(n: int) -> np.ndarray:
    return np.bitwise_count(np.arange(1 << n, dtype=np.uint64)).astype(np.int64)


def ball_indicator(n: int, radius: int) -> np.ndarray:
    """Hamming ball of the given radius around the empty set."""
    return _sizes(n) <= radius


def nearest_ball(F: CubeFamily, radius: int) -> tuple[int, int]:
    """(min |F ^ B|, centre mask) over Hamming balls B of the given radius.

    The ball around centre c is the radius-ball around the empty set shifted
    by c.
    """
    d = translate_distances(_indicator(F), ball_indicator(F.n, radius))
    c = int(np.argmin(d))
    return int(d[c]), c


def nearest_ball_any_radius(F: CubeFamily) -> tuple[int, int, int]:
    """(distance, radius, centre) minimizing over every radius and centre."""
    A = _indicator(F)
    best = None
    for r in range(F.n + 1):
        d = translate_distances(A, ball_indicator(F.n, r))
        c = int(np.argmin(d))
        if best is None or d[c] < best[0]:
            best = (int(d[c]), r, c)
    return best


def gen_ball_indicator(n: int, k: int, support: int, kind: int) -> np.ndarray:
    """binom([n], >= k+1) plus binom(S, k) (kind 1) or binom(S, k) and binom(S, k-1) (kind 2)."""
    x = np.arange(1 << n, dtype=np.uint64)
    size = _sizes(n)
    inside = np.bitwise_count(x & np.uint64(support)).astype(np.int64) == size
    upper = size >= k + 1
    if kind == 1:
        return upper | ((size == k) & inside)
    return upper | (((size == k) | (size == k - 1)) & inside)


def nearest_gen_ball(F: CubeFamily, k: int) -> dict:
    """Closest generalised Hamming ball with layer k under every cube automorphism.

    Kind 1 uses a support S of size s in [k, n]; kind 2 uses a support of size
    s - 1 for s in [k, n].  Returns the distance, the kind, s, the support
    mask, the translation centre, and |G|.
    """
    n = F.n
    A = _indicator(F)
    size_A = int(A.sum())
    best = None
    for kind in (1, 2):
        for s in range(k, n + 1):
            width = s if kind == 1 else s - 1
            if width < 0:
                continue
            for chosen in combinations(range(n), width):
                support = sum(1 << e for e in chosen)
                G = gen_ball_indicator(n, k, support, kind)
                size_G = int(G.sum())
                if best is not None and abs(size_G - size_A) >= best["distance"]:
                    break
                d = translate_distances(A, G)
                c = int(np.argmin(d))
                if best is None or d[c] < best["distance"]:
                    best = {
                        "distance": int(d[c]),
                        "kind": kind,
                        "s": s,
                        "support": support,
                        "center": c,
                        "size": size_G,
                    }
    return best


def gen_ball_family(n: int, k: int, support: int, kind: int, center: int = 0) -> CubeFamily:
    G = gen_ball_indicator(n, k, support, kind)
    idx = np.arange(1 << n) ^ center
    return CubeFamily(n, bits_from_bool(G[idx]))


def nearest_clique(F: UniformFamily) -> tuple[int, int]:
    """(min |F ^ binom(S, k)|, S mask) over all S with |S| >= k."""
    n, k = F.n, F.k
    members = np.array(F.members, dtype=np.uint64)
    best = None
    for S in range(1 << n):
        s = S.bit_count()
        if s < k:
            continue
        if len(members):
            inside = int(np.count_nonzero((members & np.uint64(S)) == members))
        else:
            inside = 0
        d = F.size() - inside + comb(s, k) - inside
        if best is None or d < best[0]:
            best = (d, S)
    return best
