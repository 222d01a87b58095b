"""Hypothesis and conclusion checkers for the stability statements, plus random sweeps.

``theorem_predicates`` evaluates every clause of one statement on one family
and reports which hold; it does not decide anything asymptotic.  The sweep
counts instances whose hypothesis holds but whose conclusion fails; at desk
scale the constants are so small that hypotheses usually hold only for exact
extremal families, and the sweep reports how often that happens.

Statement ids:

``ball``      ball-sized sets close to a Hamming ball
``kk``        k-uniform families with near-minimal shadow, close to a clique
``harper``    any size, near the real-variable vertex-boundary bound
``ekr``       intersecting families close to a star
``katona``    t-intersecting families close to binom([n], >= k)
``matching``  families without a matching of size t+1, close to a cover S_T
"""
from __future__ import annotations

from itertools import combinations
from math import comb

import numpy as np

from .. import kernels
from ..binomials import binom_real, blov_bound, blov_layer, x_from_size
from ..constructions import (
    cover_ST,
    ekr_extremal_F,
    gen_ball_G1,
    gen_ball_G2,
    hamming_ball,
    katona_extremal_G,
    perturbed_clique_Jk,
    perturbed_segment_J,
    star,
)
from ..orders import colex_masks, sum_upper
from ..subsets import (
    CubeFamily,
    UniformFamily,
    has_matching_of_size,
    is_t_intersecting,
    permute,
    translate,
    upper_bits,
)
from .report import StabilityParams, SuiteReport, chunk_rng, katona_theta, timed
from .sampling import random_cube_family, random_uniform_family, swap_perturb
from .search import gen_ball_family, nearest_ball, nearest_gen_ball

THEOREMS = ("ball", "kk", "harper", "ekr", "katona", "matching")


def _boundary(F: CubeFamily) -> int:
    return kernels.vertex_boundary(F.bits, F.n).bit_count()


def _shadow(F: UniformFamily) -> int:
    return kernels.lower_shadow(F.bits, F.n).bit_count()


def _result(which, n, hypothesis, conclusion, furthermore, **details) -> dict:
    return {
        "theorem": which,
        "n": n,
        "hypothesis": bool(hypothesis),
        "conclusion": bool(conclusion),
        "furthermore": furthermore,
        "holds": (not hypothesis) or (bool(conclusion) and furthermore is not False),
        **details,
    }


def _ball(A: CubeFamily, p: StabilityParams) -> dict:
    n, m = A.n, A.size()
    k = next((j for j in range(1, n + 1) if sum_upper(n, j) == m), None)
    if k is None:
        raise ValueError("the ball statement needs |A| = C(n, >= k) with 1 <= k <= n")
    c = p.c("ball")
    boundary = _boundary(A)
    limit = (1 + c / n) * comb(n, k - 1)
    dist, center = nearest_ball(A, n - k)
    allowed = p.delta * comb(n - 1, k - 1)
    D = dist // 2
    J = perturbed_segment_J(n, m, D, D)
    return _result(
        "ball", n, boundary <= limit, dist <= allowed, boundary >= _boundary(J),
        k=k, boundary=boundary, hypothesis_limit=limit, distance=dist, center=center,
        distance_limit=allowed, J_boundary=_boundary(J),
    )


def _clique_table(A: UniformFamily) -> tuple[np.ndarray, np.ndarray]:
    """(S masks with |S| >= k, |A inside binom(S, k)|) for every S."""
    S = np.arange(1 << A.n, dtype=np.uint64)
    S = S[np.bitwise_count(S) >= A.k]
    members = np.array(A.members, dtype=np.uint64)
    if len(members) == 0:
        return S, np.zeros(len(S), dtype=np.int64)
    inside = np.zeros(len(S), dtype=np.int64)
    for start in range(0, len(members), 256):
        block = members[start:start + 256]
        inside += np.count_nonzero((block[None, :] & ~S[:, None]) == 0, axis=1)
    return S, inside


def _kk(A: UniformFamily, p: StabilityParams) -> dict:
    n, k, size = A.n, A.k, A.size()
    if k < 1 or size < 1:
        raise ValueError("the kk statement needs k >= 1 and a non-empty family")
    x = x_from_size(size, k)
    shadow = _shadow(A)
    limit = (1 + p.c("kk") / x) * binom_real(x, k - 1)
    S, inside = _clique_table(A)
    s = np.bitwise_count(S).astype(np.int64)
    clique = np.array([comb(int(j), k) for j in s], dtype=np.int64)
    dist = size + clique - 2 * inside
    allowed = p.delta * np.array([comb(int(j) - 1, k - 1) for j in s], dtype=float)
    ok = dist <= allowed
    best = int(np.argmin(dist - allowed))
    # local stability against J^(k)_{|S|,E1,E2} for every S in range
    width = np.array([comb(int(j) - 1, k - 1) for j in s], dtype=np.int64)
    E1 = inside - np.array([comb(int(j) - 1, k) for j in s], dtype=np.int64)
    E2 = size - inside
    apply = (E1 >= 0) & (E1 <= width) & (E2 <= width)
    furthermore = None
    cache = {}
    for j in np.flatnonzero(apply):
        key = (int(s[j]), int(E1[j]), int(E2[j]))
        if key not in cache:
            cache[key] = _shadow(perturbed_clique_Jk(n, k, *key))
        furthermore = (furthermore is not False) and shadow >= cache[key]
    return _result(
        "kk", n, shadow <= limit, bool(ok.any()), furthermore,
        k=k, x=x, shadow=shadow, hypothesis_limit=limit,
        best_S=int(S[best]), best_distance=int(dist[best]),
    )


def _harper(A: CubeFamily, p: StabilityParams) -> dict:
    n, m = A.n, A.size()
    if not 1 <= m < 1 << n:
        raise ValueError("the harper statement needs 1 <= |A| < 2^n")
    k = blov_layer(n, m)
    if k < 2:
        raise ValueError("the harper statement needs k >= 2")
    x = x_from_size(m - sum_upper(n, k + 1), k)
    boundary = _boundary(A)
    lov = blov_bound(n, m, k)
    limit = lov + p.c("harper") * k * (x - k) / x ** 3 * binom_real(x, k - 1)
    best = None
    for ell in range(max(1, k - 1), min(n, k + 1) + 1):
        found = nearest_gen_ball(A, ell)
        if found is not None and (best is None or found["distance"] < best["distance"]):
            best = {**found, "layer": ell}
    allowed = p.delta * binom_real(x - 3, k - 2)
    G = gen_ball_family(n, best["layer"], best["support"], best["kind"], best["center"])
    D = (G - A).size()
    E = (A - G).size()
    J = perturbed_segment_J(n, G.size(), D, E)
    return _result(
        "harper", n, boundary <= limit, best["distance"] <= allowed, boundary >= _boundary(J),
        k=k, x=x, boundary=boundary, lovasz=lov, hypothesis_limit=limit,
        distance=best["distance"], distance_limit=allowed, nearest=best, D=D, E=E,
    )


def _ekr(A: UniformFamily, p: StabilityParams) -> dict:
    n, k, size = A.n, A.k, A.size()
    if not 2 * k < n:
        raise ValueError("the ekr statement needs 2k < n")
    theta = p.ekr_theta()
    c = p.c("ekr")
    intersecting = is_t_intersecting(A, 1)
    full = comb(n - 1, k - 1)
    big = size >= (1 - c * (n - 2 * k) / n) * full
    E, i = min((sum(1 for m in A.members if not m >> j & 1), j + 1) for j in range(n))
    furthermore = None
    if E <= comb(n - 2, k - 1):
        furthermore = size <= ekr_extremal_F(n, k, E).size()
    return _result(
        "ekr", n, intersecting and big, E <= 2 * theta * full, furthermore,
        k=k, theta=theta, size=size, intersecting=intersecting, E=E, star=i,
    )


def _katona(A: CubeFamily, p: StabilityParams, k: int) -> dict:
    n = A.n
    t = 2 * k - n
    if t < 2 or k > n:
        raise ValueError("the katona statement needs t = 2k - n >= 2")
    if not p.delta < 0.25:
        raise ValueError("the katona statement needs delta < 1/4")
    theta = katona_theta(n, t)
    scale = theta * p.delta * comb(n - 1, k - 1)
    ball = CubeFamily(n, upper_bits(n, k))
    intersecting = is_t_intersecting(A, t)
    E = (A - ball).size()
    dist = (A ^ ball).size()
    furthermore = None
    if E <= comb(n - 1, k - 1):
        furthermore = A.size() <= katona_extremal_G(n, k, E).size()
    return _result(
        "katona", n, intersecting and A.size() >= sum_upper(n, k) - scale,
        E <= 5 * scale and dist <= 11 * scale, furthermore,
        k=k, t=t, theta=theta, intersecting=intersecting, E=E, distance=dist,
    )


def _matching(A: UniformFamily, p: StabilityParams, t: int) -> dict:
    n, k = A.n, A.k
    r = p.r
    if not (t >= 1 and 1 <= r <= k and n > (2 * t + 1) * (k + r) - t):
        raise ValueError("the matching statement needs r <= k and n > (2t+1)(k+r) - t")
    if not p.delta < 0.25:
        raise ValueError("the matching statement needs delta < 1/4")
    c = p.c("matching")
    free = not has_matching_of_size(A, t + 1)
    big = A.size() > comb(n, k) - (1 + r * c / n) * comb(n - t, k)
    members = np.array(A.members, dtype=np.uint64)
    cover = comb(n, k) - comb(n - t, k)
    best = None
    for T in combinations(range(n), t):
        mask = np.uint64(sum(1 << e for e in T))
        meet = int(np.count_nonzero(members & mask)) if len(members) else 0
        d = A.size() + cover - 2 * meet
        if best is None or d < best[0]:
            best = (d, [e + 1 for e in T])
    allowed = 3 * p.delta * comb(n - t - 1, k - 1)
    return _result(
        "matching", n, free and big, best[0] < allowed, None,
        k=k, t=t, r=r, matching_free=free, distance=best[0], T=best[1], distance_limit=allowed,
    )


def theorem_predicates(A, which: str, params: StabilityParams | None = None, k: int | None = None, t: int | None = None) -> dict:
    """Evaluate hypothesis, conclusion and the 'furthermore' clause of one statement on A.

    ``k`` is needed for ``katona`` (or pass ``t`` and k = (n+t)/2); ``t`` is
    needed for ``matching``.  Raises ValueError when A has the wrong shape.
    """
    p = params or StabilityParams()
    if which in ("ball", "harper", "katona") and not isinstance(A, CubeFamily):
        raise ValueError(f"the {which} statement takes a family in the whole cube")
    if which in ("kk", "ekr", "matching") and not isinstance(A, UniformFamily):
        raise ValueError(f"the {which} statement takes a k-uniform family")
    if which == "ball":
        return _ball(A, p)
    if which == "kk":
        return _kk(A, p)
    if which == "harper":
        return _harper(A, p)
    if which == "ekr":
        return _ekr(A, p)
    if which == "katona":
        if k is None:
            if t is None or (A.n + t) % 2:
                raise ValueError("katona needs k, or t with n + t even")
            k = (A.n + t) // 2
        return _katona(A, p, k)
    if which == "matching":
        if t is None:
            raise ValueError("matching needs t")
        return _matching(A, p, t)
    raise ValueError(f"unknown statement {which!r}; expected one of {', '.join(THEOREMS)}")


# -- random instances -------------------------------------------------------------------

def _remove_some(rng, A: UniformFamily, most: int) -> UniformFamily:
    drop = int(rng.integers(0, min(most, A.size()) + 1))
    keep = rng.permutation(A.size())[drop:]
    return UniformFamily(A.n, A.k, [A.members[j] for j in keep])


def _random_perm(rng, n: int) -> list[int]:
    return [int(v) + 1 for v in rng.permutation(n)]


def _instance(which: str, rng, n_max: int):
    """(family, shape kwargs) for one sweep instance."""
    if which == "ball":
        n = int(rng.integers(2, n_max + 1))
        k = int(rng.integers(1, n + 1))
        m = sum_upper(n, k)
        if rng.random() < 0.7:
            H = hamming_ball(n, n - k, int(rng.integers(0, 1 << n)))
            D = int(rng.integers(0, 4)) if rng.random() < 0.7 else 0
            return swap_perturb(rng, H, D), {}
        return random_cube_family(rng, n, m), {}
    if which == "kk":
        n = int(rng.integers(2, n_max + 1))
        k = int(rng.integers(1, min(n, 4) + 1))
        if rng.random() < 0.7:
            s = int(rng.integers(k, n + 1))
            S = rng.permutation(n)[:s]
            smask = sum(1 << int(e) for e in S)
            members = [m for m in colex_masks(n, k) if m & ~smask == 0]
            A = _remove_some(rng, UniformFamily(n, k, members), 2)
            extra = [m for m in colex_masks(n, k) if m & ~smask]
            add = [extra[j] for j in rng.permutation(len(extra))[: int(rng.integers(0, 3))]]
            A = UniformFamily(n, k, list(A.members) + add)
            if A.size():
                return A, {}
        return random_uniform_family(rng, n, k, int(rng.integers(1, comb(n, k) + 1))), {}
    if which == "harper":
        n = int(rng.integers(3, n_max + 1))
        k = int(rng.integers(2, n))
        s = int(rng.integers(k, n + 1))
        G = gen_ball_G1(n, k, s) if rng.random() < 0.5 else gen_ball_G2(n, k, s)
        G = translate(permute(G, _random_perm(rng, n)), int(rng.integers(0, 1 << n)) if rng.random() < 0.3 else 0)
        if rng.random() < 0.5:
            G = swap_perturb(rng, G, int(rng.integers(0, 3)))
        if not 1 <= G.size() < 1 << n or blov_layer(n, G.size()) < 2:
            G = gen_ball_G1(n, k, s)
        return G, {}
    if which == "ekr":
        n = int(rng.integers(5, n_max + 1))
        k = int(rng.integers(2, (n - 1) // 2 + 1))
        E = int(rng.integers(0, comb(n - 2, k - 1) + 1))
        base = ekr_extremal_F(n, k, E) if rng.random() < 0.6 else star(n, k, int(rng.integers(1, n + 1)))
        return _remove_some(rng, base, 2), {}
    if which == "katona":
        n = int(rng.integers(2, n_max + 1))
        k = int(rng.integers((n + 2 + 1) // 2, n + 1))
        E = int(rng.integers(0, comb(n - 1, k - 1) + 1))
        G = katona_extremal_G(n, k, E) if rng.random() < 0.6 else CubeFamily(n, upper_bits(n, k))
        flags = [x for x in G.masks()]
        drop = set(int(j) for j in rng.permutation(len(flags))[: int(rng.integers(0, 3))])
        return CubeFamily.from_masks(n, [f for j, f in enumerate(flags) if j not in drop]), {"k": k}
    if which == "matching":
        shapes = [
            (n, t, k)
            for n in range(2, n_max + 1)
            for t in range(1, n)
            for k in range(1, n)
            if n > (2 * t + 1) * (k + 1) - t
        ]
        n, t, k = shapes[int(rng.integers(len(shapes)))]
        T = sum(1 << int(e) for e in rng.permutation(n)[:t])
        A = _remove_some(rng, cover_ST(n, k, T), 2)
        return A, {"t": t}
    raise ValueError(f"unknown statement {which!r}")


def theorem_sweep(which: str, n: int = 8, trials: int = 200, seed: int = 0, params: StabilityParams | None = None) -> SuiteReport:
    """Random and planted instances; a violation is hypothesis true with a failing clause."""
    if which not in THEOREMS:
        raise ValueError(f"unknown statement {which!r}; expected one of {', '.join(THEOREMS)}")
    if which == "ekr" and n < 5:
        raise ValueError("the ekr sweep needs n >= 5")
    if which == "katona" and n < 2:
        raise ValueError("the katona sweep needs n >= 2")
    if which == "matching" and n < 6:
        raise ValueError("the matching sweep needs n >= 6")
    p = params or StabilityParams()
    report = SuiteReport(f"theorem_{which}", {"n": n, "trials": trials, "seed": seed, "delta": p.delta})
    with timed(report):
        rng = chunk_rng(seed, 0)
        for _ in range(trials):
            A, shape = _instance(which, rng, n)
            res = theorem_predicates(A, which, p, **shape)
            report.instances += 1
            if not res["hypothesis"]:
                report.bump("hypothesis_false")
                continue
            report.bump("hypothesis_true")
            if res["conclusion"]:
                report.bump("conclusion_true")
            if res["furthermore"] is None:
                report.bump("furthermore_not_applicable")
            if not res["holds"]:
                report.violations += 1
                report.witness({"n": A.n, "result": {k: v for k, v in res.items() if k != "nearest"}})
    return report
