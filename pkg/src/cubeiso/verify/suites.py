"""Exhaustive and sampled checks of the exactly-checkable statements.

Every suite returns a :class:`SuiteReport`; a violation is a concrete
instance where the checked inequality or identity fails.  Randomized suites
split their work into fixed-size chunks seeded by ``(seed, chunk index)``, so
the instance stream does not depend on the number of worker processes.
"""
from __future__ import annotations

from itertools import combinations
from math import comb

import numpy as np

from .. import kernels
from ..binomials import harper_exact_bound
from ..compressions import AuditFailure, ScheduleStall, harper_compression_schedule, kk_compression_schedule
from ..constructions import (
    ekr_extremal_F,
    gen_ball_G1,
    gen_ball_G2,
    hamming_ball,
    katona_extremal_G,
    perturbed_clique_Jk,
    perturbed_segment_J,
)
from ..orders import colex_masks, is_ball_like, is_colex_initial, simplicial_segment_bits, sum_upper
from ..subsets import (
    CubeFamily,
    elements_of,
    layer_bits,
    neighborhood_sizes,
    upper_bits,
)
from .report import SuiteReport, chunk_rng, run_chunks, split, timed
from .sampling import random_cube_family, random_density_family, random_uniform_family

CHUNK = 1000


def _sets(masks) -> list[list[int]]:
    return [list(elements_of(int(m))) for m in masks]


def _word_sets(word: int, n: int) -> list[list[int]]:
    return _sets(x for x in range(1 << n) if word >> x & 1)


# -- Harper, exhaustively -----------------------------------------------------

def suite_harper_exhaustive(n: int = 4) -> SuiteReport:
    """Every family in {0,1}^n against the simplicial-segment bound."""
    if not 1 <= n <= 4:
        raise ValueError("exhaustive Harper needs 1 <= n <= 4")
    report = SuiteReport("harper_exhaustive", {"n": n})
    with timed(report):
        N = 1 << n
        words = np.arange(1 << N, dtype=np.uint64)
        boundary = kernels.boundary_sizes(words, n)
        sizes = kernels.popcount(words)
        bound = np.array([harper_exact_bound(n, m) for m in range(N + 1)], dtype=np.int64)
        low = np.flatnonzero(boundary < bound[sizes])
        report.instances = len(words)
        report.violations = len(low)
        for w in low[:20]:
            report.witness({"family": _word_sets(int(w), n), "boundary": int(boundary[w])})
        minima = np.full(N + 1, np.iinfo(np.int64).max)
        np.minimum.at(minima, sizes, boundary)
        for m in range(N + 1):
            if minima[m] != bound[m]:
                report.violations += 1
                report.witness({"m": m, "minimum": int(minima[m]), "bound": int(bound[m])})
        report.bump("extremal", int(np.count_nonzero(boundary == bound[sizes])))
    return report


# -- submodularity of iterated neighbourhoods ----------------------------------

def _submodularity_chunk(index: int, count: int, n: int, max_i: int, seed: int) -> SuiteReport:
    rng = chunk_rng(seed, index)
    report = SuiteReport("submodularity")
    for trial in range(count):
        A = random_density_family(rng, n)
        G = random_density_family(rng, n)
        a = neighborhood_sizes(A, max_i)
        g = neighborhood_sizes(G, max_i)
        lo = neighborhood_sizes(A & G, max_i)
        hi = neighborhood_sizes(A | G, max_i)
        report.instances += 1
        for i in range(max_i + 1):
            if a[i] + g[i] < lo[i] + hi[i]:
                report.violations += 1
                report.witness({"chunk": index, "trial": trial, "i": i})
            elif a[i] + g[i] == lo[i] + hi[i]:
                report.bump(f"equality_i{i}")
    return report


def suite_submodularity(n: int = 8, trials: int = 10_000, max_i: int = 3, seed: int = 0, threads: int = 1) -> SuiteReport:
    """|N^i(A)| + |N^i(G)| >= |N^i(A & G)| + |N^i(A | G)| on random pairs."""
    if not 1 <= n <= 12:
        raise ValueError("submodularity suite needs 1 <= n <= 12")
    report = SuiteReport("submodularity", {"n": n, "trials": trials, "max_i": max_i, "seed": seed})
    with timed(report):
        sizes = split(trials, CHUNK)
        parts = run_chunks(_submodularity_chunk_sized, len(sizes), threads, (sizes, n, max_i, seed))
        for part in parts:
            report.merge(part)
    return report


def _submodularity_chunk_sized(index, sizes, n, max_i, seed):
    return _submodularity_chunk(index, sizes[index], n, max_i, seed)


# -- identities for J_{m,D,E} -------------------------------------------------

class _SegmentSizes:
    """Cached |N^i(I_m)| for i <= k on a fixed cube."""

    def __init__(self, n: int):
        self.n = n
        self.cache = {}

    def __call__(self, m: int, k: int) -> list[int]:
        if (m, k) not in self.cache:
            self.cache[m, k] = neighborhood_sizes(CubeFamily(self.n, simplicial_segment_bits(self.n, m)), k)
        return self.cache[m, k]


def suite_plJ_identity(n: int = 8) -> SuiteReport:
    """|N^i(J)| + |N^i(I_m)| = |N^i(I_{m-D})| + |N^i(I_{m+E})| over the whole parameter range.

    Tuples: 1 <= k <= t <= n' <= n, 0 <= i <= k, 0 <= D, E <= C(t-1, k-1) and
    m = C(n', >= k+1) + C(t, k).  When t = k and D = 1 the identity can fail
    for i >= 1 (the two k-sets [k] and [k-1]+(k+1) share a shadow); those
    tuples are tallied under ``degenerate`` / ``degenerate_failures`` rather
    than as violations.
    """
    if not 1 <= n <= 10:
        raise ValueError("plJ suite needs 1 <= n <= 10")
    report = SuiteReport("plJ_identity", {"n": n})
    with timed(report):
        for nn in range(1, n + 1):
            sizes = _SegmentSizes(nn)

            for k in range(1, nn + 1):
                for t in range(k, nn + 1):
                    m = sum_upper(nn, k + 1) + comb(t, k)
                    width = comb(t - 1, k - 1)
                    base = sizes(m, k)
                    for D in range(width + 1):
                        lower = sizes(m - D, k)
                        for E in range(width + 1):
                            upper = sizes(m + E, k)
                            J = neighborhood_sizes(perturbed_segment_J(nn, m, D, E), k)
                            # t = k with D = 1 empties the k-layer part of I_{m-D}
                            degenerate = comb(t, k) == D
                            for i in range(k + 1):
                                report.instances += 1
                                holds = J[i] + base[i] == lower[i] + upper[i]
                                if degenerate and i >= 1:
                                    report.bump("degenerate")
                                    if not holds:
                                        report.bump("degenerate_failures")
                                elif not holds:
                                    report.violations += 1
                                    report.witness({"n": nn, "k": k, "t": t, "D": D, "E": E, "i": i})
    return report


# -- basic shadow properties ---------------------------------------------------

class _Prefixes:
    """Dense bitsets of colex prefixes and their shadows on a fixed ground set."""

    def __init__(self, ground: int):
        self.ground = ground
        self._bits = {}
        self._shadow = {}

    def bits(self, k: int) -> list[int]:
        if k not in self._bits:
            out = [0]
            acc = 0
            for m in colex_masks(self.ground, k):
                acc |= 1 << m
                out.append(acc)
            self._bits[k] = out
        return self._bits[k]

    def shadow(self, k: int) -> list[int]:
        if k not in self._shadow:
            self._shadow[k] = [kernels.lower_shadow(b, self.ground) for b in self.bits(k)]
        return self._shadow[k]


def suite_kkprops(n: int = 10) -> SuiteReport:
    """Shadow decompositions (i)-(iii) and strict subadditivity (iv) for colex segments.

    Sets live in [n+1] so that the (s+1)-shifted parts exist for every s <= n.
    At s = k, E1 = 0 the first part is the empty family, whose shadow is empty
    while binom([k-1], k-1) is not; (i) and (iii) are counted separately there.
    """
    if not 1 <= n <= 12:
        raise ValueError("kkprops suite needs 1 <= n <= 12")
    report = SuiteReport("kkprops", {"n": n})
    g = n + 1
    P = _Prefixes(g)

    def fail(part, **kw):
        report.violations += 1
        report.witness({"part": part, **kw})

    with timed(report):
        for k in range(1, n + 1):
            Pk, Sk = P.bits(k), P.shadow(k)
            Sk1 = P.shadow(k - 1) if k >= 2 else [0, 0]
            Pk1 = P.bits(k - 1) if k >= 2 else [0, 1]
            for s in range(k, n + 1):
                m, m1, width = comb(s, k), comb(s - 1, k), comb(s - 1, k - 1)
                low_part = layer_bits(s - 1, k - 1)
                for E1 in range(width + 1):
                    report.instances += 1
                    if m1 + E1 == 0:
                        report.bump("i_empty_family")
                        continue
                    rhs = low_part | (Sk1[E1] << (1 << (s - 1)))
                    if Sk[m1 + E1] != rhs:
                        fail("i", k=k, s=s, E1=E1)
                for E2 in range(width + 1):
                    report.instances += 1
                    top = Pk[m + E2] & ~Pk[m]
                    rhs = Pk1[E2] | (Sk1[E2] << (1 << s))
                    if kernels.lower_shadow(top, g) != rhs:
                        fail("ii", k=k, s=s, E2=E2)
                for E1 in range(width + 1):
                    for E2 in range(width + 1):
                        report.instances += 1
                        if m1 + E1 == 0:
                            report.bump("iii_empty_family")
                            continue
                        J = Pk[m1 + E1] | (Pk[m + E2] & ~Pk[m])
                        rhs = Sk[m1 + E1] | (Sk1[E2] << (1 << s))
                        if kernels.lower_shadow(J, g) != rhs:
                            fail("iii", k=k, s=s, E1=E1, E2=E2)
            # (iv) on segments of binom([n], k)
            M = comb(n, k)
            sz = np.array([x.bit_count() for x in Sk[: M + 1]], dtype=np.int64)
            a = np.arange(M + 1)[:, None]
            b = np.arange(M + 1)[None, :]
            valid = (a >= b) & (a + b <= M)
            lhs = sz[np.minimum(a + b, M)]
            rhs = sz[a] + sz[b]
            report.instances += int(valid.sum())
            bad = valid & (lhs > rhs)
            strict_needed = valid & (b > 0) & (k >= 2)
            bad |= strict_needed & (lhs == rhs)
            for ai, bi in zip(*np.nonzero(bad)):
                fail("iv", k=k, a=int(ai), b=int(bi))
            report.bump("iv_equalities", int((valid & (lhs == rhs) & (b > 0)).sum()))
    return report


# -- local stability for shadows -------------------------------------------------

def suite_local_stability_kk(n: int = 6, k: int = 3) -> SuiteReport:
    """Every subfamily A of binom([n], k) against the shadow of J^(k)_{s,E1,E2}.

    A subfamily is an index word whose bit j selects the j-th k-set in colex;
    the sets inside [s] are exactly the first C(s, k) bits.
    """
    M = comb(n, k)
    if not 1 <= k <= n or M > 24:
        raise ValueError("exhaustive local stability needs 1 <= k <= n and C(n, k) <= 24")
    report = SuiteReport("local_stability_kk", {"n": n, "k": k})
    with timed(report):
        members = colex_masks(n, k)
        rank = {m: j for j, m in enumerate(colex_masks(n, k - 1))}
        shadows = []
        for m in members:
            w = 0
            for e in elements_of(m):
                w |= 1 << rank[m & ~(1 << (e - 1))]
            shadows.append(w)
        sizes = kernels.popcount(kernels.union_table(np.array(shadows, dtype=np.uint64)))
        idx = np.arange(1 << M, dtype=np.uint64)
        report.instances = 1 << M
        for s in range(k, n + 1):
            p = comb(s, k)
            width = comb(s - 1, k - 1)
            a1 = np.bitwise_count(idx & np.uint64((1 << p) - 1)).astype(np.int64)
            a2 = np.bitwise_count(idx >> np.uint64(p)).astype(np.int64)
            E1 = a1 - comb(s - 1, k)
            ok = (E1 >= 0) & (E1 <= width) & (a2 <= width)
            table = np.zeros((width + 1, width + 1), dtype=np.int64)
            for e1 in range(width + 1):
                for e2 in range(min(width, M - p) + 1):
                    J = perturbed_clique_Jk(n, k, s, e1, e2)
                    table[e1, e2] = kernels.lower_shadow(J.bits, n).bit_count()
            bound = table[E1[ok], a2[ok]]
            have = sizes[ok]
            report.bump(f"s{s}_applicable", int(ok.sum()))
            report.bump(f"s{s}_equality", int(np.count_nonzero(have == bound)))
            bad = np.flatnonzero(ok)[have < bound]
            report.violations += len(bad)
            for w in bad[:20]:
                report.witness({"s": s, "family": _sets(members[j] for j in range(M) if int(w) >> j & 1)})
            eq = np.flatnonzero(ok)[have == bound]
            if len(eq) and len(report.witnesses) < 20:
                w = int(eq[-1])
                report.witness({"s": s, "equality": _sets(members[j] for j in range(M) if w >> j & 1)})
    return report


# -- local stability for ball-sized sets ------------------------------------------

def nonmono_table(n: int, k: int, max_D: int | None = None) -> list[int]:
    """|vertex boundary of J_{m,D,D}| for m = C(n, >= k) and D = 0..max_D.

    max_D defaults to min(n-1, C(n-1, k-1)).
    """
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside [1, {n}]")
    width = comb(n - 1, k - 1)
    if max_D is None:
        max_D = min(n - 1, width)
    if not 0 <= max_D <= width:
        raise ValueError(f"max_D must lie in [0, C({n - 1},{k - 1})={width}]")
    m = sum_upper(n, k)
    return [
        kernels.vertex_boundary(perturbed_segment_J(n, m, D, D).bits, n).bit_count()
        for D in range(max_D + 1)
    ]


def _ball_words(n: int, m: int) -> np.ndarray:
    """All Hamming balls of size m, one family per word."""
    words = []
    for r in range(n + 1):
        if sum(comb(n, j) for j in range(r + 1)) == m:
            for c in range(1 << n):
                words.append(hamming_ball(n, r, c).bits)
    return np.unique(np.array(words, dtype=np.uint64))


def _check_ball_words(report, words, n, balls, table, source):
    boundary = kernels.boundary_sizes(words, n)
    dist = np.full(len(words), 1 << n, dtype=np.int64)
    for b in balls:
        np.minimum(dist, np.bitwise_count(words ^ b).astype(np.int64), out=dist)
    D = dist // 2
    bad = np.flatnonzero(boundary < table[D])
    report.instances += len(words)
    report.violations += len(bad)
    for j in bad[:20]:
        report.witness({"source": source, "family": _word_sets(int(words[j]), n), "D": int(D[j])})
    eq = boundary == table[D]
    for d in np.unique(D):
        report.bump(f"{source}_D{int(d)}", int(np.count_nonzero(D == d)))
    report.bump(f"{source}_equality", int(np.count_nonzero(eq)))


def _random_ball_chunk(index, count, n, m, seed):
    rng = chunk_rng(seed, index)
    keys = rng.random((count, 1 << n))
    picks = np.argpartition(keys, m, axis=1)[:, :m].astype(np.uint64)
    return np.bitwise_or.reduce(np.left_shift(np.uint64(1), picks), axis=1)


def suite_ball_local_stability(
    n: int = 5, trials: int = 1_000_000, max_D: int = 3, seed: int = 0, threads: int = 1
) -> SuiteReport:
    """|vertex boundary of A| >= |vertex boundary of J_{m,D,D}| for ball-sized A.

    m = C(n, >= k) with k = n//2 + 1, and 2D is the distance from A to the
    nearest Hamming ball of size m.  Families are all swaps of at most max_D
    sets in and out of binom([n], >= k), plus ``trials`` uniform families of
    size m.
    """
    if not 2 <= n <= 6:
        raise ValueError("ball local stability packs families into words; need 2 <= n <= 6")
    k = n // 2 + 1
    m = sum_upper(n, k)
    report = SuiteReport("ball_local_stability", {"n": n, "k": k, "m": m, "trials": trials, "max_D": max_D, "seed": seed})
    with timed(report):
        N = 1 << n
        table = np.array(
            [kernels.vertex_boundary(perturbed_segment_J(n, m, D, D).bits, n).bit_count() for D in range(min(m, N - m) + 1)],
            dtype=np.int64,
        )
        report.params["table"] = table.tolist()
        balls = _ball_words(n, m)
        H = upper_bits(n, k)
        inside = [x for x in range(N) if H >> x & 1]
        outside = [x for x in range(N) if not H >> x & 1]
        for D in range(min(max_D, len(inside), len(outside)) + 1):
            rem = np.array([sum(1 << x for x in c) for c in combinations(inside, D)], dtype=np.uint64)
            add = np.array([sum(1 << x for x in c) for c in combinations(outside, D)], dtype=np.uint64)
            words = ((np.uint64(H) & ~rem)[:, None] | add[None, :]).ravel()
            _check_ball_words(report, words, n, balls, table, "swap")
        sizes = split(trials, 100_000)
        parts = run_chunks(_random_ball_chunk_sized, len(sizes), threads, (sizes, n, m, seed))
        for words in parts:
            _check_ball_words(report, words, n, balls, table, "random")
    return report


def _random_ball_chunk_sized(index, sizes, n, m, seed):
    return _random_ball_chunk(index, sizes[index], n, m, seed)


# -- intersections of two Hamming balls -------------------------------------------

def suite_ball_intersection_monotone(n: int = 8) -> SuiteReport:
    """f_t - f_{t+1} = |D_t| where f_t is the overlap of two radius-(n-k) balls at distance t."""
    if not 1 <= n <= 14:
        raise ValueError("ball intersection suite needs 1 <= n <= 14")
    report = SuiteReport("ball_intersection_monotone", {"n": n})
    with timed(report):
        for nn in range(1, n + 1):
            full = (1 << nn) - 1
            for k in range(1, nn + 1):
                B = hamming_ball(nn, nn - k, full)
                f = [(B & hamming_ball(nn, nn - k, full & ~((1 << t) - 1))).size() for t in range(nn + 1)]
                report.instances += 1
                if f[0] != B.size():
                    report.violations += 1
                    report.witness({"n": nn, "k": k, "t": 0, "f0": f[0]})
                for t in range(nn):
                    prefix = (1 << t) - 1
                    Dt = sum(
                        1
                        for A in colex_masks(nn - 1, k - 1)
                        if (A ^ prefix).bit_count() == k - 1
                    )
                    report.instances += 1
                    if f[t] - f[t + 1] != Dt:
                        report.violations += 1
                        report.witness({"n": nn, "k": k, "t": t, "difference": f[t] - f[t + 1], "D_t": Dt})
                    if t % 2 == 1 and f[t] == f[t + 1]:
                        report.bump("odd_t_flat")
    return report


# -- generalised Hamming balls -----------------------------------------------------

def suite_gen_balls(n: int = 12) -> SuiteReport:
    """G1 and G2 have equal sizes and equal materialized vertex boundaries.

    Range: 2 <= k, k+1 <= s <= n'-1, n' <= n; the families must also differ.
    """
    if not 3 <= n <= 16:
        raise ValueError("gen-ball suite needs 3 <= n <= 16")
    report = SuiteReport("gen_balls", {"n": n})
    with timed(report):
        for nn in range(3, n + 1):
            for k in range(2, nn):
                for s in range(k + 1, nn):
                    G1 = gen_ball_G1(nn, k, s)
                    G2 = gen_ball_G2(nn, k, s)
                    b1 = kernels.vertex_boundary(G1.bits, nn).bit_count()
                    b2 = kernels.vertex_boundary(G2.bits, nn).bit_count()
                    expected = comb(nn, k) - comb(s, k) + comb(s, k - 1)
                    report.instances += 1
                    if G1.size() != G2.size() or b1 != b2 or b1 != expected or G1 == G2:
                        report.violations += 1
                        report.witness({"n": nn, "k": k, "s": s, "sizes": [G1.size(), G2.size()], "boundaries": [b1, b2]})
    return report


# -- compression audits ---------------------------------------------------------------

def _audit(report, trace, terminal_ok, label):
    problems = trace.audit()
    if trace.final is None or trace.final.size() != trace.initial.size():
        problems.append("size not preserved")
    if not terminal_ok(trace.final):
        problems.append("wrong terminal form")
    if problems:
        report.violations += 1
        report.witness({"schedule": label, "problems": problems[:5], "initial": trace.to_dict()["initial"]})
    report.bump("steps", len(trace))


def _kk_audit_chunk(index, count, max_n, max_k, seed):
    rng = chunk_rng(seed, index)
    report = SuiteReport("compression_kk")
    for _ in range(count):
        n = int(rng.integers(2, max_n + 1))
        k = int(rng.integers(1, min(max_k, n) + 1))
        F = random_uniform_family(rng, n, k)
        report.instances += 1
        try:
            trace = kk_compression_schedule(F)
        except (ScheduleStall, AuditFailure) as exc:
            report.violations += 1
            report.bump("stalls" if isinstance(exc, ScheduleStall) else "audit_failures")
            report.witness({"n": n, "k": k, "family": _sets(F.members), "error": str(exc)})
            continue
        _audit(report, trace, is_colex_initial, "kk")
    return report


def _harper_audit_chunk(index, count, max_n, seed):
    rng = chunk_rng(seed, index)
    report = SuiteReport("compression_harper")
    for j in range(count):
        n = int(rng.integers(1, max_n + 1))
        F = random_cube_family(rng, n) if j % 2 else random_density_family(rng, n)
        report.instances += 1
        try:
            trace = harper_compression_schedule(F)
        except (ScheduleStall, AuditFailure) as exc:
            report.violations += 1
            report.bump("stalls" if isinstance(exc, ScheduleStall) else "audit_failures")
            report.witness({"n": n, "family": _sets(F.masks()), "error": str(exc)})
            continue
        _audit(report, trace, is_ball_like, "harper")
        report.bump("monotonize_steps", trace.L0)
    return report


def _kk_audit_sized(index, sizes, max_n, max_k, seed):
    return _kk_audit_chunk(index, sizes[index], max_n, max_k, seed)


def _harper_audit_sized(index, sizes, max_n, seed):
    return _harper_audit_chunk(index, sizes[index], max_n, seed)


def suite_compression_kk(n: int = 10, trials: int = 10_000, max_k: int = 4, seed: int = 0, threads: int = 1) -> SuiteReport:
    """Run the shadow compression schedule on random uniform families (2 <= n' <= n, k <= max_k)."""
    report = SuiteReport("compression_kk", {"n": n, "trials": trials, "max_k": max_k, "seed": seed})
    with timed(report):
        sizes = split(trials, CHUNK)
        for part in run_chunks(_kk_audit_sized, len(sizes), threads, (sizes, n, max_k, seed)):
            report.merge(part)
    return report


def suite_compression_harper(n: int = 8, trials: int = 10_000, seed: int = 0, threads: int = 1) -> SuiteReport:
    """Run the vertex-boundary compression schedule on random cube families (n' <= n)."""
    report = SuiteReport("compression_harper", {"n": n, "trials": trials, "seed": seed})
    with timed(report):
        sizes = split(trials, CHUNK)
        for part in run_chunks(_harper_audit_sized, len(sizes), threads, (sizes, n, seed)):
            report.merge(part)
    return report


# -- EKR and Katona spot checks ---------------------------------------------------------

def _greedy_pick(rng, candidates, count, compatible):
    """Up to ``count`` candidates, in random order, pairwise compatible."""
    chosen = []
    for j in rng.permutation(len(candidates)):
        c = candidates[j]
        if all(compatible(c, o) for o in chosen):
            chosen.append(c)
            if len(chosen) == count:
                break
    return chosen


def suite_ekr_spotcheck(n: int = 7, k: int = 3, trials: int = 2000, seed: int = 0) -> SuiteReport:
    """Random intersecting families versus |F_E|.

    Each instance picks E pairwise-intersecting k-sets avoiding element 1 and
    adds every star set meeting all of them, which is the largest intersecting
    family with that outside part.  E is then re-measured against the best star.
    """
    if not 2 * k < n:
        raise ValueError("need 2k < n")
    report = SuiteReport("ekr_spotcheck", {"n": n, "k": k, "trials": trials, "seed": seed})
    with timed(report):
        rng = chunk_rng(seed, 0)
        layer = colex_masks(n, k)
        outside = [m for m in layer if not m & 1]
        limit = comb(n - 2, k - 1)
        sizes = {}
        for _ in range(trials):
            E = int(rng.integers(0, limit + 1))
            out = _greedy_pick(rng, outside, E, lambda a, b: a & b)
            inside = [m for m in layer if m & 1 and all(m & o for o in out)]
            A = out + inside
            best = min(sum(1 for m in A if not m >> i & 1) for i in range(n))
            report.instances += 1
            if best > limit:
                report.bump("outside_range")
                continue
            if best not in sizes:
                sizes[best] = ekr_extremal_F(n, k, best).size()
            if len(A) > sizes[best]:
                report.violations += 1
                report.witness({"E": best, "size": len(A), "bound": sizes[best], "family": _sets(A)})
            elif len(A) == sizes[best]:
                report.bump("tight")
    return report


def suite_katona_spotcheck(n: int = 6, k: int = 4, trials: int = 2000, seed: int = 0) -> SuiteReport:
    """Random t-intersecting families (t = 2k - n) versus |G_E|.

    Each instance picks E pairwise t-intersecting sets of size < k, then adds
    every set of size >= k that t-intersects all of them.
    """
    t = 2 * k - n
    if t < 2:
        raise ValueError("need t = 2k - n >= 2")
    report = SuiteReport("katona_spotcheck", {"n": n, "k": k, "t": t, "trials": trials, "seed": seed})
    with timed(report):
        rng = chunk_rng(seed, 0)
        small = [x for x in range(1 << n) if t <= x.bit_count() < k]
        large = [x for x in range(1 << n) if x.bit_count() >= k]
        limit = comb(n - 1, k - 1)
        sizes = {}
        for _ in range(trials):
            E = int(rng.integers(0, limit + 1))
            low = _greedy_pick(rng, small, E, lambda a, b: (a & b).bit_count() >= t)
            high = [x for x in large if all((x & o).bit_count() >= t for o in low)]
            E = len(low)
            if E not in sizes:
                sizes[E] = katona_extremal_G(n, k, E).size()
            report.instances += 1
            size = len(low) + len(high)
            if size > sizes[E]:
                report.violations += 1
                report.witness({"E": E, "size": size, "bound": sizes[E], "family": _sets(low + high)})
            elif size == sizes[E]:
                report.bump("tight")
    return report
