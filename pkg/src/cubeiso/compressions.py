"""(U, V)-compressions and the two compression schedules.

C_{U,V} sends A to (A - U) | V when U is inside A and V misses A, but keeps A
whenever that image is already a member.  On a dense bitset every eligible
vertex moves by the same index offset v - u, so one compression is a masked
shift (see :mod:`cubeiso.kernels`).

The Kruskal-Katona schedule drives a k-uniform family to the colex initial
segment of its size; the Harper schedule drives any cube family to a
ball-like family.  Every step is audited and recorded in a
:class:`CompressionTrace`.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from functools import cache

import numpy as np

from . import kernels
from .orders import colex_masks, initial_segment_colex, is_ball_like
from .subsets import CubeFamily, UniformFamily, _as_mask, elements_of

Family = CubeFamily | UniformFamily

# uniform families are compressed through a dense bitset up to this n
_DENSE_MAX_N = 20


class ScheduleStall(RuntimeError):
    """No eligible compression is left but the family is not in terminal form."""

    def __init__(self, message: str, trace: CompressionTrace):
        super().__init__(message)
        self.trace = trace


class AuditFailure(AssertionError):
    """A compression step broke one of the audited invariants."""


def _pair_masks(F: Family, U, V) -> tuple[int, int]:
    u = _as_mask(U, F.n)
    v = _as_mask(V, F.n)
    if u & v:
        raise ValueError("U and V must be disjoint")
    return u, v


def _compress_members(members, u: int, v: int) -> tuple[set, int]:
    present = set(members)
    out = set()
    moved = 0
    for a in members:
        if a & u == u and not a & v:
            b = (a ^ u) | v
            if b not in present:
                out.add(b)
                moved += 1
                continue
        out.add(a)
    return out, moved


def _compress(F: Family, u: int, v: int) -> tuple[Family, int]:
    if isinstance(F, CubeFamily):
        bits, moved = kernels.compress(F.bits, F.n, u, v)
        return CubeFamily(F.n, bits), moved
    if u.bit_count() != v.bit_count():
        raise ValueError("a uniform family needs |U| = |V| to stay uniform")
    if F.n <= _DENSE_MAX_N:
        bits, moved = kernels.compress(F.bits, F.n, u, v)
        return UniformFamily.from_bits(F.n, F.k, bits), moved
    out, moved = _compress_members(F.members, u, v)
    return UniformFamily(F.n, F.k, out), moved


def compress_UV(F: Family, U, V) -> Family:
    """C_{U,V}(F) = {C(A) : A in F} | {A in F : C(A) in F}."""
    u, v = _pair_masks(F, U, V)
    return _compress(F, u, v)[0]


def _fixed(bits: int, n: int, u: int, v: int) -> bool:
    return not (bits & kernels.eligible_mask(n, u, v) & ~_shift(bits, u - v))


def _shift(bits: int, d: int) -> int:
    return bits << d if d >= 0 else bits >> -d


def _dense(F: Family) -> int:
    if isinstance(F, UniformFamily) and F.n > _DENSE_MAX_N:
        raise ValueError(f"dense compression checks need n <= {_DENSE_MAX_N}")
    return F.bits


def is_UV_fixed(F: Family, U, V) -> bool:
    u, v = _pair_masks(F, U, V)
    if isinstance(F, UniformFamily) and F.n > _DENSE_MAX_N:
        return _compress_members(F.members, u, v)[1] == 0
    return _fixed(_dense(F), F.n, u, v)


def _drop_one(mask: int) -> list[int]:
    return [mask ^ (1 << (e - 1)) for e in elements_of(mask)]


def _subcondition(bits: int, n: int, u: int, v: int) -> bool:
    return all(_fixed(bits, n, u2, v2) for u2 in _drop_one(u) for v2 in _drop_one(v))


def _kk_condition(bits: int, n: int, u: int, v: int) -> bool:
    return all(any(_fixed(bits, n, u2, v2) for v2 in _drop_one(v)) for u2 in _drop_one(u))


def subcompression_condition(F: Family, U, V) -> bool:
    """C_{U',V'}(F) = F for every U' in U and V' in V one element smaller.

    With U empty there are no such pairs and the condition holds vacuously.
    """
    u, v = _pair_masks(F, U, V)
    return _subcondition(_dense(F), F.n, u, v)


def kk_subcompression_condition(F: Family, U, V) -> bool:
    """Equal-size variant: every u in U has some v in V with C_{U-u,V-v}(F) = F."""
    u, v = _pair_masks(F, U, V)
    if u.bit_count() != v.bit_count():
        raise ValueError("the equal-size condition needs |U| = |V|")
    return _kk_condition(_dense(F), F.n, u, v)


@dataclass(frozen=True)
class CompressionStep:
    U: tuple[int, ...]
    V: tuple[int, ...]
    size_before: int
    size_after: int
    boundary_before: int
    boundary_after: int
    moved: int
    # whether the sub-pair condition held for this pair (None when not applicable)
    condition: bool | None = None


@dataclass
class CompressionTrace:
    schedule: str
    n: int
    k: int | None
    measure: str
    initial: Family
    steps: list[CompressionStep] = field(default_factory=list)
    final: Family | None = None
    L0: int | None = None

    def __len__(self) -> int:
        return len(self.steps)

    def to_dict(self) -> dict:
        def sets(F):
            if F is None:
                return None
            return [list(elements_of(m)) for m in sorted(F.masks() if isinstance(F, CubeFamily) else F.members)]

        return {
            "schedule": self.schedule,
            "n": self.n,
            "k": self.k,
            "measure": self.measure,
            "L0": self.L0,
            "initial": sets(self.initial),
            "final": sets(self.final),
            "steps": [
                {**asdict(s), "U": list(s.U), "V": list(s.V)} for s in self.steps
            ],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def audit(self) -> list[str]:
        """Problems with the recorded steps (empty when the trace is valid)."""
        problems = []
        for i, s in enumerate(self.steps):
            if s.size_before != s.size_after:
                problems.append(f"step {i}: size changed")
            if s.boundary_after > s.boundary_before:
                problems.append(f"step {i}: {self.measure} increased")
            if set(s.U) & set(s.V):
                problems.append(f"step {i}: U and V overlap")
        return problems


def _boundary_size(bits: int, n: int) -> int:
    return kernels.vertex_boundary(bits, n).bit_count()


def _shadow_size(bits: int, n: int) -> int:
    return kernels.lower_shadow(bits, n).bit_count()


def _is_upset(bits: int, n: int) -> bool:
    lo, hi, _ = kernels.direction_masks(n)
    for i in range(n):
        if (bits & lo[i]) << (1 << i) & ~bits:
            return False
    return True


def _step(u, v, old, new, before, after, moved, condition=None) -> CompressionStep:
    return CompressionStep(
        elements_of(u), elements_of(v), old.bit_count(), new.bit_count(), before, after, moved, condition
    )


def _monotonize_bits(bits: int, n: int, steps: list) -> int:
    boundary = _boundary_size(bits, n)
    idle = 0
    i = 0
    while idle < n:
        v = 1 << i
        new, moved = kernels.compress(bits, n, 0, v)
        if moved:
            after = _boundary_size(new, n)
            if after > boundary:
                raise AuditFailure(f"C(0,{{{i + 1}}}) increased the vertex boundary")
            steps.append(_step(0, v, bits, new, boundary, after, moved, True))
            bits, boundary = new, after
            idle = 0
        else:
            idle += 1
        i = (i + 1) % n
    return bits


def monotonize(F: CubeFamily) -> tuple[CubeFamily, CompressionTrace]:
    """Apply C_{0,{i}} for i = 1..n cyclically until none moves anything."""
    trace = CompressionTrace("monotonize", F.n, None, "vertex_boundary", F)
    bits = _monotonize_bits(F.bits, F.n, trace.steps) if F.n else F.bits
    out = CubeFamily(F.n, bits)
    if not _is_upset(bits, F.n):
        raise AuditFailure("monotonize did not produce an upset")
    trace.final = out
    trace.L0 = len(trace.steps)
    return out, trace


@cache
def harper_pairs(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Pairs (U, V), disjoint, |V| = |U| + 1 >= 2, in (|U|, V, U) mask order."""
    us, vs = [], []
    for r in range(1, n):
        U_all = colex_masks(n, r)
        for v in colex_masks(n, r + 1):
            for u in U_all:
                if not u & v:
                    us.append(u)
                    vs.append(v)
    return np.array(us, dtype=np.uint64), np.array(vs, dtype=np.uint64)


@cache
def kk_pairs(n: int, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Pairs (U, V), disjoint, |U| = |V| <= k, V before U in colex, in (|U|, V, U) order."""
    us, vs = [], []
    for r in range(1, min(k, n // 2) + 1):
        layer = colex_masks(n, r)
        for j, v in enumerate(layer):
            for u in layer[j + 1:]:
                if not u & v:
                    us.append(u)
                    vs.append(v)
    return np.array(us, dtype=np.uint64), np.array(vs, dtype=np.uint64)


def harper_compression_schedule(F: CubeFamily, max_steps: int = 1_000_000) -> CompressionTrace:
    """Monotonize, then apply the first effective C_{U,V} with |V| = |U| + 1 until ball-like.

    Pairs are tried in order of (|U|, V, U).  Each step checks that the size is
    kept, the vertex boundary does not grow, the family stays an upset and the
    sub-pair condition holds.
    """
    n = F.n
    trace = CompressionTrace("harper", n, None, "vertex_boundary", F)
    bits = _monotonize_bits(F.bits, n, trace.steps) if n else F.bits
    trace.L0 = len(trace.steps)
    if not _is_upset(bits, n):
        raise AuditFailure("phase 1 did not produce an upset")
    us, vs = harper_pairs(n)
    boundary = _boundary_size(bits, n)
    weight = _weight(bits, n)
    while len(trace.steps) < max_steps:
        j = kernels.first_effective(bits, n, us, vs, 0) if len(us) else -1
        if j < 0:
            break
        u, v = int(us[j]), int(vs[j])
        cond = _subcondition(bits, n, u, v)
        new, moved = kernels.compress(bits, n, u, v)
        after = _boundary_size(new, n)
        step = _step(u, v, bits, new, boundary, after, moved, cond)
        trace.steps.append(step)
        if not cond:
            raise AuditFailure(f"sub-pair condition fails for U={step.U}, V={step.V}")
        if after > boundary:
            raise AuditFailure(f"C(U={step.U}, V={step.V}) increased the vertex boundary")
        if not _is_upset(new, n):
            raise AuditFailure(f"C(U={step.U}, V={step.V}) broke the upset property")
        new_weight = _weight(new, n)
        if new_weight <= weight:
            raise AuditFailure("total set size did not increase")
        bits, boundary, weight = new, after, new_weight
    trace.final = CubeFamily(n, bits)
    if not is_ball_like(trace.final):
        raise ScheduleStall("no effective pair left but the family is not ball-like", trace)
    return trace


def _weight(bits: int, n: int) -> int:
    # sum of |A| over members, via per-coordinate counts
    _, hi, _ = kernels.direction_masks(n)
    return sum((bits & h).bit_count() for h in hi)


def kk_compression_schedule(F: UniformFamily, max_steps: int = 1_000_000) -> CompressionTrace:
    """Compress a k-uniform family to the colex initial segment of its size.

    Candidate pairs have |U| = |V|, are disjoint, and have V before U in colex;
    they are tried in order of (|U|, V, U).  A pair is taken when it moves some
    member and the materialized shadow does not grow.  Each step records
    whether the equal-size sub-pair condition held.
    """
    if F.k < 1:
        raise ValueError("k must be >= 1")
    if F.n > _DENSE_MAX_N:
        raise ValueError(f"the schedule works on dense bitsets, n <= {_DENSE_MAX_N}")
    n, k = F.n, F.k
    trace = CompressionTrace("kk", n, k, "shadow", F)
    bits = F.bits
    size = F.size()
    target = initial_segment_colex(n, k, size).bits
    us, vs = kk_pairs(n, k)
    shadow = _shadow_size(bits, n)
    potential = _mask_sum(bits)
    while bits != target and len(trace.steps) < max_steps:
        j = 0
        taken = False
        while True:
            j = kernels.first_effective(bits, n, us, vs, j) if len(us) else -1
            if j < 0:
                break
            u, v = int(us[j]), int(vs[j])
            new, moved = kernels.compress(bits, n, u, v)
            after = _shadow_size(new, n)
            if after <= shadow:
                cond = _kk_condition(bits, n, u, v)
                trace.steps.append(_step(u, v, bits, new, shadow, after, moved, cond))
                new_potential = _mask_sum(new)
                if new_potential >= potential:
                    raise AuditFailure("colex rank sum did not decrease")
                bits, shadow, potential = new, after, new_potential
                taken = True
                break
            j += 1
        if not taken:
            break
    trace.final = UniformFamily.from_bits(n, k, bits)
    if bits != target:
        raise ScheduleStall("no shadow-safe effective pair left before the colex segment", trace)
    return trace


def _mask_sum(bits: int) -> int:
    total = 0
    for m in _members(bits):
        total += m
    return total


def _members(bits: int):
    x = bits
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


__all__ = [
    "AuditFailure",
    "CompressionStep",
    "CompressionTrace",
    "ScheduleStall",
    "compress_UV",
    "harper_compression_schedule",
    "harper_pairs",
    "is_UV_fixed",
    "kk_compression_schedule",
    "kk_pairs",
    "kk_subcompression_condition",
    "monotonize",
    "subcompression_condition",
]
