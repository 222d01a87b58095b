"""Subsets of [n], families over {0,1}^n, and the basic operators on them.

Element ``i`` of [n] is bit ``i - 1`` of a mask.  A :class:`CubeFamily` keeps
its members as one dense bitset (a Python int with bit ``x`` set iff vertex
``x`` is a member), which makes boundaries and shadows a handful of
word-parallel shifts.  A :class:`UniformFamily` keeps a sorted tuple of masks;
sorted order of masks with equal popcount is colex order.
"""
from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cache

import numpy as np

from . import kernels

MAX_CUBE_N = 30
MAX_UNIFORM_N = 64


def mask_of(elements: Iterable[int], n: int) -> int:
    mask = 0
    for e in elements:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} outside [1, {n}]")
        bit = 1 << (e - 1)
        if mask & bit:
            raise ValueError(f"duplicate element {e}")
        mask |= bit
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _check_mask(mask: int, n: int) -> None:
    if mask < 0 or mask >> n:
        raise ValueError(f"mask {mask:#x} uses bits outside [1, {n}]")


@dataclass(frozen=True, order=True)
class Subset:
    """One vertex of {0,1}^n."""

    mask: int
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_UNIFORM_N:
            raise ValueError(f"n={self.n} out of range")
        _check_mask(self.mask, self.n)

    @classmethod
    def of(cls, elements: Iterable[int], n: int) -> Subset:
        return cls(mask_of(elements, n), n)

    @property
    def elements(self) -> tuple[int, ...]:
        return elements_of(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, element: int) -> bool:
        return 1 <= element <= self.n and bool(self.mask >> (element - 1) & 1)

    def complement(self) -> Subset:
        return Subset(((1 << self.n) - 1) ^ self.mask, self.n)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


def _as_mask(x, n: int) -> int:
    if isinstance(x, Subset):
        if x.n != n:
            raise ValueError(f"subset over [{x.n}] used with n={n}")
        return x.mask
    _check_mask(x, n)
    return x


@cache
def layer_bits(n: int, k: int) -> int:
    """Bitset of all k-subsets of [n] as a cube family."""
    sizes = np.bitwise_count(np.arange(1 << n, dtype=np.uint64))
    return bits_from_bool(sizes == k)


def bits_from_bool(flags: np.ndarray) -> int:
    """Pack a boolean vector (index = vertex) into a bitset int."""
    packed = np.packbits(np.asarray(flags, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def bool_from_bits(bits: int, n: int) -> np.ndarray:
    N = 1 << n
    raw = bits.to_bytes(max(1, (N + 7) // 8), "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:N].astype(bool)


@cache
def upper_bits(n: int, k: int) -> int:
    """Bitset of binom([n], >= k)."""
    bits = 0
    for j in range(max(k, 0), n + 1):
        bits |= layer_bits(n, j)
    return bits


def _iter_bits(bits: int) -> Iterator[int]:
    # byte-wise scan keeps this linear in the number of words
    if not bits:
        return
    raw = bits.to_bytes((bits.bit_length() + 7) // 8, "little")
    arr = np.frombuffer(raw, dtype=np.uint8)
    for pos in np.flatnonzero(np.unpackbits(arr, bitorder="little")):
        yield int(pos)


class CubeFamily:
    """An immutable family of subsets of [n], stored as a 2^n-bit bitset."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int = 0):
        if not 0 <= n <= MAX_CUBE_N:
            raise ValueError(f"CubeFamily needs 0 <= n <= {MAX_CUBE_N}, got {n}")
        if bits < 0 or bits >> (1 << n):
            raise ValueError("membership bitset has bits beyond 2^n")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("CubeFamily is immutable")

    @classmethod
    def from_masks(cls, n: int, masks: Iterable) -> CubeFamily:
        bits = 0
        for m in masks:
            bits |= 1 << _as_mask(m, n)
        return cls(n, bits)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> CubeFamily:
        return cls.from_masks(n, (mask_of(s, n) for s in sets))

    @classmethod
    def empty(cls, n: int) -> CubeFamily:
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> CubeFamily:
        return cls(n, (1 << (1 << n)) - 1)

    def size(self) -> int:
        return self.bits.bit_count()

    __len__ = size

    def __contains__(self, x) -> bool:
        return bool(self.bits >> _as_mask(x, self.n) & 1)

    def masks(self) -> Iterator[int]:
        """Member masks in increasing order."""
        return _iter_bits(self.bits)

    __iter__ = masks

    def subsets(self) -> list[Subset]:
        return [Subset(m, self.n) for m in self.masks()]

    def _same(self, other: CubeFamily) -> None:
        if not isinstance(other, CubeFamily):
            raise TypeError("expected a CubeFamily")
        if other.n != self.n:
            raise ValueError(f"families over different ground sets: {self.n} vs {other.n}")

    def __or__(self, other):
        self._same(other)
        return CubeFamily(self.n, self.bits | other.bits)

    def __and__(self, other):
        self._same(other)
        return CubeFamily(self.n, self.bits & other.bits)

    def __sub__(self, other):
        self._same(other)
        return CubeFamily(self.n, self.bits & ~other.bits)

    def __xor__(self, other):
        self._same(other)
        return CubeFamily(self.n, self.bits ^ other.bits)

    def __eq__(self, other):
        return isinstance(other, CubeFamily) and other.n == self.n and other.bits == self.bits

    def __hash__(self):
        return hash((self.n, self.bits))

    def __le__(self, other):
        self._same(other)
        return self.bits & ~other.bits == 0

    def complement(self) -> CubeFamily:
        return CubeFamily(self.n, ((1 << (1 << self.n)) - 1) ^ self.bits)

    def layer(self, k: int) -> UniformFamily:
        return UniformFamily.from_bits(self.n, k, self.bits & layer_bits(self.n, k))

    def is_upset(self) -> bool:
        lo, _, _ = kernels.direction_masks(self.n)
        b = self.bits
        return all(((b & lo[i]) << (1 << i)) & ~b == 0 for i in range(self.n))

    def __repr__(self):
        return f"CubeFamily(n={self.n}, size={self.size()})"


class UniformFamily:
    """An immutable k-uniform family: strictly increasing masks, all of popcount k."""

    __slots__ = ("n", "k", "members")

    def __init__(self, n: int, k: int, members: Iterable[int] = ()):
        if not 0 <= n <= MAX_UNIFORM_N:
            raise ValueError(f"UniformFamily needs 0 <= n <= {MAX_UNIFORM_N}, got {n}")
        if not 0 <= k <= n:
            raise ValueError(f"k={k} outside [0, {n}]")
        ms = tuple(sorted(members))
        for a, b in zip(ms, ms[1:]):
            if a == b:
                raise ValueError(f"duplicate member {elements_of(a)}")
        for m in ms:
            _check_mask(m, n)
            if m.bit_count() != k:
                raise ValueError(f"member {elements_of(m)} does not have size {k}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "members", ms)

    def __setattr__(self, name, value):
        raise AttributeError("UniformFamily is immutable")

    @classmethod
    def from_sets(cls, n: int, k: int, sets: Iterable[Iterable[int]]) -> UniformFamily:
        return cls(n, k, (mask_of(s, n) for s in sets))

    @classmethod
    def from_bits(cls, n: int, k: int, bits: int) -> UniformFamily:
        return cls(n, k, _iter_bits(bits))

    @property
    def bits(self) -> int:
        """The family as a cube bitset (only for n <= MAX_CUBE_N)."""
        if self.n > MAX_CUBE_N:
            raise ValueError(f"n={self.n} too large for a dense bitset")
        b = 0
        for m in self.members:
            b |= 1 << m
        return b

    def to_cube(self) -> CubeFamily:
        return CubeFamily(self.n, self.bits)

    def size(self) -> int:
        return len(self.members)

    __len__ = size

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x) -> bool:
        m = _as_mask(x, self.n)
        i = bisect_left(self.members, m)
        return i < len(self.members) and self.members[i] == m

    def subsets(self) -> list[Subset]:
        return [Subset(m, self.n) for m in self.members]

    def __eq__(self, other):
        return (
            isinstance(other, UniformFamily)
            and (other.n, other.k, other.members) == (self.n, self.k, self.members)
        )

    def __hash__(self):
        return hash((self.n, self.k, self.members))

    def __repr__(self):
        return f"UniformFamily(n={self.n}, k={self.k}, size={self.size()})"


Family = CubeFamily | UniformFamily


def vertex_boundary(F: CubeFamily) -> CubeFamily:
    """Vertices outside F adjacent to some member of F."""
    return CubeFamily(F.n, kernels.vertex_boundary(F.bits, F.n))


def lower_shadow(F: UniformFamily) -> UniformFamily:
    """All (k-1)-sets contained in some member of F."""
    if F.k == 0:
        raise ValueError("the empty-set layer has no lower shadow")
    if F.n <= 20:
        return UniformFamily.from_bits(F.n, F.k - 1, kernels.lower_shadow(F.bits, F.n))
    out = set()
    for m in F.members:
        x = m
        while x:
            low = x & -x
            out.add(m ^ low)
            x ^= low
    return UniformFamily(F.n, F.k - 1, out)


def iterated_shadow_size(F: UniformFamily, steps: int) -> int:
    G = F
    for _ in range(steps):
        G = lower_shadow(G)
    return G.size()


def iterated_neighborhood(F: CubeFamily, i: int) -> CubeFamily:
    """N^0(F) = F and N^{j+1}(F) = N^j(F) together with its vertex boundary."""
    if i < 0:
        raise ValueError("iteration count must be >= 0")
    bits = F.bits
    for _ in range(i):
        nxt = kernels.neighborhood(bits, F.n)
        if nxt == bits:
            break
        bits = nxt
    return CubeFamily(F.n, bits)


def neighborhood_sizes(F: CubeFamily, max_i: int) -> list[int]:
    """[|N^0(F)|, ..., |N^max_i(F)|]."""
    out = [F.size()]
    bits = F.bits
    for _ in range(max_i):
        bits = kernels.neighborhood(bits, F.n)
        out.append(bits.bit_count())
    return out


def sections(F: CubeFamily, coord: int) -> tuple[CubeFamily, CubeFamily]:
    """Split F on element ``coord``: (members without it, members with it removed)."""
    n = F.n
    if n < 1 or not 1 <= coord <= n:
        raise ValueError(f"coordinate {coord} outside [1, {n}]")
    b = coord - 1
    low = (1 << b) - 1
    zero = one = 0
    for x in F.masks():
        y = (x & low) | ((x >> (b + 1)) << b)
        if x >> b & 1:
            one |= 1 << y
        else:
            zero |= 1 << y
    return CubeFamily(n - 1, zero), CubeFamily(n - 1, one)


def join_sections(zero: CubeFamily, one: CubeFamily, coord: int) -> CubeFamily:
    """Inverse of :func:`sections`."""
    if zero.n != one.n:
        raise ValueError("sections over different ground sets")
    n = zero.n + 1
    b = coord - 1
    if not 0 <= b < n:
        raise ValueError(f"coordinate {coord} outside [1, {n}]")
    low = (1 << b) - 1
    bits = 0
    for part, flag in ((zero, 0), (one, 1 << b)):
        for y in part.masks():
            x = (y & low) | ((y >> b) << (b + 1)) | flag
            bits |= 1 << x
    return CubeFamily(n, bits)


def _member_array(F: Family) -> np.ndarray:
    if isinstance(F, CubeFamily):
        return np.fromiter(F.masks(), dtype=np.uint64, count=F.size())
    return np.array(F.members, dtype=np.uint64)


def is_t_intersecting(F: Family, t: int) -> bool:
    """True iff |A & B| >= t for all A, B in F (A = B included)."""
    if t < 1:
        raise ValueError("t must be >= 1")
    arr = _member_array(F)
    if len(arr) == 0:
        return True
    if int(np.bitwise_count(arr).min()) < t:
        return False
    for a in arr:
        if int(np.bitwise_count(arr & a).min()) < t:
            return False
    return True


def has_matching_of_size(F: UniformFamily, s: int) -> bool:
    """True iff F contains s pairwise disjoint members (branch and bound)."""
    if s <= 0:
        return True
    k = F.k
    if k == 0:
        # only the empty set; it is disjoint from itself just once
        return s <= F.size()
    if s * k > F.n or F.size() < s:
        return False
    # rarest elements first: members through them branch least
    degree = [0] * F.n
    for m in F.members:
        for e in elements_of(m):
            degree[e - 1] += 1
    order = sorted(F.members, key=lambda m: (min(degree[e - 1] for e in elements_of(m)), m))

    def search(cands: list[int], need: int) -> bool:
        if need == 0:
            return True
        if len(cands) < need:
            return False
        union = 0
        for m in cands:
            union |= m
        if union.bit_count() < need * k:
            return False
        first = cands[0]
        rest = [m for m in cands[1:] if not m & first]
        if search(rest, need - 1):
            return True
        return search(cands[1:], need)

    return search(order, s)


def symdiff_size(F: CubeFamily, G: CubeFamily) -> int:
    F._same(G)
    return (F.bits ^ G.bits).bit_count()


def translate(F: CubeFamily, center) -> CubeFamily:
    """Image of F under x -> x XOR center (a cube automorphism)."""
    c = _as_mask(center, F.n)
    lo, hi, _ = kernels.direction_masks(F.n)
    bits = F.bits
    for i in range(F.n):
        if c >> i & 1:
            s = 1 << i
            bits = ((bits & lo[i]) << s) | ((bits & hi[i]) >> s)
    return CubeFamily(F.n, bits)


def permute(F: Family, perm: dict[int, int] | list[int]) -> Family:
    """Relabel elements: element i goes to perm[i] (1-based; a list is indexed from element 1)."""
    n = F.n
    if isinstance(perm, dict):
        mapping = [perm.get(i, i) for i in range(1, n + 1)]
    else:
        mapping = list(perm)
    if sorted(mapping) != list(range(1, n + 1)):
        raise ValueError("perm must be a permutation of [n]")

    def image(m: int) -> int:
        out = 0
        for i, tgt in enumerate(mapping):
            if m >> i & 1:
                out |= 1 << (tgt - 1)
        return out

    if isinstance(F, CubeFamily):
        return CubeFamily.from_masks(n, (image(m) for m in F.masks()))
    return UniformFamily(n, F.k, (image(m) for m in F.members))
