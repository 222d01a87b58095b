"""Random families: uniform of a fixed size, and planted (structure plus noise)."""
from __future__ import annotations

from math import comb

import numpy as np

from ..orders import colex_masks
from ..subsets import CubeFamily, UniformFamily, bits_from_bool, bool_from_bits

NOISE_RATES = (0.01, 0.05, 0.1)


def random_cube_family(rng: np.random.Generator, n: int, size: int | None = None) -> CubeFamily:
    """Uniform over families of the given size (uniform size when None)."""
    N = 1 << n
    if size is None:
        size = int(rng.integers(0, N + 1))
    flags = np.zeros(N, dtype=bool)
    flags[rng.choice(N, size=size, replace=False)] = True
    return CubeFamily(n, bits_from_bool(flags))


def random_density_family(rng: np.random.Generator, n: int) -> CubeFamily:
    """Each vertex kept independently with a density drawn uniformly from (0, 1)."""
    p = rng.random()
    return CubeFamily(n, bits_from_bool(rng.random(1 << n) < p))


def random_uniform_family(rng: np.random.Generator, n: int, k: int, size: int | None = None) -> UniformFamily:
    layer = colex_masks(n, k)
    if size is None:
        size = int(rng.integers(0, comb(n, k) + 1))
    idx = rng.choice(len(layer), size=size, replace=False)
    return UniformFamily(n, k, [layer[i] for i in idx])


def planted(rng: np.random.Generator, F: CubeFamily, rate: float | None = None) -> CubeFamily:
    """F with every vertex flipped independently at ``rate`` (drawn from NOISE_RATES if None)."""
    if rate is None:
        rate = NOISE_RATES[int(rng.integers(len(NOISE_RATES)))]
    flags = bool_from_bits(F.bits, F.n) ^ (rng.random(1 << F.n) < rate)
    return CubeFamily(F.n, bits_from_bool(flags))


def planted_uniform(rng: np.random.Generator, F: UniformFamily, rate: float | None = None) -> UniformFamily:
    if rate is None:
        rate = NOISE_RATES[int(rng.integers(len(NOISE_RATES)))]
    layer = colex_masks(F.n, F.k)
    present = set(F.members)
    flip = rng.random(len(layer)) < rate
    return UniformFamily(F.n, F.k, [m for m, f in zip(layer, flip) if (m in present) != bool(f)])


def swap_perturb(rng: np.random.Generator, F: CubeFamily, D: int) -> CubeFamily:
    """Remove D members and add D non-members, chosen uniformly."""
    flags = bool_from_bits(F.bits, F.n)
    inside = np.flatnonzero(flags)
    outside = np.flatnonzero(~flags)
    D = min(D, len(inside), len(outside))
    flags[rng.choice(inside, size=D, replace=False)] = False
    flags[rng.choice(outside, size=D, replace=False)] = True
    return CubeFamily(F.n, bits_from_bool(flags))
