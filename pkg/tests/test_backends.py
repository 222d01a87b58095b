import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubeiso import kernels
from cubeiso.compressions import harper_pairs, kk_pairs

py = kernels.load_backend("python")
try:
    cy = kernels.load_backend("cython")
except ImportError:
    cy = None

needs_cython = pytest.mark.skipif(cy is None, reason="compiled backend not built")


@st.composite
def dense(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    return n, draw(st.integers(0, (1 << (1 << n)) - 1))


@st.composite
def dense_pair(draw, max_n=9):
    n, bits = draw(dense(max_n))
    u = draw(st.integers(0, (1 << n) - 1))
    v = draw(st.integers(0, (1 << n) - 1)) & ~u
    return n, bits, u, v


def test_backend_names():
    assert py.BACKEND == "python"
    assert kernels.BACKEND in ("cython", "python")
    with pytest.raises(ValueError):
        kernels.load_backend("fortran")


def test_environment_forces_pure_python():
    env = {**os.environ, "CUBEISO_PURE_PYTHON": "1"}
    out = subprocess.run(
        [sys.executable, "-c", "from cubeiso import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def _neighbors_naive(bits, n):
    out = 0
    for x in range(1 << n):
        if bits >> x & 1:
            for i in range(n):
                out |= 1 << (x ^ (1 << i))
    return out


@given(dense(7))
def test_python_kernels_match_definitions(nb):
    n, bits = nb
    assert py.neighborhood(bits, n) == _neighbors_naive(bits, n) | bits
    assert py.vertex_boundary(bits, n) == _neighbors_naive(bits, n) & ~bits
    down = 0
    for x in range(1 << n):
        if bits >> x & 1:
            for i in range(n):
                if x >> i & 1:
                    down |= 1 << (x ^ (1 << i))
    assert py.lower_shadow(bits, n) == down


@needs_cython
@given(dense(10))
def test_set_operators_agree(nb):
    n, bits = nb
    for name in ("vertex_boundary", "neighborhood", "lower_shadow"):
        assert getattr(cy, name)(bits, n) == getattr(py, name)(bits, n), name


@needs_cython
@given(dense_pair(10))
def test_compress_agrees(case):
    n, bits, u, v = case
    assert cy.compress(bits, n, u, v) == py.compress(bits, n, u, v)


@needs_cython
@given(dense(7), st.booleans(), st.integers(0, 50))
def test_first_effective_agrees(nb, harper, start):
    n, bits = nb
    us, vs = harper_pairs(n) if harper else kk_pairs(n, 3)
    start = min(start, len(us))
    assert cy.first_effective(bits, n, us, vs, start) == py.first_effective(bits, n, us, vs, start)


@needs_cython
@given(st.integers(0, 6), st.lists(st.integers(0, (1 << 64) - 1), max_size=40))
def test_word_kernels_agree(n, values):
    words = np.array(values, dtype=np.uint64)
    if n:
        assert np.array_equal(cy.boundary_sizes(words, n), py.boundary_sizes(words, n))
    assert np.array_equal(cy.popcount(words), py.popcount(words))
    masks = words[:12]
    assert np.array_equal(cy.union_table(masks), py.union_table(masks))


@needs_cython
def test_eligible_and_direction_masks_agree():
    for n in range(1, 8):
        assert cy.direction_masks(n) == py.direction_masks(n)
        for u in range(1 << n):
            v = ((1 << n) - 1) & ~u
            assert cy.eligible_mask(n, u, v) == py.eligible_mask(n, u, v)


def test_boundary_sizes_rejects_large_n():
    with pytest.raises(ValueError):
        py.boundary_sizes(np.zeros(1, dtype=np.uint64), 7)
