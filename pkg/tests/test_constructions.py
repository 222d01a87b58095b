from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubeiso.constructions import (
    KINDS,
    ConstructionSpec,
    cover_ST,
    ekr_extremal_F,
    ekr_parts,
    gen_ball_G1,
    gen_ball_G2,
    hamming_ball,
    katona_extremal_G,
    katona_removed_count,
    perturbed_clique_Jk,
    perturbed_segment_J,
    projected_ball,
    star,
)
from cubeiso.orders import initial_segment_colex, initial_segment_simplicial, sum_upper
from cubeiso.subsets import (
    CubeFamily,
    UniformFamily,
    is_t_intersecting,
    lower_shadow,
    mask_of,
    symdiff_size,
    vertex_boundary,
)


def _boundary(F):
    return vertex_boundary(F).size()


def test_hamming_ball_sizes_and_centre():
    assert hamming_ball(5, 2) == initial_segment_simplicial(5, sum_upper(5, 3))
    assert hamming_ball(4, 0, mask_of([1, 3], 4)) == CubeFamily.from_sets(4, [[1, 3]])
    assert hamming_ball(4, 4).size() == 16
    for n in range(1, 9):
        for r in range(n + 1):
            assert hamming_ball(n, r, 0).size() == sum(comb(n, i) for i in range(r + 1))
    with pytest.raises(ValueError):
        hamming_ball(4, 5)


def test_gen_balls_example():
    G1, G2 = gen_ball_G1(6, 2, 4), gen_ball_G2(6, 2, 4)
    assert G1.size() == G2.size() == 48
    assert _boundary(G1) == _boundary(G2) == 13


@pytest.mark.parametrize("n", range(3, 13))
def test_gen_balls_equal_size_and_boundary(n):
    for k in range(2, n):
        for s in range(k + 1, n):
            G1, G2 = gen_ball_G1(n, k, s), gen_ball_G2(n, k, s)
            assert G1.size() == G2.size() == sum_upper(n, k + 1) + comb(s, k)
            assert _boundary(G1) == _boundary(G2)


def test_perturbed_segment_examples():
    J = perturbed_segment_J(5, 16, 2, 2)
    assert J.size() == 16 and _boundary(J) == 13
    assert _boundary(perturbed_segment_J(5, 16, 1, 1)) == 12
    assert perturbed_segment_J(5, 16, 0, 0) == initial_segment_simplicial(5, 16)
    with pytest.raises(ValueError):
        perturbed_segment_J(3, 4, 5, 0)


@given(st.integers(1, 8), st.data())
def test_perturbed_segment_size(n, data):
    m = data.draw(st.integers(0, 1 << n))
    D = data.draw(st.integers(0, m))
    E = data.draw(st.integers(0, (1 << n) - m))
    J = perturbed_segment_J(n, m, D, E)
    assert J.size() == m - D + E
    assert initial_segment_simplicial(n, m - D) <= J


def test_perturbed_clique_examples():
    Jk = perturbed_clique_Jk(6, 3, 5, 2, 1)
    assert Jk.size() == comb(4, 3) + 2 + 1
    assert lower_shadow(Jk).size() == 11
    assert perturbed_clique_Jk(6, 3, 5, 0, 0) == initial_segment_colex(6, 3, comb(4, 3))
    with pytest.raises(ValueError):
        perturbed_clique_Jk(6, 3, 5, 7, 0)


def test_projected_ball_examples():
    assert projected_ball(3).size() == 4 and _boundary(projected_ball(3)) == 4
    P = projected_ball(5)
    assert P.size() == 16 and _boundary(P) == 12
    assert projected_ball(7).size() == 64 and _boundary(projected_ball(7)) == 40
    # same size as the ball but at distance at least C(n-1,k-1) from it
    assert symdiff_size(P, hamming_ball(5, 2)) >= comb(4, 2)
    with pytest.raises(ValueError):
        projected_ball(6)


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_projected_ball_boundary_identity(n):
    k = (n + 1) // 2
    b = _boundary(projected_ball(n))
    assert b * n == (n + 1) * comb(n, k - 1)
    if k >= 2:
        assert b == 4 * comb(n - 2, k - 2)


def test_stars_and_covers():
    S = star(7, 3)
    assert S.size() == 15 and all(m & 1 for m in S)
    assert star(7, 3, 7).size() == 15
    assert cover_ST(7, 3, mask_of([1, 2], 7)).size() == 25 == comb(7, 3) - comb(5, 3)
    assert cover_ST(7, 3, 1) == S
    assert is_t_intersecting(S, 1)


def test_ekr_example():
    out, inside = ekr_parts(7, 3, 4)
    assert sorted(out.members) == sorted(mask_of(s, 7) for s in ([2, 6, 7], [3, 6, 7], [4, 6, 7], [5, 6, 7]))
    F = ekr_extremal_F(7, 3, 4)
    assert F.size() == 13 == comb(6, 2) - comb(4, 2) + 4
    assert is_t_intersecting(F, 1)
    assert ekr_extremal_F(7, 3, 0) == star(7, 3)
    with pytest.raises(ValueError):
        ekr_extremal_F(6, 3, 1)


@given(st.integers(3, 9), st.data())
def test_ekr_family_intersecting(n, data):
    k = data.draw(st.integers(1, (n - 1) // 2))
    E = data.draw(st.integers(0, comb(n - 2, k - 1)))
    F = ekr_extremal_F(n, k, E)
    assert is_t_intersecting(F, 1)
    assert F.size() <= comb(n - 1, k - 1)


def test_katona_example():
    assert katona_removed_count(6, 4, 1) == 3
    G = katona_extremal_G(6, 4, 1)
    assert G.size() == 20 == sum_upper(6, 4) + 1 - comb(3, 2)
    removed = (CubeFamily.full(6) - G).layer(4)
    assert sorted(removed.members) == sorted(mask_of(s, 6) for s in ([1, 4, 5, 6], [2, 4, 5, 6], [3, 4, 5, 6]))
    assert is_t_intersecting(G, 2)
    assert katona_extremal_G(6, 4, 0) == CubeFamily.full(6) - hamming_ball(6, 3, 0)


@pytest.mark.parametrize("n,k", [(6, 4), (7, 5), (8, 5), (8, 6), (9, 6)])
def test_katona_family_t_intersecting(n, k):
    t = 2 * k - n
    safe = comb(n - 2, k - 1)
    for E in range(comb(n - 1, k - 1) + 1):
        G = katona_extremal_G(n, k, E)
        assert G.size() == sum_upper(n, k) + E - katona_removed_count(n, k, E)
        # two (k-1)-sets of [n-1] may share only t-1 elements
        assert is_t_intersecting(G, t) == (E <= safe)


SPECS = [
    ("hamming_ball", {"n": 5, "radius": 2}, 16),
    ("gen_ball_G1", {"n": 6, "k": 2, "s": 4}, 48),
    ("gen_ball_G2", {"n": 6, "k": 2, "s": 4}, 48),
    ("J_mDE", {"n": 5, "m": 16, "D": 2, "E": 2}, 16),
    ("Jk_sE1E2", {"n": 6, "k": 3, "s": 5, "E1": 2, "E2": 1}, 7),
    ("projected_ball", {"n": 5}, 16),
    ("star", {"n": 7, "k": 3}, 15),
    ("cover_ST", {"n": 7, "k": 3, "T": 0b11}, 25),
    ("ekr_F_E", {"n": 7, "k": 3, "E": 4}, 13),
    ("katona_G_E", {"n": 6, "k": 4, "E": 1}, 20),
]


@pytest.mark.parametrize("kind,params,size", SPECS)
def test_construction_spec_builds(kind, params, size):
    F = ConstructionSpec(kind, params).build()
    assert isinstance(F, CubeFamily | UniformFamily)
    assert F.size() == size


def test_construction_spec_covers_every_kind():
    assert {s[0] for s in SPECS} == set(KINDS)
    with pytest.raises(ValueError):
        ConstructionSpec("nonsense").build()
