from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import cube_families, uniform_families
from cubeiso.constructions import hamming_ball, projected_ball, star
from cubeiso.orders import initial_segment_colex, initial_segment_simplicial
from cubeiso.subsets import (
    CubeFamily,
    Subset,
    UniformFamily,
    elements_of,
    has_matching_of_size,
    is_t_intersecting,
    iterated_neighborhood,
    join_sections,
    lower_shadow,
    mask_of,
    neighborhood_sizes,
    permute,
    sections,
    symdiff_size,
    translate,
    upper_bits,
    vertex_boundary,
)


def test_subset_labels_are_one_based():
    S = Subset.of([1, 3], 4)
    assert S.mask == 0b101
    assert S.elements == (1, 3)
    assert 3 in S and 2 not in S
    assert S.complement().elements == (2, 4)
    assert str(S) == "{1,3}"


@pytest.mark.parametrize("bad", [[0], [5], [1, 1]])
def test_subset_rejects_bad_elements(bad):
    with pytest.raises(ValueError):
        mask_of(bad, 4)


def test_families_are_immutable():
    F = CubeFamily(2, 1)
    with pytest.raises(AttributeError):
        F.bits = 3
    with pytest.raises(ValueError):
        UniformFamily(3, 2, [0b011, 0b111])


def test_boundary_of_full_cube_is_empty():
    assert vertex_boundary(CubeFamily.full(2)).size() == 0


def test_boundary_of_single_vertex():
    B = vertex_boundary(CubeFamily.from_sets(2, [[]]))
    assert sorted(s.elements for s in B.subsets()) == [(1,), (2,)]


def test_boundary_of_upper_half_n5():
    assert vertex_boundary(initial_segment_simplicial(5, 16)).size() == 10


def test_shadow_examples():
    assert lower_shadow(UniformFamily.from_sets(3, 2, [[1, 2], [1, 3], [2, 3]])).size() == 3
    S = lower_shadow(initial_segment_colex(5, 2, 3))
    assert [elements_of(m) for m in S.members] == [(1,), (2,), (3,)]
    assert lower_shadow(initial_segment_colex(6, 3, 20)).size() == 15
    with pytest.raises(ValueError):
        lower_shadow(UniformFamily(3, 0, [0]))


def test_shadow_large_n_path():
    F = UniformFamily.from_sets(40, 3, [[1, 2, 40], [3, 4, 5]])
    assert lower_shadow(F).size() == 6


def test_iterated_neighborhood_examples():
    F = initial_segment_simplicial(5, 16)
    assert iterated_neighborhood(F, 0) == F
    assert iterated_neighborhood(CubeFamily.from_sets(2, [[]]), 2) == CubeFamily.full(2)
    assert iterated_neighborhood(F, 1).size() == 26
    assert neighborhood_sizes(F, 2)[:2] == [16, 26]


def test_section_examples():
    full = CubeFamily.full(3)
    assert sections(full, 2) == (CubeFamily.full(2), CubeFamily.full(2))
    z, o = sections(CubeFamily.from_sets(4, [[]]), 4)
    assert z.size() == 1 and o.size() == 0
    z, o = sections(CubeFamily(5, upper_bits(5, 3)), 5)
    assert (z.size(), o.size()) == (5, 11)
    with pytest.raises(ValueError):
        sections(full, 4)


def test_intersecting_examples():
    assert is_t_intersecting(star(5, 2), 1)
    assert is_t_intersecting(CubeFamily(6, upper_bits(6, 4)), 2)
    assert not is_t_intersecting(UniformFamily.from_sets(4, 2, [[1, 2], [3, 4]]), 1)


def test_matching_examples():
    from cubeiso.constructions import cover_ST

    assert not has_matching_of_size(cover_ST(8, 2, 0b11), 3)
    assert has_matching_of_size(initial_segment_colex(6, 2, 15), 3)
    K7 = initial_segment_colex(7, 3, 35)
    assert has_matching_of_size(K7, 2) and not has_matching_of_size(K7, 3)


def test_symdiff_examples():
    F = initial_segment_simplicial(5, 16)
    assert symdiff_size(F, F) == 0
    assert symdiff_size(CubeFamily.empty(3), CubeFamily.full(3)) == 8
    assert symdiff_size(F, projected_ball(5)) >= comb(4, 2)
    with pytest.raises(ValueError):
        symdiff_size(CubeFamily.empty(3), CubeFamily.empty(4))


@given(cube_families(max_n=8))
def test_boundary_is_disjoint_and_empty_iff_trivial(F):
    B = vertex_boundary(F)
    assert (B & F).size() == 0
    if F.size() in (0, 1 << F.n):
        assert B.size() == 0
    else:
        assert B.size() > 0


@given(cube_families(max_n=7), st.integers(0, 4))
def test_neighborhoods_nest_and_fill(F, i):
    Ni = iterated_neighborhood(F, i)
    assert (F - Ni).size() == 0
    assert (Ni - iterated_neighborhood(F, i + 1)).size() == 0
    if F.size():
        assert iterated_neighborhood(F, F.n) == CubeFamily.full(F.n)


@given(cube_families(min_n=2, max_n=8), st.data())
def test_sections_roundtrip_and_boundary_split(F, data):
    c = data.draw(st.integers(1, F.n))
    z, o = sections(F, c)
    assert z.size() + o.size() == F.size()
    assert join_sections(z, o, c) == F
    assert vertex_boundary(F).size() >= vertex_boundary(z).size() + vertex_boundary(o).size()


@given(uniform_families())
def test_shadow_is_lower_layer(F):
    S = lower_shadow(F)
    assert S.k == F.k - 1
    assert (S.size() == 0) == (F.size() == 0)
    for m in S.members:
        assert any(m & a == m for a in F.members)


@given(cube_families(max_n=6), st.data())
def test_translate_and_permute_preserve_boundary(F, data):
    c = data.draw(st.integers(0, (1 << F.n) - 1))
    perm = data.draw(st.permutations(range(1, F.n + 1)))
    for G in (translate(F, c), permute(F, list(perm))):
        assert G.size() == F.size()
        assert vertex_boundary(G).size() == vertex_boundary(F).size()
    assert translate(translate(F, c), c) == F


@given(cube_families(max_n=6), cube_families(max_n=6))
def test_symdiff_is_a_metric(F, G):
    if F.n != G.n:
        return
    assert symdiff_size(F, G) == symdiff_size(G, F)
    assert (symdiff_size(F, G) == 0) == (F == G)


def test_hamming_ball_translation_is_ball():
    H = hamming_ball(4, 1, 0b0110)
    assert translate(hamming_ball(4, 1, 0), 0b0110) == H
    assert hamming_ball(4, 1) == hamming_ball(4, 1, 0b1111)
