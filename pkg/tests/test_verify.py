import json
from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import cube_families
from cubeiso.constructions import (
    ekr_extremal_F,
    hamming_ball,
    katona_extremal_G,
    perturbed_clique_Jk,
    projected_ball,
    star,
)
from cubeiso.orders import sum_upper
from cubeiso.subsets import CubeFamily, UniformFamily, symdiff_size, translate
from cubeiso.verify import (
    CONSTANTS,
    SUITES,
    THEOREMS,
    StabilityParams,
    SuiteReport,
    ball_product,
    explore_dense_conjecture,
    katona_theta,
    nonmono_table,
    run_suite,
    theorem_predicates,
    theorem_sweep,
)
from cubeiso.verify.report import chunk_rng, run_chunks, split
from cubeiso.verify.search import nearest_ball, nearest_ball_any_radius, translate_distances


def test_report_merge_and_json():
    a = SuiteReport("x", {"n": 3}, instances=2)
    a.bump("tight")
    b = SuiteReport("x", instances=3, violations=1)
    b.witness({"w": np.int64(4)})
    b.bump("tight", 2)
    a.merge(b)
    assert (a.instances, a.violations, a.counts) == (5, 1, {"tight": 3})
    assert not a.passed
    d = json.loads(a.to_json())
    assert d["witnesses"] == [{"w": 4}] and "wall_time" not in d
    assert "wall_time" in json.loads(a.to_json(timing=True))
    assert a.summary() == "x: FAIL instances=5 violations=1"


def test_chunking_is_deterministic():
    assert split(10, 4) == [4, 4, 2]
    a = chunk_rng(7, 3).integers(0, 1 << 30, 5)
    b = chunk_rng(7, 3).integers(0, 1 << 30, 5)
    assert (a == b).all()
    assert not (a == chunk_rng(7, 4).integers(0, 1 << 30, 5)).all()
    assert run_chunks(pow, 4, 1, (2,)) == [0, 1, 4, 9]


def test_stability_params():
    p = StabilityParams(delta=0.2)
    assert p.c("ball") == pytest.approx(CONSTANTS["ball"] * 0.2)
    assert p.c("ekr") == pytest.approx(CONSTANTS["ekr"] * 0.1)
    with pytest.raises(ValueError):
        StabilityParams(delta=1.5)
    with pytest.raises(ValueError):
        StabilityParams(theta=0.5).ekr_theta()
    assert katona_theta(10, 2) == pytest.approx(1e-6 * 2 / 10 * np.exp(0.4))
    assert katona_theta(30, 30) == 1


@given(cube_families(1, 6), st.data())
def test_translate_distances_brute_force(F, data):
    G = data.draw(cube_families(F.n, F.n))
    A = np.array([x in F for x in range(1 << F.n)])
    B = np.array([x in G for x in range(1 << F.n)])
    d = translate_distances(A, B)
    for c in range(1 << F.n):
        assert d[c] == symdiff_size(F, translate(G, c))


def test_nearest_ball():
    ball = hamming_ball(6, 2, 0b101010)
    assert nearest_ball(ball, 2) == (0, 0b101010)
    assert nearest_ball_any_radius(ball) == (0, 2, 0b101010)
    assert nearest_ball(projected_ball(5), 2)[0] >= comb(4, 2)


def test_nonmono_table():
    assert nonmono_table(5, 3) == [10, 12, 13, 12, 13]
    assert nonmono_table(5, 3, 0) == [10]
    table = nonmono_table(7, 4)
    assert len(table) == 7 and table[0] == 35


def test_small_exact_suites():
    assert run_suite("harper_exhaustive", n=2).instances == 16
    for name, opts in [
        ("harper_exhaustive", {"n": 3}),
        ("plJ_identity", {"n": 5}),
        ("kkprops", {"n": 7}),
        ("local_stability_kk", {"n": 5, "k": 2}),
        ("ball_intersection_monotone", {"n": 6}),
        ("gen_balls", {"n": 8}),
    ]:
        report = run_suite(name, **opts)
        assert report.passed, report.summary()
        assert report.instances > 0


def test_local_stability_small_variant_is_exhaustive():
    report = run_suite("local_stability_kk", n=5, k=2)
    assert report.instances == 1 << 10 and report.passed


def test_random_suites_small():
    for name, opts in [
        ("submodularity", {"n": 6, "trials": 300}),
        ("ball_local_stability", {"n": 5, "trials": 2000, "max_D": 1}),
        ("compression_kk", {"n": 7, "trials": 100}),
        ("compression_harper", {"n": 6, "trials": 100}),
        ("ekr_spotcheck", {"n": 7, "k": 3, "trials": 200}),
        ("katona_spotcheck", {"n": 6, "k": 4, "trials": 200}),
    ]:
        report = run_suite(name, **opts)
        assert report.passed, report.summary()


def test_suites_are_seed_deterministic_and_thread_independent():
    a = run_suite("submodularity", n=6, trials=400, seed=5, threads=1)
    b = run_suite("submodularity", n=6, trials=400, seed=5, threads=2)
    assert a.to_json() == b.to_json()
    c = run_suite("compression_harper", n=5, trials=60, seed=3, threads=2)
    d = run_suite("compression_harper", n=5, trials=60, seed=3)
    assert c.to_json() == d.to_json()


def test_numeric_suite_reports_known_failures():
    report = run_suite("estimates_numeric", trials=2000, seed=0)
    failing = {w["check"] for w in report.witnesses}
    # every violation comes from the two known false estimates
    assert failing <= {"phi_at_2", "defectapps_iii"}
    phi = [w for w in report.witnesses if w["check"] == "phi_at_2"]
    assert sorted(w["k"] for w in phi) == [3, 4]


def test_run_suite_errors():
    with pytest.raises(KeyError):
        run_suite("nope")
    with pytest.raises(TypeError):
        run_suite("gen_balls", trials=3)
    # threads is dropped for serial suites and None means default
    assert run_suite("harper_exhaustive", n=2, threads=4, seed=None).passed


def test_registry():
    assert {f"theorem_{w}" for w in THEOREMS} <= set(SUITES)
    assert len(SUITES) == 13 + len(THEOREMS)


def test_ball_predicate_on_ball():
    for n, r in [(5, 2), (6, 3), (7, 1)]:
        res = theorem_predicates(hamming_ball(n, r, 0), "ball")
        assert res["hypothesis"] and res["conclusion"] and res["holds"]
        assert res["distance"] == 0 and res["furthermore"]


def test_ball_predicate_projected_ball():
    res = theorem_predicates(projected_ball(5), "ball", StabilityParams(delta=0.01))
    assert res["boundary"] == 12
    assert not res["hypothesis"] and res["holds"]


def test_kk_predicate():
    A = perturbed_clique_Jk(7, 3, 5, 0, 0)
    res = theorem_predicates(A, "kk")
    assert res["hypothesis"] and res["conclusion"] and res["holds"]


def test_harper_predicate_on_gen_ball():
    from cubeiso.constructions import gen_ball_G1

    res = theorem_predicates(gen_ball_G1(7, 3, 5), "harper")
    assert res["hypothesis"] and res["conclusion"] and res["holds"]


def test_ekr_predicate():
    res = theorem_predicates(star(7, 3), "ekr")
    assert res["hypothesis"] and res["E"] == 0 and res["holds"]
    res = theorem_predicates(ekr_extremal_F(7, 3, 4), "ekr")
    assert res["intersecting"] and res["E"] == 4 and res["furthermore"]


def test_katona_predicate():
    G = katona_extremal_G(6, 4, 0)
    res = theorem_predicates(G, "katona", k=4)
    assert res["hypothesis"] and res["conclusion"] and res["furthermore"]
    assert theorem_predicates(G, "katona", t=2)["k"] == 4
    res = theorem_predicates(katona_extremal_G(6, 4, 1), "katona", k=4)
    assert res["E"] == 1 and res["furthermore"] and not res["hypothesis"]


def test_matching_predicate():
    from cubeiso.constructions import cover_ST

    A = cover_ST(9, 2, 0b1)
    res = theorem_predicates(A, "matching", t=1)
    assert res["matching_free"] and res["distance"] == 0 and res["holds"]


def test_predicate_shape_errors():
    with pytest.raises(ValueError):
        theorem_predicates(star(7, 3), "ball")
    with pytest.raises(ValueError):
        theorem_predicates(hamming_ball(5, 2), "kk")
    with pytest.raises(ValueError):
        theorem_predicates(CubeFamily(5, 0b11), "ball")
    with pytest.raises(ValueError):
        theorem_predicates(hamming_ball(5, 2), "katona")
    with pytest.raises(ValueError):
        theorem_predicates(UniformFamily(5, 2), "matching")
    with pytest.raises(ValueError):
        theorem_predicates(hamming_ball(5, 2), "nope")


@pytest.mark.parametrize("which", THEOREMS)
def test_theorem_sweeps_find_no_counterexample(which):
    report = theorem_sweep(which, n=7, trials=25, seed=1)
    assert report.passed, report.witnesses[:1]
    assert report.instances == 25
    assert report.counts.get("hypothesis_true", 0) + report.counts.get("hypothesis_false", 0) == 25


def test_ball_product():
    P = ball_product(10, 3)
    assert P.size() == sum(comb(7, i) for i in range(4)) * 8
    assert ball_product(5, 0) == hamming_ball(5, 2)
    with pytest.raises(ValueError):
        ball_product(5, 5)


def test_explore_dense():
    out = explore_dense_conjecture(n=8, epsilon=0.1, trials=20, seed=0, top=5)
    assert out["n"] == 8 and len(out["witnesses"]) <= 5
    excess = [w["excess"] for w in out["witnesses"]]
    assert excess == sorted(excess)
    assert all(w["relative_distance"] > 0.1 and w["density"] >= 0.1 for w in out["witnesses"])
    balls = [r for r in out["products"] if r["source"] == "product d=0"]
    assert balls and balls[0]["ball_distance"] == 0
    assert explore_dense_conjecture(n=8, trials=20, seed=0, top=5) == out
    with pytest.raises(ValueError):
        explore_dense_conjecture(n=13)


def test_half_cube_is_far_from_every_ball():
    out = explore_dense_conjecture(n=10, trials=0, top=50)
    half = next(r for r in out["products"] if r["source"] == "product d=1")
    assert half["size"] == 512 and half["boundary"] == comb(10, 5)
    assert half["excess"] == pytest.approx(0, abs=1e-12)
    assert half["relative_distance"] == pytest.approx(0.246, abs=1e-3)
    assert half["size_gap"] == 512 - sum_upper(10, 6)
