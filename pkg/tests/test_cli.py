import json
import subprocess
import sys

import pytest

from cubeiso.cli import run
from cubeiso.io import parse_family, read_family
from cubeiso.subsets import UniformFamily


def cli(capsys, *argv):
    code = run([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_nonmono_table(capsys):
    assert cli(capsys, "table", "nonmono", "--n", 5, "--k", 3) == (0, "10,12,13,12,13\n", "")
    code, out, _ = cli(capsys, "table", "nonmono", "--n", 5, "--k", 3, "--csv", "--header")
    assert out.splitlines() == ["D,boundary", "0,10", "1,12", "2,13", "3,12", "4,13"]
    code, out, _ = cli(capsys, "table", "nonmono", "--n", 5, "--k", 3, "--json")
    assert json.loads(out) == {"n": 5, "k": 3, "m": 16, "D": [0, 1, 2, 3, 4], "boundary": [10, 12, 13, 12, 13]}


def test_bound_harper_json(capsys):
    code, out, _ = cli(capsys, "bound", "harper", "--n", 5, "--m", 16, "--json")
    assert code == 0
    assert json.loads(out) == {"n": 5, "k": 3, "m": 16, "x_root": 5.0, "lovasz": 10.0, "exact": 10}


def test_bound_variants(capsys):
    code, out, _ = cli(capsys, "bound", "kk", "--n", 6, "--k", 4, "--m", 12)
    assert code == 0 and "exact=19\n" in out
    code, out, _ = cli(capsys, "bound", "lovasz-kk", "--n", 6, "--k", 4, "--m", 12, "--json")
    assert "exact" not in json.loads(out)
    code, out, _ = cli(capsys, "bound", "lym-plus", "--n", 6, "--k", 3, "--size", 15, "--csv")
    assert out == "6,3,15.0,12.5\n"
    code, out, _ = cli(capsys, "bound", "lovasz-harper", "--n", 5, "--m", 16, "--csv", "--header")
    assert out.splitlines()[0] == "n,k,m,x_root,lovasz"
    assert cli(capsys, "bound", "kk", "--n", 6, "--m", 3)[0] == 2


def test_order(capsys, tmp_path):
    assert cli(capsys, "order", "rank", "--set", "1,3,4")[1] == "order=colex\nrank=2\n"
    code, out, _ = cli(capsys, "order", "rank", "--set", "", "--order", "simplicial", "--n", 3, "--json")
    assert json.loads(out) == {"order": "simplicial", "rank": 7}
    code, out, _ = cli(capsys, "order", "unrank", "--n", 5, "--k", 3, "--rank", 2)
    assert out == "n=5\nk=3\n1,3,4\n"
    code, out, _ = cli(capsys, "order", "unrank", "--n", 3, "--rank", 0)
    assert out == "n=3\n1,2,3\n"
    path = tmp_path / "seg.txt"
    assert cli(capsys, "order", "segment", "--n", 5, "--k", 2, "--m", 4, "-o", path)[0] == 0
    assert path.read_text() == "n=5\nk=2\n1,2\n1,3\n2,3\n1,4\n"
    code, out, _ = cli(capsys, "order", "segment", "--n", 3, "--m", 2, "--json")
    assert json.loads(out) == {"n": 3, "sets": [[1, 2], [1, 2, 3]]}
    assert cli(capsys, "order", "rank", "--set", "1", "--order", "simplicial")[0] == 2


def test_boundary_and_shadow(capsys, tmp_path):
    fam = tmp_path / "f.txt"
    fam.write_text("n=4\nk=2\n1,2\n3,4\n")
    out_path = tmp_path / "b.txt"
    code, out, _ = cli(capsys, "boundary", "-i", fam, "-o", out_path)
    assert code == 0 and out == "n=4\nsize=2\nboundary=8\n"
    assert read_family(out_path).size() == 8
    code, out, _ = cli(capsys, "shadow", "-i", fam, "-o", out_path, "--csv", "--header")
    assert out == "n,k,size,shadow\n4,2,2,4\n"
    assert read_family(out_path) == UniformFamily.from_sets(4, 1, [[1], [2], [3], [4]])
    cube = tmp_path / "c.txt"
    cube.write_text("n=3\n1\n")
    assert cli(capsys, "shadow", "-i", cube)[0] == 2


def test_construct_every_kind(capsys, tmp_path):
    cases = [
        ("hamming_ball", ["--n", 5, "--radius", 2, "--center", "1,2"], 16),
        ("gen_ball_G1", ["--n", 6, "--k", 2, "--s", 4], 48),
        ("gen_ball_G2", ["--n", 6, "--k", 2, "--s", 4], 48),
        ("J_mDE", ["--n", 5, "--m", 16, "--D", 2, "--E", 2], 16),
        ("Jk_sE1E2", ["--n", 6, "--k", 3, "--s", 5, "--E1", 2, "--E2", 1], 7),
        ("projected_ball", ["--n", 5], 16),
        ("star", ["--n", 7, "--k", 3, "--i", 2], 15),
        ("cover_ST", ["--n", 7, "--k", 3, "--T", "1,2"], 25),
        ("ekr_F_E", ["--n", 7, "--k", 3, "--E", 4], 13),
        ("katona_G_E", ["--n", 6, "--k", 4, "--E", 1], 20),
    ]
    for kind, params, size in cases:
        path = tmp_path / f"{kind}.txt"
        assert cli(capsys, "construct", kind, *params, "-o", path)[0] == 0
        assert read_family(path).size() == size
    code, out, _ = cli(capsys, "construct", "star", "--n", 4, "--k", 2)
    assert parse_family(out).size() == 3
    code, out, _ = cli(capsys, "construct", "star", "--n", 4, "--k", 2, "--json")
    assert json.loads(out) == {"n": 4, "k": 2, "sets": [[1, 2], [1, 3], [1, 4]]}
    code, _, err = cli(capsys, "construct", "star", "--n", 4)
    assert code == 2 and "needs --k" in err and "commands:" in err
    assert cli(capsys, "construct", "star", "--n", 4, "--k", 2, "--csv")[0] == 2


def test_compress(capsys, tmp_path):
    fam = tmp_path / "f.txt"
    fam.write_text("n=4\nk=2\n1,3\n2,4\n")
    final, trace = tmp_path / "final.txt", tmp_path / "trace.json"
    code, out, _ = cli(capsys, "compress", "kk", "-i", fam, "-o", final, "--trace", trace)
    assert code == 0 and out.startswith("schedule=kk\n")
    assert final.read_text() == "n=4\nk=2\n1,2\n1,3\n"
    assert json.loads(trace.read_text())["final"] == [[1, 2], [1, 3]]
    cube = tmp_path / "c.txt"
    cube.write_text("n=3\n\n")
    code, out, _ = cli(capsys, "compress", "harper", "-i", cube, "-o", final, "--json")
    record = json.loads(out)
    assert code == 0 and record["L0"] == record["steps"] == 3
    assert final.read_text() == "n=3\n1,2,3\n"
    assert cli(capsys, "compress", "kk", "-i", cube)[0] == 2


def test_verify(capsys):
    code, out, _ = cli(capsys, "verify", "--list")
    assert code == 0 and "harper_exhaustive" in out.split()
    code, out, _ = cli(capsys, "verify", "harper_exhaustive", "--n", 3, "--json")
    assert code == 0 and json.loads(out)["instances"] == 256
    code, out, _ = cli(capsys, "verify", "gen_balls", "--n", 6, "--csv", "--header")
    assert out.splitlines()[0] == "suite,passed,instances,violations"
    code, out, err = cli(capsys, "verify", "plJ_identity", "--n", 4, "--timing")
    assert code == 0 and out.startswith("plJ_identity: PASS") and "wall time" in err
    assert cli(capsys, "verify", "nope")[0] == 2
    assert cli(capsys, "verify", "gen_balls", "--trials", 3)[0] == 2
    assert cli(capsys, "verify")[0] == 2


def test_verify_failure_exit_code(capsys):
    code, out, _ = cli(capsys, "verify", "estimates_numeric", "--trials", 200)
    assert code == 1 and out.startswith("estimates_numeric: FAIL")


def test_submodularity_example(capsys):
    assert cli(capsys, "verify", "submodularity", "--n", 8, "--trials", 2000, "--seed", 1)[0] == 0


def test_table_dense(capsys):
    code, out, _ = cli(capsys, "table", "dense", "--n", 6, "--trials", 5, "--csv")
    assert code == 0 and out.count("\n") >= 6
    code, out, _ = cli(capsys, "table", "dense", "--n", 6, "--trials", 5, "--json")
    assert json.loads(out)["n"] == 6
    assert cli(capsys, "table", "dense", "--n", 6, "--trials", 5)[1].startswith("source")


def test_usage_errors(capsys):
    assert cli(capsys, "bogus")[0] == 2
    assert cli(capsys)[0] == 2
    assert cli(capsys, "table", "nonmono", "--n", 5, "--k", 3, "--json", "--csv")[0] == 2
    assert cli(capsys, "table", "nonmono", "--n", 5, "--k", 3, "--unknown")[0] == 2
    assert cli(capsys, "table", "nonmono", "--n", 5)[0] == 2
    assert cli(capsys, "boundary", "-i", "/nonexistent/file")[0] == 2
    assert cli(capsys, "--help")[0] == 0


def test_bad_family_file(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("n=3\n1,1\n")
    code, _, err = cli(capsys, "boundary", "-i", bad)
    assert code == 2 and "repeated" in err


def test_stdin_and_backend(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("n=3\n1\n"))
    assert cli(capsys, "boundary", "-i", "-")[1] == "n=3\nsize=1\nboundary=3\n"
    code, out, _ = cli(capsys, "--backend")
    assert code == 0 and out.strip() in ("cython", "python")


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "nonmono", "--n", "5", "--k", "3"],
        ["verify", "ekr_spotcheck", "--trials", "50", "--seed", "3", "--json"],
        ["table", "dense", "--n", "6", "--trials", "10", "--seed", "2"],
    ],
)
def test_output_is_byte_identical_across_runs(argv):
    cmd = [sys.executable, "-m", "cubeiso", *argv]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
