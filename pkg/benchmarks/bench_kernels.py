"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5] [--json]

Each row times one kernel call on a fixed random input with both backends and
checks that the outputs agree.
"""
from __future__ import annotations

import argparse
import json
import sys
import timeit
from functools import partial

import numpy as np

from cubeiso.compressions import harper_pairs
from cubeiso.kernels import load_backend
from cubeiso.subsets import upper_bits


def _cases(rng):
    fam = {n: int.from_bytes(rng.bytes(1 << max(n - 3, 0)), "little") & ((1 << (1 << n)) - 1) for n in (10, 16, 20)}
    words = rng.integers(0, 1 << 32, size=1 << 18, dtype=np.uint64)
    masks = rng.integers(0, 1 << 60, size=20, dtype=np.uint64)
    us, vs = harper_pairs(8)
    cases = []
    for n, bits in fam.items():
        cases.append((f"vertex_boundary n={n}", "vertex_boundary", (bits, n)))
        cases.append((f"lower_shadow n={n}", "lower_shadow", (bits, n)))
    cases.append(("compress n=16 u={1} v={2,3}", "compress", (fam[16], 16, 0b1, 0b110)))
    # an upset is fixed by every pair, so the whole list is scanned
    cases.append(("first_effective n=8 all pairs", "first_effective", (upper_bits(8, 4), 8, us, vs)))
    cases.append(("boundary_sizes 2^18 words n=5", "boundary_sizes", (words, 5)))
    cases.append(("union_table 20 masks", "union_table", (masks,)))
    cases.append(("popcount 2^18 words", "popcount", (words,)))
    return cases


def _same(a, b) -> bool:
    if isinstance(a, np.ndarray):
        return bool(np.array_equal(a, b))
    return a == b


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    py = load_backend("python")
    try:
        cy = load_backend("cython")
    except ImportError:
        sys.stderr.write("compiled backend not built; run 'pip install -e . --no-build-isolation'\n")
        return 1
    rows = []
    for label, name, call_args in _cases(np.random.default_rng(args.seed)):
        fp, fc = getattr(py, name), getattr(cy, name)
        if not _same(fp(*call_args), fc(*call_args)):
            sys.stderr.write(f"backends disagree on {label}\n")
            return 1
        tp = min(timeit.repeat(partial(fp, *call_args), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(partial(fc, *call_args), number=1, repeat=args.repeat))
        rows.append({"kernel": label, "python_s": tp, "cython_s": tc, "speedup": tp / tc if tc else float("inf")})
    if args.json:
        print(json.dumps(rows, indent=1))
        return 0
    width = max(len(r["kernel"]) for r in rows)
    print(f"{'kernel':<{width}}  {'python':>10}  {'cython':>10}  {'speedup':>8}")
    for r in rows:
        print(f"{r['kernel']:<{width}}  {r['python_s'] * 1e3:>8.3f}ms  {r['cython_s'] * 1e3:>8.3f}ms  {r['speedup']:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
