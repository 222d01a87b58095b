"""Suite reports, parameter tables, and deterministic parallel chunking."""
from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

MAX_WITNESSES = 20


@dataclass
class SuiteReport:
    suite: str
    params: dict = field(default_factory=dict)
    instances: int = 0
    violations: int = 0
    witnesses: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def witness(self, item) -> None:
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(item)

    def bump(self, key: str, by: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + by

    def merge(self, other: SuiteReport) -> None:
        self.instances += other.instances
        self.violations += other.violations
        for w in other.witnesses:
            self.witness(w)
        for key, value in other.counts.items():
            self.bump(key, value)

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "params": self.params,
            "instances": self.instances,
            "violations": self.violations,
            "passed": self.passed,
            "witnesses": self.witnesses,
            "counts": dict(sorted(self.counts.items())),
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, default=_jsonable)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.suite}: {status} instances={self.instances} violations={self.violations}"


def _jsonable(x):
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    if isinstance(x, (set, frozenset, tuple)):
        return list(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")


class timed:
    """Context manager that stores elapsed seconds on a report."""

    def __init__(self, report: SuiteReport):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.wall_time = time.perf_counter() - self.t0
        return False


def chunk_rng(seed: int, index: int) -> np.random.Generator:
    """Generator for one work chunk; depends only on (seed, index)."""
    return np.random.default_rng(np.random.SeedSequence([seed, index]))


def run_chunks(fn, n_chunks: int, threads: int = 1, args: tuple = ()) -> list:
    """[fn(i, *args) for i in range(n_chunks)], optionally across worker processes.

    Results come back in chunk order, so the reduction does not depend on the
    number of workers.
    """
    if threads <= 1 or n_chunks <= 1:
        return [fn(i, *args) for i in range(n_chunks)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(fn, i, *args) for i in range(n_chunks)]
        return [f.result() for f in futures]


def split(total: int, size: int) -> list[int]:
    """Chunk sizes covering ``total`` items, all equal to ``size`` but the last."""
    return [min(size, total - i) for i in range(0, total, size)]


@dataclass(frozen=True)
class StabilityParams:
    """Inputs for the stability predicates.

    ``delta`` is the distance parameter and ``theta`` the extra parameter of
    the intersecting-family statements; ``r`` is the slack used in the
    matching statement.  The boundary constant ``c`` for each statement is
    ``CONSTANTS[which] * delta`` (``* theta`` for ``ekr``).
    """

    delta: float = 0.1
    theta: float | None = None
    r: int = 1

    def __post_init__(self):
        if not 0 < self.delta < 1:
            raise ValueError("delta must lie in (0, 1)")
        if self.theta is not None and not 0 < self.theta < 1:
            raise ValueError("theta must lie in (0, 1)")

    def c(self, which: str) -> float:
        if which == "ekr":
            return CONSTANTS["ekr"] * self.ekr_theta()
        return CONSTANTS[which] * self.delta

    def ekr_theta(self) -> float:
        theta = 0.1 if self.theta is None else self.theta
        if not 0 < theta < 0.25:
            raise ValueError("theta must lie in (0, 1/4) for the ekr statement")
        return theta


# boundary constant per statement, as a multiple of delta (theta for ekr)
CONSTANTS = {
    "ball": 1e-3,
    "kk": 1e-9,
    "harper": 1e-10,
    "ekr": 1e-12,
    "matching": 1e-10,
}


def katona_theta(n: int, t: int) -> float:
    """min(1e-6 * t/n * exp(t^2/n), 1)."""
    return min(1e-6 * t / n * math.exp(t * t / n), 1.0)
