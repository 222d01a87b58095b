"""Verification suites, stability predicates and the suite registry."""
from __future__ import annotations

import inspect
from functools import partial

from .estimates import suite_estimates_numeric
from .explore import ball_product, explore_dense_conjecture
from .report import CONSTANTS, StabilityParams, SuiteReport, katona_theta
from .suites import (
    nonmono_table,
    suite_ball_intersection_monotone,
    suite_ball_local_stability,
    suite_compression_harper,
    suite_compression_kk,
    suite_ekr_spotcheck,
    suite_gen_balls,
    suite_harper_exhaustive,
    suite_katona_spotcheck,
    suite_kkprops,
    suite_local_stability_kk,
    suite_plJ_identity,
    suite_submodularity,
)
from .theorems import THEOREMS, theorem_predicates, theorem_sweep

SUITES = {
    "harper_exhaustive": suite_harper_exhaustive,
    "submodularity": suite_submodularity,
    "plJ_identity": suite_plJ_identity,
    "kkprops": suite_kkprops,
    "local_stability_kk": suite_local_stability_kk,
    "ball_local_stability": suite_ball_local_stability,
    "ball_intersection_monotone": suite_ball_intersection_monotone,
    "gen_balls": suite_gen_balls,
    "estimates_numeric": suite_estimates_numeric,
    "compression_kk": suite_compression_kk,
    "compression_harper": suite_compression_harper,
    "ekr_spotcheck": suite_ekr_spotcheck,
    "katona_spotcheck": suite_katona_spotcheck,
    **{f"theorem_{w}": partial(theorem_sweep, w) for w in THEOREMS},
}


def run_suite(name: str, **options) -> SuiteReport:
    """Run a registered suite, passing only the options it accepts.

    ``trials`` doubles as the point count of the numeric suite.  Options left
    as None keep the suite's defaults; ``threads`` is dropped for serial suites.
    """
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    fn = SUITES[name]
    accepted = inspect.signature(fn).parameters
    options = {k: v for k, v in options.items() if v is not None}
    if "threads" not in accepted:
        options.pop("threads", None)
    if "trials" in options and "points" in accepted:
        options["points"] = options.pop("trials")
    unknown = sorted(set(options) - set(accepted))
    if unknown:
        raise TypeError(f"suite {name} does not take {', '.join('--' + u for u in unknown)}")
    return fn(**options)


__all__ = [
    "CONSTANTS",
    "SUITES",
    "THEOREMS",
    "StabilityParams",
    "SuiteReport",
    "ball_product",
    "explore_dense_conjecture",
    "katona_theta",
    "nonmono_table",
    "run_suite",
    "theorem_predicates",
    "theorem_sweep",
]
