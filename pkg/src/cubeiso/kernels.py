"""Kernel backend selection.

The compiled extension is used when it was built; set ``CUBEISO_PURE_PYTHON=1``
to force the pure-Python implementation.
"""
import importlib
import os

_NAMES = (
    "BACKEND",
    "direction_masks",
    "eligible_mask",
    "vertex_boundary",
    "neighborhood",
    "lower_shadow",
    "compress",
    "first_effective",
    "boundary_sizes",
    "union_table",
    "popcount",
)


def load_backend(name):
    """Import one backend module by name ("cython" or "python")."""
    if name == "cython":
        return importlib.import_module("cubeiso._ckernels")
    if name == "python":
        return importlib.import_module("cubeiso._pykernels")
    raise ValueError(f"unknown kernel backend {name!r}")


def _select():
    if os.environ.get("CUBEISO_PURE_PYTHON", "") not in ("", "0"):
        return load_backend("python")
    try:
        return load_backend("cython")
    except ImportError:
        return load_backend("python")


_impl = _select()
for _name in _NAMES:
    globals()[_name] = getattr(_impl, _name)
del _name

__all__ = list(_NAMES) + ["load_backend"]
