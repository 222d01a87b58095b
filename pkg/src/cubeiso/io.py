"""Family file format.

A family file is UTF-8 text with ``\\n`` line endings::

    n=5
    k=3
    1,2,3
    1,2,4

The first line is ``n=<n>``.  An optional ``k=<k>`` line makes the family
k-uniform; without it the family lives in the whole cube.  Every following
line is one set, written as comma-separated 1-based elements in increasing
order; an empty line is the empty set.  Every line, the last included, ends
with ``\\n``.  The writer lists sets in increasing mask order (colex for a
uniform family).  The parser accepts elements in any order and surrounding
spaces, and rejects duplicate sets, repeated or out-of-range elements, and
sets of the wrong size.
"""
from __future__ import annotations

import sys
from pathlib import Path

from .subsets import CubeFamily, UniformFamily, elements_of

Family = CubeFamily | UniformFamily


class FamilyFormatError(ValueError):
    """Malformed family file."""


def format_family(F: Family) -> str:
    lines = [f"n={F.n}"]
    if isinstance(F, UniformFamily):
        lines.append(f"k={F.k}")
        masks = sorted(F.members)
    else:
        masks = list(F.masks())
    lines += [",".join(map(str, elements_of(m))) for m in masks]
    return "\n".join(lines) + "\n"


def _header(line: str, key: str, lineno: int) -> int:
    name, sep, value = line.partition("=")
    if not sep or name.strip() != key:
        raise FamilyFormatError(f"line {lineno}: expected '{key}=<int>'")
    try:
        return int(value)
    except ValueError:
        raise FamilyFormatError(f"line {lineno}: {key} is not an integer") from None


def _parse_set(line: str, n: int, lineno: int) -> int:
    if not line.strip():
        return 0
    mask = 0
    for token in line.split(","):
        try:
            e = int(token)
        except ValueError:
            raise FamilyFormatError(f"line {lineno}: bad element {token.strip()!r}") from None
        if not 1 <= e <= n:
            raise FamilyFormatError(f"line {lineno}: element {e} outside [1, {n}]")
        if mask >> (e - 1) & 1:
            raise FamilyFormatError(f"line {lineno}: element {e} repeated")
        mask |= 1 << (e - 1)
    return mask


def parse_family(text: str) -> Family:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FamilyFormatError("empty file; expected 'n=<int>'")
    n = _header(lines[0], "n", 1)
    if n < 0:
        raise FamilyFormatError("n must be non-negative")
    k = None
    body = 1
    if len(lines) > 1 and lines[1].strip().startswith("k="):
        k = _header(lines[1], "k", 2)
        if not 0 <= k <= n:
            raise FamilyFormatError(f"k={k} outside [0, {n}]")
        body = 2
    seen = set()
    for lineno, line in enumerate(lines[body:], start=body + 1):
        mask = _parse_set(line, n, lineno)
        if mask in seen:
            raise FamilyFormatError(f"line {lineno}: duplicate set")
        if k is not None and mask.bit_count() != k:
            raise FamilyFormatError(f"line {lineno}: set of size {mask.bit_count()} in a {k}-uniform family")
        seen.add(mask)
    try:
        if k is not None:
            return UniformFamily(n, k, sorted(seen))
        return CubeFamily.from_masks(n, seen)
    except ValueError as exc:
        raise FamilyFormatError(str(exc)) from None


def read_family(path: str | Path) -> Family:
    """Read a family file; ``-`` reads standard input."""
    if str(path) == "-":
        return parse_family(sys.stdin.read())
    return parse_family(Path(path).read_text(encoding="utf-8"))


def write_family(F: Family, path: str | Path) -> None:
    """Write a family file; ``-`` writes standard output."""
    text = format_family(F)
    if str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8", newline="\n")
