"""Command-line front end.

Exit codes: 0 on success or a passing suite, 1 when a suite finds
violations, 2 on usage or input errors.  Families are read and written in the
family file format (see :mod:`cubeiso.io`); ``-`` means stdin or stdout.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .binomials import harper_report, kk_report, lym_plus_bound
from .compressions import (
    AuditFailure,
    ScheduleStall,
    harper_compression_schedule,
    kk_compression_schedule,
)
from .constructions import KINDS, ConstructionSpec
from .io import FamilyFormatError, read_family, write_family
from .kernels import BACKEND
from .orders import (
    colex_rank,
    colex_unrank,
    initial_segment_colex,
    initial_segment_simplicial,
    simplicial_rank,
    simplicial_unrank,
    sum_upper,
)
from .subsets import CubeFamily, Subset, UniformFamily, lower_shadow, vertex_boundary

EPILOG = """\
commands:
  order rank --set 1,3,4 [--order colex|simplicial --n N]
  order unrank --n N (--k K | --order simplicial) --rank R
  order segment --n N [--k K] --m M          (colex with --k, simplicial without)
  boundary -i FAMILY [-o BOUNDARY]
  shadow -i FAMILY [-o SHADOW]
  bound harper|lovasz-harper --n N --m M
  bound kk|lovasz-kk --n N --k K --m M
  bound lym-plus --n N --k K --size S
  construct KIND [params] [-o FILE]          (see 'construct --help')
  compress kk|harper -i FAMILY [-o FINAL] [--trace TRACE.json]
  verify SUITE [--n N --k K --trials T --seed S --threads W]   ('verify --list')
  table nonmono --n N --k K [--max-d D]
  table dense --n N [--epsilon E --trials T --seed S]

output: --format text|csv|json (or --json / --csv); CSV has no header unless --header.
exit codes: 0 success, 1 suite violations, 2 usage or input error.
"""


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _output_flags(p: argparse.ArgumentParser) -> None:
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--format", choices=("text", "csv", "json"), default=None)
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    p.add_argument("--header", action="store_true", help="CSV header row")


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="cubeiso",
        description="Vertex isoperimetry and shadows on the Boolean cube.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    top.add_argument("--backend", action="store_true", help="print the active kernel backend and exit")
    sub = top.add_subparsers(dest="command")

    p = sub.add_parser("order", help="colex and simplicial ranks, unranks and initial segments")
    osub = p.add_subparsers(dest="action", required=True)
    q = osub.add_parser("rank")
    q.add_argument("--set", type=_int_list, required=True, dest="elements")
    q.add_argument("--order", choices=("colex", "simplicial"), default="colex")
    q.add_argument("--n", type=int)
    _output_flags(q)
    q = osub.add_parser("unrank")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int)
    q.add_argument("--order", choices=("colex", "simplicial"), default=None)
    q.add_argument("--rank", type=int, required=True)
    q.add_argument("-o", "--output", default="-")
    _output_flags(q)
    q = osub.add_parser("segment")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("-o", "--output", default="-")
    _output_flags(q)

    for name, what in (("boundary", "vertex boundary"), ("shadow", "lower shadow")):
        p = sub.add_parser(name, help=f"size of the {what}; -o writes the family")
        p.add_argument("-i", "--input", required=True)
        p.add_argument("-o", "--output")
        _output_flags(p)

    p = sub.add_parser("bound", help="exact and real-variable lower bounds")
    p.add_argument("kind", choices=("harper", "kk", "lovasz-harper", "lovasz-kk", "lym-plus"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--size", type=float, help="family size for lym-plus (may be fractional)")
    _output_flags(p)

    p = sub.add_parser("construct", help="extremal and perturbed families")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--n", type=int, required=True)
    for flag in ("k", "s", "m", "radius", "i", "E", "E1", "E2"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--D", type=int)
    p.add_argument("--center", type=_int_list)
    p.add_argument("--T", type=_int_list)
    p.add_argument("-o", "--output", default="-")
    _output_flags(p)

    p = sub.add_parser("compress", help="run a compression schedule with a full audit")
    p.add_argument("schedule", choices=("kk", "harper"))
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--trace")
    _output_flags(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", nargs="?")
    p.add_argument("--list", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--threads", type=int)
    p.add_argument("--timing", action="store_true", help="report wall time on stderr")
    _output_flags(p)

    p = sub.add_parser("table", help="tables")
    p.add_argument("table", choices=("nonmono", "dense"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--max-d", type=int, dest="max_d")
    p.add_argument("--epsilon", type=float, default=0.1)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    _output_flags(p)
    return top


# -- output -------------------------------------------------------------------------------

def _csv_text(rows: list[list], header: list[str] | None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit_record(args, record: dict) -> None:
    fmt = args.format or "text"
    if fmt == "json":
        sys.stdout.write(json.dumps(record) + "\n")
    elif fmt == "csv":
        sys.stdout.write(_csv_text([list(record.values())], list(record) if args.header else None))
    else:
        sys.stdout.write("".join(f"{k}={v}\n" for k, v in record.items()))


def _family_json(F) -> dict:
    out = {"n": F.n}
    if isinstance(F, UniformFamily):
        out["k"] = F.k
    out["sets"] = [list(s.elements) for s in F.subsets()]
    return out


def _emit_family(args, F, path: str = "-") -> None:
    fmt = args.format or "text"
    if fmt == "csv":
        raise UsageError("families are written as text or json, not csv")
    if fmt == "json":
        text = json.dumps(_family_json(F)) + "\n"
        if path == "-":
            sys.stdout.write(text)
        else:
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
    else:
        write_family(F, path)


# -- commands -----------------------------------------------------------------------------

def _cmd_order(args) -> int:
    if args.action == "rank":
        if args.order == "colex":
            n = args.n if args.n is not None else max(args.elements, default=0)
            rank = colex_rank(Subset.of(args.elements, n))
        else:
            if args.n is None:
                raise UsageError("simplicial rank needs --n")
            rank = simplicial_rank(Subset.of(args.elements, args.n))
        _emit_record(args, {"order": args.order, "rank": rank})
        return 0
    if args.action == "unrank":
        order = args.order or ("colex" if args.k is not None else "simplicial")
        if order == "colex":
            if args.k is None:
                raise UsageError("colex unrank needs --k")
            S = colex_unrank(args.n, args.k, args.rank)
            F = UniformFamily(args.n, args.k, [S.mask])
        else:
            F = CubeFamily.from_masks(args.n, [simplicial_unrank(args.n, args.rank).mask])
        _emit_family(args, F, args.output)
        return 0
    if args.k is not None:
        F = initial_segment_colex(args.n, args.k, args.m)
    else:
        F = initial_segment_simplicial(args.n, args.m)
    _emit_family(args, F, args.output)
    return 0


def _cmd_boundary(args) -> int:
    F = read_family(args.input)
    if isinstance(F, UniformFamily):
        F = F.to_cube()
    B = vertex_boundary(F)
    if args.output:
        write_family(B, args.output)
    _emit_record(args, {"n": F.n, "size": F.size(), "boundary": B.size()})
    return 0


def _cmd_shadow(args) -> int:
    F = read_family(args.input)
    if not isinstance(F, UniformFamily):
        raise UsageError("shadow needs a k-uniform family (a 'k=' header line)")
    S = lower_shadow(F)
    if args.output:
        write_family(S, args.output)
    _emit_record(args, {"n": F.n, "k": F.k, "size": F.size(), "shadow": S.size()})
    return 0


def _cmd_bound(args) -> int:
    kind = args.kind
    if kind in ("kk", "lovasz-kk", "lym-plus") and args.k is None:
        raise UsageError(f"bound {kind} needs --k")
    if kind == "lym-plus":
        size = args.size if args.size is not None else args.m
        if size is None:
            raise UsageError("bound lym-plus needs --size (or --m)")
        _emit_record(args, {"n": args.n, "k": args.k, "size": size, "lym_plus": lym_plus_bound(args.n, args.k, size)})
        return 0
    if args.m is None:
        raise UsageError(f"bound {kind} needs --m")
    r = kk_report(args.n, args.k, args.m) if kind.endswith("kk") else harper_report(args.n, args.m)
    record = {"n": r.n, "k": r.k, "m": r.family_size, "x_root": r.x_root, "lovasz": r.lovasz_bound}
    if not kind.startswith("lovasz"):
        record["exact"] = r.exact_bound
    _emit_record(args, record)
    return 0


_CONSTRUCT_PARAMS = ("n", "k", "s", "m", "radius", "i", "E", "E1", "E2", "D", "center", "T")


def _cmd_construct(args) -> int:
    params = {name: getattr(args, name) for name in _CONSTRUCT_PARAMS if getattr(args, name) is not None}
    for name in ("center", "T"):
        if name in params:
            params[name] = Subset.of(params[name], args.n).mask
    try:
        F = ConstructionSpec(args.kind, params).build()
    except KeyError as exc:
        raise UsageError(f"construct {args.kind} needs --{exc.args[0]}") from None
    _emit_family(args, F, args.output)
    return 0


def _cmd_compress(args) -> int:
    F = read_family(args.input)
    if args.schedule == "kk":
        if not isinstance(F, UniformFamily):
            raise UsageError("compress kk needs a k-uniform family")
        run = kk_compression_schedule
    else:
        if isinstance(F, UniformFamily):
            F = F.to_cube()
        run = harper_compression_schedule
    try:
        trace = run(F)
    except (ScheduleStall, AuditFailure) as exc:
        trace = getattr(exc, "trace", None)
        if args.trace and trace is not None:
            _write_text(args.trace, trace.to_json(indent=1) + "\n")
        sys.stderr.write(f"compression failed: {exc}\n")
        return 1
    if args.trace:
        _write_text(args.trace, trace.to_json(indent=1) + "\n")
    if args.output:
        write_family(trace.final, args.output)
    before = trace.steps[0].boundary_before if trace.steps else None
    after = trace.steps[-1].boundary_after if trace.steps else None
    record = {"schedule": args.schedule, "steps": len(trace), "L0": trace.L0, "measure": trace.measure}
    _emit_record(args, {**record, "before": before, "after": after})
    return 0


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _cmd_verify(args) -> int:
    from .verify import SUITES, run_suite

    if args.list or not args.suite:
        sys.stdout.write("".join(f"{name}\n" for name in SUITES))
        return 0 if args.list else 2
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; 'verify --list' shows the suites")
    t0 = time.perf_counter()
    try:
        report = run_suite(args.suite, n=args.n, k=args.k, trials=args.trials, seed=args.seed, threads=args.threads)
    except TypeError as exc:
        raise UsageError(str(exc)) from None
    fmt = args.format or "text"
    if fmt == "json":
        sys.stdout.write(report.to_json() + "\n")
    elif fmt == "csv":
        header = ["suite", "passed", "instances", "violations"] if args.header else None
        sys.stdout.write(_csv_text([[report.suite, report.passed, report.instances, report.violations]], header))
    else:
        lines = [report.summary()]
        lines += [f"  {k}={v}" for k, v in sorted(report.counts.items())]
        lines += [f"  witness {json.dumps(w, sort_keys=True, default=str)}" for w in report.witnesses[:5]]
        sys.stdout.write("\n".join(lines) + "\n")
    if args.timing:
        sys.stderr.write(f"wall time {time.perf_counter() - t0:.3f} s\n")
    return 0 if report.passed else 1


def _cmd_table(args) -> int:
    fmt = args.format or "text"
    if args.table == "nonmono":
        from .verify import nonmono_table

        if args.k is None:
            raise UsageError("table nonmono needs --k")
        values = nonmono_table(args.n, args.k, args.max_d)
        if fmt == "json":
            record = {"n": args.n, "k": args.k, "m": sum_upper(args.n, args.k), "D": list(range(len(values))), "boundary": values}
            sys.stdout.write(json.dumps(record) + "\n")
        elif fmt == "csv":
            sys.stdout.write(_csv_text([[D, v] for D, v in enumerate(values)], ["D", "boundary"] if args.header else None))
        else:
            sys.stdout.write(",".join(map(str, values)) + "\n")
        return 0
    from .verify import explore_dense_conjecture

    result = explore_dense_conjecture(args.n, args.epsilon, args.trials, args.seed)
    if fmt == "json":
        sys.stdout.write(json.dumps(result, sort_keys=True) + "\n")
        return 0
    cols = ["source", "size", "boundary", "excess", "ball_distance", "size_gap", "relative_distance"]
    found = result["products"] + result["witnesses"]
    rows = [[f"{r[c]:.6g}" if isinstance(r[c], float) else r[c] for c in cols] for r in found]
    if fmt == "csv":
        sys.stdout.write(_csv_text(rows, cols if args.header else None))
    else:
        widths = [max(len(str(x)) for x in [c] + [row[j] for row in rows]) for j, c in enumerate(cols)]
        fmt_row = "  ".join(f"{{:<{w}}}" for w in widths)
        sys.stdout.write("\n".join(fmt_row.format(*map(str, r)) for r in [cols] + rows) + "\n")
    return 0


COMMANDS = {
    "order": _cmd_order,
    "boundary": _cmd_boundary,
    "shadow": _cmd_shadow,
    "bound": _cmd_bound,
    "construct": _cmd_construct,
    "compress": _cmd_compress,
    "verify": _cmd_verify,
    "table": _cmd_table,
}


def run(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.backend:
        sys.stdout.write(BACKEND + "\n")
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        sys.stderr.write("\n" + EPILOG)
        return 2
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"cubeiso: error: {exc}\n\n{EPILOG}")
        return 2
    except (FamilyFormatError, ValueError, OSError) as exc:
        sys.stderr.write(f"cubeiso: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
