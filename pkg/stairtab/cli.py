"""Command-line front end.

Exit codes: 0 when every report passes, 1 when any fails, 2 on usage or parse
errors. JSON goes to stdout, logs to stderr.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Iterable, List, Optional, TextIO

from pydantic import ValidationError

from . import config
from .errors import StairtabError, UsageError
from .jdt import forward_jdt, reverse_jdt
from .job import run_sweep
from .models import THEOREMS, VerifyReport
from .schemas import SlideTraceSchema, TableauSchema, VerifyParams
from .shapes import Cell, Partition, SkewShape, staircase
from .symfunc import (
    doubled_substitution,
    gst_gf,
    qtr_poly,
    schur_expand,
    schur_skew_poly,
    shifted_q_poly,
    yamanouchi_coeff_table,
)
from .tableaux import IndexSet, iter_gst, iter_qtab, validate_gst
from .verify import run_verify

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def int_list(text: str) -> List[int]:
    """'2,1' -> [2, 1]; '' -> []."""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cell_arg(text: str) -> Cell:
    """'1,2' -> Cell(1, 2); anything but two positive integers is rejected."""
    parts = int_list(text)
    if len(parts) != 2 or min(parts) < 1:
        raise argparse.ArgumentTypeError(f"expected a cell as row,col with positive entries, got {text!r}")
    return Cell(*parts)


def emit_report(
    reports: Iterable[VerifyReport],
    fmt: str = "json",
    timing: bool = False,
    stream: Optional[TextIO] = None,
) -> int:
    """Write reports as JSON lines (or a summary table); return the exit code."""
    stream = stream or sys.stdout
    reports = list(reports)
    if fmt == "summary":
        for report in reports:
            params = " ".join(f"{k}={v}" for k, v in report.params.items())
            status = "PASS" if report.passed else "FAIL"
            extra = f" ({report.elapsed:.3f}s)" if timing and report.elapsed is not None else ""
            stream.write(f"{status}  {report.theorem:<10} {params}{extra}\n")
        if reports:
            failed = sum(1 for r in reports if not r.passed)
            stream.write(f"{len(reports)} checked, {len(reports) - failed} passed, {failed} failed\n")
    else:
        for report in reports:
            stream.write(json.dumps(report.to_dict(timing=timing)) + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# -- subcommands -----------------------------------------------------------------


def _shape(args) -> SkewShape:
    outer = Partition(tuple(args.lam)) if args.lam is not None else staircase(args.n)
    return SkewShape(outer, Partition(tuple(args.mu)))


def cmd_enumerate(args) -> int:
    shape = _shape(args)
    if args.kind == "gst":
        tableaux = (TableauSchema.from_gst(T) for T in iter_gst(shape, IndexSet(frozenset(args.set), args.m), args.m))
    else:
        tableaux = (TableauSchema.from_qtab(T) for T in iter_qtab(shape, IndexSet(frozenset(args.set), args.m), args.m))
    count = 0
    for schema in tableaux:
        count += 1
        if args.format == "summary":
            text = schema.to_gst() if args.kind == "gst" else schema.to_qtab()
            print(f"{text}\n")
        else:
            print(json.dumps(schema.dump()))
    logger.info("%d tableaux of shape %s", count, shape)
    return EXIT_OK


def _poly(kind: str, shape: SkewShape, args):
    if kind == "gst":
        return gst_gf(shape, IndexSet(frozenset(args.set), args.m), args.m)
    if kind == "schur":
        return schur_skew_poly(shape, args.m)
    if kind == "qtr":
        return qtr_poly(shape, args.m)
    if kind == "doubled":
        return doubled_substitution(shape, args.m)
    return shifted_q_poly(shape, args.n, args.m)


def cmd_gf(args) -> int:
    poly = _poly(args.kind, _shape(args), args)
    print(str(poly) if args.format == "summary" else poly.to_json())
    return EXIT_OK


def cmd_expand(args) -> int:
    shape = _shape(args)
    if args.yamanouchi:
        expansion = yamanouchi_coeff_table(shape, args.m)
    else:
        expansion = schur_expand(_poly(args.kind, shape, args))
    if args.format == "summary":
        print(expansion)
    else:
        for line in expansion.to_lines():
            print(line)
    return EXIT_OK


def cmd_jdt_trace(args) -> int:
    schema = TableauSchema.model_validate_json(Path(args.tableau).read_text())
    tableau = schema.to_gst()
    m = args.m
    if m is None:
        m = max([1, *args.set, *tableau.values()])
    index_set = IndexSet(frozenset(args.set), m)
    if not validate_gst(tableau, index_set):
        raise UsageError(f"tableau is not a valid GST for I={index_set}")
    slide = forward_jdt if args.direction == "forward" else reverse_jdt
    result = slide(tableau, index_set, args.hole)
    print(SlideTraceSchema.from_slide(result).model_dump_json(exclude_none=True))
    return EXIT_OK


def _params(args) -> VerifyParams:
    return VerifyParams(
        n=args.n,
        m=args.m,
        mu=args.mu,
        lam=args.lam,
        index_set=args.set if args.set else None,
        set2=args.set2,
        letter=args.letter,
        samples=args.random,
        seed=config.SEED if args.random else None,
        unrestricted=True if args.unrestricted else None,
    )


def cmd_verify(args) -> int:
    report = run_verify(args.theorem, _params(args))
    return emit_report([report], args.format, args.timing)


def cmd_sweep(args) -> int:
    theorems = THEOREMS if args.theorem == "all" else (args.theorem,)
    reports: List[VerifyReport] = []
    for theorem in theorems:
        reports += run_sweep(
            theorem,
            n_max=args.n,
            m=args.m,
            size_max=args.size_max,
            jobs=args.jobs,
            unrestricted=args.unrestricted,
            samples=args.random,
        )
    return emit_report(reports, args.format, args.timing)


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stairtab",
        description="Enumerate staircase tableaux, slide them and verify the tableau identities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    shape_flags = argparse.ArgumentParser(add_help=False)
    shape_flags.add_argument("--n", type=int, default=config.DEFAULT_N, help="staircase size (default: %(default)s)")
    shape_flags.add_argument("--m", type=int, default=config.DEFAULT_M, help="alphabet bound (default: %(default)s)")
    shape_flags.add_argument("--mu", type=int_list, default=[], help="inner partition, e.g. 2,1")
    shape_flags.add_argument("--lambda", dest="lam", type=int_list, default=None, help="outer partition (default: delta(n))")
    shape_flags.add_argument("--set", type=int_list, default=[], help="index set I, e.g. 1,3")
    shape_flags.add_argument("--format", choices=("json", "summary"), default="json")

    p = sub.add_parser("enumerate", parents=[shape_flags], help="list every tableau of a shape")
    p.add_argument("--kind", choices=("gst", "qtab"), default="gst")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("gf", parents=[shape_flags], help="print a generating function")
    p.add_argument("--kind", choices=("gst", "schur", "qtr", "doubled", "shifted"), default="qtr")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("expand", parents=[shape_flags], help="expand a generating function in Schur polynomials")
    p.add_argument("--kind", choices=("gst", "schur", "qtr", "doubled", "shifted"), default="qtr")
    p.add_argument("--yamanouchi", action="store_true", help="read the expansion off Yamanouchi tableaux instead")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("jdt-trace", help="slide a tableau read from a JSON file")
    p.add_argument("tableau", help="path to a tableau JSON file")
    p.add_argument("--set", type=int_list, default=[], help="index set I")
    p.add_argument("--m", type=int, default=None, help="alphabet bound (default: largest letter)")
    p.add_argument("--direction", choices=("forward", "reverse"), default="forward")
    p.add_argument("--hole", type=cell_arg, required=True, help="hole cell as row,col")
    p.set_defaults(func=cmd_jdt_trace)

    run_flags = argparse.ArgumentParser(add_help=False, parents=[shape_flags])
    run_flags.add_argument("--set2", type=int_list, default=None, help="target index set I'")
    run_flags.add_argument("--letter", type=int, default=None, help="shorthand for --set2 = --set + {letter}")
    run_flags.add_argument("--unrestricted", action="store_true", help="prop-tr/cor-final: drop mu in delta(n)")
    run_flags.add_argument("--random", type=int, default=None, metavar="N", help="add N seeded random tableaux")
    run_flags.add_argument("--timing", action="store_true", help="add elapsed seconds to each report")

    p = sub.add_parser("verify", parents=[run_flags], help="check one theorem instance")
    p.add_argument("theorem", choices=THEOREMS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "sweep",
        parents=[run_flags],
        help="check every instance within the bounds",
        description="Check every instance within the bounds. Staircase theorems take every mu strictly "
        "inside delta(k) for k <= n, so the empty shape delta(k)/delta(k) is skipped.",
    )
    p.add_argument("theorem", choices=THEOREMS + ("all",))
    p.add_argument(
        "--size-max",
        type=int,
        default=None,
        help=f"largest skew shape size (default: {config.DEFAULT_SHAPE_SIZE_MAX}, "
        + ", ".join(f"{size} for {theorem}" for theorem, size in config.DEFAULT_SIZE_MAX_BY_THEOREM.items())
        + ")",
    )
    p.add_argument("--jobs", type=int, default=config.DEFAULT_JOBS, help="worker processes (default: %(default)s)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (StairtabError, ValidationError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception:
        logger.exception("stairtab %s failed", args.command)
        return EXIT_FAIL
