#!/usr/bin/env python3
"""Regenerate (or check) the golden files under fixtures/."""
import argparse
import json
import logging
import sys
from pathlib import Path

from stairtab.config import FIXTURES_DIR
from stairtab.jdt import forward_jdt, reverse_jdt
from stairtab.schemas import SlideTraceSchema, TableauSchema
from stairtab.shapes import Cell, SkewShape
from stairtab.symfunc import qtr_poly, yamanouchi_coeff_table
from stairtab.tableaux import GstTableau, IndexSet

logger = logging.getLogger(__name__)

FORWARD_TIE = GstTableau.build(SkewShape((2, 1), (1,)), {Cell(1, 2): 1, Cell(2, 1): 1})
REVERSE_SINGLE = GstTableau.build(SkewShape((1,)), {Cell(1, 1): 2})


def _tableau(tableau: GstTableau) -> str:
    return json.dumps(TableauSchema.from_gst(tableau).dump(), indent=2) + "\n"


def _trace(result) -> str:
    return SlideTraceSchema.from_slide(result).model_dump_json(exclude_none=True) + "\n"


def goldens():
    """Relative path -> expected file content."""
    return {
        "tableaux/forward_tie.json": _tableau(FORWARD_TIE),
        "tableaux/reverse_single.json": _tableau(REVERSE_SINGLE),
        "traces/forward_tie_empty_set.json": _trace(forward_jdt(FORWARD_TIE, IndexSet.empty(1), (1, 1))),
        "traces/forward_tie_set_1.json": _trace(forward_jdt(FORWARD_TIE, IndexSet.full(1), (1, 1))),
        "traces/reverse_single.json": _trace(reverse_jdt(REVERSE_SINGLE, IndexSet.empty(2), (1, 2))),
        "polys/qtr_2_m1.json": qtr_poly(SkewShape((2,)), 1).to_json() + "\n",
        "expansions/yamanouchi_11_m2.jsonl": "".join(
            line + "\n" for line in yamanouchi_coeff_table(SkewShape((1, 1)), 2).to_lines()
        ),
    }


def main():
    parser = argparse.ArgumentParser(
        description="Regenerate the golden tableau, trace, polynomial and expansion files"
    )
    parser.add_argument(
        "--fixtures-dir",
        type=Path,
        default=FIXTURES_DIR,
        help="target directory (default: STAIRTAB_FIXTURES_DIR or <repo>/fixtures)",
    )
    parser.add_argument(
        "--check",
        action="store_true",
        help="compare instead of writing; exit 1 on any difference",
    )
    args = parser.parse_args()

    try:
        stale = []
        for name, content in goldens().items():
            path = args.fixtures_dir / name
            if args.check:
                if not path.exists() or path.read_text() != content:
                    stale.append(name)
                continue
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(content)
            logger.info("wrote %s", path)
        print(json.dumps({"status": "ok" if not stale else "stale", "stale": stale}, indent=2))
        sys.exit(0 if not stale else 1)
    except Exception as e:
        logger.exception("Fixture generation failed")
        print(json.dumps({"status": "error", "message": str(e)}, indent=2), file=sys.stderr)
        sys.exit(2)


if __name__ == "__main__":
    main()
