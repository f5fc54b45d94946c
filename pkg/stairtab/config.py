"""Centralized configuration loaded from environment variables."""

import logging
import os
import sys
from pathlib import Path


SEED = int(os.getenv("STAIRTAB_SEED", "20180611"))

DEFAULT_N = int(os.getenv("STAIRTAB_N", "3"))
DEFAULT_M = int(os.getenv("STAIRTAB_M", "3"))
DEFAULT_SHAPE_SIZE_MAX = int(os.getenv("STAIRTAB_SHAPE_SIZE_MAX", "6"))
DEFAULT_JOBS = int(os.getenv("STAIRTAB_JOBS", "1"))

# thm3 uses |shape| variables per case and psi-laws walks every (I, letter)
# pair, so their default sweeps stop at smaller shapes.
DEFAULT_SIZE_MAX_BY_THEOREM = {
    "thm3": int(os.getenv("STAIRTAB_THM3_SIZE_MAX", "4")),
    "psi-laws": int(os.getenv("STAIRTAB_PSI_SIZE_MAX", "4")),
}

# Re-validate every slide result; the test suite switches this on.
CHECK_INVARIANTS = os.getenv("STAIRTAB_CHECK_INVARIANTS", "0") == "1"

FIXTURES_DIR = Path(
    os.getenv("STAIRTAB_FIXTURES_DIR", str(Path(__file__).parent.parent / "fixtures"))
)

# Coefficients are bounded by the widest native machine integer.
COEFF_LIMIT = 2**63 - 1

LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()

# stdout carries JSON reports, so logs always go to stderr.
logging.basicConfig(
    stream=sys.stderr,
    format="%(asctime)s %(levelname)-7s stairtab.%(module)s | %(message)s",
    datefmt="%H:%M:%S",
    level=getattr(logging, LOG_LEVEL, logging.INFO),
)
