"""Job module: exposes run_sweep used by the CLI and the sweep script.

A sweep expands a theorem id and bounds into the canonical list of cases,
runs each through run_verify (optionally in worker processes) and returns the
reports in case order. Staircase sweeps range over mu strictly inside delta(n),
so the empty shape delta(n)/delta(n) is never a case; `verify` still accepts it.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Iterator, List, Optional, Tuple

from . import config
from .errors import UsageError
from .models import THEOREMS, VerifyReport
from .shapes import Partition, contains, partitions_of, skew_shapes, staircase, sub_partitions
from .verify import run_verify

logger = logging.getLogger(__name__)

Case = Tuple[str, dict]


def index_subsets(m: int) -> List[List[int]]:
    """Every subset of [1, m], by size then lexicographically."""
    return [list(c) for k in range(m + 1) for c in combinations(range(1, m + 1), k)]


def _staircase_inners(n_max: int) -> Iterator[Tuple[int, Partition]]:
    # mu = delta(n) would leave the empty shape
    for n in range(1, n_max + 1):
        delta = staircase(n)
        for mu in sub_partitions(delta):
            if mu != delta:
                yield n, mu


def _restricted_shapes(n_max: int, size_max: int, first_part: bool):
    delta = staircase(n_max)
    for shape in skew_shapes(size_max, max_length=n_max, max_part=n_max if first_part else None):
        if contains(delta, shape.inner):
            yield shape


def default_size_max(theorem: str) -> int:
    """Shape-size bound a sweep of ``theorem`` uses when none is given."""
    return config.DEFAULT_SIZE_MAX_BY_THEOREM.get(theorem, config.DEFAULT_SHAPE_SIZE_MAX)


def sweep_cases(
    theorem: str,
    n_max: int,
    m: int,
    size_max: int,
    unrestricted: bool = False,
    samples: Optional[int] = None,
) -> List[Case]:
    """All admissible parameter records for ``theorem`` within the bounds, in canonical order."""
    if theorem not in THEOREMS:
        raise UsageError(f"unknown theorem id {theorem!r}")
    if min(n_max, m, size_max) < 1:
        raise UsageError("sweep bounds must be at least 1")

    cases: List[Case] = []

    def add(**params):
        cases.append((theorem, {key: value for key, value in params.items() if value is not None}))

    if theorem == "thm1":
        subsets = index_subsets(m)
        for n, mu in _staircase_inners(n_max):
            for source in subsets:
                for target in subsets:
                    if source != target:
                        add(n=n, m=m, mu=list(mu), set=source, set2=target)
    elif theorem in ("thm2", "thm4", "cor-tr-sym"):
        for n, mu in _staircase_inners(n_max):
            add(n=n, m=m, mu=list(mu))
    elif theorem == "thm3":
        delta = staircase(n_max)
        for shape in skew_shapes(size_max, max_length=n_max, inner_bound=delta):
            # m = |shape| makes the degree-d identity conclusive
            add(n=n_max, m=shape.size, mu=list(shape.inner), **{"lambda": list(shape.outer)})
    elif theorem in ("prop-tr", "cor-final"):
        if unrestricted:
            shapes = skew_shapes(size_max)
        else:
            shapes = _restricted_shapes(n_max, size_max, first_part=theorem == "cor-final")
        for shape in shapes:
            add(
                n=None if unrestricted else n_max,
                m=m,
                mu=list(shape.inner),
                unrestricted=True if unrestricted else None,
                **{"lambda": list(shape.outer)},
            )
    elif theorem == "jdt-laws":
        for n, mu in _staircase_inners(n_max):
            for index_set in index_subsets(m):
                add(n=n, m=m, mu=list(mu), set=index_set)
        if samples:
            add(n=n_max + 2, m=m + 1, samples=samples, seed=config.SEED)
    elif theorem == "psi-laws":
        for shape in skew_shapes(size_max):
            if shape.is_empty:
                continue
            for index_set in index_subsets(m):
                for letter in range(1, m + 1):
                    if letter not in index_set:
                        add(m=m, mu=list(shape.inner), set=index_set, letter=letter,
                            **{"lambda": list(shape.outer)})
        if samples:
            for lam in partitions_of(size_max + 2, max_length=n_max + 2):
                add(m=m, mu=[], set=[], set2=list(range(1, m + 1)), samples=samples, seed=config.SEED,
                    **{"lambda": list(lam)})
    return cases


def run_case(case: Case) -> VerifyReport:
    """Run one case and return its report; any exception becomes a failing report."""
    theorem, params = case
    try:
        return run_verify(theorem, params)
    except Exception as e:
        logger.exception("Case %s %s failed", theorem, params)
        return VerifyReport(
            theorem=theorem,
            params=params,
            passed=False,
            counterexample={"error": f"{type(e).__name__}: {e}"},
        )


def run_sweep(
    theorem: str,
    n_max: int = config.DEFAULT_N,
    m: int = config.DEFAULT_M,
    size_max: Optional[int] = None,
    jobs: int = config.DEFAULT_JOBS,
    unrestricted: bool = False,
    samples: Optional[int] = None,
) -> List[VerifyReport]:
    """Run every case of ``theorem``; reports come back in canonical case order."""
    if size_max is None:
        size_max = default_size_max(theorem)
    cases = sweep_cases(theorem, n_max, m, size_max, unrestricted=unrestricted, samples=samples)
    logger.info("Sweeping %s: %d cases (n<=%d, m=%d, size<=%d, jobs=%d)", theorem, len(cases), n_max, m, size_max, jobs)
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run_case, cases, chunksize=max(1, len(cases) // (4 * jobs))))
    else:
        reports = [run_case(case) for case in cases]
    failed = sum(1 for report in reports if not report.passed)
    logger.info("%s: %d passed, %d failed", theorem, len(reports) - failed, failed)
    return reports
