"""run_verify: one exact check per theorem id.

Every check returns None on success or a counterexample dict. Parameter
problems raise UsageError before any enumeration starts; errors raised while
checking become a failing report carrying ``{"error": ...}``.
"""
import logging
import random
import time
from contextlib import contextmanager
from typing import Callable, Dict, Optional, Tuple, Union

from pydantic import ValidationError

from . import config
from .bijections import gst_transport, phi_trace, prop_tr_bijection, qtab_transport
from .errors import PreconditionError, StairtabError, UsageError
from .jdt import check_slide_laws
from .models import THEOREMS, VerifyReport
from .schemas import TableauSchema, VerifyParams
from .shapes import Partition, SkewShape, conjugate, contains, staircase, sub_partitions
from .symfunc import (
    MultiPoly,
    doubled_substitution,
    gst_gf,
    qtr_at_one,
    qtr_poly,
    schur_skew_poly,
    yamanouchi_coeff_table,
)
from .tableaux import (
    GstTableau,
    IndexSet,
    QTableau,
    iter_gst,
    iter_qtab,
    prime_counts,
    sample_gst,
    sample_qtab,
    validate_gst,
    validate_qtab,
    weight,
)

logger = logging.getLogger(__name__)

Counterexample = Optional[dict]

_CHECKS: Dict[str, Callable[[VerifyParams], Counterexample]] = {}


def _check(theorem: str):
    def register(func):
        _CHECKS[theorem] = func
        return func

    return register


@contextmanager
def _usage():
    try:
        yield
    except PreconditionError as e:
        raise UsageError(str(e)) from e


# -- parameter helpers ---------------------------------------------------------


def _required(params: VerifyParams, *names: str):
    missing = [name for name in names if getattr(params, name) is None]
    if missing:
        flags = ", ".join("--lambda" if name == "lam" else f"--{name}" for name in missing)
        raise UsageError(f"missing required parameter(s): {flags}")
    return tuple(getattr(params, name) for name in names)


def _staircase_shape(params: VerifyParams) -> Tuple[SkewShape, int, int]:
    n, m = _required(params, "n", "m")
    mu = Partition(tuple(params.mu))
    delta = staircase(n)
    if not contains(delta, mu):
        raise UsageError(f"mu={mu} is not contained in delta({n})")
    return SkewShape(delta, mu), n, m


def _skew_shape(params: VerifyParams, first_part: bool = False) -> Tuple[SkewShape, int]:
    (lam, m) = _required(params, "lam", "m")
    lam, mu = Partition(tuple(lam)), Partition(tuple(params.mu))
    if not contains(lam, mu):
        raise UsageError(f"mu={mu} is not contained in lambda={lam}")
    if not params.unrestricted:
        (n,) = _required(params, "n")
        if not contains(staircase(n), mu):
            raise UsageError(f"mu={mu} is not contained in delta({n})")
        if len(lam) > n:
            raise UsageError(f"lambda={lam} has more than n={n} parts")
        if first_part and lam.part(1) > n:
            raise UsageError(f"lambda_1={lam.part(1)} exceeds n={n}")
    return SkewShape(lam, mu), m


def _index_sets(params: VerifyParams, m: int) -> Tuple[IndexSet, IndexSet]:
    with _usage():
        source = IndexSet(frozenset(params.index_set or ()), m)
        if params.set2 is not None:
            target = IndexSet(frozenset(params.set2), m)
        elif params.letter is not None:
            target = source.with_letter(params.letter)
        else:
            raise UsageError("one of --set2 or --letter is required")
    return source, target


def _random_set(rng: random.Random, m: int) -> IndexSet:
    return IndexSet(frozenset(i for i in range(1, m + 1) if rng.random() < 0.5), m)


def _rng(params: VerifyParams) -> random.Random:
    return random.Random(config.SEED if params.seed is None else params.seed)


def _gst(tableau: GstTableau) -> dict:
    return TableauSchema.from_gst(tableau).dump()


def _qtab(tableau: QTableau) -> dict:
    return TableauSchema.from_qtab(tableau).dump()


def _differ(left_name: str, left: MultiPoly, right_name: str, right: MultiPoly) -> Counterexample:
    if left == right:
        return None
    return {left_name: left.to_terms(), right_name: right.to_terms()}


# -- checks ----------------------------------------------------------------------


def _phi_evidence(tableau: GstTableau, index_set: IndexSet, n: int) -> dict:
    try:
        trace = phi_trace(tableau, index_set, n)
    except StairtabError as e:
        return {"error": str(e)}
    return {
        "tableau": _gst(trace.tableau),
        "outer_strip": [list(cell) for cell in trace.outer_strip],
        "inner_strip": [list(cell) for cell in trace.inner_strip],
    }


@_check("thm1")
def check_thm1(params: VerifyParams) -> Counterexample:
    """gst_transport is a weight preserving bijection G(delta/mu, I) -> G(delta/mu, I')."""
    shape, n, m = _staircase_shape(params)
    source, target = _index_sets(params, m)
    images: Dict[GstTableau, GstTableau] = {}
    for T in iter_gst(shape, source, m):
        image = gst_transport(T, source, target, n)
        reason = None
        if not validate_gst(image, target):
            reason = "image is not a valid GST for I'"
        elif weight(image) != weight(T):
            reason = "weight changed"
        elif gst_transport(image, target, source, n) != T:
            reason = "round trip did not return the tableau"
        elif image in images:
            reason = "two tableaux share an image"
        if reason:
            found = {"reason": reason, "tableau": _gst(T), "image": _gst(image)}
            if 1 not in source:
                found["phi"] = _phi_evidence(T, source, n)
            return found
        images[image] = T

    expected = sum(1 for _ in iter_gst(shape, target, m))
    if len(images) != expected:
        return {"reason": "image count differs from |G(shape, I')|", "images": len(images), "expected": expected}
    return _differ("gf_source", gst_gf(shape, source, m), "gf_target", gst_gf(shape, target, m))


@_check("thm2")
def check_thm2(params: VerifyParams) -> Counterexample:
    shape, _, m = _staircase_shape(params)
    flipped = SkewShape(shape.outer, conjugate(shape.inner))
    return _differ("schur", schur_skew_poly(shape, m), "schur_conjugate_inner", schur_skew_poly(flipped, m))


@_check("thm3")
def check_thm3(params: VerifyParams) -> Counterexample:
    """Q^tr equals the Schur expansion read off the Yamanouchi tableaux."""
    shape, m = _skew_shape(params)
    table = yamanouchi_coeff_table(shape, m)
    found = _differ("qtr", qtr_poly(shape, m), "yamanouchi", table.reconstruct())
    if found:
        found["table"] = table.to_lines()
    return found


@_check("thm4")
def check_thm4(params: VerifyParams) -> Counterexample:
    shape, _, m = _staircase_shape(params)
    return _differ("doubled", doubled_substitution(shape, m), "qtr", qtr_poly(shape, m))


@_check("cor-tr-sym")
def check_cor_tr_sym(params: VerifyParams) -> Counterexample:
    """Q^tr of delta/mu is symmetric in t, r and unchanged by mu -> mu'."""
    shape, _, m = _staircase_shape(params)
    q = qtr_poly(shape, m)
    found = _differ("qtr", q, "qtr_swapped", q.swap_tr())
    if found:
        return found
    flipped = SkewShape(shape.outer, conjugate(shape.inner))
    return _differ("qtr", q, "qtr_conjugate_inner", qtr_poly(flipped, m))


@_check("prop-tr")
def check_prop_tr(params: VerifyParams) -> Counterexample:
    shape, m = _skew_shape(params)
    transposed = shape.conjugate()
    found = _differ("qtr_swapped", qtr_poly(shape, m).swap_tr(), "qtr_conjugate", qtr_poly(transposed, m))
    if found:
        return found

    empty = IndexSet.empty(m)
    seen = set()
    for T in iter_qtab(transposed, empty, m):
        image = prop_tr_bijection(T, m)
        primed, unprimed = prime_counts(T)
        reason = None
        if image.shape != shape or not validate_qtab(image, empty):
            reason = "image is not a Q-tableau of lambda/mu"
        elif weight(image) != weight(T):
            reason = "weight changed"
        elif prime_counts(image) != (unprimed, primed):
            reason = "primed and unprimed counts were not interchanged"
        elif image in seen:
            reason = "two tableaux share an image"
        if reason:
            return {"reason": reason, "tableau": _qtab(T), "image": _qtab(image)}
        seen.add(image)
    return None


@_check("cor-final")
def check_cor_final(params: VerifyParams) -> Counterexample:
    shape, m = _skew_shape(params, first_part=True)
    return _differ("q", qtr_at_one(shape, m), "q_conjugate", qtr_at_one(shape.conjugate(), m))


@_check("jdt-laws")
def check_jdt_laws(params: VerifyParams) -> Counterexample:
    if params.samples:
        n, m = _required(params, "n", "m")
        delta = staircase(n)
        inners = sub_partitions(delta)
        rng = _rng(params)
        for _ in range(params.samples):
            index_set = _random_set(rng, m)
            T = sample_gst(SkewShape(delta, rng.choice(inners)), index_set, m, rng)
            if T is None:
                continue
            violation = check_slide_laws(T, index_set)
            if violation:
                return {"violation": violation, "set": list(index_set), "tableau": _gst(T)}
        return None

    shape, _, m = _staircase_shape(params)
    with _usage():
        index_set = IndexSet(frozenset(params.index_set or ()), m)
    for T in iter_gst(shape, index_set, m):
        violation = check_slide_laws(T, index_set)
        if violation:
            return {"violation": violation, "tableau": _gst(T)}
    return None


@_check("psi-laws")
def check_psi_laws(params: VerifyParams) -> Counterexample:
    """qtab_transport is a bijection preserving weight and prime counts."""
    (lam, m) = _required(params, "lam", "m")
    with _usage():
        shape = SkewShape(Partition(tuple(lam)), Partition(tuple(params.mu)))
    source, target = _index_sets(params, m)

    if params.samples:
        rng = _rng(params)
        tableaux = (sample_qtab(shape, source, m, rng) for _ in range(params.samples))
        tableaux = (T for T in tableaux if T is not None)
    else:
        tableaux = iter_qtab(shape, source, m)

    seen = set()
    for T in tableaux:
        image = qtab_transport(T, source, target)
        reason = None
        if not validate_qtab(image, target):
            reason = "image is not a valid Q-tableau for I'"
        elif weight(image) != weight(T) or prime_counts(image) != prime_counts(T):
            reason = "weight or prime counts changed"
        elif qtab_transport(image, target, source) != T:
            reason = "round trip did not return the tableau"
        elif not params.samples and image in seen:
            reason = "two tableaux share an image"
        if reason:
            return {"reason": reason, "tableau": _qtab(T), "image": _qtab(image)}
        seen.add(image)

    if not params.samples:
        expected = sum(1 for _ in iter_qtab(shape, target, m))
        if len(seen) != expected:
            return {"reason": "image count differs from |Q(shape, I')|", "images": len(seen), "expected": expected}
    return None


# -- entry point -----------------------------------------------------------------


def parse_params(params: Union[VerifyParams, dict, None]) -> VerifyParams:
    if isinstance(params, VerifyParams):
        return params
    try:
        return VerifyParams.model_validate(params or {})
    except ValidationError as e:
        raise UsageError(f"invalid parameters: {e}") from e


def run_verify(theorem: str, params: Union[VerifyParams, dict, None] = None) -> VerifyReport:
    """Run the check for ``theorem``; deterministic for identical params."""
    if theorem not in _CHECKS:
        raise UsageError(f"unknown theorem id {theorem!r}; expected one of {', '.join(THEOREMS)}")
    params = parse_params(params)
    start = time.perf_counter()
    try:
        counterexample = _CHECKS[theorem](params)
    except UsageError:
        raise
    except StairtabError as e:
        counterexample = {"error": f"{type(e).__name__}: {e}"}
    report = VerifyReport(
        theorem=theorem,
        params=params.dump(),
        passed=counterexample is None,
        counterexample=counterexample,
        elapsed=time.perf_counter() - start,
    )
    if report.passed:
        logger.debug("%s %s passed in %.3fs", theorem, report.params, report.elapsed)
    else:
        logger.warning("%s %s FAILED: %s", theorem, report.params, counterexample)
    return report
