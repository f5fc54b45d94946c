"""Sparse polynomials in x1..xm, t, r and the generating functions built on them.

Every identity is checked as a polynomial identity in m variables; a degree d
identity checked with m >= d holds for the symmetric functions in that degree.
"""
import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from . import config
from .errors import CoefficientOverflow, ExpansionError, InvariantViolation, UsageError
from .schemas import PolyTermSchema
from .shapes import Partition, SkewShape
from .tableaux import (
    IndexSet,
    QTableau,
    is_yamanouchi,
    iter_gst,
    iter_qtab,
    iter_shifted,
    prime_counts,
    reading_word,
    weight,
)

logger = logging.getLogger(__name__)


class Monomial(NamedTuple):
    """x^x * t^t * r^r."""

    x: Tuple[int, ...]
    t: int = 0
    r: int = 0


Scalar = int
PolyLike = Union["MultiPoly", Scalar]


def _check_coeff(coeff: int, where: Monomial) -> int:
    if abs(coeff) > config.COEFF_LIMIT:
        raise CoefficientOverflow(f"coefficient {coeff} of {where} exceeds {config.COEFF_LIMIT}")
    return coeff


def _term_order(item: Tuple[Monomial, int]):
    mono, _ = item
    return (mono.t, mono.r, tuple(-e for e in mono.x))


class MultiPoly:
    """Immutable integer polynomial; zero coefficients are never stored."""

    __slots__ = ("m", "_terms")

    def __init__(self, m: int, terms: Optional[Mapping[Monomial, int]] = None):
        if m < 0:
            raise UsageError(f"number of variables must be non-negative, got {m}")
        clean: Dict[Monomial, int] = {}
        for mono, coeff in (terms or {}).items():
            mono = Monomial(tuple(mono[0]), mono[1], mono[2])
            if len(mono.x) != m or min(mono.x, default=0) < 0 or mono.t < 0 or mono.r < 0:
                raise UsageError(f"exponent {mono} does not fit a polynomial in {m} variables")
            if coeff:
                clean[mono] = _check_coeff(int(coeff), mono)
        self.m = m
        self._terms = clean

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, m: int) -> "MultiPoly":
        return cls(m)

    @classmethod
    def constant(cls, c: int, m: int) -> "MultiPoly":
        return cls(m, {Monomial((0,) * m): c})

    @classmethod
    def one(cls, m: int) -> "MultiPoly":
        return cls.constant(1, m)

    @classmethod
    def monomial(cls, x: Sequence[int], t: int = 0, r: int = 0, coeff: int = 1) -> "MultiPoly":
        x = tuple(x)
        return cls(len(x), {Monomial(x, t, r): coeff})

    @classmethod
    def variable(cls, i: int, m: int) -> "MultiPoly":
        """x_i, 1-indexed."""
        if not 1 <= i <= m:
            raise UsageError(f"x{i} is not one of x1..x{m}")
        return cls.monomial(tuple(1 if k == i else 0 for k in range(1, m + 1)))

    @classmethod
    def t_var(cls, m: int) -> "MultiPoly":
        return cls(m, {Monomial((0,) * m, 1, 0): 1})

    @classmethod
    def r_var(cls, m: int) -> "MultiPoly":
        return cls(m, {Monomial((0,) * m, 0, 1): 1})

    # -- access ---------------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(other, self.m)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.m == other.m and self._terms == other._terms

    def __hash__(self):
        return hash((self.m, frozenset(self._terms.items())))

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        """Terms by (t, r) ascending, then x exponents lexicographically descending."""
        return sorted(self._terms.items(), key=_term_order)

    def leading_x(self) -> Tuple[int, ...]:
        """Lexicographically largest x-exponent."""
        if not self._terms:
            raise ValueError("the zero polynomial has no leading exponent")
        return max(mono.x for mono in self._terms)

    def x_coefficient(self, x: Sequence[int]) -> "MultiPoly":
        """Coefficient of x^x as a polynomial in t and r (same m)."""
        x = tuple(x)
        zeros = (0,) * self.m
        return MultiPoly(
            self.m, {Monomial(zeros, mono.t, mono.r): c for mono, c in self._terms.items() if mono.x == x}
        )

    # -- arithmetic -----------------------------------------------------------

    def _lift(self, other: PolyLike) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.m != self.m:
                raise UsageError(f"cannot combine polynomials in {self.m} and {other.m} variables")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return MultiPoly.constant(other, self.m)
        raise TypeError(f"unsupported operand {other!r}")

    def __add__(self, other: PolyLike) -> "MultiPoly":
        other = self._lift(other)
        total = Counter(self._terms)
        total.update(other._terms)
        return MultiPoly(self.m, total)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.m, {mono: -c for mono, c in self._terms.items()})

    def __sub__(self, other: PolyLike) -> "MultiPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other: PolyLike) -> "MultiPoly":
        return self._lift(other) + (-self)

    def __mul__(self, other: PolyLike) -> "MultiPoly":
        other = self._lift(other)
        product: Counter = Counter()
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                key = Monomial(tuple(p + q for p, q in zip(a.x, b.x)), a.t + b.t, a.r + b.r)
                product[key] += ca * cb
        return MultiPoly(self.m, product)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise UsageError("negative powers are not polynomials")
        result, base = MultiPoly.one(self.m), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- transformations ------------------------------------------------------

    def substitute(
        self,
        x_images: Sequence[PolyLike],
        t_image: Optional[PolyLike] = None,
        r_image: Optional[PolyLike] = None,
    ) -> "MultiPoly":
        """Replace x_i by x_images[i-1] (and t, r when given); the images fix the new m."""
        if len(x_images) != self.m:
            raise UsageError(f"expected {self.m} images for x1..x{self.m}, got {len(x_images)}")
        widths = {img.m for img in (*x_images, t_image, r_image) if isinstance(img, MultiPoly)}
        if len(widths) > 1:
            raise UsageError(f"substitution images mix polynomials in {sorted(widths)} variables")
        m = widths.pop() if widths else self.m
        one = MultiPoly.one(m)
        images = [one * img for img in x_images]
        t_poly = MultiPoly.t_var(m) if t_image is None else one * t_image
        r_poly = MultiPoly.r_var(m) if r_image is None else one * r_image

        powers: Dict[Tuple[int, int], MultiPoly] = {}

        def power(slot: int, base: "MultiPoly", e: int) -> "MultiPoly":
            if (slot, e) not in powers:
                powers[(slot, e)] = base ** e
            return powers[(slot, e)]

        result = MultiPoly.zero(m)
        for mono, coeff in self._terms.items():
            term = MultiPoly.constant(coeff, m)
            for slot, e in enumerate(mono.x):
                if e:
                    term = term * power(slot, images[slot], e)
            if mono.t:
                term = term * power(-1, t_poly, mono.t)
            if mono.r:
                term = term * power(-2, r_poly, mono.r)
            result = result + term
        return result

    def swap_tr(self) -> "MultiPoly":
        return MultiPoly(self.m, {Monomial(mono.x, mono.r, mono.t): c for mono, c in self._terms.items()})

    def specialize_tr(self, t: int = 1, r: int = 1) -> "MultiPoly":
        """Evaluate t and r at integers; the result has no t or r."""
        values: Counter = Counter()
        for mono, c in self._terms.items():
            values[Monomial(mono.x)] += c * t ** mono.t * r ** mono.r
        return MultiPoly(self.m, values)

    def swap_variables(self, i: int, j: int) -> "MultiPoly":
        """Exchange x_i and x_j (1-indexed)."""
        if not (1 <= i <= self.m and 1 <= j <= self.m):
            raise UsageError(f"x{i}, x{j} are not both among x1..x{self.m}")

        def swapped(x):
            x = list(x)
            x[i - 1], x[j - 1] = x[j - 1], x[i - 1]
            return tuple(x)

        return MultiPoly(self.m, {Monomial(swapped(mono.x), mono.t, mono.r): c for mono, c in self._terms.items()})

    # -- serialization --------------------------------------------------------

    def to_terms(self) -> List[dict]:
        return [
            PolyTermSchema(coeff=c, x=list(mono.x), t=mono.t, r=mono.r).model_dump()
            for mono, c in self.sorted_terms()
        ]

    @classmethod
    def from_terms(cls, terms: Iterable[Union[Mapping, PolyTermSchema]], m: Optional[int] = None) -> "MultiPoly":
        terms = [PolyTermSchema.model_validate(term) for term in terms]
        widths = {len(term.x) for term in terms}
        if m is not None:
            widths.add(m)
        if len(widths) > 1:
            raise UsageError(f"terms mix exponent vectors of lengths {sorted(widths)}")
        if not widths:
            raise UsageError("an empty term list needs an explicit m")
        total: Counter = Counter()
        for term in terms:
            total[Monomial(tuple(term.x), term.t, term.r)] += term.coeff
        return cls(widths.pop(), total)

    def to_json(self) -> str:
        return json.dumps(self.to_terms(), separators=(",", ":"))

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for mono, c in self.sorted_terms():
            powers = [("t", mono.t), ("r", mono.r)] + [(f"x{k}", e) for k, e in enumerate(mono.x, 1)]
            body = "*".join(name if e == 1 else f"{name}^{e}" for name, e in powers if e)
            magnitude = abs(c)
            text = body if magnitude == 1 and body else (f"{magnitude}*{body}" if body else str(magnitude))
            sign = "-" if c < 0 else "+"
            out.append(f"{sign} {text}")
        joined = " ".join(out)
        return joined[2:] if joined.startswith("+ ") else "-" + joined[2:]

    def __repr__(self):
        return f"<MultiPoly m={self.m} {self}>"


def _exponents(values: Iterable[int], m: int) -> Tuple[int, ...]:
    counts = [0] * m
    for v in values:
        counts[v - 1] += 1
    return tuple(counts)


def _collect(m: int, monomials: Iterable[Monomial]) -> MultiPoly:
    return MultiPoly(m, Counter(monomials))


# -- generating functions ----------------------------------------------------


def gst_gf(shape: SkewShape, index_set: IndexSet, m: int) -> MultiPoly:
    """Sum of x^wt(T) over G(shape, I) in m letters."""
    return _collect(m, (Monomial(_exponents(T.values(), m)) for T in iter_gst(shape, index_set, m)))


def _ssyt_exponents(shape: SkewShape, m: int) -> Iterator[Tuple[int, ...]]:
    # row by row: weakly increasing rows, strictly below the row above
    rows = [(i, shape.inner.part(i) + 1, shape.outer.part(i)) for i in range(1, len(shape.outer) + 1)]
    counts = [0] * m

    def fill(k: int, above: Dict[int, int]):
        if k == len(rows):
            yield tuple(counts)
            return
        _, start, stop = rows[k]
        for row in combinations_with_replacement(range(1, m + 1), stop - start + 1):
            if any(above.get(start + j, 0) >= v for j, v in enumerate(row)):
                continue
            for v in row:
                counts[v - 1] += 1
            yield from fill(k + 1, {start + j: v for j, v in enumerate(row)})
            for v in row:
                counts[v - 1] -= 1

    yield from fill(0, {})


def schur_skew_poly(shape: SkewShape, m: int) -> MultiPoly:
    """s_{lambda/mu}(x1..xm) from a row-wise SSYT enumeration."""
    return _collect(m, (Monomial(x) for x in _ssyt_exponents(shape, m)))


@lru_cache(maxsize=None)
def schur_poly(nu: Partition, m: int) -> MultiPoly:
    return schur_skew_poly(SkewShape(nu), m)


def _qtab_monomial(tableau: QTableau, m: int) -> Monomial:
    primed, unprimed = prime_counts(tableau)
    return Monomial(_exponents((e.value for e in tableau.values()), m), primed, unprimed)


def qtr_poly(shape: SkewShape, m: int) -> MultiPoly:
    """Q^tr: x^wt t^P r^U over Q(shape, {}) in m letters."""
    return _collect(m, (_qtab_monomial(T, m) for T in iter_qtab(shape, IndexSet.empty(m), m)))


def qtr_at_one(shape: SkewShape, m: int) -> MultiPoly:
    return qtr_poly(shape, m).specialize_tr(1, 1)


def shifted_q_poly(shape: SkewShape, n: int, m: int) -> MultiPoly:
    """Q^tr computed on the shifted diagram (lambda+delta)/(mu+delta)."""
    return _collect(m, (_qtab_monomial(T, m) for T in iter_shifted(shape, n, m)))


def doubled_substitution(shape: SkewShape, m: int) -> MultiPoly:
    """s_{shape}(t x1, r x1, ..., t xm, r xm)."""
    s = schur_skew_poly(shape, 2 * m)
    images = []
    for i in range(1, m + 1):
        x_i = MultiPoly.variable(i, m)
        images += [MultiPoly.t_var(m) * x_i, MultiPoly.r_var(m) * x_i]
    return s.substitute(images)


def is_symmetric_poly(p: MultiPoly) -> bool:
    return all(p.swap_variables(i, i + 1) == p for i in range(1, p.m))


# -- Schur expansion ---------------------------------------------------------


def _partition_order(nu: Partition):
    return (nu.size, tuple(-part for part in nu.parts))


@dataclass(frozen=True, eq=False)
class SchurExpansion:
    """Sum over nu of coefficients[nu] * s_nu(x1..xm); coefficients live in t and r."""

    m: int
    coefficients: Dict[Partition, MultiPoly] = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.m == other.m and self.coefficients == other.coefficients

    def __len__(self):
        return len(self.coefficients)

    def __getitem__(self, nu) -> MultiPoly:
        return self.coefficients[nu if isinstance(nu, Partition) else Partition(tuple(nu))]

    def partitions(self) -> List[Partition]:
        return sorted(self.coefficients, key=_partition_order)

    def reconstruct(self) -> MultiPoly:
        total = MultiPoly.zero(self.m)
        for nu in self.partitions():
            total = total + self.coefficients[nu] * schur_poly(nu, self.m)
        return total

    def coefficient(self, nu, k: int, d: int) -> int:
        """c^{nu,k}: coefficient of t^k r^(d-k) in the nu entry."""
        nu = nu if isinstance(nu, Partition) else Partition(tuple(nu))
        entry = self.coefficients.get(nu)
        if entry is None:
            return 0
        return entry.terms.get(Monomial((0,) * self.m, k, d - k), 0)

    def to_lines(self) -> List[str]:
        return [
            json.dumps(
                {"partition": list(nu.parts), "coeff": self.coefficients[nu].to_terms()},
                separators=(",", ":"),
            )
            for nu in self.partitions()
        ]

    def __str__(self):
        if not self.coefficients:
            return "0"
        return " + ".join(f"({self.coefficients[nu]})*s{nu}" for nu in self.partitions())


def schur_expand(p: MultiPoly) -> SchurExpansion:
    """Peel off the lexicographically leading monomial until nothing remains."""
    if not is_symmetric_poly(p):
        raise ExpansionError("polynomial is not symmetric in the x variables")
    remaining = p
    coefficients: Dict[Partition, MultiPoly] = {}
    while remaining:
        lead = remaining.leading_x()
        if any(lead[k] < lead[k + 1] for k in range(len(lead) - 1)):
            raise ExpansionError(f"leading exponent {lead} is not a partition")
        nu = Partition(lead)
        coeff = remaining.x_coefficient(lead)
        coefficients[nu] = coefficients.get(nu, MultiPoly.zero(p.m)) + coeff
        remaining = remaining - coeff * schur_poly(nu, p.m)
    logger.debug("expanded into %d Schur terms", len(coefficients))
    return SchurExpansion(p.m, coefficients)


def _yamanouchi_tableaux(shape: SkewShape, m: int) -> Iterator[Tuple[QTableau, Partition]]:
    for T in iter_qtab(shape, IndexSet.empty(m), m):
        if not is_yamanouchi(reading_word(T)):
            continue
        wt = weight(T)
        if any(wt[k] < wt[k + 1] for k in range(len(wt) - 1)):
            raise InvariantViolation(f"Yamanouchi tableau has non-partition weight {wt}:\n{T}")
        yield T, Partition(wt)


def yamanouchi_coeff_table(shape: SkewShape, m: int) -> SchurExpansion:
    """c^{nu,k} from Q-tableaux with Yamanouchi reading word, keyed by weight."""
    zeros = (0,) * m
    table: Dict[Partition, Counter] = {}
    for T, nu in _yamanouchi_tableaux(shape, m):
        primed, unprimed = prime_counts(T)
        table.setdefault(nu, Counter())[Monomial(zeros, primed, unprimed)] += 1
    return SchurExpansion(m, {nu: MultiPoly(m, counts) for nu, counts in table.items()})


def unprimed_yamanouchi_counts(shape: SkewShape, m: int) -> Dict[Partition, int]:
    """Unprimed Yamanouchi tableaux by weight; these are Littlewood-Richardson numbers."""
    counts: Counter = Counter()
    for T, nu in _yamanouchi_tableaux(shape, m):
        if prime_counts(T)[0] == 0:
            counts[nu] += 1
    return dict(counts)
