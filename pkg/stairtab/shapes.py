"""Partitions, skew shapes and cell geometry.

Cells are 1-indexed ``(row, col)`` pairs, matching the usual ``b_ij`` notation.
Partitions never store trailing zeros; every componentwise comparison pads
with zeros instead.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Optional, Tuple

from .errors import PreconditionError


class Cell(NamedTuple):
    """Box in row ``row`` and column ``col`` (both 1-indexed)."""

    row: int
    col: int

    def __str__(self):
        return f"({self.row},{self.col})"


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integers."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for k, p in enumerate(parts):
            if p <= 0:
                raise PreconditionError(f"Partition parts must be positive: {parts}")
            if k and parts[k - 1] < p:
                raise PreconditionError(f"Partition {parts} is not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """1-indexed part, 0 past the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __contains__(self, cell) -> bool:
        row, col = cell
        return row >= 1 and 1 <= col <= self.part(row)

    def cells(self) -> Tuple[Cell, ...]:
        return tuple(Cell(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1))


@dataclass(frozen=True)
class SkewShape:
    """Cells of ``outer`` not in ``inner``."""

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        if not isinstance(self.outer, Partition):
            object.__setattr__(self, "outer", Partition(self.outer))
        if not isinstance(self.inner, Partition):
            object.__setattr__(self, "inner", Partition(self.inner))
        if not contains(self.outer, self.inner):
            raise PreconditionError(f"{self.inner} is not contained in {self.outer}")

    def __str__(self):
        if not self.inner:
            return str(self.outer)
        return f"{self.outer}/{self.inner}"

    def __contains__(self, cell) -> bool:
        return cell in self.outer and cell not in self.inner

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def is_empty(self) -> bool:
        return self.size == 0

    def conjugate(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))


@dataclass(frozen=True)
class StaircaseParams:
    """Staircase size n together with delta(n) = (n, n-1, ..., 1)."""

    n: int

    def __post_init__(self):
        if self.n < 0:
            raise PreconditionError(f"staircase size must be non-negative, got {self.n}")

    @property
    def delta(self) -> Partition:
        return staircase(self.n)


def staircase(n: int) -> Partition:
    """delta(n) = (n, n-1, ..., 1); n = 0 gives the empty partition."""
    if n < 0:
        raise PreconditionError(f"staircase size must be non-negative, got {n}")
    return Partition(tuple(range(n, 0, -1)))


def conjugate(p: Partition) -> Partition:
    if not p:
        return Partition()
    return Partition(tuple(sum(1 for part in p if part >= j) for j in range(1, p.part(1) + 1)))


def contains(outer: Partition, inner: Partition) -> bool:
    return len(inner) <= len(outer) and all(inner.part(i) <= outer.part(i) for i in range(1, len(inner) + 1))


@lru_cache(maxsize=None)
def skew_cells(shape: SkewShape) -> Tuple[Cell, ...]:
    """Row-major list of the cells of ``shape``."""
    return tuple(
        Cell(i, j)
        for i in range(1, len(shape.outer) + 1)
        for j in range(shape.inner.part(i) + 1, shape.outer.part(i) + 1)
    )


def removable_cells(p: Partition) -> Tuple[Cell, ...]:
    """Outer corners of ``p``, top to bottom."""
    return tuple(Cell(i, p.part(i)) for i in range(1, len(p) + 1) if p.part(i + 1) < p.part(i))


def addable_cells(p: Partition) -> Tuple[Cell, ...]:
    """Cells whose addition keeps ``p`` a partition, top to bottom."""
    return tuple(
        Cell(i, p.part(i) + 1)
        for i in range(1, len(p) + 2)
        if i == 1 or p.part(i - 1) > p.part(i)
    )


def add_staircase(p: Partition, n: int) -> Partition:
    """p + delta(n); strictly decreasing, requires l(p) <= n."""
    if len(p) > n:
        raise PreconditionError(f"{p} has more than {n} parts")
    return Partition(tuple(p.part(i) + n - i + 1 for i in range(1, n + 1)))


def add_cells(p: Partition, cells: Iterable[Cell]) -> Partition:
    rows = list(p.parts)
    for row, col in sorted(cells):
        if row == len(rows) + 1:
            rows.append(0)
        if row > len(rows) or col != rows[row - 1] + 1:
            raise PreconditionError(f"cannot add {Cell(row, col)} to {p}")
        rows[row - 1] = col
    return Partition(tuple(rows))


def remove_cells(p: Partition, cells: Iterable[Cell]) -> Partition:
    rows = list(p.parts)
    for row, col in sorted(cells, key=lambda c: (c.row, -c.col)):
        if row > len(rows) or col != rows[row - 1]:
            raise PreconditionError(f"cannot remove {Cell(row, col)} from {p}")
        rows[row - 1] = col - 1
    if any(rows[k] < rows[k + 1] for k in range(len(rows) - 1)):
        raise PreconditionError(f"removing {sorted(cells)} from {p} leaves no partition")
    return Partition(tuple(rows))


def is_horizontal_strip(cells: Iterable[Cell]) -> bool:
    """At most one cell per column."""
    cols = [c.col for c in cells]
    return len(cols) == len(set(cols))


def is_vertical_strip(cells: Iterable[Cell]) -> bool:
    """At most one cell per row."""
    rows = [c.row for c in cells]
    return len(rows) == len(set(rows))


def partitions_of(
    k: int, max_length: Optional[int] = None, max_part: Optional[int] = None
) -> Iterator[Partition]:
    """All partitions of k in reverse lexicographic order."""

    def build(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in build(remaining - first, first, slots - 1):
                yield (first,) + rest

    slots = k if max_length is None else max_length
    cap = k if max_part is None else max_part
    for parts in build(k, cap, slots):
        yield Partition(parts)


def sub_partitions(p: Partition) -> Tuple[Partition, ...]:
    """Every mu contained in p, by size then reverse lexicographic."""

    def build(i, cap):
        if i > len(p):
            yield ()
            return
        for first in range(min(cap, p.part(i)), -1, -1):
            if first == 0:
                yield ()
                continue
            for rest in build(i + 1, first):
                yield (first,) + rest

    found = [Partition(parts) for parts in build(1, p.part(1))]
    return tuple(sorted(found, key=lambda q: (q.size, tuple(-x for x in q.parts))))


def skew_shapes(
    size_max: int,
    max_length: Optional[int] = None,
    inner_bound: Optional[Partition] = None,
    max_part: Optional[int] = None,
) -> Iterator[SkewShape]:
    """Skew shapes lambda/mu with |lambda/mu| <= size_max.

    ``inner_bound`` restricts mu to partitions it contains; without it, lambda
    itself is bounded by ``|lambda| <= size_max``. ``max_length`` and
    ``max_part`` bound the length and first part of lambda.
    """
    inners = sub_partitions(inner_bound) if inner_bound is not None else None
    for d in range(size_max + 1):
        if inners is None:
            for total in range(d, size_max + 1):
                for outer in partitions_of(total, max_length, max_part):
                    for inner in partitions_of(total - d):
                        if contains(outer, inner):
                            yield SkewShape(outer, inner)
            continue
        for inner in inners:
            for outer in partitions_of(inner.size + d, max_length, max_part):
                if contains(outer, inner):
                    yield SkewShape(outer, inner)
