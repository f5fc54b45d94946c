"""Fillings of skew shapes: generalized staircase tableaux and Q-tableaux.

A GST of shape lambda/mu and set I has rows and columns weakly increasing,
letters of I at most once per row and letters outside I at most once per
column. A Q-tableau uses the alphabet 1' < 1 < 2' < 2 < ...; its generalized
form orders i and i' according to I (i <_I i' exactly when i is in I).

Index sets are truncated to [1, m]; a letter above ``I.m`` is never in I.
"""
import logging
import random
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple, Union

from .errors import PreconditionError
from .shapes import Cell, SkewShape, add_staircase, skew_cells

logger = logging.getLogger(__name__)

NEG_INF = float("-inf")
POS_INF = float("inf")

Content = Union[int, float]
Word = Tuple[int, ...]
WeightVector = Tuple[int, ...]


@dataclass(frozen=True)
class IndexSet:
    """Finite set I of letters, truncated to the alphabet [1, m]."""

    members: frozenset
    m: int

    def __post_init__(self):
        members = frozenset(int(i) for i in self.members)
        if self.m < 0:
            raise PreconditionError(f"alphabet bound must be non-negative, got {self.m}")
        bad = sorted(i for i in members if not 1 <= i <= self.m)
        if bad:
            raise PreconditionError(f"letters {bad} fall outside [1, {self.m}]")
        object.__setattr__(self, "members", members)

    @classmethod
    def empty(cls, m: int) -> "IndexSet":
        return cls(frozenset(), m)

    @classmethod
    def full(cls, m: int) -> "IndexSet":
        return cls(frozenset(range(1, m + 1)), m)

    @classmethod
    def odds(cls, m: int) -> "IndexSet":
        return cls(frozenset(range(1, m + 1, 2)), m)

    def __contains__(self, letter) -> bool:
        return letter in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __str__(self):
        return "{" + ",".join(str(i) for i in self) + "}"

    def complement(self) -> "IndexSet":
        return IndexSet(frozenset(range(1, self.m + 1)) - self.members, self.m)

    def with_letter(self, letter: int) -> "IndexSet":
        return IndexSet(self.members | {letter}, self.m)

    def without_letter(self, letter: int) -> "IndexSet":
        return IndexSet(self.members - {letter}, self.m)

    def shifted(self, k: int) -> "IndexSet":
        """{j - k : j in I, j > k}."""
        return IndexSet(frozenset(j - k for j in self.members if j > k), self.m)


class PrimedEntry(NamedTuple):
    value: int
    primed: bool = False

    def __str__(self):
        return f"{self.value}'" if self.primed else str(self.value)


@dataclass(frozen=True)
class _Filling:
    shape: SkewShape
    entries: Tuple[Tuple[Cell, Any], ...]

    def __post_init__(self):
        entries = tuple((Cell(*cell), self._coerce(value)) for cell, value in self.entries)
        if tuple(cell for cell, _ in entries) != skew_cells(self.shape):
            raise PreconditionError(f"entries do not fill {self.shape} in row-major order")
        object.__setattr__(self, "entries", entries)

    @staticmethod
    def _coerce(value):
        return value

    @classmethod
    def build(cls, shape: SkewShape, mapping: Dict[Cell, Any]):
        """Create a filling from a cell -> value mapping covering exactly ``shape``."""
        cells = skew_cells(shape)
        if len(mapping) != len(cells) or any(cell not in mapping for cell in cells):
            raise PreconditionError(f"mapping does not fill exactly the cells of {shape}")
        return cls(shape, tuple((cell, mapping[cell]) for cell in cells))

    @cached_property
    def mapping(self) -> Dict[Cell, Any]:
        return dict(self.entries)

    def __getitem__(self, cell):
        return self.mapping[cell]

    def __len__(self):
        return len(self.entries)

    def values(self) -> List[Any]:
        return [value for _, value in self.entries]

    def rows(self) -> List[List[str]]:
        """Printable rows, inner cells shown as '.'."""
        shape = self.shape
        return [
            ["." if (i, j) in shape.inner else str(self.mapping[(i, j)]) for j in range(1, shape.outer.part(i) + 1)]
            for i in range(1, len(shape.outer) + 1)
        ]

    def __str__(self):
        return "\n".join(" ".join(row) for row in self.rows())


class GstTableau(_Filling):
    """Filling by positive integers; validity w.r.t. an IndexSet is not stored."""

    @staticmethod
    def _coerce(value):
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise PreconditionError(f"GST entries must be positive integers, got {value!r}")
        return value


class QTableau(_Filling):
    """Filling by primed / unprimed letters."""

    @staticmethod
    def _coerce(value):
        entry = PrimedEntry(*value)
        if entry.value < 1:
            raise PreconditionError(f"Q-tableau letters must be positive, got {entry}")
        return PrimedEntry(int(entry.value), bool(entry.primed))


def cell_content(values: Dict[Cell, Content], inner, cell) -> Content:
    """Content of a possibly empty box: border and inner boxes are -inf, outside boxes +inf."""
    row, col = cell
    if cell in values:
        return values[cell]
    if row == 0 or col == 0 or cell in inner:
        return NEG_INF
    return POS_INF


def content_at(tableau: GstTableau, cell) -> Content:
    if cell[0] < 0 or cell[1] < 0:
        raise PreconditionError(f"cell {cell} has negative coordinates")
    return cell_content(tableau.mapping, tableau.shape.inner, cell)


# -- GST ---------------------------------------------------------------------


def _gst_fits(value: int, left: Optional[int], above: Optional[int], index_set: IndexSet) -> bool:
    if left is not None and (value < left or (value == left and value in index_set)):
        return False
    if above is not None and (value < above or (value == above and value not in index_set)):
        return False
    return True


def validate_gst(tableau: GstTableau, index_set: IndexSet) -> bool:
    values = tableau.mapping
    for (row, col), value in tableau.entries:
        if not _gst_fits(value, values.get((row, col - 1)), values.get((row - 1, col)), index_set):
            return False
    return True


def is_ssyt(tableau: GstTableau) -> bool:
    """Rows weakly increasing, columns strictly increasing."""
    values = tableau.mapping
    for (row, col), value in tableau.entries:
        right = values.get((row, col + 1))
        below = values.get((row + 1, col))
        if right is not None and right < value:
            return False
        if below is not None and below <= value:
            return False
    return True


def _gst_candidates(grid, cell, index_set: IndexSet, m: int) -> Iterator[int]:
    left = grid.get((cell.row, cell.col - 1))
    above = grid.get((cell.row - 1, cell.col))
    low = max(left or 1, above or 1)
    for value in range(low, m + 1):
        if _gst_fits(value, left, above, index_set):
            yield value


def iter_gst(shape: SkewShape, index_set: IndexSet, m: int) -> Iterator[GstTableau]:
    """Depth-first over row-major cells, candidates ascending."""
    cells = skew_cells(shape)
    grid: Dict[Cell, int] = {}

    def fill(k):
        if k == len(cells):
            yield GstTableau(shape, tuple((cell, grid[cell]) for cell in cells))
            return
        cell = cells[k]
        for value in _gst_candidates(grid, cell, index_set, m):
            grid[cell] = value
            yield from fill(k + 1)
        grid.pop(cell, None)

    yield from fill(0)


def enumerate_gst(shape: SkewShape, index_set: IndexSet, m: int) -> List[GstTableau]:
    return list(iter_gst(shape, index_set, m))


def _weighted_pick(options: List[Any], rng: random.Random):
    # smaller letters first keep later cells fillable
    weights = [len(options) - k for k in range(len(options))]
    return rng.choices(options, weights=weights)[0]


def sample_gst(
    shape: SkewShape, index_set: IndexSet, m: int, rng: random.Random, attempts: int = 200
) -> Optional[GstTableau]:
    """Random valid GST by greedy filling with restarts; None when every attempt dead-ends."""
    cells = skew_cells(shape)
    for _ in range(attempts):
        grid: Dict[Cell, int] = {}
        for cell in cells:
            options = list(_gst_candidates(grid, cell, index_set, m))
            if not options:
                break
            grid[cell] = _weighted_pick(options, rng)
        else:
            return GstTableau.build(shape, grid)
    return None


def weight(tableau: Union[GstTableau, QTableau]) -> WeightVector:
    counts = Counter(value.value if isinstance(value, PrimedEntry) else value for value in tableau.values())
    top = max(counts, default=0)
    return tuple(counts.get(i, 0) for i in range(1, top + 1))


def transpose_gst(tableau: GstTableau, index_set: IndexSet) -> Tuple[GstTableau, IndexSet]:
    """Reflect across the diagonal; the index set becomes its complement in [1, m]."""
    if any(value > index_set.m for value in tableau.values()) or not validate_gst(tableau, index_set):
        raise PreconditionError(f"tableau is not a valid GST for I={index_set}")
    transposed = {Cell(col, row): value for (row, col), value in tableau.entries}
    return GstTableau.build(tableau.shape.conjugate(), transposed), index_set.complement()


def gst_qtab_relabel(tableau: GstTableau) -> QTableau:
    """2i-1 -> i', 2i -> i."""
    return QTableau.build(
        tableau.shape,
        {cell: PrimedEntry((value + 1) // 2, value % 2 == 1) for cell, value in tableau.entries},
    )


def qtab_gst_relabel(tableau: QTableau) -> GstTableau:
    return GstTableau.build(
        tableau.shape,
        {cell: 2 * e.value - 1 if e.primed else 2 * e.value for cell, e in tableau.entries},
    )


# -- Q-tableaux --------------------------------------------------------------


def letter_key(entry: PrimedEntry, index_set: Optional[IndexSet] = None) -> int:
    """Integer key realizing <=_I; with I empty this is 1' < 1 < 2' < 2 < ..."""
    in_set = index_set is not None and entry.value in index_set
    return 2 * entry.value + (1 if entry.primed == in_set else 0)


def letters_in_order(index_set: IndexSet, m: int) -> List[PrimedEntry]:
    letters = []
    for value in range(1, m + 1):
        pair = [PrimedEntry(value, False), PrimedEntry(value, True)]
        letters.extend(pair if value in index_set else reversed(pair))
    return letters


def _qtab_fits(entry: PrimedEntry, left, above, index_set: Optional[IndexSet]) -> bool:
    key = letter_key(entry, index_set)
    if left is not None:
        if key < letter_key(left, index_set) or (entry == left and entry.primed):
            return False
    if above is not None:
        if key < letter_key(above, index_set) or (entry == above and not entry.primed):
            return False
    return True


def validate_qtab(tableau: QTableau, index_set: IndexSet) -> bool:
    values = tableau.mapping
    for (row, col), entry in tableau.entries:
        if not _qtab_fits(entry, values.get((row, col - 1)), values.get((row - 1, col)), index_set):
            return False
    return True


def _qtab_candidates(grid, cell, letters: List[PrimedEntry], index_set: IndexSet) -> Iterator[PrimedEntry]:
    left = grid.get((cell.row, cell.col - 1))
    above = grid.get((cell.row - 1, cell.col))
    for entry in letters:
        if _qtab_fits(entry, left, above, index_set):
            yield entry


def iter_qtab(shape: SkewShape, index_set: IndexSet, m: int) -> Iterator[QTableau]:
    cells = skew_cells(shape)
    letters = letters_in_order(index_set, m)
    grid: Dict[Cell, PrimedEntry] = {}

    def fill(k):
        if k == len(cells):
            yield QTableau(shape, tuple((cell, grid[cell]) for cell in cells))
            return
        cell = cells[k]
        for entry in _qtab_candidates(grid, cell, letters, index_set):
            grid[cell] = entry
            yield from fill(k + 1)
        grid.pop(cell, None)

    yield from fill(0)


def enumerate_qtab(shape: SkewShape, index_set: IndexSet, m: int) -> List[QTableau]:
    return list(iter_qtab(shape, index_set, m))


def sample_qtab(
    shape: SkewShape, index_set: IndexSet, m: int, rng: random.Random, attempts: int = 200
) -> Optional[QTableau]:
    cells = skew_cells(shape)
    letters = letters_in_order(index_set, m)
    for _ in range(attempts):
        grid: Dict[Cell, PrimedEntry] = {}
        for cell in cells:
            options = list(_qtab_candidates(grid, cell, letters, index_set))
            if not options:
                break
            grid[cell] = _weighted_pick(options, rng)
        else:
            return QTableau.build(shape, grid)
    return None


def prime_counts(tableau: QTableau) -> Tuple[int, int]:
    """(P, U): number of primed and unprimed entries."""
    primed = sum(1 for entry in tableau.values() if entry.primed)
    return primed, len(tableau) - primed


def transpose_qtab(tableau: QTableau) -> QTableau:
    return QTableau.build(
        tableau.shape.conjugate(),
        {Cell(col, row): entry for (row, col), entry in tableau.entries},
    )


def reading_word(tableau: QTableau) -> Word:
    """Primed entries down columns, right to left; then unprimed rows left to right, bottom to top."""
    entries = tableau.entries
    primed = sorted(
        ((cell, e) for cell, e in entries if e.primed), key=lambda item: (-item[0].col, item[0].row)
    )
    unprimed = sorted(
        ((cell, e) for cell, e in entries if not e.primed), key=lambda item: (-item[0].row, item[0].col)
    )
    return tuple(e.value for _, e in primed) + tuple(e.value for _, e in unprimed)


def is_yamanouchi(word: Iterable[int]) -> bool:
    """Every suffix holds at least as many i as i+1."""
    counts: Counter = Counter()
    for letter in reversed(tuple(word)):
        counts[letter] += 1
        if letter > 1 and counts[letter] > counts[letter - 1]:
            return False
    return True


# -- shifted embedding -------------------------------------------------------


def _shifted_cells(shape: SkewShape, n: int) -> Tuple[Cell, ...]:
    # row i of a shifted diagram starts in column i
    outer = add_staircase(shape.outer, n)
    inner = add_staircase(shape.inner, n)
    return tuple(
        Cell(i, col)
        for i in range(1, n + 1)
        for col in range(i + inner.part(i), i + outer.part(i))
    )


def _shift(cell: Cell, n: int) -> Cell:
    # n - i + 1 staircase boxes precede row i, which itself starts at column i
    return Cell(cell.row, cell.col + (cell.row - 1) + (n - cell.row + 1))


def shifted_validate(tableau: QTableau, n: int) -> bool:
    """Re-check the Q-tableau conditions on the shifted shape (lambda+delta)/(mu+delta)."""
    if len(tableau.shape.outer) > n:
        raise PreconditionError(f"{tableau.shape.outer} has more than {n} rows")
    placed = {_shift(cell, n): entry for cell, entry in tableau.entries}
    if set(placed) != set(_shifted_cells(tableau.shape, n)):
        return False
    if any(row == col for row, col in placed):
        return False
    for (row, col), entry in placed.items():
        if not _qtab_fits(entry, placed.get((row, col - 1)), placed.get((row - 1, col)), None):
            return False
    return True


def iter_shifted(shape: SkewShape, n: int, m: int) -> Iterator[QTableau]:
    """Q-tableaux built directly on the shifted diagram, mapped back to shape."""
    if len(shape.outer) > n:
        raise PreconditionError(f"{shape.outer} has more than {n} rows")
    cells = _shifted_cells(shape, n)
    letters = letters_in_order(IndexSet.empty(m), m)
    grid: Dict[Cell, PrimedEntry] = {}

    def fill(k):
        if k == len(cells):
            yield QTableau.build(shape, {Cell(row, col - n): grid[Cell(row, col)] for row, col in cells})
            return
        cell = cells[k]
        left = grid.get((cell.row, cell.col - 1))
        above = grid.get((cell.row - 1, cell.col))
        for entry in letters:
            if _qtab_fits(entry, left, above, None):
                grid[cell] = entry
                yield from fill(k + 1)
        grid.pop(cell, None)

    yield from fill(0)
