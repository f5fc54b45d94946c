"""Explicit bijections between tableau families.

- phi: G(delta/mu, I) -> G(delta/mu, I + {i}) by erasing the i's and sliding.
- psi: Q(lambda/mu, I) -> Q(lambda/mu, I + {i}) by cycling along ribbons.
- transpose_prime_toggle: Q(lambda'/mu', {}) -> Q(lambda/mu, N).
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import InvariantViolation, PreconditionError
from .jdt import forward_jdt, reverse_jdt
from .shapes import (
    Cell,
    SkewShape,
    add_cells,
    contains,
    is_horizontal_strip,
    is_vertical_strip,
    staircase,
)
from .tableaux import (
    GstTableau,
    IndexSet,
    PrimedEntry,
    QTableau,
    transpose_gst,
    transpose_qtab,
    validate_gst,
    validate_qtab,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PhiTrace:
    """phi_add_one together with the strips it vacated."""

    tableau: GstTableau
    outer_strip: Tuple[Cell, ...]
    inner_strip: Tuple[Cell, ...]


def _require_staircase(tableau: GstTableau, n: int):
    delta = staircase(n)
    if tableau.shape.outer != delta or not contains(delta, tableau.shape.inner):
        raise PreconditionError(f"shape {tableau.shape} is not delta({n})/mu")


def phi_trace(tableau: GstTableau, index_set: IndexSet, n: int) -> PhiTrace:
    _require_staircase(tableau, n)
    if 1 in index_set:
        raise PreconditionError(f"1 already belongs to I={index_set}")
    if not validate_gst(tableau, index_set):
        raise PreconditionError(f"tableau is not a valid GST for I={index_set}")

    shape = tableau.shape
    ones = sorted((cell for cell, value in tableau.entries if value == 1), key=lambda c: -c.col)
    if not ones:
        return PhiTrace(tableau, (), ())

    # erased 1s join the inner shape; rightmost hole first
    working = GstTableau.build(
        SkewShape(shape.outer, add_cells(shape.inner, ones)),
        {cell: value for cell, value in tableau.entries if value != 1},
    )
    outer_strip: List[Cell] = []
    for hole in ones:
        slide = forward_jdt(working, index_set, hole)
        working = slide.tableau
        outer_strip.append(slide.vacated)
    if not (is_horizontal_strip(outer_strip) and is_vertical_strip(outer_strip)):
        raise InvariantViolation(f"outer cells {outer_strip} are not a horizontal and vertical strip")

    inner_strip: List[Cell] = []
    for hole in sorted(outer_strip, key=lambda c: c.row):
        slide = reverse_jdt(working, index_set, hole)
        working = slide.tableau
        inner_strip.append(slide.vacated)
    if not is_vertical_strip(inner_strip):
        raise InvariantViolation(f"inner cells {inner_strip} are not a vertical strip")

    values: Dict[Cell, int] = dict(working.mapping)
    values.update((cell, 1) for cell in inner_strip)
    return PhiTrace(GstTableau.build(shape, values), tuple(outer_strip), tuple(inner_strip))


def phi_add_one(tableau: GstTableau, index_set: IndexSet, n: int) -> GstTableau:
    """G(delta/mu, I) -> G(delta/mu, I + {1}) for 1 not in I."""
    return phi_trace(tableau, index_set, n).tableau


def phi_add(tableau: GstTableau, index_set: IndexSet, letter: int, n: int) -> GstTableau:
    """G(delta/mu, I) -> G(delta/mu, I + {letter}), weight preserving."""
    if letter in index_set:
        raise PreconditionError(f"{letter} already belongs to I={index_set}")
    _require_staircase(tableau, n)
    if not validate_gst(tableau, index_set):
        raise PreconditionError(f"tableau is not a valid GST for I={index_set}")

    shift = letter - 1
    frozen = {cell: value for cell, value in tableau.entries if value < letter}
    reduced = GstTableau.build(
        SkewShape(tableau.shape.outer, add_cells(tableau.shape.inner, frozen)),
        {cell: value - shift for cell, value in tableau.entries if value >= letter},
    )
    image = phi_add_one(reduced, index_set.shifted(shift), n)
    values = {cell: value + shift for cell, value in image.entries}
    values.update(frozen)
    return GstTableau.build(tableau.shape, values)


def phi_remove(tableau: GstTableau, index_set: IndexSet, letter: int, n: int) -> GstTableau:
    """Inverse of phi_add: transpose, add ``letter`` for the complementary set, transpose back."""
    if letter not in index_set:
        raise PreconditionError(f"{letter} does not belong to I={index_set}")
    _require_staircase(tableau, n)
    transposed, complement = transpose_gst(tableau, index_set)
    image = phi_add(transposed, complement, letter, n)
    restored, _ = transpose_gst(image, complement.with_letter(letter))
    return restored


def _require_same_alphabet(first: IndexSet, second: IndexSet):
    if first.m != second.m:
        raise PreconditionError(f"index sets use different alphabets ({first.m} vs {second.m})")


def gst_transport(tableau: GstTableau, source: IndexSet, target: IndexSet, n: int) -> GstTableau:
    """Removals in descending order, then additions in ascending order."""
    _require_same_alphabet(source, target)
    current, current_set = tableau, source
    for letter in sorted(source.members - target.members, reverse=True):
        current = phi_remove(current, current_set, letter, n)
        current_set = current_set.without_letter(letter)
    for letter in sorted(target.members - source.members):
        current = phi_add(current, current_set, letter, n)
        current_set = current_set.with_letter(letter)
    return current


# -- ribbons -----------------------------------------------------------------


def ribbons(tableau: QTableau, letter: int) -> List[List[Cell]]:
    """Cells holding ``letter`` or its primed form, one path per connected ribbon.

    Paths run from the upper-right end to the bottom-left end.
    """
    cells = {cell for cell, entry in tableau.entries if entry.value == letter}
    for row, col in cells:
        if {(row, col + 1), (row + 1, col), (row + 1, col + 1)} <= cells:
            raise InvariantViolation(f"letter {letter} fills a 2x2 block at {Cell(row, col)}")

    paths = []
    unseen = set(cells)
    while unseen:
        component = {min(unseen)}
        frontier = list(component)
        while frontier:
            row, col = frontier.pop()
            for near in ((row, col + 1), (row, col - 1), (row + 1, col), (row - 1, col)):
                if near in unseen and near not in component:
                    component.add(Cell(*near))
                    frontier.append(Cell(*near))
        unseen -= component

        ends = [c for c in component if (c.row - 1, c.col) not in component and (c.row, c.col + 1) not in component]
        if len(ends) != 1:
            raise InvariantViolation(f"ribbon {sorted(component)} has no unique upper-right end")
        path = [ends[0]]
        while True:
            row, col = path[-1]
            if (row, col - 1) in component:
                path.append(Cell(row, col - 1))
            elif (row + 1, col) in component:
                path.append(Cell(row + 1, col))
            else:
                break
        if len(path) != len(component):
            raise InvariantViolation(f"ribbon {sorted(component)} is not a path")
        paths.append(path)
    return sorted(paths)


def _cycle(tableau: QTableau, letter: int, towards_end: bool) -> QTableau:
    values = dict(tableau.mapping)
    for path in ribbons(tableau, letter):
        if towards_end:
            moved = [path[-1]] + path[:-1]
        else:
            moved = path[1:] + [path[0]]
        # the entry at moved[k] lands on path[k]
        for target, source in zip(path, moved):
            values[target] = tableau.mapping[source]
    return QTableau.build(tableau.shape, values)


def psi_cycle(tableau: QTableau, index_set: IndexSet, letter: int) -> QTableau:
    """Q(shape, I) -> Q(shape, I + {letter}); entries step towards the bottom-left end."""
    if letter in index_set:
        raise PreconditionError(f"{letter} already belongs to I={index_set}")
    if not validate_qtab(tableau, index_set):
        raise PreconditionError(f"tableau is not a valid Q-tableau for I={index_set}")
    return _cycle(tableau, letter, towards_end=True)


def psi_inverse(tableau: QTableau, index_set: IndexSet, letter: int) -> QTableau:
    if letter not in index_set:
        raise PreconditionError(f"{letter} does not belong to I={index_set}")
    if not validate_qtab(tableau, index_set):
        raise PreconditionError(f"tableau is not a valid Q-tableau for I={index_set}")
    return _cycle(tableau, letter, towards_end=False)


def qtab_transport(tableau: QTableau, source: IndexSet, target: IndexSet) -> QTableau:
    _require_same_alphabet(source, target)
    current, current_set = tableau, source
    for letter in sorted(source.members - target.members, reverse=True):
        current = psi_inverse(current, current_set, letter)
        current_set = current_set.without_letter(letter)
    for letter in sorted(target.members - source.members):
        current = psi_cycle(current, current_set, letter)
        current_set = current_set.with_letter(letter)
    return current


def _alphabet(tableau: QTableau, m) -> int:
    return max((entry.value for entry in tableau.values()), default=0) if m is None else m


def transpose_prime_toggle(tableau: QTableau, m: Optional[int] = None) -> QTableau:
    """Q(lambda'/mu', {}) -> Q(lambda/mu, [1, m]); swaps P and U."""
    if not validate_qtab(tableau, IndexSet.empty(_alphabet(tableau, m))):
        raise PreconditionError("tableau is not a valid Q-tableau for the standard order")
    transposed = transpose_qtab(tableau)
    return QTableau.build(
        transposed.shape,
        {cell: PrimedEntry(entry.value, not entry.primed) for cell, entry in transposed.entries},
    )


def prop_tr_bijection(tableau: QTableau, m: Optional[int] = None) -> QTableau:
    """Q(lambda'/mu', {}) -> Q(lambda/mu, {}), weight preserving, P and U interchanged."""
    m = _alphabet(tableau, m)
    return qtab_transport(transpose_prime_toggle(tableau, m), IndexSet.full(m), IndexSet.empty(m))
