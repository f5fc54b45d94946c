"""Forward and reverse jeu de taquin slides parameterized by an index set.

Ties between equal finite contents v move the horizontal neighbour when v is
in I and the vertical one otherwise. Infinite contents are never in I, so a
tie between two empty boxes selects an empty box and the slide stops.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from . import config
from .errors import InvariantViolation, PreconditionError
from .shapes import Cell, SkewShape, add_cells, addable_cells, remove_cells, removable_cells
from .tableaux import GstTableau, IndexSet, cell_content, validate_gst

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SlideResult:
    tableau: GstTableau
    vacated: Cell
    path: Tuple[Cell, ...]

    def to_dict(self) -> dict:
        return {
            "vacated": list(self.vacated),
            "path": [list(cell) for cell in self.path],
        }


def legal_forward_holes(tableau: GstTableau) -> Tuple[Cell, ...]:
    return removable_cells(tableau.shape.inner)


def legal_reverse_holes(tableau: GstTableau) -> Tuple[Cell, ...]:
    return addable_cells(tableau.shape.outer)


def _checked(result: SlideResult, index_set: IndexSet) -> SlideResult:
    if config.CHECK_INVARIANTS and not validate_gst(result.tableau, index_set):
        raise InvariantViolation(f"slide produced an invalid GST for I={index_set}:\n{result.tableau}")
    return result


def _as_cell(hole) -> Cell:
    try:
        row, col = hole
    except (TypeError, ValueError):
        raise PreconditionError(f"hole must be a (row, col) pair, got {hole!r}")
    return Cell(row, col)


def forward_jdt(tableau: GstTableau, index_set: IndexSet, hole) -> SlideResult:
    """Slide the inner corner ``hole`` outwards; the lesser neighbour moves in."""
    hole = _as_cell(hole)
    shape = tableau.shape
    if hole not in legal_forward_holes(tableau):
        raise PreconditionError(f"{hole} is not a removable cell of the inner shape {shape.inner}")
    inner = remove_cells(shape.inner, [hole])
    grid: Dict[Cell, int] = dict(tableau.mapping)
    current = hole
    path = [hole]
    while True:
        right = Cell(current.row, current.col + 1)
        below = Cell(current.row + 1, current.col)
        c_right = cell_content(grid, inner, right)
        c_below = cell_content(grid, inner, below)
        if c_right < c_below or (c_right == c_below and c_right in index_set):
            chosen = right
        else:
            chosen = below
        if chosen not in grid:
            break
        grid[current] = grid.pop(chosen)
        current = chosen
        path.append(current)
    outer = remove_cells(shape.outer, [current])
    result = SlideResult(GstTableau.build(SkewShape(outer, inner), grid), current, tuple(path))
    logger.debug("forward slide into %s vacated %s", hole, current)
    return _checked(result, index_set)


def reverse_jdt(tableau: GstTableau, index_set: IndexSet, hole) -> SlideResult:
    """Slide the outer addable cell ``hole`` inwards; the greater neighbour moves in."""
    hole = _as_cell(hole)
    shape = tableau.shape
    if hole not in legal_reverse_holes(tableau):
        raise PreconditionError(f"{hole} is not an addable cell of the outer shape {shape.outer}")
    outer = add_cells(shape.outer, [hole])
    grid: Dict[Cell, int] = dict(tableau.mapping)
    current = hole
    path = [hole]
    while True:
        left = Cell(current.row, current.col - 1)
        above = Cell(current.row - 1, current.col)
        c_left = cell_content(grid, shape.inner, left)
        c_above = cell_content(grid, shape.inner, above)
        if c_left > c_above or (c_left == c_above and c_left in index_set):
            chosen = left
        else:
            chosen = above
        if chosen not in grid:
            break
        grid[current] = grid.pop(chosen)
        current = chosen
        path.append(current)
    inner = add_cells(shape.inner, [current])
    result = SlideResult(GstTableau.build(SkewShape(outer, inner), grid), current, tuple(path))
    logger.debug("reverse slide into %s vacated %s", hole, current)
    return _checked(result, index_set)


def _monotone(path: Tuple[Cell, ...], forward: bool) -> bool:
    step = 1 if forward else -1
    return all(
        (b.row - a.row, b.col - a.col) in ((0, step), (step, 0)) for a, b in zip(path, path[1:])
    )


def _order_law(first_hole, second_hole, first_vacated, second_vacated) -> Optional[str]:
    """Two successive slides vacate cells in the same relative position as their holes."""
    (k, l), (i, j) = first_hole, second_hole
    (k2, l2), (i2, j2) = first_vacated, second_vacated
    if i >= k and j < l and not (i2 >= k2 and j2 < l2):
        return "strictly-left-weakly-below"
    if i < k and j >= l and not (i2 < k2 and j2 >= l2):
        return "strictly-above-weakly-right"
    return None


def check_slide_laws(tableau: GstTableau, index_set: IndexSet) -> Optional[dict]:
    """Check inverse, validity, path and ordering laws over every legal hole and hole pair.

    Returns the first violation found, or None.
    """
    for hole in legal_forward_holes(tableau):
        slide = forward_jdt(tableau, index_set, hole)
        if not validate_gst(slide.tableau, index_set):
            return {"law": "forward-validity", "hole": list(hole)}
        if not _monotone(slide.path, forward=True):
            return {"law": "forward-path", "hole": list(hole)}
        if reverse_jdt(slide.tableau, index_set, slide.vacated).tableau != tableau:
            return {"law": "forward-then-reverse", "hole": list(hole)}
        for second in legal_forward_holes(slide.tableau):
            again = forward_jdt(slide.tableau, index_set, second)
            broken = _order_law(hole, second, slide.vacated, again.vacated)
            if broken:
                return {"law": f"forward-order-{broken}", "holes": [list(hole), list(second)]}

    for hole in legal_reverse_holes(tableau):
        slide = reverse_jdt(tableau, index_set, hole)
        if not validate_gst(slide.tableau, index_set):
            return {"law": "reverse-validity", "hole": list(hole)}
        if not _monotone(slide.path, forward=False):
            return {"law": "reverse-path", "hole": list(hole)}
        if forward_jdt(slide.tableau, index_set, slide.vacated).tableau != tableau:
            return {"law": "reverse-then-forward", "hole": list(hole)}
        for second in legal_reverse_holes(slide.tableau):
            again = reverse_jdt(slide.tableau, index_set, second)
            # the later slide lies on the inside, so it takes the first position
            broken = _order_law(second, hole, again.vacated, slide.vacated)
            if broken:
                return {"law": f"reverse-order-{broken}", "holes": [list(hole), list(second)]}
    return None
