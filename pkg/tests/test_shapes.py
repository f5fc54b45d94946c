"""Tests for partitions, skew shapes and cell geometry."""
import pytest
from hypothesis import given

from stairtab.errors import PreconditionError
from stairtab.shapes import (
    Cell,
    Partition,
    SkewShape,
    StaircaseParams,
    add_cells,
    add_staircase,
    addable_cells,
    conjugate,
    contains,
    is_horizontal_strip,
    is_vertical_strip,
    partitions_of,
    remove_cells,
    removable_cells,
    skew_cells,
    skew_shapes,
    staircase,
    sub_partitions,
)
from tests.strategies import partitions


def P(*parts):
    return Partition(parts)


class TestPartition:
    """Test suite for partitions."""

    def test_trailing_zeros_are_dropped(self):
        """Test trailing zero parts are dropped."""
        assert P(2, 1, 0, 0).parts == (2, 1)
        assert len(P(2, 1, 0)) == 2

    def test_increasing_parts_rejected(self):
        """Test increasing parts are rejected."""
        with pytest.raises(PreconditionError):
            P(1, 2)

    def test_negative_parts_rejected(self):
        """Test negative parts are rejected."""
        with pytest.raises(ValueError):
            P(2, -1)

    def test_part_is_one_indexed(self):
        """Test part(i) is one-indexed and 0 past the length."""
        p = P(3, 1)
        assert p.part(1) == 3
        assert p.part(2) == 1
        assert p.part(3) == 0

    def test_size_and_str(self):
        """Test size and the printed form."""
        assert P(3, 2, 1).size == 6
        assert str(P(3, 2, 1)) == "(3,2,1)"
        assert str(P()) == "()"

    def test_cells_membership(self):
        """Test cell membership."""
        p = P(2, 1)
        assert (1, 2) in p
        assert (2, 2) not in p
        assert p.cells() == (Cell(1, 1), Cell(1, 2), Cell(2, 1))


class TestStaircase:
    """Test suite for staircases."""

    def test_staircase(self):
        """Test delta(n) has parts n down to 1."""
        assert staircase(3) == P(3, 2, 1)
        assert staircase(0) == P()
        assert StaircaseParams(2).delta == P(2, 1)

    def test_negative_size_rejected(self):
        """Test a negative staircase size is rejected."""
        with pytest.raises(PreconditionError):
            staircase(-1)

    def test_staircase_is_self_conjugate(self):
        """Test delta(n) is self-conjugate."""
        for n in range(6):
            assert conjugate(staircase(n)) == staircase(n)

    def test_add_staircase(self):
        """Test adding delta(n) part by part."""
        assert add_staircase(P(2, 1), 3) == P(5, 3, 1)
        assert add_staircase(P(), 2) == P(2, 1)

    def test_add_staircase_too_long(self):
        """Test a partition longer than n cannot take delta(n)."""
        with pytest.raises(PreconditionError):
            add_staircase(P(1, 1, 1, 1), 3)


class TestConjugate:
    """Test suite for conjugation."""

    def test_examples(self):
        """Test conjugates of small partitions."""
        assert conjugate(P(3, 1)) == P(2, 1, 1)
        assert conjugate(P()) == P()
        assert conjugate(P(4)) == P(1, 1, 1, 1)

    @given(partitions())
    def test_conjugate_is_an_involution(self, p):
        """Test conjugating twice is the identity."""
        assert conjugate(conjugate(p)) == p
        assert conjugate(p).size == p.size


class TestSkewShape:
    """Test suite for skew shapes."""

    def test_cells_row_major(self):
        """Test skew cells come in row-major order."""
        shape = SkewShape(P(3, 2), P(1))
        assert skew_cells(shape) == (Cell(1, 2), Cell(1, 3), Cell(2, 1), Cell(2, 2))
        assert shape.size == 4
        assert str(shape) == "(3,2)/(1)"

    def test_tuples_are_coerced(self):
        """Test tuples are coerced to partitions."""
        assert SkewShape((2, 1), (1,)) == SkewShape(P(2, 1), P(1))

    def test_inner_must_be_contained(self):
        """Test the inner shape must lie inside the outer one."""
        with pytest.raises(PreconditionError):
            SkewShape(P(1), P(2))

    def test_empty_skew_shape(self):
        """Test lambda/lambda is empty."""
        shape = SkewShape(P(1), P(1))
        assert shape.is_empty
        assert skew_cells(shape) == ()

    def test_conjugate(self):
        """Test conjugating a skew shape conjugates both partitions."""
        assert SkewShape(P(3, 1), P(1)).conjugate() == SkewShape(P(2, 1, 1), P(1))

    def test_contains(self):
        """Test containment of partitions."""
        assert contains(P(3, 2, 1), P(2, 1))
        assert not contains(P(3, 2, 1), P(2, 2))
        assert contains(P(1), P())


class TestCorners:
    """Test suite for corners and strips."""

    def test_removable_cells(self):
        """Test removable cells are the outer corners."""
        assert removable_cells(P(3, 1)) == (Cell(1, 3), Cell(2, 1))
        assert removable_cells(P()) == ()

    def test_addable_cells(self):
        """Test addable cells of a partition and of the empty one."""
        assert addable_cells(P(3, 1)) == (Cell(1, 4), Cell(2, 2), Cell(3, 1))
        assert addable_cells(P()) == (Cell(1, 1),)

    def test_add_and_remove_cells(self):
        """Test adding and removing corner cells."""
        assert add_cells(P(2), [Cell(1, 3), Cell(2, 1)]) == P(3, 1)
        assert remove_cells(P(3, 1), [Cell(1, 3)]) == P(2, 1)
        assert remove_cells(P(2, 1), [Cell(1, 2), Cell(2, 1)]) == P(1)

    def test_add_cells_rejects_gaps(self):
        """Test adding a cell that leaves a gap is rejected."""
        with pytest.raises(PreconditionError):
            add_cells(P(2), [Cell(2, 2)])

    def test_remove_cells_rejects_non_partitions(self):
        """Test removing a cell that is not a corner is rejected."""
        with pytest.raises(PreconditionError):
            remove_cells(P(2, 2), [Cell(1, 2)])

    def test_strips(self):
        """Test horizontal and vertical strips."""
        assert is_horizontal_strip([Cell(1, 3), Cell(2, 1)])
        assert not is_horizontal_strip([Cell(1, 1), Cell(2, 1)])
        assert is_vertical_strip([Cell(1, 1), Cell(2, 1)])
        assert not is_vertical_strip([Cell(1, 1), Cell(1, 2)])
        assert is_horizontal_strip([]) and is_vertical_strip([])


class TestGenerators:
    """Test suite for partition and shape generators."""

    def test_partitions_of_four(self):
        """Test the partitions of 4 in reverse lexicographic order."""
        assert list(partitions_of(4)) == [P(4), P(3, 1), P(2, 2), P(2, 1, 1), P(1, 1, 1, 1)]

    def test_partition_counts(self):
        """Test partition counts for small sizes."""
        assert [sum(1 for _ in partitions_of(k)) for k in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]

    def test_partitions_of_bounded(self):
        """Test length and part bounds."""
        assert list(partitions_of(4, max_length=2)) == [P(4), P(3, 1), P(2, 2)]
        assert list(partitions_of(4, max_part=2)) == [P(2, 2), P(2, 1, 1), P(1, 1, 1, 1)]

    def test_sub_partitions(self):
        """Test the partitions inside a partition."""
        assert sub_partitions(P(2, 1)) == (P(), P(1), P(2), P(1, 1), P(2, 1))

    def test_sub_partitions_of_staircases_are_catalan(self):
        """Test delta(n) contains a Catalan number of partitions."""
        assert [len(sub_partitions(staircase(n))) for n in range(1, 5)] == [2, 5, 14, 42]

    def test_skew_shapes_small(self):
        """Test the skew shapes of at most one box."""
        assert list(skew_shapes(1)) == [
            SkewShape(P(), P()),
            SkewShape(P(1), P(1)),
            SkewShape(P(1), P()),
        ]

    def test_skew_shapes_with_inner_bound(self):
        """Test the inner bound restricts mu."""
        shapes = list(skew_shapes(2, max_length=2, inner_bound=P(1)))
        assert all(contains(P(1), s.inner) and len(s.outer) <= 2 and s.size <= 2 for s in shapes)
        assert SkewShape(P(2, 1), P(1)) in shapes
        assert len(shapes) == len(set(shapes))
