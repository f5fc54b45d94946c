"""Pydantic schemas for the JSON wire formats: tableaux, polynomials, traces and reports."""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .jdt import SlideResult
from .shapes import Cell, Partition, SkewShape
from .tableaux import GstTableau, PrimedEntry, QTableau


def _check_partition(parts: List[int]) -> List[int]:
    # raises PreconditionError (a ValueError) for non-partitions
    return list(Partition(tuple(parts)).parts)


class EntrySchema(BaseModel):
    """One filled box."""

    row: int = Field(..., description="1-indexed row", ge=1)
    col: int = Field(..., description="1-indexed column", ge=1)
    value: int = Field(..., description="Letter, a positive integer", ge=1)
    primed: Optional[bool] = Field(None, description="Q-tableau entries only: whether the letter is primed")


class TableauSchema(BaseModel):
    """A filling of the skew shape outer/inner."""

    outer: List[int] = Field(..., description="Outer partition lambda")
    inner: List[int] = Field(default_factory=list, description="Inner partition mu")
    entries: List[EntrySchema] = Field(..., description="One entry per cell of outer/inner")

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "outer": [2, 1],
                "inner": [1],
                "entries": [
                    {"row": 1, "col": 2, "value": 1},
                    {"row": 2, "col": 1, "value": 1},
                ],
            }
        }
    )

    @field_validator("outer", "inner")
    @classmethod
    def check_partition(cls, v):
        return _check_partition(v)

    @property
    def shape(self) -> SkewShape:
        return SkewShape(Partition(tuple(self.outer)), Partition(tuple(self.inner)))

    @property
    def is_primed(self) -> bool:
        return any(entry.primed is not None for entry in self.entries)

    @classmethod
    def from_gst(cls, tableau: GstTableau) -> "TableauSchema":
        return cls(
            outer=list(tableau.shape.outer.parts),
            inner=list(tableau.shape.inner.parts),
            entries=[EntrySchema(row=c.row, col=c.col, value=v) for c, v in tableau.entries],
        )

    @classmethod
    def from_qtab(cls, tableau: QTableau) -> "TableauSchema":
        return cls(
            outer=list(tableau.shape.outer.parts),
            inner=list(tableau.shape.inner.parts),
            entries=[
                EntrySchema(row=c.row, col=c.col, value=e.value, primed=e.primed) for c, e in tableau.entries
            ],
        )

    def to_gst(self) -> GstTableau:
        return GstTableau.build(self.shape, {Cell(e.row, e.col): e.value for e in self.entries})

    def to_qtab(self) -> QTableau:
        return QTableau.build(
            self.shape, {Cell(e.row, e.col): PrimedEntry(e.value, bool(e.primed)) for e in self.entries}
        )

    def dump(self) -> Dict[str, Any]:
        return self.model_dump(exclude_none=True)


class PolyTermSchema(BaseModel):
    """One term coeff * x^x * t^t * r^r of a polynomial."""

    coeff: int = Field(..., description="Non-zero integer coefficient")
    x: List[int] = Field(..., description="Exponents of x1..xm")
    t: int = Field(0, description="Exponent of t (primed entries)", ge=0)
    r: int = Field(0, description="Exponent of r (unprimed entries)", ge=0)

    @field_validator("x")
    @classmethod
    def exponents_non_negative(cls, v: List[int]) -> List[int]:
        if any(e < 0 for e in v):
            raise ValueError(f"negative exponent in {v}")
        return v

    model_config = ConfigDict(
        json_schema_extra={"example": {"coeff": 1, "x": [2], "t": 1, "r": 1}}
    )


class SlideTraceSchema(BaseModel):
    """Result of one jeu de taquin slide."""

    tableau: TableauSchema = Field(..., description="Tableau after the slide")
    vacated: List[int] = Field(..., description="Cell vacated by the slide")
    path: List[List[int]] = Field(..., description="Cells visited by the hole, starting at the hole")

    @classmethod
    def from_slide(cls, result: SlideResult) -> "SlideTraceSchema":
        return cls(tableau=TableauSchema.from_gst(result.tableau), **result.to_dict())


class VerifyParams(BaseModel):
    """Parameters of a single verification run; only the applicable ones are set."""

    n: Optional[int] = Field(None, description="Staircase size", ge=0)
    m: Optional[int] = Field(None, description="Alphabet bound / number of variables", ge=0)
    mu: List[int] = Field(default_factory=list, description="Inner partition")
    lam: Optional[List[int]] = Field(None, alias="lambda", description="Outer partition")
    index_set: Optional[List[int]] = Field(None, alias="set", description="Index set I")
    set2: Optional[List[int]] = Field(None, description="Target index set I'")
    letter: Optional[int] = Field(None, description="Letter added to I to form I'", ge=1)
    samples: Optional[int] = Field(None, description="Number of random tableaux instead of enumeration", ge=1)
    seed: Optional[int] = Field(None, description="Seed for the random tableaux")
    unrestricted: Optional[bool] = Field(None, description="Allow shapes outside the standing assumptions")

    model_config = ConfigDict(
        populate_by_name=True,
        json_schema_extra={"example": {"n": 3, "m": 3, "mu": [2], "set": [1], "set2": [1, 3]}},
    )

    @field_validator("mu", "lam")
    @classmethod
    def check_partition(cls, v):
        return None if v is None else _check_partition(v)

    @field_validator("index_set", "set2")
    @classmethod
    def sort_set(cls, v):
        if v is None:
            return None
        if any(i < 1 for i in v):
            raise ValueError(f"index set letters must be positive: {v}")
        return sorted(set(v))

    def dump(self) -> Dict[str, Any]:
        return self.model_dump(by_alias=True, exclude_none=True)


class VerifyReportSchema(BaseModel):
    """Wire form of a VerifyReport; ``pass`` false requires a counterexample."""

    theorem: str = Field(..., description="Theorem id")
    params: Dict[str, Any] = Field(..., description="Parameters of the run")
    passed: bool = Field(..., alias="pass", description="Whether the check passed")
    counterexample: Optional[Dict[str, Any]] = Field(None, description="Evidence for a failure")
    elapsed: Optional[float] = Field(None, description="Seconds spent, only with --timing")

    model_config = ConfigDict(
        populate_by_name=True,
        json_schema_extra={
            "example": {"theorem": "thm2", "params": {"n": 3, "m": 3, "mu": [2]}, "pass": True}
        },
    )
