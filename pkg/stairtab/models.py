"""Models for verification results."""
from typing import Any, Dict, Optional

from .schemas import VerifyReportSchema

THEOREMS = (
    "thm1",
    "thm2",
    "thm3",
    "thm4",
    "cor-tr-sym",
    "prop-tr",
    "cor-final",
    "jdt-laws",
    "psi-laws",
)


class VerifyReport:
    """Outcome of one run_verify call."""

    def __init__(
        self,
        theorem: str,
        params: Optional[Dict[str, Any]] = None,
        passed: bool = True,
        counterexample: Optional[Dict[str, Any]] = None,
        elapsed: Optional[float] = None,
    ):
        if not passed and counterexample is None:
            raise ValueError(f"failing {theorem} report needs a counterexample")
        self.theorem = theorem
        self.params = params or {}
        self.passed = passed
        self.counterexample = counterexample
        self.elapsed = elapsed

    def to_dict(self, timing: bool = False):
        """Convert to dict for JSON serialization; key order is fixed."""
        out = {"theorem": self.theorem, "params": self.params, "pass": self.passed}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if timing and self.elapsed is not None:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    @classmethod
    def from_dict(cls, data):
        """Create a VerifyReport from its JSON form."""
        if not data:
            return None
        parsed = VerifyReportSchema.model_validate(data)
        return cls(
            theorem=parsed.theorem,
            params=parsed.params,
            passed=parsed.passed,
            counterexample=parsed.counterexample,
            elapsed=parsed.elapsed,
        )

    def __eq__(self, other):
        if not isinstance(other, VerifyReport):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        return f"<VerifyReport theorem={self.theorem} pass={self.passed} params={self.params}>"
