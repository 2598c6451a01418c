"""Structured verdicts shared by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

from .algebra import LaurentPoly, RatMatrix

PASS = "pass"
FAIL = "fail"
NOT_COVERED = "not-covered"


class PreconditionError(ValueError):
    """Raised when an operation is handed data outside its contract.

    ``label`` names the offending fixed point when there is one.
    """

    def __init__(self, message: str, label: str | None = None):
        super().__init__(message)
        self.label = label


@dataclass(frozen=True)
class Certificate:
    check: str
    status: str
    message: str = ""
    witness: Mapping[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "status": self.status,
            "message": self.message,
            "witness": to_jsonable(dict(self.witness)),
        }


def passed(check: str, message: str = "", **witness: Any) -> Certificate:
    return Certificate(check, PASS, message, witness)


def failed(check: str, message: str, **witness: Any) -> Certificate:
    return Certificate(check, FAIL, message, witness)


def to_jsonable(obj: Any) -> Any:
    """Render witness values for JSON; every rational becomes a string."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, LaurentPoly):
        return {str(k): str(v) for k, v in obj.items()}
    if isinstance(obj, RatMatrix):
        return [[str(x) for x in row] for row in obj.entries]
    if isinstance(obj, Certificate):
        return obj.to_dict()
    if isinstance(obj, Mapping):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    raise TypeError(f"cannot render {type(obj).__name__} in a report")
