"""Verdict records shared by every checker, and their JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

PASS = "PASS"
FAIL = "FAIL"
INPUT_FAIL = "INPUT-FAIL"

SCHEMA_VERSION = 1

#: Every report certifies a finite range only; it is never a proof for all n.
FINITE_EVIDENCE = "finite-instance"


@dataclass(frozen=True)
class PropertyReport:
    property: str
    verdict: str
    witness: dict = field(default_factory=dict)
    checked_range: dict = field(default_factory=dict)
    evidence: str = FINITE_EVIDENCE

    @classmethod
    def ok(cls, prop: str, checked_range=None, witness=None) -> "PropertyReport":
        return cls(prop, PASS, witness or {}, checked_range or {})

    @classmethod
    def fail(cls, prop: str, witness: dict, checked_range=None) -> "PropertyReport":
        return cls(prop, FAIL, witness, checked_range or {})

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "property": self.property,
            "verdict": self.verdict,
            "witness": jsonable(self.witness),
            "range": jsonable(self.checked_range),
            "evidence": self.evidence,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)


def jsonable(obj: Any) -> Any:
    """Exact JSON image: rationals become ``"p/r"`` strings, polynomials their
    canonical text.  Floats are rejected outright."""
    from .poly import ExactPoly, format_rat

    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        raise TypeError("floating-point value in a report")
    if isinstance(obj, Fraction):
        return format_rat(obj)
    if isinstance(obj, ExactPoly):
        return obj.to_text()
    if isinstance(obj, PropertyReport):
        return obj.to_dict()
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__} in a report")
