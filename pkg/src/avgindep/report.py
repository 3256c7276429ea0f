from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .graph import Graph
from .quadfield import QuadNumber, format_rational

VERIFIED = "verified"
COUNTEREXAMPLE = "counterexample"


def exact(value: Any) -> Any:
    """JSON-safe form: exact numbers become strings, graphs become edge lists."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, QuadNumber):
        return str(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Graph):
        c = value.compact()
        return {"n": c.n, "edges": [list(e) for e in c.edges()]}
    if isinstance(value, dict):
        return {str(k): exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact(v) for v in value]
    return value


@dataclass
class VerificationReport:
    claim: str
    range: tuple[int, int] | str
    status: str = VERIFIED
    witness: Optional[dict[str, Any]] = None
    details: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if (self.status == VERIFIED) != (self.witness is None):
            raise ValueError("a witness is present exactly when a counterexample is reported")

    @property
    def ok(self) -> bool:
        return self.status == VERIFIED

    def to_dict(self) -> dict[str, Any]:
        rng = list(self.range) if isinstance(self.range, tuple) else self.range
        return {
            "claim": self.claim,
            "range": exact(rng),
            "status": self.status,
            "witness": exact(self.witness),
            "details": exact(self.details),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def counterexample(claim: str, rng, witness: dict[str, Any], **details) -> VerificationReport:
    return VerificationReport(claim, rng, COUNTEREXAMPLE, witness, details)


def merge(claim: str, reports: list[VerificationReport]) -> VerificationReport:
    """Combine per-n reports; the first counterexample (in input order) wins."""
    lo = min(r.range[0] for r in reports if isinstance(r.range, tuple))
    hi = max(r.range[1] for r in reports if isinstance(r.range, tuple))
    details = {"per_n": [r.to_dict() for r in reports]}
    for r in reports:
        if not r.ok:
            return VerificationReport(claim, (lo, hi), COUNTEREXAMPLE, r.witness, details)
    return VerificationReport(claim, (lo, hi), VERIFIED, None, details)
