"""Verification reports and their JSON form."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Capacity, RealFunction
from .io import capacity_to_json, format_number, function_to_json


@dataclass(frozen=True)
class Violation:
    """One trial where a checked relation failed beyond tolerance."""

    trial: int
    capacity: Capacity
    functions: dict
    lhs: object
    rhs: object
    slack: object
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "trial": self.trial,
            "note": self.note,
            "lhs": format_number(self.lhs),
            "rhs": format_number(self.rhs),
            "slack": format_number(self.slack),
            "capacity": capacity_to_json(self.capacity),
            "functions": {k: _encode(v) for k, v in self.functions.items()},
        }


def _encode(v):
    if isinstance(v, RealFunction):
        return function_to_json(v)
    if isinstance(v, (list, tuple)):
        return [_encode(x) for x in v]
    return format_number(v) if not isinstance(v, (str, dict)) else v


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    trials: int
    seed: int
    tolerance: float
    exact: bool
    witnesses: tuple[Violation, ...] = ()
    observations: tuple[Violation, ...] = field(default=(), compare=False)
    params: dict = field(default_factory=dict, compare=False)

    @property
    def failures(self) -> int:
        return len(self.witnesses)

    @property
    def ok(self) -> bool:
        return not self.witnesses

    def to_dict(self) -> dict:
        out = {
            "suite": self.suite,
            "seed": self.seed,
            "trials": self.trials,
            "failures": self.failures,
            "exact": self.exact,
            "tolerance": 0 if self.exact else self.tolerance,
            "params": self.params,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }
        if self.observations:
            out["observations"] = [w.to_dict() for w in self.observations]
        return out

    def summary(self) -> str:
        mode = "exact" if self.exact else f"tol={self.tolerance:g}"
        return f"{self.suite}: {self.trials} trials, {self.failures} failures ({mode})"
