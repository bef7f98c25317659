"""Relation instances and the reports that collect their residuals."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .core import Element, render_scalar

__all__ = ["Failure", "RelationInstance", "RelationReport"]


def _render(x) -> str:
    if isinstance(x, Element):
        return x.render()
    if x is None:
        return "0"
    return render_scalar(x)


@dataclass
class RelationInstance:
    """One relation ``lhs = rhs``; passes iff the reduced difference is zero."""

    suite: str
    indices: Tuple
    levels: Tuple
    lhs: Any
    rhs: Any = 0
    family: str = ""

    def residual(self):
        r = self.lhs - self.rhs
        if isinstance(r, Element):
            return r.system.reduce(r)
        return r

    def key(self):
        return (self.family, tuple(self.indices), tuple(self.levels))


@dataclass(frozen=True)
class Failure:
    family: str
    indices: Tuple
    levels: Tuple
    residual: str

    def to_json(self) -> Dict[str, Any]:
        out = {"indices": list(self.indices), "levels": list(self.levels), "residual": self.residual}
        if self.family:
            out["family"] = self.family
        return out


@dataclass
class RelationReport:
    suite: str
    m: int
    n: int
    N: int
    instances: int = 0
    failures: List[Failure] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    families: Dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, family: str, indices, levels, residual) -> bool:
        """Count one instance; store it as a failure when ``residual`` is nonzero."""
        self.instances += 1
        self.families[family] = self.families.get(family, 0) + 1
        zero = residual.is_zero() if hasattr(residual, "is_zero") else not residual
        if not zero:
            self.failures.append(Failure(family, tuple(indices), tuple(levels), _render(residual)))
        return zero

    def check(self, inst: RelationInstance) -> bool:
        return self.record(inst.family, inst.indices, inst.levels, inst.residual())

    def merge(self, other: "RelationReport") -> "RelationReport":
        self.instances += other.instances
        self.failures.extend(other.failures)
        self.notes.extend(other.notes)
        for k, v in other.families.items():
            self.families[k] = self.families.get(k, 0) + v
        return self

    def sort(self) -> "RelationReport":
        self.failures.sort(key=lambda f: (f.family, f.indices, f.levels))
        return self

    def to_json(self) -> Dict[str, Any]:
        self.sort()
        out: Dict[str, Any] = {
            "suite": self.suite,
            "m": self.m,
            "n": self.n,
            "N": self.N,
            "instances": self.instances,
            "failures": [f.to_json() for f in self.failures],
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def dumps(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_json(), indent=indent, sort_keys=False)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{self.suite} gl({self.m}|{self.n}) N={self.N}: "
                f"{self.instances} instances, {len(self.failures)} failures [{status}]")
