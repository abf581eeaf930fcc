"""Suite reports and their serializations."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

from ..sympspace import Monomial, render_monomial

PASS, FAIL = "pass", "fail"


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one identity.  Counterexample fields are rendered strings."""

    id: str
    status: str
    monomials: Optional[Tuple[Monomial, ...]] = None
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    detail: Optional[str] = None

    def __post_init__(self):
        if self.status not in (PASS, FAIL):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == PASS and self.monomials is not None:
            raise ValueError("a passing check cannot carry a counterexample")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def where(self) -> Optional[str]:
        if self.monomials is None:
            return None
        return " | ".join(render_monomial(m) or "1" for m in self.monomials)


@dataclass
class SuiteReport:
    suite: str
    n: int
    bound: int
    results: List[CheckResult] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def records(self) -> Iterable[dict]:
        for r in self.results:
            yield {
                "suite": self.suite,
                "n": self.n,
                "bound": self.bound,
                "id": r.id,
                "status": r.status,
                "monomial": r.where,
                "lhs": r.lhs,
                "rhs": r.rhs,
                "detail": r.detail,
            }

    def to_structured(self) -> str:
        """One JSON object per identity; field order is fixed and no value is a float."""
        return "\n".join(json.dumps(rec, ensure_ascii=False) for rec in self.records())

    def to_text(self) -> str:
        width = max([len(r.id) for r in self.results] + [8])
        head = (
            f"suite {self.suite}  n={self.n}  bound={self.bound}  "
            f"{len(self.results) - len(self.failures)}/{len(self.results)} passed  "
            f"({self.wall_time:.2f}s)"
        )
        lines = [head]
        for r in self.results:
            line = f"  {r.id:<{width}}  {r.status.upper()}"
            if r.detail:
                line += f"  [{r.detail}]"
            lines.append(line)
            if not r.passed and r.monomials is not None:
                lines.append(f"      at  {r.where}")
                lines.append(f"      lhs {r.lhs}")
                lines.append(f"      rhs {r.rhs}")
        return "\n".join(lines)
