from __future__ import annotations

from enum import Enum
from typing import Any, NamedTuple, Optional


class Status(str, Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self):
        return self.value


class Verdict(NamedTuple):
    """
    The outcome of one spectral criterion.

    ``value`` carries what a passing certificate implies, for example the bound state
    count certified by a Gershgorin test or ``"infinite"`` deficiency indices.
    """

    status: Status
    criterion_id: str
    evidence: str
    value: Optional[Any] = None

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def fails(self) -> bool:
        return self.status is Status.FAILS

    @property
    def inconclusive(self) -> bool:
        return self.status is Status.INCONCLUSIVE

    def to_dict(self) -> dict:
        return {
            "criterion": self.criterion_id,
            "status": self.status.value,
            "evidence": self.evidence,
            "value": self.value,
        }

    def __str__(self):
        suffix = "" if self.value is None else f" [{self.value}]"
        return f"{self.criterion_id}: {self.status.value}{suffix} - {self.evidence}"


def holds(criterion_id: str, evidence: str, value: Any = None) -> Verdict:
    return Verdict(Status.HOLDS, criterion_id, evidence, value)


def fails(criterion_id: str, evidence: str, value: Any = None) -> Verdict:
    return Verdict(Status.FAILS, criterion_id, evidence, value)


def inconclusive(criterion_id: str, evidence: str, value: Any = None) -> Verdict:
    return Verdict(Status.INCONCLUSIVE, criterion_id, evidence, value)
