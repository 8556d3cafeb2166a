from __future__ import annotations

from typing import List, NamedTuple, Optional, Tuple

from .verdict import Verdict


class InertiaReport(NamedTuple):
    """
    Numbers of negative, zero and positive eigenvalues of a symmetric matrix, with the
    band [-tolerance, tolerance] counted as zero.
    """

    kappa_minus: int
    kappa_zero: int
    kappa_plus: int
    tolerance: float

    @property
    def size(self) -> int:
        return self.kappa_minus + self.kappa_zero + self.kappa_plus

    def to_dict(self) -> dict:
        return self._asdict()


class BoundStateCount(NamedTuple):
    kappa_minus: int
    inertia: InertiaReport
    kappa_plus_alpha: int
    degenerate: bool
    candidates: Tuple[int, ...]
    method: str

    def to_dict(self) -> dict:
        return {
            "kappa_minus": self.kappa_minus,
            "inertia": None if self.inertia is None else self.inertia.to_dict(),
            "kappa_plus_alpha": self.kappa_plus_alpha,
            "degenerate": self.degenerate,
            "candidates": list(self.candidates),
            "method": self.method,
        }


class ChannelEntry(NamedTuple):
    ell: int
    l_eff: float
    multiplicity: int
    kappa: int
    certified_by_bound: bool = False


class ChannelLedger(NamedTuple):
    entries: List[ChannelEntry]
    truncation_l: int
    truncation_reason: str

    @property
    def total(self) -> int:
        return sum(entry.multiplicity * entry.kappa for entry in self.entries)


class AggregateBound(NamedTuple):
    upper: float
    closed_form: float
    formula_id: str
    i_zero: float
    i_log: Optional[float] = None


class MatrixBargmann(NamedTuple):
    norm_check: Verdict
    bound: float
    norm: float
    gershgorin: Verdict


class KacKrein(NamedTuple):
    sufficient: Verdict
    necessary: Verdict
    sup_value: float
