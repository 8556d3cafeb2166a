"""
Statements about the spherically symmetric operator in n dimensions assembled from its
angular channels: the total bound state count as a multiplicity weighted sum over
channels, the aggregate Bargmann bounds and the lifted spectral verdicts.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Optional, Tuple, Union

import numpy
from scipy.special import comb

from deltashell import log
from deltashell.api.channel import DEFAULT_LMAX, ChannelSpec, effective_l
from deltashell.api.data_structures import AggregateBound, ChannelEntry, ChannelLedger
from deltashell.api.errors import (
    ChannelLimitExceeded,
    DomainError,
    PrerequisiteNotMet,
    UnsupportedDimension,
)
from deltashell.api.shell_config import ShellConfig
from deltashell.api.tail_model import TailModel
from deltashell.api.verdict import Verdict, holds, inconclusive
from .certificates import bargmann_bound
from .jacobi import (
    check_continuous_spectrum,
    check_discrete,
    check_self_adjoint,
    check_semibounded,
    spacing_vanishes,
)
from .negcount import count_bound_states



def channel_multiplicity(n: int, ell: int) -> int:
    """
    The dimension of the spherical harmonics of degree ``ell`` on the sphere in R^n.

    >>> channel_multiplicity(3, 2)
    5
    """
    if n < 2 or ell < 0:
        raise DomainError(f"No angular channel for n={n}, ell={ell}")
    if n == 2:
        return 1 if ell == 0 else 2
    if n == 3:
        return 2 * ell + 1
    upper = comb(ell + n - 1, n - 1, exact=True)
    lower = comb(ell + n - 3, n - 1, exact=True) if ell >= 2 else 0
    return int(upper - lower)


def attractive_mass(config: ShellConfig) -> float:
    """I_0 = sum |alpha_k^-| r_k."""
    return bargmann_bound(config.negative_measure(), 0.0)


def log_attractive_mass(config: ShellConfig) -> float:
    """I_(-1/2) = sum |alpha_k^- r_k log r_k|."""
    return bargmann_bound(config.negative_measure(), -0.5)


def truncation_channel(config: ShellConfig, n: int, lmax: int = DEFAULT_LMAX) -> int:
    """
    The first angular number whose channel is certified empty by the Bargmann bound,
    I_0 <= 2 l_eff + 1. Every later channel is empty as well.

    :raises ChannelLimitExceeded: if that channel lies beyond ``lmax``
    """
    i_zero = attractive_mass(config)
    # 2 l_eff + 1 = |2 ell + n - 2|
    ell = 0
    while not i_zero <= 2.0 * effective_l(n, ell) + 1.0:
        ell += 1
        if ell > lmax:
            raise ChannelLimitExceeded(
                f"The Bargmann cutoff for I_0 = {i_zero:g} lies beyond ell = {lmax}"
            )
    return ell


def total_bound_states(
    config: ShellConfig,
    n: int,
    lmax: int = DEFAULT_LMAX,
    tol: Optional[float] = None,
) -> Tuple[int, ChannelLedger]:
    """
    The number of bound states of the n dimensional operator, summing
    multiplicity(ell) x count(ell) over the channels below the Bargmann cutoff.

    :param config: A finite configuration
    :param n: Space dimension, at least 2
    :param lmax: Largest angular number that may be evaluated
    :param tol: Inertia tolerance passed to every channel
    :return: The total and the per channel ledger ending with the certified channel
    """
    if n < 2:
        raise UnsupportedDimension(f"Dimension {n} has no angular channels")
    cutoff = truncation_channel(config, n, lmax)
    entries = []
    for ell in range(cutoff):
        channel = ChannelSpec(n=n, ell=ell)
        entries.append(
            ChannelEntry(
                ell,
                channel.l,
                channel_multiplicity(n, ell),
                count_bound_states(config, channel, tol),
            )
        )
    entries.append(
        ChannelEntry(cutoff, effective_l(n, cutoff), channel_multiplicity(n, cutoff), 0, True)
    )
    reason = (
        f"I_0 = {attractive_mass(config):.12g} <= 2 l_eff + 1 = "
        f"{2.0 * effective_l(n, cutoff) + 1.0:g} at ell = {cutoff}"
    )
    ledger = ChannelLedger(entries, cutoff, reason)
    log.info(f"{ledger.total} bound states in {n} dimensions over {cutoff + 1} channels")
    return ledger.total, ledger


def aggregate_bounds(config: ShellConfig, n: int) -> AggregateBound:
    """
    Bounds on the total count that need no channel computation.

    n = 3:  sum (2l+1) floor(I_0/(2l+1)) and floor(I_0)(floor(I_0)+1)/2
    n = 2:  floor(I_(-1/2)) + sum_(l>=1) 2 floor(I_0/(2l)) and
            floor(I_(-1/2)) + floor(I_0) log floor(I_0)

    In two dimensions neither value is a valid upper bound: every attractive shell binds
    in the channel l = -1/2 even when I_(-1/2) vanishes, and the harmonic sum exceeds
    its logarithmic form. They are reported for comparison only.

    :raises UnsupportedDimension: for n other than 2 and 3
    """
    i_zero = attractive_mass(config)
    whole = math.floor(i_zero)
    if n == 3:
        odd = numpy.arange(1, whole + 1, 2)
        upper = float(numpy.sum(odd * numpy.floor(i_zero / odd)))
        return AggregateBound(upper, whole * (whole + 1) / 2.0, "bargmann.n3", i_zero)
    if n == 2:
        i_log = log_attractive_mass(config)
        even = numpy.arange(2, whole + 1, 2)
        upper = math.floor(i_log) + float(numpy.sum(2 * numpy.floor(i_zero / even)))
        closed_form = math.floor(i_log) + (whole * math.log(whole) if whole else 0.0)
        return AggregateBound(upper, closed_form, "bargmann.n2", i_zero, i_log)
    raise UnsupportedDimension(f"Aggregate bounds are only tabulated for n = 2, 3, not {n}")


class MultidimReport(NamedTuple):
    n: int
    channel: dict
    full: dict
    n_pm: Optional[Union[int, str]]
    essential_spectrum: str

    def verdicts(self):
        return list(self.channel.values()) + list(self.full.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "channel": {name: verdict.to_dict() for name, verdict in self.channel.items()},
            "full": {name: verdict.to_dict() for name, verdict in self.full.items()},
            "n_pm": self.n_pm,
            "essential_spectrum": self.essential_spectrum,
        }


def _lift(verdict: Verdict, name: str) -> Verdict:
    return verdict._replace(
        criterion_id=f"full.{name}", evidence=f"from {verdict.criterion_id}: {verdict.evidence}"
    )


def multidim_verdicts(
    config: ShellConfig, tail: Optional[TailModel], n: int
) -> MultidimReport:
    """
    The spectral verdicts of the channel operator and of the n dimensional operator.

    Self-adjointness and semiboundedness transfer unchanged, a semibounded operator is
    self-adjoint, and deficiency indices become infinite when the channel operator is
    not self-adjoint. The essential spectrum is [0, inf) when the windowed strengths
    vanish and empty when the discreteness test holds with vanishing spacings.
    Verdicts that contradict each other, which only inconsistent assertions of a sampled
    family can produce, are logged as a warning and reported as inconclusive.
    """
    if n < 2:
        raise UnsupportedDimension(f"Dimension {n} has no angular channels")
    self_adjoint = check_self_adjoint(config, tail)
    semibounded = check_semibounded(config, tail)
    continuous = check_continuous_spectrum(config, tail)
    try:
        discrete = check_discrete(config, tail)
    except PrerequisiteNotMet as e:
        discrete = inconclusive("discrete.prerequisite", str(e))
    channel = {
        "self_adjoint": self_adjoint,
        "semibounded": semibounded,
        "discrete": discrete,
        "continuous": continuous,
    }

    contradictory = semibounded.holds and self_adjoint.fails
    if contradictory:
        log.warning(
            f"{semibounded.criterion_id} and {self_adjoint.criterion_id} contradict each "
            f"other; the family assertions are inconsistent"
        )
        full_self_adjoint = inconclusive(
            "full.self_adjoint",
            f"{semibounded.criterion_id} holds but {self_adjoint.criterion_id} fails",
        )
    elif semibounded.holds and not self_adjoint.holds:
        full_self_adjoint = holds(
            "full.self_adjoint",
            f"lower semibounded by {semibounded.criterion_id}, hence self-adjoint",
        )
    else:
        full_self_adjoint = _lift(self_adjoint, "self_adjoint")

    if discrete.holds and semibounded.holds:
        vanishing = spacing_vanishes(tail)
        if vanishing:
            full_discrete = _lift(discrete, "discrete")
        else:
            full_discrete = inconclusive(
                "full.discrete",
                "windowed sums diverge but d_k -> 0 is not established",
            )
    else:
        full_discrete = _lift(discrete, "discrete")

    if continuous.holds and semibounded.holds:
        full_continuous = _lift(continuous, "continuous")
    elif continuous.holds:
        full_continuous = inconclusive(
            "full.continuous", f"the Brinck condition is {semibounded.status}"
        )
    else:
        full_continuous = _lift(continuous, "continuous")

    full = {
        "self_adjoint": full_self_adjoint,
        "semibounded": _lift(semibounded, "semibounded"),
        "discrete": full_discrete,
        "continuous": full_continuous,
    }

    if contradictory:
        n_pm = None
    elif self_adjoint.fails:
        n_pm = "infinite"
    elif full_self_adjoint.holds:
        n_pm = 0
    else:
        n_pm = None
    if full_continuous.holds and full_discrete.holds:
        log.warning(
            "the essential spectrum was found both to be [0, inf) and to be empty; "
            "the family assertions are inconsistent"
        )
        essential_spectrum = "unknown"
    elif full_continuous.holds:
        essential_spectrum = "[0, inf)"
    elif full_discrete.holds:
        essential_spectrum = "empty"
    else:
        essential_spectrum = "unknown"
    log.debug(f"Spectral verdicts in {n} dimensions: n_pm={n_pm}, ess={essential_spectrum}")
    return MultidimReport(n, channel, full, n_pm, essential_spectrum)
