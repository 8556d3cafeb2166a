"""
Exact bound state counting for a finite shell configuration in one angular channel.

The count is kappa_-(h) = kappa_+(M) - kappa_+(alpha) with the kappa matrix

    M = (2l + 1) (diag(1 / alpha) + M_l(0)),   M_l(0)_jk = r_min^(l+1) r_max^-l / (2l + 1).
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Tuple, Union

import numpy

from deltashell import log
from deltashell.api.channel import ChannelSpec, check_l, resolve_l
from deltashell.api.data_structures import BoundStateCount
from deltashell.api.errors import DegenerateSignature, ShellConfigError, ZeroStrength
from deltashell.api.shell_config import ShellConfig
from .inertia import default_tolerance, inertia
from .oracle import oscillation_report
from .special import green_kernel

Channel = Union[ChannelSpec, float]


class WeylMatrix(NamedTuple):
    entries: numpy.ndarray
    l: float
    lam: float


class KappaMatrix(NamedTuple):
    entries: numpy.ndarray
    l: float


def zero_energy_kernel(radii: numpy.ndarray, l: float) -> numpy.ndarray:
    """r_min^(l+1) r_max^-l for every pair of radii."""
    near = numpy.minimum.outer(radii, radii)
    far = numpy.maximum.outer(radii, radii)
    return near ** (l + 1.0) * far ** (-l)


def weyl_matrix(config: ShellConfig, l: float, lam: float = 0.0) -> WeylMatrix:
    """
    The Weyl matrix M_l(lambda)_jk = K_l(r_j, r_k; lambda).

    :param config: At least one shell
    :param l: Channel index, strictly above -1/2
    :param lam: Spectral parameter, not positive
    """
    l = check_l(l, allow_critical=False)
    if config.size < 1:
        raise ShellConfigError("The Weyl matrix needs at least one shell")
    return WeylMatrix(kernel_matrix(config.radii, l, lam), l, float(lam))


def kernel_matrix(radii: numpy.ndarray, l: float, lam: float) -> numpy.ndarray:
    """The Green kernel K_l(r_j, r_k; lambda) sampled on every pair of radii."""
    radii = numpy.asarray(radii, dtype=numpy.float64)
    if lam == 0 and l > -0.5:
        return zero_energy_kernel(radii, l) / (2.0 * l + 1.0)
    size = radii.size
    entries = numpy.empty((size, size))
    for j in range(size):
        for k in range(j, size):
            entries[j, k] = entries[k, j] = green_kernel(l, lam, radii[j], radii[k])
    return entries


def kappa_matrix(config: ShellConfig, l: float) -> KappaMatrix:
    """
    M = (2l+1)(diag(1/alpha) + M_l(0)): diagonal (2l+1)/alpha_k + r_k, off diagonal
    r_j^(l+1) r_k^-l for j < k.
    """
    l = check_l(l, allow_critical=False)
    if numpy.any(config.strengths == 0):
        raise ZeroStrength("The kappa matrix needs nonzero strengths")
    entries = zero_energy_kernel(config.radii, l)
    numpy.fill_diagonal(entries, (2.0 * l + 1.0) / config.strengths + config.radii)
    return KappaMatrix(entries, l)


def kappa_tolerance(config: ShellConfig, l: float) -> float:
    """
    The default zero band of the kappa matrix, scaled by the size of its terms before
    the diagonal cancellation (2l+1)/alpha_k + r_k.
    """
    scale = zero_energy_kernel(config.radii, l)
    scale[numpy.diag_indices_from(scale)] += numpy.abs((2.0 * l + 1.0) / config.strengths)
    return default_tolerance(scale)


def bound_state_report(
    config: ShellConfig, channel: Channel, tol: Optional[float] = None
) -> BoundStateCount:
    """
    The bound state count of one channel with the inertia it was read from.

    A kappa matrix eigenvalue inside the zero band is a threshold resonance; it is not
    counted, and ``candidates`` holds the count with and without it.
    """
    l = resolve_l(channel)
    if l == -0.5:
        report = oscillation_report(config, l)
        return BoundStateCount(
            report.count,
            None,
            config.kappa_plus_alpha,
            report.threshold,
            report.candidates,
            "oscillation",
        )
    if config.size == 0:
        return BoundStateCount(0, inertia(numpy.zeros((0, 0)), tol), 0, False, (0,), "kappa")
    if tol is None:
        tol = kappa_tolerance(config, l)
    report = inertia(kappa_matrix(config, l).entries, tol)
    kappa_plus_alpha = config.kappa_plus_alpha
    count = report.kappa_plus - kappa_plus_alpha
    candidates = (count,)
    if report.kappa_zero:
        candidates = (count, count + report.kappa_zero)
        log.warning(
            f"Kappa matrix of {config!r} at l={l} has {report.kappa_zero} eigenvalue(s) "
            f"within {report.tolerance:g} of zero; bound state count {count} "
            f"(or {count + report.kappa_zero})"
        )
    # a zero band wider than the spectrum of M can push kappa_+(M) below kappa_+(alpha)
    upper = config.kappa_minus_alpha
    clamped = tuple(sorted({min(max(candidate, 0), upper) for candidate in candidates}))
    if clamped != candidates:
        log.warning(
            f"Zero band {report.tolerance:g} is too wide for the kappa matrix of "
            f"{config!r} at l={l}; counts {list(candidates)} clamped to [0, {upper}]"
        )
        candidates = clamped
    return BoundStateCount(
        candidates[0], report, kappa_plus_alpha, len(candidates) > 1, candidates, "kappa"
    )


def count_bound_states(
    config: ShellConfig,
    channel: Channel,
    tol: Optional[float] = None,
    strict: bool = False,
) -> int:
    """
    The number of negative eigenvalues of the channel operator.

    :param config: A finite shell configuration
    :param channel: A :class:`ChannelSpec` or the effective l
    :param tol: Zero band for the inertia, defaults to the inertia default
    :param strict: Raise instead of returning the lower count on a degenerate signature
    :raises DegenerateSignature: in strict mode, when the count depends on the zero band
    """
    report = bound_state_report(config, channel, tol)
    if strict and report.degenerate:
        tolerance = report.inertia.tolerance if report.inertia is not None else 0.0
        raise DegenerateSignature(min(report.candidates), max(report.candidates), tolerance)
    return report.kappa_minus


def negative_part_bound(config: ShellConfig, l: float, tol: Optional[float] = None) -> int:
    """
    kappa_+ of the kappa matrix of the attractive shells alone, an upper bound for the
    count of the whole configuration.
    """
    attractive = config.attractive_part()
    if attractive.size == 0:
        return 0
    if tol is None:
        tol = kappa_tolerance(attractive, check_l(l, allow_critical=False))
    return inertia(kappa_matrix(attractive, l).entries, tol).kappa_plus


def two_shell_count(config: ShellConfig, l: float) -> Tuple[int, str]:
    """
    Closed form count for two shells from the signs of the strengths, the diagonal of
    the 2x2 kappa matrix and its determinant.

    :return: The count and the case it was read from
    """
    if config.size != 2:
        raise ShellConfigError(f"Two shells expected, got {config.size}")
    matrix = kappa_matrix(config, l).entries
    determinant = matrix[0, 0] * matrix[1, 1] - matrix[0, 1] ** 2
    negative = config.kappa_minus_alpha
    if negative == 0:
        return 0, "all-repulsive"
    if negative == 1:
        return (1 if determinant > 0 else 0), "mixed"
    if determinant > 0:
        if matrix[0, 0] < 0:
            return 0, "zero-count"
        return 2, "two-count"
    if determinant == 0 and matrix[0, 0] + matrix[1, 1] <= 0:
        return 0, "zero-count"
    return 1, "one-count"
