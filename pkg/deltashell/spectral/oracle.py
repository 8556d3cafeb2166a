"""
Two bound state counters that do not use the Weyl matrix.

The oscillation counter propagates the zero energy solution across the shells in closed
form and counts its zeros. The finite difference counter discretizes the channel
operator on a box and counts negative pivots of its LDL^T factorization.
"""

from __future__ import annotations

import math
from typing import List, NamedTuple, Optional, Tuple

import numpy

from deltashell import log
from deltashell.api.channel import CRITICAL_L, check_l
from deltashell.api.errors import DomainError, MeshTooCoarse
from deltashell.api.shell_config import ShellConfig
from deltashell.utils.misc_utils import sign
from .inertia import sturm_count

ZERO_TOLERANCE = 1e-12
THRESHOLD_PERTURBATION = 1e-9
MAX_FD_LEVELS = 4


def _basis(l: float, r: float) -> Tuple[float, float, float, float]:
    """(p, p', q, q') for the zero energy basis {r^(l+1), r^-l}, or {sqrt r, sqrt r log r}."""
    if l == CRITICAL_L:
        root = math.sqrt(r)
        log_r = math.log(r)
        return root, 0.5 / root, root * log_r, (log_r + 2.0) / (2.0 * root)
    return r ** (l + 1.0), (l + 1.0) * r ** l, r ** (-l), -l * r ** (-l - 1.0)


class PiecewiseSolution(NamedTuple):
    """
    The zero energy solution regular at the origin, u = a_k p + b_k q on the k-th
    interval (0, r_1), (r_1, r_2), ..., (r_N, inf).
    """

    l: float
    radii: numpy.ndarray
    strengths: numpy.ndarray
    coefficients: numpy.ndarray

    def _interval(self, r: float) -> int:
        return int(numpy.searchsorted(self.radii, r, side="left"))

    def value(self, r: float, interval: Optional[int] = None) -> float:
        a, b = self.coefficients[self._interval(r) if interval is None else interval]
        p, _, q, _ = _basis(self.l, r)
        return a * p + b * q

    def derivative(self, r: float, interval: Optional[int] = None) -> float:
        a, b = self.coefficients[self._interval(r) if interval is None else interval]
        _, dp, _, dq = _basis(self.l, r)
        return a * dp + b * dq


class OscillationReport(NamedTuple):
    count: int
    threshold: bool
    candidates: Tuple[int, ...]


def zero_energy_solution(config: ShellConfig, l: float) -> PiecewiseSolution:
    """
    Propagate u = r^(l+1) from the origin through every shell using continuity and the
    jump u'(r_k+) - u'(r_k-) = alpha_k u(r_k).

    :param config: The shells
    :param l: Channel index, at least -1/2
    """
    l = check_l(l)
    coefficients: List[Tuple[float, float]] = [(1.0, 0.0)]
    a, b = 1.0, 0.0
    for r, alpha in config:
        p, dp, q, dq = _basis(l, r)
        value = a * p + b * q
        slope = a * dp + b * dq + alpha * value
        wronskian = p * dq - dp * q
        a = (value * dq - slope * q) / wronskian
        b = (p * slope - dp * value) / wronskian
        coefficients.append((a, b))
    return PiecewiseSolution(
        l, config.radii, config.strengths, numpy.array(coefficients, dtype=numpy.float64)
    )


def _count_zeros(solution: PiecewiseSolution) -> Tuple[int, bool]:
    l = solution.l
    signs = [1]
    threshold = False
    for index, r in enumerate(solution.radii.tolist()):
        a, b = solution.coefficients[index]
        p, _, q, _ = _basis(l, r)
        scale = abs(a * p) + abs(b * q)
        value = a * p + b * q
        signs.append(sign(value, ZERO_TOLERANCE * scale))
    # sign of u as r -> inf on the last interval
    a, b = solution.coefficients[-1]
    if l == CRITICAL_L:
        # sqrt(r) (a + b log r)
        leading, other = b, a
        tiny = abs(b) <= ZERO_TOLERANCE * (abs(a) + abs(b))
    else:
        outer = float(solution.radii[-1]) if solution.radii.size else 1.0
        p, _, q, _ = _basis(l, outer)
        leading, other = a, b
        tiny = abs(a * p) <= ZERO_TOLERANCE * (abs(a * p) + abs(b * q))
    if tiny:
        threshold = True
        signs.append(sign(other))
    else:
        signs.append(sign(leading))

    zeros = 0
    for index, current in enumerate(signs):
        if current == 0:
            zeros += 1
            threshold = True
        elif index and signs[index - 1] != 0 and signs[index - 1] != current:
            zeros += 1
    return zeros, threshold


def oscillation_report(config: ShellConfig, l: float) -> OscillationReport:
    """
    Count the zeros on (0, inf) of the zero energy solution, which equals the number of
    negative eigenvalues of the channel operator.

    Zeros landing on a shell, and a solution that neither grows nor decays at infinity,
    are threshold cases; they are recounted with every strength shifted by -1e-9 and
    +1e-9 and all distinct counts are returned as candidates.
    """
    count, threshold = _count_zeros(zero_energy_solution(config, l))
    candidates = (count,)
    if threshold and config.size:
        found = {count}
        for shift in (-THRESHOLD_PERTURBATION, THRESHOLD_PERTURBATION):
            shifted = config.strengths + shift
            if numpy.any(shifted == 0):
                continue
            perturbed = ShellConfig(config.radii, shifted)
            found.add(_count_zeros(zero_energy_solution(perturbed, l))[0])
        candidates = tuple(sorted(found))
        log.warning(
            f"Threshold configuration {config!r} at l={l}: oscillation counts {candidates}"
        )
    return OscillationReport(count, threshold, candidates)


def oscillation_count(config: ShellConfig, l: float) -> int:
    """The number of bound states of the channel operator by zero counting."""
    return oscillation_report(config, l).count


def fd_count(config: ShellConfig, l: float, length: float, mesh: float) -> int:
    """
    Count the negative eigenvalues of a finite difference discretization of the channel
    operator on (0, L] with a Dirichlet wall at L.

    Each shell is snapped to its nearest grid point and contributes alpha_k / h to the
    diagonal. For l >= 1/2 the first row is the Dirichlet row; below 1/2 the first
    diagonal entry 2^(l+1) / h^2 makes the row exact on the regular solution r^(l+1).

    :param config: The shells, all inside the box
    :param l: Channel index, at least -1/2
    :param length: Box size L
    :param mesh: Grid step h
    :raises MeshTooCoarse: if two shells share a grid point
    """
    l = check_l(l)
    if config.size and not length > config.radii[-1]:
        raise DomainError(f"The box length {length} does not exceed the last radius")
    points = int(round(length / mesh))
    if points < 2:
        raise MeshTooCoarse(f"Mesh {mesh} gives no interior point on (0, {length})")
    h = length / points
    radii = h * numpy.arange(1, points)
    diagonal = 2.0 / h ** 2 + l * (l + 1.0) / radii ** 2
    if l < 0.5:
        diagonal[0] = 2.0 ** (l + 1.0) / h ** 2
    indices = numpy.rint(config.radii / h).astype(int)
    if config.size and (
        indices.min() < 1 or indices.max() > points - 1 or numpy.any(numpy.diff(indices) == 0)
    ):
        raise MeshTooCoarse(f"Shells collide on a grid with step {h:g}")
    numpy.add.at(diagonal, indices - 1, config.strengths / h)
    off_diagonal = numpy.full(points - 2, -1.0 / h ** 2)
    return sturm_count(diagonal, off_diagonal, 0.0)


def fd_converged_count(
    config: ShellConfig,
    l: float,
    length: Optional[float] = None,
    mesh: Optional[float] = None,
    max_levels: int = MAX_FD_LEVELS,
) -> int:
    """
    Refine the finite difference count, doubling L and halving h, until two successive
    refinements reproduce the same count.

    Starts from L = 4 r_N and h = r_N / 1000 unless given.
    """
    if not config.size:
        return 0
    outer = float(config.radii[-1])
    length = 4.0 * outer if length is None else length
    mesh = 1e-3 * outer if mesh is None else mesh
    counts = []
    for _ in range(max(3, max_levels)):
        counts.append(fd_count(config, l, length, mesh))
        if len(counts) >= 3 and counts[-1] == counts[-2] == counts[-3]:
            return counts[-1]
        length *= 2.0
        mesh /= 2.0
    log.warning(f"Finite difference counts {counts} did not settle for {config!r}")
    return counts[-1]
