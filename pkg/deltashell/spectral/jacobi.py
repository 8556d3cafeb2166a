"""
The Jacobi matrix of an infinite shell family and the sequence criteria read off it:
self-adjointness, lower semiboundedness, discreteness and the continuous spectrum.

Periodic and harmonic tails are decided in closed form. Sampled tails are decided only
by their asserted limit flags; otherwise the trend over the sampled horizon is reported
as evidence with an Inconclusive verdict.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Optional

import numpy

from deltashell import log
from deltashell.api.data_structures import InertiaReport
from deltashell.api.errors import InsufficientShells, PrerequisiteNotMet
from deltashell.api.shell_config import ShellConfig
from deltashell.api.tail_model import (
    FiniteTail,
    HarmonicTail,
    PeriodicTail,
    SampledTail,
    TailModel,
)
from deltashell.api.verdict import Verdict, fails, holds, inconclusive
from .inertia import inertia

EPSILON_GRID = tuple(2.0 ** -j for j in range(21))

INSUFFICIENCY_NOTE = (
    "vanishing strengths alone do not place the continuous spectrum on [0, inf); "
    "windowed sums must vanish"
)


class JacobiMatrix(NamedTuple):
    """
    Symmetric truncation of the Jacobi matrix with

        b_k = (alpha_k + 1/d_k + 1/d_(k+1)) / p_k^2
        a_k = -1 / (p_k p_(k+1) d_(k+1)),     p_k = sqrt(d_k + d_(k+1))
    """

    diagonal: numpy.ndarray
    off_diagonal: numpy.ndarray

    @property
    def size(self) -> int:
        return int(self.diagonal.size)

    def to_dense(self) -> numpy.ndarray:
        return (
            numpy.diag(self.diagonal)
            + numpy.diag(self.off_diagonal, 1)
            + numpy.diag(self.off_diagonal, -1)
        )


def _tail(tail: Optional[TailModel]) -> TailModel:
    return FiniteTail() if tail is None else tail


def build_jacobi(config: ShellConfig, tail: Optional[TailModel], size: int) -> JacobiMatrix:
    """
    The leading ``size`` x ``size`` block of the Jacobi matrix of the family made of
    ``config`` followed by ``tail``. Row k uses d_k and d_(k+1), so size + 1 shells are
    needed.

    :raises InsufficientShells: if the family has at most ``size`` shells
    """
    if size < 1:
        raise ValueError("A Jacobi truncation needs at least one row")
    tail = _tail(tail)
    if tail.horizon(config.size) < size + 1:
        raise InsufficientShells(
            f"A {size}x{size} Jacobi truncation needs {size + 1} shells, "
            f"the {tail.kind} family has {tail.horizon(config.size)}"
        )
    radii, strengths = tail.extend(config, size + 1)
    log.debug(f"Building a {size}x{size} Jacobi truncation from a {tail.kind} family")
    spacings = numpy.diff(radii, prepend=0.0)
    p = numpy.sqrt(spacings[:-1] + spacings[1:])
    diagonal = (strengths[:-1] + 1.0 / spacings[:-1] + 1.0 / spacings[1:]) / p ** 2
    off_diagonal = -1.0 / (p[:-1] * p[1:] * spacings[1:-1])
    return JacobiMatrix(diagonal, off_diagonal)


def truncation_inertia(
    config: ShellConfig, tail: Optional[TailModel], size: int
) -> InertiaReport:
    """Inertia of a Jacobi truncation, used as numeric evidence for sampled families."""
    return inertia(build_jacobi(config, tail, size).to_dense())


def windowed_sums(radii: numpy.ndarray, values: numpy.ndarray, width: float) -> numpy.ndarray:
    """
    For every radius r_i the sum of the values attached to radii inside [r_i, r_i + width].
    """
    cumulative = numpy.concatenate(([0.0], numpy.cumsum(values)))
    ends = numpy.searchsorted(radii, radii + width, side="right")
    starts = numpy.arange(radii.size)
    return cumulative[ends] - cumulative[starts]


def _sample(config: ShellConfig, tail: SampledTail):
    return tail.extend(config, int(tail.horizon(config.size)))


def _trend(values: numpy.ndarray) -> str:
    if values.size < 2:
        return "too few samples for a trend"
    half = values.size // 2
    early, late = float(numpy.max(values[:half])), float(numpy.max(values[half:]))
    return f"max over first half {early:.6g}, over second half {late:.6g}"


def _harmonic_table(tail: HarmonicTail) -> Verdict:
    coefficient, power = tail.leading_term()
    excess_coefficient, excess_power = HarmonicTail(
        tail.amplitude - 2.0, tail.coefficient, tail.exponent
    ).leading_term()
    law = f"alpha_k = {-tail.amplitude:g}(2k+1) + {tail.coefficient:g} k^{tail.exponent:g}"
    if tail.coefficient != 0 and tail.exponent >= 2:
        return holds(
            "self_adjoint.harmonic_i", f"{law}: sum |alpha_k| k^-3 diverges"
        )
    if tail.amplitude >= 2 and (excess_coefficient < 0 or excess_power <= -1):
        return holds(
            "self_adjoint.harmonic_ii", f"{law}: alpha_k <= -2(2k+1) + O(1/k)"
        )
    if coefficient >= 0 or power <= -1:
        return holds("self_adjoint.harmonic_iii", f"{law}: alpha_k >= -C/k")
    if tail.amplitude == 1 and (tail.coefficient == 0 or tail.exponent < 0):
        return fails(
            "self_adjoint.harmonic_iv",
            f"{law}: alpha_k = -(2k+1) + O(k^-eps), deficiency indices are infinite",
            "infinite",
        )
    if 0 < tail.amplitude < 2 and (tail.coefficient == 0 or tail.exponent <= -1):
        return fails(
            "self_adjoint.harmonic_v",
            f"{law}: alpha_k = -A(2k+1) + O(1/k) with 0 < A < 2, "
            f"deficiency indices are infinite",
            "infinite",
        )
    return inconclusive(
        "self_adjoint.harmonic", f"{law} is outside the tabulated harmonic cases"
    )


def check_self_adjoint(config: ShellConfig, tail: Optional[TailModel]) -> Verdict:
    """
    Self-adjointness of the channel operator of an infinite shell family.

    Holds when sum d_k^2 diverges (periodic spacings) or by the harmonic case table;
    Fails, with infinite deficiency indices of the full operator, when sum d_k^2
    converges, the spacings are log convex and sum d_(k+1) |alpha_k + 1/d_k + 1/d_(k+1)|
    converges.
    """
    tail = _tail(tail)
    if tail.is_finite:
        return holds("self_adjoint.finite", "finitely many shells")
    if isinstance(tail, PeriodicTail):
        per_period = float(numpy.sum(numpy.square(tail.spacings)))
        return holds(
            "self_adjoint.divergent_spacing",
            f"sum d_k^2 grows by {per_period:.6g} per period",
        )
    if isinstance(tail, HarmonicTail):
        return _harmonic_table(tail)
    if isinstance(tail, SampledTail):
        if tail.assertion("d_squared_diverges"):
            return holds("self_adjoint.divergent_spacing", "asserted: sum d_k^2 diverges")
        if (
            tail.assertion("d_squared_summable")
            and tail.assertion("log_convex")
            and tail.assertion("jacobi_series_converges")
        ):
            return fails(
                "self_adjoint.log_convex_series",
                "asserted: sum d_k^2 converges, spacings log convex and the "
                "series sum d_(k+1)|alpha_k + 1/d_k + 1/d_(k+1)| converges",
                "infinite",
            )
        radii, strengths = _sample(config, tail)
        spacings = numpy.diff(radii, prepend=0.0)
        convex = bool(numpy.all(spacings[:-2] * spacings[2:] >= spacings[1:-1] ** 2))
        series = numpy.sum(
            spacings[1:] * numpy.abs(strengths[:-1] + 1.0 / spacings[:-1] + 1.0 / spacings[1:])
        )
        note = "" if tail.assertion("log_convex") is not False else "log convexity fails; "
        return inconclusive(
            "self_adjoint.sampled",
            f"{note}sum d_k^2 over {radii.size} shells = {numpy.sum(spacings ** 2):.6g}, "
            f"log convex on the sample: {convex}, series partial sum {series:.6g}",
        )
    raise TypeError(f"Unknown tail model {tail!r}")


def check_semibounded(config: ShellConfig, tail: Optional[TailModel]) -> Verdict:
    """
    Lower semiboundedness through the Brinck condition
    sup_r sum_{r_k in [r, r+1]} |alpha_k^-| < inf, which is also necessary when every
    strength is negative.
    """
    tail = _tail(tail)
    if tail.is_finite:
        return holds("brinck.bounded", "finitely many shells")
    prefix_mass = float(-config.strengths[config.strengths < 0].sum())
    if isinstance(tail, PeriodicTail):
        bound = tail.negative_mass * (math.ceil(1.0 / tail.period_length) + 1) + prefix_mass
        return holds(
            "brinck.bounded",
            f"a unit window covers at most {math.ceil(1.0 / tail.period_length) + 1} "
            f"periods: windowed negative sums <= {bound:.6g}",
            bound,
        )
    if isinstance(tail, HarmonicTail):
        coefficient, power = tail.leading_term()
        if coefficient >= 0:
            return holds("brinck.bounded", "strengths are eventually nonnegative")
        if power <= -1:
            return holds(
                "brinck.bounded",
                f"|alpha_k| ~ {-coefficient:g} k^{power:g} over windows of ~(e-1)k shells "
                f"stays bounded",
            )
        return fails(
            "brinck.necessity",
            f"strengths are eventually negative with |alpha_k| ~ {-coefficient:g} "
            f"k^{power:g}; unit windows hold ~(e-1)k shells so the windowed sums are "
            f"unbounded and the condition is necessary for the attractive tail",
        )
    if isinstance(tail, SampledTail):
        bounded = tail.assertion("brinck_bounded")
        if bounded:
            return holds("brinck.bounded", "asserted: windowed negative sums are bounded")
        if bounded is False and tail.assertion("attractive"):
            return fails(
                "brinck.necessity",
                "asserted: windowed negative sums are unbounded and every strength is "
                "negative",
            )
        radii, strengths = _sample(config, tail)
        sums = windowed_sums(radii, numpy.maximum(-strengths, 0.0), 1.0)
        return inconclusive(
            "brinck.sampled",
            f"windowed negative sums over {radii.size} shells: {_trend(sums)}",
        )
    raise TypeError(f"Unknown tail model {tail!r}")


def check_discrete(config: ShellConfig, tail: Optional[TailModel]) -> Verdict:
    """
    Discreteness of the spectrum: for every eps > 0 the windowed sums
    sum_{r_k in (r, r+eps)} alpha_k tend to infinity.

    :raises PrerequisiteNotMet: if the Brinck condition is not established
    """
    tail = _tail(tail)
    semibounded = check_semibounded(config, tail)
    if not semibounded.holds:
        raise PrerequisiteNotMet(
            f"discreteness needs the Brinck condition, which is {semibounded.status}"
        )
    if tail.is_finite:
        return fails("discrete.windowed_sums", "windowed sums are eventually 0")
    if isinstance(tail, PeriodicTail):
        return fails(
            "discrete.windowed_sums",
            "windowed sums are eventually periodic in r and hence bounded",
        )
    if isinstance(tail, HarmonicTail):
        coefficient, power = tail.leading_term()
        if coefficient > 0 and power > -1:
            return holds(
                "discrete.windowed_sums",
                f"a window of width eps holds ~(e^eps-1)k shells with alpha_k ~ "
                f"{coefficient:g} k^{power:g}, so every windowed sum diverges",
            )
        return fails(
            "discrete.windowed_sums",
            f"alpha_k ~ {coefficient:g} k^{power:g} keeps windowed sums bounded",
        )
    if isinstance(tail, SampledTail):
        diverge = tail.assertion("windowed_sums_diverge")
        if diverge is not None:
            verdict = holds if diverge else fails
            return verdict(
                "discrete.windowed_sums",
                f"asserted: windowed sums {'diverge' if diverge else 'stay bounded'}",
            )
        radii, strengths = _sample(config, tail)
        smallest = min(
            float(windowed_sums(radii, strengths, eps)[-max(1, radii.size // 4):].min())
            for eps in EPSILON_GRID
        )
        return inconclusive(
            "discrete.sampled",
            f"smallest late windowed sum over the eps grid {smallest:.6g} "
            f"({radii.size} shells sampled)",
        )
    raise TypeError(f"Unknown tail model {tail!r}")


def check_continuous_spectrum(config: ShellConfig, tail: Optional[TailModel]) -> Verdict:
    """
    Sufficient test for a continuous spectrum filling [0, inf): windowed sums
    sum_{r_k in [r, r+1]} |alpha_k| vanish at infinity. Never returns Fails.
    """
    tail = _tail(tail)
    if tail.is_finite:
        return holds("continuous.windowed_strengths", "windowed sums are eventually 0")
    if isinstance(tail, PeriodicTail):
        if not numpy.any(tail.strengths):
            return holds("continuous.windowed_strengths", "the periodic strengths vanish")
        return inconclusive(
            "continuous.windowed_strengths",
            f"windowed sums do not vanish and the test is only sufficient; {INSUFFICIENCY_NOTE}",
        )
    if isinstance(tail, HarmonicTail):
        coefficient, power = tail.leading_term()
        if coefficient == 0 or power < -1:
            return holds(
                "continuous.windowed_strengths",
                "windowed sums of |alpha_k| over ~(e-1)k shells vanish",
            )
        return inconclusive(
            "continuous.windowed_strengths",
            f"alpha_k ~ {coefficient:g} k^{power:g} keeps windowed sums away from 0; "
            f"{INSUFFICIENCY_NOTE}",
        )
    if isinstance(tail, SampledTail):
        if tail.assertion("windowed_abs_vanish"):
            return holds(
                "continuous.windowed_strengths", "asserted: windowed sums of |alpha_k| vanish"
            )
        radii, strengths = _sample(config, tail)
        sums = windowed_sums(radii, numpy.abs(strengths), 1.0)
        return inconclusive(
            "continuous.sampled",
            f"windowed |alpha| sums: {_trend(sums)}; {INSUFFICIENCY_NOTE}",
        )
    raise TypeError(f"Unknown tail model {tail!r}")


def spacing_vanishes(tail: Optional[TailModel]) -> Optional[bool]:
    """Whether d_k -> 0 is certain (None when it is not known)."""
    tail = _tail(tail)
    if tail.is_finite or isinstance(tail, PeriodicTail):
        return False
    if isinstance(tail, HarmonicTail):
        return True
    if isinstance(tail, SampledTail):
        return tail.assertion("spacing_vanishes")
    return None

