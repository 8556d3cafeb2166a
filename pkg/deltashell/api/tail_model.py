from __future__ import annotations

import math
from abc import abstractmethod
from typing import Callable, Dict, Optional, Sequence, Tuple

import numpy

from .errors import InsufficientShells, ShellConfigError
from .shell_config import ShellConfig
from ..utils.misc_utils import Real

SAMPLED_ASSERTIONS = (
    "d_squared_diverges",
    "d_squared_summable",
    "log_convex",
    "jacobi_series_converges",
    "attractive",
    "brinck_bounded",
    "windowed_sums_diverge",
    "windowed_abs_vanish",
    "spacing_vanishes",
)


class TailModel:
    """
    The declared behaviour of an infinite shell family after a finite prefix.

    A :class:`ShellConfig` supplies shells 1..N and the tail continues the sequence with
    shells N+1, N+2, ... whose spacing d_k and strength alpha_k are given by :meth:`entry`
    from the absolute index k and the tail index j = k - N (both one based).
    """

    kind: str = None

    @abstractmethod
    def entry(self, k: int, j: int) -> Tuple[float, float]:
        raise NotImplementedError

    def horizon(self, prefix: int) -> float:
        """The number of shells available in total after a prefix of ``prefix`` shells."""
        return math.inf

    @property
    def is_finite(self) -> bool:
        return False

    def extend(self, config: ShellConfig, count: int) -> Tuple[numpy.ndarray, numpy.ndarray]:
        """
        The first ``count`` radii and strengths of the family made of the configuration
        followed by this tail.

        :raises InsufficientShells: if the family has fewer than ``count`` shells
        """
        available = self.horizon(config.size)
        if count > available:
            raise InsufficientShells(
                f"{count} shells were requested but the {self.kind} family has {available}"
            )
        radii = list(config.radii[:count])
        strengths = list(config.strengths[:count])
        last = radii[-1] if radii else 0.0
        for k in range(config.size + 1, count + 1):
            spacing, strength = self.entry(k, k - config.size)
            last += spacing
            radii.append(last)
            strengths.append(strength)
        return numpy.array(radii), numpy.array(strengths)

    def to_dict(self) -> dict:
        return {"kind": self.kind}


class FiniteTail(TailModel):
    """No shells beyond the configuration."""

    kind = "finite"

    def entry(self, k: int, j: int) -> Tuple[float, float]:
        raise InsufficientShells("A finite family has no tail")

    def horizon(self, prefix: int) -> float:
        return prefix

    @property
    def is_finite(self) -> bool:
        return True


class PeriodicTail(TailModel):
    """
    Spacings and strengths repeat a block of ``period`` entries.
    """

    kind = "periodic"

    def __init__(self, spacings: Sequence[Real], strengths: Sequence[Real]):
        self._spacings = numpy.array(spacings, dtype=numpy.float64).reshape(-1)
        self._strengths = numpy.array(strengths, dtype=numpy.float64).reshape(-1)
        if self._spacings.size == 0:
            raise ShellConfigError("A periodic block needs at least one entry")
        if self._spacings.shape != self._strengths.shape:
            raise ShellConfigError("Periodic spacing and strength blocks differ in length")
        if numpy.any(self._spacings <= 0):
            raise ShellConfigError("Periodic spacings must be positive")

    @property
    def period(self) -> int:
        return int(self._spacings.size)

    @property
    def period_length(self) -> float:
        return float(self._spacings.sum())

    @property
    def block_sum(self) -> float:
        return float(self._strengths.sum())

    @property
    def negative_mass(self) -> float:
        return float(-self._strengths[self._strengths < 0].sum())

    @property
    def spacings(self) -> numpy.ndarray:
        return self._spacings

    @property
    def strengths(self) -> numpy.ndarray:
        return self._strengths

    def entry(self, k: int, j: int) -> Tuple[float, float]:
        position = (j - 1) % self.period
        return float(self._spacings[position]), float(self._strengths[position])

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "spacings": self._spacings.tolist(),
            "strengths": self._strengths.tolist(),
        }


class HarmonicTail(TailModel):
    """
    Harmonic radii d_k = 1/k with strengths following the law

        alpha_k = -A (2k + 1) + c k^p

    so that the critical family alpha_k = -(2k + 1) is A = 1, c = 0.
    """

    kind = "harmonic"

    def __init__(self, amplitude: Real = 0.0, coefficient: Real = 0.0, exponent: Real = 0.0):
        self._amplitude = float(amplitude)
        self._coefficient = float(coefficient)
        self._exponent = float(exponent)

    @property
    def amplitude(self) -> float:
        return self._amplitude

    @property
    def coefficient(self) -> float:
        return self._coefficient

    @property
    def exponent(self) -> float:
        return self._exponent

    def entry(self, k: int, j: int) -> Tuple[float, float]:
        return 1.0 / k, self.strength(k)

    def strength(self, k: int) -> float:
        return -self._amplitude * (2 * k + 1) + self._coefficient * k ** self._exponent

    def leading_term(self) -> Tuple[float, float]:
        """
        The coefficient and power of the term dominating alpha_k as k grows.

        :return: (coefficient, power); (0.0, -inf) for the zero law
        """
        terms: Dict[float, float] = {}
        for power, coefficient in (
            (1.0, -2 * self._amplitude),
            (0.0, -self._amplitude),
            (self._exponent, self._coefficient),
        ):
            terms[power] = terms.get(power, 0.0) + coefficient
        live = [power for power, coefficient in terms.items() if coefficient != 0]
        if not live:
            return 0.0, -math.inf
        power = max(live)
        return terms[power], power

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "amplitude": self._amplitude,
            "coefficient": self._coefficient,
            "exponent": self._exponent,
        }

    def __repr__(self):
        return (
            f"HarmonicTail(amplitude={self._amplitude}, "
            f"coefficient={self._coefficient}, exponent={self._exponent})"
        )


class SampledTail(TailModel):
    """
    A black box family given by generator functions up to a finite horizon. The
    generators receive the tail index j (one based), so j = k for an empty prefix.

    Limits of such a family cannot be computed, so every asymptotic criterion reads the
    corresponding assertion flag (``None`` when not asserted):

    ``d_squared_diverges``, ``d_squared_summable``, ``log_convex``,
    ``jacobi_series_converges``, ``attractive``, ``brinck_bounded``,
    ``windowed_sums_diverge``, ``windowed_abs_vanish``, ``spacing_vanishes``.
    """

    kind = "sampled"

    def __init__(
        self,
        spacing: Callable[[int], Real],
        strength: Callable[[int], Real],
        horizon: int,
        **assertions: Optional[bool],
    ):
        if horizon < 1:
            raise ShellConfigError("A sampled family needs a horizon of at least 1")
        unknown = set(assertions) - set(SAMPLED_ASSERTIONS)
        if unknown:
            raise ShellConfigError(f"Unknown sampled assertions {sorted(unknown)}")
        self._spacing = spacing
        self._strength = strength
        self._horizon = int(horizon)
        self._assertions = {name: assertions.get(name) for name in SAMPLED_ASSERTIONS}

    @classmethod
    def from_sequences(
        cls, spacings: Sequence[Real], strengths: Sequence[Real], **assertions
    ) -> SampledTail:
        """
        Sampled family from explicit lists; entry j is the tail shell j (one based).
        """
        spacings = [float(d) for d in spacings]
        strengths = [float(a) for a in strengths]
        if len(spacings) != len(strengths):
            raise ShellConfigError("Sampled spacing and strength lists differ in length")
        if any(d <= 0 for d in spacings):
            raise ShellConfigError("Sampled spacings must be positive")
        return cls(
            lambda j: spacings[j - 1],
            lambda j: strengths[j - 1],
            len(spacings),
            **assertions,
        )

    def assertion(self, name: str) -> Optional[bool]:
        return self._assertions[name]

    @property
    def assertions(self) -> Dict[str, Optional[bool]]:
        return dict(self._assertions)

    @property
    def sample_horizon(self) -> int:
        return self._horizon

    def horizon(self, prefix: int) -> float:
        return prefix + self._horizon

    def entry(self, k: int, j: int) -> Tuple[float, float]:
        spacing = float(self._spacing(j))
        if not spacing > 0:
            raise ShellConfigError(f"Sampled spacing d_{k} = {spacing} is not positive")
        return spacing, float(self._strength(j))

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "horizon": self._horizon,
            "assertions": {k: v for k, v in self._assertions.items() if v is not None},
        }
