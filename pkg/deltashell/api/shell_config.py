from __future__ import annotations

from typing import Iterable, Iterator, Sequence, Tuple

import numpy

from .errors import (
    DuplicateRadius,
    NonPositiveRadius,
    ShellConfigError,
    ZeroStrength,
)
from ..utils.misc_utils import Real


def _frozen(values: Iterable[Real]) -> numpy.ndarray:
    array = numpy.array(values, dtype=numpy.float64).reshape(-1)
    array.flags.writeable = False
    return array


def negative_part(strengths: Sequence[Real]) -> Tuple[numpy.ndarray, numpy.ndarray]:
    """
    Split off the attractive part of a strength list.

    >>> negative_part([-2, 3, -1])
    (array([0, 2]), array([2., 1.]))

    :param strengths: The shell strengths alpha_k
    :return: The zero based indices k with alpha_k < 0 and the magnitudes |alpha_k|
    """
    strengths = numpy.asarray(strengths, dtype=numpy.float64).reshape(-1)
    indices = numpy.flatnonzero(strengths < 0)
    return indices, -strengths[indices]


class ShellConfig:
    """
    A finite family of concentric delta shells: radii 0 < r_1 < ... < r_N and the
    nonzero strengths alpha_k attached to them.

    Instances are immutable. Use :func:`normalize_config` to build one from unsorted
    data that may contain zero strengths.
    """

    __slots__ = ("_radii", "_strengths")

    def __init__(self, radii: Iterable[Real] = (), strengths: Iterable[Real] = ()):
        radii = _frozen(radii)
        strengths = _frozen(strengths)
        if radii.shape != strengths.shape:
            raise ShellConfigError(
                f"{radii.size} radii were given for {strengths.size} strengths"
            )
        if not numpy.all(numpy.isfinite(radii)) or not numpy.all(
            numpy.isfinite(strengths)
        ):
            raise ShellConfigError("Radii and strengths must be finite numbers")
        if radii.size and radii.min() <= 0:
            raise NonPositiveRadius(f"Radius {radii.min()} is not positive")
        steps = numpy.diff(radii)
        if numpy.any(steps == 0):
            raise DuplicateRadius(
                f"Radius {radii[1:][steps == 0][0]} appears more than once"
            )
        if numpy.any(steps < 0):
            raise ShellConfigError("Radii must be strictly increasing")
        if numpy.any(strengths == 0):
            raise ZeroStrength("Zero strength shells must be removed before use")
        self._radii = radii
        self._strengths = strengths

    @property
    def radii(self) -> numpy.ndarray:
        """The shell radii as a read only float array."""
        return self._radii

    @property
    def strengths(self) -> numpy.ndarray:
        """The shell strengths as a read only float array."""
        return self._strengths

    @property
    def spacings(self) -> numpy.ndarray:
        """
        The gaps d_k = r_k - r_(k-1) with r_0 = 0, so d_1 = r_1.
        """
        return numpy.diff(self._radii, prepend=0.0)

    @property
    def size(self) -> int:
        return int(self._radii.size)

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[Tuple[float, float]]:
        return zip(self._radii.tolist(), self._strengths.tolist())

    def __eq__(self, other):
        if not isinstance(other, ShellConfig):
            return NotImplemented
        return numpy.array_equal(self._radii, other._radii) and numpy.array_equal(
            self._strengths, other._strengths
        )

    def __hash__(self):
        return hash((self._radii.tobytes(), self._strengths.tobytes()))

    def __repr__(self):
        shells = ", ".join(f"({r!r}, {a!r})" for r, a in self)
        return f"ShellConfig([{shells}])"

    @property
    def is_attractive(self) -> bool:
        """True when every strength is negative (alpha equals its negative part)."""
        return bool(numpy.all(self._strengths < 0))

    @property
    def kappa_plus_alpha(self) -> int:
        """The number of repulsive shells."""
        return int(numpy.count_nonzero(self._strengths > 0))

    @property
    def kappa_minus_alpha(self) -> int:
        """The number of attractive shells."""
        return int(numpy.count_nonzero(self._strengths < 0))

    def attractive_part(self) -> ShellConfig:
        """The sub configuration made of the attractive shells only."""
        indices, magnitudes = negative_part(self._strengths)
        return ShellConfig(self._radii[indices], -magnitudes)

    def negative_measure(self):
        """The atomic measure sum |alpha_k^-| delta(r - r_k)."""
        from .measure import AtomicMeasure

        indices, magnitudes = negative_part(self._strengths)
        return AtomicMeasure(self._radii[indices], magnitudes)

    def scaled(self, factor: Real) -> ShellConfig:
        """
        Dilate the configuration: (R, alpha) becomes (cR, alpha / c).
        """
        if factor <= 0:
            raise ValueError("The scale factor must be positive")
        return ShellConfig(self._radii * factor, self._strengths / factor)

    def with_strength(self, index: int, strength: Real) -> ShellConfig:
        """
        Replace one strength. A zero strength removes the shell.
        """
        shells = list(self)
        shells[index] = (shells[index][0], float(strength))
        return normalize_config(shells)

    def with_radius(self, index: int, radius: Real) -> ShellConfig:
        shells = list(self)
        shells[index] = (float(radius), shells[index][1])
        return normalize_config(shells)


def normalize_config(shells: Iterable[Tuple[Real, Real]]) -> ShellConfig:
    """
    Build a :class:`ShellConfig` from raw (radius, strength) pairs.

    Pairs are sorted by radius and zero strength shells are dropped.

    :param shells: Iterable of (radius, strength) pairs in any order
    :return: The normalized configuration
    :raises NonPositiveRadius: if any radius is not positive
    :raises DuplicateRadius: if two pairs share a radius
    """
    if isinstance(shells, ShellConfig):
        return shells
    pairs = [(float(r), float(a)) for r, a in shells]
    for r, _ in pairs:
        if not r > 0:
            raise NonPositiveRadius(f"Radius {r} is not positive")
    pairs.sort(key=lambda pair: pair[0])
    for (r0, _), (r1, _) in zip(pairs, pairs[1:]):
        if r0 == r1:
            raise DuplicateRadius(f"Radius {r0} appears more than once")
    pairs = [(r, a) for r, a in pairs if a != 0]
    return ShellConfig([r for r, _ in pairs], [a for _, a in pairs])
