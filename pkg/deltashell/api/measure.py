from __future__ import annotations

from typing import Iterable, Iterator, Tuple

import numpy

from .errors import DuplicateRadius, NonPositiveRadius, ShellConfigError
from ..utils.misc_utils import Real


class AtomicMeasure:
    """
    A finite nonnegative measure sum w_k delta(r - r_k) on the half line.

    The bound and trace formulas take the attractive part of a shell configuration in
    this form, see :meth:`ShellConfig.negative_measure`.
    """

    __slots__ = ("_positions", "_weights")

    def __init__(self, positions: Iterable[Real] = (), weights: Iterable[Real] = ()):
        positions = numpy.array(positions, dtype=numpy.float64).reshape(-1)
        weights = numpy.array(weights, dtype=numpy.float64).reshape(-1)
        if positions.shape != weights.shape:
            raise ShellConfigError("Atom positions and weights differ in length")
        if positions.size and positions.min() <= 0:
            raise NonPositiveRadius(f"Atom position {positions.min()} is not positive")
        steps = numpy.diff(positions)
        if numpy.any(steps == 0):
            raise DuplicateRadius("Two atoms share a position")
        if numpy.any(steps < 0):
            raise ShellConfigError("Atom positions must be strictly increasing")
        if numpy.any(weights < 0):
            raise ShellConfigError("Atom weights must be nonnegative")
        positions.flags.writeable = False
        weights.flags.writeable = False
        self._positions = positions
        self._weights = weights

    @property
    def positions(self) -> numpy.ndarray:
        return self._positions

    @property
    def weights(self) -> numpy.ndarray:
        return self._weights

    @property
    def size(self) -> int:
        return int(self._positions.size)

    @property
    def total_mass(self) -> float:
        return float(self._weights.sum())

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[Tuple[float, float]]:
        return zip(self._positions.tolist(), self._weights.tolist())

    def __repr__(self):
        atoms = ", ".join(f"({r!r}, {w!r})" for r, w in self)
        return f"AtomicMeasure([{atoms}])"

    @classmethod
    def from_atoms(cls, atoms: Iterable[Tuple[Real, Real]]) -> AtomicMeasure:
        atoms = sorted((float(r), float(w)) for r, w in atoms)
        return cls([r for r, _ in atoms], [w for _, w in atoms])
