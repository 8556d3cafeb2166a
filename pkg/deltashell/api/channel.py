from __future__ import annotations

import math
from typing import Optional

from .errors import DomainError
from ..utils.misc_utils import Real

CRITICAL_L = -0.5
DEFAULT_LMAX = 1000


def effective_l(n: int, ell: int) -> float:
    """
    The effective centrifugal index of angular channel ``ell`` in dimension ``n``.

    It is the root l >= -1/2 of l(l+1) = (n-1)(n-3)/4 + ell(ell+n-2).

    :param n: Space dimension, at least 2
    :param ell: Angular number, at least 0
    :return: The effective l
    """
    if n < 2 or ell < 0:
        raise DomainError(f"No angular channel for n={n}, ell={ell}")
    # (n-1)(n-3)/4 + ell(ell+n-2) + 1/4 = (2 ell + n - 2)^2 / 4
    return -0.5 + abs(2 * ell + n - 2) / 2.0


class ChannelSpec:
    """
    An angular channel, given either as a raw index ``l >= -1/2`` or as a dimension
    and angular number pair resolved through :func:`effective_l`.
    """

    __slots__ = ("_l", "_n", "_ell")

    def __init__(
        self, l: Optional[Real] = None, n: Optional[int] = None, ell: Optional[int] = None
    ):
        if l is not None:
            if n is not None or ell is not None:
                raise ValueError("Give either l or the pair (n, ell), not both")
            l = float(l)
            if not l >= CRITICAL_L:
                raise DomainError(f"Channel index l={l} is below -1/2")
            self._l = l
            self._n = None
            self._ell = None
        else:
            if n is None or ell is None:
                raise ValueError("A channel needs l or both n and ell")
            self._n = int(n)
            self._ell = int(ell)
            self._l = effective_l(self._n, self._ell)

    @property
    def l(self) -> float:
        """The resolved effective index."""
        return self._l

    @property
    def n(self) -> Optional[int]:
        return self._n

    @property
    def ell(self) -> Optional[int]:
        return self._ell

    @property
    def is_critical(self) -> bool:
        """True for l = -1/2, the channel excluded from the matrix counting formula."""
        return self._l == CRITICAL_L

    def __eq__(self, other):
        if not isinstance(other, ChannelSpec):
            return NotImplemented
        return (self._l, self._n, self._ell) == (other._l, other._n, other._ell)

    def __hash__(self):
        return hash((self._l, self._n, self._ell))

    def __repr__(self):
        if self._n is None:
            return f"ChannelSpec(l={self._l!r})"
        return f"ChannelSpec(n={self._n}, ell={self._ell})"


def resolve_l(channel) -> float:
    """Accept a :class:`ChannelSpec` or a bare number and return the effective l."""
    if isinstance(channel, ChannelSpec):
        return channel.l
    return ChannelSpec(l=channel).l


def check_l(l: Real, allow_critical: bool = True) -> float:
    l = float(l)
    if not l >= CRITICAL_L or math.isinf(l):
        raise DomainError(f"Channel index l={l} is outside [-1/2, inf)")
    if not allow_critical and l == CRITICAL_L:
        raise DomainError("The matrix formulas exclude the channel l = -1/2")
    return l
