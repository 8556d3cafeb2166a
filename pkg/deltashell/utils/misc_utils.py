from __future__ import annotations

from typing import Union

from numpy import floating, integer

Int = Union[int, integer]
Real = Union[float, int, floating, integer]


def sign(value: float, tolerance: float = 0.0) -> int:
    """
    Three-valued sign with a dead band.

    :param value: The number to classify
    :param tolerance: Values with magnitude at or below this are treated as zero
    :return: -1, 0 or 1
    """
    if value > tolerance:
        return 1
    if value < -tolerance:
        return -1
    return 0
