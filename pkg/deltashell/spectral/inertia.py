from __future__ import annotations

from typing import Optional, Sequence, Tuple

import numpy
from scipy.linalg import hessenberg

from deltashell import log
from deltashell.api.data_structures import InertiaReport

TOLERANCE_FACTOR = 10.0


def sturm_count(
    diagonal: Sequence[float], off_diagonal: Sequence[float], shift: float = 0.0
) -> int:
    """
    Number of eigenvalues below ``shift`` of the symmetric tridiagonal matrix with the
    given diagonal and off diagonal, counted as the negative pivots of the LDL^T
    factorization of T - shift I.

    :param diagonal: The N diagonal entries
    :param off_diagonal: The N - 1 entries next to the diagonal
    :param shift: The point the eigenvalues are compared against
    :return: The number of eigenvalues strictly below the shift
    """
    diagonal = numpy.asarray(diagonal, dtype=numpy.float64)
    off_diagonal = numpy.asarray(off_diagonal, dtype=numpy.float64)
    if diagonal.size == 0:
        return 0
    scale = max(
        float(numpy.abs(diagonal).max()),
        float(numpy.abs(off_diagonal).max()) if off_diagonal.size else 0.0,
        1.0,
    )
    guard = numpy.finfo(numpy.float64).eps * scale
    shifted = (diagonal - shift).tolist()
    squares = numpy.square(off_diagonal).tolist()
    count = 0
    pivot = shifted[0]
    for index in range(len(shifted)):
        if index:
            pivot = shifted[index] - squares[index - 1] / pivot
        if pivot == 0:
            pivot = -guard
        if pivot < 0:
            count += 1
    return count


def tridiagonalize(matrix: numpy.ndarray) -> Tuple[numpy.ndarray, numpy.ndarray]:
    """
    Orthogonally reduce a symmetric matrix to tridiagonal form.

    :return: The diagonal and the first off diagonal of the reduced matrix
    """
    matrix = numpy.asarray(matrix, dtype=numpy.float64)
    if matrix.shape[0] > 2:
        matrix = hessenberg((matrix + matrix.T) / 2.0)
    return numpy.diag(matrix).copy(), numpy.diag(matrix, -1).copy()


def default_tolerance(matrix: numpy.ndarray) -> float:
    """N times the machine epsilon times the infinity norm, with a safety factor."""
    matrix = numpy.asarray(matrix, dtype=numpy.float64)
    if matrix.size == 0:
        return 0.0
    norm = float(numpy.abs(matrix).sum(axis=1).max())
    return TOLERANCE_FACTOR * matrix.shape[0] * numpy.finfo(numpy.float64).eps * norm


def inertia(matrix: numpy.ndarray, tol: Optional[float] = None) -> InertiaReport:
    """
    Count the eigenvalues of a symmetric matrix below -tol, inside [-tol, tol] and
    above tol.

    :param matrix: A real symmetric matrix
    :param tol: Width of the zero band, defaults to :func:`default_tolerance`
    :return: The inertia with the tolerance used
    """
    matrix = numpy.atleast_2d(numpy.asarray(matrix, dtype=numpy.float64))
    if matrix.size == 0:
        return InertiaReport(0, 0, 0, 0.0 if tol is None else float(tol))
    if matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"Inertia needs a square matrix, got shape {matrix.shape}")
    if tol is None:
        tol = default_tolerance(matrix)
    if tol < 0:
        raise ValueError("The tolerance must be nonnegative")
    diagonal, off_diagonal = tridiagonalize(matrix)
    below = sturm_count(diagonal, off_diagonal, -tol)
    not_above = sturm_count(diagonal, off_diagonal, tol)
    if not_above < below:
        # rounding inside a tolerance band of zero width
        not_above = below
    size = matrix.shape[0]
    report = InertiaReport(below, not_above - below, size - not_above, float(tol))
    log.debug(f"Inertia of a {size}x{size} matrix: {report}")
    return report
