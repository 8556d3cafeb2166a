from __future__ import annotations

from typing import Optional


class ShellConfigError(Exception):
    pass


class DuplicateRadius(ShellConfigError):
    pass


class NonPositiveRadius(ShellConfigError):
    pass


class ZeroStrength(ShellConfigError):
    pass


class MixedSigns(ShellConfigError):
    """Raised by certificates that only apply to purely attractive configurations."""

    pass


class InsufficientShells(ShellConfigError):
    pass


class DomainError(ValueError):
    pass


class PrerequisiteNotMet(Exception):
    pass


class DegenerateSignature(Exception):
    """
    The kappa matrix has an eigenvalue inside the tolerance band around zero and the
    bound state count depends on which side of zero it is assigned to.
    """

    def __init__(self, lower: int, upper: int, tolerance: float):
        super().__init__(
            f"Degenerate signature within tolerance {tolerance:g}: "
            f"the bound state count is {lower} or {upper}"
        )
        self.lower = lower
        self.upper = upper
        self.tolerance = tolerance


class MeshTooCoarse(Exception):
    pass


class UnsupportedDimension(Exception):
    pass


class ChannelLimitExceeded(Exception):
    pass


class ProblemFileError(Exception):
    def __init__(
        self,
        message: str,
        field: Optional[str] = None,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        location = ""
        if field is not None:
            location = f" (field '{field}')"
        elif line is not None:
            location = f" (line {line}, column {column})"
        super().__init__(message + location)
        self.field = field
        self.line = line
        self.column = column
