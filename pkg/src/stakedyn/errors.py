"""Exception types shared across the package."""

from __future__ import annotations


class StakedynError(Exception):
    """Base class for all package-specific errors."""


class DomainError(StakedynError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class SingularYieldError(StakedynError, ZeroDivisionError):
    """The per-staker yield I(sigma)/sigma was requested at sigma = 0."""


class UndefinedPeriodError(StakedynError, ValueError):
    """An oscillation period was requested where none is defined."""


class ConfigError(StakedynError, ValueError):
    """A configuration document is malformed or fails validation.

    `field` names the offending entry when known; `line` carries the source
    line for parse errors.
    """

    def __init__(self, message: str, *, field: str | None = None, line: int | None = None):
        super().__init__(message)
        self.field = field
        self.line = line
