"""Exception taxonomy shared by the whole package.

Every error raised on purpose derives from :class:`HolderLabError`, so callers
(and the CLI exit-code mapping) can tell deliberate diagnostics from bugs.
"""

from __future__ import annotations

__all__ = [
    "HolderLabError",
    "InvalidIndexError",
    "NotInSpaceError",
    "InvalidParameterError",
    "InvalidCompositionError",
    "DomainViolationError",
    "InvalidBudgetError",
    "UnknownNameError",
    "InvalidCheckError",
    "InvalidStrategyError",
    "InsufficientSamplesError",
    "ConfigError",
]


class HolderLabError(Exception):
    """Base class for all deliberate errors raised by holderlab."""


class InvalidIndexError(HolderLabError, IndexError):
    """A coordinate index below 1 was requested."""


class NotInSpaceError(HolderLabError, ValueError):
    """The vector lies outside the sequence space a norm or map needs.

    Typical cause: a nonzero tail fed to an lp norm, which only sums
    absolutely convergent coordinates.
    """


class InvalidParameterError(HolderLabError, ValueError):
    """A constructor parameter violates its constraint.

    The message always names the parameter and the constraint so the CLI can
    surface it verbatim (exit code 3).
    """

    def __init__(self, parameter: str, constraint: str):
        self.parameter = parameter
        self.constraint = constraint
        super().__init__(f"parameter {parameter!r} violates constraint: {constraint}")


class InvalidCompositionError(HolderLabError, ValueError):
    """A combinator was fed an inner map it cannot soundly wrap."""


class DomainViolationError(HolderLabError, ValueError):
    """An input lies outside the domain an operation is defined on."""


class InvalidBudgetError(HolderLabError, ValueError):
    """A sample/iteration budget or breadth below 1 was requested."""


class UnknownNameError(HolderLabError, KeyError):
    """No catalog entry has the requested name (CLI exit code 4)."""

    def __init__(self, name: str, suggestions: tuple[str, ...] = ()):
        self.name = name
        self.suggestions = suggestions
        hint = f"; did you mean {', '.join(suggestions)}?" if suggestions else ""
        super().__init__(f"unknown catalog name {name!r}{hint}")

    def __str__(self) -> str:  # KeyError quotes its arg; keep the message plain
        return self.args[0]


class InvalidCheckError(HolderLabError, ValueError):
    """A check was requested against a map whose claims cannot support it."""


class InvalidStrategyError(HolderLabError, ValueError):
    """A displacement strategy does not apply to the given map."""


class InsufficientSamplesError(HolderLabError, RuntimeError):
    """Every sampled pair was degenerate; no ratio could be measured."""


class ConfigError(HolderLabError, ValueError):
    """A run configuration violates the config schema (CLI exit code 2)."""
