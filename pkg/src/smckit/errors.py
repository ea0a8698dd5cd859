"""Error taxonomy shared by the library and the CLI exit-code mapping."""

from __future__ import annotations


class SmckitError(Exception):
    """Base class; `exit_code` drives the CLI."""

    exit_code = 1


class ParseError(SmckitError):
    """Malformed input: bad Dynkin string, bad JSON, bad flag value."""

    exit_code = 2


class PreconditionError(SmckitError):
    """Input is well-formed but violates a documented precondition."""

    exit_code = 3


class BudgetError(SmckitError):
    """An iteration guard, scan ceiling, or enumeration budget was exhausted."""

    exit_code = 4


class InternalError(SmckitError):
    """A verified postcondition or invariant failed; carries a diagnostic dump."""

    exit_code = 5
