"""Exception types shared across the package.

Every failure surfaces as a ZoliError subclass. The class name doubles as
the error kind printed by the CLI, e.g. ``error[UnknownLabel] line 2, col 1:
...``, so the names below are part of the public contract.
"""

from __future__ import annotations

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class ZoliError(Exception):
    """Base error; optionally carries a source location and statement index."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col
        self.stmt_index: int | None = None

    @property
    def kind(self) -> str:
        return type(self).__name__


# universe construction and editing
class RangeInverted(ZoliError):
    pass


class RangeTooLarge(ZoliError):
    pass


class UnknownLabel(ZoliError):
    pass


class EmptyStack(ZoliError):
    pass


class IndexOutOfBounds(ZoliError):
    pass


# numeral resolution
class CycleDetected(ZoliError):
    pass


class ChaseDepthExceeded(ZoliError):
    pass


# arithmetic and codec domain failures
class Overflow(ZoliError):
    pass


class DomainError(ZoliError):
    pass


class BaseOutOfRange(ZoliError):
    pass


class InvalidDigit(ZoliError):
    pass


class EmptyInput(ZoliError):
    pass


# lexing and parsing (CLI exit code 2)
class ZoliSyntaxError(ZoliError):
    """Common base for lexer and parser failures."""


class UnexpectedCharacter(ZoliSyntaxError):
    pass


class ParseError(ZoliSyntaxError):
    pass


class UnbalancedBraces(ParseError):
    pass


# evaluation
class DivisionByZero(ZoliError):
    pass


class UndefinedPower(ZoliError):
    pass


class NegativeExponent(ZoliError):
    pass


class IndeterminateOperand(ZoliError):
    pass


class BlackHoleOperand(ZoliError):
    pass


class StrictResolutionError(ZoliError):
    pass


class NoUniverse(ZoliError):
    pass


def ensure_int64(value: int, what: str, line: int | None = None, col: int | None = None) -> int:
    """Return value, or raise Overflow if it falls outside signed 64 bits."""
    if value < INT64_MIN or value > INT64_MAX:
        raise Overflow(f"{what} {value} does not fit in 64-bit signed range", line, col)
    return value


def format_error(err: ZoliError) -> str:
    """Render an error in the CLI wire format: error[Kind] line L, col C: message."""
    prefix = f"error[{err.kind}]"
    if err.line is not None:
        prefix += f" line {err.line}, col {err.col}"
    body = err.message
    if err.stmt_index is not None:
        body = f"statement {err.stmt_index}: {body}"
    return f"{prefix}: {body}"
