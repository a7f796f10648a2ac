"""Statement execution and expression evaluation.

Evaluation resolves numerals at the places they are written: the literal
`3` in `writeln(3+1)` is looked up in the current universe, but the 4 that
3+1 produces is never looked up again. A stacked (black-hole) cell makes a
literal ambiguous, and the configured policy decides what happens: refuse,
take the first or last occupant, or enumerate every occupant. Under
enumeration each literal site varies independently and the result set is
the distinct outcomes of every combination, printed in ascending order.

Combinations are explored in sorted operand order and the first failing
combination aborts evaluation, so errors are deterministic.

All arithmetic is exact signed 64-bit: anything outside the range raises
Overflow rather than wrapping. Division truncates toward zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

from .errors import (
    BlackHoleOperand,
    DivisionByZero,
    IndeterminateOperand,
    NegativeExponent,
    NoUniverse,
    Overflow,
    StrictResolutionError,
    UndefinedPower,
    ZoliError,
    ensure_int64,
)
from .syntax import Binary, Expr, Init, IntLit, Neg, Program, Rebind, Span, Stack, Stmt, Writeln
from .universe import (
    SINGLE_STEP,
    Multi,
    OpaqueHit,
    ResolutionPolicy,
    Universe,
    Value,
)


class BlackHolePolicy(Enum):
    """What a stacked cell means when a literal lands on it."""

    ERROR = "error"
    FIRST = "first"
    LAST = "last"
    ALL = "all"


@dataclass(frozen=True)
class EvalConfig:
    """Evaluation knobs.

    resolution picks single-step or chased lookup for literals. black_hole
    picks the stacked-cell behaviour. strict turns a literal whose numeral
    has no cell into an error instead of letting it denote itself; the
    check guards only written literals, values reached mid-chase stay
    exempt. When a chase ends on a stacked cell the chosen occupant is
    used as-is, not resolved again.
    """

    resolution: ResolutionPolicy = SINGLE_STEP
    black_hole: BlackHolePolicy = BlackHolePolicy.ERROR
    strict: bool = False


@dataclass(frozen=True)
class RunOutput:
    """Lines produced by writeln plus the universe left behind."""

    lines: tuple[str, ...]
    final_universe: Optional[Universe]

    @property
    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines)


def _distinct_sorted(values: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(values)))


def _literal(lit: IntLit, universe: Universe, config: EvalConfig) -> tuple[int, ...]:
    line, col = lit.span
    n = ensure_int64(lit.value, f"literal {lit.value}", line, col)
    if config.strict and universe.find_cell(n) is None:
        raise StrictResolutionError(f"numeral {n} names no cell in this universe", line, col)
    try:
        resolved = universe.resolve(n, config.resolution)
    except ZoliError as err:
        if err.line is None:
            err.line, err.col = line, col
        raise
    if isinstance(resolved, Value):
        return (resolved.value,)
    if isinstance(resolved, OpaqueHit):
        raise IndeterminateOperand(
            f"numeral {n} resolves to the opaque symbol {resolved.name!r}", line, col
        )
    assert isinstance(resolved, Multi)
    policy = config.black_hole
    if policy is BlackHolePolicy.ERROR:
        raise BlackHoleOperand(
            f"numeral {n} is stacked with {len(resolved.values)} values", line, col
        )
    if policy is BlackHolePolicy.FIRST:
        return (resolved.values[0],)
    if policy is BlackHolePolicy.LAST:
        return (resolved.values[-1],)
    return _distinct_sorted(resolved.values)


def _apply(op: str, a: int, b: int, span: Span) -> int:
    line, col = span
    if op == "+":
        return ensure_int64(a + b, "sum", line, col)
    if op == "-":
        return ensure_int64(a - b, "difference", line, col)
    if op == "*":
        return ensure_int64(a * b, "product", line, col)
    if op == "/":
        if b == 0:
            raise DivisionByZero(f"division of {a} by zero", line, col)
        quotient = -(-a // b) if (a < 0) != (b < 0) else a // b
        return ensure_int64(quotient, "quotient", line, col)
    if op == "^":
        if b < 0:
            raise NegativeExponent(f"exponent {b} is negative", line, col)
        if a == 0 and b == 0:
            raise UndefinedPower("0^0 has no defined value", line, col)
        if b >= 64 and a not in (-1, 0, 1):
            raise Overflow(f"{a}^{b} exceeds the 64-bit range", line, col)
        return ensure_int64(a**b, "power", line, col)
    raise TypeError(f"unknown operator {op!r}")


def _eval(expr: Expr, universe: Universe, config: EvalConfig) -> tuple[int, ...]:
    if isinstance(expr, IntLit):
        return _literal(expr, universe, config)
    if isinstance(expr, Neg):
        line, col = expr.span
        negated = [
            ensure_int64(-v, "negation", line, col)
            for v in _eval(expr.operand, universe, config)
        ]
        return _distinct_sorted(negated)
    if isinstance(expr, Binary):
        lefts = _eval(expr.left, universe, config)
        rights = _eval(expr.right, universe, config)
        results = [_apply(expr.op, a, b, expr.span) for a in lefts for b in rights]
        return _distinct_sorted(results)
    raise TypeError(f"not an expression: {expr!r}")


def eval_expr(
    expr: Expr, universe: Universe, config: EvalConfig = EvalConfig()
) -> tuple[int, ...]:
    """Evaluate to the sorted tuple of distinct possible values.

    The tuple is a singleton unless enumeration met stacked cells.
    """
    return _eval(expr, universe, config)


def format_result(values: Sequence[int]) -> str:
    """One writeln line: a bare value, or {v1, v2, ...} for several."""
    if len(values) == 1:
        return str(values[0])
    return "{" + ", ".join(str(v) for v in values) + "}"


class Session:
    """Mutable statement-by-statement execution state.

    One session holds at most one universe; ZoT = (lo?hi) replaces it
    wholesale. Before the first init there is no universe: bindings
    refuse to run, and writeln treats every numeral as itself (or refuses
    too, under strict).
    """

    def __init__(self, config: EvalConfig = EvalConfig()):
        self.config = config
        self.universe: Optional[Universe] = None

    def execute(self, stmt: Stmt) -> Optional[str]:
        """Run one statement, returning the output line for writeln."""
        line, col = stmt.span
        try:
            if isinstance(stmt, Init):
                self.universe = Universe.from_range(stmt.lo, stmt.hi)
                return None
            if isinstance(stmt, Rebind):
                self.universe = self._require_universe(stmt.span).rebind(stmt.label, stmt.value)
                return None
            if isinstance(stmt, Stack):
                self.universe = self._require_universe(stmt.span).stack(stmt.label, stmt.values)
                return None
            if isinstance(stmt, Writeln):
                if self.universe is not None:
                    universe = self.universe
                elif self.config.strict:
                    raise NoUniverse(
                        "no universe yet: 'ZoT = (lo?hi)' must come first", line, col
                    )
                else:
                    universe = Universe()
                return format_result(eval_expr(stmt.expr, universe, self.config))
        except ZoliError as err:
            if err.line is None:
                err.line, err.col = line, col
            raise
        raise TypeError(f"not a statement: {stmt!r}")

    def _require_universe(self, span: Span) -> Universe:
        if self.universe is None:
            raise NoUniverse(
                "no universe yet: 'ZoT = (lo?hi)' must come before bindings", span.line, span.col
            )
        return self.universe


def run_program(program: Program, config: EvalConfig = EvalConfig()) -> RunOutput:
    """Execute a whole program, collecting writeln lines.

    Execution halts at the first error; the raised error carries the
    1-based index of the offending statement.
    """
    session = Session(config)
    lines: list[str] = []
    for index, stmt in enumerate(program.statements, 1):
        try:
            out = session.execute(stmt)
        except ZoliError as err:
            if err.stmt_index is None:
                err.stmt_index = index
            raise
        if out is not None:
            lines.append(out)
    return RunOutput(tuple(lines), session.universe)
