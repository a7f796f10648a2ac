"""Zoli: a number system with rebindable numerals, and its tiny language.

The pieces: an ordered universe of cells whose numerals can be rebound,
stacked, shadowed by opaque symbols, or deleted; primality judged against
the values the universe actually contains; bijective base-k numeration;
and an interpreter for the brace-delimited ZoT language that edits a
universe and prints expression values.
"""

from .bijective import MAX_BASE, MIN_BASE, from_bijective, to_bijective
from .errors import INT64_MAX, INT64_MIN, ZoliError, ZoliSyntaxError, format_error
from .interp import (
    BlackHolePolicy,
    EvalConfig,
    RunOutput,
    Session,
    eval_expr,
    format_result,
    run_program,
)
from .syntax import (
    Binary,
    Init,
    IntLit,
    Neg,
    Program,
    Rebind,
    Stack,
    Writeln,
    expr_to_source,
    parse,
    parse_line,
    parse_source,
    program_to_source,
    stmt_to_source,
    tokenize,
)
from .universe import (
    SINGLE_STEP,
    Cell,
    Chase,
    Multi,
    Numeral,
    Opaque,
    OpaqueHit,
    SingleStep,
    Universe,
    Value,
)
from .zprime import DivisorPool, divisor_pool, is_z_prime, z_primes

__version__ = "0.1.0"

__all__ = [
    "BlackHolePolicy",
    "Binary",
    "Cell",
    "Chase",
    "DivisorPool",
    "EvalConfig",
    "INT64_MAX",
    "INT64_MIN",
    "Init",
    "IntLit",
    "MAX_BASE",
    "MIN_BASE",
    "Multi",
    "Neg",
    "Numeral",
    "Opaque",
    "OpaqueHit",
    "Program",
    "Rebind",
    "RunOutput",
    "SINGLE_STEP",
    "Session",
    "SingleStep",
    "Stack",
    "Universe",
    "Value",
    "Writeln",
    "ZoliError",
    "ZoliSyntaxError",
    "divisor_pool",
    "eval_expr",
    "expr_to_source",
    "format_error",
    "format_result",
    "from_bijective",
    "is_z_prime",
    "parse",
    "parse_line",
    "parse_source",
    "program_to_source",
    "run_program",
    "stmt_to_source",
    "to_bijective",
    "tokenize",
    "z_primes",
]
