"""Command line front end.

Four subcommands: `run` executes a program file, `repl` starts an
interactive session, `primes` reports z-primes of an edited universe, and
`bij encode|decode` round-trips bijective numerals.

Exit codes: 0 success, 1 evaluation or domain error, 2 syntax error,
3 usage error. Domain and evaluation failures print one line to stderr:

    error[DivisionByZero] line 3, col 14: statement 2: division of 6 by zero

The ZOLI_BLACK_HOLE environment variable supplies a default stacked-cell
policy for run and repl; an explicit --black-hole flag wins.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from pathlib import Path
from typing import Optional

from .bijective import from_bijective, to_bijective
from .errors import ZoliError, ZoliSyntaxError, format_error
from .interp import BlackHolePolicy, EvalConfig, Session
from .syntax import parse_line, parse_source
from .universe import SINGLE_STEP, Chase, Universe
from .zprime import divisor_pool, is_z_prime, z_primes

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_PARSE = 2
EXIT_USAGE = 3

_BLACK_HOLE_NAMES = ("error", "first", "last", "all")


class _CliUsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """argparse parser whose own failures map to exit code 3."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise _CliUsageError(message)


class _EditAction(argparse.Action):
    """Collect universe edits into one list so order across flags survives."""

    def __call__(self, parser, namespace, values, option_string=None):
        edits = getattr(namespace, "edits", None)
        if edits is None:
            edits = []
            setattr(namespace, "edits", edits)
        edits.append((self.dest, values))


def _add_eval_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--resolution",
        choices=("single", "chase"),
        default="single",
        help="how literals resolve: one lookup, or chased to a fixed point",
    )
    p.add_argument(
        "--chase-depth",
        type=int,
        default=64,
        metavar="N",
        help="lookup budget under --resolution chase (default 64)",
    )
    p.add_argument(
        "--black-hole",
        choices=_BLACK_HOLE_NAMES,
        default=None,
        help="stacked-cell policy (default: $ZOLI_BLACK_HOLE, else error)",
    )
    p.add_argument(
        "--strict",
        action="store_true",
        help="every literal must name an existing cell",
    )


def _config_from_args(args: argparse.Namespace) -> EvalConfig:
    name = args.black_hole
    if name is None:
        env = os.environ.get("ZOLI_BLACK_HOLE")
        if env is None:
            name = "error"
        else:
            name = env.strip().lower()
            if name not in _BLACK_HOLE_NAMES:
                raise _CliUsageError(
                    f"ZOLI_BLACK_HOLE must be one of {', '.join(_BLACK_HOLE_NAMES)}, got {env!r}"
                )
    if args.resolution == "chase":
        if args.chase_depth < 1:
            raise _CliUsageError("--chase-depth must be at least 1")
        resolution = Chase(args.chase_depth)
    else:
        resolution = SINGLE_STEP
    return EvalConfig(
        resolution=resolution, black_hole=BlackHolePolicy(name), strict=args.strict
    )


def _config_line(config: EvalConfig) -> str:
    if isinstance(config.resolution, Chase):
        res = f"chase(max_depth={config.resolution.max_depth})"
    else:
        res = "single"
    strict = "on" if config.strict else "off"
    return f"resolution={res} black-hole={config.black_hole.value} strict={strict}"


def cmd_run(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        program = parse_source(text)
    except ZoliSyntaxError as err:
        print(format_error(err), file=sys.stderr)
        return EXIT_PARSE
    session = Session(config)
    for index, stmt in enumerate(program.statements, 1):
        try:
            out = session.execute(stmt)
        except ZoliError as err:
            if err.stmt_index is None:
                err.stmt_index = index
            print(format_error(err), file=sys.stderr)
            return EXIT_RUNTIME
        if out is not None:
            print(out)
    if args.show_universe:
        if session.universe is None:
            print("ZoT: (no universe)")
        else:
            print(f"ZoT: {session.universe.display()}")
    return EXIT_OK


def _meta_command(cmd: str, session: Session, config: EvalConfig) -> bool:
    """Run one :meta line; False means the session should end."""
    if cmd == ":quit":
        return False
    if cmd == ":universe":
        if session.universe is None:
            print("ZoT: (no universe)")
        else:
            print(f"ZoT: {session.universe.display()}")
    elif cmd == ":primes":
        if session.universe is None:
            print("(no universe)")
        else:
            print(" ".join(str(v) for v in z_primes(session.universe)))
    elif cmd == ":config":
        print(_config_line(config))
    else:
        print(
            f"unknown command {cmd!r} (try :universe :primes :config :quit)",
            file=sys.stderr,
        )
    return True


def cmd_repl(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    session = Session(config)
    interactive = sys.stdin.isatty()
    if interactive:
        try:
            import readline  # noqa: F401
        except ImportError:
            pass
    prompt = "zoli> " if interactive else ""
    while True:
        try:
            line = input(prompt)
        except EOFError:
            if interactive:
                print()
            return EXIT_OK
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith(":"):
            if not _meta_command(stripped, session, config):
                return EXIT_OK
            continue
        try:
            for stmt in parse_line(line):
                out = session.execute(stmt)
                if out is not None:
                    print(out)
        except ZoliError as err:
            print(format_error(err), file=sys.stderr)


def _parse_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text)
    if not m:
        raise _CliUsageError(f"--range wants LO..HI, got {text!r}")
    return int(m[1]), int(m[2])


def _apply_edit(universe: Universe, kind: str, payload: str) -> Universe:
    if kind == "rebind":
        m = re.fullmatch(r"(-?\d+)=(-?\d+)", payload)
        if not m:
            raise _CliUsageError(f"--rebind wants N=M, got {payload!r}")
        return universe.rebind(int(m[1]), int(m[2]))
    if kind == "stack":
        m = re.fullmatch(r"(-?\d+)=\[(.*)\]", payload)
        if not m:
            raise _CliUsageError(f"--stack wants N=[a,b,c], got {payload!r}")
        parts = [p.strip() for p in m[2].split(",")]
        if not all(re.fullmatch(r"-?\d+", p) for p in parts):
            raise _CliUsageError(f"--stack wants N=[a,b,c], got {payload!r}")
        return universe.stack(int(m[1]), [int(p) for p in parts])
    if kind == "opaque":
        m = re.fullmatch(r"([a-z][a-z0-9]*)@(\d+)", payload)
        if not m:
            raise _CliUsageError(f"--opaque wants NAME@INDEX, got {payload!r}")
        return universe.insert_opaque(int(m[2]), m[1])
    if kind == "delete":
        if not re.fullmatch(r"\d+", payload):
            raise _CliUsageError(f"--delete wants a display index, got {payload!r}")
        return universe.delete_at(int(payload))
    raise AssertionError(kind)


def cmd_primes(args: argparse.Namespace) -> int:
    lo, hi = _parse_range(args.range)
    try:
        universe = Universe.from_range(lo, hi)
        for kind, payload in getattr(args, "edits", None) or []:
            universe = _apply_edit(universe, kind, payload)
        if args.check is not None:
            print("true" if is_z_prime(args.check, divisor_pool(universe)) else "false")
        else:
            print(" ".join(str(v) for v in z_primes(universe)))
    except ZoliError as err:
        print(format_error(err), file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK


def cmd_bij_encode(args: argparse.Namespace) -> int:
    try:
        print(to_bijective(args.n, args.base))
    except ZoliError as err:
        print(format_error(err), file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK


def cmd_bij_decode(args: argparse.Namespace) -> int:
    try:
        print(from_bijective(args.digits, args.base))
    except ZoliError as err:
        print(format_error(err), file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="zoli",
        description="Interpreter and tools for the ZoT number system.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    run_p = sub.add_parser("run", help="execute a program file")
    run_p.add_argument("file", metavar="FILE", help="program to execute")
    _add_eval_flags(run_p)
    run_p.add_argument(
        "--show-universe",
        action="store_true",
        help="after a successful run, print the final universe",
    )
    run_p.set_defaults(func=cmd_run)

    repl_p = sub.add_parser("repl", help="interactive session")
    _add_eval_flags(repl_p)
    repl_p.set_defaults(func=cmd_repl)

    primes_p = sub.add_parser("primes", help="z-primes of an edited universe")
    primes_p.add_argument(
        "--range", required=True, metavar="LO..HI", help="initial universe range"
    )
    primes_p.add_argument(
        "--rebind",
        action=_EditAction,
        metavar="N=M",
        help="rebind a cell (repeatable; edit flags apply in the order given)",
    )
    primes_p.add_argument(
        "--stack", action=_EditAction, metavar="N=[a,b,c]", help="stack values on a cell"
    )
    primes_p.add_argument(
        "--opaque",
        action=_EditAction,
        metavar="NAME@INDEX",
        help="insert an opaque symbol at a display index",
    )
    primes_p.add_argument(
        "--delete", action=_EditAction, metavar="INDEX", help="delete the cell at a display index"
    )
    primes_p.add_argument(
        "--check", type=int, metavar="N", help="print true/false for this number only"
    )
    primes_p.set_defaults(func=cmd_primes)

    bij_p = sub.add_parser("bij", help="bijective base-k numerals")
    bij_sub = bij_p.add_subparsers(dest="direction", required=True, metavar="DIRECTION")
    enc = bij_sub.add_parser("encode", help="integer to digit string")
    enc.add_argument("n", type=int, help="positive integer")
    enc.add_argument("--base", type=int, required=True, metavar="K", help="base, 2..36")
    enc.set_defaults(func=cmd_bij_encode)
    dec = bij_sub.add_parser("decode", help="digit string to integer")
    dec.add_argument("digits", help="bijective digit string")
    dec.add_argument("--base", type=int, required=True, metavar="K", help="base, 2..36")
    dec.set_defaults(func=cmd_bij_decode)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _CliUsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except _CliUsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
