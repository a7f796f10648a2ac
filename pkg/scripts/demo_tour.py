#!/usr/bin/env python3
"""A guided tour of the library: universes, black holes, z-primes, numerals.

Run from the repository root:

    python3 scripts/demo_tour.py
"""

import sys
from pathlib import Path

try:
    import zoli
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
    import zoli

from zoli import (
    BlackHolePolicy,
    Chase,
    EvalConfig,
    Universe,
    eval_expr,
    format_result,
    parse_source,
    run_program,
    to_bijective,
    z_primes,
)


def section(title: str) -> None:
    print()
    print(title)
    print("-" * len(title))


def main() -> None:
    section("Rebinding a numeral")
    u = Universe.from_range(0, 9)
    print("fresh:  ", u.display())
    u = u.rebind(3, 7)
    print("3 := 7: ", u.display())
    src = "{ ZoT = (0?9); 3 := 7; writeln(5 + 9); writeln(3 + 6) }"
    out = run_program(parse_source(src))
    print(f"program {src!r} prints {list(out.lines)}")

    section("Black-hole stacking")
    u = Universe.from_range(1, 9).stack(3, [18, 13, 15])
    print("universe:", u.display())
    expr = parse_source("{ writeln(3 + 1) }").statements[0].expr
    for policy in (BlackHolePolicy.FIRST, BlackHolePolicy.LAST, BlackHolePolicy.ALL):
        config = EvalConfig(black_hole=policy)
        print(f"3 + 1 under {policy.value:>5}: {format_result(eval_expr(expr, u, config))}")

    section("Chased resolution")
    u = Universe.from_range(0, 9).rebind(3, 7).rebind(7, 2)
    config = EvalConfig(resolution=Chase())
    expr = parse_source("{ writeln(3) }").statements[0].expr
    print("after 3 := 7 and 7 := 2:")
    print("  single-step 3 ->", format_result(eval_expr(expr, u)))
    print("  chased      3 ->", format_result(eval_expr(expr, u, config)))

    section("Universe-relative primes")
    u = Universe.from_range(0, 9).rebind(3, 7).delete_at(0)
    print("universe:", u.display())
    print("z-primes:", z_primes(u), "(9 qualifies: no occupant divides it)")
    u2 = u.insert_opaque(2, "q")
    print("with an opaque symbol:", u2.display())
    print("z-primes:", z_primes(u2), "(an opaque symbol divides everything)")

    section("Bijective numerals")
    for base in (2, 9, 10, 36):
        row = " ".join(to_bijective(n, base) for n in range(1, 13))
        print(f"base {base:>2}: {row}")


if __name__ == "__main__":
    main()
