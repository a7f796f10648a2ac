"""Primality relative to a universe's occupant pool.

In the classical setting the divisor candidates for n are all numbers
below it. Here the candidates are only the values actually present as
occupants somewhere in the universe: a number is z-prime when no occupant
value d with 1 < d < n divides it. Remove 3 from the universe and 9
becomes z-prime, because its only proper divisor is no longer around to
testify.

Opaque occupants divide everything by decree. One opaque symbol anywhere
in the universe therefore disqualifies every number, including 1. Absent
opaques, 1 is vacuously z-prime (no candidate d satisfies 1 < d < 1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .universe import Numeral, Universe


@dataclass(frozen=True)
class DivisorPool:
    """The divisor candidates a universe offers.

    values holds every distinct numeral occupant value; has_opaque records
    whether any opaque occupant exists (a universal divisor).
    """

    values: frozenset[int]
    has_opaque: bool


def divisor_pool(universe: Universe) -> DivisorPool:
    values: set[int] = set()
    has_opaque = False
    for cell in universe.cells:
        for sym in cell.occupants:
            if isinstance(sym, Numeral):
                values.add(sym.value)
            else:
                has_opaque = True
    return DivisorPool(frozenset(values), has_opaque)


def is_z_prime(n: int, pool: DivisorPool) -> bool:
    """Is n z-prime against this pool?

    Only positive numbers are in scope; n < 1 raises DomainError.
    """
    if n < 1:
        raise DomainError(f"z-primality is defined for n >= 1, got {n}")
    if pool.has_opaque:
        return False
    for d in pool.values:
        if 1 < d < n and n % d == 0:
            return False
    return True


def z_primes(universe: Universe) -> list[int]:
    """The z-prime occupant values of a universe, in first-occurrence order.

    Each distinct occupant value is tested once against the universe's own
    pool; values below 1 are out of scope and skipped.
    """
    pool = divisor_pool(universe)
    out: list[int] = []
    seen: set[int] = set()
    for cell in universe.cells:
        for sym in cell.occupants:
            if not isinstance(sym, Numeral):
                continue
            v = sym.value
            if v in seen:
                continue
            seen.add(v)
            if v >= 1 and is_z_prime(v, pool):
                out.append(v)
    return out
