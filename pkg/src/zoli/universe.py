"""The ordered universe of rebindable numerals (the ZoT list).

A universe is an ordered sequence of cells. Every cell remembers the
numeral it was created as (its original label, absent for cells inserted
later) and holds a non-empty ordered multiset of occupant symbols. Editing
operations return a fresh universe; nothing is mutated in place, so values
are safe to share across threads.

The central idea: a cell's label is its name, its occupants are its value.
`3:=7` finds the cell named 3 and makes it hold 7; the name sticks, so a
later mention of 3 still lands on the same cell. Numerals resolve as whole
tokens (rebinding 3 leaves 13 alone), and a numeral with no cell of its own
resolves to itself.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import (
    ChaseDepthExceeded,
    CycleDetected,
    DomainError,
    EmptyStack,
    IndexOutOfBounds,
    RangeInverted,
    RangeTooLarge,
    UnknownLabel,
    ensure_int64,
)

MAX_RANGE_CELLS = 10**6

_OPAQUE_NAME = re.compile(r"[a-z][a-z0-9]*")


@dataclass(frozen=True)
class Numeral:
    """A numeral occupant with an exact 64-bit signed value."""

    value: int

    def __post_init__(self):
        ensure_int64(self.value, "numeral")


@dataclass(frozen=True)
class Opaque:
    """A placeholder occupant with no numeric value, like an extra photo `q`."""

    name: str

    def __post_init__(self):
        if not _OPAQUE_NAME.fullmatch(self.name):
            raise DomainError(f"opaque name {self.name!r} must match [a-z][a-z0-9]*")


Symbol = Union[Numeral, Opaque]


def symbol_text(sym: Symbol) -> str:
    return str(sym.value) if isinstance(sym, Numeral) else sym.name


@dataclass(frozen=True)
class Cell:
    """One universe slot: an optional original label plus its occupants.

    The label is fixed at creation time; editing operations only ever swap
    occupants. Cells created by range initialization carry their numeral as
    the label, cells inserted later carry none.
    """

    original_label: Optional[int]
    occupants: tuple[Symbol, ...]

    def __post_init__(self):
        if not self.occupants:
            raise DomainError("a cell must hold at least one occupant")
        if self.original_label is not None:
            ensure_int64(self.original_label, "cell label")


@dataclass(frozen=True)
class Value:
    """Resolution landed on a single numeral."""

    value: int


@dataclass(frozen=True)
class OpaqueHit:
    """Resolution landed on an opaque placeholder."""

    name: str


@dataclass(frozen=True)
class Multi:
    """Resolution landed on a stacked (black-hole) cell."""

    values: tuple[int, ...]


Resolution = Union[Value, OpaqueHit, Multi]


@dataclass(frozen=True)
class SingleStep:
    """Resolve with exactly one lookup (the default)."""


@dataclass(frozen=True)
class Chase:
    """Re-resolve single-numeral results transitively.

    The chase stops at a fixed point (a numeral bound to itself or absent
    from the universe), at a stacked or opaque cell, or fails: revisiting a
    label raises CycleDetected, needing more than max_depth lookups raises
    ChaseDepthExceeded.
    """

    max_depth: int = 64

    def __post_init__(self):
        if self.max_depth < 1:
            raise DomainError("chase depth must be at least 1")


ResolutionPolicy = Union[SingleStep, Chase]

SINGLE_STEP = SingleStep()


@dataclass(frozen=True)
class Universe:
    """An ordered sequence of cells; the evaluation context for programs."""

    cells: tuple[Cell, ...] = ()

    def __post_init__(self):
        labels = [c.original_label for c in self.cells if c.original_label is not None]
        if len(labels) != len(set(labels)):
            raise DomainError("original labels must be pairwise distinct")

    @classmethod
    def from_range(cls, lo: int, hi: int) -> "Universe":
        """Create the identity universe lo..hi, one cell per numeral."""
        if lo > hi:
            raise RangeInverted(f"inverted range ({lo}?{hi})")
        if hi - lo >= MAX_RANGE_CELLS:
            raise RangeTooLarge(f"range ({lo}?{hi}) exceeds {MAX_RANGE_CELLS} cells")
        return cls(tuple(Cell(k, (Numeral(k),)) for k in range(lo, hi + 1)))

    def __len__(self) -> int:
        return len(self.cells)

    def find_cell(self, label: int) -> Optional[Cell]:
        for cell in self.cells:
            if cell.original_label == label:
                return cell
        return None

    def _index_of(self, label: int) -> int:
        for i, cell in enumerate(self.cells):
            if cell.original_label == label:
                return i
        raise UnknownLabel(f"no cell carries the original label {label}")

    def rebind(self, label: int, value: int) -> "Universe":
        """Make the cell originally labelled `label` hold exactly `value`.

        The value need not occur anywhere else in the universe, and the
        cell's label is untouched, so the binding can be changed again.
        """
        i = self._index_of(label)
        cell = Cell(label, (Numeral(value),))
        return Universe(self.cells[:i] + (cell,) + self.cells[i + 1 :])

    def stack(self, label: int, values: Sequence[int]) -> "Universe":
        """Stack several values onto one cell, making it a black hole."""
        if not values:
            raise EmptyStack(f"cannot stack an empty list of values on {label}")
        i = self._index_of(label)
        cell = Cell(label, tuple(Numeral(v) for v in values))
        return Universe(self.cells[:i] + (cell,) + self.cells[i + 1 :])

    def insert_opaque(self, index: int, name: str) -> "Universe":
        """Insert an unlabelled cell holding one opaque symbol at a position."""
        if index < 0 or index > len(self.cells):
            raise IndexOutOfBounds(f"insert position {index} outside 0..{len(self.cells)}")
        cell = Cell(None, (Opaque(name),))
        return Universe(self.cells[:index] + (cell,) + self.cells[index:])

    def delete_at(self, index: int) -> "Universe":
        """Remove the cell at a display position; its label stops existing."""
        if index < 0 or index >= len(self.cells):
            raise IndexOutOfBounds(f"delete position {index} outside 0..{len(self.cells) - 1}")
        return Universe(self.cells[:index] + self.cells[index + 1 :])

    def _lookup(self, n: int) -> Resolution:
        cell = self.find_cell(n)
        if cell is None:
            return Value(n)
        if len(cell.occupants) == 1:
            sym = cell.occupants[0]
            if isinstance(sym, Numeral):
                return Value(sym.value)
            return OpaqueHit(sym.name)
        for sym in cell.occupants:
            if isinstance(sym, Opaque):
                return OpaqueHit(sym.name)
        return Multi(tuple(sym.value for sym in cell.occupants))

    def resolve(self, n: int, policy: ResolutionPolicy = SINGLE_STEP) -> Resolution:
        """Resolve the numeral n through the universe.

        A cell labelled n answers with its occupants: one numeral gives
        Value, one opaque gives OpaqueHit, several occupants give Multi.
        Without such a cell, n denotes itself. Under SingleStep exactly one
        lookup happens; under Chase a Value answer is itself re-resolved as
        a numeral until a fixed point, subject to the policy's cycle and
        depth rules.
        """
        if isinstance(policy, SingleStep):
            return self._lookup(n)
        seen: set[int] = set()
        current = n
        lookups = 0
        while True:
            if current in seen:
                raise CycleDetected(f"rebinding chain starting at {n} revisits {current}")
            seen.add(current)
            lookups += 1
            if lookups > policy.max_depth:
                raise ChaseDepthExceeded(f"chase from {n} exceeds {policy.max_depth} lookups")
            result = self._lookup(current)
            if not isinstance(result, Value) or result.value == current:
                return result
            current = result.value

    def tokens(self) -> tuple[str, ...]:
        """All occupant texts, cell order then occupant order."""
        return tuple(symbol_text(sym) for cell in self.cells for sym in cell.occupants)

    def display(self) -> str:
        """Space-separated occupant rendering; empty universe renders as ''."""
        return " ".join(self.tokens())
