"""Bijective base-k numeration without a zero digit.

Ordinary positional notation wastes strings: 7, 07, 007 all name seven.
Bijective notation uses the digits 1..k only, so every finite digit string
names exactly one positive integer and the numeration is a true bijection:

    value("d1 d2 ... dm") = sum over i of d_i * k^(m-i)

Encoding replaces the usual `n mod k` step: a remainder of 0 means the
digit is k itself and the quotient gets decremented. Bases 2 through 36
are supported. Digit values 1..9 print as themselves and 10..35 print as
'A'..'Z'; the 36th digit value needs one more glyph and prints as 'a',
continuing the alphabet the way 62-symbol numeral sets do. Decoding is
case-sensitive for that reason.
"""

from __future__ import annotations

from .errors import INT64_MAX, BaseOutOfRange, DomainError, EmptyInput, InvalidDigit, Overflow

MIN_BASE = 2
MAX_BASE = 36

_DIGITS = "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZa"
_DIGIT_VALUE = {ch: i + 1 for i, ch in enumerate(_DIGITS)}


def _check_base(base: int) -> None:
    if not MIN_BASE <= base <= MAX_BASE:
        raise BaseOutOfRange(f"base {base} outside {MIN_BASE}..{MAX_BASE}")


def to_bijective(n: int, base: int) -> str:
    """Encode a positive integer as a bijective base-k digit string."""
    _check_base(base)
    if n < 1:
        raise DomainError(f"bijective numeration covers n >= 1, got {n}")
    out: list[str] = []
    while n:
        n, r = divmod(n, base)
        if r == 0:
            r = base
            n -= 1
        out.append(_DIGITS[r - 1])
    out.reverse()
    return "".join(out)


def from_bijective(text: str, base: int) -> int:
    """Decode a bijective base-k digit string back to its integer."""
    _check_base(base)
    if not text:
        raise EmptyInput("empty digit string")
    n = 0
    for ch in text:
        v = _DIGIT_VALUE.get(ch)
        if v is None:
            raise InvalidDigit(f"character {ch!r} is not a bijective digit")
        if v > base:
            raise InvalidDigit(f"digit {ch!r} has value {v}, too large for base {base}")
        n = n * base + v
        if n > INT64_MAX:
            raise Overflow(f"decoded value exceeds {INT64_MAX}")
    return n
