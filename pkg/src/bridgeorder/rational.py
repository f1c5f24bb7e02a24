"""Exact fractions and even continued fractions.

Fractions are plain :class:`fractions.Fraction` values (arbitrary precision,
always reduced, sign on the numerator).  A continued fraction with integer
part ``r`` and partial quotients ``a_1, ..., a_n`` means

    r + 1/(a_1 + 1/(a_2 + ... + 1/a_n))

and the empty word evaluates to ``r`` itself.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import DivisionByZero, NotReducedError

__all__ = [
    "CFExpansion",
    "Fraction",
    "eval_cf",
    "even_expansion",
    "format_fraction",
    "format_word",
    "parse_fraction",
    "parse_word",
]

Word = tuple[int, ...]

_FRACTION_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


class CFExpansion(NamedTuple):
    """``integer_part + [word]`` with every entry of ``word`` even and nonzero."""

    integer_part: int
    word: Word

    def value(self) -> Fraction:
        return eval_cf(self.integer_part, self.word)


def parse_fraction(text: str) -> Fraction:
    """Parse ``"p/q"`` (or a bare integer).  Unreduced input is rejected."""
    m = _FRACTION_RE.match(text)
    if m is None:
        raise ValueError(f"not a fraction: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    f = Fraction(num, den)
    if f.denominator != den:
        raise NotReducedError(f"{text.strip()} is not reduced (it equals {format_fraction(f)})")
    return f


def format_fraction(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def parse_word(text: str) -> Word:
    """Parse ``"[2,-2,0,-2]"``; brackets are optional, ``"[]"`` is the empty word."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return ()
    try:
        return tuple(int(tok) for tok in body.split(","))
    except ValueError:
        raise ValueError(f"not a word: {text!r}") from None


def format_word(word: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in word) + "]"


def eval_cf(r: int, word: Sequence[int]) -> Fraction:
    """Exact value of ``r + [word]``, folding right to left.

    Zeros are allowed in ``word``.  A zero tail that would have to be inverted
    raises :class:`DivisionByZero`; this cannot happen for expanded even
    vectors or for words of nonzero even integers.
    """
    if not word:
        return Fraction(r)
    # tail = num/den, kept as a coprime integer pair
    num, den = word[-1], 1
    for i in range(len(word) - 2, -1, -1):
        if num == 0:
            raise DivisionByZero(f"tail after position {i + 1} of {list(word)} is zero")
        # a_i + 1/(num/den) = (a_i*num + den)/num
        num, den = word[i] * num + den, num
    if num == 0:
        raise DivisionByZero(f"continued fraction {list(word)} is zero and cannot be inverted")
    return Fraction(r) + Fraction(den, num)


def _step(r0: int, r1: int, want_even: bool) -> int:
    """Partial quotient for ``r0 = a*r1 + r2`` with ``|r2| < |r1|``."""
    if r0 % r1 == 0:
        return r0 // r1
    lo = r0 // r1  # floor, also for negative operands
    hi = lo + 1
    lo_even = lo % 2 == 0
    return lo if lo_even == want_even else hi


def _euclid(r0: int, r1: int, first: int | None = None) -> list[int]:
    """Generalized Euclidean algorithm choosing even quotients after the first.

    ``first`` forces the first quotient; otherwise it is the even choice when
    ``r0`` and ``r1`` have opposite parity and the odd choice when both are odd.
    """
    quotients = []
    if first is None:
        first = _step(r0, r1, want_even=(r0 - r1) % 2 != 0)
    a = first
    while True:
        quotients.append(a)
        r0, r1 = r1, r0 - a * r1
        if r1 == 0:
            return quotients
        a = _step(r0, r1, want_even=True)


def even_expansion(f: Fraction) -> list[CFExpansion]:
    """All ways to write ``f = r + [a_1..a_n]`` with nonzero even ``a_i``.

    One expansion (even ``n``) for odd denominators; two (odd ``n``, integer
    parts ``floor(f)`` then ``ceil(f)``) for even denominators.
    """
    p, q = f.numerator, f.denominator
    if q % 2 == 1:
        qs = _euclid(p, q)
        return [CFExpansion(qs[0], tuple(qs[1:]))]
    lo = p // q
    out = []
    for r in (lo, lo + 1):
        qs = _euclid(p, q, first=r)
        out.append(CFExpansion(qs[0], tuple(qs[1:])))
    return out
