"""2-bridge knot and link classes and the map from word classes onto them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotAKnot, NotALink
from .rational import eval_cf, even_expansion
from .words import WordClass, class_of, expand

__all__ = [
    "TwoBridgeClass",
    "UNKNOT",
    "equivalent",
    "knot_class",
    "knot_word",
    "phi",
    "phi_inverse_knot",
    "phi_inverse_link",
]


@dataclass(frozen=True, order=True)
class TwoBridgeClass:
    """``K(p/q)`` up to isotopy and mirror image, with ``p`` normalized.

    ``q == 1`` is the unknot (stored with ``p == 0``).
    """

    q: int
    p: int

    @property
    def kind(self) -> str:
        if self.q == 1:
            return "unknot"
        return "knot" if self.q % 2 else "link"

    @property
    def is_knot(self) -> bool:
        return self.q % 2 == 1

    def fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return f"K({self.p}/{self.q})"


UNKNOT = TwoBridgeClass(1, 0)


def knot_class(f: Fraction) -> TwoBridgeClass:
    q = f.denominator
    if q == 1:
        return UNKNOT
    p = f.numerator % q
    inv = pow(p, -1, q)
    return TwoBridgeClass(q, min(p, q - p, inv, q - inv))


def equivalent(f1: Fraction, f2: Fraction) -> bool:
    return knot_class(f1) == knot_class(f2)


def phi(word: Sequence[int]) -> TwoBridgeClass:
    """The knot or link ``K(p/q)`` with ``p/q = 0 + [word]``.

    The empty word maps to the unknot.
    """
    if len(word) == 0:
        return UNKNOT
    return knot_class(eval_cf(0, class_of(word).canonical))


def phi_inverse_knot(k: TwoBridgeClass) -> WordClass:
    if not k.is_knot or k.q == 1:
        raise NotAKnot(f"{k} is not a nontrivial knot")
    (exp,) = even_expansion(k.fraction())
    return class_of(expand(exp.word))


def phi_inverse_link(k: TwoBridgeClass) -> tuple[WordClass, WordClass]:
    """Both word classes mapping to the link ``k``.

    For ``q == 2`` the two classes coincide (``[2]`` and ``[-2]``); the pair
    is still returned, check ``first == second`` to detect it.
    """
    if k.is_knot:
        raise NotALink(f"{k} has odd denominator")
    first, second = even_expansion(k.fraction())
    return class_of(expand(first.word)), class_of(expand(second.word))


def knot_word(k: TwoBridgeClass) -> tuple[int, ...]:
    """Canonical word for a knot; the empty word for the unknot."""
    if k.q == 1:
        return ()
    return phi_inverse_knot(k).canonical
