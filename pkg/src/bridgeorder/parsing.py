"""Parsing a word into signed tiles separated by connectors.

A parsing of ``c`` with respect to ``a`` writes

    c = (e_1 a, C_1, e_2 a^-1, C_2, e_3 a, ..., e_k a^(+-1))

with signs ``e_i = ±1``, ``e_1 = +1``, each ``C_i`` a connector, and
``e_i == e_(i+1)`` whenever ``C_i == (0)``.  Tiles never begin or end with
a zero, so the connector after a tile is forced: ``(0)`` if the next entry is
0, otherwise the maximal run ±(2,0,2,...,2) starting there.  That makes the
left-to-right scan deterministic and the parsing unique.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .words import (
    ConnectorWord,
    WordClass,
    check_expanded,
    negate,
    representatives,
    reverse,
)

__all__ = [
    "Parsing",
    "Seam",
    "Span",
    "parse",
    "parse_class",
    "parses",
    "seams",
]

Word = tuple[int, ...]


@dataclass(frozen=True)
class Span:
    """A tile or connector occupying ``c[start:end]``."""

    start: int
    end: int
    kind: str  # "tile" or "connector"
    index: int  # tile number, or connector number (connector i follows tile i)
    sign: int = 1  # tile sign; 0 for connectors
    orientation: int = 1  # +1 for a, -1 for a^-1; 0 for connectors


@dataclass(frozen=True)
class Parsing:
    tile: Word
    signs: tuple[int, ...]
    connectors: tuple[ConnectorWord, ...]

    @property
    def tile_count(self) -> int:
        return len(self.signs)

    @property
    def connector_values(self) -> tuple[int, ...]:
        return tuple(c.value for c in self.connectors)

    def tile_word(self, i: int) -> Word:
        t = self.tile if i % 2 == 0 else reverse(self.tile)
        return t if self.signs[i] == 1 else negate(t)

    def reassemble(self) -> Word:
        out: list[int] = list(self.tile_word(0))
        for i, conn in enumerate(self.connectors):
            out.extend(conn.word)
            out.extend(self.tile_word(i + 1))
        return tuple(out)

    def spans(self) -> list[Span]:
        out = []
        pos = 0
        m = len(self.tile)
        for i, sign in enumerate(self.signs):
            orient = 1 if i % 2 == 0 else -1
            out.append(Span(pos, pos + m, "tile", i, sign, orient))
            pos += m
            if i < len(self.connectors):
                ln = len(self.connectors[i])
                out.append(Span(pos, pos + ln, "connector", i, 0, 0))
                pos += ln
        return out

    def to_dict(self) -> dict:
        return {
            "tile": list(self.tile),
            "signs": list(self.signs),
            "connector_values": list(self.connector_values),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Parsing":
        return cls(
            tuple(data["tile"]),
            tuple(data["signs"]),
            tuple(ConnectorWord(v) for v in data["connector_values"]),
        )


@dataclass(frozen=True)
class Seam:
    """A cut after ``position`` entries of ``c`` where both parsings change piece."""

    position: int
    kind: str  # "pure" or "mixed"


def parse(c: Sequence[int], a: Sequence[int]) -> Parsing | None:
    """The parsing of ``c`` with respect to the literal word ``a``, or None."""
    c = check_expanded(c, "c")
    a = check_expanded(a, "tile")
    n, m = len(c), len(a)
    if c[:m] != a:
        return None
    a_inv = reverse(a)
    signs = [1]
    conns: list[ConnectorWord] = []
    pos = m
    while pos < n:
        if c[pos] == 0:
            end = pos + 1
        else:
            s = c[pos]
            end = pos + 1
            while end + 1 < n and c[end] == 0 and c[end + 1] == s:
                end += 2
        value = sum(c[pos:end]) // 2
        pos = end
        t = a if len(signs) % 2 == 0 else a_inv
        seg = c[pos:pos + m]
        if len(seg) < m:
            return None
        if seg == t:
            eps = 1
        elif seg == negate(t):
            eps = -1
        else:
            return None
        if value == 0 and eps != signs[-1]:
            return None
        signs.append(eps)
        conns.append(ConnectorWord(value))
        pos += m
    return Parsing(a, tuple(signs), tuple(conns))


def parses(c: Sequence[int], a: Sequence[int]) -> bool:
    return parse(c, a) is not None


def _members(x: WordClass | Sequence[int]) -> list[Word]:
    if isinstance(x, WordClass):
        return x.members()
    return representatives(tuple(x))


def parse_class(c_hat: WordClass | Sequence[int], a_hat: WordClass | Sequence[int]) -> Parsing | None:
    """A parsing of some representative of ``c_hat`` by some representative of ``a_hat``.

    Representatives are tried in the order ``x, -x, x^-1, -x^-1`` starting
    from the canonical word (or the given word), ``c`` in the outer loop.
    """
    reps_a = _members(a_hat)
    for c in _members(c_hat):
        for a in reps_a:
            if len(a) <= len(c) and c[0] == a[0]:
                p = parse(c, a)
                if p is not None:
                    return p
    return None


def _boundaries(spans: list[Span]) -> dict[int, tuple[str, str]]:
    """Map cut position -> (kind before, kind after) for interior cuts."""
    out = {}
    for left, right in zip(spans, spans[1:]):
        out[left.end] = (left.kind, right.kind)
    return out


def seams(c: Sequence[int], pa: Parsing, pb: Parsing) -> list[Seam]:
    """Cuts where both parsings of ``c`` have a piece boundary, in order."""
    c = tuple(c)
    if pa.reassemble() != c or pb.reassemble() != c:
        raise ValueError("both parsings must reassemble to c")
    ba = _boundaries(pa.spans())
    bb = _boundaries(pb.spans())
    out = []
    for pos in sorted(set(ba) & set(bb)):
        out.append(Seam(pos, "pure" if ba[pos] == bb[pos] else "mixed"))
    return out
