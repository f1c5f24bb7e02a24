"""Brute-force ground truth for the order module.

Nothing here calls :mod:`bridgeorder.order`.  Double parsings are found by
building words tile by tile from one knot's word class and running a small
automaton that tracks every way the word read so far can still parse with
respect to the other class.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from math import comb
from typing import Iterator, Sequence

from .errors import BudgetExhausted, NotADoubleParsing
from .parsing import Parsing, Span, parse, seams
from .words import (
    WordClass,
    class_of,
    component_spans,
    connector_word,
    negate,
    representatives,
    reverse,
    word_key,
)

__all__ = [
    "LemmaReport",
    "SearchBudget",
    "SearchResult",
    "SweepRow",
    "brute_force_parsings",
    "complete_bound",
    "count_S",
    "enumerate_S",
    "enumerate_classes",
    "minimal_double_parsings",
    "search_double_parsing",
    "sweep_pairs",
    "literal_double_parsing",
    "verify_parsing_lemmas",
]

Word = tuple[int, ...]


@dataclass(frozen=True)
class SearchBudget:
    max_word_length: int = 64
    max_candidates: int = 5_000_000
    time_limit: float = 600.0  # seconds

    def __post_init__(self) -> None:
        if self.max_word_length <= 0 or self.max_candidates <= 0 or self.time_limit <= 0:
            raise ValueError("budget fields must be positive")


# -- enumeration -------------------------------------------------------------

def enumerate_S(max_len: int, even_only: bool = False) -> Iterator[Word]:
    """Every expanded even vector of length <= max_len, by length then 2 < 0 < -2."""
    if max_len < 1:
        raise ValueError("max_len must be positive")

    def rec(prefix: list[int], length: int) -> Iterator[Word]:
        if len(prefix) == length:
            if prefix[-1] != 0:
                yield tuple(prefix)
            return
        last = prefix[-1] if prefix else 0
        prev = prefix[-2] if len(prefix) >= 2 else 0
        if last == 0 and prefix:
            # the entry after a zero repeats the entry before it
            prefix.append(prev)
            yield from rec(prefix, length)
            prefix.pop()
            return
        for x in (2, 0, -2):
            if x == 0 and (not prefix or len(prefix) == length - 1):
                continue
            prefix.append(x)
            yield from rec(prefix, length)
            prefix.pop()

    for length in range(1, max_len + 1):
        if even_only and length % 2:
            continue
        yield from rec([], length)


def count_S(length: int) -> int:
    """Number of expanded even vectors of the given length, counted combinatorially.

    A word is a sign sequence of ``j`` nonzero entries with a zero optionally
    inserted in each of the ``t`` places where neighbours agree; there are
    ``2 * C(j - 1, t)`` sign sequences with exactly ``t`` agreements.
    """
    total = 0
    for j in range(1, length + 1):
        z = length - j
        for t in range(z, j):
            total += 2 * comb(j - 1, t) * comb(t, z)
    return total


def enumerate_classes(max_len: int, even_only: bool = True) -> list[WordClass]:
    seen: dict[Word, WordClass] = {}
    for w in enumerate_S(max_len, even_only):
        cls = class_of(w)
        seen.setdefault(cls.canonical, cls)
    return sorted(seen.values(), key=lambda c: word_key(c.canonical))


# -- exhaustive parsing --------------------------------------------------------

def _odd_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total + 1, 2):
        for rest in _odd_compositions(total - first, parts - 1):
            yield (first,) + rest


def brute_force_parsings(c: Sequence[int], a: Sequence[int]) -> list[Parsing]:
    """All parsings of ``c`` by ``a`` (first sign +1), trying every cut and sign."""
    from .words import ConnectorWord

    c, a = tuple(c), tuple(a)
    n, m = len(c), len(a)
    found = []
    for k in range(1, n // m + 1):
        for lengths in _odd_compositions(n - k * m, k - 1):
            for rest in product((1, -1), repeat=k - 1):
                signs = (1,) + rest
                pos, conns, ok = 0, [], True
                for i, eps in enumerate(signs):
                    tile = a if i % 2 == 0 else reverse(a)
                    if c[pos:pos + m] != (tile if eps == 1 else negate(tile)):
                        ok = False
                        break
                    pos += m
                    if i < k - 1:
                        piece = c[pos:pos + lengths[i]]
                        total = sum(piece)
                        if connector_word(total) != piece or (total == 0 and eps != signs[i + 1]):
                            ok = False
                            break
                        conns.append(ConnectorWord(total // 2))
                        pos += lengths[i]
                if ok and pos == n:
                    found.append(Parsing(a, signs, tuple(conns)))
    return found


# -- double-parsing search -----------------------------------------------------

def complete_bound(a_len: int, b_len: int) -> int:
    """Length covering the standard-form construction for tiles of these lengths.

    With ``a = (w^p, e)``, ``b = (w^q, e)`` the construction has length at most
    ``(2pq + p + q)|w| + |e| <= |a||b| + |a| + |b|`` because ``|w| >= 2``.
    """
    return a_len * b_len + a_len + b_len


class _TileAutomaton:
    """Tracks the partial parsings of a growing word with respect to a class.

    A state is ``(base, parity, sign, mode, data)``; ``base`` picks ``b`` or
    ``b^-1`` as the first tile, the first tile sign is free.
    """

    def __init__(self, b: Sequence[int]) -> None:
        b = tuple(b)
        bases = [b] if reverse(b) == b else [b, reverse(b)]
        self.pats = [(x, reverse(x)) for x in bases]
        self.m = len(b)
        self.initial = frozenset((bi, 0, eta, "T", 0) for bi in range(len(bases)) for eta in (1, -1))

    def step(self, state: tuple, x: int) -> tuple | None:
        bi, par, eta, mode, d = state
        if mode == "T":
            if d < self.m:
                return (bi, par, eta, "T", d + 1) if x == eta * self.pats[bi][par][d] else None
            return (bi, par, eta, "Z", 0) if x == 0 else (bi, par, eta, "C", x)
        if mode == "Z":
            npar = 1 - par
            return (bi, npar, eta, "T", 1) if x == eta * self.pats[bi][npar][0] else None
        if mode == "C":
            if x == 0:
                return (bi, par, eta, "Cz", d)
            npar = 1 - par
            return (bi, npar, x // self.pats[bi][npar][0], "T", 1)
        return (bi, par, eta, "C", d) if x == d else None  # mode "Cz"

    def feed(self, states: frozenset, piece: Sequence[int]) -> frozenset:
        for x in piece:
            nxt = set()
            for s in states:
                t = self.step(s, x)
                if t is not None:
                    nxt.add(t)
            states = frozenset(nxt)
            if not states:
                break
        return states

    def accepts(self, states: frozenset) -> bool:
        return any(s[3] == "T" and s[4] == self.m for s in states)


@dataclass
class SearchResult:
    """Outcome of a double-parsing search.

    ``witnesses`` holds every minimal word up to equivalence (canonical words);
    ``complete`` is True when the swept length covers :func:`complete_bound`.
    """

    witnesses: list[Word] = field(default_factory=list)
    length: int | None = None
    complete: bool = False
    candidates: int = 0

    @property
    def first(self) -> Word | None:
        return self.witnesses[0] if self.witnesses else None


def _words_of_length(a: Word, auto: _TileAutomaton, length: int, counter: list, budget: SearchBudget,
                     deadline: float) -> Iterator[Word]:
    m = len(a)
    tiles = (a, reverse(a))
    word: list[int] = list(a)

    def rec(tile_idx: int, sign: int, states: frozenset) -> Iterator[Word]:
        counter[0] += 1
        if counter[0] > budget.max_candidates or (counter[0] & 0xFFF == 0 and time.monotonic() > deadline):
            raise BudgetExhausted(f"search stopped after {counter[0]} candidates")
        room = length - len(word)
        if room == 0:
            if auto.accepts(states):
                yield tuple(word)
            return
        nxt_tile = tiles[(tile_idx + 1) % 2]
        max_val = (room - m + 1) // 2
        values = [0] + [v for k in range(1, max_val + 1) for v in (k, -k)]
        for v in values:
            conn = connector_word(2 * v)
            if len(conn) + m > room:
                continue
            for eps in (1, -1):
                if v == 0 and eps != sign:
                    continue
                piece = conn + (nxt_tile if eps == 1 else negate(nxt_tile))
                new_states = auto.feed(states, piece)
                if not new_states:
                    continue
                word.extend(piece)
                yield from rec(tile_idx + 1, eps, new_states)
                del word[len(word) - len(piece):]

    start = auto.feed(auto.initial, a)
    if start:
        yield from rec(0, 1, start)


def minimal_double_parsings(a_hat: WordClass | Sequence[int], b_hat: WordClass | Sequence[int],
                            budget: SearchBudget | None = None) -> SearchResult:
    """All shortest words whose class parses with respect to both classes.

    Lengths are swept upward from the longer tile, by default up to
    :func:`complete_bound`.  Raises :class:`BudgetExhausted` if candidates or
    time run out, or if the length bound ends below the complete bound
    without a witness.
    """
    a = a_hat.canonical if isinstance(a_hat, WordClass) else class_of(a_hat).canonical
    b = b_hat.canonical if isinstance(b_hat, WordClass) else class_of(b_hat).canonical
    if len(a) % 2 or len(b) % 2:
        raise ValueError("double-parsing search needs even-length (knot) classes")
    budget = budget or SearchBudget(max_word_length=complete_bound(len(a), len(b)))
    auto = _TileAutomaton(b)
    starts = [r for r in representatives(a) if r[0] == 2]
    bound = complete_bound(len(a), len(b))
    counter = [0]
    deadline = time.monotonic() + budget.time_limit
    for length in range(max(len(a), len(b)), budget.max_word_length + 1, 2):
        found = set()
        for start in starts:
            for w in _words_of_length(start, auto, length, counter, budget, deadline):
                found.add(class_of(w).canonical)
        if found:
            return SearchResult(sorted(found, key=word_key), length, True, counter[0])
    if budget.max_word_length < bound:
        raise BudgetExhausted(
            f"no witness up to length {budget.max_word_length}, below the complete bound {bound}"
        )
    return SearchResult([], None, True, counter[0])


def search_double_parsing(a_hat: WordClass | Sequence[int], b_hat: WordClass | Sequence[int],
                          budget: SearchBudget | None = None) -> Word | None:
    """Shortest (then least) canonical word parsing with respect to both classes, or None."""
    return minimal_double_parsings(a_hat, b_hat, budget).first


# -- lemma checks ----------------------------------------------------------------

@dataclass
class LemmaReport:
    c: Word
    a: Word
    b: Word
    properties: dict[str, bool]
    mixed_seams: int

    @property
    def passed(self) -> bool:
        return all(self.properties.values())

    def to_dict(self) -> dict:
        return {
            "c": list(self.c),
            "a": list(self.a),
            "b": list(self.b),
            "properties": dict(self.properties),
            "mixed_seams": self.mixed_seams,
            "passed": self.passed,
            "counterexample": None if self.passed else list(self.c),
        }


def literal_double_parsing(c: Sequence[int], a: Sequence[int], b: Sequence[int]) -> tuple[Parsing, Parsing]:
    """Parsings of the literal word ``c`` by some representatives of ``a`` and ``b``."""
    c = tuple(c)
    pa = next((p for r in representatives(a) if (p := parse(c, r)) is not None), None)
    pb = next((p for r in representatives(b) if (p := parse(c, r)) is not None), None)
    if pa is None or pb is None:
        raise NotADoubleParsing(f"{list(c)} does not parse with respect to both words")
    return pa, pb


def _containing(spans: list[Span], start: int, end: int) -> Span | None:
    for s in spans:
        if s.start <= start and end <= s.end:
            return s
    return None


def _placed(c: Word, conn: Span, tile: Span | None) -> bool:
    """``conn`` is a maximal component of ``tile`` or the central zero of one."""
    if tile is None or tile.kind != "tile":
        return False
    rel = (conn.start - tile.start, conn.end - tile.start)
    comps = component_spans(c[tile.start:tile.end])
    if rel in comps:
        return True
    if rel[1] - rel[0] == 1 and c[conn.start] == 0:
        return any(v - u >= 3 and (u + v - 1) // 2 == rel[0] and (v - u) % 4 == 3 for u, v in comps)
    return False


def _component_index(tile_word: Word, tile: Span, start: int) -> int:
    """Index of the maximal component of the un-oriented tile word holding entry ``start``."""
    off = start - tile.start
    if tile.orientation == -1:
        off = len(tile_word) - 1 - off
    for idx, (u, v) in enumerate(component_spans(tile_word)):
        if u <= off < v:
            return idx
    raise AssertionError("offset outside tile")


def verify_parsing_lemmas(c: Sequence[int], a: Sequence[int], b: Sequence[int]) -> LemmaReport:
    """Check the structural properties of a minimal double parsing.

    Properties: no pure seams; a- and b-connectors disjoint; every connector is
    a maximal component (or its central zero) of the other parsing's tile;
    edge connectors uniformly zero or nonzero on the bottom/left and on the
    top/right; no two connectors in the same maximal component of the other
    word; all diagonal sign pairs equal; zero or two mixed seams.
    """
    c = tuple(c)
    pa, pb = literal_double_parsing(c, a, b)
    sa, sb = pa.spans(), pb.spans()
    conn_a = [s for s in sa if s.kind == "connector"]
    conn_b = [s for s in sb if s.kind == "connector"]
    tiles_a = [s for s in sa if s.kind == "tile"]
    tiles_b = [s for s in sb if s.kind == "tile"]
    all_seams = seams(c, pa, pb)
    mixed = sum(1 for s in all_seams if s.kind == "mixed")
    props: dict[str, bool] = {}
    props["no_pure_seams"] = all(s.kind == "mixed" for s in all_seams)
    props["connectors_disjoint"] = all(x.end <= y.start or y.end <= x.start for x in conn_a for y in conn_b)
    props["a_connectors_placed"] = all(_placed(c, s, _containing(sb, s.start, s.end)) for s in conn_a)
    props["b_connectors_placed"] = all(_placed(c, s, _containing(sa, s.start, s.end)) for s in conn_b)

    def values(conns: list[Span], tiles: list[Span], orientation: int) -> list[int]:
        return [sum(c[s.start:s.end]) for s in conns if tiles[s.index].orientation == orientation]

    bottom_left = values(conn_a, tiles_a, -1) + values(conn_b, tiles_b, -1)
    top_right = values(conn_a, tiles_a, 1) + values(conn_b, tiles_b, 1)
    props["edges_bottom_left_uniform"] = len({v == 0 for v in bottom_left}) <= 1
    props["edges_top_right_uniform"] = len({v == 0 for v in top_right}) <= 1

    def distinct_components(conns: list[Span], other: list[Span], tile_word: Word) -> bool:
        seen = set()
        for s in conns:
            host = _containing(other, s.start, s.end)
            if host is None or host.kind != "tile":
                return False
            idx = _component_index(tile_word, host, s.start)
            if idx in seen:
                return False
            seen.add(idx)
        return True

    props["a_connectors_distinct_components"] = distinct_components(conn_a, sb, pb.tile)
    props["b_connectors_distinct_components"] = distinct_components(conn_b, sa, pa.tile)
    sign_ok = True
    for ta in tiles_a:
        for tb in tiles_b:
            if ta.start < tb.end and tb.start < ta.end and ta.sign != tb.sign:
                sign_ok = False
    props["sign_pairs_equal"] = sign_ok
    props["mixed_seams_zero_or_two"] = mixed in (0, 2)
    return LemmaReport(c, pa.tile, pb.tile, props, mixed)


# -- agreement sweep -------------------------------------------------------------

@dataclass(frozen=True)
class SweepRow:
    a: Word
    b: Word
    theorem: bool
    oracle: bool
    witness_length: int | None

    @property
    def agree(self) -> bool:
        return self.theorem == self.oracle

    def to_dict(self) -> dict:
        return {
            "a": list(self.a), "b": list(self.b), "theorem": self.theorem,
            "oracle": self.oracle, "witness_length": self.witness_length, "agree": self.agree,
        }


def _sweep_pair(pair: tuple[Word, Word]) -> SweepRow:
    from .bridge import phi
    from .order import upper_bound_exists

    a, b = pair
    theorem = upper_bound_exists(phi(a), phi(b)).exists
    bound = complete_bound(len(a), len(b))
    res = minimal_double_parsings(a, b, SearchBudget(max_word_length=bound))
    return SweepRow(a, b, theorem, res.first is not None, res.length)


def sweep_pairs(max_len: int, workers: int | None = None) -> Iterator[SweepRow]:
    """Compare the upper-bound predicate with the exhaustive search on all pairs.

    Pairs are unordered (including a class with itself) over even-length
    classes of length <= max_len.  ``workers`` defaults to the
    ``BRIDGE_ORDER_THREADS`` environment variable, else 1.
    """
    classes = [c.canonical for c in enumerate_classes(max_len, even_only=True)]
    pairs = list(combinations_with_replacement(classes, 2))
    if workers is None:
        workers = int(os.environ.get("BRIDGE_ORDER_THREADS", "1") or 1)
    if workers <= 1:
        for pair in pairs:
            yield _sweep_pair(pair)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_sweep_pair, pairs, chunksize=16)
