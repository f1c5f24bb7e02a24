"""Expanded even vectors, their equivalence classes and connector components.

Words are tuples of ints.  An *expanded even vector* has every entry in
{-2, 0, 2}, nonzero first and last entries, and each 0 sitting between two
equal nonzero entries.  The empty tuple stands for the unknot and is never
an expanded even vector.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotExpandedError

__all__ = [
    "ConnectorWord",
    "WordClass",
    "class_of",
    "check_expanded",
    "class_key",
    "component_spans",
    "connector_word",
    "contract",
    "expand",
    "is_connector",
    "is_expanded",
    "maximal_components",
    "negate",
    "representatives",
    "reverse",
    "sort_words",
    "word_key",
]

Word = tuple[int, ...]

# entry order used for canonical representatives: 2 < 0 < -2
_RANK = {2: 0, 0: 1, -2: 2}


def word_key(word: Sequence[int]) -> tuple:
    """Sort key: length first, then entries compared with 2 < 0 < -2."""
    return (len(word), tuple(_RANK.get(x, 3) for x in word))


def is_expanded(word: Sequence[int]) -> bool:
    n = len(word)
    if n == 0 or word[0] == 0 or word[-1] == 0:
        return False
    for i, x in enumerate(word):
        if x not in (2, 0, -2):
            return False
        if x == 0 and word[i - 1] != word[i + 1]:
            return False
    return True


def check_expanded(word: Sequence[int], what: str = "word") -> Word:
    word = tuple(word)
    if not is_expanded(word):
        raise NotExpandedError(f"{what} {list(word)} is not an expanded even vector")
    return word


def negate(word: Sequence[int]) -> Word:
    return tuple(-x for x in word)


def reverse(word: Sequence[int]) -> Word:
    return tuple(reversed(word))


def representatives(word: Sequence[int]) -> list[Word]:
    """``[a, -a, a^-1, -a^-1]`` with duplicates removed, order preserved."""
    word = tuple(word)
    out: list[Word] = []
    for w in (word, negate(word), reverse(word), negate(reverse(word))):
        if w not in out:
            out.append(w)
    return out


def expand(word: Sequence[int]) -> Word:
    """Replace each ``±2k`` by ``k`` copies of ``±2`` separated by zeros."""
    out: list[int] = []
    for x in word:
        if x == 0 or x % 2:
            raise ValueError(f"entries must be nonzero and even, got {x}")
        s = 2 if x > 0 else -2
        k = abs(x) // 2
        out.append(s)
        for _ in range(k - 1):
            out.extend((0, s))
    return tuple(out)


def contract(word: Sequence[int]) -> Word:
    """Remove zeros via ``[..., x, 0, y, ...] -> [..., x + y, ...]``."""
    check_expanded(word)
    out: list[int] = []
    i = 0
    n = len(word)
    while i < n:
        if word[i] == 0:
            out[-1] += word[i + 1]
            i += 2
        else:
            out.append(word[i])
            i += 1
    return tuple(out)


def is_connector(word: Sequence[int]) -> bool:
    """Membership in {(0), ±(2), ±(2,0,2), ...}."""
    if tuple(word) == (0,):
        return True
    if not word or len(word) % 2 == 0 or word[0] not in (2, -2):
        return False
    s = word[0]
    return all(x == (s if i % 2 == 0 else 0) for i, x in enumerate(word))


def connector_word(total: int) -> Word:
    """The connector whose entries add up to ``total`` (an even integer)."""
    if total % 2:
        raise ValueError(f"connector sums are even, got {total}")
    if total == 0:
        return (0,)
    s = 2 if total > 0 else -2
    k = abs(total) // 2
    return (s,) + (0, s) * (k - 1)


@dataclass(frozen=True, order=True)
class ConnectorWord:
    """A connector carrying the value ``c`` where its entries add to ``2c``."""

    value: int

    @property
    def word(self) -> Word:
        return connector_word(2 * self.value)

    @classmethod
    def from_word(cls, word: Sequence[int]) -> "ConnectorWord":
        if not is_connector(word):
            raise ValueError(f"{list(word)} is not a connector")
        return cls(sum(word) // 2)

    def __len__(self) -> int:
        return 2 * abs(self.value) - 1 if self.value else 1


def maximal_components(word: Sequence[int]) -> list[ConnectorWord]:
    """Split a word into maximal runs of the form ±(2,0,2,...,0,2)."""
    word = tuple(word)
    if word == (0,):
        return [ConnectorWord(0)]
    check_expanded(word)
    return [ConnectorWord(sum(word[i:j]) // 2) for i, j in component_spans(word)]


def component_spans(word: Sequence[int]) -> list[tuple[int, int]]:
    """Half-open index ranges of the maximal components of ``word``."""
    spans = []
    i, n = 0, len(word)
    while i < n:
        j = i + 1
        while j + 1 < n and word[j] == 0 and word[j + 1] == word[i]:
            j += 2
        spans.append((i, j))
        i = j
    return spans


@dataclass(frozen=True)
class WordClass:
    """An expanded even vector up to negation and reversal."""

    canonical: Word

    @property
    def parity(self) -> str:
        return "knot" if len(self.canonical) % 2 == 0 else "link"

    @property
    def length(self) -> int:
        return len(self.canonical)

    def members(self) -> list[Word]:
        return representatives(self.canonical)

    def __contains__(self, word: object) -> bool:
        return isinstance(word, tuple) and word in self.members()

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.canonical) + "]"


def class_key(cls: WordClass) -> tuple:
    return word_key(cls.canonical)


def class_of(word: Sequence[int]) -> WordClass:
    word = check_expanded(word)
    return WordClass(min(representatives(word), key=word_key))


def sort_words(words: Iterable[Sequence[int]]) -> list[Word]:
    return sorted((tuple(w) for w in words), key=word_key)
