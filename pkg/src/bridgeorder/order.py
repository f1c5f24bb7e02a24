"""The partial order on 2-bridge knots, standard forms and upper bounds.

``K1 >= K2`` when the word class of ``K1`` parses with respect to the word
class of ``K2``.  Pairs of incomparable knots have an upper bound exactly
when representatives can be written as ``(w^p, e)`` and ``(w^q, e)`` with
``w = (e, m, e^-1, n)`` for a common ``e`` and connectors ``m``, ``n``; the
word ``(w^Q, e)`` with ``2Q + 1 = lcm(2p + 1, 2q + 1)`` then parses with
respect to both.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence

from .bridge import UNKNOT, TwoBridgeClass, knot_word, phi
from .errors import LinkNotOrdered, NoUpperBound
from .parsing import Parsing, parse, parse_class, seams
from .words import (
    check_expanded,
    connector_word,
    is_connector,
    is_expanded,
    negate,
    representatives,
    reverse,
    word_key,
)

__all__ = [
    "OrderRelation",
    "StdForm",
    "UpperBoundCertificate",
    "compare",
    "construct_upper_bound",
    "incomparable_partners",
    "lower_bounds",
    "minimal_std_form",
    "shortest_lubs",
    "std_form_family",
    "std_forms",
    "upper_bound_exists",
]

Word = tuple[int, ...]


@dataclass(frozen=True)
class StdForm:
    """``a = ((e, m, e^-1, n)^exponent, e)``; ``m`` and ``n`` are connector sums."""

    e: Word
    m: int
    n: int
    exponent: int

    @property
    def base(self) -> tuple[Word, int, int]:
        return (self.e, self.m, self.n)

    def period(self) -> Word:
        return self.e + connector_word(self.m) + reverse(self.e) + connector_word(self.n)

    def word(self, exponent: int | None = None) -> Word:
        q = self.exponent if exponent is None else exponent
        return self.period() * q + self.e

    def to_dict(self) -> dict:
        return {"e": list(self.e), "m": self.m, "n": self.n, "exponent": self.exponent}


@dataclass(frozen=True)
class OrderRelation:
    left: TwoBridgeClass
    right: TwoBridgeClass
    relation: str  # "greater", "less", "equal", "incomparable"
    witness: Parsing | None = None

    def to_dict(self) -> dict:
        return {
            "left": str(self.left),
            "right": str(self.right),
            "relation": self.relation,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


@dataclass(frozen=True)
class UpperBoundCertificate:
    """Why a pair of knots does (or does not) have an upper bound.

    ``kind`` is ``"comparable"`` (``larger`` is itself the bound),
    ``"std-form"`` (``a``/``b`` are representatives sharing ``form``'s base
    with exponents ``p``/``q``) or ``"none"``.
    """

    exists: bool
    kind: str
    larger: TwoBridgeClass | None = None
    a: Word = ()
    b: Word = ()
    e: Word = ()
    m: int = 0
    n: int = 0
    p: int = 0
    q: int = 0

    def __bool__(self) -> bool:
        return self.exists

    def to_dict(self) -> dict:
        out: dict = {"exists": self.exists, "kind": self.kind}
        if self.kind == "comparable":
            out["larger"] = str(self.larger)
        elif self.kind == "std-form":
            out.update(
                a=list(self.a), b=list(self.b), e=list(self.e),
                m=self.m, n=self.n, p=self.p, q=self.q,
            )
        return out


def _require_knot(*ks: TwoBridgeClass) -> None:
    for k in ks:
        if not k.is_knot:
            raise LinkNotOrdered(f"{k} is a link; the order is defined on knots only")


def compare(k1: TwoBridgeClass, k2: TwoBridgeClass) -> OrderRelation:
    _require_knot(k1, k2)
    if k1 == k2:
        return OrderRelation(k1, k2, "equal")
    if k2 == UNKNOT:
        return OrderRelation(k1, k2, "greater")
    if k1 == UNKNOT:
        return OrderRelation(k1, k2, "less")
    w1, w2 = knot_word(k1), knot_word(k2)
    if len(w1) > len(w2):
        p = parse_class(w1, w2)
        if p is not None:
            return OrderRelation(k1, k2, "greater", p)
    elif len(w2) > len(w1):
        p = parse_class(w2, w1)
        if p is not None:
            return OrderRelation(k1, k2, "less", p)
    return OrderRelation(k1, k2, "incomparable")


def _sorted_knots(ks: Iterable[TwoBridgeClass]) -> list[TwoBridgeClass]:
    return sorted(set(ks), key=lambda k: (word_key(knot_word(k)), k))


def lower_bounds(k: TwoBridgeClass, include_unknot: bool = False) -> list[TwoBridgeClass]:
    """Every knot ``k'`` with ``k >= k'``, ``k`` itself included."""
    _require_knot(k)
    found: set[TwoBridgeClass] = {k}
    if k != UNKNOT:
        for c in representatives(knot_word(k)):
            for length in range(2, len(c), 2):
                prefix = c[:length]
                if is_expanded(prefix) and parse(c, prefix) is not None:
                    found.add(phi(prefix))
    if include_unknot:
        found.add(UNKNOT)
    else:
        found.discard(UNKNOT)
    return _sorted_knots(found)


def std_forms(a: Sequence[int]) -> list[StdForm]:
    """Every way to write ``a = ((e, m, e^-1, n)^q, e)`` with ``q >= 1``.

    Brute force over the length of ``e`` and the lengths of the two
    connectors; a candidate counts when it reassembles to ``a`` exactly.
    """
    a = check_expanded(a)
    size = len(a)
    out = []
    for e_len in range(0, size, 2):
        e = a[:e_len]
        if e_len and (a[size - e_len:] != e or not is_expanded(e)):
            continue
        e_inv = reverse(e)
        for m_len in range(1, size - 2 * e_len, 2):
            m_word = a[e_len:e_len + m_len]
            if not is_connector(m_word):
                continue
            pos = e_len + m_len
            if a[pos:pos + e_len] != e_inv:
                continue
            pos += e_len
            for n_len in range(1, size - pos + 1, 2):
                n_word = a[pos:pos + n_len]
                if not is_connector(n_word):
                    continue
                period = 2 * e_len + m_len + n_len
                if (size - e_len) % period:
                    continue
                form = StdForm(e, sum(m_word), sum(n_word), (size - e_len) // period)
                if form.word() == a:
                    out.append(form)
    out.sort(key=lambda f: (len(f.e), f.exponent))
    return out


def minimal_std_form(a: Sequence[int]) -> StdForm | None:
    forms = std_forms(a)
    return forms[0] if forms else None


def std_form_family(minimal: StdForm) -> list[StdForm]:
    """All standard forms generated from the shortest one.

    ``e = ((e0, m, e0^-1, n)^l, e0)`` with exponent ``q`` whenever
    ``(2l + 1) q + l = q0``.
    """
    q0 = minimal.exponent
    out = []
    for l in range(q0):
        q, rem = divmod(q0 - l, 2 * l + 1)
        if rem == 0 and q >= 1:
            out.append(StdForm(minimal.word(l), minimal.m, minimal.n, q))
    out.sort(key=lambda f: (len(f.e), f.exponent))
    return out


def upper_bound_exists(k1: TwoBridgeClass, k2: TwoBridgeClass) -> UpperBoundCertificate:
    _require_knot(k1, k2)
    rel = compare(k1, k2)
    if rel.relation in ("equal", "greater"):
        return UpperBoundCertificate(True, "comparable", larger=k1)
    if rel.relation == "less":
        return UpperBoundCertificate(True, "comparable", larger=k2)
    for a in representatives(knot_word(k1)):
        forms_a = std_forms(a)
        if not forms_a:
            continue
        for b in representatives(knot_word(k2)):
            by_base = {f.base: f for f in std_forms(b)}
            for fa in forms_a:
                fb = by_base.get(fa.base)
                if fb is not None:
                    return UpperBoundCertificate(
                        True, "std-form", a=a, b=b, e=fa.e, m=fa.m, n=fa.n,
                        p=fa.exponent, q=fb.exponent,
                    )
    return UpperBoundCertificate(False, "none")


def _prune(ks: Sequence[TwoBridgeClass]) -> list[TwoBridgeClass]:
    """Drop duplicates and any knot below another one in the list."""
    uniq = _sorted_knots(ks)
    keep = []
    for k in uniq:
        if not any(o != k and compare(o, k).relation == "greater" for o in uniq):
            keep.append(k)
    return keep


def construct_upper_bound(ks: Sequence[TwoBridgeClass]) -> Word:
    """A word ``(w^Q, e0)`` whose knot is an upper bound of every knot in ``ks``.

    Comparable knots are pruned first; a single survivor is returned as its
    own word (the empty word for the unknot).
    """
    if not ks:
        raise ValueError("need at least one knot")
    _require_knot(*ks)
    keep = _prune(ks)
    if len(keep) == 1:
        return knot_word(keep[0])
    for i, k in enumerate(keep):
        for other in keep[i + 1:]:
            if not upper_bound_exists(k, other):
                raise NoUpperBound(f"{k} and {other} have no common upper bound")
    first, rest = keep[0], keep[1:]
    for a in representatives(knot_word(first)):
        base = minimal_std_form(a)
        if base is None:
            continue
        moduli = [2 * base.exponent + 1]
        for k in rest:
            exp = _exponent_over(k, base)
            if exp is None:
                break
            moduli.append(2 * exp + 1)
        else:
            top = (lcm(*moduli) - 1) // 2
            word = base.word(top)
            for k in keep:
                if parse_class(word, knot_word(k)) is None:
                    raise AssertionError(f"constructed bound does not parse with respect to {k}")
            return word
    raise NoUpperBound("no common standard-form base for " + ", ".join(map(str, keep)))


def _exponent_over(k: TwoBridgeClass, base: StdForm) -> int | None:
    for b in representatives(knot_word(k)):
        for f in std_forms(b):
            if f.base == base.base:
                return f.exponent
    return None


def _lub_seed(k1: TwoBridgeClass, k2: TwoBridgeClass) -> tuple[Word, Word, Word]:
    cert = upper_bound_exists(k1, k2)
    if not cert:
        raise NoUpperBound(f"{k1} and {k2} have no common upper bound")
    if cert.kind == "comparable":
        raise ValueError(f"{k1} and {k2} are comparable; the larger one is the least upper bound")
    form = StdForm(cert.e, cert.m, cert.n, 1)
    top = (lcm(2 * cert.p + 1, 2 * cert.q + 1) - 1) // 2
    return form.word(top), cert.a, cert.b


def shortest_lubs(k1: TwoBridgeClass, k2: TwoBridgeClass) -> list[Word]:
    """Shortest words parsing with respect to both knots.

    One comes from the standard-form construction; when it has two mixed
    seams the others come from negating the entries between the seams, after
    the second seam, or both.
    """
    c, a, b = _lub_seed(k1, k2)
    pa, pb = parse(c, a), parse(c, b)
    if pa is None or pb is None:
        raise AssertionError("construction does not double-parse")
    mixed = [s.position for s in seams(c, pa, pb) if s.kind == "mixed"]
    candidates = [c]
    if len(mixed) == 2:
        i, j = mixed
        mid = c[:i] + negate(c[i:j]) + c[j:]
        tail = c[:j] + negate(c[j:])
        both = c[:i] + negate(c[i:])
        candidates += [mid, tail, both]
    w1, w2 = knot_word(k1), knot_word(k2)
    out = []
    for w in candidates:
        if w not in out and is_expanded(w) and parse_class(w, w1) and parse_class(w, w2):
            out.append(w)
    return sorted(out, key=word_key)


def incomparable_partners(k: TwoBridgeClass, q_max: int) -> list[TwoBridgeClass]:
    """Knots incomparable to ``k`` that share an upper bound with it.

    Partners are ``(w^q, e)`` for every standard form ``(w^p, e)`` of a
    representative of ``k``, ``1 <= q <= q_max``, with neither of ``2p + 1``
    and ``2q + 1`` dividing the other.
    """
    _require_knot(k)
    if k == UNKNOT:
        return []
    found: set[TwoBridgeClass] = set()
    for a in representatives(knot_word(k)):
        for form in std_forms(a):
            p2 = 2 * form.exponent + 1
            for q in range(1, q_max + 1):
                q2 = 2 * q + 1
                if p2 % q2 and q2 % p2:
                    found.add(phi(form.word(q)))
    return _sorted_knots(found)
