from fractions import Fraction
from math import gcd

import pytest

from bridgeorder.bridge import (
    UNKNOT,
    TwoBridgeClass,
    equivalent,
    knot_class,
    knot_word,
    phi,
    phi_inverse_knot,
    phi_inverse_link,
)
from bridgeorder.errors import NotAKnot, NotALink
from bridgeorder.oracle import enumerate_S
from bridgeorder.rational import eval_cf
from bridgeorder.words import class_of, negate, representatives, reverse


def brute_class(f):
    # smallest of {±p^±1} mod q, found by scanning residues
    p, q = f.numerator % f.denominator, f.denominator
    cands = [x for x in range(q) if x in (p, (-p) % q) or (x * p) % q in (1, q - 1)]
    return q, min(cands)


def test_knot_class_examples():
    assert knot_class(Fraction(3, 5)) == TwoBridgeClass(5, 2)
    assert knot_class(Fraction(1, 3)) == TwoBridgeClass(3, 1)
    assert knot_class(Fraction(1, 1)) == UNKNOT
    assert str(knot_class(Fraction(4, 7))) == "K(2/7)"


def test_knot_class_against_scan():
    for q in range(2, 60):
        for p in range(-q, 2 * q):
            if gcd(p, q) == 1:
                k = knot_class(Fraction(p, q))
                assert (k.q, k.p) == brute_class(Fraction(p, q))


def test_equivalent():
    assert equivalent(Fraction(2, 5), Fraction(3, 5))
    assert equivalent(Fraction(4, 7), Fraction(2, 7))
    assert not equivalent(Fraction(1, 3), Fraction(1, 5))


def test_phi_examples():
    assert phi((2, -2)).q == 3
    assert phi((2, 2)).q == 5
    assert phi((2, 2, -2, 2, 2)) == knot_class(Fraction(11, 30))
    assert phi(()) == UNKNOT


def test_phi_well_defined():
    for a in enumerate_S(10):
        k = phi(a)
        assert all(phi(r) == k for r in representatives(a))
        assert k.kind == ("knot" if len(a) % 2 == 0 else "link")


def test_reversal_arithmetic():
    for a in enumerate_S(10):
        f, g = eval_cf(0, a), eval_cf(0, reverse(a))
        assert f.denominator == g.denominator
        q = f.denominator
        assert (f.numerator * g.numerator - (-1) ** (len(a) + 1)) % q == 0
        assert eval_cf(0, negate(a)) == -f


def test_inverse_knot_examples():
    assert phi_inverse_knot(knot_class(Fraction(1, 3))) == class_of((2, -2))
    assert phi_inverse_knot(knot_class(Fraction(4, 7))) == class_of((2, -2, 0, -2))
    assert phi_inverse_knot(knot_class(Fraction(24, 41))) == class_of((2, -2, 0, -2, 2, -2, 0, -2))
    with pytest.raises(NotAKnot):
        phi_inverse_knot(knot_class(Fraction(1, 2)))
    with pytest.raises(NotAKnot):
        phi_inverse_knot(UNKNOT)
    assert knot_word(UNKNOT) == ()


def test_inverse_link():
    k = knot_class(Fraction(11, 30))
    assert set(phi_inverse_link(k)) == {class_of((2, 2, -2, 2, 2)), class_of((2, -2, -2, -2, 2))}
    first, second = phi_inverse_link(knot_class(Fraction(1, 2)))
    assert first == second == class_of((2,))
    with pytest.raises(NotALink):
        phi_inverse_link(knot_class(Fraction(1, 3)))
    for q in range(4, 40, 2):
        for p in range(1, q):
            if gcd(p, q) == 1:
                k = knot_class(Fraction(p, q))
                for cls in phi_inverse_link(k):
                    assert phi(cls.canonical) == k
