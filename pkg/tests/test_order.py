from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bridgeorder.bridge import UNKNOT, knot_class, phi
from bridgeorder.errors import LinkNotOrdered, NoUpperBound
from bridgeorder.oracle import enumerate_S, enumerate_classes
from bridgeorder.order import (
    StdForm,
    compare,
    construct_upper_bound,
    incomparable_partners,
    lower_bounds,
    minimal_std_form,
    shortest_lubs,
    std_form_family,
    std_forms,
    upper_bound_exists,
)
from bridgeorder.parsing import parse_class
from bridgeorder.words import class_of, is_expanded

from conftest import A1, B1, C1

TREFOIL = knot_class(Fraction(1, 3))
FIG8 = knot_class(Fraction(3, 5))
W = A1  # tile of the 28-entry reference word


def K(text):
    n, d = text.split("/")
    return knot_class(Fraction(int(n), int(d)))


def twos(n, alternating=False):
    return tuple(2 if (i % 2 == 0 or not alternating) else -2 for i in range(n))


# -- compare -------------------------------------------------------------------

def test_compare_examples():
    rel = compare(K("322892/551327"), K("4/7"))
    assert rel.relation == "greater"
    assert rel.witness.tile_count == 5
    assert compare(TREFOIL, TREFOIL).relation == "equal"
    assert compare(TREFOIL, FIG8).relation == "incomparable"
    assert compare(K("4/7"), K("322892/551327")).relation == "less"


def test_compare_unknot_and_links():
    assert compare(TREFOIL, UNKNOT).relation == "greater"
    assert compare(UNKNOT, FIG8).relation == "less"
    with pytest.raises(LinkNotOrdered):
        compare(TREFOIL, K("1/2"))
    with pytest.raises(LinkNotOrdered):
        lower_bounds(K("11/30"))


def test_order_axioms_small():
    knots = [phi(c.canonical) for c in enumerate_classes(8)]
    for k in knots:
        assert compare(k, k).relation == "equal"
    flip = {"greater": "less", "less": "greater", "equal": "equal", "incomparable": "incomparable"}
    for k1, k2 in combinations(knots, 2):
        r = compare(k1, k2).relation
        assert r != "equal"
        assert compare(k2, k1).relation == flip[r]


def test_transitivity_on_chains():
    for cls in enumerate_classes(12):
        if len(cls.canonical) < 8:
            continue
        k = phi(cls.canonical)
        below = set(lower_bounds(k))
        for x in below:
            assert set(lower_bounds(x)) <= below


# -- lower bounds ----------------------------------------------------------------

def test_lower_bounds_example1():
    j = phi(C1)
    assert lower_bounds(j) == [K("4/7"), K("24/41"), j]
    # 3 and 5 divide 15 but 7 does not, so w^3 is not below w^7
    w7 = W * 7
    assert set(lower_bounds(phi(w7))) == {phi(W), phi(W * 2), phi(w7)}
    assert set(lower_bounds(phi(W * 4))) == {phi(W), phi(W * 4)}


def test_lower_bounds_small():
    assert lower_bounds(TREFOIL) == [TREFOIL]
    assert lower_bounds(FIG8, include_unknot=True) == [UNKNOT, FIG8]


# -- standard forms --------------------------------------------------------------

def test_std_form_examples():
    assert std_forms((2, 2)) == [StdForm((), 2, 2, 1)]
    assert std_forms(B1) == [StdForm((), 2, -4, 2)]
    # only one form: e = [2,2] would need (2l+1)q + l = 3 with l = 1
    assert std_forms((2,) * 6) == [StdForm((), 2, 2, 3)]
    assert [(f.e, f.exponent) for f in std_forms((2,) * 14)] == [((), 7), ((2, 2), 2), ((2,) * 4, 1)]
    assert std_forms((2, 2, 0, 2, -2, 2)) == []


def test_std_form_words_reassemble():
    for a in enumerate_S(10, even_only=True):
        for f in std_forms(a):
            assert f.word() == a and f.exponent >= 1


def family_law_holds(a):
    forms = std_forms(a)
    if not forms:
        return True
    assert len({(f.m, f.n) for f in forms}) == 1
    return forms == std_form_family(minimal_std_form(a))


def test_family_law_exhaustive():
    assert all(family_law_holds(a) for a in enumerate_S(10, even_only=True))


bases = st.builds(
    lambda e, m, n: (e, m, n),
    st.sampled_from([(), (2, 2), (2, -2), (2, 0, 2, -2), (-2, 2, 2, 2)]),
    st.sampled_from([0, 2, -2, 4, -4, 6]),
    st.sampled_from([2, -2, 4, -4, 0]),
)


@settings(max_examples=200, deadline=None)
@given(bases, st.integers(1, 6))
def test_family_law_random(base, q):
    e, m, n = base
    a = StdForm(e, m, n, q).word()
    if not is_expanded(a):
        return
    assert family_law_holds(a)
    assert StdForm(e, m, n, q) in std_forms(a)


@pytest.mark.parametrize("base", [((), 2, 2), ((), 2, -2), ((), 2, -4), ((2, 2), 2, 2), ((2, -2), 0, 2)])
def test_divisibility_law(base):
    form = StdForm(*base, 1)
    for p in range(1, 8):
        for q in range(1, 8):
            big, small = form.word(p), form.word(q)
            assert (parse_class(big, small) is not None) == ((2 * p + 1) % (2 * q + 1) == 0)


# -- upper bounds ----------------------------------------------------------------

def test_upper_bound_examples():
    assert not upper_bound_exists(TREFOIL, FIG8)
    cert = upper_bound_exists(K("4/7"), K("24/41"))
    assert cert.kind == "std-form" and (cert.p, cert.q) == (1, 2)
    assert StdForm(cert.e, cert.m, cert.n, 1).word() in class_of(W).members()
    cert = upper_bound_exists(FIG8, phi(twos(4)))
    assert cert and (cert.p, cert.q) == (1, 2) and cert.e == ()
    cert = upper_bound_exists(phi(C1), K("4/7"))
    assert cert.kind == "comparable" and cert.larger == phi(C1)


def test_equal_length_never_bounded():
    for n in (2, 4, 6, 8):
        classes = [c for c in enumerate_classes(n) if len(c.canonical) == n]
        for x, y in combinations(classes, 2):
            assert not upper_bound_exists(phi(x.canonical), phi(y.canonical))


def test_construct_examples():
    c = construct_upper_bound([K("4/7"), K("24/41")])
    assert len(c) == 28 and c in class_of(W * 7).members()
    assert construct_upper_bound([FIG8, phi(twos(4))]) == twos(14)
    assert construct_upper_bound([TREFOIL]) == class_of((2, -2)).canonical
    assert construct_upper_bound([TREFOIL, phi(twos(4, True))]) in class_of(twos(14, True)).members()
    with pytest.raises(NoUpperBound):
        construct_upper_bound([TREFOIL, FIG8])
    # comparable inputs collapse to the larger knot
    assert construct_upper_bound([K("4/7"), phi(C1)]) == class_of(C1).canonical


def test_shortest_lubs_examples():
    lubs = shortest_lubs(K("4/7"), K("24/41"))
    assert len(lubs) == 4
    assert any(C1 in class_of(w).members() for w in lubs)
    assert twos(14) in shortest_lubs(FIG8, phi(twos(4)))
    for w in lubs:
        assert parse_class(w, A1) and parse_class(w, B1)


# -- partners --------------------------------------------------------------------

def test_partner_examples():
    assert incomparable_partners(FIG8, 6) == [phi(twos(2 * n)) for n in (2, 3, 5, 6)]
    assert incomparable_partners(TREFOIL, 6) == [phi(twos(2 * n, True)) for n in (2, 3, 5, 6)]
    assert incomparable_partners(phi((2, 2, 0, 2, -2, 2)), 6) == []
    for x in incomparable_partners(K("4/7"), 4):
        assert compare(x, K("4/7")).relation == "incomparable"
        assert upper_bound_exists(x, K("4/7"))
