import itertools
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given

from lievariety.gradedring import (
    NotAUnitError,
    ProjBundleLayer,
    RingMismatchError,
    add,
    degree_part,
    exp_class,
    integrate,
    inverse,
    invert_unit,
    mul,
    ring_g24,
    ring_p3,
    scale,
)
from strategies import G24, P3, any_class, g24_class, p3_class

h = P3.h
c1, c2 = G24.c1, G24.c2


def test_p3_basics():
    assert P3.top_degree == 3
    assert integrate(h ** 3) == 1
    assert integrate(h ** 2) == 0
    assert integrate(P3.zero()) == 0
    assert ring_p3() is P3


def test_g24_pairings():
    assert integrate(c2 ** 2) == 1
    assert integrate(c1 ** 4) == 2
    assert integrate(c1 ** 2 * c2) == 1
    assert integrate(c1 * c2 * c1) == 1
    assert ring_g24() is G24


def test_g24_cubic_rule():
    assert mul(c1, c1 ** 2) == 2 * c1 * c2
    assert integrate(c1 * c1 ** 3) == 2


def test_truncation_and_add():
    assert mul(h ** 2, h ** 2).is_zero()
    assert add(1 + h, -h) == 1
    assert scale(h, Fraction(1, 2)) == h / 2
    assert degree_part(P3.poly([1, 2, 3]), 1) == 2 * h
    assert degree_part(1 + h, 5).is_zero()


def test_invert_unit_examples():
    assert invert_unit(1 + h) == P3.poly([1, -1, 1, -1])
    assert invert_unit(P3.one()) == 1
    s_g = invert_unit((1 - h) ** 4)
    assert s_g == P3.poly([comb(3 + k, k) for k in range(4)])


def test_invert_unit_rejects_non_unit():
    with pytest.raises(NotAUnitError):
        invert_unit(2 + h)
    with pytest.raises(NotAUnitError):
        inverse(h)
    assert inverse(2 + h) * (2 + h) == 1


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        h + c1
    with pytest.raises(RingMismatchError):
        mul(h, c1)


def test_integrate_refuses_layers():
    layer = ProjBundleLayer(P3, 2)
    with pytest.raises(TypeError):
        integrate(layer.xi)


def test_sH_cubic_coefficient():
    # (1+2h)^4 (1+h)^-10, h^3 coefficient expanded by hand
    a = [comb(4, k) * 2 ** k for k in range(4)]
    b = [(-1) ** k * comb(9 + k, k) for k in range(4)]
    expected = sum(a[i] * b[3 - i] for i in range(4))
    sH = (1 + 2 * h) ** 4 * (1 + h) ** -10
    assert expected == 12
    assert degree_part(sH, 3) == 12 * h ** 3


def test_formatting():
    assert str(P3.poly([13, -90, 318, -738])) == "13 - 90h + 318h^2 - 738h^3"
    assert str(1 + 4 * c1 + 10 * c1 ** 2 + 40 * c1 * c2 + 70 * c2 ** 2) == "1 + 4c1 + 10c1^2 + 40c1c2 + 70c2^2"
    assert str(h ** 2 / 2) == "(1/2)h^2"
    assert str(P3.zero()) == "0"


def test_exp_class():
    e = exp_class(-h)
    assert e == P3.poly([1, -1, Fraction(1, 2), Fraction(-1, 6)])
    assert exp_class(h) * e == 1


def test_layer_monomials():
    layer = ProjBundleLayer(P3, 3, "l")
    assert layer.top_degree == 5
    x = layer.xi * layer.lift(h)
    assert layer.coefficients(x) == {1: h}
    assert (layer.xi ** 6).is_zero()


@given(any_class(unit=True))
def test_inverse_property(a):
    assert a * invert_unit(a) == 1


@given(p3_class(), p3_class(), p3_class())
def test_ring_axioms_p3(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(g24_class(), g24_class(), g24_class())
def test_ring_axioms_g24(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_g24_confluence():
    # every degree-4 product of generators, in every order, integrates consistently
    values = {}
    gens = {"c1": c1, "c2": c2}
    for word in (["c1"] * 4, ["c1", "c1", "c2"], ["c2", "c2"]):
        results = set()
        for perm in set(itertools.permutations(word)):
            x = G24.one()
            for g in perm:
                x = x * gens[g]
            results.add(integrate(x))
        assert len(results) == 1
        values[tuple(sorted(word))] = results.pop()
    assert values == {("c1",) * 4: 2, ("c1", "c1", "c2"): 1, ("c2", "c2"): 1}


@given(any_class(), any_class())
def test_truncation_above_top(a, b):
    top = a.ring.top_degree
    for d in range(top + 1):
        for e in range(top + 1):
            if d + e > top and a.ring == b.ring:
                assert (degree_part(a, d) * degree_part(b, e)).is_zero()
