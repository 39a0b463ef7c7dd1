import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedtoda.algebra import SpecError, bilinear_forms
from gradedtoda.enveloping import (
    UeaElement,
    casimir,
    casimir_suite,
    check_central,
    printed_casimirs,
    uea_multiply,
    word,
)
from gradedtoda.algebra import BilinearForm
from gradedtoda import gmatrix as gm
from gradedtoda.grading import G00


def gen(spec, name):
    return UeaElement.generator(spec, name)


def test_rewriting_examples(sl2):
    assert (gen(sl2, "E+") * gen(sl2, "E-")).text() == "E+ E-"
    assert gen(sl2, "E-") * gen(sl2, "E+") == word(sl2, "E+", "E-") - gen(sl2, "H")
    assert gen(sl2, "D-") * gen(sl2, "E+") == -word(sl2, "E+", "D-") + gen(sl2, "Z")


def test_normal_order_is_sorted(sl2):
    x = word(sl2, "D-", "E+", "H", "Z")
    for mono in x.terms:
        assert list(mono) == sorted(mono)


def test_casimirs(sl2):
    g, eta = bilinear_forms(sl2)
    rep = casimir_suite(sl2, g, eta)
    assert rep.passed
    c00 = casimir(g.inverse(), sl2)
    assert c00.text() == "1/2 H^2 + 1/2 Z^2 + 2 E+ E- + 2 D+ D- - 2 H"
    assert casimir(eta.inverse(), sl2).text() == "H Z + 2 E+ D- - 2 E- D+"
    p00, p11 = printed_casimirs(sl2)
    assert c00 == p00


def test_zero_form(sl2):
    zero = BilinearForm(gm.zeros(6), G00, sl2.names)
    assert casimir(zero, sl2).is_zero()


def test_h_squared_not_central(sl2):
    h2 = gen(sl2, "H") * gen(sl2, "H")
    rep = check_central(h2, sl2)
    assert not rep.passed
    expected = word(sl2, "E+", "H", coeff=4) + gen(sl2, "E+").scaled(4)
    assert rep.details["residuals"]["E+"] == expected.text()


def test_degree_cap(sl2):
    x = word(sl2, "H", "Z", "E+", "E-")
    with pytest.raises(SpecError):
        uea_multiply(x, x, sl2)


names = st.sampled_from(["H", "Z", "E+", "E-", "D+", "D-"])
monos = st.lists(names, min_size=0, max_size=2)
coeffs = st.integers(-3, 3)
elems = st.lists(st.tuples(coeffs, monos), min_size=1, max_size=3)


def build(spec, data):
    out = UeaElement(spec)
    for c, m in data:
        out = out + (word(spec, *m, coeff=c) if m else UeaElement.scalar(spec, c))
    return out


@settings(max_examples=60, deadline=None)
@given(elems, elems, elems)
def test_associativity(sl2, a, b, c):
    x, y, z = build(sl2, a), build(sl2, b), build(sl2, c)
    assert (x * y) * z == x * (y * z)


@settings(max_examples=40, deadline=None)
@given(st.lists(names, min_size=1, max_size=3))
def test_monomial_grading_is_additive(sl2, ns):
    x = word(sl2, *ns)
    g = G00
    for n in ns:
        g = g + sl2.grading_of(n)
    assert x.grading() == g
