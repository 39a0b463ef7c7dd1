import random

from hypothesis import given, settings, strategies as st

from gradedtoda.fieldexpr import (Expr, Sample, cos, cosh, exp, field_sym, random_equal, sin, sinh,
                                  split_field, sym, unit_parts, unit_sym)
from gradedtoda import gmatrix as gm
from gradedtoda.grading import G00, G01, G10, G11
from gradedtoda.quat import Quat, matrices
from gradedtoda.scalars import q


def test_derivative_of_exp_is_chain_rule():
    e = exp(sym("phi00")).d("ubar")
    assert e.equals(Expr.of(field_sym("phi00", "ubar")) * exp(sym("phi00")))


def test_derivative_of_cosh_carries_shifted_grading():
    e = cosh(sym("phi11")).d("ubar")
    expected = Expr.of(field_sym("phi11", "ubar")) * sinh(sym("phi11"))
    assert e.equals(expected)
    assert field_sym("phi11", "ubar").grading == G01
    # the derivative of a [00] quantity along a [10] coordinate is [10]
    assert e.grading() == G10


def test_mixed_partials_commute():
    a, b = sym("phi00"), sym("phi11")
    e = exp(2 * a) * sinh(2 * b) + a * b * cosh(b)
    assert e.d("u").d("ubar").equals(e.d("ubar").d("u"))


def test_cosh_squared_minus_sinh_squared():
    b = sym("phi11")
    assert (cosh(b) * cosh(b) - sinh(b) * sinh(b)).canonical().equals(Expr.const(1))
    f = sym("f01")
    assert (cos(f) * cos(f) + sin(f) * sin(f)).equals(Expr.const(1))


def test_odd_symbols_anticommute():
    a, b = sym("f10"), sym("f01")
    assert (a * b + b * a).is_zero()
    c = sym("f11")
    assert (a * c + c * a).is_zero()
    assert (a * sym("f10") - sym("f10") * a).is_zero()


def test_graded_derivative_sign():
    # d_u passes a [01] factor with a sign
    a, b = sym("f01"), sym("phi00")
    e = (a * b).d("u")
    expected = Expr.of(field_sym("f01", "u")) * b - a * Expr.of(field_sym("phi00", "u"))
    assert e.equals(expected)


def test_tidy_folds_double_angles():
    b = sym("phi11")
    e = (cosh(b) * cosh(b) + sinh(b) * sinh(b)).canonical()
    assert e.tidy().text() == "cosh(2*phi11)"
    a = sym("phi00")
    assert (exp(2 * a) - exp(-2 * a)).tidy().text() == "2*sinh(2*phi00)"


def test_unit_split_trades_hyperbolic_for_trig():
    P = unit_sym("P", G10)
    phi11, f11, f01 = field_sym("phi11"), field_sym("f11"), field_sym("f01")
    e = split_field(cosh(2 * sym(phi11)), phi11, f11, P, f01)
    a, b = unit_parts(e.canonical(), P)
    assert a.equals(cosh(2 * sym(f11)) * cos(2 * sym(f01)))
    assert b.equals(-(sinh(2 * sym(f11)) * sin(2 * sym(f01))))


def test_m_basis_matches_matrices():
    mats = matrices()
    for g1 in (G00, G10, G01, G11):
        for g2 in (G00, G10, G01, G11):
            prod = (Quat.basis(g1, q(1)) * Quat.basis(g2, q(1))).matrix()
            assert gm.equal(prod, mats[g1] @ mats[g2])


_names = ["phi00", "phi11", "f10", "f01"]


@st.composite
def expressions(draw):
    e = Expr()
    for _ in range(draw(st.integers(1, 3))):
        t = Expr.const(draw(st.integers(-3, 3)))
        for _ in range(draw(st.integers(0, 3))):
            n = draw(st.sampled_from(_names))
            kind = draw(st.sampled_from(["sym", "cosh", "sinh", "cos", "sin", "exp"]))
            k = draw(st.integers(-2, 2)) or 1
            s = sym(n)
            if kind == "sym":
                t = t * s
            elif kind == "exp":
                t = t * exp(k * sym("phi00"))
            else:
                t = t * {"cosh": cosh, "sinh": sinh, "cos": cos, "sin": sin}[kind](k * s)
        e = e + t
    return e


@settings(max_examples=40, deadline=None)
@given(expressions(), st.integers(0, 10_000))
def test_canonical_form_preserves_value(e, seed):
    ok, _ = random_equal(e, e.canonical(), samples=5, seed=seed)
    assert ok


@settings(max_examples=40, deadline=None)
@given(expressions(), expressions(), st.integers(0, 10_000))
def test_evaluation_is_multiplicative(a, b, seed):
    smp = Sample(True, rng=random.Random(seed))
    left = (a * b).evaluate(smp)
    right = a.evaluate(smp) * b.evaluate(smp)
    assert all(not bool(v) for v in (left - right).c.values())


@settings(max_examples=30, deadline=None)
@given(expressions())
def test_tidy_preserves_value(e):
    assert e.tidy().equals(e)
