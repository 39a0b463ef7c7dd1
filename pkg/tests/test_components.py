from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gradedtoda import printed
from gradedtoda.components import (ComponentError, components_from_f, component_suite, decouple,
                                   expand_eom, f_from_components, graded_system, lhs_identity,
                                   matrix_reduce, matrix_suite)
from gradedtoda.fieldexpr import Expr, field_sym, random_equal
from gradedtoda.lax import build_lax, derive_eom


@pytest.fixture(scope="module")
def liouville8():
    return expand_eom(graded_system("liouville"))


@pytest.fixture(scope="module")
def sinh8():
    return expand_eom(graded_system("sinh"))


@pytest.mark.parametrize("s", [1, -1])
def test_liouville_components_match_print(liouville8, s):
    assert liouville8[s].equals(printed.liouville_components(s))
    for f, r in printed.liouville_components(s).equations:
        assert random_equal(liouville8[s].rhs(f.name), r, samples=100, seed=3)[0]


def test_sinh_components_flag_exactly_the_known_typos(sinh8):
    bad = [f.name for f, r in printed.sinh_components(1).equations if not sinh8[1].rhs(f.name).equals(r)]
    assert bad == ["f10", "f11"]


def test_sinh_f10_line_with_restored_factors(sinh8):
    from gradedtoda.fieldexpr import cos, cosh, sin, sinh, sym
    f00, f10, f01, f11 = (sym(n) for n in ("f00", "f10", "f01", "f11"))
    fixed = (cosh(2 * f00) * sinh(2 * f10) * cosh(2 * f11) * cos(2 * f01)).scaled(2) \
        - (sinh(2 * f00) * cosh(2 * f10) * sinh(2 * f11) * sin(2 * f01)).scaled(2)
    assert sinh8[1].rhs("f10").equals(fixed)


def test_sinh_f11_line_with_f10(sinh8):
    from gradedtoda.fieldexpr import cos, cosh, sin, sinh, sym
    f00, f10, f01, f11 = (sym(n) for n in ("f00", "f10", "f01", "f11"))
    fixed = (cosh(2 * f00) * cosh(2 * f10) * sinh(2 * f11) * cos(2 * f01)).scaled(2) \
        + (sinh(2 * f00) * sinh(2 * f10) * cosh(2 * f11) * sin(2 * f01)).scaled(2)
    assert sinh8[1].rhs("f11").equals(fixed)


@pytest.mark.parametrize("model", ["liouville", "sinh"])
def test_truncation_closes(model):
    systems = expand_eom(graded_system(model))
    zero = {field_sym("f11"): Expr(), field_sym("f01"): Expr()}
    for eom in systems.values():
        for n in ("f11", "f01"):
            assert eom.rhs(n).subs(zero).canonical().is_zero()


def test_expand_rejects_other_systems():
    with pytest.raises(ComponentError):
        expand_eom(derive_eom(build_lax("sinh", "phi")))


def test_lhs_identity():
    assert lhs_identity(seed=5).ok


@settings(max_examples=50, deadline=None)
@given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=9), min_size=8, max_size=8),
       st.fractions(min_value=Fraction(1, 9), max_value=9, max_denominator=9),
       st.fractions(min_value=Fraction(-9), max_value=Fraction(-1, 9), max_denominator=9))
def test_f_map_round_trip(vals, x, xb):
    names = ("a00", "b00", "a10", "b10", "a11", "b11", "a01", "b01")
    c = dict(zip(names, vals))
    assert components_from_f(f_from_components(c, x, xb), x, xb) == c


def test_f_map_singular_at_zero():
    f = f_from_components({n: Fraction(1) for n in ("a00", "b00", "a10", "b10", "a11", "b11", "a01", "b01")}, 1, 1)
    with pytest.raises(ComponentError):
        components_from_f(f, 0, 1)


@pytest.mark.parametrize("model", ["liouville", "sinh"])
def test_matrix_reduction(model):
    mat = matrix_reduce(graded_system(model))
    assert mat.equals(printed.matrix_system(model))
    assert decouple(mat).equals(printed.decoupled_system(model))


def test_matrix_lines_display():
    assert matrix_reduce(graded_system("liouville")).lines() == [
        "d_z d_zbar(phi) = cosh(2*phit)*exp(2*phi)",
        "d_z d_zbar(phit) = exp(2*phi)*sinh(2*phit)",
    ]


def test_split_complex_status():
    assert matrix_suite("liouville").find("split_complex").status == "pass"
    assert matrix_suite("sinh").find("split_complex").status == "mismatch"


def test_component_suites():
    r = component_suite("liouville", samples=20)
    assert r.status == "pass"
    r = component_suite("sinh", samples=20)
    assert r.ok and r.status == "mismatch"
    line = r.find("eight_field+").find("eight_field+:f11")
    assert line.details["printed_grading"] == "inhomogeneous"
