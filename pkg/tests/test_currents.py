import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from gradedtoda import printed_currents as pc
from gradedtoda.currents import (GroupElement, closed_form_currents, currents_from_group, fd_currents,
                                 graded_laws, laws_suite, matrix_laws, nongraded_laws, soldering_reduce,
                                 soldering_suite, transformation_laws, virasoro_reduction)
from gradedtoda.jets import jet


def test_fd_agrees_with_closed_forms():
    chk, worst = currents_from_group(seed=0)
    assert chk.passed and worst < 1e-6


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10_000))
def test_fd_agrees_for_random_group_elements(seed):
    _, worst = currents_from_group(GroupElement.random(seed), points=4)
    assert worst < 1e-6


def test_abelian_group_element():
    zero = np.poly1d([0.0])
    ge = GroupElement({"alpha10": zero, "alpha01": zero, "beta00": np.poly1d([0.3, -0.1, 0.2]),
                       "beta11": zero, "gamma10": zero, "gamma01": zero})
    z = 0.4
    cf = closed_form_currents(ge, z)
    _, b1, _ = ge.abc(z, 1)
    assert np.abs(cf["J+"]).max() == 0 and np.abs(cf["J-"]).max() == 0
    fd = fd_currents(ge, z)
    assert np.allclose(fd["J0"], cf["J0"], atol=1e-8)
    # J0 = b_u = M1 b_z; its norm is that of b_z
    assert np.isclose(np.abs(cf["J0"]).max(), np.abs(b1).max())


def test_literal_reading_breaks_the_closed_forms():
    _, worst = currents_from_group(GroupElement.random(0, reading="literal"), points=4)
    assert worst > 1e-3


def test_soldering_system_and_cross_check():
    eom = soldering_reduce()
    assert eom.lines() == [
        "d_u d_ubar(beta00) = cosh(2*beta11)*exp(2*beta00)",
        "d_u d_ubar(beta11) = exp(2*beta00)*sinh(2*beta11)",
    ]
    report = soldering_suite()
    assert report.ok and report.find("matches_zero_curvature").passed


def test_matrix_law_of_j0():
    d = matrix_laws()["J0"]
    ref = jet("eps+", coord="u") * jet("J-", coord="u") - jet("eps-", coord="u") * jet("J+", coord="u") \
        + jet("eps0", 1, "u")
    assert sp.expand(d - ref) == 0


def test_nongraded_i1_law():
    assert sp.expand(nongraded_laws()["I1"] - pc.nongraded_laws()["I1"]) == 0


def test_constant_parameters_drop_derivative_terms():
    laws = nongraded_laws()
    consts = {jet(p, 1): 0 for p in ("eps0", "eps1p", "eps1m", "eps2p", "eps2m", "eps3")}
    for k, v in laws.items():
        assert not any(s.name.startswith("d_") for s in sp.expand(v.subs(consts)).free_symbols), k


def test_levels():
    assert set(transformation_laws("graded")) == set(graded_laws())
    with pytest.raises(ValueError):
        transformation_laws("quantum")


def test_virasoro_law_of_t():
    red = virasoro_reduction()
    T, U, e1, e2 = jet("T"), jet("U"), jet("eps1"), jet("eps2")
    ref = 2 * jet("eps1", 1) * T + e1 * jet("T", 1) - sp.Rational(1, 2) * jet("eps1", 3) \
        + 2 * jet("eps2", 1) * U + e2 * jet("U", 1)
    assert sp.expand(red["nongraded"]["T"] - ref) == 0


def test_laws_suite():
    report = laws_suite()
    assert report.passed, [c.name for c in report.children if not c.passed]
