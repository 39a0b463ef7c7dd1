from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedtoda.affine import (
    AffineAlgebra,
    LoopElement,
    affine_suite,
    check_cocycle_properties,
    check_expanded_table,
    check_jacobi_window,
    derivation_action,
    grade_operator_spectrum,
    loop_bracket,
)

B = LoopElement.basis


def test_bracket_examples():
    for n in range(-3, 4):
        assert loop_bracket(B("H", n), B("H", -n)) == B("c00").scaled(2 * n)
        assert loop_bracket(B("E+", n), B("D-", -n)) == B("Z", 0) + B("c11").scaled(n)
    assert loop_bracket(B("H", 2), B("H", 1)).is_zero()
    for x in (B("H", 1), B("E-", -2), B("c11"), B("d11")):
        assert loop_bracket(B("c00"), x).is_zero()


def test_derivations():
    assert derivation_action("d00", B("E+", 3)) == B("E+", 3).scaled(3)
    assert derivation_action("d11", B("H", 2)) == B("Z", 2).scaled(2)
    assert derivation_action("d11", B("E-", 2)) == B("D-", 2).scaled(-2)
    for g in ("H", "Z", "E+", "E-", "D+", "D-"):
        assert derivation_action("d11", B(g, 0)).is_zero()
    with pytest.raises(ValueError):
        derivation_action("d01", B("H", 0))


def test_jacobi_window():
    rep = check_jacobi_window(2)
    assert rep.passed and rep.details["triples"] == 34 ** 3


def test_jacobi_transposed_eta_fails():
    rep = check_jacobi_window(1, AffineAlgebra.default(eta_transposed=True))
    assert not rep.passed
    assert any({"E+_0", "D-_1"} <= set(f["triple"]) and "H_-1" in f["triple"] for f in rep.details["failures"])


def test_uniform_c11_flip_is_harmless():
    # c11 -> -c11 is an automorphism, so this must still pass
    assert check_jacobi_window(1, AffineAlgebra.default(c11_weight=Fraction(-1))).passed


def test_pure_loop():
    alg = AffineAlgebra.default(c00_weight=Fraction(0), c11_weight=Fraction(0))
    assert check_jacobi_window(1, alg).passed


def test_tables():
    assert check_expanded_table().passed
    assert check_cocycle_properties().passed
    rep = grade_operator_spectrum()
    assert rep.passed
    table = {r["element"]: r["eigenvalue"] for r in rep.details["table"]}
    assert table["E-_1"] == 1 and table["D+_-1"] == -1
    assert table["Z_0"] == table["d11"] == table["c11"] == 0


names = st.sampled_from(["H", "Z", "E+", "E-", "D+", "D-"])
modes = st.integers(-4, 4)


@settings(max_examples=80, deadline=None)
@given(names, names, modes, modes)
def test_mode_additivity(a, b, n, m):
    loop = loop_bracket(B(a, n), B(b, m)).loop_part()
    assert all(k[1] == n + m for k in loop.terms)
    shifted = loop_bracket(B(a, n + 1), B(b, m - 1)).loop_part()
    assert {k[0]: v for k, v in loop.terms.items()} == {k[0]: v for k, v in shifted.terms.items()}


def test_suite_time():
    import time
    t = time.perf_counter()
    assert affine_suite(3).passed
    assert time.perf_counter() - t < 5
