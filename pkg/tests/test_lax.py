from fractions import Fraction

import pytest

from gradedtoda import printed
from gradedtoda.fieldexpr import Expr, cosh, exp, field_sym, sinh, sym
from gradedtoda.lax import (AlgExpr, EomSystem, LaxError, build_lax, cartan_block_h, derive_eom,
                            exp_ad_cartan, make_sector, series_agrees, zero_curvature_residual,
                            zero_curvature_suite)


def test_exp_ad_on_e_plus():
    sec = make_sector("liouville", "phi")
    got = exp_ad_cartan(sec.phi(), "E+", sec.frame)
    a, b = sym("phi00"), sym("phi11")
    assert got.get("E+").equals(exp(a) * cosh(b))
    assert got.get("D+").equals(exp(a) * sinh(b))
    assert set(got.comps) == {"E+", "D+"}


def test_exp_ad_without_mixing():
    sec = make_sector("liouville", "phi")
    phi = AlgExpr.basis("H", sym("phi00").scaled(Fraction(1, 2)))
    got = exp_ad_cartan(phi, "E+", sec.frame)
    assert set(got.comps) == {"E+"}
    assert got.get("E+").equals(exp(sym("phi00")))


def test_exp_ad_affine_lowering_mode():
    sec = make_sector("sinh", "phi")
    got = exp_ad_cartan(sec.phi(), ("E-", 1), sec.frame)
    f00, f11, x00, x11 = sym("phi00"), sym("phi11"), sym("xi00"), sym("xi11")
    assert got.get(("E-", 1)).equals(exp(x00 - f00) * cosh(f11 - x11))
    # the partner sign comes out of the algebra; it is + sinh(phi11 - xi11)
    assert got.get(("D-", 1)).equals(exp(x00 - f00) * sinh(f11 - x11))


def test_exp_ad_rejects_non_root():
    sec = make_sector("liouville", "phi")
    phi = AlgExpr.basis("E+", sym("phi00"))
    with pytest.raises(LaxError):
        exp_ad_cartan(phi + sec.phi(), "E-", sec.frame)


@pytest.mark.parametrize("model", ["liouville", "sinh"])
def test_closed_form_matches_series(model):
    assert series_agrees(model, samples=3 if model == "sinh" else 10)


def test_lax_contents():
    lax = build_lax("liouville", "phi")
    assert lax.plus.get("H").equals(-(Expr.of(field_sym("phi00", "u")).scaled(Fraction(1, 2))))
    assert set(build_lax("liouville", "psi").plus.comps) >= {"D+"}
    aff = build_lax("sinh", "phi")
    assert ("E+", 0) in aff.plus.comps and ("E-", 1) in aff.plus.comps


def test_derive_liouville():
    eom = derive_eom(build_lax("liouville", "phi"))
    assert eom.lines() == [
        "d_u d_ubar(phi00) = cosh(2*phi11)*exp(2*phi00)",
        "d_u d_ubar(phi11) = exp(2*phi00)*sinh(2*phi11)",
    ]
    assert eom.equals(printed.toda_liouville("phi"))


def test_derive_psi_sector():
    assert derive_eom(build_lax("liouville", "psi")).equals(printed.toda_liouville("psi"))
    assert derive_eom(build_lax("sinh", "psi")).equals(printed.toda_affine("psi"))


def test_derive_affine_and_reduction():
    eom = derive_eom(build_lax("sinh", "phi"))
    assert eom.equals(printed.toda_affine("phi"))
    off = eom.subs({field_sym("xi00"): Expr(), field_sym("xi11"): Expr()})
    assert off.equals(printed.toda_affine_reduced())
    assert off.shown_rhs("phi00").text() == "2*cosh(2*phi11)*sinh(2*phi00)"


def test_missing_equation_is_an_error():
    lax = build_lax("liouville", "phi")
    partial = EomSystem(("u", "ubar"), [printed.toda_liouville().equations[0]])
    with pytest.raises(LaxError):
        zero_curvature_residual(lax, partial)


def test_flipped_sign_leaves_residual():
    lax = build_lax("liouville", "phi")
    ref = printed.toda_liouville()
    flipped = EomSystem(ref.coords, [(f, -r) for f, r in ref.equations])
    res = zero_curvature_residual(lax, flipped)
    assert not res.is_zero()
    # the H part of the residual is twice the printed right-hand side
    assert res.get("H").equals(exp(2 * sym("phi00")) * cosh(2 * sym("phi11")).scaled(2))


def test_sign_rule_off_breaks_the_match():
    a, b = sym("phi00"), sym("phi11")
    both = cosh(b) * cosh(b) + sinh(b) * sinh(b)
    assert cartan_block_h(True).equals(exp(2 * a) * both)
    assert cartan_block_h(False).equals(exp(2 * a))
    lax = build_lax("liouville", "phi")
    assert not zero_curvature_residual(lax, printed.toda_liouville(), sign_rule=False).is_zero()


def test_suite_passes():
    report = zero_curvature_suite(samples=20)
    assert report.ok, [c.name for c in report.children if not c.ok]
