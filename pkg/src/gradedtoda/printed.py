"""Printed field equations, transcribed factor by factor in the order written.

Like ``reference``, nothing here feeds a computation; these systems only
appear on the right of comparisons.  Graded factors are multiplied in the
order they are printed, so a transcription keeps whatever sign that order
implies.
"""

from __future__ import annotations

from .fieldexpr import Expr, Sym, cos, cosh, exp, field_sym, sin, sinh, sym
from .grading import G00
from .lax import EomSystem

_LC = ("u", "ubar")
_VC = ("v", "vbar")
_XC = ("x", "xbar")
_ZC = ("z", "zbar")


def _eom(coords, pairs) -> EomSystem:
    return EomSystem(coords, [(s if isinstance(s, Sym) else field_sym(s), r) for s, r in pairs])


def toda_liouville(sector: str = "phi") -> EomSystem:
    """Graded Liouville pair, in phi (u, ubar) or psi (v, vbar)."""
    a, b = (sym("phi00"), sym("phi11")) if sector == "phi" else (sym("psi00"), sym("psi11"))
    coords = _LC if sector == "phi" else _VC
    return _eom(coords, [
        (f"{sector}00", exp(2 * a) * cosh(2 * b)),
        (f"{sector}11", exp(2 * a) * sinh(2 * b)),
    ])


def toda_affine(sector: str = "phi") -> EomSystem:
    names = ("phi", "xi", "eta") if sector == "phi" else ("psi", "zeta", "rho")
    m, d, c = names
    f00, f11 = sym(m + "00"), sym(m + "11")
    x00, x11 = sym(d + "00"), sym(d + "11")
    w = exp(2 * x00 - 2 * f00)
    coords = _LC if sector == "phi" else _VC
    return _eom(coords, [
        (m + "00", exp(2 * f00) * cosh(2 * f11) - w * cosh(2 * f11 - 2 * x11)),
        (m + "11", exp(2 * f00) * sinh(2 * f11) + w * sinh(2 * f11 - 2 * x11)),
        (c + "00", w * cosh(2 * f11 - 2 * x11)),
        (c + "11", -w * sinh(2 * f11 - 2 * x11)),
        (d + "00", Expr()),
        (d + "11", Expr()),
    ])


def toda_affine_reduced() -> EomSystem:
    """Affine system with the derivation fields switched off."""
    f00, f11 = sym("phi00"), sym("phi11")
    return _eom(_LC, [
        ("phi00", 2 * sinh(2 * f00) * cosh(2 * f11)),
        ("phi11", 2 * cosh(2 * f00) * sinh(2 * f11)),
        ("eta00", exp(-2 * f00) * cosh(2 * f11)),
        ("eta11", -exp(-2 * f00) * sinh(2 * f11)),
    ])


def _f():
    return sym("f00"), sym("f10"), sym("f01"), sym("f11")


def liouville_components(s: int) -> EomSystem:
    """Eight-field Liouville system; s = +1 or -1 picks the f^+ or f^- half."""
    f00, f10, f01, f11 = _f()
    e = exp(2 * f00).scaled(s)
    C10, S10, C11, S11 = cosh(2 * f10), sinh(2 * f10), cosh(2 * f11), sinh(2 * f11)
    c01, s01 = cos(2 * f01), sin(2 * f01)
    return _eom(_XC, [
        ("f00", e * (C10 * C11 * c01 - S10 * S11 * s01)),
        ("f10", e * (S10 * C11 * c01 - C10 * S11 * s01)),
        ("f01", e * (S10 * S11 * c01 + C10 * C11 * s01)),
        ("f11", e * (C10 * S11 * c01 + S10 * C11 * s01)),
    ])


def liouville_components_reduced(s: int) -> EomSystem:
    f00, f10, _, _ = _f()
    return _eom(_XC, [
        ("f00", exp(2 * f00).scaled(s) * cosh(2 * f10)),
        ("f10", exp(2 * f00).scaled(s) * sinh(2 * f10)),
    ])


def sinh_components(s: int) -> EomSystem:
    """Eight-field sinh-Gordon system as printed, including its typos."""
    f00, f10, f01, f11 = _f()
    C00, S00 = cosh(2 * f00), sinh(2 * f00)
    C10, S10 = cosh(2 * f10), sinh(2 * f10)
    C11, S11 = cosh(2 * f11), sinh(2 * f11)
    c01, s01 = cos(2 * f01), sin(2 * f01)
    two = 2 * s
    return _eom(_XC, [
        ("f00", (S00 * C10 * C11 * c01).scaled(two) - (C00 * S10 * S11 * s01).scaled(two)),
        ("f10", (C00 * S10 * C11 * c01).scaled(two) - (sinh(f00) * cosh(f10) * S11 * s01).scaled(two)),
        ("f11", (C00 * C10 * S11 * c01).scaled(two) + (S00 * sinh(2 * f01) * C11 * s01).scaled(two)),
        ("f01", (S00 * S10 * S11 * c01).scaled(two) + (C00 * C10 * C11 * s01).scaled(two)),
    ])


def sinh_components_reduced(s: int) -> EomSystem:
    f00, f10, _, _ = _f()
    return _eom(_XC, [
        ("f00", (sinh(2 * f00) * cosh(2 * f10)).scaled(2 * s)),
        ("f10", (cosh(2 * f00) * sinh(2 * f10)).scaled(2 * s)),
    ])


PHI = Sym("phi", G00)
PHIT = Sym("phit", G00)
PHI_P = Sym("phip", G00)
PHI_M = Sym("phim", G00)
PHI_C = Sym("phic", G00)


def matrix_system(model: str) -> EomSystem:
    p, t = Expr.of(PHI), Expr.of(PHIT)
    if model == "liouville":
        rows = [(PHI, exp(2 * p) * cosh(2 * t)), (PHIT, exp(2 * p) * sinh(2 * t))]
    else:
        rows = [(PHI, 2 * sinh(2 * p) * cosh(2 * t)), (PHIT, 2 * cosh(2 * p) * sinh(2 * t))]
    return EomSystem(_ZC, rows)


def decoupled_system(model: str) -> EomSystem:
    rows = []
    for s in (PHI_P, PHI_M):
        v = Expr.of(s)
        rows.append((s, exp(2 * v) if model == "liouville" else 2 * sinh(2 * v)))
    return EomSystem(_ZC, rows)


def split_complex_rhs(model: str) -> Expr:
    """Right-hand side of the single split-complex equation, in PHI_C."""
    c = Expr.of(PHI_C)
    if model == "liouville":
        return exp(2 * c)
    return 2 * sinh(c)
