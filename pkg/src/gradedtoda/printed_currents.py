"""Printed transformation laws, bracket tables and mode algebras of the
current sector, transcribed in the order written.

Nothing here feeds a computation; these only appear on the right of
comparisons.  Graded products keep the printed factor order.
"""

from __future__ import annotations

from fractions import Fraction

import sympy as sp

from .fieldexpr import Expr, sym
from .jets import jet

R = sp.Rational
n, m = sp.symbols("n m", integer=True)


# matrix level ------------------------------------------------------------------

def matrix_laws() -> dict:
    Jp, J0, Jm = jet("J+", coord="u"), jet("J0", coord="u"), jet("J-", coord="u")
    ep, e0, em = jet("eps+", coord="u"), jet("eps0", coord="u"), jet("eps-", coord="u")
    d = lambda name: jet(name, 1, "u")  # noqa: E731
    return {
        "J+": -2 * ep * J0 + 2 * e0 * Jp + d("eps+"),
        "J0": ep * Jm - em * Jp + d("eps0"),
        "J-": 2 * em * J0 - 2 * e0 * Jm + d("eps-"),
    }


# graded level ------------------------------------------------------------------

def _du(name: str, k: int = 1) -> Expr:
    e = sym(name)
    for _ in range(k):
        e = e.d("u")
    return e


def graded_laws() -> dict:
    I10, I01 = sym("I10"), sym("I01")
    e00, e11 = sym("e00"), sym("e11")
    out = {}
    for pm, s in (("p", 1), ("m", -1)):
        I00, I11 = sym(f"I{pm}00"), sym(f"I{pm}11")
        e10, e01 = sym(f"e{pm}10"), sym(f"e{pm}01")
        out[f"I{pm}00"] = 2 * ((e00 * I00).scaled(s) - (e10 * I10).scaled(s) + e01 * I01 + e11 * I11) + _du(f"e{pm}10")
        out[f"I{pm}11"] = 2 * (e11 * I00 + (e01 * I10).scaled(s) - e10 * I01 + (e00 * I11).scaled(s)) + _du(f"e{pm}01")
    ep10, em10, ep01, em01 = sym("ep10"), sym("em10"), sym("ep01"), sym("em01")
    Ip00, Im00, Ip11, Im11 = sym("Ip00"), sym("Im00"), sym("Ip11"), sym("Im11")
    out["I10"] = ep10 * Im00 - em10 * Ip00 - ep01 * Im11 + em01 * Ip11 + _du("e00")
    out["I01"] = ep01 * Im00 + em01 * Ip00 - ep10 * Im11 - em10 * Ip11 + _du("e11")
    return out


# non-graded level --------------------------------------------------------------

def nongraded_laws() -> dict:
    I1, I2, e0, e3 = jet("I1"), jet("I2"), jet("eps0"), jet("eps3")
    out = {}
    for pm, s in (("p", 1), ("m", -1)):
        I0, I3 = jet(f"I0{pm}"), jet(f"I3{pm}")
        e1, e2 = jet(f"eps1{pm}"), jet(f"eps2{pm}")
        out[f"I0{pm}"] = 2 * (s * e0 * I0 - s * e1 * I1 - e2 * I2 + e3 * I3) + jet(f"eps1{pm}", 1)
        out[f"I3{pm}"] = 2 * (e3 * I0 + s * e2 * I1 + e1 * I2 + s * e0 * I3) - jet(f"eps2{pm}", 1)
    I0p, I0m, I3p, I3m = jet("I0p"), jet("I0m"), jet("I3p"), jet("I3m")
    e1p, e1m, e2p, e2m = jet("eps1p"), jet("eps1m"), jet("eps2p"), jet("eps2m")
    out["I1"] = e1p * I0m - e1m * I0p + e2p * I3m - e2m * I3p + jet("eps0", 1)
    out["I2"] = e2p * I0m + e2m * I0p + e1p * I3m + e1m * I3p - jet("eps3", 1)
    return out


# Virasoro reduction ------------------------------------------------------------

def reduced_constraint_laws() -> dict:
    """The four constrained currents' laws, which must vanish."""
    T, U = sym("T00"), sym("U11")
    ep10, em10, ep01, em01 = sym("ep10"), sym("em10"), sym("ep01"), sym("em01")
    return {
        "Im00": -2 * sym("e00") + _du("em10"),
        "Im11": 2 * sym("e11") + _du("em01"),
        "I10": ep10 - em10 * T + em01 * U + _du("e00"),
        "I01": ep01 + em01 * T - em10 * U + _du("e11"),
    }


def reduced_current_laws() -> dict:
    T, U, e00, e11 = sym("T00"), sym("U11"), sym("e00"), sym("e11")
    return {
        "T00": 2 * (e00 * T + e11 * U) + _du("ep10"),
        "U11": 2 * (e11 * T + e00 * U) + _du("ep01"),
    }


def solved_parameters() -> dict:
    em10, em01, T, U = sym("em10"), sym("em01"), sym("T00"), sym("U11")
    h = Fraction(1, 2)
    return {
        "e00": _du("em10").scaled(h),
        "e11": _du("em01").scaled(-h),
        "ep10": em10 * T - em01 * U - _du("em10", 2).scaled(h),
        "ep01": -(em01 * T) + em10 * U + _du("em01", 2).scaled(h),
    }


def virasoro_graded_laws() -> dict:
    em10, em01, T, U = sym("em10"), sym("em01"), sym("T00"), sym("U11")
    h = Fraction(1, 2)
    return {
        "T00": 2 * (_du("em10") * T) + em10 * T.d("u") - _du("em10", 3).scaled(h)
        - 2 * (_du("em01") * U) + em01 * U.d("u"),
        "U11": 2 * (_du("em10") * U) + em10 * U.d("u") + _du("em01", 3).scaled(h)
        - 2 * (_du("em01") * T) + em01 * T.d("u"),
    }


def virasoro_nongraded_laws() -> dict:
    T, U, e1, e2 = jet("T"), jet("U"), jet("eps1"), jet("eps2")
    d = lambda name, k=1: jet(name, k)  # noqa: E731
    return {
        "T": 2 * d("eps1") * T + e1 * d("T") - R(1, 2) * d("eps1", 3) + 2 * d("eps2") * U + e2 * d("U"),
        "U": 2 * d("eps1") * U + e1 * d("U") - R(1, 2) * d("eps2", 3) + 2 * d("eps2") * T + e2 * d("T"),
    }


# bracket constants -------------------------------------------------------------

CURRENT_CONSTANTS = {
    "a1": 2, "a2": -1, "a3p": -1, "a3m": 1, "a4p": 1, "a4m": 1, "a5p": 2, "a5m": 2,
    "b1": 0, "b2": R(-1, 2), "b3": 0, "b4p": 1, "b4m": -1,
    "c1": 0, "c2": R(-1, 2), "c3p": -1, "c3m": -1, "d1": -2, "d2": 1,
    "s1": 1, "s2": 1, "s3": 2, "s4": -2, "s5": 1, "s6": 1,
}

VIRASORO_CONSTANTS = {"a1": -1, "b1": -1, "c1": -1, "a2": -2, "b2": -2, "c2": -2, "a3": R(1, 2), "b3": R(1, 2)}


# mode algebras: (X, Y) -> ({current: coefficient(n, m)}, central(n)) ------------

_i = sp.I


def current_modes() -> dict:
    return {
        ("I0p", "I0p"): ({}, 0), ("I0m", "I0m"): ({}, 0),
        ("I0p", "I0m"): ({"I1": 2}, -_i * n),
        ("I0p", "I1"): ({"I0p": -1}, 0), ("I0m", "I1"): ({"I0m": 1}, 0),
        ("I0p", "I2"): ({"I3p": 1}, 0), ("I0m", "I2"): ({"I3m": 1}, 0),
        ("I0p", "I3p"): ({}, 0), ("I0m", "I3m"): ({}, 0),
        ("I0p", "I3m"): ({"I2": 2}, 0), ("I0m", "I3p"): ({"I2": 2}, 0),
        ("I1", "I1"): ({}, -_i / 2 * n),
        ("I1", "I2"): ({}, 0),
        ("I1", "I3p"): ({"I3p": 1}, 0), ("I1", "I3m"): ({"I3m": -1}, 0),
        ("I2", "I2"): ({}, -_i / 2 * n),
        ("I2", "I3p"): ({"I0p": -1}, 0), ("I2", "I3m"): ({"I0m": -1}, 0),
        ("I3p", "I3p"): ({}, 0), ("I3m", "I3m"): ({}, 0),
        ("I3p", "I3m"): ({"I1": -2}, _i * n),
    }


def virasoro_modes() -> dict:
    return {
        ("T", "T"): ({"T": _i * (m - n)}, _i * n**3 / 2),
        ("U", "U"): ({"T": _i * (m - n)}, _i * n**3 / 2),
        ("T", "U"): ({"U": _i * (m - n)}, 0),
    }


def restored_modes() -> dict:
    """Graded algebra after dressing; names K00, K11, K10p/m, K01p/m."""
    return {
        ("K00", "K00"): ({}, -_i / 2 * n), ("K00", "K11"): ({}, 0),
        ("K00", "K10p"): ({"K10p": 1}, 0), ("K00", "K10m"): ({"K10m": -1}, 0),
        ("K00", "K01p"): ({"K01p": 1}, 0), ("K00", "K01m"): ({"K01m": -1}, 0),
        ("K11", "K11"): ({}, -_i / 2 * n),
        ("K11", "K10p"): ({"K01p": -1}, 0), ("K11", "K10m"): ({"K01m": 1}, 0),
        ("K11", "K01p"): ({"K10p": -1}, 0), ("K11", "K01m"): ({"K10m": 1}, 0),
        ("K10p", "K10p"): ({}, 0), ("K10m", "K10m"): ({}, 0),
        ("K10p", "K10m"): ({"K00": 2}, -_i * n),
        ("K10p", "K01p"): ({}, 0), ("K10m", "K01m"): ({}, 0),
        ("K10p", "K01m"): ({"K11": 2}, 0), ("K10m", "K01p"): ({"K11": -2}, 0),
        ("K01p", "K01p"): ({}, 0), ("K01m", "K01m"): ({}, 0),
        ("K01p", "K01m"): ({"K00": -2}, _i * n),
    }
