"""The graded M-basis: I, M1, N2 := iM2, M3 labelled [00], [10], [01], [11].

These four 4x4 matrices color-commute, M_a M_b = (-1)^(a.b) M_b M_a, and
square to +I, +I, -I, +I.  Sending a graded symbol s of grading g to s' M_g
with a commuting scalar s' is therefore a ring homomorphism; it is used to
evaluate graded expressions and to pass between graded and non-graded forms.
"""

from __future__ import annotations

from . import gmatrix as gm
from .grading import ALL, G00, G01, G10, G11, Grading
from .matrix_rep import build_presentation
from .scalars import I

# M_a M_b = EPS[a, b] M_{a+b}
EPS = {(a, b): 1 for a in ALL for b in ALL}
EPS.update({
    (G01, G01): -1,
    (G10, G01): -1, (G01, G10): 1,
    (G10, G11): -1, (G11, G10): 1,
    (G01, G11): -1, (G11, G01): 1,
})

SQUARE = {g: EPS[(g, g)] for g in ALL}

NAMES = {G00: "I", G10: "M1", G01: "N2", G11: "M3"}


def matrices() -> dict:
    p = build_presentation()
    return {G00: p.M[0].entries, G10: p.M[1].entries, G01: gm.scale(I, p.M[2].entries), G11: p.M[3].entries}


class Quat:
    """sum_g c_g M_g with commuting coefficients of any ring type."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        self.c = dict(coeffs or {})

    @classmethod
    def basis(cls, g: Grading, coeff=1) -> "Quat":
        return cls({g: coeff})

    def get(self, g: Grading, zero=0):
        return self.c.get(g, zero)

    def __add__(self, other: "Quat") -> "Quat":
        out = dict(self.c)
        for g, v in other.c.items():
            out[g] = out[g] + v if g in out else v
        return Quat(out)

    def __neg__(self) -> "Quat":
        return Quat({g: -v for g, v in self.c.items()})

    def __sub__(self, other: "Quat") -> "Quat":
        return self + (-other)

    def scale(self, k) -> "Quat":
        return Quat({g: k * v for g, v in self.c.items()})

    def __mul__(self, other):
        if not isinstance(other, Quat):
            return self.scale(other)
        out: dict = {}
        for a, x in self.c.items():
            for b, y in other.c.items():
                g = a + b
                v = x * y if EPS[(a, b)] == 1 else -(x * y)
                out[g] = out[g] + v if g in out else v
        return Quat(out)

    def map(self, f) -> "Quat":
        return Quat({g: f(v) for g, v in self.c.items()})

    def matrix(self):
        mats = matrices()
        out = gm.zeros(4)
        for g, v in self.c.items():
            out = out + gm.scale(v, mats[g])
        return out

    def __repr__(self) -> str:
        return " + ".join(f"({v})*{NAMES[g]}" for g, v in sorted(self.c.items())) or "0"
