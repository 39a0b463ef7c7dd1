"""Printed tables used as cross-checks.

Everything here is transcribed data.  The library never reads these values
to compute anything; they only appear on the right-hand side of comparisons.
"""

from fractions import Fraction as F

from . import gmatrix as gm
from .grading import Grading

SL2_ORDER = ("H", "Z", "E+", "E-", "D+", "D-")

_h = F(1, 2)

G = gm.exact([
    [16, 0, 0, 0, 0, 0],
    [0, 16, 0, 0, 0, 0],
    [0, 0, 0, 8, 0, 0],
    [0, 0, 8, 0, 0, 0],
    [0, 0, 0, 0, 0, 8],
    [0, 0, 0, 0, 8, 0],
])

ETA = gm.exact([
    [0, 16, 0, 0, 0, 0],
    [16, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, -8],
    [0, 0, 0, 0, 8, 0],
    [0, 0, 0, -8, 0, 0],
    [0, 0, 8, 0, 0, 0],
])

G_INVERSE = gm.scale(F(1, 8), gm.exact([
    [_h, 0, 0, 0, 0, 0],
    [0, _h, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 1, 0],
]))

ETA_INVERSE = gm.scale(F(1, 8), gm.exact([
    [0, _h, 0, 0, 0, 0],
    [_h, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, -1, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, -1, 0, 0, 0],
]))

# blockdiag(s1, [[0, s3], [s3, 0]])
M_ADJ = gm.exact([
    [0, 1, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, -1],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, -1, 0, 0],
])

_pos = [
    "00 11 10 10 01 01",
    "11 00 01 01 10 10",
    "10 01 00 00 11 11",
    "10 01 00 00 11 11",
    "01 10 11 11 00 00",
    "01 10 11 11 00 00",
]
POSITION_GRADING = [[Grading.parse(c) for c in row.split()] for row in _pos]

# expanded loop relations: (left, right, [(gen at mode n+m, coeff)], [(center, coeff of n delta)])
LOOP_TABLE = [
    ("H", "H", [], [("c00", 2)]),
    ("H", "E+", [("E+", 2)], []),
    ("H", "E-", [("E-", -2)], []),
    ("H", "D+", [("D+", 2)], []),
    ("H", "D-", [("D-", -2)], []),
    ("H", "Z", [], [("c11", 2)]),
    ("E+", "E-", [("H", 1)], [("c00", 1)]),
    ("E+", "E+", [], []),
    ("E-", "E-", [], []),
    ("E+", "D+", [], []),
    ("E-", "D-", [], []),
    ("E+", "D-", [("Z", 1)], [("c11", 1)]),
    ("E-", "D+", [("Z", 1)], [("c11", -1)]),
    ("E+", "Z", [("D+", 2)], []),
    ("E-", "Z", [("D-", 2)], []),
    ("D+", "D+", [], []),
    ("D-", "D-", [], []),
    ("D+", "D-", [("H", 1)], [("c00", 1)]),
    ("D+", "Z", [("E+", 2)], []),
    ("D-", "Z", [("E-", 2)], []),
    ("Z", "Z", [], [("c00", 2)]),
]

# (derivation, generator, (image generator, sign of n))
DERIVATION_TABLE = [
    ("d00", "H", ("H", 1)), ("d00", "Z", ("Z", 1)),
    ("d00", "E+", ("E+", 1)), ("d00", "E-", ("E-", 1)),
    ("d00", "D+", ("D+", 1)), ("d00", "D-", ("D-", 1)),
    ("d11", "H", ("Z", 1)), ("d11", "Z", ("H", 1)),
    ("d11", "E+", ("D+", 1)), ("d11", "E-", ("D-", -1)),
    ("d11", "D+", ("E+", 1)), ("d11", "D-", ("E-", -1)),
]

# ad(H_0/2 + 2 d00) eigenvalues
GRADE_TABLE = {
    ("E+", 0): 1, ("E-", 1): 1, ("D+", 0): 1, ("D-", 1): 1,
    ("H", 0): 0, ("d00", None): 0, ("c00", None): 0,
    ("Z", 0): 0, ("d11", None): 0, ("c11", None): 0,
    ("E-", 0): -1, ("E+", -1): -1, ("D-", 0): -1, ("D+", -1): -1,
}
