"""Quaternionic 8x8 presentation of the graded sl2."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import gmatrix as gm
from .algebra import AlgebraElement, AlgebraSpec, graded_bracket
from .gmatrix import GradedMatrix, graded_commutator_matrix
from .grading import G00, G01, G10, G11
from .report import Check, check, group
from .scalars import I, q

I2 = gm.eye(2)
SIGMA1 = gm.exact([[0, 1], [1, 0]])
SIGMA2 = gm.exact([[0, q(0, -1)], [q(0, 1), 0]])
SIGMA3 = gm.exact([[1, 0], [0, -1]])

SL2_H = gm.exact([[1, 0], [0, -1]])
SL2_EP = gm.exact([[0, 1], [0, 0]])
SL2_EM = gm.exact([[0, 0], [1, 0]])

EPSILON = {(1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1, (2, 1, 3): -1, (1, 3, 2): -1, (3, 2, 1): -1}


@dataclass(frozen=True)
class PresentationSet:
    M: tuple          # M0..M3, 4x4
    generators: dict  # name -> 8x8 GradedMatrix

    def matrix_of(self, x: AlgebraElement) -> GradedMatrix:
        out = gm.zeros(8)
        grading = G00
        for name, c in x.terms.items():
            out = out + gm.scale(c, self.generators[name].entries)
            grading = self.generators[name].grading
        return GradedMatrix(out, grading)


def build_presentation() -> PresentationSet:
    M = (
        GradedMatrix(gm.kron(I2, I2), G00),
        GradedMatrix(gm.kron(I2, SIGMA1), G10),
        GradedMatrix(gm.kron(SIGMA1, SIGMA2), G01),
        GradedMatrix(gm.kron(SIGMA1, SIGMA3), G11),
    )
    gens = {
        "H": GradedMatrix(gm.kron(M[0].entries, SL2_H), G00),
        "Z": GradedMatrix(gm.kron(M[3].entries, SL2_H), G11),
        "E+": GradedMatrix(gm.kron(M[1].entries, SL2_EP), G10),
        "E-": GradedMatrix(gm.kron(M[1].entries, SL2_EM), G10),
        "D+": GradedMatrix(gm.scale(I, gm.kron(M[2].entries, SL2_EP)), G01),
        "D-": GradedMatrix(gm.scale(-I, gm.kron(M[2].entries, SL2_EM)), G01),
    }
    return PresentationSet(M, gens)


def check_quaternion_table(p: PresentationSet) -> Check:
    bad = []
    for i, j in itertools.product((1, 2, 3), repeat=2):
        expected = gm.zeros(4)
        if i == j:
            expected = expected + p.M[0].entries
        for k in (1, 2, 3):
            e = EPSILON.get((i, j, k), 0)
            if e:
                expected = expected + gm.scale(e * I, p.M[k].entries)
        if not gm.equal(p.M[i].entries @ p.M[j].entries, expected):
            bad.append([i, j])
    return check("quaternion_products", not bad, failures=bad, pairs=9)


def check_sl2_relations() -> Check:
    ok = (
        gm.equal(SL2_H @ SL2_EP - SL2_EP @ SL2_H, gm.scale(2, SL2_EP))
        and gm.equal(SL2_H @ SL2_EM - SL2_EM @ SL2_H, gm.scale(-2, SL2_EM))
        and gm.equal(SL2_EP @ SL2_EM - SL2_EM @ SL2_EP, SL2_H)
    )
    return check("sl2_basis", ok)


def verify_presentation(p: PresentationSet, spec: AlgebraSpec) -> Check:
    bad = []
    pairs = 0
    for i, a in enumerate(spec.names):
        for b in spec.names[i:]:
            pairs += 1
            lhs = graded_commutator_matrix(p.generators[a], p.generators[b])
            rhs = p.matrix_of(graded_bracket(spec.basis(a), spec.basis(b), spec))
            if not gm.equal(lhs.entries, rhs.entries):
                bad.append([a, b])
    return check("relations", not bad, failures=bad, pairs=pairs)


def check_split_quaternion_square(p: PresentationSet, samples: int = 100, seed: int = 0) -> Check:
    """(b M1 + c iM2 + d M3)^2 = (b^2 - c^2 + d^2) I on random rational triples."""
    rng = random.Random(seed)
    bad = []
    iM2 = gm.scale(I, p.M[2].entries)
    for _ in range(samples):
        b, c, d = (Fraction(rng.randint(-50, 50), rng.randint(1, 20)) for _ in range(3))
        Q = gm.scale(b, p.M[1].entries) + gm.scale(c, iM2) + gm.scale(d, p.M[3].entries)
        if not gm.equal(Q @ Q, gm.scale(b * b - c * c + d * d, p.M[0].entries)):
            bad.append([str(b), str(c), str(d)])
    return check("split_quaternion_square", not bad, samples=samples, failures=bad)


def presentation_suite(spec: AlgebraSpec, seed: int = 0) -> Check:
    p = build_presentation()
    return group("presentation", [
        check_quaternion_table(p),
        check_sl2_relations(),
        verify_presentation(p, spec),
        check_split_quaternion_square(p, seed=seed),
    ])
