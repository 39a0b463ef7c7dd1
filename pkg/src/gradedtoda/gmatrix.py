"""Small exact matrices over Q(i) carrying a Z2 x Z2 grading label."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from .grading import G00, Grading
from .scalars import ONE, ZERO, fmt, q


def zeros(n: int, m: int | None = None) -> np.ndarray:
    m = n if m is None else m
    out = np.empty((n, m), dtype=object)
    out.fill(ZERO)
    return out


def eye(n: int) -> np.ndarray:
    out = zeros(n)
    for i in range(n):
        out[i, i] = ONE
    return out


def exact(rows) -> np.ndarray:
    arr = np.array(rows, dtype=object)
    out = zeros(*arr.shape)
    for idx, v in np.ndenumerate(arr):
        out[idx] = q(v) if not isinstance(v, type(ONE)) else v
    return out


def is_zero(a: np.ndarray) -> bool:
    return not any(bool(v) for v in a.flat)


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and is_zero(a - b)


def scale(c, a: np.ndarray) -> np.ndarray:
    c = q(c) if not isinstance(c, type(ONE)) else c
    out = zeros(*a.shape)
    for idx, v in np.ndenumerate(a):
        out[idx] = c * v
    return out


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(a, b)


def to_domain(a: np.ndarray) -> DomainMatrix:
    return DomainMatrix([list(r) for r in a], a.shape, QQ_I)


def from_domain(d: DomainMatrix) -> np.ndarray:
    rows = d.to_list()
    return exact(rows) if rows else zeros(*d.shape)


def inverse(a: np.ndarray) -> np.ndarray:
    return from_domain(to_domain(a).inv())


def rank(a: np.ndarray) -> int:
    return to_domain(a).rank()


def nullspace(a: np.ndarray) -> list[np.ndarray]:
    """Basis of the right null space, each vector a 1-d object array."""
    ns = to_domain(a).nullspace()
    return [np.array(row, dtype=object) for row in ns.to_list()] if ns.shape[0] else []


def to_complex(a: np.ndarray) -> np.ndarray:
    out = np.empty(a.shape, dtype=complex)
    for idx, v in np.ndenumerate(a):
        out[idx] = complex(float(v.x), float(v.y))
    return out


def text(a: np.ndarray) -> list[list[str]]:
    return [[fmt(v) for v in row] for row in a]


@dataclass(frozen=True, eq=False)
class GradedMatrix:
    entries: np.ndarray
    grading: Grading = G00

    @property
    def shape(self):
        return self.entries.shape

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        return GradedMatrix(self.entries @ other.entries, self.grading + other.grading)

    def __add__(self, other: "GradedMatrix") -> "GradedMatrix":
        return GradedMatrix(self.entries + other.entries, self.grading)

    def __sub__(self, other: "GradedMatrix") -> "GradedMatrix":
        return GradedMatrix(self.entries - other.entries, self.grading)

    def scaled(self, c) -> "GradedMatrix":
        return GradedMatrix(scale(c, self.entries), self.grading)

    def is_zero(self) -> bool:
        return is_zero(self.entries)

    def equals(self, other: "GradedMatrix") -> bool:
        return equal(self.entries, other.entries)

    def trace(self):
        t = ZERO
        for i in range(self.shape[0]):
            t = t + self.entries[i, i]
        return t


def graded_commutator_matrix(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    """AB - (-1)^(a.b) BA, graded a+b."""
    s = a.grading.sign(b.grading)
    ab = a.entries @ b.entries
    ba = b.entries @ a.entries
    return GradedMatrix(ab - ba if s == 1 else ab + ba, a.grading + b.grading)
