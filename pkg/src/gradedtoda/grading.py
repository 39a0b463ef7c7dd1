"""Z2 x Z2 gradings and the pairing that decides commutator vs anticommutator."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class Grading:
    a1: int
    a2: int

    def __post_init__(self):
        if self.a1 not in (0, 1) or self.a2 not in (0, 1):
            raise ValueError(f"grading bits must be 0/1, got ({self.a1}, {self.a2})")

    def __add__(self, other: "Grading") -> "Grading":
        return Grading((self.a1 + other.a1) % 2, (self.a2 + other.a2) % 2)

    def __mul__(self, k: int) -> "Grading":
        return Grading((self.a1 * k) % 2, (self.a2 * k) % 2)

    __rmul__ = __mul__

    def pairing(self, other: "Grading") -> int:
        return (self.a1 * other.a2 - self.a2 * other.a1) % 2

    def sign(self, other: "Grading") -> int:
        """(-1)^(self . other)."""
        return -1 if self.pairing(other) else 1

    @property
    def is_even(self) -> bool:
        return self.a1 == 0 and self.a2 == 0

    @classmethod
    def parse(cls, text) -> "Grading":
        if isinstance(text, Grading):
            return text
        if isinstance(text, (list, tuple)):
            return cls(int(text[0]), int(text[1]))
        s = str(text).strip("[] ")
        if len(s) != 2:
            raise ValueError(f"bad grading {text!r}")
        return cls(int(s[0]), int(s[1]))

    def __str__(self) -> str:
        return f"[{self.a1}{self.a2}]"

    def label(self) -> str:
        return f"{self.a1}{self.a2}"


G00 = Grading(0, 0)
G10 = Grading(1, 0)
G01 = Grading(0, 1)
G11 = Grading(1, 1)
ALL = (G00, G10, G01, G11)


def grading_pairing(a: Grading, b: Grading) -> int:
    return a.pairing(b)


def total(gradings) -> Grading:
    out = G00
    for g in gradings:
        out = out + g
    return out
