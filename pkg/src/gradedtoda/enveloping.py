"""PBW-ordered universal enveloping algebra of a color Lie algebra.

Monomials are non-decreasing tuples of generator indices.  A product is
brought to normal order with X^a X^b = (-1)^(a.b) X^b X^a + [[X^a, X^b]].
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import AlgebraSpec, BilinearForm, SpecError
from .grading import G00, Grading
from .report import Check, check, group
from .scalars import ONE, ZERO, fmt, q

DEGREE_CAP = 6


class UeaElement:
    __slots__ = ("spec", "terms")

    def __init__(self, spec: AlgebraSpec, terms=None):
        self.spec = spec
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def generator(cls, spec: AlgebraSpec, name: str) -> "UeaElement":
        return cls(spec, {(spec.index[name],): ONE})

    @classmethod
    def scalar(cls, spec: AlgebraSpec, c) -> "UeaElement":
        return cls(spec, {(): q(c) if not isinstance(c, type(ONE)) else c})

    def __add__(self, other: "UeaElement") -> "UeaElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return UeaElement(self.spec, out)

    def __sub__(self, other: "UeaElement") -> "UeaElement":
        return self + other.scaled(-1)

    def __neg__(self) -> "UeaElement":
        return self.scaled(-1)

    def scaled(self, c) -> "UeaElement":
        c = q(c) if not isinstance(c, type(ONE)) else c
        return UeaElement(self.spec, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UeaElement):
            return uea_multiply(self, other, self.spec)
        return self.scaled(other)

    __rmul__ = scaled

    def __eq__(self, other) -> bool:
        return isinstance(other, UeaElement) and not (self - other).terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((len(k) for k in self.terms), default=0)

    def grading(self) -> Grading | None:
        gs = {monomial_grading(k, self.spec) for k in self.terms}
        if len(gs) > 1:
            return None
        return gs.pop() if gs else G00

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=lambda m: (-len(m), m)):
            c = fmt(self.terms[k])
            mono = _mono_text(k, self.spec.names)
            if not mono:
                parts.append(f"({c})")
            elif c == "1":
                parts.append(mono)
            elif c == "-1":
                parts.append(f"-{mono}")
            else:
                parts.append(f"({c}) {mono}" if " " in c else f"{c} {mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"UeaElement({self.text()})"


def _mono_text(mono, names) -> str:
    out = []
    i = 0
    while i < len(mono):
        j = i
        while j < len(mono) and mono[j] == mono[i]:
            j += 1
        n = j - i
        out.append(names[mono[i]] + (f"^{n}" if n > 1 else ""))
        i = j
    return " ".join(out)


def monomial_grading(mono, spec: AlgebraSpec) -> Grading:
    g = G00
    for i in mono:
        g = g + spec.gradings[i]
    return g


def _normal_form(spec: AlgebraSpec):
    @lru_cache(maxsize=None)
    def nf(word: tuple) -> tuple:
        for p in range(len(word) - 1):
            a, b = word[p], word[p + 1]
            if a > b:
                break
        else:
            return ((word, ONE),)
        out: dict = {}
        s = spec.gradings[a].sign(spec.gradings[b])
        head, tail = word[:p], word[p + 2:]
        for m, c in nf(head + (b, a) + tail):
            out[m] = out.get(m, ZERO) + s * c
        for k, c in spec.bracket_index(a, b).items():
            for m, c2 in nf(head + (k,) + tail):
                out[m] = out.get(m, ZERO) + c * c2
        return tuple((m, c) for m, c in out.items() if c)

    return nf


_NF: dict[int, object] = {}


def normal_form(word: tuple, spec: AlgebraSpec) -> dict:
    nf = _NF.get(id(spec))
    if nf is None:
        nf = _NF[id(spec)] = (_normal_form(spec), spec)
    return dict(nf[0](tuple(word)))


def uea_multiply(x: UeaElement, y: UeaElement, spec: AlgebraSpec, cap: int = DEGREE_CAP) -> UeaElement:
    if x.degree() + y.degree() > cap:
        raise SpecError(f"product degree {x.degree() + y.degree()} exceeds the cap {cap}")
    out: dict = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            for m, c in normal_form(m1 + m2, spec).items():
                out[m] = out.get(m, ZERO) + c1 * c2 * c
    return UeaElement(spec, out)


def word(spec: AlgebraSpec, *names: str, coeff=1) -> UeaElement:
    """Normal-ordered image of the product of the named generators."""
    return UeaElement(spec, normal_form(tuple(spec.index[n] for n in names), spec)).scaled(coeff)


def casimir(form_inverse: BilinearForm, spec: AlgebraSpec) -> UeaElement:
    """8 f_ab X^a X^b for the lowered form f_ab."""
    out = UeaElement(spec)
    n = spec.dim
    for a in range(n):
        for b in range(n):
            c = form_inverse.matrix[a, b]
            if c:
                out = out + word(spec, spec.names[a], spec.names[b], coeff=8 * c)
    return out


def graded_commutator(x: UeaElement, y: UeaElement, spec: AlgebraSpec) -> UeaElement:
    gx, gy = x.grading(), y.grading()
    if gx is None or gy is None:
        raise SpecError("graded commutator needs homogeneous elements")
    return uea_multiply(x, y, spec) - uea_multiply(y, x, spec).scaled(gx.sign(gy))


def check_central(c: UeaElement, spec: AlgebraSpec, name: str = "central") -> Check:
    if c.grading() is None:
        raise SpecError("element is not homogeneous")
    residuals = {}
    for g in spec.names:
        r = graded_commutator(c, UeaElement.generator(spec, g), spec)
        if not r.is_zero():
            residuals[g] = r.text()
    return check(name, not residuals, grading=str(c.grading()), residuals=residuals)


def casimirs(spec: AlgebraSpec, g: BilinearForm, eta: BilinearForm):
    return casimir(g.inverse(), spec), casimir(eta.inverse(), spec)


def printed_casimirs(spec: AlgebraSpec):
    """The two displayed closed forms, built from their (anti)commutators."""
    w = lambda *n: word(spec, *n)  # noqa: E731
    half = q("1/2")
    c00 = (w("H", "H") + w("Z", "Z")).scaled(half) + w("E+", "E-") + w("E-", "E+") + w("D+", "D-") + w("D-", "D+")
    c11 = (w("H", "Z") + w("Z", "H")).scaled(half) + w("E+", "D-") - w("D-", "E+") + w("D+", "E-") - w("E-", "D+")
    return c00, c11


def casimir_suite(spec: AlgebraSpec, g: BilinearForm, eta: BilinearForm) -> Check:
    c00, c11 = casimirs(spec, g, eta)
    p00, p11 = printed_casimirs(spec)
    return group("casimir", [
        check("C00_matches_display", c00 == p00, generated=c00.text(), printed=p00.text()),
        check("C11_matches_display", c11 == p11, generated=c11.text(), printed=p11.text()),
        check_central(c00, spec, "C00_central"),
        check_central(c11, spec, "C11_central"),
    ])
