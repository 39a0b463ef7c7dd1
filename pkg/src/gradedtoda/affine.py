"""Loop extension of the graded sl2 with two central charges and two derivations.

Basis keys are ("H", n) for loop generators and ("c00", None), ("c11", None),
("d00", None), ("d11", None) for the extra elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import AlgebraSpec, bilinear_forms
from .grading import G00, G11, Grading
from .report import Check, check, group
from .scalars import ONE, ZERO, fmt, q

EXTRA = {"c00": G00, "c11": G11, "d00": G00, "d11": G11}
CENTERS = ("c00", "c11")
DERIVATIONS = ("d00", "d11")

# d11 swaps the two Cartan elements and the (E, D) partners; the sign is the root sign
D11_PARTNER = {"H": ("Z", 1), "Z": ("H", 1), "E+": ("D+", 1), "E-": ("D-", -1), "D+": ("E+", 1), "D-": ("E-", -1)}


def key_text(key) -> str:
    name, n = key
    return name if n is None else f"{name}_{n}"


class LoopElement:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def basis(cls, name: str, n: int | None = None) -> "LoopElement":
        if name in EXTRA:
            n = None
        elif n is None:
            raise ValueError(f"{name} needs a mode")
        return cls({(name, n): ONE})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return LoopElement(out)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c) -> "LoopElement":
        c = q(c) if not isinstance(c, type(ONE)) else c
        return LoopElement({k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, LoopElement) and not (self - other).terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def central_part(self) -> "LoopElement":
        return LoopElement({k: v for k, v in self.terms.items() if k[0] in CENTERS})

    def loop_part(self) -> "LoopElement":
        return LoopElement({k: v for k, v in self.terms.items() if k[0] not in CENTERS})

    def text(self) -> str:
        if not self.terms:
            return "0"
        order = lambda k: (k[0] in EXTRA, k[0], k[1] or 0)  # noqa: E731
        return " + ".join(f"({fmt(self.terms[k])})*{key_text(k)}" for k in sorted(self.terms, key=order))

    def __repr__(self):
        return f"LoopElement({self.text()})"


@dataclass(frozen=True)
class AffineAlgebra:
    spec: AlgebraSpec
    c00_weight: Fraction = Fraction(1)
    c11_weight: Fraction = Fraction(1)
    # use eta^{ab} in place of eta^{ba}: flips the c11 term on the odd (E, D) lines only
    eta_transposed: bool = False

    @classmethod
    def default(cls, **kw) -> "AffineAlgebra":
        return cls(AlgebraSpec.default(), **kw)

    def grading(self, key) -> Grading:
        name, _ = key
        return EXTRA[name] if name in EXTRA else self.spec.grading_of(name)

    def __post_init__(self):
        g, eta = bilinear_forms(self.spec)
        object.__setattr__(self, "_g", g)
        object.__setattr__(self, "_eta", eta)
        object.__setattr__(self, "_cache", {})

    def basis_bracket(self, k1, k2) -> dict:
        hit = self._cache.get((k1, k2))
        if hit is None:
            hit = self._cache[(k1, k2)] = self._basis_bracket(k1, k2)
        return hit

    def _basis_bracket(self, k1, k2) -> dict:
        (a, n), (b, m) = k1, k2
        if a in CENTERS or b in CENTERS:
            return {}
        if a in DERIVATIONS and b in DERIVATIONS:
            return {}
        if b in DERIVATIONS:
            s = self.grading(k1).sign(self.grading(k2))
            return {k: -s * v for k, v in self._basis_bracket(k2, k1).items()}
        if a == "d00":
            return {(b, m): q(m)} if m else {}
        if a == "d11":
            partner, sign = D11_PARTNER[b]
            return {(partner, m): q(sign * m)} if m else {}
        out = {(self.spec.names[c], n + m): v
               for c, v in self.spec.bracket_index(self.spec.index[a], self.spec.index[b]).items()}
        if n + m == 0 and n:
            c00 = self._g.entry(b, a) * q(Fraction(n, 8) * self.c00_weight)
            e = self._eta.entry(a, b) if self.eta_transposed else self._eta.entry(b, a)
            c11 = e * q(Fraction(n, 8) * self.c11_weight)
            if c00:
                out[("c00", None)] = c00
            if c11:
                out[("c11", None)] = c11
        return out

    def bracket(self, x: LoopElement, y: LoopElement) -> LoopElement:
        out: dict = {}
        for k1, c1 in x.terms.items():
            for k2, c2 in y.terms.items():
                for k, v in self.basis_bracket(k1, k2).items():
                    out[k] = out.get(k, ZERO) + c1 * c2 * v
        return LoopElement(out)


def loop_bracket(x: LoopElement, y: LoopElement, alg: AffineAlgebra | None = None) -> LoopElement:
    return (alg or _default()).bracket(x, y)


def derivation_action(d: str, x: LoopElement, alg: AffineAlgebra | None = None) -> LoopElement:
    if d not in DERIVATIONS:
        raise ValueError(f"unknown derivation {d!r}")
    return (alg or _default()).bracket(LoopElement.basis(d), x)


@lru_cache(maxsize=1)
def _default() -> AffineAlgebra:
    return AffineAlgebra.default()


def window_keys(spec: AlgebraSpec, max_mode: int) -> list:
    keys = [(name, n) for n in range(-max_mode, max_mode + 1) for name in spec.names]
    return keys + [(e, None) for e in EXTRA]


def check_jacobi_window(max_mode: int = 3, alg: AffineAlgebra | None = None) -> Check:
    """Graded Jacobi sum over all ordered triples of window elements."""
    if max_mode < 1:
        raise ValueError("max_mode must be at least 1")
    alg = alg or _default()
    keys = window_keys(alg.spec, max_mode)
    gr = {k: alg.grading(k) for k in keys}
    br = alg.basis_bracket

    def nested(k1, k2, k3, sign, out):
        for k, v in br(k2, k3).items():
            for kk, vv in br(k1, k).items():
                out[kk] = out.get(kk, ZERO) + sign * v * vv

    failures = []
    count = 0
    for a, b, c in itertools.product(keys, repeat=3):
        count += 1
        out: dict = {}
        nested(a, b, c, gr[a].sign(gr[c]), out)
        nested(b, c, a, gr[b].sign(gr[a]), out)
        nested(c, a, b, gr[c].sign(gr[b]), out)
        if any(bool(v) for v in out.values()):
            res = LoopElement(out)
            failures.append({"triple": [key_text(a), key_text(b), key_text(c)], "residual": res.text()})
    return check("affine_jacobi", not failures, max_mode=max_mode, elements=len(keys),
                 triples=count, failure_count=len(failures), failures=failures[:20])


def check_expanded_table(alg: AffineAlgebra | None = None, max_mode: int = 3) -> Check:
    """Every printed line of the expanded relation table, for all mode pairs in the window."""
    from . import reference as ref

    alg = alg or _default()
    bad = []
    lines = 0
    for left, right, result, central in ref.LOOP_TABLE:
        lines += 1
        for n, m in itertools.product(range(-max_mode, max_mode + 1), repeat=2):
            expected = {}
            for name, c in result:
                expected[(name, n + m)] = q(c)
            if n + m == 0:
                for name, c in central:
                    expected[(name, None)] = expected.get((name, None), ZERO) + q(c * n)
            got = alg.bracket(LoopElement.basis(left, n), LoopElement.basis(right, m))
            if got != LoopElement(expected):
                bad.append({"line": f"[{left}_{n}, {right}_{m}]", "got": got.text(),
                            "printed": LoopElement(expected).text()})
    for d, x, (name, sign) in ref.DERIVATION_TABLE:
        lines += 1
        for n in range(-max_mode, max_mode + 1):
            got = derivation_action(d, LoopElement.basis(x, n), alg)
            want = LoopElement({(name, n): q(sign * n)})
            if got != want:
                bad.append({"line": f"[{d}, {x}_{n}]", "got": got.text(), "printed": want.text()})
    for cname in CENTERS:
        for k in window_keys(alg.spec, 1):
            if alg.basis_bracket((cname, None), k) or alg.basis_bracket(k, (cname, None)):
                bad.append({"line": f"[{cname}, {key_text(k)}]", "got": "nonzero", "printed": "0"})
    return check("expanded_table", not bad, lines=lines, failures=bad[:20])


def check_cocycle_properties(alg: AffineAlgebra | None = None, max_mode: int = 3) -> Check:
    alg = alg or _default()
    names = alg.spec.names
    bad_anti, bad_add = [], []
    for a, b in itertools.product(names, repeat=2):
        s = alg.spec.grading_of(a).sign(alg.spec.grading_of(b))
        for n in range(-max_mode, max_mode + 1):
            x = alg.bracket(LoopElement.basis(a, n), LoopElement.basis(b, -n)).central_part()
            y = alg.bracket(LoopElement.basis(b, -n), LoopElement.basis(a, n)).central_part()
            if x != y.scaled(-s):
                bad_anti.append([a, b, n])
        base = {}
        for n, m in itertools.product(range(-max_mode, max_mode + 1), repeat=2):
            part = alg.bracket(LoopElement.basis(a, n), LoopElement.basis(b, m)).loop_part()
            shape = frozenset((k[0], v) for k, v in part.terms.items())
            if any(k[1] != n + m for k in part.terms):
                bad_add.append([a, b, n, m])
            if base.setdefault(n + m, shape) != shape:
                bad_add.append([a, b, n, m])
    return group("cocycle_properties", [
        check("central_antisymmetry", not bad_anti, failures=bad_anti),
        check("mode_additivity", not bad_add, failures=bad_add),
    ])


def grade_operator() -> LoopElement:
    return LoopElement.basis("H", 0).scaled(q("1/2")) + LoopElement.basis("d00").scaled(2)


def grade_operator_spectrum(alg: AffineAlgebra | None = None) -> Check:
    """ad G on the elements listed in the grade table; each must be an eigenvector."""
    from . import reference as ref

    alg = alg or _default()
    G = grade_operator()
    rows = []
    bad = []
    for (name, n), expected in ref.GRADE_TABLE.items():
        x = LoopElement.basis(name, n)
        y = alg.bracket(G, x)
        lam = None
        if y.is_zero():
            lam = 0
        elif set(y.terms) == set(x.terms):
            lam = y.terms[next(iter(x.terms))] / x.terms[next(iter(x.terms))]
            lam = int(lam.x) if not lam.y and lam.x.denominator == 1 else fmt(lam)
        key = (name, None if name in EXTRA else n)
        rows.append({"element": key_text(key), "grading": str(alg.grading(key)), "eigenvalue": lam})
        if lam != expected:
            bad.append(key_text(key))
    return check("grade_spectrum", not bad, table=rows, failures=bad)


def affine_suite(max_mode: int = 3) -> Check:
    alg = _default()
    return group("affine", [
        check_jacobi_window(max_mode, alg),
        check_expanded_table(alg),
        check_cocycle_properties(alg),
        grade_operator_spectrum(alg),
    ])
