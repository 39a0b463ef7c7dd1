"""Z2 x Z2-graded color Lie algebras given by structure constants.

The built-in algebra is the graded extension of sl2 on the ordered basis
(H, Z, E+, E-, D+, D-).  Brackets are stored once per unordered pair; the
reverse orientation follows from graded antisymmetry
[[A, B]] = -(-1)^(a.b) [[B, A]].
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from importlib import resources

import numpy as np

from . import gmatrix as gm
from .gmatrix import GradedMatrix
from .grading import G00, G11, Grading
from .report import Check, check, group
from .scalars import ONE, ZERO, fmt, parse, q


class SpecError(ValueError):
    pass


class AlgebraSpec:
    def __init__(self, generators, brackets):
        self.names: tuple[str, ...] = tuple(n for n, _ in generators)
        self.gradings: tuple[Grading, ...] = tuple(Grading.parse(g) for _, g in generators)
        if len(set(self.names)) != len(self.names):
            raise SpecError("duplicate generator names")
        self.index = {n: i for i, n in enumerate(self.names)}
        self._table: dict[tuple[int, int], dict[int, object]] = {}
        for (left, right), result in brackets.items():
            i, j = self._idx(left), self._idx(right)
            res = {}
            for gen, c in result:
                c = parse(c) if isinstance(c, str) else q(c)
                if c:
                    k = self._idx(gen)
                    res[k] = res.get(k, ZERO) + c
            res = {k: v for k, v in res.items() if v}
            self._store(i, j, res)

    def _idx(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise SpecError(f"unknown generator {name!r}") from None

    def _store(self, i: int, j: int, res: dict):
        target = self.gradings[i] + self.gradings[j]
        for k in res:
            if self.gradings[k] != target:
                raise SpecError(
                    f"[[{self.names[i]}, {self.names[j]}]] has a {self.names[k]} term of grading "
                    f"{self.gradings[k]}, expected {target}"
                )
        s = self.gradings[i].sign(self.gradings[j])
        if i == j and s == 1 and res:
            raise SpecError(f"[[{self.names[i]}, {self.names[i]}]] must vanish by antisymmetry")
        key, value = (i, j), res
        if i > j:
            key, value = (j, i), {k: -s * v for k, v in res.items()}
        if key in self._table and self._table[key] != value:
            raise SpecError(f"inconsistent double entry for ({self.names[i]}, {self.names[j]})")
        self._table[key] = value

    # construction -------------------------------------------------------

    @classmethod
    def from_dict(cls, data: dict) -> "AlgebraSpec":
        try:
            gens = [(g["name"], g["grading"]) for g in data["generators"]]
            brackets = {}
            for b in data["brackets"]:
                key = (b["left"], b["right"])
                if key in brackets:
                    raise SpecError(f"pair {key} listed twice")
                brackets[key] = [(r["gen"], str(r["coeff"])) for r in b["result"]]
        except (KeyError, TypeError) as exc:
            raise SpecError(f"malformed algebra spec: {exc}") from None
        return cls(gens, brackets)

    @classmethod
    def load(cls, path) -> "AlgebraSpec":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    @classmethod
    def default(cls) -> "AlgebraSpec":
        text = resources.files("gradedtoda").joinpath("data/z22_sl2.json").read_text()
        return cls.from_dict(json.loads(text))

    def to_dict(self) -> dict:
        return {
            "generators": [{"name": n, "grading": [g.a1, g.a2]} for n, g in zip(self.names, self.gradings)],
            "brackets": [
                {
                    "left": self.names[i],
                    "right": self.names[j],
                    "result": [{"gen": self.names[k], "coeff": fmt(c)} for k, c in sorted(res.items())],
                }
                for (i, j), res in sorted(self._table.items())
            ],
        }

    def with_bracket(self, left: str, right: str, result) -> "AlgebraSpec":
        """Copy with one bracket replaced (used to build perturbed algebras)."""
        data = self.to_dict()
        data["brackets"] = [
            b for b in data["brackets"] if {b["left"], b["right"]} != {left, right} or
            (left != right and b["left"] == b["right"])
        ]
        data["brackets"].append(
            {"left": left, "right": right, "result": [{"gen": g, "coeff": str(c)} for g, c in result]}
        )
        return AlgebraSpec.from_dict(data)

    # queries ------------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.names)

    def grading_of(self, name: str) -> Grading:
        return self.gradings[self._idx(name)]

    def is_complete(self) -> bool:
        return all((i, j) in self._table for i in range(self.dim) for j in range(i, self.dim))

    def bracket_index(self, i: int, j: int) -> dict[int, object]:
        if i <= j:
            return self._table.get((i, j), {})
        s = self.gradings[i].sign(self.gradings[j])
        return {k: -s * v for k, v in self._table.get((j, i), {}).items()}

    def structure_constant(self, a: int, b: int, c: int):
        """f^{ab}_c."""
        return self.bracket_index(a, b).get(c, ZERO)

    def basis(self, name: str) -> "AlgebraElement":
        self._idx(name)
        return AlgebraElement({name: ONE})


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    terms: dict

    def __post_init__(self):
        object.__setattr__(self, "terms", {k: v for k, v in self.terms.items() if v})

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return AlgebraElement(out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scaled(-1)

    def scaled(self, c) -> "AlgebraElement":
        c = q(c) if not isinstance(c, type(ONE)) else c
        return AlgebraElement({k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and not (self - other).terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms)))

    def is_zero(self) -> bool:
        return not self.terms

    def grading(self, spec: AlgebraSpec) -> Grading | None:
        gs = {spec.grading_of(n) for n in self.terms}
        if len(gs) > 1:
            return None
        return gs.pop() if gs else G00

    def is_homogeneous(self, spec: AlgebraSpec) -> bool:
        return self.grading(spec) is not None

    def text(self, order=None) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=(lambda k: order.index(k)) if order else str)
        return " + ".join(f"({fmt(self.terms[k])})*{k}" for k in keys)

    def to_dict(self) -> dict:
        return {k: fmt(v) for k, v in self.terms.items()}


def graded_bracket(x: AlgebraElement, y: AlgebraElement, spec: AlgebraSpec) -> AlgebraElement:
    out: dict[str, object] = {}
    for a, ca in x.terms.items():
        i = spec._idx(a)
        for b, cb in y.terms.items():
            j = spec._idx(b)
            for k, c in spec.bracket_index(i, j).items():
                name = spec.names[k]
                out[name] = out.get(name, ZERO) + ca * cb * c
    return AlgebraElement(out)


def jacobi_sum(spec: AlgebraSpec, a: str, b: str, c: str) -> AlgebraElement:
    """(-1)^(a.c)[[A,[[B,C]]]] + (-1)^(b.a)[[B,[[C,A]]]] + (-1)^(c.b)[[C,[[A,B]]]]."""
    A, B, C = spec.basis(a), spec.basis(b), spec.basis(c)
    ga, gb, gc = spec.grading_of(a), spec.grading_of(b), spec.grading_of(c)
    br = lambda x, y: graded_bracket(x, y, spec)  # noqa: E731
    return (
        br(A, br(B, C)).scaled(ga.sign(gc))
        + br(B, br(C, A)).scaled(gb.sign(ga))
        + br(C, br(A, B)).scaled(gc.sign(gb))
    )


def check_jacobi(spec: AlgebraSpec) -> Check:
    failures = []
    unordered = set()
    for a, b, c in itertools.product(spec.names, repeat=3):
        unordered.add(tuple(sorted((a, b, c), key=spec.names.index)))
        res = jacobi_sum(spec, a, b, c)
        if not res.is_zero():
            failures.append({"triple": [a, b, c], "residual": res.to_dict()})
    return check(
        "jacobi",
        not failures,
        ordered_triples=spec.dim ** 3,
        unordered_triples=len(unordered),
        failures=failures,
    )


# adjoint representation -----------------------------------------------------


def adjoint_matrix(x, spec: AlgebraSpec) -> GradedMatrix:
    """Column for Y holds the coefficients of [[X, Y]]."""
    if isinstance(x, str):
        x = spec.basis(x)
    m = gm.zeros(spec.dim)
    for j, y in enumerate(spec.names):
        for name, c in graded_bracket(x, spec.basis(y), spec).terms.items():
            m[spec.index[name], j] = c
    g = x.grading(spec)
    return GradedMatrix(m, g if g is not None else G00)


def check_adjoint_homomorphism(spec: AlgebraSpec) -> Check:
    """ad[[A, B]] must equal the graded commutator of ad A and ad B."""
    bad = []
    for a, b in itertools.product(spec.names, repeat=2):
        lhs = adjoint_matrix(graded_bracket(spec.basis(a), spec.basis(b), spec), spec)
        rhs = gm.graded_commutator_matrix(adjoint_matrix(a, spec), adjoint_matrix(b, spec))
        if not lhs.equals(rhs):
            bad.append([a, b])
    return check("adjoint_homomorphism", not bad, failures=bad)


def position_gradings(spec: AlgebraSpec) -> list[list[Grading]]:
    """Grading carried by entry (r, c) of an operator on the algebra."""
    return [[gr + gc for gc in spec.gradings] for gr in spec.gradings]


def matrix_respects_grading(m: GradedMatrix, spec: AlgebraSpec) -> bool:
    pos = position_gradings(spec)
    return all(not v or pos[r][c] == m.grading for (r, c), v in np.ndenumerate(m.entries))


# bilinear forms -------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class BilinearForm:
    matrix: np.ndarray
    grading: Grading
    names: tuple[str, ...]

    def entry(self, a: str, b: str):
        return self.matrix[self.names.index(a), self.names.index(b)]

    @property
    def singular(self) -> bool:
        return gm.rank(self.matrix) < len(self.names)

    def inverse(self) -> "BilinearForm":
        if self.singular:
            raise SpecError("bilinear form is singular")
        return BilinearForm(gm.inverse(self.matrix), self.grading, self.names)

    def __call__(self, x: AlgebraElement, y: AlgebraElement):
        t = ZERO
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                t = t + ca * cb * self.entry(a, b)
        return t

    def text(self) -> list[list[str]]:
        return gm.text(self.matrix)


def bilinear_forms(spec: AlgebraSpec, M: GradedMatrix | None = None):
    """g(a,b) = Tr(ad a ad b) and eta(a,b) = Tr(ad a M ad b)."""
    if M is None:
        found = find_graded_commutant(spec, G11)
        if len(found) != 1:
            raise SpecError(f"expected a unique [11] commutant, found dimension {len(found)}")
        M = found[0]
    ads = [adjoint_matrix(n, spec).entries for n in spec.names]
    n = spec.dim
    g = gm.zeros(n)
    eta = gm.zeros(n)
    for a in range(n):
        aM = ads[a] @ M.entries
        for b in range(n):
            g[a, b] = _trace(ads[a] @ ads[b])
            eta[a, b] = _trace(aM @ ads[b])
    return BilinearForm(g, G00, spec.names), BilinearForm(eta, M.grading, spec.names)


def _trace(m):
    t = ZERO
    for i in range(m.shape[0]):
        t = t + m[i, i]
    return t


def find_graded_commutant(spec: AlgebraSpec, grading: Grading = G11) -> list[GradedMatrix]:
    """Basis of {M of the given grading : [[ad X, M]] = 0 for every generator X}."""
    n = spec.dim
    pos = position_gradings(spec)
    cells = [(r, c) for r in range(n) for c in range(n) if pos[r][c] == grading]
    rows = []
    for name in spec.names:
        ad = adjoint_matrix(name, spec)
        s = ad.grading.sign(grading)
        # entry (r, c) of ad.M - s M.ad, linear in the unknown cells
        for r in range(n):
            for c in range(n):
                row = []
                for (i, j) in cells:
                    v = ZERO
                    if j == c:
                        v = v + ad.entries[r, i]
                    if i == r:
                        v = v - s * ad.entries[j, c]
                    row.append(v)
                if any(bool(v) for v in row):
                    rows.append(row)
    if not cells:
        return []
    system = gm.exact(rows) if rows else gm.zeros(1, len(cells))
    basis = []
    for vec in gm.nullspace(system):
        m = gm.zeros(n)
        for (i, j), v in zip(cells, vec):
            m[i, j] = v
        basis.append(GradedMatrix(m, grading))
    if len(basis) == 1 and grading == G11 and {"H", "Z"} <= set(spec.names):
        # scale so that eta(H, Z) = 16
        M = basis[0]
        _, eta = bilinear_forms(spec, M)
        val = eta.entry("H", "Z")
        if val:
            basis = [M.scaled(q(16) / val)]
    elif len(basis) == 1:
        lead = next(v for v in basis[0].entries.flat if v)
        basis = [basis[0].scaled(ONE / lead)]
    return basis


def span_contains(basis: list[GradedMatrix], target: GradedMatrix) -> bool:
    if not basis:
        return target.is_zero()
    cols = [b.entries.reshape(-1) for b in basis]
    a = gm.exact(np.array(cols, dtype=object).T)
    aug = gm.exact(np.column_stack([a, target.entries.reshape(-1)]))
    return gm.rank(a) == gm.rank(aug)


def verify_form_properties(spec: AlgebraSpec, g: BilinearForm, eta: BilinearForm, reference=None) -> Check:
    """Grading selection, symmetry, inverses, invariance and the structure-constant identities."""
    from . import reference as ref

    n = spec.dim
    gr = spec.gradings
    f = [[[spec.structure_constant(a, b, c) for c in range(n)] for b in range(n)] for a in range(n)]
    G, E = g.matrix, eta.matrix
    out = []

    bad = [(spec.names[a], spec.names[b]) for a in range(n) for b in range(n)
           if (G[a, b] and gr[a] + gr[b] != G00) or (E[a, b] and gr[a] + gr[b] != eta.grading)]
    out.append(check("selection_rules", not bad, violations=bad))

    bad = [(spec.names[a], spec.names[b]) for a in range(n) for b in range(n)
           if G[a, b] != G[b, a] or E[a, b] != gr[a].sign(gr[b]) * E[b, a]]
    out.append(check("symmetry", not bad, violations=bad))

    nondeg = not g.singular and not eta.singular
    details = {"nondegenerate": nondeg}
    ok = nondeg
    if nondeg:
        gi, ei = g.inverse().matrix, eta.inverse().matrix
        details["g_inverse"] = gm.text(gi)
        details["eta_inverse"] = gm.text(ei)
        if reference is None and spec.names == ref.SL2_ORDER:
            reference = (ref.G_INVERSE, ref.ETA_INVERSE)
        if reference is not None:
            rg, re_ = reference
            details["matches_reference"] = gm.equal(gi, rg) and gm.equal(ei, re_)
            ok = details["matches_reference"]
    out.append(check("nondegenerate", ok, **details))

    def br(a, b):
        return [f[a][b][c] for c in range(n)]

    def form_left(F, vec, c):
        t = ZERO
        for d, v in enumerate(vec):
            if v:
                t = t + v * F[d, c]
        return t

    def form_right(F, a, vec):
        t = ZERO
        for d, v in enumerate(vec):
            if v:
                t = t + F[a, d] * v
        return t

    bad_iv, bad_v = [], []
    for a, b, c in itertools.product(range(n), repeat=3):
        lhs = form_left(G, br(a, b), c)
        rhs = form_right(G, a, br(b, c))
        if lhs != rhs:
            bad_iv.append((spec.names[a], spec.names[b], spec.names[c]))
        lhs = form_left(E, br(a, b), c)
        rhs = (gr[a] + gr[c]).sign(gr[b]) * form_right(E, a, br(b, c))
        if lhs != rhs:
            bad_v.append((spec.names[a], spec.names[b], spec.names[c]))
    out.append(check("invariance_g", not bad_iv, violations=bad_iv[:10], count=len(bad_iv)))
    out.append(check("invariance_eta", not bad_v, violations=bad_v[:10], count=len(bad_v)))

    if nondeg:
        gi, ei = g.inverse().matrix, eta.inverse().matrix
        bad1, bad2 = [], []
        for a, b, c in itertools.product(range(n), repeat=3):
            # f^{ad}_b g_{dc} = g_{bd} f^{da}_c
            l1 = sum((f[a][d][b] * gi[d, c] for d in range(n)), ZERO)
            r1 = sum((gi[b, d] * f[d][a][c] for d in range(n)), ZERO)
            if l1 != r1:
                bad1.append((spec.names[a], spec.names[b], spec.names[c]))
            # f^{ad}_b eta_{dc} + (-1)^(a.b) f^{ad}_c eta_{bd} = 0
            l2 = sum((f[a][d][b] * ei[d, c] for d in range(n)), ZERO)
            r2 = sum((f[a][d][c] * ei[b, d] for d in range(n)), ZERO)
            if l2 + gr[a].sign(gr[b]) * r2:
                bad2.append((spec.names[a], spec.names[b], spec.names[c]))
        out.append(check("lowered_identity_g", not bad1, violations=bad1[:10], count=len(bad1)))
        out.append(check("lowered_identity_eta", not bad2, violations=bad2[:10], count=len(bad2)))
    return group("form_properties", out)


def algebra_suite(spec: AlgebraSpec) -> Check:
    """Jacobi, adjoint action, the two invariant forms and the [11] commutant."""
    from . import reference as ref

    out = [check_jacobi(spec), check_adjoint_homomorphism(spec)]
    found = find_graded_commutant(spec, G11)
    details = {"dimension": len(found)}
    if len(found) == 1:
        details["M"] = gm.text(found[0].entries)
        if spec.names == ref.SL2_ORDER:
            details["matches_reference"] = gm.equal(found[0].entries, ref.M_ADJ)
    out.append(check("commutant_unique", len(found) == 1 and details.get("matches_reference", True), **details))
    if len(found) != 1:
        return group("algebra", out)
    g, eta = bilinear_forms(spec, found[0])
    fd = {"g": g.text(), "eta": eta.text()}
    ok = True
    if spec.names == ref.SL2_ORDER:
        ok = gm.equal(g.matrix, ref.G) and gm.equal(eta.matrix, ref.ETA)
    out.append(check("form_matrices", ok, **fd))
    out.append(verify_form_properties(spec, g, eta))
    return group("algebra", out)
