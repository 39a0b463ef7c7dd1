"""Lax connections, zero curvature and the field equations they imply.

Algebra-valued expressions carry graded coefficients in front of basis
elements.  The bracket of two such terms is

    [c1 X, c2 Y] = (-1)^([X].[c2]) c1 c2 [[X, Y]]

because moving X past c2 costs the color sign.  Turning that sign off
(``sign_rule=False``) is kept as a switch for tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .affine import AffineAlgebra, key_text
from .algebra import AlgebraSpec
from .fieldexpr import Atom, Expr, Sym, _mono_grading, cosh, exp, field_sym, random_equal, sinh
from .grading import Grading
from .report import check, group
from .scalars import q


class LaxError(ValueError):
    pass


# algebra backends --------------------------------------------------------------


class FiniteFrame:
    def __init__(self, spec: AlgebraSpec):
        self.spec = spec

    def bracket(self, k1, k2) -> dict:
        s = self.spec
        return {s.names[k]: v for k, v in s.bracket_index(s.index[k1], s.index[k2]).items()}

    def grading(self, k) -> Grading:
        return self.spec.grading_of(k)

    def order(self, k):
        return (self.spec.index[k],)

    def text(self, k) -> str:
        return k


class AffineFrame:
    def __init__(self, alg: AffineAlgebra):
        self.alg = alg
        self._order = {n: i for i, n in enumerate(alg.spec.names + ("d00", "c00", "d11", "c11"))}

    def bracket(self, k1, k2) -> dict:
        return self.alg.basis_bracket(k1, k2)

    def grading(self, k) -> Grading:
        return self.alg.grading(k)

    def order(self, k):
        return (k[1] if k[1] is not None else 99, self._order[k[0]])

    def text(self, k) -> str:
        return key_text(k)


@lru_cache(maxsize=1)
def finite_frame() -> FiniteFrame:
    return FiniteFrame(AlgebraSpec.default())


@lru_cache(maxsize=1)
def affine_frame() -> AffineFrame:
    return AffineFrame(AffineAlgebra.default())


class AlgExpr:
    """sum_K c_K K with FieldExpr coefficients written to the left."""

    __slots__ = ("comps",)

    def __init__(self, comps=None):
        self.comps = {k: v for k, v in (comps or {}).items() if not v.is_zero()}

    @classmethod
    def basis(cls, key, coeff=None) -> "AlgExpr":
        return cls({key: coeff if coeff is not None else Expr.const(1)})

    def __add__(self, other: "AlgExpr") -> "AlgExpr":
        out = dict(self.comps)
        for k, v in other.comps.items():
            out[k] = out[k] + v if k in out else v
        return AlgExpr(out)

    def __neg__(self) -> "AlgExpr":
        return AlgExpr({k: -v for k, v in self.comps.items()})

    def __sub__(self, other: "AlgExpr") -> "AlgExpr":
        return self + (-other)

    def scaled(self, c) -> "AlgExpr":
        return AlgExpr({k: v.scaled(c) for k, v in self.comps.items()})

    def times(self, e: Expr) -> "AlgExpr":
        """Multiply every coefficient by e from the left."""
        return AlgExpr({k: e * v for k, v in self.comps.items()})

    def d(self, coord: str) -> "AlgExpr":
        return AlgExpr({k: v.d(coord) for k, v in self.comps.items()})

    def subs(self, mapping: dict) -> "AlgExpr":
        return AlgExpr({k: v.subs(mapping) for k, v in self.comps.items()})

    def canonical(self) -> "AlgExpr":
        return AlgExpr({k: v.canonical() for k, v in self.comps.items()})

    def get(self, key) -> Expr:
        return self.comps.get(key, Expr())

    def is_zero(self) -> bool:
        return not self.comps

    def text(self, frame) -> str:
        if not self.comps:
            return "0"
        return " + ".join(f"[{v.text()}]*{frame.text(k)}"
                          for k, v in sorted(self.comps.items(), key=lambda kv: frame.order(kv[0])))


def bracket(a: AlgExpr, b: AlgExpr, frame, sign_rule: bool = True) -> AlgExpr:
    out: dict = {}
    for k1, c1 in a.comps.items():
        g1 = frame.grading(k1)
        for k2, c2 in b.comps.items():
            br = frame.bracket(k1, k2)
            if not br:
                continue
            # split c2 by grading so each piece gets its own sign
            pieces: dict = {}
            for m, c in c2.terms.items():
                s = g1.sign(_mono_grading(m)) if sign_rule else 1
                pieces.setdefault(s, {})[m] = c
            prod = Expr()
            for s, terms in pieces.items():
                prod = prod + (c1 * Expr(terms)).scaled(s)
            for k, v in br.items():
                t = prod.scaled(v)
                out[k] = out[k] + t if k in out else t
    return AlgExpr(out)


# models ------------------------------------------------------------------------


@dataclass(frozen=True)
class Sector:
    """One light-cone pair with its Cartan-valued field.

    ``cartan`` lists (basis key, field symbol, weight kappa) so that the field
    is sum kappa * f * K.
    """

    model: str
    name: str
    coords: tuple
    cartan: tuple
    raising: tuple      # basis keys summed into the positive step operator
    lowering: tuple
    frame: object = field(compare=False, hash=False, repr=False)

    def field(self, label: str) -> Sym:
        for _, f, _ in self.cartan:
            if f.name == label:
                return f
        raise KeyError(label)

    @property
    def fields(self) -> list[Sym]:
        return [f for _, f, _ in self.cartan]

    def phi(self) -> AlgExpr:
        out = AlgExpr()
        for key, f, kappa in self.cartan:
            out = out + AlgExpr.basis(key, Expr.of(f).scaled(q(kappa)))
        return out

    def second(self, f: Sym) -> Sym:
        return f.d(self.coords[0]).d(self.coords[1])


_NAMES = {
    "phi": ("phi", "xi", "eta"),
    "psi": ("psi", "zeta", "rho"),
}


def make_sector(model: str, sector: str) -> Sector:
    if model not in ("liouville", "sinh"):
        raise LaxError(f"unknown model {model!r}")
    if sector not in _NAMES:
        raise LaxError(f"unknown sector {sector!r}")
    main, der, cen = _NAMES[sector]
    coords = ("u", "ubar") if sector == "phi" else ("v", "vbar")
    root = "E" if sector == "phi" else "D"
    h = Fraction(1, 2)
    f = field_sym
    if model == "liouville":
        cartan = (("H", f(main + "00"), h), ("Z", f(main + "11"), h))
        return Sector(model, sector, coords, cartan, (root + "+",), (root + "-",), finite_frame())
    cartan = (
        (("H", 0), f(main + "00"), h),
        (("d00", None), f(der + "00"), Fraction(1)),
        (("c00", None), f(cen + "00"), h),
        (("Z", 0), f(main + "11"), h),
        (("d11", None), f(der + "11"), Fraction(1)),
        (("c11", None), f(cen + "11"), h),
    )
    raising = ((root + "+", 0), (root + "-", 1))
    lowering = ((root + "-", 0), (root + "+", -1))
    return Sector(model, sector, coords, cartan, raising, lowering, affine_frame())


def exp_ad_cartan(phi: AlgExpr, x, frame, sign: int = 1) -> AlgExpr:
    """e^{sign ad Phi} X for a root basis element X, by the 2x2 block closed form.

    On span{X, P} the operator sign*ad Phi acts as a + b J, with J swapping X
    and P, a of grading [00] and b of grading [11].  Hence
    e^{sign ad Phi} X = e^a (cosh b X + sinh b P).
    """
    ax = bracket(phi, AlgExpr.basis(x), frame).scaled(sign)
    keys = set(ax.comps) - {x}
    if len(keys) > 1:
        raise LaxError(f"ad Phi does not preserve a 2-dimensional block at {frame.text(x)}")
    a = ax.get(x)
    if not keys:
        return AlgExpr.basis(x, exp(a))
    p = keys.pop()
    b = ax.get(p)
    ap = bracket(phi, AlgExpr.basis(p), frame).scaled(sign)
    if set(ap.comps) - {x, p} or not ap.get(p).equals(a) or not ap.get(x).equals(b):
        raise LaxError("ad Phi is not of the form a + b J on the root block")
    return AlgExpr({x: exp(a) * cosh(b), p: exp(a) * sinh(b)})


def exp_ad_series(phi: AlgExpr, x, frame, sign: int = 1, order: int = 20) -> AlgExpr:
    """Truncated sum of (sign ad Phi)^k X / k!; only used as an oracle."""
    term = AlgExpr.basis(x)
    total = term
    for k in range(1, order + 1):
        term = bracket(phi, term, frame).scaled(q(Fraction(sign, k)))
        total = total + term
    return total


@dataclass
class Lax:
    sector: Sector
    plus: AlgExpr
    minus: AlgExpr


def build_lax(model: str, sector: str = "phi") -> Lax:
    sec = make_sector(model, sector)
    frame = sec.frame
    phi = sec.phi()
    c, cb = sec.coords
    plus = -phi.d(c)
    for x in sec.raising:
        plus = plus + exp_ad_cartan(phi, x, frame, +1)
    minus = phi.d(cb)
    for x in sec.lowering:
        minus = minus + exp_ad_cartan(phi, x, frame, -1)
    return Lax(sec, plus, minus)


def curvature(lax: Lax, sign_rule: bool = True) -> AlgExpr:
    c, cb = lax.sector.coords
    return lax.plus.d(cb) - lax.minus.d(c) + bracket(lax.plus, lax.minus, lax.sector.frame, sign_rule)


# equations of motion -----------------------------------------------------------


@dataclass
class EomSystem:
    coords: tuple
    equations: list  # (field Sym, rhs Expr), rhs in canonical form
    shown: list | None = None  # compact right-hand sides used for display

    def rhs(self, name: str) -> Expr:
        for f, r in self.equations:
            if f.name == name:
                return r
        raise KeyError(name)

    def shown_rhs(self, name: str) -> Expr:
        if self.shown:
            return self.shown[self.fields().index(name)]
        return self.rhs(name).tidy()

    def mapping(self) -> dict:
        c, cb = self.coords
        return {f.d(c).d(cb): r for f, r in self.equations}

    def fields(self) -> list[str]:
        return [f.name for f, _ in self.equations]

    def lines(self, tidy: bool = True) -> list[str]:
        c, cb = self.coords
        shown = self.shown if tidy and self.shown else [r.tidy() if tidy else r for _, r in self.equations]
        return [f"d_{c} d_{cb}({f.name}) = {r.text()}" for (f, _), r in zip(self.equations, shown)]

    def subs(self, mapping: dict) -> "EomSystem":
        idx = [i for i, (f, _) in enumerate(self.equations) if f not in mapping]
        keep = [(self.equations[i][0], self.equations[i][1].subs(mapping).canonical()) for i in idx]
        shown = [self.shown[i].subs(mapping).tidy() for i in idx] if self.shown else None
        return EomSystem(self.coords, keep, shown)

    def equals(self, other: "EomSystem") -> bool:
        if sorted(self.fields()) != sorted(other.fields()):
            return False
        return all(r.equals(other.rhs(f.name)) for f, r in self.equations)

    def to_dict(self) -> dict:
        return {"coords": list(self.coords), "equations": self.lines()}


def zero_curvature_residual(lax: Lax, eom: EomSystem, sign_rule: bool = True) -> AlgExpr:
    F = curvature(lax, sign_rule)
    mapping = eom.mapping()
    for _, f, _ in lax.sector.cartan:
        if lax.sector.second(f) not in mapping:
            raise LaxError(f"no equation supplied for {f.name}")
    return F.subs(mapping).canonical()


def derive_eom(lax: Lax) -> EomSystem:
    sec = lax.sector
    F = curvature(lax)
    cartan_keys = {key for key, _, _ in sec.cartan}
    for k, v in F.comps.items():
        if k not in cartan_keys and not v.canonical().is_zero():
            raise LaxError(f"curvature has a non-Cartan component along {sec.frame.text(k)}")
    seconds = {sec.second(f) for f in sec.fields}
    eqs, shown = [], []
    for key, f, kappa in sec.cartan:
        comp = F.get(key)
        s2 = sec.second(f)
        lead = comp.coefficient_of(s2)
        if not lead.equals(Expr.const(q(-2 * kappa))):
            raise LaxError(f"unexpected second-derivative coefficient for {f.name}: {lead.text()}")
        rest = comp.without(s2)
        if rest.symbols() & seconds:
            raise LaxError(f"{f.name} equation couples to other second derivatives")
        rhs = rest.scaled(q(Fraction(1) / (2 * kappa)))
        eqs.append((f, rhs.canonical()))
        shown.append(rhs.tidy())
    return EomSystem(sec.coords, eqs, shown)


def zero_fields(sec: Sector, labels) -> dict:
    return {sec.field(n): Expr() for n in labels}


# verification ------------------------------------------------------------------


def residual_vanishes_at_points(res: AlgExpr, samples: int, seed: int) -> bool:
    return all(random_equal(v, Expr(), samples=samples, seed=seed)[0] for v in res.comps.values())


def series_agrees(model: str, sector: str = "phi", samples: int = 20, seed: int = 0, order: int = 20) -> bool:
    """Closed-form e^{+-ad Phi} against the truncated series, at float points."""
    sec = make_sector(model, sector)
    phi = sec.phi()
    for keys, sign in ((sec.raising, 1), (sec.lowering, -1)):
        for x in keys:
            closed = exp_ad_cartan(phi, x, sec.frame, sign)
            series = exp_ad_series(phi, x, sec.frame, sign, order)
            for k in set(closed.comps) | set(series.comps):
                ok, _ = random_equal(closed.get(k), series.get(k), samples=samples, seed=seed,
                                     exact=False, rtol=1e-12)
                if not ok:
                    return False
    return True


def cartan_block_h(sign_rule: bool) -> Expr:
    """H-coefficient of [L_u, L_ubar] for the finite model, before any rewriting."""
    lax = build_lax("liouville", "phi")
    return bracket(lax.plus, lax.minus, lax.sector.frame, sign_rule).get("H")


def zero_curvature_suite(samples: int = 100, seed: int = 0):
    from . import printed
    from .fieldexpr import cosh, sinh

    parts = []
    for model, ref in (("liouville", printed.toda_liouville), ("sinh", printed.toda_affine)):
        for sector in ("phi", "psi"):
            lax = build_lax(model, sector)
            target = ref(sector)
            res = zero_curvature_residual(lax, target)
            raw = curvature(lax).subs(target.mapping())
            parts.append(check(f"residual_{model}_{sector}", res.is_zero(),
                               random_points=residual_vanishes_at_points(raw, samples, seed), points=samples))
            derived = derive_eom(lax)
            parts.append(check(f"derived_{model}_{sector}", derived.equals(target), equations=derived.lines()))
    # derivation fields switched off
    derived = derive_eom(build_lax("sinh", "phi"))
    off = derived.subs({field_sym("xi00"): Expr(), field_sym("xi11"): Expr()})
    parts.append(check("derived_sinh_xi_zero", off.equals(printed.toda_affine_reduced()), equations=off.lines()))
    # the psi sector repeats the phi sector with renamed fields
    rename = {field_sym(a + g): Expr.of(field_sym(b + g)) for a, b in (("psi", "phi"), ("zeta", "xi"), ("rho", "eta"))
              for g in ("00", "11")}
    for model in ("liouville", "sinh"):
        p, v = derive_eom(build_lax(model, "phi")), derive_eom(build_lax(model, "psi"))
        same = all(r.subs(rename).equals(p.rhs(f.name.replace("psi", "phi").replace("zeta", "xi").replace("rho", "eta")))
                   for f, r in v.equations)
        parts.append(check(f"conjugate_pair_{model}", same))
    # a wrong sign must be caught
    lax = build_lax("liouville", "phi")
    flipped = printed.toda_liouville("phi")
    flipped = EomSystem(flipped.coords, [(f, -r) for f, r in flipped.equations])
    res = zero_curvature_residual(lax, flipped)
    prop = all(_has_factor_e2phi(v) for v in res.comps.values())
    parts.append(check("flipped_sign_detected", not res.is_zero() and prop))
    # coefficient signs: cosh^2 + sinh^2 with the rule, cosh^2 - sinh^2 = 1 without
    a, b = field_sym("phi00"), field_sym("phi11")
    c, s_ = cosh(Expr.of(b)), sinh(Expr.of(b))
    with_rule = cartan_block_h(True).equals(exp(2 * Expr.of(a)) * (c * c + s_ * s_))
    without = cartan_block_h(False).equals(exp(2 * Expr.of(a)))
    parts.append(check("sign_rule_matters", with_rule and without))
    parts.append(check("closed_form_vs_series", series_agrees("liouville")))
    return group("zero_curvature", parts)


def _has_factor_e2phi(v: Expr) -> bool:
    """v = e^(2 phi00) * (something free of phi00 exponentials)."""
    phi00 = field_sym("phi00")
    rest = (v * exp(-2 * Expr.of(phi00))).canonical()
    return all(not (isinstance(f, Atom) and f.kind == "exp" and phi00 in dict(f.arg))
               for m in rest.terms for f, _ in m)
