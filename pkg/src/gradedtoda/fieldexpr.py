"""Graded-coefficient expressions in fields, their derivatives and
exp/cosh/sinh/cos/sin atoms.

Factors commute up to the color sign (-1)^(a.b), so a term is stored as a
sorted factor tuple and a coefficient; reordering picks up the sign.  cosh
of a graded argument is [00], sinh carries the grading of its argument.

Three views of an expression:

* raw: what the algebra produced, only exp atoms are merged;
* canonical(): a normal form (exps for [00] hyperbolics, single-symbol
  sinh/cosh with cosh^2 -> 1 + sinh^2) used for all equality tests;
* tidy(): a display form that folds double angles and exp pairs back.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .grading import G00, G01, G10, Grading
from .quat import SQUARE, Quat
from .scalars import I, ONE, ZERO, fmt, q

COORDS = {"u": G10, "ubar": G10, "v": G01, "vbar": G01, "z": G00, "zbar": G00, "x": G00, "xbar": G00}
KINDS = ("exp", "cosh", "sinh", "cos", "sin")
_QT = type(ONE)


def _q(c):
    return c if isinstance(c, _QT) else q(c)


# symbols ---------------------------------------------------------------------


@dataclass(frozen=True)
class Sym:
    name: str
    base: Grading
    derivs: tuple = ()
    unit: bool = False   # S^2 = 1, constant under derivation

    @cached_property
    def grading(self) -> Grading:
        g = self.base
        for c in self.derivs:
            g = g + COORDS[c]
        return g

    @cached_property
    def key(self):
        return (0, self.name, len(self.derivs), self.derivs)

    def d(self, coord: str) -> "Sym":
        return Sym(self.name, self.base, tuple(sorted(self.derivs + (coord,))), self.unit)

    def text(self) -> str:
        if not self.derivs:
            return self.name
        return " ".join(f"d_{c}" for c in self.derivs) + f"({self.name})"

    def __repr__(self) -> str:
        return self.text()


def field_sym(name: str, *derivs: str) -> Sym:
    """Field whose grading is read off the trailing two digits of its name."""
    return Sym(name, Grading.parse(name[-2:]), tuple(sorted(derivs)))


def unit_sym(name: str, grading: Grading = G10) -> Sym:
    if SQUARE[grading] != 1:
        raise ValueError("a unit symbol needs a grading whose M-basis element squares to +1")
    return Sym(name, grading, (), True)


LinComb = tuple  # sorted tuple of (Sym, Fraction)


def lincomb(d: dict) -> LinComb:
    return tuple(sorted(((s, Fraction(c)) for s, c in d.items() if c), key=lambda t: t[0].key))


def lin_grading(arg: LinComb) -> Grading:
    gs = {s.grading for s, _ in arg}
    if len(gs) > 1:
        raise ValueError(f"inhomogeneous argument {lin_text(arg)}")
    return gs.pop() if gs else G00


def lin_text(arg: LinComb) -> str:
    out = []
    for s, c in arg:
        mag = abs(c)
        t = s.text() if mag == 1 else f"{mag}*{s.text()}"
        out.append(("-" if c < 0 else "+") + t)
    s = " ".join(out).lstrip("+")
    return s.replace(" +", " + ").replace(" -", " - ") if s else "0"


@dataclass(frozen=True)
class Atom:
    kind: str
    arg: LinComb

    @cached_property
    def grading(self) -> Grading:
        g = lin_grading(self.arg)
        if self.kind == "exp" and g != G00:
            raise ValueError("exp needs a [00] argument")
        return g if self.kind in ("sinh", "sin") else G00

    @cached_property
    def key(self):
        return (1, self.kind, tuple((s.key, c) for s, c in self.arg))

    def text(self) -> str:
        return f"{self.kind}({lin_text(self.arg)})"


def _fgrading(f, p: int) -> Grading:
    return f.grading * p


def _mul_monomials(m1: tuple, m2: tuple):
    sign = 1
    for f2, p2 in m2:
        g2 = f2.grading
        k2 = f2.key
        for f1, p1 in m1:
            if f1.key > k2 and (p1 * p2) % 2 and f1.grading.pairing(g2):
                sign = -sign
    merged: dict = {}
    exp_arg: dict = {}
    for f, p in m1 + m2:
        if isinstance(f, Atom) and f.kind == "exp":
            for s, c in f.arg:
                exp_arg[s] = exp_arg.get(s, 0) + c * p
            continue
        merged[f] = merged.get(f, 0) + p
    out = []
    for f, p in merged.items():
        if isinstance(f, Sym) and f.unit:
            p %= 2
        if p:
            out.append((f, p))
    arg = lincomb(exp_arg)
    if arg:
        out.append((Atom("exp", arg), 1))
    out.sort(key=lambda t: t[0].key)
    return sign, tuple(out)


def _mono_grading(m: tuple) -> Grading:
    g = G00
    for f, p in m:
        g = g + _fgrading(f, p)
    return g


# expressions -----------------------------------------------------------------


class Expr:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    # construction
    @classmethod
    def const(cls, c) -> "Expr":
        return cls({(): _q(c)})

    @classmethod
    def of(cls, s: Sym) -> "Expr":
        return cls({((s, 1),): ONE})

    @classmethod
    def atom(cls, kind: str, arg: LinComb) -> "Expr":
        if not arg:
            return cls.const({"exp": 1, "cosh": 1, "cos": 1}.get(kind, 0))
        return cls({((Atom(kind, arg), 1),): ONE})

    # arithmetic
    def __add__(self, other) -> "Expr":
        other = _lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return Expr(out)

    __radd__ = __add__

    def __neg__(self) -> "Expr":
        return Expr({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Expr":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "Expr":
        return _lift(other) - self

    def scaled(self, c) -> "Expr":
        c = _q(c)
        return Expr({m: c * v for m, v in self.terms.items()})

    def __mul__(self, other) -> "Expr":
        if not isinstance(other, Expr):
            return self.scaled(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                s, m = _mul_monomials(m1, m2)
                v = c1 * c2 if s == 1 else -(c1 * c2)
                out[m] = out.get(m, ZERO) + v
        return Expr(out)

    def __rmul__(self, other) -> "Expr":
        return self.scaled(other)

    def __pow__(self, n: int) -> "Expr":
        out = Expr.const(1)
        for _ in range(n):
            out = out * self
        return out

    # queries
    def is_zero(self) -> bool:
        return not self.terms

    def grading(self) -> Grading | None:
        gs = {_mono_grading(m) for m in self.terms}
        if len(gs) > 1:
            return None
        return gs.pop() if gs else G00

    def symbols(self) -> set:
        out = set()
        for m in self.terms:
            for f, _ in m:
                if isinstance(f, Sym):
                    out.add(f)
                else:
                    out.update(s for s, _ in f.arg)
        return out

    def as_lincomb(self) -> LinComb:
        """The expression as a linear combination of symbols, if it is one."""
        d: dict = {}
        for m, c in self.terms.items():
            if len(m) != 1 or m[0][1] != 1 or not isinstance(m[0][0], Sym) or c.y:
                raise ValueError(f"not a real linear combination of symbols: {self.text()}")
            d[m[0][0]] = Fraction(int(c.x.numerator), int(c.x.denominator))
        return lincomb(d)

    def coefficient_of(self, s: Sym) -> "Expr":
        """Collect the terms linear in s, with s pulled to the front."""
        out = Expr()
        for m, c in self.terms.items():
            for i, (f, p) in enumerate(m):
                if f == s and p == 1:
                    sign = 1
                    for f0, p0 in m[:i]:
                        if p0 % 2 and f0.grading.pairing(s.grading):
                            sign = -sign
                    rest = m[:i] + m[i + 1:]
                    out = out + Expr({rest: c if sign == 1 else -c})
        return out

    def without(self, s: Sym) -> "Expr":
        return Expr({m: c for m, c in self.terms.items() if not any(f == s for f, _ in m)})

    # calculus
    def d(self, coord: str) -> "Expr":
        cg = COORDS[coord]
        out = Expr()
        for m, c in self.terms.items():
            flat = [f for f, p in m for _ in range(p)]
            for i, f in enumerate(flat):
                df = _d_factor(f, coord)
                if df.is_zero():
                    continue
                sign = 1
                for f0 in flat[:i]:
                    if f0.grading.pairing(cg):
                        sign = -sign
                left = _product(flat[:i])
                right = _product(flat[i + 1:])
                out = out + (left * df * right).scaled(c if sign == 1 else -c)
        return out

    def subs(self, mapping: dict) -> "Expr":
        if not mapping:
            return self
        out = Expr()
        for m, c in self.terms.items():
            t = Expr.const(c)
            for f, p in m:
                if isinstance(f, Sym):
                    img = _lift(mapping[f]) if f in mapping else Expr.of(f)
                    t = t * (img ** p)
                else:
                    if any(s in mapping for s, _ in f.arg):
                        arg = Expr()
                        for s, k in f.arg:
                            arg = arg + (_lift(mapping[s]) if s in mapping else Expr.of(s)).scaled(q(k))
                        img = FUNCS[f.kind](arg)
                    else:
                        img = Expr({((f, 1),): ONE})
                    t = t * (img ** p)
            out = out + t
        return out

    # normal forms
    def canonical(self) -> "Expr":
        return canonical(self)

    def equals(self, other) -> bool:
        return (self - _lift(other)).canonical().is_zero()

    def tidy(self) -> "Expr":
        return tidy(self)

    # evaluation
    def evaluate(self, sample: "Sample") -> Quat:
        total = Quat()
        for m, c in self.terms.items():
            v = Quat.basis(G00, sample.scalar(c))
            for f, p in m:
                fv = sample.factor(f)
                for _ in range(p):
                    v = v * fv
            total = total + v
        return total

    # text
    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_display_key):
            c = self.terms[m]
            body = "*".join(f.text() + (f"^{p}" if p > 1 else "") for f, p in m)
            cs = fmt(c)
            if not body:
                parts.append(cs if " " not in cs else f"({cs})")
            elif cs == "1":
                parts.append(body)
            elif cs == "-1":
                parts.append("-" + body)
            elif " " in cs.lstrip("-") or "i" in cs:
                parts.append(f"({cs})*{body}")
            else:
                parts.append(f"{cs}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Expr({self.text()})"


def _display_key(m):
    exps = [f for f, _ in m if isinstance(f, Atom) and f.kind == "exp"]
    first = exps[0].arg if exps else ()
    return (tuple((s.key, -c) for s, c in first), len(m), tuple((f.key, p) for f, p in m))


def _lift(x) -> Expr:
    if isinstance(x, Expr):
        return x
    if isinstance(x, Sym):
        return Expr.of(x)
    return Expr.const(x)


def _product(factors) -> Expr:
    out = Expr.const(1)
    for f in factors:
        out = out * Expr({((f, 1),): ONE})
    return out


def _d_factor(f, coord: str) -> Expr:
    if isinstance(f, Sym):
        return Expr() if f.unit else Expr.of(f.d(coord))
    darg = Expr()
    for s, c in f.arg:
        if not s.unit:
            darg = darg + Expr.of(s.d(coord)).scaled(q(c))
    if darg.is_zero():
        return Expr()
    inner = {
        "exp": Expr.atom("exp", f.arg),
        "cosh": Expr.atom("sinh", f.arg),
        "sinh": Expr.atom("cosh", f.arg),
        "cos": -Expr.atom("sin", f.arg),
        "sin": Expr.atom("cos", f.arg),
    }[f.kind]
    return darg * inner


def sym(s) -> Expr:
    return Expr.of(s if isinstance(s, Sym) else field_sym(s))


def _atom_fn(kind):
    def fn(x) -> Expr:
        arg = _lift(x).as_lincomb()
        if kind == "exp" and lin_grading(arg) != G00:
            return Expr.atom("cosh", arg) + Expr.atom("sinh", arg)
        return Expr.atom(kind, arg)

    fn.__name__ = kind
    return fn


exp = _atom_fn("exp")
cosh = _atom_fn("cosh")
sinh = _atom_fn("sinh")
cos = _atom_fn("cos")
sin = _atom_fn("sin")
FUNCS = {"exp": exp, "cosh": cosh, "sinh": sinh, "cos": cos, "sin": sin}


def split_field(e: Expr, s: Sym, base: Sym | None, unit: Sym, partner: Sym, strict: bool = True) -> Expr:
    """Substitute s -> base + unit*partner, also inside transcendental atoms.

    The two pieces have the grading of s, so they commute and the addition
    formulas apply.  (unit*partner)^2 = +-partner^2 depending on whether the
    partner anticommutes with the unit; with a minus sign hyperbolic and
    trigonometric functions trade places.  ``strict=False`` allows an
    inhomogeneous split, which is only sound when everything commutes.
    """
    if strict:
        if base is not None and base.grading != s.grading:
            raise ValueError("base must carry the grading of the split field")
        if unit.grading + partner.grading != s.grading:
            raise ValueError("unit*partner must carry the grading of the split field")
    U = Expr.of(unit)
    swap = partner.grading.pairing(unit.grading) % 2 == 1
    direct = {s: (Expr.of(base) if base is not None else Expr()) + U * Expr.of(partner)}

    def pieces(kind, k, rest_arg):
        # f(rest + k base + k U w) in terms of single-argument atoms
        a = Expr()
        for t, c in rest_arg:
            a = a + Expr.of(t).scaled(q(c))
        if base is not None:
            a = a + Expr.of(base).scaled(q(k))
        w = Expr.of(partner).scaled(q(k))
        if kind in ("cosh", "sinh", "exp"):
            ch_b, sh_b = (cos(w), U * sin(w)) if swap else (cosh(w), U * sinh(w))
            if kind == "exp":
                return exp(a) * (ch_b + sh_b)
            ca, sa = cosh(a), sinh(a)
            return ca * ch_b + sa * sh_b if kind == "cosh" else sa * ch_b + ca * sh_b
        c_b, s_b = (cosh(w), U * sinh(w)) if swap else (cos(w), U * sin(w))
        ca, sa = cos(a), sin(a)
        return ca * c_b - sa * s_b if kind == "cos" else sa * c_b + ca * s_b

    out = Expr()
    for m, c in e.terms.items():
        t = Expr.const(c)
        for f, p in m:
            if isinstance(f, Sym):
                img = direct[f] if f in direct else Expr.of(f)
            else:
                k = dict(f.arg).get(s)
                if k is None:
                    img = Expr({((f, 1),): ONE})
                else:
                    img = pieces(f.kind, k, tuple((t_, c_) for t_, c_ in f.arg if t_ != s))
            t = t * (img ** p)
        out = out + t
    return out


def unit_parts(e: Expr, unit: Sym) -> tuple[Expr, Expr]:
    """Write e = A + unit*B with A, B free of the unit."""
    a = Expr({m: c for m, c in e.terms.items() if not any(f == unit for f, _ in m)})
    b = e.coefficient_of(unit)
    return a, b


# canonical form --------------------------------------------------------------


def _rewrite_factor(f, p):
    """Replacement for f^p, or None when the factor is already canonical."""
    if isinstance(f, Sym):
        return None
    kind, arg = f.kind, f.arg
    if kind == "exp":
        return None
    g = lin_grading(arg)
    if kind in ("cosh", "sinh") and g == G00:
        e1, e2 = Expr.atom("exp", arg), Expr.atom("exp", tuple((s, -c) for s, c in arg))
        base = (e1 + e2).scaled(q("1/2")) if kind == "cosh" else (e1 - e2).scaled(q("1/2"))
        return base ** p
    if len(arg) == 1 and arg[0][1] < 0:
        pos = Expr.atom(kind, ((arg[0][0], -arg[0][1]),))
        return (pos if kind in ("cosh", "cos") else -pos) ** p
    if len(arg) > 1 or arg[0][1] != 1:
        split = _split_arg(arg)
        if split is None:
            return None
        a, b = split
        kc, ks = _pair(kind)
        ca, sa = Expr.atom(kc, a), Expr.atom(ks, a)
        cb, sb = Expr.atom(kc, b), Expr.atom(ks, b)
        if kind == "cosh":
            base = ca * cb + sa * sb
        elif kind == "sinh":
            base = sa * cb + ca * sb
        elif kind == "cos":
            base = ca * cb - sa * sb
        else:
            base = sa * cb + ca * sb
        return base ** p
    if p >= 2 and kind in ("cosh", "cos"):
        s = Expr.atom("sinh" if kind == "cosh" else "sin", arg)
        sq = s * s
        base = Expr.const(1) + sq if kind == "cosh" else Expr.const(1) - sq
        return base * Expr.atom(kind, arg) ** (p - 2)
    return None


def _pair(kind):
    return ("cosh", "sinh") if kind in ("cosh", "sinh") else ("cos", "sin")


def _split_arg(arg):
    """Split an argument with integer coefficients into two commuting pieces."""
    if any(c.denominator != 1 for _, c in arg):
        return None
    if len(arg) > 1:
        return arg[:1], arg[1:]
    s, c = arg[0]
    return ((s, c - 1),), ((s, Fraction(1)),)


def canonical(e: Expr) -> Expr:
    work = dict(e.terms)
    done: dict = {}
    while work:
        m, c = work.popitem()
        if not c:
            continue
        for i, (f, p) in enumerate(m):
            rep = _rewrite_factor(f, p)
            if rep is not None:
                new = Expr({m[:i]: ONE}) * rep * Expr({m[i + 1:]: ONE})
                for m2, c2 in new.terms.items():
                    work[m2] = work.get(m2, ZERO) + c * c2
                break
        else:
            done[m] = done.get(m, ZERO) + c
    return Expr(done)


# display form ----------------------------------------------------------------


def _pull(m: tuple, targets: list):
    """Split m = sign * prod(targets) * rest; targets are (factor, power) present in m."""
    sign = 1
    rest = list(m)
    for f, p in targets:
        idx = next(i for i, (g, _) in enumerate(rest) if g == f)
        g, have = rest[idx]
        for f0, p0 in rest[:idx]:
            if (p0 * p) % 2 and f0.grading.pairing(f.grading):
                sign = -sign
        if have == p:
            rest.pop(idx)
        else:
            rest[idx] = (g, have - p)
    return sign, tuple(rest)


def tidy(e: Expr) -> Expr:
    e = _normalize_signs(e)
    e = _fold_double_angles(e)
    e = _fold_exp_pairs(e)
    return e


def _normalize_signs(e: Expr) -> Expr:
    """Make the leading coefficient of every hyperbolic or trig argument positive."""
    out = Expr()
    for m, c in e.terms.items():
        term = Expr.const(c)
        for f, p in m:
            if isinstance(f, Atom) and f.kind != "exp" and f.arg and f.arg[0][1] < 0:
                flipped = Expr.atom(f.kind, tuple((s, -k) for s, k in f.arg))
                odd = f.kind in ("sinh", "sin") and p % 2
                term = term * (-flipped if odd else flipped) ** p
            else:
                term = term * Expr({((f, p),): ONE})
        out = out + term
    return out


def _fold_double_angles(e: Expr) -> Expr:
    groups: dict = {}
    out = Expr()
    for m, c in e.terms.items():
        hit = None
        for f, p in m:
            if isinstance(f, Atom) and f.kind in ("cosh", "sinh", "cos", "sin"):
                kc, ks = _pair(f.kind)
                C, S = Atom(kc, f.arg), Atom(ks, f.arg)
                pc = dict(m).get(C, 0)
                ps = dict(m).get(S, 0)
                if pc + ps == 2:
                    hit = (C, S, pc, ps)
                    break
        if hit is None:
            out = out + Expr({m: c})
            continue
        C, S, pc, ps = hit
        targets = [(x, k) for x, k in ((C, pc), (S, ps)) if k]
        sign, rest = _pull(m, targets)
        slot = {(2, 0): 0, (0, 2): 1, (1, 1): 2}[(pc, ps)]
        key = (C, S, rest)
        groups.setdefault(key, [ZERO, ZERO, ZERO])[slot] += c if sign == 1 else -c
    half = q("1/2")
    for (C, S, rest), (a, b, g) in groups.items():
        hyper = C.kind == "cosh"
        arg2 = tuple((s, 2 * k) for s, k in C.arg)
        R = Expr({rest: ONE})
        # a C^2 + b S^2 = (a+b)/2 (C^2 + S^2) + (a-b)/2 (C^2 - S^2), with the trig signs swapped
        if hyper:
            out = out + (Expr.atom("cosh", arg2).scaled((a + b) * half) + Expr.const((a - b) * half)) * R
            out = out + Expr.atom("sinh", arg2).scaled(g * half) * R
        else:
            out = out + (Expr.atom("cos", arg2).scaled((a - b) * half) + Expr.const((a + b) * half)) * R
            out = out + Expr.atom("sin", arg2).scaled(g * half) * R
    return out


def _fold_exp_pairs(e: Expr) -> Expr:
    groups: dict = {}
    out = Expr()
    for m, c in e.terms.items():
        ex = [f for f, _ in m if isinstance(f, Atom) and f.kind == "exp"]
        if not ex:
            out = out + Expr({m: c})
            continue
        f = ex[0]
        sign, rest = _pull(m, [(f, 1)])
        flip = f.arg[0][1] < 0
        arg = tuple((s, -k) for s, k in f.arg) if flip else f.arg
        slot = groups.setdefault((arg, rest), [ZERO, ZERO])
        slot[1 if flip else 0] += c if sign == 1 else -c
    for (arg, rest), (a, b) in groups.items():
        R = Expr({rest: ONE})
        if a and b and a == b:
            out = out + Expr.atom("cosh", arg).scaled(2 * a) * R
        elif a and b and a == -b:
            out = out + Expr.atom("sinh", arg).scaled(2 * a) * R
        else:
            out = out + Expr.atom("exp", arg).scaled(a) * R
            out = out + Expr.atom("exp", tuple((s, -k) for s, k in arg)).scaled(b) * R
    return out


# evaluation through the M-basis homomorphism ---------------------------------


@dataclass
class Sample:
    """Values for each symbol: lam (the symbol), and in exact mode also
    W = e^lam and Om = e^(i lam) as independent Gaussian rationals."""

    exact: bool
    values: dict = field(default_factory=dict)
    rng: random.Random = field(default_factory=lambda: random.Random(0))

    def _value(self, s: Sym):
        v = self.values.get(s)
        if v is None:
            r = self.rng
            if self.exact:
                lam = q(Fraction(r.randint(-9, 9), r.randint(1, 6)))
                W = q(Fraction(r.randint(1, 40), r.randint(1, 40)))
                t = Fraction(r.randint(-20, 20), r.randint(1, 20))
                Om = (ONE + I * q(t)) / (ONE - I * q(t))
                v = (lam, W, Om)
            else:
                v = (r.uniform(-0.8, 0.8),)
            self.values[s] = v
        return v

    def scalar(self, c):
        if self.exact:
            return c
        return complex(float(c.x), float(c.y))

    def factor(self, f) -> Quat:
        if isinstance(f, Sym):
            if f.unit:
                return Quat.basis(f.grading, self.scalar(ONE))
            return Quat.basis(f.grading, self._value(f)[0] if self.exact else complex(self._value(f)[0]))
        g = lin_grading(f.arg)
        if self.exact:
            E = ONE
            Om = ONE
            for s, c in f.arg:
                if c.denominator != 1:
                    raise ValueError("exact evaluation needs integer multiples inside atoms")
                _, W, O = self._value(s)
                E = E * _ipow(W, int(c))
                Om = Om * _ipow(O, int(c))
            ch, sh = (E + ONE / E) * q("1/2"), (E - ONE / E) * q("1/2")
            co, si = (Om + ONE / Om) * q("1/2"), (Om - ONE / Om) / (2 * I)
        else:
            mu = sum(float(c) * self._value(s)[0] for s, c in f.arg)
            ch, sh, co, si = (complex(math.cosh(mu)), complex(math.sinh(mu)),
                              complex(math.cos(mu)), complex(math.sin(mu)))
        if SQUARE[g] == -1:
            ch, sh, co, si = co, si, ch, sh
        table = {
            "exp": Quat({G00: ch}) + Quat({g: sh}) if g != G00 else Quat({G00: ch + sh}),
            "cosh": Quat({G00: ch}),
            "sinh": Quat({g: sh}),
            "cos": Quat({G00: co}),
            "sin": Quat({g: si}),
        }
        return table[f.kind]


def _ipow(x, n: int):
    if n >= 0:
        out = ONE
        for _ in range(n):
            out = out * x
        return out
    return ONE / _ipow(x, -n)


def quat_is_zero(v: Quat, tol: float | None = None) -> bool:
    if tol is None:
        return all(not bool(c) for c in v.c.values())
    return all(abs(c) <= tol for c in v.c.values())


def quat_norm(v: Quat) -> float:
    return max((abs(complex(c)) if not isinstance(c, _QT) else abs(complex(float(c.x), float(c.y)))
                for c in v.c.values()), default=0.0)


def random_equal(a: Expr, b: Expr, samples: int = 100, seed: int = 0, exact: bool = True,
                 rtol: float = 1e-12) -> tuple[bool, int]:
    """Compare two expressions at random points; returns (ok, points checked)."""
    rng = random.Random(seed)
    diff = a - b
    for _ in range(samples):
        smp = Sample(exact, rng=rng)
        if exact:
            if not quat_is_zero(diff.evaluate(smp)):
                return False, samples
        else:
            va, vb = a.evaluate(smp), b.evaluate(smp)
            scale = max(quat_norm(va), quat_norm(vb), 1.0)
            if quat_norm(va - vb) > rtol * scale:
                return False, samples
    return True, samples
