"""Goursat problems on a characteristic grid and the checks built on them."""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass, field

import numpy as np

from ..report import check, group, mismatch
from . import backend
from .models import field_names, model_id, rhs

GUARD = 50.0


class DivergenceError(RuntimeError):
    def __init__(self, model: str, cell: tuple):
        super().__init__(f"{model}: solution left |phi| <= {GUARD} at node {cell}")
        self.cell = cell


@dataclass
class GoursatProblem:
    """d_z d_zbar phi = sign * F(phi) on [z0, z1] x [zb0, zb1] with data on z = z0 and zbar = zb0.

    ``edge_z[f]`` holds phi_f(z_i, zb0) and ``edge_zbar[f]`` holds phi_f(z0, zb_j).
    """

    model: str
    domain: tuple
    h: float
    edge_z: dict
    edge_zbar: dict
    sign: float = 1.0

    def __post_init__(self):
        model_id(self.model)
        self.nz, self.nzb = _steps(self.domain[0], self.domain[1], self.h), _steps(self.domain[2], self.domain[3], self.h)
        for f in field_names(self.model):
            ez, ezb = np.asarray(self.edge_z[f], float), np.asarray(self.edge_zbar[f], float)
            if ez.shape != (self.nz + 1,) or ezb.shape != (self.nzb + 1,):
                raise ValueError(f"boundary data for {f} does not fit the grid")
            if abs(ez[0] - ezb[0]) > 1e-12 * max(1.0, abs(ez[0])):
                raise ValueError(f"corner values of {f} disagree: {ez[0]} vs {ezb[0]}")

    @property
    def fields(self) -> tuple:
        return field_names(self.model)

    def axes(self):
        z0, z1, zb0, zb1 = self.domain
        return z0 + self.h * np.arange(self.nz + 1), zb0 + self.h * np.arange(self.nzb + 1)

    @classmethod
    def from_function(cls, model: str, fn, domain=(1.0, 2.0, 1.0, 2.0), h: float = 1 / 64, sign: float = 1.0):
        """Boundary data sampled from fn(z, zbar) -> {field: values}."""
        nz, nzb = _steps(domain[0], domain[1], h), _steps(domain[2], domain[3], h)
        z = domain[0] + h * np.arange(nz + 1)
        zb = domain[2] + h * np.arange(nzb + 1)
        ez, ezb = fn(z, np.full_like(z, domain[2])), fn(np.full_like(zb, domain[0]), zb)
        return cls(model, tuple(domain), h, dict(ez), dict(ezb), sign)

    def transposed(self) -> "GoursatProblem":
        z0, z1, zb0, zb1 = self.domain
        return GoursatProblem(self.model, (zb0, zb1, z0, z1), self.h, self.edge_zbar, self.edge_z, self.sign)


def _steps(a: float, b: float, h: float) -> int:
    n = (b - a) / h
    if n < 1 or abs(n - round(n)) > 1e-9 * max(1.0, n):
        raise ValueError(f"step {h} does not divide [{a}, {b}]")
    return int(round(n))


@dataclass
class Grid:
    problem: GoursatProblem
    values: dict  # field -> (nz+1, nzb+1) array
    backend: str = ""
    extra: dict = field(default_factory=dict)

    def __getitem__(self, name):
        return self.values[name]

    def stack(self) -> np.ndarray:
        return np.stack([self.values[f] for f in self.problem.fields])

    def to_csv(self, out=None) -> str:
        z, zb = self.problem.axes()
        buf = out if out is not None else io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        names = list(self.problem.fields) + list(self.extra)
        w.writerow(["z", "zbar"] + names)
        cols = [self.values[f] for f in self.problem.fields] + [self.extra[k] for k in self.extra]
        for i in range(len(z)):
            for j in range(len(zb)):
                w.writerow([f"{z[i]:.12e}", f"{zb[j]:.12e}"] + [f"{c[i, j]:.12e}" for c in cols])
        return buf.getvalue() if out is None else ""


def solve_goursat(p: GoursatProblem, backend_name: str | None = None) -> Grid:
    name, march = backend.select(backend_name) if backend_name else (backend.BACKEND, backend.march)
    u = np.zeros((len(p.fields), p.nz + 1, p.nzb + 1))
    for k, f in enumerate(p.fields):
        u[k, :, 0] = p.edge_z[f]
        u[k, 0, :] = p.edge_zbar[f]
    status, i, j = march(u, model_id(p.model), float(p.h), float(p.sign), GUARD)
    if status:
        raise DivergenceError(p.model, (i, j))
    return Grid(p, {f: u[k] for k, f in enumerate(p.fields)}, name)


def residual(g: Grid, values: np.ndarray | None = None) -> float:
    """Max over interior nodes of |centered d_z d_zbar phi - F(phi)|."""
    p = g.problem
    u = g.stack() if values is None else values
    if u.shape[1] < 3 or u.shape[2] < 3:
        return 0.0
    mixed = (u[:, 2:, 2:] - u[:, 2:, :-2] - u[:, :-2, 2:] + u[:, :-2, :-2]) / (4 * p.h * p.h)
    return float(np.abs(mixed - rhs(p.model, u[:, 1:-1, 1:-1], p.sign)).max())


# exact data ----------------------------------------------------------------------


def liouville_exact(z, zb):
    """phi* = -ln(z + zbar): d_z d_zbar phi* = 1/(z+zbar)^2 = e^{2 phi*}."""
    return -np.log(z + zb)


def liouville_general(z, zb):
    """phi = ln(A'B')/2 - ln(A + B) with A = z^2, B = zbar.

    Unlike phi*, its stress tensor phi_zz - phi_z^2 is not zero, so the
    h^4 part of the cell error does not cancel.
    """
    return 0.5 * np.log(2 * z) - np.log(z**2 + zb)


def liouville_problem(h: float = 1 / 64, domain=(1.0, 2.0, 1.0, 2.0), exact=liouville_exact) -> GoursatProblem:
    return GoursatProblem.from_function("scalar-liouville", lambda z, zb: {"phi": exact(z, zb)}, domain, h)


def exact_error(g: Grid, exact=liouville_exact) -> float:
    z, zb = g.problem.axes()
    Z, ZB = np.meshgrid(z, zb, indexing="ij")
    return float(np.abs(g["phi"] - exact(Z, ZB)).max())


def random_edges(names, seed: int, degree: int = 3, scale: float = 0.2, centred=()):
    """Smooth polynomial boundary data in (z - z0) and (zbar - zb0), agreeing at the corner.

    Fields named in ``centred`` are perturbations of the exact Liouville solution,
    which keeps Liouville runs away from their finite-distance blow-up.
    """
    rng = random.Random(seed)
    coef = {f: ([rng.uniform(-scale, scale) for _ in range(degree + 1)],
                [0.0] + [rng.uniform(-scale, scale) for _ in range(degree)]) for f in names}

    def fn(z0, zb0):
        def data(z, zb):
            out = {}
            for f, (cz, czb) in coef.items():
                out[f] = np.polyval(cz[::-1], z - z0) + np.polyval(czb[::-1], zb - zb0)
                if f in centred:
                    out[f] = out[f] + liouville_exact(z, zb)
            return out
        return data
    return fn


# convergence ---------------------------------------------------------------------


def convergence_order(errors: dict):
    """Least-squares slope of log(error) against log(h); 'exact' when every error vanishes."""
    hs = sorted(errors)
    es = [errors[h] for h in hs]
    if all(e == 0 for e in es):
        return "exact"
    x, y = np.log(hs), np.log(es)
    return float(np.polyfit(x, y, 1)[0])


def liouville_convergence(steps=(1 / 16, 1 / 32, 1 / 64, 1 / 128), exact=liouville_exact):
    errs = {h: exact_error(solve_goursat(liouville_problem(h, exact=exact)), exact) for h in steps}
    return convergence_order(errs), errs


def sinh_convergence(steps=(1 / 16, 1 / 32, 1 / 64, 1 / 128), ref_h: float = 1 / 512, seed: int = 0,
                     domain=(0.0, 1.0, 0.0, 1.0)):
    """scalar-sinh against a fine self-reference on the same boundary functions."""
    data = random_edges(("phi",), seed, scale=0.05)(domain[0], domain[2])
    ref = solve_goursat(GoursatProblem.from_function("scalar-sinh", data, domain, ref_h))
    errs = {}
    for h in steps:
        g = solve_goursat(GoursatProblem.from_function("scalar-sinh", data, domain, h))
        r = int(round(h / ref_h))
        errs[h] = float(np.abs(g["phi"] - ref["phi"][::r, ::r]).max())
    return convergence_order(errs), errs


# decoupling and reductions -------------------------------------------------------


def decoupling_check(model: str, seed: int = 0, h: float = 1 / 64, domain=(1.0, 2.0, 1.0, 2.0), tol: float = 1e-6,
                     zero_tilde: bool = False):
    """Coupled (phi, phit) against two scalar solves for phi +- phit."""
    two, one = (("liouville2", "scalar-liouville") if model == "liouville" else ("sinh2", "scalar-sinh"))
    lv = model == "liouville"
    base = random_edges(("phi", "phit"), seed, scale=0.1 if lv else 0.05,
                        centred=("phi",) if lv else ())(domain[0], domain[2])

    def data(z, zb):
        out = base(z, zb)
        if zero_tilde:
            out["phit"] = np.zeros_like(out["phit"])
        return out

    coupled = solve_goursat(GoursatProblem.from_function(two, data, domain, h))
    parts = {}
    for s, tag in ((1, "plus"), (-1, "minus")):
        def scalar(z, zb, s=s):
            d = data(z, zb)
            return {"phi": d["phi"] + s * d["phit"]}
        parts[tag] = solve_goursat(GoursatProblem.from_function(one, scalar, domain, h))["phi"]
    phi = (parts["plus"] + parts["minus"]) / 2
    phit = (parts["plus"] - parts["minus"]) / 2
    dev = float(max(np.abs(phi - coupled["phi"]).max(), np.abs(phit - coupled["phit"]).max()))
    return check(f"decoupling_{model}", dev <= tol, max_deviation=dev, tolerance=tol, h=h, seed=seed)


def eight_field_consistency(model: str, seed: int = 0, h: float = 1 / 64, domain=(1.0, 2.0, 1.0, 2.0),
                            tol: float = 1e-6, zero_tol: float = 1e-10, all_zero: bool = False):
    """(a) f11 = f01 = 0 data keeps them zero and matches the four-field solve;
    (b) with f10 = 0 as well, f00+- match the scalar equation of sign +-1."""
    eight = "liouville8" if model == "liouville" else "sinh8"
    two = "liouville2" if model == "liouville" else "sinh2"
    one = "scalar-liouville" if model == "liouville" else "scalar-sinh"
    names = field_names(eight)
    lv = model == "liouville"
    base = random_edges(names, seed, scale=0.0 if all_zero else (0.1 if lv else 0.05),
                        centred=("f00p", "f00m") if lv else ())(domain[0], domain[2])
    children = []
    for stage, dropped in (("four_field", ("f11", "f01")), ("scalar", ("f11", "f01", "f10"))):
        def data(z, zb, dropped=dropped):
            d = base(z, zb)
            return {f: (np.zeros_like(v) if f[:3] in dropped else v) for f, v in d.items()}
        g = solve_goursat(GoursatProblem.from_function(eight, data, domain, h))
        stay = max(float(np.abs(g[f]).max()) for f in names if f[:3] in dropped)
        dev = 0.0
        for tag, s in (("p", 1.0), ("m", -1.0)):
            if stage == "four_field":
                def red(z, zb, tag=tag):
                    d = data(z, zb)
                    return {"phi": d["f00" + tag], "phit": d["f10" + tag]}
                r = solve_goursat(GoursatProblem.from_function(two, red, domain, h, sign=s))
                dev = max(dev, float(np.abs(r["phi"] - g["f00" + tag]).max()),
                          float(np.abs(r["phit"] - g["f10" + tag]).max()))
            else:
                r = solve_goursat(GoursatProblem.from_function(one, lambda z, zb, tag=tag: {"phi": data(z, zb)["f00" + tag]},
                                                               domain, h, sign=s))
                dev = max(dev, float(np.abs(r["phi"] - g["f00" + tag]).max()))
        children.append(check(f"{eight}_{stage}", stay <= zero_tol and dev <= tol, dropped_max=stay,
                              max_deviation=dev, tolerance=tol))
    return group(f"eight_field_{model}", children)


# slaved eta fields ---------------------------------------------------------------


def eta_sources(phi00, phi11):
    w = np.exp(-2 * phi00)
    return w * np.cosh(2 * phi11), -w * np.sinh(2 * phi11)


def eta_quadrature(g: Grid, edge: float = 0.0):
    """eta00, eta11 from d_z d_zbar eta = G(phi) by direct quadrature over cells,
    with G at the cell average and constant data on both edges."""
    p = g.problem
    phi, phit = g["phi"], g["phit"]
    avg = lambda a: ((a[:-1, :-1] + a[1:, 1:]) + (a[1:, :-1] + a[:-1, 1:])) * 0.25  # noqa: E731
    out = []
    for src in eta_sources(avg(phi), avg(phit)):
        eta = np.full(phi.shape, edge)
        eta[1:, 1:] += np.cumsum(np.cumsum(p.h * p.h * src, axis=0), axis=1)
        out.append(eta)
    return out


def eta_residual(g: Grid) -> float:
    e00, e11 = eta_quadrature(g)
    h = g.problem.h
    worst = 0.0
    for eta, src in zip((e00, e11), eta_sources(g["phi"], g["phit"])):
        mixed = (eta[2:, 2:] - eta[2:, :-2] - eta[:-2, 2:] + eta[:-2, :-2]) / (4 * h * h)
        worst = max(worst, float(np.abs(mixed - src[1:-1, 1:-1]).max()))
    return worst


# suite ---------------------------------------------------------------------------


def pde_suite(seed: int = 0):
    g = solve_goursat(liouville_problem(1 / 64))
    err, res = exact_error(g), residual(g)
    order, errs = liouville_convergence()
    gorder, gerrs = liouville_convergence(exact=liouville_general)
    sorder, serrs = sinh_convergence(seed=seed)
    h = 1 / 64
    z, zb = g.problem.axes()
    Z, ZB = np.meshgrid(z, zb, indexing="ij")
    exact_res = residual(g, liouville_exact(Z, ZB)[None])
    affine = solve_goursat(GoursatProblem.from_function("sinh2", random_edges(("phi", "phit"), seed, scale=0.05)(1.0, 1.0),
                                                        (1.0, 2.0, 1.0, 2.0), h))
    eta_res = eta_residual(affine)
    children = [
        check("liouville_exact", err <= 1e-3, max_error=err, h=h, backend=g.backend),
        check("liouville_residual", res <= 5e-3, residual=res),
        # centered mixed difference of phi*: error <= h^2/6 (|phi_zzzzb| + |phi_zzbzbzb|) <= h^2/8 on z+zb >= 2
        check("exact_sample_residual", exact_res <= h * h / 8, residual=exact_res, bound=h * h / 8),
        # phi* has a vanishing stress tensor and converges at third order; reported, not failed
        _expected("liouville_order", isinstance(order, float) and 1.8 <= order <= 2.2, order=order,
                  expected="[1.8, 2.2]", errors={f"{k:.6g}": v for k, v in errs.items()}),
        check("liouville_order_general", isinstance(gorder, float) and 1.8 <= gorder <= 2.2, order=gorder,
              errors={f"{k:.6g}": v for k, v in gerrs.items()}),
        check("sinh_order", isinstance(sorder, float) and 1.8 <= sorder <= 2.2, order=sorder,
              errors={f"{k:.6g}": v for k, v in serrs.items()}),
        decoupling_check("liouville", seed),
        decoupling_check("sinh", seed),
        eight_field_consistency("liouville", seed),
        eight_field_consistency("sinh", seed),
        check("eta_quadrature_residual", eta_res <= 10 * h * h, residual=eta_res, bound=10 * h * h),
    ]
    return group("pde", children, backend=backend.BACKEND)


def _expected(name: str, ok: bool, **details):
    return check(name, True, **details) if ok else mismatch(name, **details)
