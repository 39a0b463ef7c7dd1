import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gradedtoda.pde import (DivergenceError, GoursatProblem, decoupling_check, eight_field_consistency,
                            eta_residual, exact_error, field_names, liouville_convergence, liouville_exact,
                            liouville_general, liouville_problem, pde_suite, random_edges, residual, rhs,
                            sinh_convergence, solve_goursat)
from gradedtoda.pde import backend
from gradedtoda.pde.solver import convergence_order

BACKENDS = sorted(backend.available())


@pytest.mark.parametrize("name", BACKENDS)
def test_liouville_against_exact(name):
    g = solve_goursat(liouville_problem(1 / 64), name)
    assert exact_error(g) <= 1e-3
    assert residual(g) <= 5e-3


def test_exact_solution_residual_is_second_order():
    p = liouville_problem(1 / 32)
    z, zb = p.axes()
    Z, ZB = np.meshgrid(z, zb, indexing="ij")
    g = solve_goursat(p)
    res = residual(g, liouville_exact(Z, ZB)[None])
    assert res <= p.h ** 2 / 8


def test_free_equation_is_exact():
    def data(z, zb):
        return {"phi": np.sin(3 * z) + zb ** 2}
    g = solve_goursat(GoursatProblem.from_function("free", data, h=1 / 16))
    z, zb = g.problem.axes()
    Z, ZB = np.meshgrid(z, zb, indexing="ij")
    # phi(z, zb0) + phi(z0, zb) - phi(z0, zb0)
    want = np.sin(3 * Z) + 1.0 + np.sin(3.0) + ZB ** 2 - (np.sin(3.0) + 1.0)
    assert np.abs(g["phi"] - want).max() <= 1e-14
    assert convergence_order({1 / 8: 0.0, 1 / 16: 0.0}) == "exact"


def test_constant_field_has_zero_residual():
    g = solve_goursat(GoursatProblem.from_function("free", lambda z, zb: {"phi": 0 * z + 0.7}, h=1 / 8))
    assert residual(g) == 0.0


def test_zero_tilde_stays_zero():
    data = random_edges(("phi", "phit"), 3, scale=0.1, centred=("phi",))(1.0, 1.0)

    def flat(z, zb):
        d = data(z, zb)
        return {"phi": d["phi"], "phit": 0 * d["phit"]}
    g = solve_goursat(GoursatProblem.from_function("liouville2", flat, h=1 / 32))
    assert np.abs(g["phit"]).max() == 0.0


def test_orders():
    order, _ = liouville_convergence(exact=liouville_general)
    assert 1.8 <= order <= 2.2
    order, _ = sinh_convergence()
    assert 1.8 <= order <= 2.2


def test_phi_star_superconverges():
    # phi* has phi_zz = phi_z^2, which cancels the h^4 cell error: third order, not second
    order, errs = liouville_convergence()
    assert 2.8 <= order <= 3.2
    assert max(errs.values()) < 1e-6


@pytest.mark.parametrize("model", ["liouville", "sinh"])
def test_decoupling(model):
    assert decoupling_check(model).passed
    assert decoupling_check(model, zero_tilde=True).passed


@pytest.mark.parametrize("model", ["liouville", "sinh"])
def test_eight_field_chain(model):
    assert eight_field_consistency(model).passed
    assert eight_field_consistency(model, all_zero=True).passed


def test_eta_quadrature():
    data = random_edges(("phi", "phit"), 0, scale=0.05)(1.0, 1.0)
    for h, bound in ((1 / 16, 1.0), (1 / 64, 1.0)):
        g = solve_goursat(GoursatProblem.from_function("sinh2", data, h=h))
        assert eta_residual(g) <= bound * 10 * h * h


def test_divergence_reports_the_cell():
    p = GoursatProblem.from_function("scalar-liouville", lambda z, zb: {"phi": 0 * z + 1.0}, (0.0, 4.0, 0.0, 4.0), 1 / 16)
    with pytest.raises(DivergenceError) as err:
        solve_goursat(p)
    i, j = err.value.cell
    assert 0 < i <= 64 and 0 < j <= 64


def test_bad_problems():
    with pytest.raises(ValueError, match="divide"):
        liouville_problem(0.3)
    with pytest.raises(ValueError, match="corner"):
        GoursatProblem("free", (0.0, 1.0, 0.0, 1.0), 0.5, {"phi": [0, 0, 0]}, {"phi": [1, 0, 0]})
    with pytest.raises(ValueError, match="unknown model"):
        rhs("wave", np.zeros(1))


def test_rhs_matches_generated_components():
    from gradedtoda.components import expand_eom, graded_system
    from gradedtoda.fieldexpr import Sample, field_sym
    # the f11 = f01 = 0 slice carries no grading signs, so the graded and real readings agree there
    rng = np.random.default_rng(0)
    for model, name in (("liouville", "liouville8"), ("sinh", "sinh8")):
        sys8 = expand_eom(graded_system(model))
        for _ in range(10):
            f00, f10 = rng.uniform(-0.5, 0.5, 2)
            u = np.zeros(8)
            u[0], u[1], u[4], u[5] = f00, f10, f00, f10
            got = rhs(name, u)
            for s, off in ((1, 0), (-1, 4)):
                vals = {field_sym("f00"): (f00,), field_sym("f10"): (f10,), field_sym("f01"): (0.0,),
                        field_sym("f11"): (0.0,)}
                for k, f in enumerate(("f00", "f10", "f01", "f11")):
                    v = sys8[s].rhs(f).evaluate(Sample(False, dict(vals)))
                    # each component sits at its own grading; read the one coefficient present
                    val = sum((complex(c) for c in v.c.values()), 0j)
                    assert len(v.c) <= 1 and abs(val.real - got[off + k]) < 1e-12


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["scalar-sinh", "liouville2", "sinh2", "liouville8", "sinh8"]), st.integers(0, 1000))
def test_transpose_symmetry_and_determinism(model, seed):
    names = field_names(model)
    lv = "liouville" in model
    data = random_edges(names, seed, scale=0.05, centred=tuple(n for n in names if n in ("phi", "f00p", "f00m"))
                        if lv else ())(1.0, 1.0)
    p = GoursatProblem.from_function(model, data, (1.0, 1.5, 1.0, 1.75), 1 / 16)
    a, b = solve_goursat(p), solve_goursat(p)
    assert np.array_equal(a.stack(), b.stack())
    t = solve_goursat(p.transposed())
    assert np.array_equal(t.stack(), np.transpose(a.stack(), (0, 2, 1)))


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernel not built")
@settings(max_examples=10, deadline=None)
@given(st.sampled_from(["scalar-liouville", "scalar-sinh", "sinh2", "liouville8", "sinh8"]), st.integers(0, 1000))
def test_backends_agree(model, seed):
    names = field_names(model)
    lv = "liouville" in model
    data = random_edges(names, seed, scale=0.05, centred=tuple(n for n in names if n in ("phi", "f00p", "f00m"))
                        if lv else ())(1.0, 1.0)
    p = GoursatProblem.from_function(model, data, h=1 / 32)
    a, b = solve_goursat(p, "cython"), solve_goursat(p, "python")
    assert np.abs(a.stack() - b.stack()).max() <= 1e-12


def test_suite():
    report = pde_suite()
    assert report.ok
    assert [c.name for c in report.children if c.status != "pass"] == ["liouville_order"]
