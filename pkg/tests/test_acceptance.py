"""The nine acceptance criteria at their stated tolerances and time limits.

Each criterion records one PASS/FAIL line; the lines are printed in the
terminal summary (and by running this file directly).  Criteria 7 and 9
are red: see the reasons printed with them.
"""

import time

import pytest

from gradedtoda.report import PASS

RESULTS = {}


def _walk(c):
    yield c
    for k in c.children:
        yield from _walk(k)


def _record(num, title, ok, seconds, limit, reason=""):
    ok = ok and seconds < limit
    if seconds >= limit:
        reason = (reason + "; " if reason else "") + f"took {seconds:.2f} s, limit {limit} s"
    line = f"[{'PASS' if ok else 'FAIL'}] {num}. {title} ({seconds:.2f} s, limit {limit} s)"
    if reason:
        line += f" -- {reason}"
    RESULTS[num] = line
    return ok, line


def _timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def _not_passing(report):
    return [c.name for c in _walk(report) if c.status != PASS and not c.children]


def criterion_1():
    from gradedtoda.algebra import AlgebraSpec, algebra_suite
    spec = AlgebraSpec.default()
    r, t = _timed(lambda: algebra_suite(spec))
    return _record(1, "exact algebra suite", r.passed and not _not_passing(r), t, 1.0, ", ".join(_not_passing(r)))


def criterion_2():
    from gradedtoda.algebra import AlgebraSpec, bilinear_forms
    from gradedtoda.enveloping import casimir_suite
    spec = AlgebraSpec.default()

    def run():
        g, eta = bilinear_forms(spec)
        return casimir_suite(spec, g, eta)
    r, t = _timed(run)
    return _record(2, "Casimir suite", r.passed, t, 1.0, ", ".join(_not_passing(r)))


def criterion_3():
    from gradedtoda.algebra import AlgebraSpec
    from gradedtoda.matrix_rep import presentation_suite
    spec = AlgebraSpec.default()
    r, t = _timed(lambda: presentation_suite(spec))
    return _record(3, "matrix presentation suite", r.passed, t, 1.0, ", ".join(_not_passing(r)))


def criterion_4():
    from gradedtoda.affine import affine_suite
    r, t = _timed(lambda: affine_suite(3))
    return _record(4, "affine suite", r.passed, t, 5.0, ", ".join(_not_passing(r)))


def criterion_5():
    from gradedtoda.lax import zero_curvature_suite
    r, t = _timed(lambda: zero_curvature_suite(samples=100))
    return _record(5, "zero-curvature suite", r.passed, t, 10.0, ", ".join(_not_passing(r)))


def criterion_6():
    from gradedtoda.components import component_suite, matrix_suite

    def run():
        return [component_suite("liouville", samples=100), component_suite("sinh", samples=100),
                matrix_suite("liouville"), matrix_suite("sinh")]
    reports, t = _timed(run)
    # printed-line disagreements must be reported explicitly, as mismatches with both forms attached
    flagged = [c for r in reports for c in _walk(r) if c.status == "mismatch" and not c.children]
    explicit = all("printed" in c.details and "generated" in c.details for c in flagged)
    ok = all(r.ok for r in reports) and explicit
    names = ", ".join(c.name for c in flagged)
    return _record(6, "component suite", ok, t, 10.0, f"reported mismatches: {names}" if names else "")


def criterion_7():
    from gradedtoda.brackets import poisson_suite
    r, t = _timed(poisson_suite)
    off = _not_passing(r)
    reason = ""
    if off:
        details = [c.details for c in _walk(r) if c.name in off]
        reason = "not reproduced: " + ", ".join(off)
        if details and "derived" in details[0]:
            reason += f"; derived {details[0]['derived']!r}, printed central {details[0]['printed_central']!r}"
    return _record(7, "Poisson suite", r.passed and not off, t, 5.0, reason)


def criterion_8():
    from gradedtoda.currents import soldering_suite

    r, t = _timed(soldering_suite)
    fd = r.find("currents_fd_graded").details["max_rel_deviation"]
    ok = r.passed and r.find("matches_zero_curvature").passed and fd <= 1e-6
    return _record(8, "soldering cross-check", ok, t, 5.0, f"FD deviation {fd:.1e}")


def criterion_9():
    from gradedtoda.pde import (decoupling_check, eight_field_consistency, exact_error, liouville_convergence,
                                liouville_problem, solve_goursat)

    def run():
        err = exact_error(solve_goursat(liouville_problem(1 / 64)))
        order, _ = liouville_convergence()
        dec = [decoupling_check(m) for m in ("liouville", "sinh")]
        eight = [eight_field_consistency(m) for m in ("liouville", "sinh")]
        return err, order, dec, eight
    (err, order, dec, eight), t = _timed(run)
    parts = {
        "error": err <= 1e-3,
        "order": isinstance(order, float) and 1.8 <= order <= 2.2,
        "decoupling": all(c.passed for c in dec),
        "eight_field": all(c.passed for c in eight),
    }
    reason = f"max error {err:.1e}, order {order:.3f}"
    bad = [k for k, v in parts.items() if not v]
    if bad:
        reason += "; outside tolerance: " + ", ".join(bad)
    return _record(9, "PDE suite", not bad, t, 60.0, reason)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9]
RED = {
    7: "printed Virasoro central term is +i n^3/2; the solved constants give -i n^3/2",
    9: "the exact solution -ln(z+zbar) converges at third order with the prescribed scheme",
}


@pytest.mark.parametrize("num", range(1, 10))
def test_criterion(num, request):
    if num in RED:
        request.applymarker(pytest.mark.xfail(reason=RED[num], strict=True))
    ok, line = CRITERIA[num - 1]()
    print(line)
    assert ok, line


if __name__ == "__main__":
    for fn in CRITERIA:
        print(fn()[1])
