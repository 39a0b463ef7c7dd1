from hypothesis import given, settings
from hypothesis import strategies as st

from gradedtoda import gmatrix as gm
from gradedtoda import reference as ref
from gradedtoda.algebra import adjoint_matrix
from gradedtoda.gmatrix import GradedMatrix, graded_commutator_matrix
from gradedtoda.grading import G11
from gradedtoda.matrix_rep import build_presentation, presentation_suite, verify_presentation
from gradedtoda.scalars import I

P = build_presentation()


def test_quaternion_examples():
    M0, M1, M2, M3 = (m.entries for m in P.M)
    assert gm.equal(M1 @ M2, gm.scale(I, M3))
    assert gm.equal(M2 @ M2, M0)
    for x in P.generators.values():
        assert gm.equal(gm.kron(M0, gm.eye(2)) @ x.entries, x.entries)


def test_relations(sl2):
    rep = verify_presentation(P, sl2)
    assert rep.passed and rep.details["pairs"] == 21
    Z, Ep, Em, H = (P.generators[n] for n in ("Z", "E+", "E-", "H"))
    assert graded_commutator_matrix(Z, Ep).equals(P.generators["D+"].scaled(2))
    assert graded_commutator_matrix(Ep, Em).equals(H)
    assert graded_commutator_matrix(Ep, Ep).is_zero()


def test_graded_commutator_of_m1_m3():
    M1, M3 = P.M[1], P.M[3]
    assert gm.is_zero(M3.entries @ M1.entries + M1.entries @ M3.entries)
    # odd pairing: the graded bracket is the anticommutator, which vanishes
    assert graded_commutator_matrix(M3, M1).is_zero()
    plain = M3.entries @ M1.entries - M1.entries @ M3.entries
    assert gm.equal(plain, gm.scale(2 * I, P.M[2].entries))
    for m in P.M:
        assert graded_commutator_matrix(P.M[0], m).is_zero()


def test_adjoint_commutant_matrix(sl2):
    M = GradedMatrix(ref.M_ADJ, G11)
    for n in sl2.names:
        assert graded_commutator_matrix(adjoint_matrix(n, sl2), M).is_zero()


def test_suite(sl2):
    assert presentation_suite(sl2).passed


@settings(max_examples=100, deadline=None)
@given(st.fractions(max_denominator=30), st.fractions(max_denominator=30), st.fractions(max_denominator=30))
def test_split_quaternion_square(b, c, d):
    iM2 = gm.scale(I, P.M[2].entries)
    Q = gm.scale(b, P.M[1].entries) + gm.scale(c, iM2) + gm.scale(d, P.M[3].entries)
    assert gm.equal(Q @ Q, gm.scale(b * b - c * c + d * d, P.M[0].entries))
