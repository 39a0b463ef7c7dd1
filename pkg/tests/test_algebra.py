import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gradedtoda import gmatrix as gm
from gradedtoda import reference as ref
from gradedtoda.algebra import (
    AlgebraElement,
    AlgebraSpec,
    SpecError,
    adjoint_matrix,
    bilinear_forms,
    check_adjoint_homomorphism,
    check_jacobi,
    find_graded_commutant,
    graded_bracket,
    matrix_respects_grading,
    position_gradings,
    verify_form_properties,
)
from gradedtoda.gmatrix import GradedMatrix
from gradedtoda.grading import ALL, G00, G01, G10, G11, grading_pairing
from gradedtoda.scalars import q

gradings = st.sampled_from(ALL)


def test_pairing_examples():
    assert grading_pairing(G10, G01) == 1
    assert grading_pairing(G00, G11) == 0
    assert grading_pairing(G11, G11) == 0


@given(gradings, gradings, gradings)
def test_grading_laws(a, b, c):
    assert a.pairing(a) == 0
    assert a.pairing(b) == b.pairing(a)
    assert (a + b).pairing(c) == (a.pairing(c) + b.pairing(c)) % 2
    assert a + b + b == a


def test_bracket_examples(sl2):
    Z, Ep, H = sl2.basis("Z"), sl2.basis("E+"), sl2.basis("H")
    assert graded_bracket(Z, Ep, sl2) == sl2.basis("D+").scaled(2)
    assert graded_bracket(H, Z, sl2).is_zero()
    assert graded_bracket(Ep, Ep, sl2).is_zero()


def test_unknown_generator(sl2):
    with pytest.raises(SpecError):
        graded_bracket(AlgebraElement({"X": q(1)}), sl2.basis("H"), sl2)


def test_antisymmetry_and_grading(sl2):
    for a, b in itertools.product(sl2.names, repeat=2):
        ab = graded_bracket(sl2.basis(a), sl2.basis(b), sl2)
        ba = graded_bracket(sl2.basis(b), sl2.basis(a), sl2)
        s = sl2.grading_of(a).sign(sl2.grading_of(b))
        assert ab == ba.scaled(-s)
        if not ab.is_zero():
            assert ab.grading(sl2) == sl2.grading_of(a) + sl2.grading_of(b)


def test_load_rejects_wrong_grading():
    data = AlgebraSpec.default().to_dict()
    data["brackets"].append({"left": "H", "right": "Z", "result": [{"gen": "E+", "coeff": "1"}]})
    data["brackets"] = [b for b in data["brackets"] if not (b["left"] == "H" and b["right"] == "Z" and not b["result"])]
    with pytest.raises(SpecError):
        AlgebraSpec.from_dict(data)


def test_roundtrip_dict(sl2):
    again = AlgebraSpec.from_dict(sl2.to_dict())
    assert again.to_dict() == sl2.to_dict()


def test_jacobi(sl2):
    rep = check_jacobi(sl2)
    assert rep.passed
    assert rep.details["unordered_triples"] == 56


def test_jacobi_perturbed(sl2):
    bad = sl2.with_bracket("Z", "E+", [("D+", "3")])
    rep = check_jacobi(bad)
    assert not rep.passed and rep.details["failures"]


def test_jacobi_abelian():
    spec = AlgebraSpec([("A", "00"), ("B", "10")], {})
    assert check_jacobi(spec).passed


def test_adjoint(sl2):
    ad = adjoint_matrix("H", sl2)
    diag = [ad.entries[i, i] for i in range(6)]
    assert diag == [q(v) for v in (0, 0, 2, -2, 2, -2)]
    assert gm.is_zero(ad.entries - gm.exact([[ad.entries[i, j] if i == j else 0 for j in range(6)] for i in range(6)]))
    assert adjoint_matrix(AlgebraElement({}), sl2).is_zero()
    assert position_gradings(sl2) == ref.POSITION_GRADING
    assert all(matrix_respects_grading(adjoint_matrix(n, sl2), sl2) for n in sl2.names)
    assert check_adjoint_homomorphism(sl2).passed


def test_forms(sl2):
    g, eta = bilinear_forms(sl2)
    assert g.entry("H", "H") == q(16)
    assert eta.entry("E+", "D-") == q(-8)
    assert not g.entry("E+", "D+")
    assert gm.equal(g.matrix, ref.G)
    assert gm.equal(eta.matrix, ref.ETA)
    assert g.inverse().entry("H", "H") == q("1/16")


def test_trace_independent_of_stored_form(sl2):
    ad = adjoint_matrix("H", sl2)
    assert (ad @ ad).trace() == q(16)


def test_form_properties(sl2):
    g, eta = bilinear_forms(sl2)
    rep = verify_form_properties(sl2, g, eta)
    assert rep.passed, rep.to_dict()


def test_identity_in_place_of_m(sl2):
    # with M -> identity the twisted form collapses onto g, so the [11] selection rule breaks
    g, eta = bilinear_forms(sl2, GradedMatrix(gm.eye(6), G11))
    rep = verify_form_properties(sl2, g, eta)
    assert not rep.ok
    assert rep.find("selection_rules").status == "fail"


def test_commutant(sl2):
    basis = find_graded_commutant(sl2, G11)
    assert len(basis) == 1
    assert gm.equal(basis[0].entries, ref.M_ADJ)
    for n in sl2.names:
        assert gm.graded_commutator_matrix(adjoint_matrix(n, sl2), basis[0]).is_zero()
    even = find_graded_commutant(sl2, G00)
    span = gm.exact([list(b.entries.reshape(-1)) for b in even] + [list(gm.eye(6).reshape(-1))])
    assert gm.rank(span) == len(even)


def test_commutant_perturbed(sl2):
    bad = sl2.with_bracket("Z", "E+", [("D+", "3")])
    assert find_graded_commutant(bad, G11) == []


@pytest.mark.parametrize("g", [G10, G01])
def test_commutant_other_gradings(sl2, g):
    for m in find_graded_commutant(sl2, g):
        for n in sl2.names:
            assert gm.graded_commutator_matrix(adjoint_matrix(n, sl2), m).is_zero()
