# tests.test_selfinjective


import pytest

from qpkit.errors import NonAdmissibleRelation, NonMinimalRelations, UndeterminedDimension
from qpkit.quiver import Quiver
from qpkit.potential import path_element
from qpkit.qp import QP, opposite_qp
from qpkit.algebra import jacobian_algebra
from qpkit.selfinjective import (is_selfinjective, nakayama_permutation, resolution_exactness_defect, socle,
                                 socle_oracle, qp_of_algebra, is_2rf)
from qpkit.isomorphism import qp_isomorphic
from qpkit.mutation import mutate
from qpkit.cuts import is_algebraic_cut
from qpkit.families import (cycle_qp, tilde_cycle_qp, tubular_2222, tensor_qp, square_product_qp, DynkinQuiver,
                            product_involution, triangle_qp, triangle_cut, example_e1, example_e2)


def linear_a3():
    return Quiver("123", [("a", "1", "2"), ("b", "2", "3")])


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_cycles_are_selfinjective(n):
    report = is_selfinjective(cycle_qp(n))
    assert report.selfinjective
    assert report.dimension == n * (n - 1)
    assert not any(report.defects.values())
    assert report.nakayama == {str(i): str((i + 1) % n + 1) for i in range(1, n + 1)}


def test_nakayama_permutation_of_four_cycle():
    report = is_selfinjective(cycle_qp(4))
    assert report.nakayama == {"1": "3", "2": "4", "3": "1", "4": "2"}


def test_report_export():
    d = is_selfinjective(cycle_qp(3)).get_dict()
    assert d["name"] == "Q3"
    assert d["selfinjective"] is True
    assert d["cartan"] == [[1, 0, 1], [1, 1, 0], [0, 1, 1]]
    assert "_algebra" not in d


def test_tilde_cycle_is_selfinjective():
    report = is_selfinjective(tilde_cycle_qp(4))
    assert report.selfinjective


def test_tubular_is_selfinjective():
    qp = tubular_2222(2)
    report = is_selfinjective(qp)
    assert report.selfinjective
    assert report.dimension == 32
    assert report.nakayama == {v: v for v in qp.vertices}


def test_socle_keeps_arrows_with_equal_products_apart():
    alg = jacobian_algebra(tubular_2222(2))
    assert socle(alg, "5") == [("5", 1)]


def test_path_algebra_is_not_selfinjective():
    report = is_selfinjective(QP(linear_a3()))
    assert report.finite_dimensional
    assert not report.selfinjective
    assert report.nakayama is None
    assert sum(report.defects.values()) > 0
    ok, sigma = socle_oracle(report.algebra)
    assert not ok and sigma is None


def test_socle_and_defects_agree_on_cycles():
    qp = cycle_qp(3)
    alg = jacobian_algebra(qp)
    assert all(len(socle(alg, v)) == 1 for v in qp.vertices)
    assert socle_oracle(alg) == (True, nakayama_permutation(alg, qp))
    assert all(resolution_exactness_defect(alg, qp, v, side="right") == 0 for v in qp.vertices)


def test_opposite_of_selfinjective_is_selfinjective():
    assert is_selfinjective(opposite_qp(cycle_qp(4))).selfinjective


def test_defect_rejects_unknown_side():
    qp = cycle_qp(3)
    with pytest.raises(ValueError, match="side"):
        resolution_exactness_defect(jacobian_algebra(qp), qp, "1", side="up")


def test_infinite_dimensional_qp_is_undetermined():
    q = Quiver("12", [("a", "1", "2"), ("b", "2", "1")])
    with pytest.raises(UndeterminedDimension):
        is_selfinjective(QP(q), degree_bound=4, ceiling=8)


def test_qp_of_algebra_gives_the_three_cycle():
    q = linear_a3()
    qp = qp_of_algebra(q, [path_element(q, "ab")])
    assert qp.cut == frozenset({"r1"})
    assert qp.quiver.src("r1") == "3" and qp.quiver.tgt("r1") == "1"
    assert qp_isomorphic(qp, cycle_qp(3))


def test_qp_of_algebra_validates_relations():
    q = linear_a3()
    with pytest.raises(NonAdmissibleRelation):
        qp_of_algebra(q, [path_element(q, "a")])
    with pytest.raises(NonMinimalRelations):
        qp_of_algebra(q, [path_element(q, "ab"), path_element(q, "ab", 2)])


def test_is_2rf():
    q = linear_a3()
    assert is_2rf(q, [path_element(q, "ab")])


def test_square_product_nakayama_is_the_product_involution():
    a2 = DynkinQuiver("A2")
    report = is_selfinjective(square_product_qp(a2, a2))
    assert report.selfinjective
    assert report.nakayama == product_involution(a2, a2)


def test_tensor_nakayama_is_the_product_involution():
    a3 = DynkinQuiver("A3")
    report = is_selfinjective(tensor_qp(a3, a3))
    assert report.selfinjective
    assert report.nakayama == product_involution(a3, a3)


def test_larger_square_product_nakayama_is_the_product_involution():
    a4 = DynkinQuiver("A4")
    report = is_selfinjective(square_product_qp(a4, a4))
    assert report.selfinjective
    assert report.nakayama == product_involution(a4, a4)


def test_tensor_with_equal_coxeter_numbers_is_selfinjective():
    a5, d4 = DynkinQuiver("A5"), DynkinQuiver("D4")
    assert a5.is_stable() and d4.is_stable()
    assert a5.coxeter_number() == d4.coxeter_number() == 6
    assert is_selfinjective(tensor_qp(a5, d4)).selfinjective


CORPUS = {
    **{f"Q{n}": (lambda n=n: cycle_qp(n)) for n in range(3, 8)},
    "Q~4": lambda: tilde_cycle_qp(4),
    "Q~6": lambda: tilde_cycle_qp(6),
    "tubular": lambda: tubular_2222(2),
    **{f"triangle{s}": (lambda s=s: triangle_qp(s).qp) for s in (2, 3, 4)},
    **{f"A{n}xA{n}": (lambda n=n: square_product_qp(DynkinQuiver(f"A{n}"), DynkinQuiver(f"A{n}"))) for n in (2, 3, 4)},
    "A3(x)A3": lambda: tensor_qp(DynkinQuiver("A3"), DynkinQuiver("A3")),
    **{f"mu1(Q{n})": (lambda n=n: mutate(cycle_qp(n), "1").qp) for n in (3, 4, 5)},
    "mu2(Q~4)": lambda: mutate(tilde_cycle_qp(4), "2").qp,
    "op(Q5)": lambda: opposite_qp(cycle_qp(5)),
    "A3": lambda: QP(linear_a3()),
    "E1": example_e1,
    "E2": example_e2,
}


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_socle_criterion_agrees_with_exactness(name):
    report = is_selfinjective(CORPUS[name]())
    ok, sigma = socle_oracle(report.algebra)
    assert ok == report.selfinjective
    assert sigma == report.nakayama


@pytest.mark.parametrize("s", [2, 3, 4])
def test_triangles_are_selfinjective_with_algebraic_type_cuts(s):
    qp = triangle_qp(s).qp
    assert is_selfinjective(qp).selfinjective
    for i in (1, 2, 3):
        cut = triangle_cut(s, i)
        assert is_algebraic_cut(qp, cut)[0]
        rebuilt = qp_of_algebra(qp.quiver.without(cut), [qp.derivative(c) for c in sorted(cut)])
        assert qp_isomorphic(rebuilt, qp)
