# tests.test_families


import pytest

from qpkit.errors import BadParameter, NotAlternating, IllegalFacePattern
from qpkit.cuts import is_cut
from qpkit.isomorphism import qp_isomorphic
from qpkit.families import (dynkin_diagram, coxeter_number, canonical_involution, DynkinQuiver, alternating_orientation,
                            linear_orientation,
                            parse_dynkin, cycle_qp, tilde_cycle_qp, ngon_qp, tubular_2222, tensor_qp,
                            square_product_qp, rescale_arrows, triangle_qp, triangle_cut, parse_face_choices,
                            checkerboard_faces, square_shaped_qp, square_sigma, is_symmetric_square_shaped,
                            build_family, FAMILIES)


def test_dynkin_diagrams():
    assert dynkin_diagram("D5") == (5, [(1, 2), (2, 3), (3, 4), (3, 5)])
    assert len(dynkin_diagram("E6")[1]) == 5
    with pytest.raises(BadParameter):
        dynkin_diagram("X9")
    with pytest.raises(BadParameter):
        dynkin_diagram("D3")


@pytest.mark.parametrize("kind, h", [("A3", 4), ("D4", 6), ("E6", 12), ("E7", 18), ("E8", 30)])
def test_coxeter_numbers(kind, h):
    assert coxeter_number(kind) == h


def test_canonical_involution():
    assert canonical_involution("A3") == {1: 3, 2: 2, 3: 1}
    assert canonical_involution("D4") == {1: 1, 2: 2, 3: 3, 4: 4}
    assert canonical_involution("D5")[4] == 5


def test_orientations():
    alt = DynkinQuiver("A3")
    assert alt.arrows == [(1, 2), (3, 2)]
    assert alt.is_alternating() and alt.is_stable()
    lin = linear_orientation("A3")
    assert not lin.is_alternating() and not lin.is_stable()
    assert parse_dynkin("A3:1>2,3>2").arrows == alt.arrows
    assert parse_dynkin("A3:linear").arrows == lin.arrows
    assert alternating_orientation("D4").is_alternating()
    q = alt.quiver
    assert (q.src("a2"), q.tgt("a2")) == ("3", "2")
    with pytest.raises(BadParameter):
        parse_dynkin("A3:1>3")
    with pytest.raises(BadParameter):
        parse_dynkin("A3:x")


def test_cycles():
    assert len(cycle_qp(5).potential.terms) == 1
    assert len(tilde_cycle_qp(4).potential.terms) == 3
    with pytest.raises(BadParameter):
        cycle_qp(2)
    with pytest.raises(BadParameter):
        tilde_cycle_qp(5)


def test_planar_tilde_polygon_matches_after_rescaling():
    assert qp_isomorphic(ngon_qp(6, tilde=True).qp, tilde_cycle_qp(6), rescale=True)


def test_tubular():
    qp = tubular_2222(2)
    assert (len(qp.vertices), len(qp.arrows), len(qp.potential.terms)) == (6, 10, 6)
    with pytest.raises(BadParameter):
        tubular_2222(1)


def test_tensor_product():
    a2 = linear_orientation("A2")
    qp = tensor_qp(a2, a2)
    assert len(qp.arrows) == 5
    assert qp.cut == frozenset({"(a1,a1)"})
    assert is_cut(qp, qp.cut)
    assert sorted(qp.potential.terms.values()) == [-1, 1]
    with pytest.raises(BadParameter):
        tensor_qp(cycle_qp(3).quiver, a2)


def test_square_product():
    a3 = DynkinQuiver("A3")
    qp = square_product_qp(a3, a3)
    assert (len(qp.vertices), len(qp.arrows), len(qp.potential.terms)) == (9, 12, 4)
    assert "(2,a1)*" in qp.arrows
    pqp = square_product_qp(a3, a3, planar=True)
    assert pqp.qp.potential == qp.potential
    with pytest.raises(NotAlternating):
        square_product_qp(linear_orientation("A3"), a3)
    with pytest.raises(BadParameter):
        square_product_qp(DynkinQuiver("D4"), a3, planar=True)


def test_rescale_arrows():
    qp = rescale_arrows(cycle_qp(3), {"a1": 2})
    assert list(qp.potential.terms.values()) == [2]


def test_triangles():
    assert len(triangle_qp(5).quiver.vertices) == 15
    cut = triangle_cut(3, 1)
    assert len(cut) == 3
    assert is_cut(triangle_qp(3).qp, cut)
    with pytest.raises(BadParameter):
        triangle_cut(3, 4)
    with pytest.raises(BadParameter):
        triangle_qp(1)


def test_square_shaped():
    s, faces = parse_face_choices("s,s*;s*,s")
    assert s == 3
    assert faces == checkerboard_faces(3)
    pqp = square_shaped_qp(s, faces)
    assert (len(pqp.quiver.vertices), len(pqp.quiver.arrows)) == (9, 12)
    assert len(pqp.qp.potential.terms) == 4
    assert is_symmetric_square_shaped(pqp)
    assert square_sigma(2) == {"1,1": "2,2", "2,1": "1,2", "1,2": "2,1", "2,2": "1,1"}


def test_illegal_face_patterns():
    with pytest.raises(IllegalFacePattern, match="missing"):
        square_shaped_qp(3, {(1, 1): "s"})
    with pytest.raises(IllegalFacePattern, match="opposite"):
        square_shaped_qp(3, {(i, j): "s" for i in (1, 2) for j in (1, 2)})
    with pytest.raises(IllegalFacePattern, match="unknown"):
        square_shaped_qp(2, {(1, 1): "x"})


def test_build_family():
    assert build_family("cycle", ["4"]).name == "Q4"
    assert build_family("e1").name == "E1"
    assert set(FAMILIES) >= {"cycle", "tensor", "square", "triangle", "square-shaped"}
    with pytest.raises(BadParameter, match="unknown family"):
        build_family("nope")
    with pytest.raises(BadParameter):
        build_family("cycle", ["x"])
    with pytest.raises(BadParameter, match="bad parameters"):
        build_family("cycle")
