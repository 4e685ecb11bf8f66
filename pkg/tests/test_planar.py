# tests.test_planar


import pytest

from qpkit.errors import NotPlanar, NotPlanarMutable, EmbeddingMismatch, MalformedQP
from qpkit.potential import Potential
from qpkit.planar import (planar_qp, planar_from_dict, validate_planar, signed_face_potential, is_planar_mutable,
                          planar_mutate, planar_orbit_mutate)
from qpkit.mutation import mutate
from qpkit.isomorphism import qp_isomorphic
from qpkit.families import cycle_qp, ngon_qp, triangle_qp


def test_polygon_potential_is_the_cycle():
    pqp = ngon_qp(4)
    assert pqp.qp.potential == cycle_qp(4).potential
    assert len(pqp.bounded_faces()) == 1
    assert pqp.boundary_vertices() == {"1", "2", "3", "4"}
    assert signed_face_potential(ngon_qp(3)).terms == cycle_qp(3).potential.terms


def test_triangle_from_coordinates():
    pqp = triangle_qp(2)
    assert qp_isomorphic(pqp.qp, cycle_qp(3))
    big = triangle_qp(4)
    assert len(big.qp.potential.terms) == 9
    assert big.is_interior("111")
    assert len(big.boundary_vertices()) == 9


def test_validate_planar():
    cert = validate_planar(ngon_qp(4))
    assert cert.disk
    assert (cert.vertices, cert.arrows, cert.cells) == (4, 4, 1)
    assert cert.euler_characteristic == 1
    assert cert.get_dict()["faces"] == 1
    with pytest.raises(EmbeddingMismatch) as e:
        validate_planar(ngon_qp(4), potential=Potential())
    assert len(e.value.faces) == 1 and not e.value.cells


def test_rotation_must_list_every_arrow_end():
    q = cycle_qp(3).quiver
    with pytest.raises(NotPlanar, match="rotation at"):
        planar_qp(q, rotation={"1": [("a1", True)]}, outer=("a1", True))
    with pytest.raises(MalformedQP):
        planar_qp(q)


def test_planar_json():
    d = ngon_qp(4).to_dict()
    assert d["embedding"]["outer"] == ["a2", "out"]
    assert planar_from_dict(d).qp == ngon_qp(4).qp
    d["potential"][0]["coef"] = "2"
    with pytest.raises(EmbeddingMismatch):
        planar_from_dict(d)
    with pytest.raises(MalformedQP):
        planar_from_dict(cycle_qp(3).to_dict())


def test_planar_mutation_agrees_with_mutation():
    result = planar_mutate(ngon_qp(4), "1")
    assert result.qp.potential == mutate(cycle_qp(4), "1").qp.potential
    assert len(result.bounded_faces()) == 2


def test_planar_orbit_mutation_returns_to_the_square():
    result = planar_orbit_mutate(ngon_qp(4), {"1": "3", "3": "1", "2": "4", "4": "2"}, "1")
    assert len(result.quiver.arrows) == 4
    assert qp_isomorphic(result.qp, cycle_qp(4))


def test_interior_vertices_need_degree_four():
    big = triangle_qp(4)
    assert not is_planar_mutable(big, "111")
    with pytest.raises(NotPlanarMutable, match="interior"):
        planar_mutate(big, "111")
    assert is_planar_mutable(ngon_qp(4), "1")
