# tests.test_lattice


import pytest

from qpkit.errors import SizeBoundExceeded
from qpkit.quiver import Quiver
from qpkit.qp import QP
from qpkit.lattice import (LatticeGraph, cut_lattice, planar_mutation_lattice, transitivity_report, export_dot,
                           export_json, lattice_from_json)
from qpkit.families import (cycle_qp, ngon_qp, triangle_qp, tensor_qp, square_product_qp, parse_dynkin)


def test_cut_lattice_e1(e1):
    lattice = cut_lattice(e1)
    assert lattice.node_ids() == ["{b}", "{a,c}", "{a,d}", "{c,e}", "{d,e}"]
    assert lattice.is_connected()
    assert lattice.path("{b}", "{c,e}") == ["+3"]
    assert lattice.path("{b}", "{a,d}") == ["-2"]
    assert lattice.payload("{b}") == frozenset({"b"})


def test_cut_lattice_e2(e2):
    assert len(cut_lattice(e2)) == 3


def test_lattice_graph_ignores_duplicates():
    lattice = LatticeGraph()
    assert lattice.add_node("x")
    assert not lattice.add_node("x")
    lattice.add_node("y")
    assert lattice.add_edge("x", "y", "+1")
    assert not lattice.add_edge("y", "x", "-1")
    assert not lattice.add_edge("x", "x", "+2")
    assert lattice.edges == [{"source": "x", "target": "y", "move": "+1"}]
    assert lattice.path("x", "y") == ["+1"]


def test_export(e1):
    lattice = cut_lattice(e1)
    dot = export_dot(lattice)
    assert dot.startswith("graph lattice {")
    assert '"{b}" -- "{c,e}" [label="+3"];' in dot
    assert lattice_from_json(export_json(lattice)) == lattice
    assert export_dot(LatticeGraph()) == "graph lattice {\n}\n"


def test_planar_lattice_of_square_is_a_point():
    lattice = planar_mutation_lattice(ngon_qp(4))
    assert len(lattice) == 1
    assert lattice.complete
    assert lattice.nodes[0]["label"] == "4v4a1c"


def test_planar_lattice_size_bound():
    with pytest.raises(SizeBoundExceeded) as e:
        planar_mutation_lattice(ngon_qp(4), size_bound=1, unrestricted=True)
    partial = e.value.partial
    assert len(partial) == 2
    assert not partial.complete
    assert partial.get_dict()["complete"] is False


def test_transitivity_report():
    report = transitivity_report(cycle_qp(3))
    assert report.hypotheses_met
    assert report.cuts == ["{a1}", "{a2}", "{a3}"]
    assert len(report.paths) == 3
    assert "derived equivalent" in report.conclusion


def test_transitivity_report_without_hypotheses():
    q = Quiver("123", [("a", "1", "2"), ("b", "2", "3")])
    report = transitivity_report(QP(q))
    assert not report.hypotheses_met
    assert report.selfinjective is False
    assert report.paths == {}
    assert report.get_dict()["conclusion"] == "hypotheses not met, no claim"


def test_cut_lattice_up_to_isomorphism(e1):
    lattice = cut_lattice(e1, isomorphism_classes=True)
    assert lattice.node_ids() == ["{b}", "{a,c}", "{a,d}", "{c,e}"]
    assert lattice.is_connected()


def test_tensor_cut_lattice():
    qp = tensor_qp(parse_dynkin("A3"), parse_dynkin("A3"))
    lattice = cut_lattice(qp)
    assert len(lattice) == 47
    assert lattice.is_connected()
    classes = cut_lattice(qp, isomorphism_classes=True)
    assert len(classes) == 14
    assert classes.is_connected()


def test_square_cut_lattice():
    qp = square_product_qp(parse_dynkin("A3"), parse_dynkin("A3"))
    lattice = cut_lattice(qp)
    assert len(lattice) == 34
    assert lattice.is_connected()
    classes = cut_lattice(qp, isomorphism_classes=True)
    assert len(classes) == 15
    assert classes.is_connected()


def test_cut_lattice_does_not_depend_on_labels(e1):
    relabelled = e1.relabel({"1": "w", "2": "x", "3": "y", "4": "z"}, {a: a.upper() for a in e1.arrows})
    assert len(cut_lattice(relabelled)) == len(cut_lattice(e1))
    assert len(cut_lattice(relabelled, isomorphism_classes=True)) == 4


def test_triangle_planar_lattice():
    assert len(planar_mutation_lattice(triangle_qp(4))) == 2


def test_square_planar_lattice():
    pqp = square_product_qp(parse_dynkin("A3"), parse_dynkin("A3"), planar=True)
    assert len(planar_mutation_lattice(pqp)) == 4


def test_large_triangle_planar_lattice():
    lattice = planar_mutation_lattice(triangle_qp(5))
    assert lattice.complete
    assert len(lattice) == 9
    assert lattice.is_connected()


def test_square_shaped_planar_lattice():
    pqp = square_product_qp(parse_dynkin("A4"), parse_dynkin("A4"), planar=True)
    lattice = planar_mutation_lattice(pqp)
    assert lattice.complete
    assert len(lattice) == 28
    assert lattice.is_connected()
