# tests.test_canvas


import pytest

from qpkit.errors import Disconnected
from qpkit.quiver import Quiver, CyclicWord
from qpkit.potential import Potential
from qpkit.qp import QP
from qpkit.canvas import (Verdict, Homology, Presentation, build_canvas, homology_h1, pi1_presentation,
                          tietze_simplify, is_simply_connected, spanning_tree)
from qpkit.families import cycle_qp, ngon_qp


def test_canvas_cells(e1):
    canvas = build_canvas(e1)
    assert canvas.euler_characteristic() == 1
    d = canvas.to_dict()
    assert d["arrows"]["a"] == ["1", "2"]
    assert len(d["cells"]) == 2


def test_h1_of_cycle_with_and_without_cell():
    assert homology_h1(build_canvas(cycle_qp(3))).is_trivial
    bare = QP(cycle_qp(3).quiver)
    h1 = homology_h1(build_canvas(bare))
    assert h1 == Homology(1, [])
    assert str(h1) == "Z^1"
    assert is_simply_connected(build_canvas(bare)) == Verdict.NO


def test_h1_torsion_from_periodic_cell():
    q3 = cycle_qp(3)
    twice = q3.with_potential(Potential({CyclicWord.of(("a1", "a3", "a2") * 2): 1}))
    h1 = homology_h1(build_canvas(twice))
    assert h1 == Homology(0, [2])
    assert str(h1) == "Z/2"
    assert is_simply_connected(build_canvas(twice)) == Verdict.NO


def test_pi1_presentation_of_three_cycle():
    canvas = build_canvas(cycle_qp(3))
    assert len(spanning_tree(canvas)) == 2
    p = pi1_presentation(canvas)
    assert len(p.generators) == 1
    assert p.relators == [[(p.generators[0], 1)]]
    assert tietze_simplify(p).is_trivial


def test_tietze_keeps_commutator():
    p = Presentation(["x", "y"], [[("x", 1), ("y", 1), ("x", -1), ("y", -1)]])
    simplified = tietze_simplify(p)
    assert simplified.generators == ["x", "y"]
    assert p.abelianization() == Homology(2, [])
    assert p.to_dict()["relators"] == ["x y x^-1 y^-1"]


def test_abelianization_torsion():
    p = Presentation(["x"], [[("x", 1), ("x", 1)]])
    assert p.abelianization() == Homology(0, [2])


def test_simply_connected(e1):
    assert is_simply_connected(build_canvas(e1)) == Verdict.YES
    pqp = ngon_qp(4)
    assert is_simply_connected(build_canvas(pqp.qp), embedding=pqp) == Verdict.YES
    assert str(Verdict.UNKNOWN) == "unknown"


def test_disconnected_canvas():
    canvas = build_canvas(QP(Quiver("12")))
    assert is_simply_connected(canvas) == Verdict.NO
    with pytest.raises(Disconnected):
        pi1_presentation(canvas)
