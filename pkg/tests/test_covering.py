# tests.test_covering


import pytest

from qpkit.errors import NotCompatible, NotStrictSource, MalformedQP
from qpkit.covering import (HeightFunction, build_covering_window, lift_walk, enumerate_slices, slice_to_cut,
                            cut_to_slice, slice_mutate_plus, slice_mutate_minus, lower_slice,
                            covering_isomorphism, cut_mutation_reachability)
from qpkit.cuts import enumerate_cuts, compatibility_class
from qpkit.families import (covering_example, example_e1, example_e2, cycle_qp, tilde_cycle_qp, tensor_qp, triangle_qp,
                            linear_orientation)


def test_slices_of_covering_example():
    quiver, cut = covering_example()
    slices = enumerate_slices(quiver, cut)
    assert [s.theta for s in slices] == [{"1": 0, "2": 0, "3": 0}, {"1": 0, "2": 0, "3": 1}]
    assert [sorted(slice_to_cut(s)) for s in slices] == [["b"], ["b", "c"]]
    assert slices[1].to_dict()["subset"] == ["b", "c"]


def test_height_function_rejects_non_slices():
    quiver, cut = covering_example()
    with pytest.raises(NotCompatible):
        HeightFunction(quiver, cut, {"1": 0, "2": 2, "3": 2})


def test_window():
    quiver, cut = covering_example()
    window = build_covering_window(quiver, cut, 0, 1)
    assert len(window.vertices) == 6
    assert len(window.arrows) == 6
    assert [e["arrow"] for e in window.arrows if e["boundary"]] == [("b", 0)]
    assert window.tau(("2", 0)) == ("2", 1)
    assert window.project(("2", 0)) == "2"
    assert window.graph().number_of_edges() == 6
    assert window.to_dot().startswith("digraph Z {")
    with pytest.raises(ValueError):
        build_covering_window(quiver, cut, 2, 1)


def test_lift_walk():
    quiver, cut = covering_example()
    assert lift_walk(quiver, cut, [("a", 1), ("b", -1)], "1") == ("1", 1)
    assert lift_walk(quiver, cut, [("b", 1), ("c", 1)], "1", level=3) == ("3", 2)
    with pytest.raises(MalformedQP):
        lift_walk(quiver, cut, [("c", 1)], "1")


def test_cut_slice_correspondence():
    quiver, cut = covering_example()
    s = cut_to_slice(quiver, cut, {"b", "c"})
    assert s.theta == {"1": 0, "2": 0, "3": 1}
    assert slice_to_cut(s) == frozenset({"b", "c"})
    with pytest.raises(NotCompatible):
        cut_to_slice(quiver, cut, {"a"})


def test_slice_mutation_and_lowering():
    quiver, cut = covering_example()
    bottom = HeightFunction(quiver, cut, {"1": 0, "2": 0, "3": 0})
    top = slice_mutate_minus(bottom, "3")
    assert top.volume() == 1
    with pytest.raises(NotStrictSource):
        slice_mutate_plus(bottom, "3")
    steps = lower_slice(top)
    assert [x for x, _ in steps] == ["3"]
    assert steps[-1][1] == bottom


def test_covering_isomorphism():
    quiver, cut = covering_example()
    assert covering_isomorphism(quiver, cut, {"b", "c"}) == {"1": 0, "2": 0, "3": -1}
    with pytest.raises(NotCompatible):
        covering_isomorphism(quiver, cut, {"a"})


def test_reachability(e1):
    quiver, cut = covering_example()
    g = cut_mutation_reachability(quiver, cut)
    assert g.number_of_nodes() == 2
    assert g.number_of_edges() == 1
    g = cut_mutation_reachability(e1.quiver, {"b"})
    assert g.number_of_nodes() == 5
    assert len(g.graph["components"]) == 1


CONNECTED = {
    "E1": example_e1,
    "E2": example_e2,
    "Q4": lambda: cycle_qp(4),
    "Q~4": lambda: tilde_cycle_qp(4),
    "A2(x)A2": lambda: tensor_qp(linear_orientation("A2"), linear_orientation("A2")),
    "triangle3": lambda: triangle_qp(3).qp,
}


@pytest.mark.parametrize("name", sorted(CONNECTED))
def test_slices_match_the_compatibility_class(name):
    qp = CONNECTED[name]()
    assert qp.quiver.is_connected()
    for cut in enumerate_cuts(qp):
        assert len(enumerate_slices(qp.quiver, cut)) == len(compatibility_class(qp.quiver, cut))
