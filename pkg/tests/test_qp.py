# tests.test_qp


import json
from fractions import Fraction

import pytest

from qpkit.errors import MalformedQP, DanglingArrow, NonCyclicTerm, ZeroCoefficient
from qpkit.quiver import Quiver, Path, CyclicWord
from qpkit.potential import AlgebraElement, Potential, as_fraction
from qpkit.qp import QP, parse_qp, serialize_qp, opposite_qp, direct_sum, qp_from_dict


def test_cyclic_word_is_rotation_invariant():
    assert CyclicWord.of("bca") == CyclicWord.of("abc")
    assert CyclicWord.of("bca").arrows == ("a", "b", "c")
    assert len(CyclicWord.of("abab").rotations()) == 4


def test_quiver_rejects_dangling_and_duplicate_arrows():
    with pytest.raises(DanglingArrow):
        Quiver("12", [("a", "1", "3")])
    with pytest.raises(MalformedQP, match="duplicate"):
        Quiver("12", [("a", "1", "2"), ("a", "2", "1")])


def test_quiver_paths_compose_left_to_right():
    q = Quiver("123", [("a", "1", "2"), ("b", "2", "3")])
    p = q.path("ab")
    assert (p.src, p.tgt) == ("1", "3")
    assert q.path("a") * q.path("b") == p
    assert q.path("b") * q.path("a") is None
    with pytest.raises(NonCyclicTerm):
        q.path("ba")
    with pytest.raises(NonCyclicTerm, match="not closed"):
        q.cycle("ab")


def test_two_cycles_and_components():
    q = Quiver("123", [("a", "1", "2"), ("b", "2", "1"), ("l", "3", "3")])
    assert q.two_cycles_at("1") == [("a", "b")]
    assert q.two_cycles_at("3") == [("l", "l")]
    assert q.components() == [["1", "2"], ["3"]]
    assert not q.is_connected()


def test_as_fraction_is_exact():
    assert as_fraction("-3/4") == Fraction(-3, 4)
    with pytest.raises(TypeError):
        as_fraction(0.5)


def test_cyclic_derivative(e1):
    d = e1.derivative("b")
    assert d == AlgebraElement({Path("3", "2", ("e", "a")): 1, Path("3", "2", ("c", "d")): 1})
    assert e1.derivative("a") == AlgebraElement({Path("2", "1", ("b", "e")): 1})


def test_cyclic_derivative_is_linear(e1):
    doubled = e1.with_potential(e1.potential.scale(2))
    assert doubled.derivative("b") == e1.derivative("b").scale(2)
    halves = e1.with_potential(e1.potential + e1.potential.scale(Fraction(-1, 2)))
    assert halves.derivative("d") == e1.derivative("d").scale(Fraction(1, 2))


def test_derivative_of_periodic_word_counts_every_occurrence():
    q = Quiver("12", [("a", "1", "2"), ("b", "2", "1")])
    qp = QP(q, Potential({CyclicWord.of("abab"): 1}))
    assert qp.derivative("a") == AlgebraElement({Path("2", "1", ("b", "a", "b")): 2})


def test_double_derivative(e1):
    assert e1.double_derivative("a", "e") == AlgebraElement({Path("2", "3", ("b",)): 1})
    assert e1.double_derivative("b", "d") == AlgebraElement({Path("3", "4", ("c",)): 1})
    assert not e1.double_derivative("a", "c")


def test_sigma_sums_rotations(e1):
    assert len(e1.sigma().terms) == 6


def test_parse_and_serialize(e1):
    again = parse_qp(serialize_qp(e1))
    assert again == e1
    assert again.name == "E1"
    assert json.loads(serialize_qp(e1, {"note": "x"}))["note"] == "x"


@pytest.mark.parametrize("doc, error", [
    ({"vertices": ["1"], "arrows": [{"id": "a", "src": "1", "tgt": "2"}]}, DanglingArrow),
    ({"vertices": ["1", "2"], "arrows": [{"id": "a", "src": "1", "tgt": "2"}],
      "potential": [{"coef": "1", "cycle": ["a"]}]}, NonCyclicTerm),
    ({"vertices": ["1"], "arrows": [{"id": "a", "src": "1", "tgt": "1"}, {"id": "b", "src": "1", "tgt": "1"}],
      "potential": [{"coef": "0", "cycle": ["a", "b"]}]}, ZeroCoefficient),
    ({"vertices": ["1"], "arrows": [{"id": "a", "src": "1", "tgt": "1"}, {"id": "b", "src": "1", "tgt": "1"}],
      "potential": [{"coef": 0.5, "cycle": ["a", "b"]}]}, MalformedQP),
    ({"arrows": []}, MalformedQP),
    ([1, 2], MalformedQP),
])
def test_malformed_documents(doc, error):
    with pytest.raises(error):
        qp_from_dict(doc)


def test_parse_qp_rejects_bad_json():
    with pytest.raises(MalformedQP, match="malformed JSON"):
        parse_qp("{vertices: ")


def test_empty_potential_is_allowed():
    qp = qp_from_dict({"vertices": ["1", "2"], "arrows": [{"id": "a", "src": "1", "tgt": "2"}]})
    assert not qp.potential
    assert qp.derivative("a") == 0


def test_opposite_is_an_involution(e1):
    op = opposite_qp(e1)
    assert op.quiver.src("a") == "2"
    assert op.name == "E1^op"
    assert opposite_qp(op) == e1


def test_direct_sum_and_relabel(e1):
    other = e1.relabel({v: v + "'" for v in e1.vertices}, {a: a + "'" for a in e1.arrows})
    total = direct_sum(e1, other)
    assert len(total.vertices) == 8
    assert len(total.potential.terms) == 4
    assert not total.quiver.is_connected()
