# tests.test_isomorphism


from qpkit.potential import Potential
from qpkit.quiver import CyclicWord
from qpkit.isomorphism import (qp_canonical_form, qp_signature, qp_automorphisms, find_isomorphism,
                               qp_isomorphic, canonical_labels)
from qpkit.families import cycle_qp, example_e1


def shuffled_e1():
    return example_e1().relabel({"1": "w", "2": "x", "3": "y", "4": "z"},
                                {"a": "p", "b": "q", "c": "r", "d": "s", "e": "t"})


def test_canonical_form_ignores_labels(e1):
    assert qp_canonical_form(e1) == qp_canonical_form(shuffled_e1())
    assert qp_signature(e1) == qp_signature(shuffled_e1())
    assert len(qp_signature(e1)) == 12
    assert qp_canonical_form(e1) != qp_canonical_form(cycle_qp(4))


def test_canonical_labels_agree_on_relabelled_copies(e1):
    vmap, amap = canonical_labels(e1)
    assert sorted(vmap.values()) == ["1", "2", "3", "4"]
    assert sorted(amap.values()) == ["x1", "x2", "x3", "x4", "x5"]
    other = shuffled_e1()
    assert e1.relabel(*canonical_labels(e1)) == other.relabel(*canonical_labels(other))


def test_find_isomorphism_maps_potential(e1):
    vmap, amap = find_isomorphism(e1, shuffled_e1())
    assert vmap["2"] == "x"
    assert amap["b"] == "q"


def test_coefficients_matter_without_rescaling():
    q4 = cycle_qp(4)
    doubled = q4.with_potential(q4.potential.scale(2))
    assert not qp_isomorphic(q4, doubled)
    assert qp_isomorphic(q4, doubled, rescale=True)


def test_rescaling_fixes_signs(e2):
    twisted = e2.with_potential(Potential({CyclicWord.of("abc"): 1, CyclicWord.of("abd"): -1}))
    assert not qp_isomorphic(e2, twisted)
    assert qp_isomorphic(e2, twisted, rescale=True)


def test_automorphisms():
    rotations = qp_automorphisms(cycle_qp(4))
    assert len(rotations) == 4
    assert {v: v for v in "1234"} in rotations
    assert {"1": "2", "2": "3", "3": "4", "4": "1"} in rotations


def test_arrow_automorphisms(e2):
    assert qp_automorphisms(e2) == [{"1": "1", "2": "2", "3": "3"}]
    pairs = qp_automorphisms(e2, arrows=True)
    assert len(pairs) == 2
    assert any(amap["c"] == "d" for _, amap in pairs)
