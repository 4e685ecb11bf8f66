# tests.test_mutation


import pytest

from qpkit.errors import TwoCycleAtVertex, ReductionBoundExceeded, OrbitPreconditionViolated
from qpkit.quiver import Quiver, CyclicWord
from qpkit.potential import Potential, path_element
from qpkit.qp import QP
from qpkit.mutation import premutate, reduce_qp, mutate, orbit, orbit_mutate, substitute, star, composite
from qpkit.isomorphism import qp_isomorphic
from qpkit.selfinjective import is_selfinjective
from qpkit.families import (cycle_qp, tilde_cycle_qp, tubular_2222, tubular_2222_mutated, tensor_qp, square_product_qp,
                            DynkinQuiver, linear_orientation, example_e1, example_e2)


def test_star_and_composite():
    assert star("a") == "a*"
    assert star(star("a")) == "a"
    assert composite("a", "b") == "[a|b]"


def test_premutation_of_three_cycle():
    pre = premutate(cycle_qp(3), "1")
    assert sorted(pre.arrows) == ["[a2|a1]", "a1*", "a2*", "a3"]
    assert pre.quiver.src("[a2|a1]") == "2" and pre.quiver.tgt("[a2|a1]") == "3"
    assert set(pre.potential.terms) == {CyclicWord.of(("a3", "[a2|a1]")),
                                        CyclicWord.of(("[a2|a1]", "a1*", "a2*"))}


def test_premutation_rejects_two_cycles():
    q = Quiver("12", [("a", "1", "2"), ("b", "2", "1")])
    with pytest.raises(TwoCycleAtVertex):
        premutate(QP(q), "1")
    loop = Quiver("1", [("l", "1", "1")])
    with pytest.raises(TwoCycleAtVertex):
        premutate(QP(loop), "1")
    with pytest.raises(ValueError):
        premutate(cycle_qp(3), "9")


def test_reduce_splits_trivial_part():
    q = Quiver("12", [("a", "1", "2"), ("b", "2", "1")])
    result = reduce_qp(QP(q, Potential({CyclicWord.of("ab"): 1})))
    assert result.reduced
    assert result.trivial_rank == 1
    assert not result.qp.arrows


def test_reduce_keeps_two_cycles_outside_the_potential():
    q = Quiver("12", [("a", "1", "2"), ("b", "2", "1")])
    result = reduce_qp(QP(q))
    assert result.reduced
    assert result.trivial_rank == 0
    assert sorted(result.qp.arrows) == ["a", "b"]


def test_mutating_three_cycle_gives_linear_a3():
    result = mutate(cycle_qp(3), "1")
    assert result.trivial_rank == 1
    assert sorted(result.qp.arrows) == ["a1*", "a2*"]
    assert not result.qp.potential
    assert not is_selfinjective(result.qp).selfinjective


def test_mutation_is_an_involution_on_three_cycle():
    once = mutate(cycle_qp(3), "1").qp
    twice = mutate(once, "1")
    assert twice.trivial_rank == 0
    assert qp_isomorphic(twice.qp, cycle_qp(3))


def test_substitute():
    q3 = cycle_qp(3)
    loop = path_element(q3.quiver, ["a1", "a3", "a2", "a1"])
    assert len(substitute(q3, "a1", loop).potential.terms) == 2
    with pytest.raises(ReductionBoundExceeded):
        substitute(q3, "a1", loop, bound=3)
    with pytest.raises(ValueError):
        substitute(q3, "a1", path_element(q3.quiver, ["a2"]))


def test_orbit():
    sigma = {"1": "3", "3": "1", "2": "4", "4": "2"}
    assert orbit(sigma, "1") == ["1", "3"]
    assert orbit({"1": "1"}, "1") == ["1"]


def test_orbit_mutation_of_four_cycle():
    q4 = cycle_qp(4)
    sigma = is_selfinjective(q4).nakayama
    result = orbit_mutate(q4, sigma, "1")
    assert result.trivial_rank == 1
    assert len(result.qp.arrows) == 4
    assert qp_isomorphic(result.qp, q4, rescale=True)
    assert is_selfinjective(result.qp).selfinjective


def test_orbit_mutation_needs_separated_orbit():
    sigma = {"1": "2", "2": "1", "3": "3", "4": "4"}
    with pytest.raises(OrbitPreconditionViolated, match="join"):
        orbit_mutate(cycle_qp(4), sigma, "1")


def test_tubular_mutation_matches_presentation():
    mutated = mutate(tubular_2222(2), "1").qp
    q = mutated.quiver
    assert len(q.arrows) == 9
    (top,) = [a for a in q.arrow_ids() if q.src(a) == "5" and q.tgt(a) == "0"]
    (down,) = q.arrows_to("1")
    (up,) = q.arrows_from("1")
    target = tubular_2222_mutated(2)
    candidates = [substitute(mutated, top, path_element(q, [down, up], t)) for t in range(-2, 3) if t]
    assert any(qp_isomorphic(c, target, rescale=True) for c in candidates)


@pytest.mark.parametrize("n", [4, 6])
def test_mutating_tilde_cycle_at_even_vertices_gives_the_cycle(n):
    qp = tilde_cycle_qp(n)
    for k in range(2, n + 1, 2):
        qp = mutate(qp, str(k)).qp
    assert qp_isomorphic(qp, cycle_qp(n), rescale=True)


FIXTURES = {
    "E1": example_e1,
    "E2": example_e2,
    **{f"Q{n}": (lambda n=n: cycle_qp(n)) for n in (3, 4, 5)},
    "Q~6": lambda: tilde_cycle_qp(6),
    "A2(x)A2": lambda: tensor_qp(linear_orientation("A2"), linear_orientation("A2")),
    "A2xA2": lambda: square_product_qp(DynkinQuiver("A2"), DynkinQuiver("A2")),
}


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_mutation_is_an_involution_on_quivers(name):
    qp = FIXTURES[name]()
    for k in qp.vertices:
        if qp.quiver.two_cycles_at(k):
            continue
        twice = mutate(mutate(qp, k).qp, k).qp
        assert qp_isomorphic(QP(twice.quiver), QP(qp.quiver)), k
