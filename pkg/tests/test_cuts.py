# tests.test_cuts


import pytest

from qpkit.errors import NotStrictSource, NotStrictSink
from qpkit.cuts import (enumerate_cuts, format_cut, is_cut, grading, walk_degree, has_enough_cuts,
                        is_algebraic_cut, cuts_compatible, compatibility_class, is_fully_compatible,
                        strict_sources, strict_sinks, cut_mutate_plus, cut_mutate_minus, cut_quiver,
                        source_sequence, sink_sequence, is_sufficiently_cyclic, has_enough_compatibles)
from qpkit.selfinjective import is_selfinjective
from qpkit.families import cycle_qp, covering_example, example_e1


def test_enumerate_cuts_e1(e1):
    cuts = enumerate_cuts(e1)
    assert [sorted(c) for c in cuts] == [["b"], ["a", "c"], ["a", "d"], ["c", "e"], ["d", "e"]]
    assert all(is_cut(e1, c) for c in cuts)
    assert not is_cut(e1, {"a", "b"})


def test_enumerate_cuts_e2(e2):
    assert [sorted(c) for c in enumerate_cuts(e2)] == [["a"], ["b"], ["c", "d"]]


def test_cycle_cuts_are_single_arrows():
    cuts = enumerate_cuts(cycle_qp(5))
    assert sorted(format_cut(c) for c in cuts) == ["{a1}", "{a2}", "{a3}", "{a4}", "{a5}"]


def test_grading_and_walk_degree(e1):
    assert grading(e1.quiver, {"b"}) == {"a": 0, "b": 1, "c": 0, "d": 0, "e": 0}
    assert walk_degree({"b"}, [("a", 1), ("b", -1)]) == -1


def test_algebraic_cuts_e1(e1):
    verdicts = {format_cut(c): is_algebraic_cut(e1, c) for c in enumerate_cuts(e1)}
    assert {k for k, (ok, _) in verdicts.items() if ok} == {"{b}", "{a,d}", "{c,e}"}
    assert verdicts["{a,c}"] == (False, "global dimension 3")
    assert verdicts["{d,e}"] == (False, "global dimension 3")


def test_algebraic_cuts_e2(e2):
    assert is_algebraic_cut(e2, {"a"})[0]
    assert is_algebraic_cut(e2, {"b"})[0]
    ok, diagnostic = is_algebraic_cut(e2, {"c", "d"})
    assert not ok
    assert "minimal" in diagnostic


@pytest.mark.parametrize("n", [3, 4])
def test_cycle_cuts_are_algebraic(n):
    qp = cycle_qp(n)
    assert all(is_algebraic_cut(qp, c)[0] for c in enumerate_cuts(qp))


def test_compatibility(e1, e2):
    assert is_fully_compatible(e1)
    assert is_fully_compatible(e2)
    assert has_enough_cuts(e1)
    assert cuts_compatible(e1.quiver, {"b"}, {"a", "c"})
    assert compatibility_class(e1.quiver, {"b"}) == enumerate_cuts(e1)


def test_incompatible_subsets():
    quiver, cut = covering_example()
    assert not cuts_compatible(quiver, cut, {"a"})
    assert [sorted(c) for c in compatibility_class(quiver, cut)] == [["b"], ["b", "c"]]


def test_strict_sources_and_sinks(e1):
    assert strict_sources(e1.quiver, {"b"}) == ["3"]
    assert strict_sinks(e1.quiver, {"b"}) == ["2"]
    assert cut_mutate_plus(e1.quiver, {"b"}, "3") == frozenset({"c", "e"})
    assert cut_mutate_minus(e1.quiver, {"b"}, "2") == frozenset({"a", "d"})
    with pytest.raises(NotStrictSource):
        cut_mutate_plus(e1.quiver, {"b"}, "1")
    with pytest.raises(NotStrictSink):
        cut_mutate_minus(e1, {"b"}, "3")


def test_cut_mutation_is_invertible(e1):
    for c in enumerate_cuts(e1):
        for x in strict_sources(e1.quiver, c):
            d = cut_mutate_plus(e1.quiver, c, x)
            assert x in strict_sinks(e1.quiver, d)
            assert cut_mutate_minus(e1.quiver, d, x) == c


def test_source_sequence(e1):
    assert source_sequence(e1.quiver, {"b"}) == ["3", "1", "4", "2"]
    assert source_sequence(e1.quiver, {"b"}, strict=True) == ["3", "1", "4", "2"]
    assert len(sink_sequence(e1.quiver, {"b"})) == 4


def test_cut_quiver_is_acyclic(e1):
    g = cut_quiver(e1.quiver, {"b"})
    assert sorted(k for _, _, k in g.edges(keys=True)) == ["a", "c", "d", "e"]
    assert is_sufficiently_cyclic(e1.quiver, {"b"})
    assert has_enough_compatibles(e1.quiver, {"b"})
    assert has_enough_compatibles(cycle_qp(4), {"a1"})


@pytest.mark.parametrize("build", [example_e1, lambda: cycle_qp(4)])
def test_verdicts_do_not_depend_on_arrow_ids(build):
    qp = build()
    renamed = qp.relabel(amap={a: f"x{k}" for k, a in enumerate(sorted(qp.arrows))})
    cuts, renamed_cuts = enumerate_cuts(qp), enumerate_cuts(renamed)
    assert len(cuts) == len(renamed_cuts)
    assert (sorted(is_algebraic_cut(qp, c)[0] for c in cuts)
            == sorted(is_algebraic_cut(renamed, c)[0] for c in renamed_cuts))
    assert is_selfinjective(qp).selfinjective == is_selfinjective(renamed).selfinjective
