# qpkit.cuts


"""Cuts, their gradings and cut-mutation.

A cut is a set of arrows meeting every cycle of the potential exactly once.
It defines the grading ``g_C`` (1 on cut arrows, 0 elsewhere) in which the
potential is homogeneous of degree 1. Cuts are returned as frozensets of
arrow ids. Arrows outside the potential are never put into a cut.

Two arrow subsets are compatible when ``g_C - g_C'`` is a coboundary
``θ(t(a)) - θ(s(a))``. The subsets compatible with C are exactly the sets
``{a : g_C(a) + θ(t(a)) - θ(s(a)) = 1}`` for height functions θ keeping every
such value in {0, 1}.
"""


import itertools
import logging
log = logging.getLogger(__name__)

import networkx as nx

from .errors import (UndeterminedDimension, NotStrictSource, NotStrictSink, NoSequence,
                     InvariantViolation)
from .algebra import FDAlgebra, truncated_jacobian, min_generation_check
from .resolution import global_dimension_le, global_dimension


def _quiver(obj):
    return getattr(obj, "quiver", obj)


def cut_key(cut):
    return (len(cut), sorted(cut))


def format_cut(cut):
    return "{" + ",".join(sorted(cut)) + "}"


def grading(quiver, cut):
    """g_C as a mapping arrow id -> 0 or 1."""
    return {a: int(a in cut) for a in quiver.arrow_ids()}


def walk_degree(cut, walk):
    """g_C of a walk given as ``[(arrow, +1 or -1), ...]``."""
    return sum(e for a, e in walk if a in cut)


def is_cut(qp, cut):
    return all(sum(1 for a in w.arrows if a in cut) == 1 for w in qp.potential.terms)


### enumeration


def _select(X, Y, r):
    cols = []
    for j in Y[r]:
        for i in X[j]:
            for k in Y[i]:
                if k != j:
                    X[k].remove(i)
        cols.append(X.pop(j))
    return cols


def _deselect(X, Y, r, cols):
    for j in reversed(Y[r]):
        X[j] = cols.pop()
        for i in X[j]:
            for k in Y[i]:
                if k != j:
                    X[k].add(i)


def _algorithm_x(X, Y, partial):
    if not X:
        yield list(partial)
        return
    c = min(X, key=lambda e: (len(X[e]), e))
    for r in sorted(X[c]):
        partial.append(r)
        cols = _select(X, Y, r)
        yield from _algorithm_x(X, Y, partial)
        _deselect(X, Y, r, cols)
        partial.pop()


def enumerate_cuts(qp):
    """All cuts, as an exact cover of potential terms by arrows."""
    terms = [w for w, _ in qp.potential.sorted_terms()]
    rows = {}
    for a in sorted(qp.potential.arrows()):
        hits = [t for t, w in enumerate(terms) if a in w.arrows]
        if all(terms[t].count(a) == 1 for t in hits):
            rows[a] = hits
    X = {t: set() for t in range(len(terms))}
    for a, hits in rows.items():
        for t in hits:
            X[t].add(a)
    cuts = {frozenset(sol) for sol in _algorithm_x(X, rows, [])}
    cuts = sorted(cuts, key=cut_key)
    log.info(f"{len(cuts)} cuts")
    return cuts


def has_enough_cuts(qp):
    covered = set().union(*enumerate_cuts(qp))
    return covered >= set(qp.quiver.arrows)


### algebraic cuts


def is_algebraic_cut(qp, cut, degree_bound=None):
    """(verdict, diagnostic) for a cut.

    Algebraic means the truncated Jacobian algebra is finite dimensional of
    global dimension at most 2 and ``{∂_c W : c in C}`` generate its ideal
    minimally.

    Raises:
        UndeterminedDimension: if the truncated algebra cannot be certified.
    """
    alg = truncated_jacobian(qp, cut, degree_bound)
    if not isinstance(alg, FDAlgebra):
        raise UndeterminedDimension(str(alg))
    if not global_dimension_le(alg, 2):
        gd = global_dimension(alg, bound=max(3, len(qp.vertices)))
        return False, f"global dimension {gd if gd is not None else '> ' + str(max(3, len(qp.vertices)))}"
    gens = [qp.derivative(c) for c in sorted(cut)]
    if not min_generation_check(gens, qp.quiver.without(cut), degree_bound):
        return False, "derivatives at the cut arrows are not a minimal set of relations"
    return True, "algebraic"


### compatibility


def cuts_compatible(quiver, cut1, cut2):
    """True iff g_C - g_C' is a coboundary on the underlying graph."""
    quiver = _quiver(quiver)
    return _coboundary(quiver, cut1, cut2) is not None


def _coboundary(quiver, cut1, cut2):
    """θ with θ(t(a)) - θ(s(a)) = g_C(a) - g_C'(a), or None."""
    theta = {}
    for comp in quiver.components():
        theta[comp[0]] = 0
        queue = [comp[0]]
        while queue:
            v = queue.pop(0)
            for a in quiver.arrows_from(v) + quiver.arrows_to(v):
                arrow = quiver.arrow(a)
                d = int(a in cut1) - int(a in cut2)
                if arrow.src == v:
                    w, value = arrow.tgt, theta[v] + d
                else:
                    w, value = arrow.src, theta[v] - d
                if w in theta:
                    if theta[w] != value:
                        return None
                else:
                    theta[w] = value
                    queue.append(w)
    return theta


def _component_heights(quiver, comp, cut):
    """Height functions on one component, normalized to minimum 0."""
    order, seen = [comp[0]], {comp[0]}
    for v in order:
        for a in quiver.arrows_from(v) + quiver.arrows_to(v):
            arrow = quiver.arrow(a)
            w = arrow.tgt if arrow.src == v else arrow.src
            if w not in seen:
                seen.add(w)
                order.append(w)
    incident = {v: quiver.arrows_from(v) + quiver.arrows_to(v) for v in comp}
    found = []

    def ok(theta, v):
        for a in incident[v]:
            arrow = quiver.arrow(a)
            if arrow.src in theta and arrow.tgt in theta:
                if int(a in cut) + theta[arrow.tgt] - theta[arrow.src] not in (0, 1):
                    return False
        return True

    def extend(theta, k):
        if k == len(order):
            low = min(theta.values())
            found.append({v: h - low for v, h in theta.items()})
            return
        v = order[k]
        candidates = set()
        for a in incident[v]:
            arrow = quiver.arrow(a)
            g = int(a in cut)
            if arrow.tgt == v and arrow.src in theta:
                candidates |= {theta[arrow.src] - g, theta[arrow.src] + 1 - g}
            if arrow.src == v and arrow.tgt in theta:
                candidates |= {theta[arrow.tgt] + g, theta[arrow.tgt] + g - 1}
        for h in sorted(candidates):
            theta[v] = h
            if ok(theta, v):
                extend(theta, k + 1)
            del theta[v]

    extend({comp[0]: 0}, 1)
    return found


def height_functions(quiver, cut):
    """All admissible height functions, normalized per component."""
    quiver = _quiver(quiver)
    per_comp = [_component_heights(quiver, comp, cut) for comp in quiver.components()]
    out = []
    for combo in itertools.product(*per_comp):
        theta = {}
        for part in combo:
            theta.update(part)
        out.append({v: theta[v] for v in quiver.vertices})
    return out


def subset_from_heights(quiver, cut, theta):
    quiver = _quiver(quiver)
    return frozenset(a.id for a in quiver.arrows.values()
                     if int(a.id in cut) + theta[a.tgt] - theta[a.src] == 1)


def compatibility_class(quiver, cut):
    """All arrow subsets compatible with `cut`."""
    quiver = _quiver(quiver)
    subsets = {subset_from_heights(quiver, cut, theta) for theta in height_functions(quiver, cut)}
    return sorted(subsets, key=cut_key)


def is_fully_compatible(qp):
    cuts = enumerate_cuts(qp)
    return all(cuts_compatible(qp.quiver, c1, c2) for c1, c2 in itertools.combinations(cuts, 2))


### cut-mutation


def strict_sources(quiver, cut):
    quiver = _quiver(quiver)
    return [v for v in quiver.vertices
            if all(a in cut for a in quiver.arrows_to(v)) and not any(a in cut for a in quiver.arrows_from(v))]


def strict_sinks(quiver, cut):
    quiver = _quiver(quiver)
    return [v for v in quiver.vertices
            if all(a in cut for a in quiver.arrows_from(v)) and not any(a in cut for a in quiver.arrows_to(v))]


def cut_mutate_plus(quiver, cut, x):
    """μ⁺_x: drop the arrows ending at x, add the arrows starting at x."""
    quiver = _quiver(quiver)
    if x not in strict_sources(quiver, cut):
        raise NotStrictSource(f"{x} is not a strict source of {format_cut(cut)}")
    return _plus(quiver, cut, x)


def cut_mutate_minus(quiver, cut, x):
    """μ⁻_x: drop the arrows starting at x, add the arrows ending at x."""
    quiver = _quiver(quiver)
    if x not in strict_sinks(quiver, cut):
        raise NotStrictSink(f"{x} is not a strict sink of {format_cut(cut)}")
    return _minus(quiver, cut, x)


def _plus(quiver, cut, x):
    return frozenset((set(cut) - set(quiver.arrows_to(x))) | set(quiver.arrows_from(x)))


def _minus(quiver, cut, x):
    return frozenset((set(cut) - set(quiver.arrows_from(x))) | set(quiver.arrows_to(x)))


def cut_quiver(quiver, cut):
    """Q_C as a networkx MultiDiGraph."""
    quiver = _quiver(quiver)
    return quiver.without(cut).digraph()


def _sequence(quiver, cut, strict, plus):
    remaining = list(quiver.vertices)
    current = frozenset(cut)
    order = []
    while remaining:
        qc = quiver.without(current)
        if plus:
            candidates = [v for v in remaining if not qc.arrows_to(v)]
            allowed = set(strict_sources(quiver, current))
        else:
            candidates = [v for v in remaining if not qc.arrows_from(v)]
            allowed = set(strict_sinks(quiver, current))
        if strict:
            candidates = [v for v in candidates if v in allowed]
        if not candidates:
            kind = ("strict " if strict else "") + ("source" if plus else "sink")
            raise NoSequence(f"no {kind} left among {remaining} for {format_cut(current)}")
        x = candidates[0]
        order.append(x)
        remaining.remove(x)
        current = _plus(quiver, current, x) if plus else _minus(quiver, current, x)
    return order


def source_sequence(quiver, cut, strict=False):
    """A C-source sequence: each vertex a source of Q_C' for the cut mutated so far.

    Raises:
        NoSequence: if Q_C has a cycle (or no strict source is available).
    """
    return _sequence(_quiver(quiver), cut, strict, plus=True)


def sink_sequence(quiver, cut, strict=False):
    return _sequence(_quiver(quiver), cut, strict, plus=False)


def is_sufficiently_cyclic(quiver, cut):
    """True iff every arrow lies on a cycle p with g_C(p) <= 1."""
    quiver = _quiver(quiver)
    g = nx.DiGraph()
    g.add_nodes_from(quiver.vertices)
    for a in quiver.arrows.values():
        w = int(a.id in cut)
        if not g.has_edge(a.src, a.tgt) or g[a.src][a.tgt]["g"] > w:
            g.add_edge(a.src, a.tgt, g=w)
    for a in quiver.arrows.values():
        try:
            back = nx.shortest_path_length(g, a.tgt, a.src, weight="g")
        except nx.NetworkXNoPath:
            return False
        if back + int(a.id in cut) > 1:
            return False
    return True


def has_enough_compatibles(quiver, cut):
    """Q_1 is covered by the compatibility class, checked against acyclicity of Q_C."""
    quiver = _quiver(quiver)
    covered = set().union(*compatibility_class(quiver, cut))
    enough = covered >= set(quiver.arrows)
    acyclic = quiver.without(cut).is_acyclic()
    if enough != acyclic:
        raise InvariantViolation(f"enough compatibles {enough} but Q_C acyclic {acyclic} for {format_cut(cut)}")
    return enough
