# qpkit.covering


"""The graded covering ℤ(Q, C) and its slices.

``ℤ(Q, C)`` has vertices ``(x, ℓ)`` and arrows ``(a, ℓ): (x, ℓ) -> (y, ℓ - g_C(a))``.
Slices are kept as height functions θ with ``g_C(a) + θ(y) - θ(x) ∈ {0, 1}``
for every arrow ``a: x -> y``; the slice itself is ``{(x, θ(x))}``. Height
functions are normalized to minimum 0 on each connected component, which
identifies slices in the same τ-orbit.
"""


import logging
log = logging.getLogger(__name__)

import networkx as nx

from .errors import (MalformedQP, NotCompatible, NotStrictSource, NotStrictSink, NoSequence,
                     InvariantViolation)
from .cuts import (_quiver, _coboundary, height_functions, subset_from_heights, compatibility_class,
                   strict_sources, strict_sinks, cut_mutate_plus, cut_mutate_minus, cut_key,
                   format_cut, has_enough_compatibles, is_sufficiently_cyclic)


class HeightFunction(object):
    """A slice of ℤ(Q, C) up to τ, given by its heights."""

    def __init__(self, quiver, cut, theta):
        self.quiver = _quiver(quiver)
        self.cut = frozenset(cut)
        self.theta = _normalize(self.quiver, theta)
        bad = [a.id for a in self.quiver.arrows.values()
               if int(a.id in self.cut) + self.theta[a.tgt] - self.theta[a.src] not in (0, 1)]
        if bad:
            raise NotCompatible(f"heights {self.theta} violate the slice condition at {sorted(bad)}")

    def __eq__(self, other):
        return (isinstance(other, HeightFunction) and self.cut == other.cut
                and self.theta == other.theta)

    def __hash__(self):
        return hash((self.cut, tuple(sorted(self.theta.items()))))

    def __repr__(self):
        return f"HeightFunction({self.theta})"

    def __getitem__(self, v):
        return self.theta[v]

    def volume(self):
        return sum(self.theta.values())

    def cells(self):
        """Vertices ``(x, θ(x))`` of the slice."""
        return [(v, self.theta[v]) for v in self.quiver.vertices]

    def to_dict(self):
        return {"cut": sorted(self.cut), "heights": dict(self.theta), "subset": sorted(slice_to_cut(self))}


def _normalize(quiver, theta):
    out = {}
    for comp in quiver.components():
        low = min(theta[v] for v in comp)
        out.update({v: theta[v] - low for v in comp})
    return {v: out[v] for v in quiver.vertices}


class CoveringWindow(object):
    """The levels ``lo..hi`` of ℤ(Q, C).

    Arrows whose target drops below ``lo`` are kept and flagged ``boundary``.
    """

    def __init__(self, quiver, cut, lo, hi):
        if lo > hi:
            raise ValueError(f"empty window {lo}:{hi}")
        self.quiver = _quiver(quiver)
        self.cut = frozenset(cut)
        self.lo, self.hi = lo, hi
        self.vertices = [(v, l) for l in range(hi, lo - 1, -1) for v in self.quiver.vertices]
        self.arrows = []
        for l in range(hi, lo - 1, -1):
            for a in sorted(self.quiver.arrows.values()):
                target = (a.tgt, l - int(a.id in self.cut))
                self.arrows.append({"arrow": (a.id, l), "src": (a.src, l), "tgt": target,
                                    "boundary": target[1] < lo})

    def project(self, cell):
        """π forgets the level."""
        return cell[0]

    def tau(self, cell, k=1):
        return (cell[0], cell[1] + k)

    def arrow_set(self):
        return {(e["arrow"][0], e["src"], e["tgt"]) for e in self.arrows}

    def graph(self):
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        for e in self.arrows:
            g.add_edge(e["src"], e["tgt"], key=e["arrow"], boundary=e["boundary"])
        return g

    def to_dot(self, name="Z"):
        label = lambda c: f"{c[0]}@{c[1]}"
        lines = [f"digraph {name} {{"]
        lines += [f'  "{label(c)}";' for c in self.vertices]
        for e in self.arrows:
            style = ' style="dashed"' if e["boundary"] else ""
            lines.append(f'  "{label(e["src"])}" -> "{label(e["tgt"])}" [label="{e["arrow"][0]}"{style}];')
        lines.append("}")
        return "\n".join(lines)


def build_covering_window(quiver, cut, lo, hi):
    return CoveringWindow(quiver, cut, lo, hi)


def lift_walk(quiver, cut, walk, start, level=0):
    """End point ``(vertex, level)`` of the lift of a walk starting at ``(start, level)``.

    The walk is ``[(arrow, +1 or -1), ...]``; ``-1`` traverses the arrow backwards.
    """
    quiver = _quiver(quiver)
    here = start
    for a, e in walk:
        arrow = quiver.arrow(a)
        g = int(a in cut)
        if e == 1 and arrow.src == here:
            here, level = arrow.tgt, level - g
        elif e == -1 and arrow.tgt == here:
            here, level = arrow.src, level + g
        else:
            raise MalformedQP(f"walk leaves {here} along {a}^{e} which does not start there")
    return here, level


def enumerate_slices(quiver, cut):
    """All slices of ℤ(Q, C) up to τ, as height functions."""
    quiver = _quiver(quiver)
    if not quiver.is_connected():
        log.debug("disconnected quiver: slices are products over components")
    slices = [HeightFunction(quiver, cut, theta) for theta in height_functions(quiver, cut)]
    return sorted(slices, key=lambda s: (s.volume(), [s.theta[v] for v in quiver.vertices]))


def slice_to_cut(hf):
    """C_S: the arrows of Q not covered by arrows of the slice."""
    return subset_from_heights(hf.quiver, hf.cut, hf.theta)


def cut_to_slice(quiver, cut, other):
    """The slice S of ℤ(Q, cut) with C_S = other.

    Raises:
        NotCompatible: if `other` is not compatible with `cut`.
    """
    quiver = _quiver(quiver)
    theta = _coboundary(quiver, other, cut)
    if theta is None:
        raise NotCompatible(f"{format_cut(other)} is not compatible with {format_cut(cut)}")
    return HeightFunction(quiver, cut, theta)


def slice_mutate_plus(hf, x):
    """μ⁺_x: move x one level down, x a strict source of C_S."""
    if x not in strict_sources(hf.quiver, slice_to_cut(hf)):
        raise NotStrictSource(f"{x} is not a strict source of the slice {hf.theta}")
    theta = dict(hf.theta)
    theta[x] -= 1
    return HeightFunction(hf.quiver, hf.cut, theta)


def slice_mutate_minus(hf, x):
    """μ⁻_x: move x one level up, x a strict sink of C_S."""
    if x not in strict_sinks(hf.quiver, slice_to_cut(hf)):
        raise NotStrictSink(f"{x} is not a strict sink of the slice {hf.theta}")
    theta = dict(hf.theta)
    theta[x] += 1
    return HeightFunction(hf.quiver, hf.cut, theta)


def lower_slice(hf):
    """Slice mutations μ⁺ at strict sources of positive height until the volume is 0.

    Returns the list of ``(vertex, slice)`` steps.

    Raises:
        NoSequence: if no admissible vertex is left before the volume reaches 0.
    """
    steps = []
    while hf.volume() > 0:
        sources = strict_sources(hf.quiver, slice_to_cut(hf))
        movable = [x for x in sources if hf.theta[x] > 0]
        if not movable:
            raise NoSequence(f"no strict source of positive height in {hf.theta}")
        before = hf.volume()
        hf = slice_mutate_plus(hf, movable[0])
        if hf.volume() != before - 1:
            raise InvariantViolation(f"volume went from {before} to {hf.volume()}")
        steps.append((movable[0], hf))
    return steps


def covering_isomorphism(quiver, cut, other):
    """Level shifts ``{x: k}`` with ``(x, ℓ) -> (x, ℓ + k)`` an isomorphism ℤ(Q, cut) -> ℤ(Q, other).

    Raises:
        NotCompatible: if the cuts are not compatible.
    """
    quiver = _quiver(quiver)
    theta = _coboundary(quiver, other, cut)
    if theta is None:
        raise NotCompatible(f"{format_cut(other)} is not compatible with {format_cut(cut)}")
    return {v: -theta[v] for v in quiver.vertices}


def cut_mutation_reachability(quiver, cut):
    """Graph on compatibility_class(cut) with an edge per cut-mutation.

    Edges carry the move that first produced them, ``"+x"`` or ``"-x"``.

    Raises:
        InvariantViolation: if Q_C is acyclic and (Q, C) sufficiently cyclic,
            yet the class is not connected.
    """
    quiver = _quiver(quiver)
    g = nx.Graph()
    klass = compatibility_class(quiver, cut)
    g.add_nodes_from(klass)
    members = set(klass)
    for c in klass:
        for x in strict_sources(quiver, c):
            d = cut_mutate_plus(quiver, c, x)
            if d not in members:
                raise InvariantViolation(f"μ⁺_{x}{format_cut(c)} left the compatibility class")
            if d != c:
                g.add_edge(c, d, move=f"+{x}")
        for x in strict_sinks(quiver, c):
            d = cut_mutate_minus(quiver, c, x)
            if d != c and not g.has_edge(c, d):
                g.add_edge(c, d, move=f"-{x}")
    components = sorted((sorted(comp, key=cut_key) for comp in nx.connected_components(g)),
                        key=lambda comp: cut_key(comp[0]))
    g.graph["components"] = components
    if len(components) > 1:
        if has_enough_compatibles(quiver, cut) and is_sufficiently_cyclic(quiver, cut):
            raise InvariantViolation(f"{len(components)} mutation components in the class of {format_cut(cut)}")
        log.info(f"class of {format_cut(cut)} splits into {len(components)} mutation components")
    return g
