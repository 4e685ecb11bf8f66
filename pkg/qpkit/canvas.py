# qpkit.canvas


"""The canvas of a QP: vertices, arrows and one 2-cell per potential cycle.

``H_1`` comes from the integral boundary maps. The fundamental group is
presented by the arrows off a spanning tree, one relator per 2-cell, and
simplified by Tietze moves within an effort bound. Simple connectivity is a
three valued verdict: it is only claimed with a proof (a trivial presentation
or a planar disk certificate) and only denied on nonzero homology or
disconnectedness.
"""


from dataclasses import dataclass, field
import enum
import logging
log = logging.getLogger(__name__)

import networkx as nx

from .errors import Disconnected, EmbeddingMismatch, NotPlanar
from .config import DEFAULTS
from . import linalg


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


class Canvas(object):
    """The 2-complex X_(Q,W)."""

    def __init__(self, qp):
        self.qp = qp
        self.zero_cells = list(qp.quiver.vertices)
        self.one_cells = {a.id: (a.src, a.tgt) for a in sorted(qp.quiver.arrows.values())}
        self.two_cells = [w for w, c in qp.potential.sorted_terms() if c]

    def __repr__(self):
        return f"Canvas({len(self.zero_cells)}, {len(self.one_cells)}, {len(self.two_cells)})"

    def is_connected(self):
        return self.qp.quiver.is_connected()

    def euler_characteristic(self):
        return len(self.zero_cells) - len(self.one_cells) + len(self.two_cells)

    def boundary_1(self):
        """Sparse ∂₁ with one column per arrow: +1 at the target, -1 at the source."""
        row = {v: i for i, v in enumerate(self.zero_cells)}
        entries = {}
        for j, (s, t) in enumerate(self.one_cells.values()):
            if s != t:
                entries[(row[t], j)] = 1
                entries[(row[s], j)] = -1
        return entries, (len(self.zero_cells), len(self.one_cells))

    def boundary_2(self):
        """Sparse ∂₂ with one column per 2-cell counting arrow occurrences."""
        row = {a: i for i, a in enumerate(self.one_cells)}
        entries = {}
        for j, w in enumerate(self.two_cells):
            for a in w.arrows:
                entries[(row[a], j)] = entries.get((row[a], j), 0) + 1
        return entries, (len(self.one_cells), len(self.two_cells))

    def to_dict(self):
        return {
            "vertices": self.zero_cells,
            "arrows": {a: list(st) for a, st in self.one_cells.items()},
            "cells": [list(w.arrows) for w in self.two_cells],
            "euler_characteristic": self.euler_characteristic(),
        }


def build_canvas(qp):
    return Canvas(qp)


@dataclass
class Homology:
    """A finitely generated abelian group ℤ^rank ⊕ ⊕ ℤ/t."""
    rank: int
    torsion: list = field(default_factory=list)

    @property
    def is_trivial(self):
        return self.rank == 0 and not self.torsion

    def __str__(self):
        parts = ([f"Z^{self.rank}"] if self.rank else []) + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


def homology_h1(canvas):
    """H₁ = ker ∂₁ / im ∂₂ via ranks and invariant factors of ∂₂."""
    d1, shape1 = canvas.boundary_1()
    d2, shape2 = canvas.boundary_2()
    cycles = shape1[1] - linalg.rank(d1, shape1)
    factors = linalg.invariant_factors(d2, shape2)
    return Homology(cycles - len(factors), [f for f in factors if f > 1])


@dataclass
class Presentation:
    """Generators and relators; a relator is a list of ``(generator, ±1)``."""
    generators: list
    relators: list

    @property
    def is_trivial(self):
        return not self.generators

    def abelianization(self):
        col = {g: j for j, g in enumerate(self.generators)}
        entries = {}
        for i, r in enumerate(self.relators):
            for g, e in r:
                entries[(i, col[g])] = entries.get((i, col[g]), 0) + e
        shape = (len(self.relators), len(self.generators))
        factors = linalg.invariant_factors(entries, shape)
        return Homology(len(self.generators) - len(factors), [f for f in factors if f > 1])

    def to_dict(self):
        word = lambda r: " ".join(g if e == 1 else f"{g}^-1" for g, e in r) or "1"
        return {"generators": list(self.generators), "relators": [word(r) for r in self.relators]}


def spanning_tree(canvas):
    """Arrow ids of a spanning tree of the underlying graph."""
    g = nx.MultiGraph()
    g.add_nodes_from(canvas.zero_cells)
    for a, (s, t) in canvas.one_cells.items():
        g.add_edge(s, t, key=a)
    return sorted(k for _, _, k in nx.minimum_spanning_edges(g, algorithm="kruskal", keys=True, data=False))


def pi1_presentation(canvas, basepoint=None):
    """π₁(X, basepoint): generators off a spanning tree, one relator per 2-cell.

    Raises:
        Disconnected: if the canvas is not connected.
    """
    if not canvas.is_connected():
        raise Disconnected("the canvas is not connected")
    if basepoint is not None and basepoint not in canvas.zero_cells:
        raise ValueError(f"unknown basepoint {basepoint}")
    tree = set(spanning_tree(canvas))
    generators = [a for a in canvas.one_cells if a not in tree]
    relators = [[(a, 1) for a in w.arrows if a not in tree] for w in canvas.two_cells]
    return Presentation(generators, relators)


def _free_reduce(word):
    out = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    while len(out) > 1 and out[0][0] == out[-1][0] and out[0][1] == -out[-1][1]:
        out = out[1:-1]
    return out


def _inverse(word):
    return [(g, -e) for g, e in reversed(word)]


def tietze_simplify(presentation, effort_bound=None):
    """Eliminate generators that occur exactly once in some relator.

    Returns the simplified presentation; at most `effort_bound` eliminations.
    """
    effort = effort_bound or DEFAULTS["effort_bound"]
    gens = list(presentation.generators)
    rels = [r for r in (_free_reduce(r) for r in presentation.relators) if r]
    for _ in range(effort):
        found = None
        for i, r in enumerate(rels):
            for k, (g, e) in enumerate(r):
                if sum(1 for h, _ in r if h == g) == 1:
                    found = (i, k)
                    break
            if found:
                break
        if found is None:
            break
        i, k = found
        r = rels.pop(i)
        g, e = r[k]
        rest = r[k + 1:] + r[:k]
        image = _inverse(rest) if e == 1 else rest
        new = []
        for s in rels:
            out = []
            for h, f in s:
                out += (image if f == 1 else _inverse(image)) if h == g else [(h, f)]
            new.append(_free_reduce(out))
        rels = [s for s in new if s]
        gens.remove(g)
        log.debug(f"eliminated {g}, {len(gens)} generators and {len(rels)} relators left")
    return Presentation(gens, rels)


def is_simply_connected(canvas, effort_bound=None, embedding=None):
    """Verdict.YES, NO or UNKNOWN.

    `embedding` is an optional PlanarQP of the same QP whose disk certificate
    proves simple connectivity.
    """
    if not canvas.is_connected():
        return Verdict.NO
    h1 = homology_h1(canvas)
    if not h1.is_trivial:
        log.info(f"H1 = {h1}")
        return Verdict.NO
    if embedding is not None:
        from .planar import validate_planar
        try:
            validate_planar(embedding, canvas.qp.potential)
            return Verdict.YES
        except (EmbeddingMismatch, NotPlanar) as e:
            log.info(f"no planar certificate: {e}")
    if tietze_simplify(pi1_presentation(canvas), effort_bound).is_trivial:
        return Verdict.YES
    log.warning("H1 vanishes but the presentation did not simplify; simple connectivity undecided")
    return Verdict.UNKNOWN
