# qpkit.quiver


"""Quivers, paths and cyclic words.

Paths compose left to right: ``ab`` means first ``a`` and then ``b``, so the
target of ``a`` is the source of ``b``. Vertex and arrow ids are strings.
"""


from dataclasses import dataclass, field
import logging
log = logging.getLogger(__name__)

import networkx as nx

from .errors import DanglingArrow, MalformedQP, NonCyclicTerm


@dataclass(frozen=True, order=True)
class Arrow:
    id: str
    src: str
    tgt: str


@dataclass(frozen=True)
class Path:
    """A path in a quiver; ``arrows == ()`` is the trivial path at ``src``."""
    src: str
    tgt: str
    arrows: tuple = ()

    def __len__(self):
        return len(self.arrows)

    def __str__(self):
        if not self.arrows:
            return f"e[{self.src}]"
        return "*".join(self.arrows)

    @property
    def is_trivial(self):
        return not self.arrows

    def __mul__(self, other):
        """Concatenate, or None if the paths do not compose."""
        if self.tgt != other.src:
            return None
        return Path(self.src, other.tgt, self.arrows + other.arrows)


def rotations(word):
    return [word[i:] + word[:i] for i in range(len(word))]


@dataclass(frozen=True, order=True)
class CyclicWord:
    """A cycle up to rotation, stored in its lexicographically minimal rotation."""
    arrows: tuple

    @classmethod
    def of(cls, arrows):
        arrows = tuple(arrows)
        if not arrows:
            raise NonCyclicTerm("a cycle needs at least one arrow")
        return cls(min(rotations(arrows)))

    def __len__(self):
        return len(self.arrows)

    def __str__(self):
        return "*".join(self.arrows)

    def rotations(self):
        return rotations(self.arrows)

    def count(self, arrow):
        return self.arrows.count(arrow)


class Quiver(object):
    """A finite quiver; loops and parallel arrows are allowed.

    Args:
        vertices (iterable): vertex ids, converted to strings.
        arrows (iterable): ``Arrow`` objects or ``(id, src, tgt)`` triples.
    """

    def __init__(self, vertices, arrows=()):
        self.vertices = tuple(dict.fromkeys(str(v) for v in vertices))
        self.arrows = {}
        known = set(self.vertices)
        for a in arrows:
            a = a if isinstance(a, Arrow) else Arrow(str(a[0]), str(a[1]), str(a[2]))
            if a.id in self.arrows:
                raise MalformedQP(f"duplicate arrow id '{a.id}'")
            if a.src not in known or a.tgt not in known:
                raise DanglingArrow(f"arrow '{a.id}' references unknown vertex ({a.src} -> {a.tgt})")
            self.arrows[a.id] = a
        self._out = {v: [] for v in self.vertices}
        self._in = {v: [] for v in self.vertices}
        for a in sorted(self.arrows.values()):
            self._out[a.src].append(a.id)
            self._in[a.tgt].append(a.id)

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    def __eq__(self, other):
        return (isinstance(other, Quiver) and set(self.vertices) == set(other.vertices)
                and self.arrows == other.arrows)

    def __hash__(self):
        return hash((frozenset(self.vertices), frozenset(self.arrows.values())))

    def arrow(self, a):
        try:
            return self.arrows[a]
        except KeyError:
            raise DanglingArrow(f"unknown arrow '{a}'") from None

    def src(self, a):
        return self.arrow(a).src

    def tgt(self, a):
        return self.arrow(a).tgt

    def arrows_from(self, v):
        return list(self._out[v])

    def arrows_to(self, v):
        return list(self._in[v])

    def arrow_ids(self):
        return sorted(self.arrows)

    def incident(self, v):
        return sorted(set(self._out[v]) | set(self._in[v]))

    def trivial(self, v):
        return Path(v, v, ())

    def path(self, arrows):
        """Build a path from arrow ids, checking composability."""
        arrows = tuple(arrows)
        if not arrows:
            raise MalformedQP("use Quiver.trivial for trivial paths")
        for x, y in zip(arrows, arrows[1:]):
            if self.tgt(x) != self.src(y):
                raise NonCyclicTerm(f"arrows '{x}' and '{y}' do not compose")
        return Path(self.src(arrows[0]), self.tgt(arrows[-1]), arrows)

    def cycle(self, arrows):
        """Build a cyclic word, checking that the path closes up."""
        p = self.path(arrows)
        if p.src != p.tgt:
            raise NonCyclicTerm(f"path {p} is not closed")
        return CyclicWord.of(p.arrows)

    def without(self, arrows):
        """The subquiver with the same vertices and the given arrows removed."""
        drop = set(arrows)
        return Quiver(self.vertices, [a for a in self.arrows.values() if a.id not in drop])

    def opposite(self):
        return Quiver(self.vertices, [Arrow(a.id, a.tgt, a.src) for a in self.arrows.values()])

    def relabel(self, vmap=None, amap=None):
        vmap = vmap or {}
        amap = amap or {}
        v = lambda x: vmap.get(x, x)
        return Quiver([v(x) for x in self.vertices],
                      [Arrow(amap.get(a.id, a.id), v(a.src), v(a.tgt)) for a in self.arrows.values()])

    def digraph(self):
        """The quiver as a networkx MultiDiGraph keyed by arrow id."""
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        for a in self.arrows.values():
            g.add_edge(a.src, a.tgt, key=a.id)
        return g

    def graph(self):
        """The underlying undirected multigraph."""
        return self.digraph().to_undirected(as_view=False)

    def components(self):
        """Vertex sets of the connected components, in vertex order."""
        g = self.graph()
        order = {v: i for i, v in enumerate(self.vertices)}
        comps = [sorted(c, key=order.get) for c in nx.connected_components(g)]
        return sorted(comps, key=lambda c: order[c[0]])

    def is_connected(self):
        return len(self.components()) <= 1

    def is_acyclic(self):
        return nx.is_directed_acyclic_graph(self.digraph())

    def two_cycles_at(self, v):
        """Pairs (a, b) with a: v -> w and b: w -> v; loops count as (a, a)."""
        pairs = []
        for a in self._out[v]:
            w = self.tgt(a)
            if w == v:
                pairs.append((a, a))
                continue
            pairs += [(a, b) for b in self._out[w] if self.tgt(b) == v]
        return pairs

    def to_dot(self, name="Q"):
        lines = [f"digraph {name} {{"]
        lines += [f'  "{v}";' for v in self.vertices]
        lines += [f'  "{a.src}" -> "{a.tgt}" [label="{a.id}"];' for a in sorted(self.arrows.values())]
        lines.append("}")
        return "\n".join(lines)
