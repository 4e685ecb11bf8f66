# qpkit.families


"""Constructors for the concrete QP families and Dynkin utilities.

Vertex ids of product constructions are ``"x,y"``. Arrows of
``Q1 ⊗̃ Q2`` are named ``(a,y)``, ``(x,b)`` and ``(a,b)`` after their
factors; arrows reversed in a square product carry a trailing ``*``.
Dynkin diagrams are numbered as in the usual tables: ``D_n`` attaches ``n``
to ``n-2``, ``E_6`` attaches 4 to 3 on the chain 1-2-3-5-6, ``E_7`` attaches
7 to 4 and ``E_8`` attaches 8 to 5.
"""


import math
import re
from fractions import Fraction
import logging
log = logging.getLogger(__name__)

import networkx as nx

from .errors import BadParameter, NotAlternating, IllegalFacePattern, InvariantViolation
from .quiver import Quiver, Arrow, CyclicWord
from .potential import Potential, as_fraction
from .qp import QP
from .planar import planar_qp


### Dynkin quivers


_DYNKIN = re.compile(r"^([ADE])(\d+)$")


def dynkin_diagram(kind):
    """(n, edges) of the Dynkin diagram named like ``"D5"``.

    Raises:
        BadParameter: for an unknown type.
    """
    m = _DYNKIN.match(str(kind).strip())
    if not m:
        raise BadParameter(f"unknown Dynkin type '{kind}'")
    letter, n = m.group(1), int(m.group(2))
    if letter == "A" and n >= 1:
        return n, [(k, k + 1) for k in range(1, n)]
    if letter == "D" and n >= 4:
        return n, [(k, k + 1) for k in range(1, n - 1)] + [(n - 2, n)]
    if letter == "E" and n == 6:
        return n, [(1, 2), (2, 3), (3, 5), (5, 6), (3, 4)]
    if letter == "E" and n in (7, 8):
        branch = 4 if n == 7 else 5
        return n, [(k, k + 1) for k in range(1, n - 1)] + [(branch, n)]
    raise BadParameter(f"no Dynkin diagram {kind}")


def coxeter_number(kind):
    n, _ = dynkin_diagram(kind)
    letter = str(kind).strip()[0]
    if letter == "A":
        return n + 1
    if letter == "D":
        return 2 * (n - 1)
    return {6: 12, 7: 18, 8: 30}[n]


def canonical_involution(kind):
    """ω as a mapping on ``1..n``."""
    n, _ = dynkin_diagram(kind)
    letter = str(kind).strip()[0]
    omega = {i: i for i in range(1, n + 1)}
    if letter == "A":
        omega = {i: n + 1 - i for i in omega}
    elif letter == "D" and n % 2:
        omega[n - 1], omega[n] = n, n - 1
    elif letter == "E" and n == 6:
        omega.update({1: 6, 6: 1, 2: 5, 5: 2})
    return omega


class DynkinQuiver(object):
    """A Dynkin diagram with an orientation.

    Args:
        kind (str): ``"A3"``, ``"D4"``, ``"E6"`` ...
        arrows (list): ``(src, tgt)`` pairs, one per diagram edge; defaults to
            the alternating orientation with vertex 1 a source.
    """

    def __init__(self, kind, arrows=None):
        self.kind = str(kind).strip()
        self.n, self.edges = dynkin_diagram(self.kind)
        if arrows is None:
            arrows = _alternating(self.n, self.edges)
        arrows = [(int(s), int(t)) for s, t in arrows]
        if sorted(tuple(sorted(a)) for a in arrows) != sorted(self.edges):
            raise BadParameter(f"arrows {arrows} do not orient the edges of {self.kind}")
        order = {tuple(sorted(e)): k for k, e in enumerate(self.edges)}
        self.arrows = sorted(arrows, key=lambda a: order[tuple(sorted(a))])

    def __str__(self):
        return self.kind

    def __repr__(self):
        return f"DynkinQuiver({self.kind}, {self.arrows})"

    @property
    def quiver(self):
        """Vertices ``"1".."n"``, the arrow on the k-th edge is ``a<k>``."""
        return Quiver([str(i) for i in range(1, self.n + 1)],
                      [Arrow(f"a{k}", str(s), str(t)) for k, (s, t) in enumerate(self.arrows, 1)])

    def coxeter_number(self):
        return coxeter_number(self.kind)

    def involution(self):
        return canonical_involution(self.kind)

    def is_stable(self):
        return is_stable(self)

    def is_alternating(self):
        sources = {s for s, _ in self.arrows}
        return not sources & {t for _, t in self.arrows}


def _alternating(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(1, n + 1))
    g.add_edges_from(edges)
    depth = nx.single_source_shortest_path_length(g, 1)
    return [(u, v) if depth[u] % 2 == 0 else (v, u) for u, v in edges]


def alternating_orientation(kind):
    """Every vertex a sink or a source; sources at even distance from vertex 1."""
    return DynkinQuiver(kind)


def linear_orientation(kind):
    _, edges = dynkin_diagram(kind)
    return DynkinQuiver(kind, edges)


def is_stable(dq):
    """True iff ω maps the arrows of `dq` onto themselves."""
    omega = dq.involution()
    arrows = set(dq.arrows)
    return {(omega[s], omega[t]) for s, t in arrows} == arrows


def parse_dynkin(text):
    """``"A3"`` (alternating), ``"A3:linear"`` or ``"A3:1>2,3>2"``."""
    kind, _, orientation = str(text).partition(":")
    if not orientation or orientation == "alternating":
        return DynkinQuiver(kind)
    if orientation == "linear":
        return linear_orientation(kind)
    try:
        arrows = [tuple(int(x) for x in part.split(">")) for part in orientation.split(",")]
    except ValueError:
        raise BadParameter(f"bad orientation '{orientation}'") from None
    if any(len(a) != 2 for a in arrows):
        raise BadParameter(f"bad orientation '{orientation}'")
    return DynkinQuiver(kind, arrows)


def _as_quiver(q):
    return q.quiver if isinstance(q, DynkinQuiver) else q


def pair(x, y):
    return f"{x},{y}"


def product_involution(q1, q2):
    """ω₁ × ω₂ on the vertices ``"x,y"`` of a product."""
    w1, w2 = q1.involution(), q2.involution()
    return {pair(x, y): pair(w1[x], w2[y]) for x in range(1, q1.n + 1) for y in range(1, q2.n + 1)}


### small fixtures


def example_e1():
    """W = abe + bcd on four vertices; five cuts, three of them algebraic."""
    quiver = Quiver("1234", [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4"),
                             ("d", "4", "2"), ("e", "3", "1")])
    return QP(quiver, Potential({CyclicWord.of("abe"): 1, CyclicWord.of("bcd"): 1}), name="E1")


def example_e2():
    """W = abc + abd; the cut {c, d} breaks minimality."""
    quiver = Quiver("123", [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1"), ("d", "3", "1")])
    return QP(quiver, Potential({CyclicWord.of("abc"): 1, CyclicWord.of("abd"): 1}), name="E2")


def covering_example():
    """(quiver, cut): 1 ⇉ 2 -> 3 with the lower arrow b cut."""
    quiver = Quiver("123", [("a", "1", "2"), ("b", "1", "2"), ("c", "2", "3")])
    return quiver, frozenset({"b"})


### cycles and polygons


def _mod(i, n):
    return (i - 1) % n + 1


def cycle_qp(n):
    """Q^n: arrows a_i: i -> i-1 around an n-cycle, W = the cycle."""
    if int(n) != n or n < 3:
        raise BadParameter(f"cycle_qp needs n >= 3, got {n}")
    arrows = [Arrow(f"a{i}", str(i), str(_mod(i - 1, n))) for i in range(1, n + 1)]
    word = [f"a{_mod(n - k, n)}" for k in range(n)]
    return QP(Quiver(range(1, n + 1), arrows), Potential({CyclicWord.of(word): 1}), name=f"Q{n}")


def tilde_cycle_qp(n):
    """Q̃^n for even n: b_i: i -> i+1, a_i: i -> i-2 for odd i.

    W = (a-cycle) - Σ a_i b_(i-2) b_(i-1).
    """
    if int(n) != n or n < 4 or n % 2:
        raise BadParameter(f"tilde_cycle_qp needs an even n >= 4, got {n}")
    arrows = [Arrow(f"b{i}", str(i), str(_mod(i + 1, n))) for i in range(1, n + 1)]
    odd = list(range(1, n + 1, 2))
    arrows += [Arrow(f"a{i}", str(i), str(_mod(i - 2, n))) for i in odd]
    terms = {CyclicWord.of([f"a{_mod(1 - 2 * k, n)}" for k in range(n // 2)]): 1}
    for i in odd:
        terms[CyclicWord.of([f"a{i}", f"b{_mod(i - 2, n)}", f"b{_mod(i - 1, n)}"])] = -1
    return QP(Quiver(range(1, n + 1), arrows), Potential(terms), name=f"Q~{n}")


def ngon_qp(n, tilde=False):
    """Q^n or Q̃^n drawn as a convex polygon, as a PlanarQP.

    The potential of the planar Q̃^n has all coefficients 1; it is
    isomorphic to :py:func:`tilde_cycle_qp` after rescaling the odd b_i.
    """
    qp = tilde_cycle_qp(n) if tilde else cycle_qp(n)
    v = lambda i: str(_mod(i, n))
    if not tilde:
        rotation = {v(i): [(f"a{i}", True), (f"a{_mod(i + 1, n)}", False)] for i in range(1, n + 1)}
        return planar_qp(qp.quiver, rotation=rotation, outer=("a2", True), name=f"{qp.name} (planar)")
    rotation = {}
    for i in range(1, n + 1):
        if i % 2:
            rotation[v(i)] = [(f"b{i}", True), (f"a{_mod(i + 2, n)}", False),
                              (f"a{i}", True), (f"b{_mod(i - 1, n)}", False)]
        else:
            rotation[v(i)] = [(f"b{i}", True), (f"b{i - 1}", False)]
    return planar_qp(qp.quiver, rotation=rotation, outer=("b1", False), name=f"{qp.name} (planar)")


### tubular


def tubular_2222(lam=2):
    """The selfinjective QP of the tubular algebra of type (2,2,2,2).

    Vertex 0 on top, 1..4 in the middle, 5 at the bottom; e, f: 5 -> 0.
    """
    lam = as_fraction(lam)
    if lam in (0, 1):
        raise BadParameter(f"λ must avoid 0 and 1, got {lam}")
    arrows = [Arrow(x, "0", str(k)) for k, x in enumerate("abcd", 1)]
    arrows += [Arrow(x + "'", str(k), "5") for k, x in enumerate("abcd", 1)]
    arrows += [Arrow("e", "5", "0"), Arrow("f", "5", "0")]
    coef = {("a", "e"): 1, ("b", "e"): 1, ("c", "e"): 1, ("a", "f"): 1, ("b", "f"): lam, ("d", "f"): 1}
    terms = {CyclicWord.of((x, x + "'", y)): c for (x, y), c in coef.items()}
    return QP(Quiver(range(6), arrows), Potential(terms), name=f"tubular({lam})")


def tubular_2222_mutated(lam=2):
    """The presentation reached by mutating :py:func:`tubular_2222` at vertex 1.

    Uses λ' = λ / (λ - 1); a: 1 -> 0 and a': 5 -> 1.
    """
    lam = as_fraction(lam)
    if lam in (0, 1):
        raise BadParameter(f"λ must avoid 0 and 1, got {lam}")
    mu = lam / (lam - 1)
    arrows = [Arrow("a", "1", "0"), Arrow("a'", "5", "1"), Arrow("e", "5", "0")]
    arrows += [Arrow(x, "0", str(k)) for k, x in enumerate("bcd", 2)]
    arrows += [Arrow(x + "'", str(k), "5") for k, x in enumerate("bcd", 2)]
    terms = {CyclicWord.of((x, x + "'", "e")): 1 for x in "bcd"}
    terms[CyclicWord.of(("b", "b'", "a'", "a"))] = mu
    terms[CyclicWord.of(("d", "d'", "a'", "a"))] = 1
    return QP(Quiver(range(6), arrows), Potential(terms), name=f"tubular'({mu})")


### products of Dynkin quivers


def tensor_qp(q1, q2):
    """(Q1 ⊗̃ Q2, W) with W = Σ (s(a),b)(a,t(b))(a,b) - (a,s(b))(t(a),b)(a,b).

    ``(a,b)`` runs from ``(t(a),t(b))`` to ``(s(a),s(b))``; the diagonal
    arrows form the cut recorded on the result.
    """
    Q1, Q2 = _as_quiver(q1), _as_quiver(q2)
    if not (Q1.is_acyclic() and Q2.is_acyclic()):
        raise BadParameter("tensor_qp needs quivers without oriented cycles")
    vertices = [pair(x, y) for x in Q1.vertices for y in Q2.vertices]
    arrows, cut, terms = [], [], {}
    for x in Q1.vertices:
        for b in Q2.arrows.values():
            arrows.append(Arrow(f"({x},{b.id})", pair(x, b.src), pair(x, b.tgt)))
    for a in Q1.arrows.values():
        for y in Q2.vertices:
            arrows.append(Arrow(f"({a.id},{y})", pair(a.src, y), pair(a.tgt, y)))
    for a in Q1.arrows.values():
        for b in Q2.arrows.values():
            ab = f"({a.id},{b.id})"
            arrows.append(Arrow(ab, pair(a.tgt, b.tgt), pair(a.src, b.src)))
            cut.append(ab)
            terms[CyclicWord.of((f"({a.src},{b.id})", f"({a.id},{b.tgt})", ab))] = 1
            terms[CyclicWord.of((f"({a.id},{b.src})", f"({a.tgt},{b.id})", ab))] = -1
    return QP(Quiver(vertices, arrows), Potential(terms), name=f"tensor({q1},{q2})", cut=cut)


def square_product_qp(q1, q2, planar=False):
    """(Q1 □ Q2, W□) for alternating quivers.

    Arrows of Q1 ⊗ Q2 touching Y1 × X2 (sinks of Q1 times sources of Q2) are
    reversed; W□ is the sum of the cycles ``(y,b)* (a,x')* (x,b) (a,y')``.
    With `planar` and type A factors the result is a PlanarQP on the grid.

    Raises:
        NotAlternating: a factor has a vertex that is neither sink nor source.
    """
    Q1, Q2 = _as_quiver(q1), _as_quiver(q2)
    for q, Q in ((q1, Q1), (q2, Q2)):
        mixed = [v for v in Q.vertices if Q.arrows_from(v) and Q.arrows_to(v)]
        if mixed:
            raise NotAlternating(f"{q} is not alternating at {mixed}")
    sinks1 = {v for v in Q1.vertices if not Q1.arrows_from(v)}
    sources2 = {v for v in Q2.vertices if not Q2.arrows_to(v)}
    flipped = {pair(x, y) for x in sinks1 for y in sources2}

    def arrow(name, s, t):
        if s in flipped or t in flipped:
            return Arrow(name + "*", t, s)
        return Arrow(name, s, t)

    vertices = [pair(x, y) for x in Q1.vertices for y in Q2.vertices]
    arrows = [arrow(f"({x},{b.id})", pair(x, b.src), pair(x, b.tgt))
              for x in Q1.vertices for b in Q2.arrows.values()]
    arrows += [arrow(f"({a.id},{y})", pair(a.src, y), pair(a.tgt, y))
               for a in Q1.arrows.values() for y in Q2.vertices]
    terms = {}
    for a in Q1.arrows.values():
        for b in Q2.arrows.values():
            word = (f"({a.tgt},{b.id})*", f"({a.id},{b.src})*", f"({a.src},{b.id})", f"({a.id},{b.tgt})")
            terms[CyclicWord.of(word)] = 1
    qp = QP(Quiver(vertices, arrows), Potential(terms), name=f"square({q1},{q2})")
    if not planar:
        return qp
    if not all(isinstance(q, DynkinQuiver) and q.kind.startswith("A") for q in (q1, q2)):
        raise BadParameter("planar square products need type A factors")
    coords = {v: tuple(int(x) for x in v.split(",")) for v in vertices}
    pqp = planar_qp(qp.quiver, coords=coords, name=qp.name)
    if pqp.qp.potential != qp.potential:
        raise InvariantViolation(f"faces of {qp.name} differ from W□")
    return pqp


def rescale_arrows(qp, factors):
    """The QP with each arrow ``a`` replaced by ``factors[a] * a``."""
    terms = {}
    for w, c in qp.potential.terms.items():
        for a in w.arrows:
            c *= as_fraction(factors.get(a, 1))
        terms[w] = c
    return qp.with_potential(Potential(terms))


### triangles


#: f_1, f_2, f_3
STEPS = ((-1, 1, 0), (0, -1, 1), (1, 0, -1))


def _triangle_vertex(x, s):
    return ("" if s <= 10 else ",").join(str(c) for c in x)


def triangle_qp(s):
    """(Q^(s), ε^(s)): vertices x ∈ ℤ³≥0 with x1 + x2 + x3 = s - 1, arrows x -> x + f_i.

    Arrow ids are ``"<x>><x+f_i>"``; the arrows of type i form the cut
    :py:func:`triangle_cut`.
    """
    if int(s) != s or s < 2:
        raise BadParameter(f"triangle_qp needs s >= 2, got {s}")
    points = [(x1, x2, s - 1 - x1 - x2) for x1 in range(s) for x2 in range(s - x1)]
    name = {x: _triangle_vertex(x, s) for x in points}
    present = set(points)
    arrows = []
    for x in points:
        for f in STEPS:
            y = tuple(a + b for a, b in zip(x, f))
            if y in present:
                arrows.append(Arrow(f"{name[x]}>{name[y]}", name[x], name[y]))
    coords = {name[x]: (x[1] + 2 * x[2], x[1]) for x in points}
    return planar_qp(Quiver([name[x] for x in points], arrows), coords=coords, name=f"triangle({s})")


def triangle_cut(s, i):
    """The arrows ``x -> x + f_i`` of Q^(s)."""
    if i not in (1, 2, 3):
        raise BadParameter(f"arrow type must be 1, 2 or 3, got {i}")
    f = STEPS[i - 1]
    points = [(x1, x2, s - 1 - x1 - x2) for x1 in range(s) for x2 in range(s - x1)]
    present = set(points)
    cut = set()
    for x in points:
        y = tuple(a + b for a, b in zip(x, f))
        if y in present:
            cut.add(f"{_triangle_vertex(x, s)}>{_triangle_vertex(y, s)}")
    return frozenset(cut)


### square shaped


#: arrows of the unit square a=(i,j), b=(i+1,j), c=(i,j+1), d=(i+1,j+1)
PATTERNS = {
    "s": (("a", "c"), ("c", "d"), ("d", "b"), ("b", "a")),
    "a": (("a", "c"), ("c", "b"), ("b", "a"), ("b", "d"), ("d", "c")),
    "d": (("c", "a"), ("d", "c"), ("d", "b"), ("b", "a"), ("a", "d")),
}


def _pattern(code):
    code = str(code).strip()
    base, opposite = code.rstrip("*"), code.endswith("*")
    if base not in PATTERNS or len(code) - len(base) > 1:
        raise IllegalFacePattern(f"unknown unit square pattern '{code}'")
    return [(t, s) if opposite else (s, t) for s, t in PATTERNS[base]]


def parse_face_choices(text, s=None):
    """``"d,a*,s*;s,s*,a;d*,a,s"``: rows bottom to top, squares left to right."""
    rows = [r for r in str(text).split(";") if r.strip()]
    faces = {}
    for j, row in enumerate(rows, 1):
        for i, code in enumerate(row.split(","), 1):
            faces[(i, j)] = code.strip()
    if s is None:
        s = len(rows) + 1
    return s, faces


def checkerboard_faces(s):
    """Plain squares with alternating orientation; gives A_s □ A_s."""
    return {(i, j): "s" if (i + j) % 2 == 0 else "s*" for i in range(1, s) for j in range(1, s)}


def square_shaped_qp(s, faces):
    """The square shaped planar QP on ``{1..s}²`` with the given unit squares.

    `faces` maps the lower left corner ``(i, j)`` of each unit square to a
    pattern code, ``"s"``, ``"a"``, ``"d"`` or its opposite ``"s*"``, ``"a*"``,
    ``"d*"``.

    Raises:
        IllegalFacePattern: a square is missing, unknown, or two squares
            orient a shared side differently.
    """
    if int(s) != s or s < 2:
        raise BadParameter(f"square_shaped_qp needs s >= 2, got {s}")
    faces = {(int(i), int(j)): code for (i, j), code in dict(faces).items()}
    expected = {(i, j) for i in range(1, s) for j in range(1, s)}
    if set(faces) != expected:
        missing, extra = sorted(expected - set(faces)), sorted(set(faces) - expected)
        raise IllegalFacePattern(f"unit squares missing {missing}, unexpected {extra}")
    edges = {}
    for (i, j), code in sorted(faces.items()):
        corner = {"a": (i, j), "b": (i + 1, j), "c": (i, j + 1), "d": (i + 1, j + 1)}
        for u, v in _pattern(code):
            p, q = corner[u], corner[v]
            key = frozenset((p, q))
            if edges.get(key, (p, q)) != (p, q):
                raise IllegalFacePattern(f"square {(i, j)} ({code}) wants {pair(*p)} -> {pair(*q)}, a neighbour has the opposite")
            edges[key] = (p, q)
    vertices = [pair(i, j) for j in range(1, s + 1) for i in range(1, s + 1)]
    arrows = sorted(Arrow(f"{pair(*p)}>{pair(*q)}", pair(*p), pair(*q)) for p, q in edges.values())
    coords = {pair(i, j): (i, j) for j in range(1, s + 1) for i in range(1, s + 1)}
    return planar_qp(Quiver(vertices, arrows), coords=coords, name=f"square-shaped({s})")


def square_sigma(s):
    """σ(i, j) = (s - i + 1, s - j + 1)."""
    return {pair(i, j): pair(s + 1 - i, s + 1 - j) for i in range(1, s + 1) for j in range(1, s + 1)}


def is_symmetric_square_shaped(pqp):
    """True iff some automorphism of the QP acts on vertices as σ."""
    from .isomorphism import qp_automorphisms

    s = math.isqrt(len(pqp.quiver.vertices))
    sigma = square_sigma(s)
    if set(sigma) != set(pqp.quiver.vertices):
        raise BadParameter(f"{pqp.name} is not on the {s}x{s} grid")
    return any(vmap == sigma for vmap in qp_automorphisms(pqp.qp))


#: the 4x4 square shaped example with five diagonal arrows
EXAMPLE_FACES = {
    (1, 1): "d", (2, 1): "a*", (3, 1): "s*",
    (1, 2): "s", (2, 2): "s*", (3, 2): "a",
    (1, 3): "d*", (2, 3): "a", (3, 3): "s",
}


### registry used by `qpkit family`


def _int(x):
    try:
        return int(x)
    except (TypeError, ValueError):
        raise BadParameter(f"expected an integer, got {x!r}") from None


def _rational(x):
    try:
        return Fraction(str(x))
    except ValueError:
        raise BadParameter(f"expected a rational number, got {x!r}") from None


FAMILIES = {
    "e1": (lambda: example_e1(), "the QP W = abe + bcd"),
    "e2": (lambda: example_e2(), "the QP W = abc + abd"),
    "cycle": (lambda n: cycle_qp(_int(n)), "Q^n, n >= 3"),
    "tilde-cycle": (lambda n: tilde_cycle_qp(_int(n)), "Q~^n, n even"),
    "ngon": (lambda n, tilde="": ngon_qp(_int(n), tilde == "tilde"), "planar Q^n, add 'tilde' for Q~^n"),
    "tubular": (lambda lam="2": tubular_2222(_rational(lam)), "tubular (2,2,2,2), λ not 0 or 1"),
    "tensor": (lambda a, b: tensor_qp(parse_dynkin(a), parse_dynkin(b)), "Dynkin types like A3 D4:linear"),
    "square": (lambda a, b: square_product_qp(parse_dynkin(a), parse_dynkin(b),
                                              planar=a[0] == b[0] == "A"), "alternating Dynkin types"),
    "triangle": (lambda s: triangle_qp(_int(s)), "Q^(s), s >= 2"),
    "square-shaped": (lambda choices: square_shaped_qp(*parse_face_choices(choices)),
                      "unit squares 'd,a*,s*;s,s*,a;...' bottom row first"),
    "checkerboard": (lambda s: square_shaped_qp(_int(s), checkerboard_faces(_int(s))), "A_s □ A_s on the grid"),
}


def build_family(name, params=()):
    """Build a family member from CLI style string parameters."""
    if name not in FAMILIES:
        raise BadParameter(f"unknown family '{name}', choose from {sorted(FAMILIES)}")
    factory, usage = FAMILIES[name]
    try:
        return factory(*params)
    except TypeError:
        raise BadParameter(f"bad parameters {list(params)} for {name}: {usage}") from None
