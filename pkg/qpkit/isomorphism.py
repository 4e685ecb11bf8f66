# qpkit.isomorphism


"""Canonical forms, automorphisms and isomorphisms of QPs.

Colour refinement runs jointly on vertices and arrows: a vertex is coloured
by the colours of its incident arrows, an arrow by its end vertices and by
the colour words of the potential terms read from each of its occurrences.
Individualizing one member of the first non-singleton cell and refining again
explores a search tree whose leaves are discrete colourings. Each leaf gives
an encoding of the QP in colour order; the least encoding is the canonical
form, and two leaves with the same encoding differ by an automorphism.
"""


from fractions import Fraction
import hashlib
import logging
log = logging.getLogger(__name__)

import sympy

from .quiver import CyclicWord, rotations
from . import linalg


class _Structure(object):
    """Index based view of a QP used by the refinement."""

    def __init__(self, qp, support=False):
        self.qp = qp
        self.vertices = list(qp.quiver.vertices)
        self.arrows = qp.quiver.arrow_ids()
        vi = {v: k for k, v in enumerate(self.vertices)}
        ai = {a: k for k, a in enumerate(self.arrows)}
        self.src = [vi[qp.quiver.src(a)] for a in self.arrows]
        self.tgt = [vi[qp.quiver.tgt(a)] for a in self.arrows]
        self.out = [[] for _ in self.vertices]
        self.inc = [[] for _ in self.vertices]
        for k in range(len(self.arrows)):
            self.out[self.src[k]].append(k)
            self.inc[self.tgt[k]].append(k)
        self.terms = [(tuple(ai[a] for a in w.arrows), Fraction(1) if support else c)
                      for w, c in qp.potential.sorted_terms()]
        self.occ = [[] for _ in self.arrows]
        for t, (word, key) in enumerate(self.terms):
            for i, a in enumerate(word):
                self.occ[a].append((key, word[i:] + word[:i]))

    @property
    def n(self):
        return len(self.vertices)

    @property
    def m(self):
        return len(self.arrows)


def _rank(sigs):
    order = {s: k for k, s in enumerate(sorted(set(sigs)))}
    return [order[s] for s in sigs]


def _refine(s, vcol, acol):
    while True:
        vsig = [(vcol[v], tuple(sorted(acol[a] for a in s.out[v])), tuple(sorted(acol[a] for a in s.inc[v])))
                for v in range(s.n)]
        asig = [(acol[a], vcol[s.src[a]], vcol[s.tgt[a]],
                 tuple(sorted((key, tuple(acol[x] for x in rot)) for key, rot in s.occ[a])))
                for a in range(s.m)]
        nv, na = _rank(vsig), _rank(asig)
        if len(set(nv)) == len(set(vcol)) and len(set(na)) == len(set(acol)):
            return nv, na
        vcol, acol = nv, na


def _target_cell(colours):
    cells = {}
    for x, c in enumerate(colours):
        cells.setdefault(c, []).append(x)
    for c in sorted(cells):
        if len(cells[c]) > 1:
            return cells[c]
    return None


def _leaves(s, marks=None):
    """Discrete colourings at the leaves of the individualization tree."""
    stack = [_refine(s, [0] * s.n, marks or [0] * s.m)]
    while stack:
        vcol, acol = stack.pop()
        cell = _target_cell(vcol)
        if cell is not None:
            for x in reversed(cell):
                v2 = [2 * c for c in vcol]
                v2[x] += 1
                stack.append(_refine(s, v2, [2 * c for c in acol]))
            continue
        cell = _target_cell(acol)
        if cell is not None:
            for x in reversed(cell):
                a2 = [2 * c for c in acol]
                a2[x] += 1
                stack.append(_refine(s, [2 * c for c in vcol], a2))
            continue
        yield vcol, acol


def _encode(s, vcol, acol):
    arrows = sorted(range(s.m), key=lambda a: acol[a])
    edges = tuple((vcol[s.src[a]], vcol[s.tgt[a]]) for a in arrows)
    terms = tuple(sorted((min(rotations(tuple(acol[x] for x in word))), key) for word, key in s.terms))
    return (s.n, s.m, edges, terms)


def _min_leaves(s, marks=None):
    best, leaves = None, []
    for vcol, acol in _leaves(s, marks):
        enc = _encode(s, vcol, acol)
        if best is None or enc < best:
            best, leaves = enc, [(vcol, acol)]
        elif enc == best:
            leaves.append((vcol, acol))
    return best, leaves


def _orders(s, leaf):
    vcol, acol = leaf
    vorder = [None] * s.n
    aorder = [None] * s.m
    for v, c in enumerate(vcol):
        vorder[c] = s.vertices[v]
    for a, c in enumerate(acol):
        aorder[c] = s.arrows[a]
    return vorder, aorder


def qp_canonical_form(qp):
    """Bytes equal for two QPs iff they are isomorphic with equal coefficients."""
    best, _ = _min_leaves(_Structure(qp))
    return repr(best).encode()


def cut_canonical_form(qp, cut):
    """Bytes equal for two cuts iff an automorphism of Q preserving the terms of W maps one onto the other.

    Coefficients are ignored. Cut arrows start in their own colour class and
    keep the top colours through refinement.
    """
    s = _Structure(qp, support=True)
    marks = [1 if a in cut else 0 for a in s.arrows]
    best, _ = _min_leaves(s, marks)
    return repr((best, sum(marks))).encode()


def qp_signature(qp, length=12):
    """Short hex digest of the canonical form."""
    return hashlib.sha1(qp_canonical_form(qp)).hexdigest()[:length]


def qp_automorphisms(qp, arrows=False):
    """Automorphisms as vertex maps (or ``(vertex map, arrow map)`` pairs)."""
    s = _Structure(qp)
    _, leaves = _min_leaves(s)
    v0, a0 = _orders(s, leaves[0])
    found = []
    for leaf in leaves:
        v1, a1 = _orders(s, leaf)
        vmap, amap = dict(zip(v0, v1)), dict(zip(a0, a1))
        item = (vmap, amap) if arrows else vmap
        if item not in found:
            found.append(item)
    return found


def _rescaling_exists(qp1, qp2, amap):
    """True iff rescaling arrows of qp1 by nonzero reals turns coefficients into those of qp2 under `amap`."""
    terms = qp1.potential.sorted_terms()
    arrows = qp1.quiver.arrow_ids()
    col = {a: k for k, a in enumerate(arrows)}
    incidence, ratios = {}, []
    for t, (w, c) in enumerate(terms):
        for a in w.arrows:
            incidence[(t, col[a])] = incidence.get((t, col[a]), 0) + 1
        image = CyclicWord.of(tuple(amap[a] for a in w.arrows))
        ratios.append(qp2.potential.terms[image] / c)
    shape = (len(terms), len(arrows))
    signs = {t: 1 for t, r in enumerate(ratios) if r < 0}
    parity = {k: v % 2 for k, v in incidence.items() if v % 2}
    if not linalg.in_column_space(parity, shape, signs, linalg.GF2):
        return False
    valuations = {}
    for t, r in enumerate(ratios):
        for sign, n in ((1, abs(r.numerator)), (-1, r.denominator)):
            for p, e in sympy.factorint(n).items():
                vec = valuations.setdefault(p, {})
                vec[t] = vec.get(t, 0) + sign * e
    return all(linalg.in_column_space(incidence, shape, vec) for p, vec in sorted(valuations.items()))


def find_isomorphism(qp1, qp2, rescale=False):
    """``(vertex map, arrow map)`` from qp1 to qp2, or None.

    With `rescale`, coefficients only have to agree after rescaling each
    arrow by a nonzero real number.
    """
    s1, s2 = _Structure(qp1, support=rescale), _Structure(qp2, support=rescale)
    if (s1.n, s1.m, len(s1.terms)) != (s2.n, s2.m, len(s2.terms)):
        return None
    best1, leaves1 = _min_leaves(s1)
    best2, leaves2 = _min_leaves(s2)
    if best1 != best2:
        return None
    v2, a2 = _orders(s2, leaves2[0])
    for leaf in leaves1:
        v1, a1 = _orders(s1, leaf)
        vmap, amap = dict(zip(v1, v2)), dict(zip(a1, a2))
        if not rescale or _rescaling_exists(qp1, qp2, amap):
            return vmap, amap
    return None


def qp_isomorphic(qp1, qp2, rescale=False):
    if not rescale:
        return qp_canonical_form(qp1) == qp_canonical_form(qp2)
    return find_isomorphism(qp1, qp2, rescale=True) is not None


def canonical_labels(qp):
    """(vertex map, arrow map) renaming a QP into canonical order ``1..n`` and ``x1..xm``."""
    s = _Structure(qp)
    _, leaves = _min_leaves(s)
    vorder, aorder = _orders(s, leaves[0])
    return ({v: str(k) for k, v in enumerate(vorder, 1)},
            {a: f"x{k}" for k, a in enumerate(aorder, 1)})
