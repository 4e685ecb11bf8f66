# qpkit.algebra


"""Finite dimensional quotients of path algebras.

:py:func:`jacobian_algebra` and :py:func:`truncated_jacobian` complete the
relations into a :py:class:`~qpkit.reduction.ReductionSystem` and enumerate
normal words level by level. Normal words are closed under taking subwords,
so an empty level proves that no longer normal words exist. The proof is
only used when the empty level ``l`` and the longest rule lead ``m`` satisfy
``l + m < D`` for the completed degree ``D``. Otherwise the result is an
:py:class:`Undetermined` value carrying the level sizes seen so far, and the
bound is doubled up to the configured ceiling.
"""


from dataclasses import dataclass, field
import itertools
import logging
log = logging.getLogger(__name__)

from .errors import DegreeExceeded, NotACut
from .quiver import Path
from .potential import AlgebraElement
from .reduction import complete_reduction_system
from . import linalg
from .config import DEFAULTS, default_degree_bound


#: level size above which normal word enumeration gives up
LEVEL_CAP = 20000


@dataclass
class Undetermined:
    """Finite dimensionality could not be certified within the bound."""
    bound: int
    profile: list = field(default_factory=list)
    reason: str = ""

    def __str__(self):
        return f"undetermined at degree bound {self.bound}: {self.reason} (levels {self.profile})"


class FDAlgebra(object):
    """A finite dimensional path algebra quotient with a normal word basis.

    Args:
        quiver (Quiver): the ambient quiver.
        system (ReductionSystem): a certified complete reduction system.
        basis (list): normal paths, shortest first.
    """

    def __init__(self, quiver, system, basis):
        self.quiver = quiver
        self.system = system
        self.basis = sorted(basis, key=lambda p: (len(p), p.arrows, p.src))
        self.index = {p: i for i, p in enumerate(self.basis)}
        self._products = {}

    def __repr__(self):
        return f"FDAlgebra(dim {self.dimension()}, {len(self.quiver.vertices)} vertices)"

    def dimension(self):
        return len(self.basis)

    def paths(self, src=None, tgt=None):
        return [p for p in self.basis if (src is None or p.src == src) and (tgt is None or p.tgt == tgt)]

    def left_projective(self, v):
        """Basis of Λe_v: paths ending at `v`."""
        return self.paths(tgt=v)

    def right_projective(self, v):
        """Basis of e_vΛ: paths starting at `v`."""
        return self.paths(src=v)

    def normal_form(self, x):
        return self.system.normal_form(x)

    def product(self, p, q):
        """Normal form of the product of two basis paths, memoized."""
        key = (p, q)
        if key not in self._products:
            pq = p * q
            self._products[key] = AlgebraElement() if pq is None else self.system.normal_form(AlgebraElement.of(pq))
        return self._products[key]

    def multiply(self, x, y):
        out = AlgebraElement()
        for p, c in x.terms.items():
            for q, d in y.terms.items():
                out = out + self.product(p, q).scale(c * d)
        return out

    def coordinates(self, x):
        """``{basis index: coefficient}`` of an element already in normal form."""
        return {self.index[p]: c for p, c in x.terms.items()}

    def dimension_vector(self):
        """Cartan matrix: entry [i][j] counts basis paths from vertex i to vertex j."""
        order = {v: k for k, v in enumerate(self.quiver.vertices)}
        n = len(order)
        m = [[0] * n for _ in range(n)]
        for p in self.basis:
            m[order[p.src]][order[p.tgt]] += 1
        return m

    def radical_powers(self):
        """Dimensions of J, J^2, ... until the zero space."""
        arrows = [Path(a.src, a.tgt, (a.id,)) for a in sorted(self.quiver.arrows.values())]
        current = [AlgebraElement.of(p) for p in self.basis if len(p) >= 1]
        dims = []
        for _ in range(self.dimension() + 1):
            current = _independent(self, current)
            if not current:
                return dims
            dims.append(len(current))
            current = [self.multiply(x, AlgebraElement.of(a)) for x in current for a in arrows]
        return None

    def loewy_length(self):
        """Smallest m with J^m = 0, or None if the arrow ideal is not nilpotent."""
        dims = self.radical_powers()
        return None if dims is None else len(dims) + 1

    def check_associativity(self, limit=None):
        """True if (pq)r == p(qr) on all (or the first `limit`) composable basis triples."""
        triples = ((p, q, r) for p in self.basis for q in self.paths(src=p.tgt) for r in self.paths(src=q.tgt))
        for p, q, r in itertools.islice(triples, limit):
            left = self.multiply(self.product(p, q), AlgebraElement.of(r))
            right = self.multiply(AlgebraElement.of(p), self.product(q, r))
            if left != right:
                log.error(f"associativity fails on ({p}, {q}, {r})")
                return False
        return True

    def to_dict(self):
        """Basis and sparse multiplication table for export."""
        products = []
        for i, p in enumerate(self.basis):
            for q in self.paths(src=p.tgt):
                for r, c in self.product(p, q).sorted_terms():
                    products.append([i, self.index[q], self.index[r], str(c)])
        return {
            "dimension": self.dimension(),
            "basis": [{"src": p.src, "tgt": p.tgt, "path": list(p.arrows)} for p in self.basis],
            "cartan": self.dimension_vector(),
            "vertices": list(self.quiver.vertices),
            "products": products,
        }


def _independent(alg, elements):
    """A linearly independent subset spanning the same space."""
    vectors = [alg.coordinates(x) for x in elements]
    return [elements[k] for k in linalg.pivot_columns(vectors, alg.dimension())]


def normal_words(system, quiver, max_level, cap=LEVEL_CAP):
    """Normal words grouped by length for lengths 0..max_level.

    Stops early after the first empty level. Returns ``(levels, capped)``.
    """
    arrows = sorted(quiver.arrows.values())
    levels = [[Path(v, v, ()) for v in quiver.vertices]]
    while len(levels) <= max_level and levels[-1]:
        nxt = []
        for p in levels[-1]:
            for a in arrows:
                if a.src != p.tgt:
                    continue
                word = p.arrows + (a.id,)
                if system.is_normal_extension(word):
                    nxt.append(Path(p.src, a.tgt, word))
        levels.append(nxt)
        if len(nxt) > cap:
            return levels, True
    return levels, False


def certify(system, quiver):
    """FDAlgebra if the completed system proves finite dimensionality, else Undetermined."""
    bound = system.complete_degree
    m = system.max_lead_length()
    levels, capped = normal_words(system, quiver, max(bound - m - 1, 0))
    profile = [len(l) for l in levels]
    if capped:
        return Undetermined(bound, profile, f"more than {LEVEL_CAP} normal words of length {len(levels) - 1}")
    empty = next((k for k, l in enumerate(levels) if not l), None)
    if empty is None or empty + m >= bound:
        return Undetermined(bound, profile, "no empty level of normal words below the bound")
    system.certified = True
    return FDAlgebra(quiver, system, [p for l in levels for p in l])


def quotient_algebra(quiver, relations, degree_bound, ceiling=None):
    """The quotient of the path algebra of `quiver` by `relations`.

    Doubles `degree_bound` until certification succeeds or `ceiling` is hit.
    """
    ceiling = max(ceiling or DEFAULTS["degree_ceiling"], degree_bound)
    system = complete_reduction_system(relations, quiver, degree_bound)
    while True:
        result = certify(system, quiver)
        if isinstance(result, FDAlgebra):
            log.info(f"finite dimensional: dim {result.dimension()} (degree bound {system.complete_degree})")
            return result
        if system.complete_degree * 2 > ceiling:
            log.warning(str(result))
            return result
        log.info(f"{result}; raising the bound to {system.complete_degree * 2}")
        system.extend(system.complete_degree * 2)


def jacobian_algebra(qp, degree_bound=None, ceiling=None):
    """P(Q, W) as an FDAlgebra, or Undetermined."""
    bound = max(degree_bound or default_degree_bound(qp), 2)
    gens = [g for g in qp.derivatives().values() if g]
    return quotient_algebra(qp.quiver, gens, bound, ceiling)


def truncated_jacobian(qp, cut, degree_bound=None, ceiling=None):
    """P(Q, W)_C: the cut quiver Q_C modulo the derivatives at cut arrows.

    Raises:
        NotACut: if some potential term does not contain exactly one cut arrow.
    """
    cut = set(cut)
    for w in qp.potential.terms:
        if sum(1 for a in w.arrows if a in cut) != 1:
            raise NotACut(f"cycle {w} meets {sorted(cut)} {sum(1 for a in w.arrows if a in cut)} times")
    sub = qp.quiver.without(cut)
    gens = [qp.derivative(c) for c in sorted(cut)]
    bound = max(degree_bound or default_degree_bound(qp), 2)
    return quotient_algebra(sub, [g for g in gens if g], bound, ceiling)


def dimension_vector(alg):
    return alg.dimension_vector()


def _truncate(terms, n):
    return {p: c for p, c in terms.items() if len(p) <= n}


def _paths_up_to(quiver, n):
    """All paths of length 0..n, by length."""
    arrows = sorted(quiver.arrows.values())
    levels = [[Path(v, v, ()) for v in quiver.vertices]]
    for _ in range(n):
        levels.append([Path(p.src, a.tgt, p.arrows + (a.id,)) for p in levels[-1] for a in arrows if a.src == p.tgt])
    return levels


def min_generation_check(gens, ambient, degree_bound=None):
    """True iff `gens` are linearly independent in I / (JI + IJ).

    Works in the path algebra truncated above degree N. For length
    homogeneous generators N is the largest generator degree. Otherwise N is
    the Loewy length of the quotient algebra, which puts J^(N+1) inside JI.

    Raises:
        DegreeExceeded: if N cannot be determined within `degree_bound`.
    """
    gens = list(gens)
    if not gens:
        return True
    if any(not g for g in gens):
        return False
    homogeneous = all(g.degree() == g.low_degree() for g in gens)
    if homogeneous:
        n = max(g.degree() for g in gens)
    else:
        bound = degree_bound or 4 * len(ambient.vertices) * max(g.degree() for g in gens)
        alg = quotient_algebra(ambient, gens, bound)
        if not isinstance(alg, FDAlgebra):
            raise DegreeExceeded(f"cannot bound the Loewy length of the quotient: {alg}")
        n = alg.loewy_length()
        if n is None:
            raise DegreeExceeded("arrow ideal is not nilpotent in the quotient")
    levels = _paths_up_to(ambient, n)
    column = {p: k for k, p in enumerate(p for l in levels for p in l)}
    entries, rows = {}, 0
    for g in gens:
        for lu in range(n + 1):
            for lv in range(n + 1 - lu):
                if lu + lv == 0 or lu + lv + g.low_degree() > n:
                    continue
                for u in (levels[lu] if lu else [None]):
                    for v in (levels[lv] if lv else [None]):
                        x = g
                        if u is not None:
                            x = AlgebraElement.of(u) * x
                        if v is not None:
                            x = x * AlgebraElement.of(v)
                        terms = _truncate(x.terms, n)
                        if not terms:
                            continue
                        for p, c in terms.items():
                            entries[(rows, column[p])] = c
                        rows += 1
    base = linalg.rank(entries, (rows, len(column)))
    for k, g in enumerate(gens):
        for p, c in _truncate(g.terms, n).items():
            entries[(rows + k, column[p])] = c
    total = linalg.rank(entries, (rows + len(gens), len(column)))
    minimal = total - base == len(gens)
    log.debug(f"minimality: rank {base} -> {total} with {len(gens)} generators")
    return minimal
