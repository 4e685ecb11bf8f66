# qpkit.resolution


"""Minimal projective resolutions of simple left modules.

A submodule of a free module ``P = Λe_u1 ⊕ ... ⊕ Λe_ur`` is stored as a
spanning list of sparse coordinate vectors. Coordinates enumerate pairs
``(summand, basis path ending at u_k)``.
"""


from collections import Counter
import logging
log = logging.getLogger(__name__)

from .potential import AlgebraElement
from .quiver import Path
from . import linalg


class FreeModule(object):
    """``⊕ Λe_u`` over a list of vertices."""

    def __init__(self, alg, vertices):
        self.alg = alg
        self.vertices = list(vertices)
        self.cells = [(k, p) for k, u in enumerate(self.vertices) for p in alg.left_projective(u)]
        self.position = {c: i for i, c in enumerate(self.cells)}

    def __len__(self):
        return len(self.cells)

    def vector(self, k, x):
        """Coordinates of the element `x` of summand `k`."""
        return {self.position[(k, p)]: c for p, c in x.terms.items() if c}

    def left_multiply(self, arrow, vec):
        out = {}
        for i, c in vec.items():
            k, p = self.cells[i]
            for j, d in self.vector(k, self.alg.product(arrow, p)).items():
                out[j] = out.get(j, 0) + c * d
        return {j: c for j, c in out.items() if c}

    def idempotent(self, u, vec):
        """e_u · vec: the terms whose path starts at `u`."""
        return {i: c for i, c in vec.items() if self.cells[i][1].src == u}


def _span(vectors, dim):
    keep = linalg.pivot_columns(vectors, dim)
    return [vectors[k] for k in keep]


def projective_cover(module, vectors):
    """Generators of the top of the submodule spanned by `vectors`.

    Returns ``[(vertex, generator vector)]``: for each vertex u a basis of
    e_u M modulo e_u JM.
    """
    alg = module.alg
    arrows = [Path(a.src, a.tgt, (a.id,)) for a in sorted(alg.quiver.arrows.values())]
    radical = [module.left_multiply(a, v) for v in vectors for a in arrows]
    radical = _span([r for r in radical if r], len(module))
    gens = []
    for u in alg.quiver.vertices:
        local_rad = [module.idempotent(u, r) for r in radical]
        local_rad = [r for r in local_rad if r]
        local = [module.idempotent(u, v) for v in vectors]
        local = [v for v in local if v]
        if not local:
            continue
        picked = linalg.pivot_columns(local_rad + local, len(module))
        gens += [(u, local[k - len(local_rad)]) for k in picked if k >= len(local_rad)]
    return gens


def syzygy(module, vectors):
    """(cover vertices, kernel submodule) of the projective cover of `vectors`."""
    alg = module.alg
    gens = projective_cover(module, vectors)
    cover = FreeModule(alg, [u for u, _ in gens])
    entries = {}
    for col, (k, lam) in enumerate(cover.cells):
        g = gens[k][1]
        image = {}
        for i, c in g.items():
            kk, p = module.cells[i]
            for j, d in module.vector(kk, alg.product(lam, p)).items():
                image[j] = image.get(j, 0) + c * d
        for j, c in image.items():
            if c:
                entries[(j, col)] = c
    kernel = linalg.nullspace(entries, (len(module), len(cover)))
    return cover, kernel


def minimal_resolution(alg, vertex, length):
    """Projective multiplicities of the minimal resolution of the simple at `vertex`.

    Returns a list of ``{vertex: multiplicity}``, one per term P_0, P_1, ...,
    ending at the last nonzero term or after ``length + 1`` terms.
    """
    terms = [{vertex: 1}]
    module = FreeModule(alg, [vertex])
    vectors = [module.vector(0, AlgebraElement.of(p)) for p in alg.left_projective(vertex) if len(p) >= 1]
    vectors = _span(vectors, len(module)) if vectors else []
    while vectors and len(terms) <= length:
        cover, kernel = syzygy(module, vectors)
        terms.append(dict(Counter(cover.vertices)))
        log.debug(f"S[{vertex}] term {len(terms) - 1}: {terms[-1]}")
        module, vectors = cover, kernel
    return terms


def projective_dimension(alg, vertex, bound):
    """pd of the simple at `vertex`, or None if it exceeds `bound`."""
    terms = minimal_resolution(alg, vertex, bound + 1)
    pd = len(terms) - 1
    return pd if pd <= bound else None


def global_dimension_le(alg, n):
    """True iff every simple module has projective dimension at most `n`."""
    for v in alg.quiver.vertices:
        if projective_dimension(alg, v, n) is None:
            log.info(f"simple at {v} has projective dimension > {n}")
            return False
    return True


def global_dimension(alg, bound=None):
    """Global dimension, or None if some simple exceeds `bound` (default: dim of the algebra)."""
    bound = alg.dimension() if bound is None else bound
    pds = [projective_dimension(alg, v, bound) for v in alg.quiver.vertices]
    if any(pd is None for pd in pds):
        return None
    return max(pds, default=0)
