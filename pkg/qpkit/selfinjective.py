# qpkit.selfinjective


"""Selfinjectivity of Jacobian algebras.

A QP is selfinjective when its Jacobian algebra is finite dimensional and,
at every vertex ``i``, the complex of left modules

    P_i --[b]--> ⊕_{s(b)=i} P_{t(b)} --[∂_(b,a) W]--> ⊕_{t(a)=i} P_{s(a)}

is exact at the middle term. ``P_j = Λe_j`` is spanned by the basis paths
ending at ``j``. The socle criterion is kept alongside as an independent
check.
"""


import logging
log = logging.getLogger(__name__)

from .errors import (UndeterminedDimension, NotSelfinjective, NonAdmissibleRelation,
                     NonMinimalRelations, MixedEndpointRelation, InvariantViolation)
from .object import Parsable
from .quiver import Quiver, Arrow, Path, CyclicWord
from .potential import AlgebraElement, Potential
from .qp import QP
from .algebra import FDAlgebra, jacobian_algebra, quotient_algebra, min_generation_check
from .resolution import global_dimension_le
from . import linalg


class SelfinjectivityReport(Parsable):
    """Outcome of :py:func:`is_selfinjective`."""

    def __init__(self, name=None):
        self.name = name
        self.finite_dimensional = False
        self.selfinjective = False
        self.dimension = None
        self.nakayama = None
        self.defects = {}
        self.cartan = None
        self._algebra = None

    @property
    def algebra(self):
        return self._algebra


def _arrow_path(quiver, a):
    return Path(quiver.src(a), quiver.tgt(a), (a,))


def _positions(cells):
    return {c: k for k, c in enumerate(cells)}


def resolution_exactness_defect(alg, qp, i, side="left"):
    """Homology dimension at the middle of the vertex complex at `i`.

    ``side="right"`` uses the dual complex of right modules
    ``e_iΛ -> ⊕_{t(a)=i} e_{s(a)}Λ -> ⊕_{s(b)=i} e_{t(b)}Λ``.
    """
    quiver = qp.quiver
    outs, ins = quiver.arrows_from(i), quiver.arrows_to(i)
    if side == "left":
        dom = alg.left_projective(i)
        mid = [(b, p) for b in outs for p in alg.left_projective(quiver.tgt(b))]
        last = [(a, p) for a in ins for p in alg.left_projective(quiver.src(a))]
    elif side == "right":
        dom = alg.right_projective(i)
        mid = [(a, p) for a in ins for p in alg.right_projective(quiver.src(a))]
        last = [(b, p) for b in outs for p in alg.right_projective(quiver.tgt(b))]
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    mid_pos, last_pos = _positions(mid), _positions(last)

    first = {}
    for col, x in enumerate(dom):
        for arrow in (outs if side == "left" else ins):
            ap = _arrow_path(quiver, arrow)
            y = alg.product(x, ap) if side == "left" else alg.product(ap, x)
            for q, c in y.terms.items():
                first[(mid_pos[(arrow, q)], col)] = c

    second = {}
    for col, (arrow, y) in enumerate(mid):
        for other in (ins if side == "left" else outs):
            if side == "left":
                z = alg.multiply(AlgebraElement.of(y), qp.double_derivative(arrow, other))
            else:
                z = alg.multiply(qp.double_derivative(other, arrow), AlgebraElement.of(y))
            for q, c in z.terms.items():
                key = (last_pos[(other, q)], col)
                second[key] = second.get(key, 0) + c

    rank1 = linalg.rank(first, (len(mid), len(dom)))
    rank2 = linalg.rank(second, (len(last), len(mid)))
    defect = len(mid) - rank2 - rank1
    if defect < 0:
        raise InvariantViolation(f"negative defect {defect} at vertex {i}: the maps do not form a complex")
    return defect


def socle(alg, j):
    """Socle of Λe_j as ``[(vertex, multiplicity)]``.

    Elements of Λe_j killed by every arrow acting on the left, split by the
    vertex their paths start at.
    """
    quiver = alg.quiver
    out = []
    for u in quiver.vertices:
        paths = alg.paths(src=u, tgt=j)
        if not paths:
            continue
        rows, entries = {}, {}
        for col, p in enumerate(paths):
            for a in quiver.arrows_to(u):
                for q, c in alg.product(_arrow_path(quiver, a), p).terms.items():
                    r = rows.setdefault((a, q), len(rows))
                    entries[(r, col)] = c
        mult = len(paths) - linalg.rank(entries, (len(rows), len(paths)))
        if mult:
            out.append((u, mult))
    return out


def nakayama_permutation(alg, qp=None):
    """σ with soc(Λe_σ(i)) ≅ S_i, i.e. D(e_iΛ) ≅ Λe_σ(i).

    Raises:
        NotSelfinjective: if some socle is not simple, the assignment is not a
            bijection, or dim e_iΛ differs from dim Λe_σ(i).
    """
    sigma = {}
    for j in alg.quiver.vertices:
        soc = socle(alg, j)
        if len(soc) != 1 or soc[0][1] != 1:
            raise NotSelfinjective(f"socle of the projective at {j} is not simple: {soc}")
        i = soc[0][0]
        if i in sigma:
            raise NotSelfinjective(f"socles at {sigma[i]} and {j} are both supported at {i}")
        sigma[i] = j
    for i, j in sigma.items():
        if len(alg.right_projective(i)) != len(alg.left_projective(j)):
            raise NotSelfinjective(f"dim e_{i}Λ != dim Λe_{j}")
    return {v: sigma[v] for v in alg.quiver.vertices}


def socle_oracle(alg):
    """(selfinjective, σ) decided by the socle criterion alone."""
    try:
        return True, nakayama_permutation(alg)
    except NotSelfinjective as e:
        log.debug(f"socle criterion fails: {e}")
        return False, None


def is_selfinjective(qp, degree_bound=None, ceiling=None):
    """Decide selfinjectivity of a QP by exactness of the vertex complexes.

    Raises:
        UndeterminedDimension: if finite dimensionality cannot be certified.
    """
    report = SelfinjectivityReport(qp.name)
    alg = jacobian_algebra(qp, degree_bound, ceiling)
    if not isinstance(alg, FDAlgebra):
        raise UndeterminedDimension(str(alg))
    report._algebra = alg
    report.finite_dimensional = True
    report.dimension = alg.dimension()
    report.cartan = alg.dimension_vector()
    report.defects = {v: resolution_exactness_defect(alg, qp, v) for v in qp.vertices}
    report.selfinjective = not any(report.defects.values())
    if report.selfinjective:
        report.nakayama = nakayama_permutation(alg, qp)
        missing = set(qp.quiver.arrows) - qp.potential.arrows()
        if missing:
            raise InvariantViolation(f"selfinjective QP with arrows {sorted(missing)} outside the potential")
    log.info(f"{qp.name or 'QP'}: dim {report.dimension}, selfinjective {report.selfinjective}")
    return report


def _fresh_id(taken, base):
    k, name = 1, base
    while name in taken:
        k += 1
        name = f"{base}{k}"
    return name


def qp_of_algebra(quiver, relations, degree_bound=None):
    """(Q_A, W_A) for A = KQ / <relations>.

    Adds an arrow ρ_i: t(r_i) -> s(r_i) per relation and W_A = Σ ρ_i r_i.
    The new arrows are recorded as ``cut`` on the result.

    Raises:
        NonAdmissibleRelation: a relation is zero or has a term of length < 2.
        MixedEndpointRelation: a relation mixes (source, target) pairs.
        NonMinimalRelations: the relations are not a minimal generating set.
    """
    relations = list(relations)
    for r in relations:
        if not r or r.low_degree() < 2:
            raise NonAdmissibleRelation(f"relation {r} is not admissible")
        if len(r.endpoints()) != 1:
            raise MixedEndpointRelation(f"relation {r} spans {sorted(r.endpoints())}")
    if not min_generation_check(relations, quiver, degree_bound):
        raise NonMinimalRelations("relations do not form a minimal generating set")
    taken = set(quiver.arrows)
    arrows = list(quiver.arrows.values())
    terms = {}
    rhos = []
    for k, r in enumerate(relations, 1):
        rho = _fresh_id(taken, f"r{k}")
        taken.add(rho)
        rhos.append(rho)
        src, tgt = next(iter(r.endpoints()))
        arrows.append(Arrow(rho, tgt, src))
        for p, c in r.terms.items():
            w = CyclicWord.of((rho,) + p.arrows)
            terms[w] = terms.get(w, 0) + c
    return QP(Quiver(quiver.vertices, arrows), Potential(terms), cut=rhos)


def is_2rf(quiver, relations, degree_bound=None):
    """True iff A = KQ / <relations> has gl.dim <= 2 and (Q_A, W_A) is selfinjective.

    Raises:
        UndeterminedDimension: if A or P(Q_A, W_A) cannot be certified finite dimensional.
    """
    relations = list(relations)
    bound = degree_bound or 4 * max(len(quiver.vertices), 1) * max((r.degree() for r in relations), default=2)
    alg = quotient_algebra(quiver, relations, bound)
    if not isinstance(alg, FDAlgebra):
        raise UndeterminedDimension(str(alg))
    if not global_dimension_le(alg, 2):
        log.info("global dimension exceeds 2")
        return False
    qp = qp_of_algebra(quiver, relations, degree_bound)
    return is_selfinjective(qp, degree_bound).selfinjective
