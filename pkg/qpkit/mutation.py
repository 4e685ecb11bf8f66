# qpkit.mutation


"""Premutation, 2-reduction and mutation of QPs.

Premutation at ``k`` reverses the arrows at ``k`` (``a`` becomes ``a*``, and
``a*`` becomes ``a`` again) and adds a composite ``[a|b]: s(a) -> t(b)`` for
each arrow ``a`` into ``k`` and ``b`` out of ``k``. Every factor ``ab`` of the
potential passing through ``k`` is replaced by ``[a|b]`` and the terms
``[a|b] b* a*`` are added.

2-reduction works on polynomial potentials. A 2-cycle term ``c·uv`` is used to
cancel the remaining terms containing ``u`` or ``v`` one at a time, lowest
degree first: a term ``λ·u p`` is cancelled by ``v -> v - (λ/c) p`` and a term
``λ·v p`` by ``u -> u - (λ/c) p``. Once ``u`` and ``v`` occur nowhere else
the two arrows and the term are dropped. Substitutions that would create a
term longer than the reduction bound are refused.
"""


from dataclasses import dataclass
from fractions import Fraction
import itertools
import logging
log = logging.getLogger(__name__)

from .errors import (TwoCycleAtVertex, ReductionBoundExceeded, OrbitPreconditionViolated,
                     InvariantViolation)
from .quiver import Quiver, Arrow, CyclicWord
from .potential import Potential
from .qp import QP
from .config import DEFAULTS


#: substitution steps per 2-cycle before giving up
STEP_LIMIT = 5000


@dataclass
class MutationResult:
    """A (possibly) reduced QP and the number of 2-cycles split off."""
    qp: QP
    reduced: bool = True
    trivial_rank: int = 0


def star(a):
    return a[:-1] if a.endswith("*") else a + "*"


def composite(a, b):
    return f"[{a}|{b}]"


def premutate(qp, k):
    """μ̃_k: the premutation at vertex `k`.

    Raises:
        TwoCycleAtVertex: if `k` lies on a 2-cycle or carries a loop.
    """
    quiver = qp.quiver
    if k not in quiver.vertices:
        raise ValueError(f"unknown vertex {k}")
    cycles = quiver.two_cycles_at(k)
    if cycles:
        raise TwoCycleAtVertex(f"vertex {k} lies on the 2-cycle {cycles[0]}")
    ins, outs = quiver.arrows_to(k), quiver.arrows_from(k)
    arrows = [a for a in quiver.arrows.values() if a.src != k and a.tgt != k]
    arrows += [Arrow(star(a), k, quiver.src(a)) for a in ins]
    arrows += [Arrow(star(b), quiver.tgt(b), k) for b in outs]
    arrows += [Arrow(composite(a, b), quiver.src(a), quiver.tgt(b)) for a in ins for b in outs]
    new = Quiver(quiver.vertices, arrows)

    terms = {}
    for w, c in qp.potential.terms.items():
        word = _through(quiver, k, w.arrows)
        key = CyclicWord.of(word)
        terms[key] = terms.get(key, 0) + c
    for a in ins:
        for b in outs:
            key = CyclicWord.of((composite(a, b), star(b), star(a)))
            terms[key] = terms.get(key, 0) + 1
    log.debug(f"premutation at {k}: {len(ins)} in, {len(outs)} out")
    return QP(new, Potential(terms), name=qp.name)


def _through(quiver, k, word):
    """`word` with every factor ``ab`` through `k` replaced by ``[a|b]``."""
    start = next((i for i, a in enumerate(word) if quiver.src(a) != k), 0)
    word = word[start:] + word[:start]
    out, i = [], 0
    while i < len(word):
        a = word[i]
        if quiver.tgt(a) == k and i + 1 < len(word):
            out.append(composite(a, word[i + 1]))
            i += 2
        else:
            out.append(a)
            i += 1
    return tuple(out)


def _replace(terms, arrow, images, bound):
    """Expand every occurrence of `arrow` into `images` (``[(word, coef)]``)."""
    out = {}
    for w, c in terms.items():
        options = [images if x == arrow else [((x,), 1)] for x in w.arrows]
        for combo in itertools.product(*options):
            word = tuple(a for part, _ in combo for a in part)
            coef = c
            for _, k in combo:
                coef *= k
            if len(word) > bound:
                raise ReductionBoundExceeded(f"substitution for {arrow} creates a term of degree {len(word)}")
            key = CyclicWord.of(word)
            out[key] = out.get(key, 0) + coef
    return {w: c for w, c in out.items() if c}


def substitute(qp, arrow, delta, bound=None):
    """The QP after the unitriangular substitution ``arrow -> arrow + delta``.

    `delta` is an AlgebraElement of paths parallel to `arrow`.
    """
    bound = bound or DEFAULTS["reduction_bound"]
    for p in delta.terms:
        if (p.src, p.tgt) != (qp.quiver.src(arrow), qp.quiver.tgt(arrow)) or not p.arrows:
            raise ValueError(f"{p} is not parallel to {arrow}")
    images = [((arrow,), 1)] + [(p.arrows, c) for p, c in delta.terms.items()]
    return qp.with_potential(Potential(_replace(qp.potential.terms, arrow, images, bound)))


def _rotate_to(word, a):
    i = word.index(a)
    return word[i:] + word[:i]


def _two_cycle_terms(terms):
    return [w for w in terms if len(w) == 2 and w.arrows[0] != w.arrows[1]]


def _pick_two_cycle(terms):
    def other(w):
        return sum(x.count(a) for x in terms if x != w for a in set(w.arrows))
    return min(_two_cycle_terms(terms), key=lambda w: (other(w), w.arrows))


def reduce_qp(qp, degree_bound=None):
    """Split off the trivial part of a QP.

    Raises:
        ReductionBoundExceeded: if a substitution creates a term longer than
            `degree_bound` (default: the configured reduction bound) or
            a 2-cycle does not split within the step limit.
    """
    bound = degree_bound or DEFAULTS["reduction_bound"]
    quiver = qp.quiver
    terms = dict(qp.potential.terms)
    removed = []
    while _two_cycle_terms(terms):
        pair = _pick_two_cycle(terms)
        u, v = pair.arrows
        steps = 0
        while True:
            c = terms[pair]
            rest = sorted((w for w in terms if w != pair and (u in w.arrows or v in w.arrows)),
                          key=lambda w: (len(w), w.arrows))
            if not rest:
                break
            steps += 1
            if steps > STEP_LIMIT:
                raise ReductionBoundExceeded(f"2-cycle {u}{v} does not split within {STEP_LIMIT} steps")
            t = rest[0]
            lam = terms[t]
            if u in t.arrows:
                target, p = v, _rotate_to(t.arrows, u)[1:]
            else:
                target, p = u, _rotate_to(t.arrows, v)[1:]
            images = [((target,), 1), (p, -Fraction(lam) / c)]
            terms = _replace(terms, target, images, bound)
            if pair not in terms:
                raise InvariantViolation(f"2-cycle term {u}{v} vanished during reduction")
        del terms[pair]
        removed += [u, v]
        log.debug(f"split off 2-cycle {u}{v}")
    reduced = QP(quiver.without(removed), Potential(terms), name=qp.name)
    left = [p for v in reduced.vertices for p in reduced.quiver.two_cycles_at(v) if p[0] != p[1]]
    if left:
        log.info(f"2-cycles outside the potential remain: {sorted(set(left))[:3]}")
    return MutationResult(reduced, reduced=not _two_cycle_terms(terms), trivial_rank=len(removed) // 2)


def mutate(qp, k, degree_bound=None):
    """μ_k: premutation at `k` followed by 2-reduction."""
    result = reduce_qp(premutate(qp, k), degree_bound)
    log.info(f"mutated at {k}: {len(result.qp.arrows)} arrows, {len(result.qp.potential.terms)} terms")
    return result


def orbit(sigma, k):
    """``[k, σk, σ²k, ...]`` up to the first repetition."""
    out = [k]
    while sigma[out[-1]] != k:
        out.append(sigma[out[-1]])
    return out


def _mutate_along(qp, vertices, degree_bound):
    rank = 0
    for v in vertices:
        try:
            result = mutate(qp, v, degree_bound)
        except TwoCycleAtVertex as e:
            raise OrbitPreconditionViolated(f"orbit mutation blocked at {v}: {e}") from None
        qp, rank = result.qp, rank + result.trivial_rank
    return MutationResult(qp, True, rank)


def orbit_mutate(qp, sigma, k, degree_bound=None):
    """μ_(k): mutation at every vertex of the σ-orbit of `k`.

    The orbit is mutated in order and again in reverse order; the two results
    must agree up to isomorphism with rescaled arrows.

    Raises:
        OrbitPreconditionViolated: `k` lies on a 2-cycle or two orbit vertices are joined by an arrow.
        InvariantViolation: the two orders disagree.
    """
    from .isomorphism import qp_isomorphic

    vertices = orbit(sigma, k)
    if qp.quiver.two_cycles_at(k):
        raise OrbitPreconditionViolated(f"vertex {k} lies on a 2-cycle")
    members = set(vertices)
    joined = [a.id for a in qp.quiver.arrows.values() if a.src in members and a.tgt in members]
    if joined:
        raise OrbitPreconditionViolated(f"arrows {sorted(joined)} join vertices of the orbit {vertices}")
    result = _mutate_along(qp, vertices, degree_bound)
    if len(vertices) > 1:
        other = _mutate_along(qp, list(reversed(vertices)), degree_bound)
        if not qp_isomorphic(result.qp, other.qp, rescale=True):
            raise InvariantViolation(f"orbit mutation along {vertices} depends on the order")
    return result
