# qpkit.qp


"""Quivers with potential and their JSON form.

Schema::

    {"vertices": [id, ...],
     "arrows": [{"id": str, "src": id, "tgt": id}, ...],
     "potential": [{"coef": "p/q", "cycle": [arrowId, ...]}, ...]}

Cycles are listed in composition order, first arrow first. Planar QPs add
``"coords"`` and/or ``"embedding"``, see :py:mod:`qpkit.planar`.
"""


import json
from fractions import Fraction
import logging
log = logging.getLogger(__name__)

from .errors import MalformedQP, NonCyclicTerm
from .quiver import Quiver, Arrow, CyclicWord
from .potential import Potential, sigma_expand, cyclic_derivative, double_derivative, check_cycles


class QP(object):
    """A quiver together with a potential.

    Args:
        quiver (Quiver): the quiver.
        potential (Potential): rational combination of cycles of `quiver`.
        name (str): optional label used in reports.
        cut (iterable): optional arrow ids of a distinguished cut.
    """

    def __init__(self, quiver, potential=None, name=None, cut=None):
        self.quiver = quiver
        self.potential = potential if potential is not None else Potential()
        self.name = name
        self.cut = frozenset(cut) if cut is not None else None
        check_cycles(quiver, self.potential)
        short = [w for w in self.potential.terms if len(w) < 2]
        if short:
            raise MalformedQP(f"potential terms must have length >= 2, got {short[0]}")

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"QP({label}{len(self.quiver.vertices)} vertices, {len(self.quiver.arrows)} arrows, W = {self.potential})"

    def __eq__(self, other):
        return isinstance(other, QP) and self.quiver == other.quiver and self.potential == other.potential

    def __hash__(self):
        return hash((self.quiver, self.potential))

    @property
    def vertices(self):
        return self.quiver.vertices

    @property
    def arrows(self):
        return self.quiver.arrows

    def sigma(self):
        return sigma_expand(self.quiver, self.potential)

    def derivative(self, a):
        return cyclic_derivative(self.quiver, self.potential, a)

    def double_derivative(self, a, b):
        return double_derivative(self.quiver, self.potential, a, b)

    def derivatives(self, arrows=None):
        """∂_a W for the given (default: all) arrows, in arrow id order."""
        arrows = self.quiver.arrow_ids() if arrows is None else sorted(arrows)
        return {a: self.derivative(a) for a in arrows}

    def max_cycle_length(self):
        return max((len(w) for w in self.potential.terms), default=0)

    def with_potential(self, potential, name=None):
        return QP(self.quiver, potential, name=name or self.name)

    def relabel(self, vmap=None, amap=None, name=None):
        """Rename vertices and/or arrows."""
        amap = amap or {}
        terms = {CyclicWord.of(tuple(amap.get(a, a) for a in w.arrows)): c
                 for w, c in self.potential.terms.items()}
        return QP(self.quiver.relabel(vmap, amap), Potential(terms), name=name or self.name)

    def to_dict(self):
        d = {}
        if self.name:
            d["name"] = self.name
        d["vertices"] = list(self.quiver.vertices)
        d["arrows"] = [{"id": a.id, "src": a.src, "tgt": a.tgt} for a in sorted(self.quiver.arrows.values())]
        d["potential"] = [{"coef": str(c), "cycle": list(w.arrows)} for w, c in self.potential.sorted_terms()]
        if self.cut is not None:
            d["cut"] = sorted(self.cut)
        return d


def opposite_qp(qp):
    """(Q^op, W^op): every arrow and every cycle reversed."""
    terms = {CyclicWord.of(tuple(reversed(w.arrows))): c for w, c in qp.potential.terms.items()}
    name = f"{qp.name}^op" if qp.name else None
    return QP(qp.quiver.opposite(), Potential(terms), name=name)


def direct_sum(*qps):
    """Disjoint union of QPs; vertex and arrow ids must not clash."""
    vertices, arrows, terms = [], [], {}
    for qp in qps:
        vertices += list(qp.quiver.vertices)
        arrows += list(qp.quiver.arrows.values())
        terms.update(qp.potential.terms)
    return QP(Quiver(vertices, arrows), Potential(terms))


def qp_from_dict(d):
    """Build a QP from the JSON schema, validating every reference."""
    if not isinstance(d, dict):
        raise MalformedQP("QP document must be a JSON object")
    try:
        vertices = [str(v) for v in d["vertices"]]
        arrows = [Arrow(str(a["id"]), str(a["src"]), str(a["tgt"])) for a in d.get("arrows", [])]
        raw = [(tuple(str(x) for x in t["cycle"]), t["coef"]) for t in d.get("potential", [])]
    except (KeyError, TypeError) as e:
        raise MalformedQP(f"missing or malformed field: {e}") from None
    quiver = Quiver(vertices, arrows)
    pairs = []
    for cycle, coef in raw:
        if isinstance(coef, float) or any(ch in str(coef) for ch in ".eE"):
            raise MalformedQP(f"coefficient {coef!r} must be an exact fraction")
        try:
            coef = Fraction(str(coef))
        except ValueError:
            raise MalformedQP(f"bad coefficient {coef!r}") from None
        pairs.append((quiver.cycle(cycle), coef))
    return QP(quiver, Potential.checked(pairs), name=d.get("name"), cut=d.get("cut"))


def parse_qp(text):
    """Parse QP JSON text.

    Raises:
        MalformedQP: bad JSON or schema; DanglingArrow, NonCyclicTerm and
            ZeroCoefficient for the respective content errors.
    """
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedQP(f"malformed JSON: {e}") from None
    return qp_from_dict(d)


def serialize_qp(qp, extra=None):
    d = qp.to_dict()
    d.update(extra or {})
    return json.dumps(d, indent=2)
