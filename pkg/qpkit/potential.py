# qpkit.potential


"""Algebra elements, potentials and the cyclic derivative calculus.

Elements are finite rational combinations of paths in the (polynomial)
path algebra. Potentials are rational combinations of cyclic words.
"""


from fractions import Fraction
import logging
log = logging.getLogger(__name__)

from .errors import ZeroCoefficient, NonCyclicTerm
from .quiver import Path, CyclicWord


def as_fraction(value):
    """Exact rational from int, Fraction or a "p/q" string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not accepted")
    return Fraction(value)


class AlgebraElement(object):
    """A noncommutative polynomial: map Path -> nonzero Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for p, c in (terms or {}).items():
            c = as_fraction(c)
            if c:
                self.terms[p] = self.terms.get(p, 0) + c
                if not self.terms[p]:
                    del self.terms[p]

    @classmethod
    def of(cls, path, coef=1):
        return cls({path: coef})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return AlgebraElement(out)

    def __neg__(self):
        return AlgebraElement({p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_fraction(c)
        return AlgebraElement({p: c * v for p, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        out = {}
        for p, c in self.terms.items():
            for q, d in other.terms.items():
                pq = p * q
                if pq is not None:
                    out[pq] = out.get(pq, 0) + c * d
        return AlgebraElement(out)

    __rmul__ = scale

    def degree(self):
        return max((len(p) for p in self.terms), default=0)

    def low_degree(self):
        return min((len(p) for p in self.terms), default=0)

    def endpoints(self):
        """Set of (src, tgt) pairs among the terms."""
        return {(p.src, p.tgt) for p in self.terms}

    def arrows(self):
        return {a for p in self.terms for a in p.arrows}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0].arrows, t[0].src))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for p, c in self.sorted_terms():
            parts.append(f"{c}*{p}" if c != 1 else str(p))
        return " + ".join(parts)

    __repr__ = __str__


class Potential(object):
    """A finite map CyclicWord -> nonzero Fraction; cycles have length >= 1."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for w, c in (terms or {}).items():
            w = w if isinstance(w, CyclicWord) else CyclicWord.of(w)
            c = as_fraction(c)
            self.terms[w] = self.terms.get(w, 0) + c
            if not self.terms[w]:
                del self.terms[w]

    @classmethod
    def checked(cls, pairs):
        """Build from (word, coef) pairs, rejecting explicit zero coefficients."""
        terms = {}
        for w, c in pairs:
            c = as_fraction(c)
            if not c:
                raise ZeroCoefficient(f"zero coefficient on cycle {w}")
            w = w if isinstance(w, CyclicWord) else CyclicWord.of(w)
            terms[w] = terms.get(w, 0) + c
        return cls(terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Potential) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return Potential(out)

    def __neg__(self):
        return Potential({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_fraction(c)
        return Potential({w: c * v for w, v in self.terms.items()})

    def arrows(self):
        return {a for w in self.terms for a in w.arrows}

    def occurrences(self, arrow):
        return sum(w.count(arrow) for w in self.terms)

    def without_terms(self, words):
        drop = set(words)
        return Potential({w: c for w, c in self.terms.items() if w not in drop})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0].arrows))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*({w})" if c != 1 else f"({w})" for w, c in self.sorted_terms())

    __repr__ = __str__


def _path(quiver, arrows):
    return Path(quiver.src(arrows[0]), quiver.tgt(arrows[-1]), tuple(arrows))


def sigma_expand(quiver, w):
    """Sum of all rotations of every term.

    A term c*(a1...an) contributes c * sum_i ai...an a1...a(i-1); equal
    rotations of periodic words add up.
    """
    out = {}
    for word, c in w.terms.items():
        for rot in word.rotations():
            p = _path(quiver, rot)
            out[p] = out.get(p, 0) + c
    return AlgebraElement(out)


def cyclic_derivative(quiver, w, a):
    """∂_a W: rotations starting with `a`, with that leading `a` stripped."""
    quiver.arrow(a)
    out = {}
    for word, c in w.terms.items():
        for rot in word.rotations():
            if rot[0] != a:
                continue
            rest = rot[1:]
            p = _path(quiver, rest) if rest else quiver.trivial(quiver.tgt(a))
            out[p] = out.get(p, 0) + c
    return AlgebraElement(out)


def double_derivative(quiver, w, a, b):
    """∂_(a,b) W: rotations starting with `a` and ending with `b`, both stripped.

    The result is a combination of paths from t(a) to s(b).
    """
    quiver.arrow(a)
    quiver.arrow(b)
    out = {}
    for word, c in w.terms.items():
        if len(word) < 2:
            continue
        for rot in word.rotations():
            if rot[0] != a or rot[-1] != b:
                continue
            mid = rot[1:-1]
            p = _path(quiver, mid) if mid else quiver.trivial(quiver.tgt(a))
            out[p] = out.get(p, 0) + c
    return AlgebraElement(out)


def path_element(quiver, arrows, coef=1):
    return AlgebraElement.of(quiver.path(arrows), coef)


def check_cycles(quiver, w):
    """Raise NonCyclicTerm if some term is not a closed path of the quiver."""
    for word in w.terms:
        quiver.cycle(word.arrows)
