# qpkit.reduction


"""Noncommutative reduction systems on path algebras.

A rule rewrites a monic leading path into a combination of smaller paths.
Paths are ordered degree-lexicographically: longer paths are larger, paths of
equal length compare by the positions of their arrows in sorted id order.

Completion runs the overlap (Buchberger) loop up to a degree bound ``D``.
Overlaps longer than ``D`` are kept aside so the system can be extended to a
larger bound without starting over.

The ideal is taken in the polynomial path algebra. For finite dimensional
quotients this is the quotient used by :py:mod:`qpkit.algebra`.
"""


import heapq
import logging
log = logging.getLogger(__name__)

from .errors import DegreeExceeded, MalformedQP
from .quiver import Path
from .potential import AlgebraElement


class ReductionSystem(object):
    """Rules ``lead -> tail`` on the paths of `quiver`.

    Attributes:
        rules (dict): leading arrow tuple -> (lead Path, tail dict Path -> Fraction)
        complete_degree (int): every overlap of length <= this resolves to zero.
        certified (bool): set once the rules are known to form a complete
            system, lifting the degree check of :py:meth:`normal_form`.
    """

    def __init__(self, quiver):
        self.quiver = quiver
        self.index = {a: i for i, a in enumerate(quiver.arrow_ids())}
        self.rules = {}
        self.complete_degree = 0
        self.complete_target = 0
        self.certified = False
        self._lengths = set()
        self._pending = []
        self._pairs = []
        self._deferred = []

    def __repr__(self):
        return f"ReductionSystem({len(self.rules)} rules, complete to degree {self.complete_degree})"

    def key(self, path):
        return (len(path.arrows), tuple(self.index[a] for a in path.arrows))

    def _heap_key(self, path):
        n, idx = self.key(path)
        return (-n, tuple(-i for i in idx), path.src)

    def leading(self, terms):
        return max(terms, key=self.key)

    def max_lead_length(self):
        return max(self._lengths, default=0)

    def sorted_rules(self):
        return sorted(self.rules.values(), key=lambda r: self.key(r[0]))

    def find_lead(self, arrows):
        """(start, length) of the leftmost rule lead inside `arrows`, or None."""
        for i in range(len(arrows)):
            for n in sorted(self._lengths):
                if i + n <= len(arrows) and arrows[i:i + n] in self.rules:
                    return i, n
        return None

    def is_normal_extension(self, arrows):
        """True if no lead is a suffix of `arrows` (the prefix being normal)."""
        for n in self._lengths:
            if n <= len(arrows) and arrows[len(arrows) - n:] in self.rules:
                return False
        return True

    def reduce(self, terms):
        """Fully reduce a ``{Path: Fraction}`` mapping, without degree checks."""
        work = {}
        heap = []

        def push(p, c):
            if p in work:
                work[p] += c
            else:
                work[p] = c
                heapq.heappush(heap, (self._heap_key(p), p))

        for p, c in terms.items():
            if c:
                push(p, c)
        out = {}
        while heap:
            _, p = heapq.heappop(heap)
            c = work.pop(p)
            if not c:
                continue
            hit = self.find_lead(p.arrows) if p.arrows else None
            if hit is None:
                out[p] = c
                continue
            i, n = hit
            u, v = p.arrows[:i], p.arrows[i + n:]
            _, tail = self.rules[p.arrows[i:i + n]]
            for t, d in tail.items():
                push(Path(p.src, p.tgt, u + t.arrows + v), c * d)
        return out

    def normal_form(self, x):
        """Normal form of an AlgebraElement.

        Raises:
            DegreeExceeded: if `x` is longer than the completed degree and the
                system is not certified complete.
        """
        terms = x.terms if isinstance(x, AlgebraElement) else x
        degree = max((len(p) for p in terms), default=0)
        if degree > self.complete_degree and not self.certified:
            raise DegreeExceeded(f"degree {degree} exceeds completed degree {self.complete_degree}")
        return AlgebraElement(self.reduce(terms))

    def add_generators(self, gens):
        for g in gens:
            terms = g.terms if isinstance(g, AlgebraElement) else g
            parts = {}
            for p, c in terms.items():
                parts.setdefault((p.src, p.tgt), {})[p] = c
            self._pending += [part for _, part in sorted(parts.items())]

    def _add_rule(self, terms):
        lead = self.leading(terms)
        if not lead.arrows:
            raise MalformedQP(f"relation {AlgebraElement(terms)} has a trivial leading path")
        c = terms[lead]
        tail = {p: -d / c for p, d in terms.items() if p != lead}
        word = lead.arrows
        for old in [w for w in self.rules if len(w) > len(word) and _contains(w, word)]:
            old_lead, old_tail = self.rules.pop(old)
            back = {old_lead: 1}
            for p, d in old_tail.items():
                back[p] = back.get(p, 0) - d
            self._pending.append(back)
            log.debug(f"rule {old_lead} superseded by lead {lead}")
        self.rules[word] = (lead, tail)
        self._lengths = {len(w) for w in self.rules}
        for w, (l, t) in list(self.rules.items()):
            if w != word and any(_contains(p.arrows, word) for p in t):
                self.rules[w] = (l, self.reduce(t))
        for other in list(self.rules):
            self._queue_overlaps(word, other)
            if other != word:
                self._queue_overlaps(other, word)

    def _queue_overlaps(self, first, second):
        for k in range(1, min(len(first), len(second))):
            if first[len(first) - k:] == second[:k]:
                n = len(first) + len(second) - k
                pair = (n, first, second, k)
                if n <= self.complete_target:
                    heapq.heappush(self._pairs, pair)
                else:
                    self._deferred.append(pair)

    def _overlap_difference(self, first, second, k):
        lead1, tail1 = self.rules[first]
        lead2, tail2 = self.rules[second]
        u, v = first[:len(first) - k], second[k:]
        out = {}
        for p, c in tail1.items():
            q = Path(lead1.src, lead2.tgt, p.arrows + v)
            out[q] = out.get(q, 0) + c
        for p, c in tail2.items():
            q = Path(lead1.src, lead2.tgt, u + p.arrows)
            out[q] = out.get(q, 0) - c
        return out

    def complete(self, bound):
        """Run the overlap loop until every overlap of length <= `bound` resolves."""
        self.complete_target = bound
        keep = []
        for pair in self._deferred:
            if pair[0] <= bound:
                heapq.heappush(self._pairs, pair)
            else:
                keep.append(pair)
        self._deferred = keep
        steps = 0
        while self._pending or self._pairs:
            if self._pending:
                self._pending.sort(key=lambda t: max(self.key(p) for p in t) if t else (0, ()))
                terms = self.reduce(self._pending.pop(0))
                if terms:
                    self._add_rule(terms)
                continue
            n, first, second, k = heapq.heappop(self._pairs)
            if first not in self.rules or second not in self.rules:
                continue
            steps += 1
            diff = self.reduce(self._overlap_difference(first, second, k))
            if diff:
                self._pending.append(diff)
        self.complete_degree = max(self.complete_degree, bound)
        log.debug(f"completed to degree {bound}: {len(self.rules)} rules after {steps} overlaps")
        return self

    extend = complete

    def live_deferred(self):
        """Deferred overlaps whose two rules are still present."""
        return [p for p in self._deferred if p[1] in self.rules and p[2] in self.rules]


def _contains(word, sub):
    n = len(sub)
    return any(word[i:i + n] == sub for i in range(len(word) - n + 1))


def complete_reduction_system(gens, quiver, degree_bound):
    """Reduction system for the ideal generated by `gens`, complete up to `degree_bound`.

    Generators are split into their (source, target) components first.
    """
    rs = ReductionSystem(quiver)
    rs.add_generators(gens)
    log.info(f"completing {len(rs._pending)} relations up to degree {degree_bound}")
    return rs.complete(degree_bound)


def normal_form(x, system):
    return system.normal_form(x)
