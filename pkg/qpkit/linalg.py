# qpkit.linalg


"""Exact linear algebra on sympy's ``DomainMatrix``.

Matrices are given sparsely as ``{(row, col): value}`` with a ``shape``.
Values are ints or ``Fraction`` objects; results come back as ``Fraction``.
Supported domains are ``QQ``, ``ZZ`` (invariant factors only) and ``GF2``.
"""


from fractions import Fraction
import logging
log = logging.getLogger(__name__)

from sympy import QQ, ZZ, GF
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors as _invariant_factors


GF2 = GF(2)


def to_domain(value, domain=QQ):
    if domain == QQ:
        f = Fraction(value)
        return QQ(f.numerator, f.denominator)
    f = Fraction(value)
    if f.denominator != 1:
        raise ValueError(f"{value} is not integral")
    return domain(int(f.numerator))


def from_domain(x, domain=QQ):
    if domain == QQ:
        return Fraction(int(x.numerator), int(x.denominator))
    return Fraction(int(x))


def matrix(entries, shape, domain=QQ):
    """Sparse ``DomainMatrix`` from a ``{(i, j): value}`` mapping."""
    rows = {}
    for (i, j), v in entries.items():
        x = to_domain(v, domain)
        if x:
            rows.setdefault(i, {})[j] = x
    return DomainMatrix(rows, shape, domain)


def _rows(m):
    return {i: dict(r) for i, r in m.to_sparse().rep.items()}


def rank(entries, shape, domain=QQ):
    if not entries or 0 in shape:
        return 0
    _, pivots = matrix(entries, shape, domain).rref()
    return len(pivots)


def rref(entries, shape, domain=QQ):
    """Reduced row echelon form as ``(rows, pivots)``.

    ``rows`` maps the pivot row index to ``{col: Fraction}``.
    """
    if not entries or 0 in shape:
        return {}, ()
    r, pivots = matrix(entries, shape, domain).rref()
    rows = {i: {j: from_domain(x, domain) for j, x in row.items()} for i, row in _rows(r).items()}
    return rows, tuple(pivots)


def nullspace(entries, shape, domain=QQ):
    """Basis of ``{v : A v = 0}`` as sparse ``{col: Fraction}`` vectors."""
    ncols = shape[1]
    rows, pivots = rref(entries, shape, domain)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = {f: Fraction(1)}
        for i, p in enumerate(pivots):
            x = rows.get(i, {}).get(f)
            if x:
                v[p] = -x if domain == QQ else Fraction(int(-x) % 2)
        basis.append({k: c for k, c in v.items() if c})
    return basis


def in_column_space(entries, shape, vector, domain=QQ):
    """True iff `vector` (``{row: value}``) lies in the column span."""
    if not any(vector.values()):
        return True
    extended = dict(entries)
    for i, v in vector.items():
        extended[(i, shape[1])] = v
    wide = (shape[0], shape[1] + 1)
    return rank(entries, shape, domain) == rank(extended, wide, domain)


def invariant_factors(entries, shape):
    """Nonzero invariant factors of an integer matrix, in divisibility order."""
    used_rows = sorted({i for (i, _), v in entries.items() if v})
    used_cols = sorted({j for (_, j), v in entries.items() if v})
    if not used_rows:
        return []
    ri = {r: k for k, r in enumerate(used_rows)}
    ci = {c: k for k, c in enumerate(used_cols)}
    m = matrix({(ri[i], ci[j]): v for (i, j), v in entries.items() if v},
               (len(used_rows), len(used_cols)), ZZ)
    return [abs(int(f)) for f in _invariant_factors(m) if f]


def pivot_columns(vectors, dim, domain=QQ):
    """Indices of a maximal independent subset of `vectors`, earliest first.

    Vectors are sparse ``{coordinate: value}`` mappings of length `dim`.
    """
    entries = {(i, j): v for j, vec in enumerate(vectors) for i, v in vec.items() if v}
    _, pivots = rref(entries, (dim, len(vectors)), domain)
    return list(pivots)
