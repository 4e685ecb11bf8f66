# qpkit.planar


"""Planar QPs given by rotation systems.

A dart is ``(arrow, forward)``: ``forward`` darts leave the source of the
arrow, the others leave its target. ``rotation[v]`` lists the darts leaving
``v`` in counterclockwise order. Faces are traced by
``next(d) = rotation[head(d)][index(reverse(d)) - 1]``, so bounded faces run
counterclockwise and the outer face clockwise. One dart of the outer face is
stored as ``outer``.

A face is directed if all its darts are forward (a counterclockwise cycle) or
all backward (a clockwise cycle). The potential of a planar QP is the sum of
its bounded directed faces, each with coefficient 1.

JSON form, next to the QP fields::

    "embedding": {"rotation": {v: [[arrow, "out" | "in"], ...]}, "outer": [arrow, "out" | "in"]},
    "coords": {v: [x, y]}
"""


import math
from fractions import Fraction
import logging
log = logging.getLogger(__name__)

from .errors import (NotPlanar, EmbeddingMismatch, NotPlanarMutable, OrbitPreconditionViolated,
                     InvariantViolation, MalformedQP)
from .object import Parsable
from .quiver import CyclicWord
from .potential import Potential
from .qp import QP, qp_from_dict
from .mutation import premutate, mutate, star, composite, orbit


def reverse(dart):
    return (dart[0], not dart[1])


def _tail(quiver, dart):
    a = quiver.arrow(dart[0])
    return a.src if dart[1] else a.tgt


def _head(quiver, dart):
    a = quiver.arrow(dart[0])
    return a.tgt if dart[1] else a.src


def trace_faces(quiver, rotation):
    """All faces as lists of darts, in a deterministic order."""
    index = {}
    for v, darts in rotation.items():
        for i, d in enumerate(darts):
            index[d] = (v, i)
    faces, seen = [], set()
    for v in quiver.vertices:
        for start in rotation.get(v, []):
            if start in seen:
                continue
            face, d = [], start
            while d not in seen:
                seen.add(d)
                face.append(d)
                w, i = index[reverse(d)]
                d = rotation[w][i - 1]
            if d != start:
                raise NotPlanar(f"face tracing from {start} does not close up")
            faces.append(face)
    return faces


def face_cycle(face):
    """The directed cycle bounding a face, or None."""
    if all(d[1] for d in face):
        return CyclicWord.of(d[0] for d in face)
    if not any(d[1] for d in face):
        return CyclicWord.of(d[0] for d in reversed(face))
    return None


def check_rotation(quiver, rotation):
    """Every arrow end appears exactly once, at the right vertex."""
    expected = {v: set() for v in quiver.vertices}
    for a in quiver.arrows.values():
        expected[a.src].add((a.id, True))
        expected[a.tgt].add((a.id, False))
    for v in quiver.vertices:
        got = rotation.get(v, [])
        if len(got) != len(set(got)) or set(got) != expected[v]:
            raise NotPlanar(f"rotation at {v} lists {got}, expected the ends {sorted(expected[v])}")


def euler_check(quiver, faces):
    if not quiver.is_connected():
        raise NotPlanar("a planar QP must be connected")
    n_faces = len(faces) if quiver.arrows else 1
    chi = len(quiver.vertices) - len(quiver.arrows) + n_faces
    if chi != 2:
        raise NotPlanar(f"V - E + F = {chi}, the rotation system is not planar")


def _outer_face(faces, outer):
    for f in faces:
        if outer in f:
            return f
    raise NotPlanar(f"outer dart {outer} is not on any face")


def faces_and_potential(quiver, rotation, outer):
    """Sum of the bounded directed faces.

    Raises:
        NotPlanar: if the rotation system fails the Euler check.
    """
    check_rotation(quiver, rotation)
    faces = trace_faces(quiver, rotation)
    euler_check(quiver, faces)
    out = _outer_face(faces, outer) if quiver.arrows else None
    terms = {}
    for f in faces:
        if f is out:
            continue
        c = face_cycle(f)
        if c is not None:
            terms[c] = terms.get(c, 0) + 1
    return Potential(terms)


def rotation_from_coords(quiver, coords):
    """(rotation, outer dart) of a straight line drawing."""
    pos = {v: tuple(Fraction(x) for x in coords[v]) for v in quiver.vertices}
    rotation = {}
    for v in quiver.vertices:
        darts = [(a, True) for a in quiver.arrows_from(v)] + [(a, False) for a in quiver.arrows_to(v)]
        def angle(d):
            w = _head(quiver, d)
            return math.atan2(float(pos[w][1] - pos[v][1]), float(pos[w][0] - pos[v][0])) % (2 * math.pi)
        rotation[v] = sorted(darts, key=lambda d: (angle(d), d))
    outer = None
    if quiver.arrows:
        def area(face):
            pts = [pos[_tail(quiver, d)] for d in face]
            return sum(p[0] * q[1] - q[0] * p[1] for p, q in zip(pts, pts[1:] + pts[:1]))
        faces = trace_faces(quiver, rotation)
        outer = min(faces, key=area)[0]
    return rotation, outer


class PlanarQP(object):
    """A QP with a planar rotation system; the potential is read off the faces.

    Args:
        quiver (Quiver): the quiver.
        rotation (dict): darts leaving each vertex, counterclockwise.
        outer (tuple): a dart of the outer face.
        coords (dict): optional vertex positions, kept for export only.
        name (str): optional label.
    """

    def __init__(self, quiver, rotation, outer, coords=None, name=None):
        self.rotation = {v: list(rotation.get(v, [])) for v in quiver.vertices}
        self.outer = tuple(outer) if outer is not None else None
        self.coords = coords
        self.qp = QP(quiver, faces_and_potential(quiver, self.rotation, self.outer), name=name)

    def __repr__(self):
        return f"Planar{self.qp!r}"

    @property
    def quiver(self):
        return self.qp.quiver

    @property
    def name(self):
        return self.qp.name

    def faces(self):
        return trace_faces(self.quiver, self.rotation)

    def outer_face(self):
        return _outer_face(self.faces(), self.outer) if self.quiver.arrows else []

    def bounded_faces(self):
        out = self.outer_face()
        return [f for f in self.faces() if f != out]

    def boundary_vertices(self):
        return {_tail(self.quiver, d) for d in self.outer_face()} or set(self.quiver.vertices)

    def boundary_arrows(self):
        return {d[0] for d in self.outer_face()}

    def is_interior(self, v):
        return v not in self.boundary_vertices()

    def degree(self, v):
        return len(self.rotation[v])

    def relabel(self, vmap=None, amap=None, name=None):
        """Rename vertices and/or arrows, keeping the embedding."""
        vmap, amap = vmap or {}, amap or {}
        v = lambda x: vmap.get(x, x)
        dart = lambda d: (amap.get(d[0], d[0]), d[1])
        rotation = {v(x): [dart(d) for d in ds] for x, ds in self.rotation.items()}
        coords = {v(x): xy for x, xy in self.coords.items()} if self.coords else None
        outer = dart(self.outer) if self.outer else None
        return PlanarQP(self.quiver.relabel(vmap, amap), rotation, outer, coords=coords, name=name or self.name)

    def to_dict(self):
        d = self.qp.to_dict()
        d["embedding"] = {
            "rotation": {v: [[a, "out" if f else "in"] for a, f in darts] for v, darts in self.rotation.items()},
            "outer": [self.outer[0], "out" if self.outer[1] else "in"] if self.outer else None,
        }
        if self.coords:
            d["coords"] = {v: [str(x) for x in xy] for v, xy in self.coords.items()}
        return d


def planar_qp(quiver, coords=None, rotation=None, outer=None, name=None):
    """PlanarQP from coordinates or from an explicit rotation system."""
    if rotation is None:
        if coords is None:
            raise MalformedQP("a planar QP needs coordinates or a rotation system")
        rotation, outer = rotation_from_coords(quiver, coords)
    return PlanarQP(quiver, rotation, outer, coords=coords, name=name)


def planar_from_dict(d):
    """PlanarQP from QP JSON carrying ``embedding`` and/or ``coords``.

    The potential is recomputed from the faces and must agree with a listed one.
    """
    qp = qp_from_dict(d)
    coords = d.get("coords")
    emb = d.get("embedding")
    try:
        if emb:
            rotation = {str(v): [(str(a), end == "out") for a, end in darts] for v, darts in emb["rotation"].items()}
            outer = (str(emb["outer"][0]), emb["outer"][1] == "out") if emb.get("outer") else None
            pqp = planar_qp(qp.quiver, coords=coords, rotation=rotation, outer=outer, name=qp.name)
        elif coords:
            coords = {str(v): xy for v, xy in coords.items()}
            pqp = planar_qp(qp.quiver, coords=coords, name=qp.name)
        else:
            raise MalformedQP("QP document has neither 'embedding' nor 'coords'")
    except (KeyError, TypeError, IndexError) as e:
        raise MalformedQP(f"malformed embedding: {e}") from None
    if d.get("potential") and qp.potential != pqp.qp.potential:
        raise EmbeddingMismatch("listed potential differs from the directed faces",
                                faces=[str(w) for w in pqp.qp.potential.terms],
                                cells=[str(w) for w in qp.potential.terms])
    return pqp


def signed_face_potential(pqp):
    """Clockwise faces with +1, counterclockwise faces with -1."""
    terms = {}
    for f in pqp.bounded_faces():
        c = face_cycle(f)
        if c is not None:
            terms[c] = -1 if f[0][1] else 1
    return Potential(terms)


class PlanarCertificate(Parsable):
    """Outcome of :py:func:`validate_planar`."""

    def __init__(self, name=None):
        self.name = name
        self.vertices = 0
        self.arrows = 0
        self.faces = 0
        self.cells = 0
        self.euler_characteristic = None
        self.disk = False


def validate_planar(pqp, potential=None):
    """Certify that the canvas is the closed region bounded by the outer face.

    `potential` defaults to the face potential; pass the potential of a given
    QP to check it against the embedding.

    Raises:
        NotPlanar: the rotation system is not planar.
        EmbeddingMismatch: some bounded face is not a 2-cell or some 2-cell
            is not a bounded face.
    """
    quiver = pqp.quiver
    check_rotation(quiver, pqp.rotation)
    faces = trace_faces(quiver, pqp.rotation)
    euler_check(quiver, faces)
    potential = pqp.qp.potential if potential is None else potential
    bounded = pqp.bounded_faces()
    cycles = [face_cycle(f) for f in bounded]
    holes = ["*".join(a for a, _ in f) for f, c in zip(bounded, cycles) if c is None or c not in potential.terms]
    extra = [str(w) for w in potential.terms if w not in set(cycles)]
    if holes or extra:
        raise EmbeddingMismatch(f"{len(holes)} faces without 2-cell, {len(extra)} 2-cells without face",
                                faces=holes, cells=extra)
    cert = PlanarCertificate(pqp.name)
    cert.vertices = len(quiver.vertices)
    cert.arrows = len(quiver.arrows)
    cert.faces = len(bounded)
    cert.cells = len(potential.terms)
    cert.euler_characteristic = cert.vertices - cert.arrows + cert.cells
    cert.disk = True
    return cert


### planar mutation


def is_planar_mutable(pqp, k):
    """Interior with exactly 4 arrows, or on the boundary with at most 4."""
    deg = pqp.degree(k)
    return deg == 4 if pqp.is_interior(k) else deg <= 4


def _insert(darts, anchor, new, after):
    i = darts.index(anchor)
    darts.insert(i + 1 if after else i, new)


def _face_of(faces):
    return {d: n for n, f in enumerate(faces) for d in f}


def planar_premutate(pqp, k):
    """Premutation at `k` carried out on the rotation system.

    Raises:
        NotPlanarMutable: `k` fails the degree conditions or some composite
            arrow has no face to run through.
    """
    if not is_planar_mutable(pqp, k):
        where = "interior" if pqp.is_interior(k) else "boundary"
        raise NotPlanarMutable(f"{where} vertex {k} has {pqp.degree(k)} arrows")
    quiver = pqp.quiver
    faces = pqp.faces()
    face_of = _face_of(faces)
    outer_index = face_of.get(pqp.outer)
    around = pqp.rotation[k]
    n = len(around)
    ins = [d[0] for d in around if not d[1]]
    outs = [d[0] for d in around if d[1]]
    rotation = {v: list(ds) for v, ds in pqp.rotation.items()}

    for a in ins:
        for b in outs:
            i, j = around.index((a, False)), around.index((b, True))
            sides = []
            if (i - 1) % n == j:
                sides.append(("cw", face_of[(b, True)]))
            if (i + 1) % n == j:
                sides.append(("ccw", face_of[(a, False)]))
            if not sides:
                raise NotPlanarMutable(f"arrows {a} and {b} are not adjacent at {k}")
            if len(sides) > 1:
                sides = [s for s in sides if s[1] != outer_index] or sides[:1]
            side = sides[0][0]
            x, y, c = quiver.src(a), quiver.tgt(b), composite(a, b)
            _insert(rotation[x], (a, True), (c, True), after=(side == "cw"))
            _insert(rotation[y], (b, False), (c, False), after=(side == "ccw"))

    renamed = {a: star(a) for a in ins + outs}
    rotation = {v: [(renamed[a], not f) if a in renamed else (a, f) for a, f in ds] for v, ds in rotation.items()}
    outer = _keep_outer(faces, outer_index, set(renamed), pqp.outer)
    new_qp = premutate(pqp.qp, k)
    return PlanarQP(new_qp.quiver, rotation, outer, name=pqp.name)


def _keep_outer(faces, outer_index, dropped, current):
    if outer_index is None:
        return current
    for d in faces[outer_index]:
        if d[0] not in dropped:
            return d
    raise NotPlanarMutable("the outer face runs only along arrows at the mutated vertex")


def planar_reduce(pqp):
    """Planar 2-reduction: drop both arrows of every bounded 2-gon face."""
    while True:
        out = pqp.outer_face()
        boundary = {d[0] for d in out}
        gon = None
        for f in pqp.bounded_faces():
            if len(f) == 2 and face_cycle(f) is not None and f[0][0] != f[1][0]:
                if not {f[0][0], f[1][0]} <= boundary:
                    gon = f
                    break
        if gon is None:
            return pqp
        drop = {gon[0][0], gon[1][0]}
        rotation = {v: [d for d in ds if d[0] not in drop] for v, ds in pqp.rotation.items()}
        outer = next((d for d in out if d[0] not in drop), None)
        quiver = pqp.quiver.without(drop)
        log.debug(f"planar 2-reduction drops {sorted(drop)}")
        pqp = PlanarQP(quiver, rotation, outer, name=pqp.name)


def planar_mutate(pqp, k, check=True):
    """μ_k as a planar QP.

    With `check`, the result must agree with :py:func:`~qpkit.mutation.mutate`
    up to isomorphism and rescaling of arrows.

    Raises:
        NotPlanarMutable: see :py:func:`planar_premutate`.
        InvariantViolation: the planar and the algebraic mutation disagree.
    """
    from .isomorphism import qp_isomorphic

    result = planar_reduce(planar_premutate(pqp, k))
    if check:
        expected = mutate(pqp.qp, k).qp
        if not qp_isomorphic(result.qp, expected, rescale=True):
            raise InvariantViolation(f"planar mutation at {k} differs from mutation of the potential")
    return result


def planar_orbit_mutate(pqp, sigma, k, check=True):
    """Planar mutation at every vertex of the σ-orbit of `k`.

    Raises:
        OrbitPreconditionViolated: two orbit vertices are joined by an arrow.
    """
    vertices = orbit(sigma, k)
    members = set(vertices)
    joined = [a.id for a in pqp.quiver.arrows.values() if a.src in members and a.tgt in members]
    if joined:
        raise OrbitPreconditionViolated(f"arrows {sorted(joined)} join vertices of the orbit {vertices}")
    for v in vertices:
        pqp = planar_mutate(pqp, v, check=check)
    return pqp
