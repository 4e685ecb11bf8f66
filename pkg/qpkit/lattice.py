# qpkit.lattice


"""Cut-mutation and planar mutation lattices.

A LatticeGraph is an undirected graph whose nodes are canonical forms (cuts
as arrow sets, QPs as canonical signatures) and whose edges are labelled with
the mutation that joins them. Exploration is breadth first and each layer is
expanded in canonical order, so exports are byte stable for a given seed.
"""


import itertools
import json
import logging
log = logging.getLogger(__name__)

import networkx as nx

from .errors import (NotPlanarMutable, OrbitPreconditionViolated, TwoCycleAtVertex, SizeBoundExceeded,
                     UndeterminedDimension, InvariantViolation)
from .config import DEFAULTS
from .object import Parsable
from .cuts import (enumerate_cuts, format_cut, strict_sources, strict_sinks, _plus, _minus,
                   is_fully_compatible, has_enough_cuts)
from .mutation import orbit


class LatticeGraph(Parsable):
    """Nodes, labelled edges and provenance of a mutation lattice.

    Args:
        kind (str): ``"cut"`` or ``"planar"``.
        seed (str): name of the QP the exploration started from.
    """

    def __init__(self, kind="cut", seed=None):
        self.kind = kind
        self.seed = seed
        self.nodes = []
        self.edges = []
        self.complete = True
        self._graph = nx.Graph()
        self._payload = {}

    def __eq__(self, other):
        return isinstance(other, LatticeGraph) and self.get_dict() == other.get_dict()

    def __len__(self):
        return len(self.nodes)

    def add_node(self, key, label=None, payload=None):
        if key in self._graph:
            return False
        self._graph.add_node(key)
        self.nodes.append({"id": key, "label": label or key})
        self._payload[key] = payload
        return True

    def add_edge(self, u, v, move):
        if u == v or self._graph.has_edge(u, v):
            return False
        self._graph.add_edge(u, v, move=move)
        self.edges.append({"source": u, "target": v, "move": move})
        return True

    def payload(self, key):
        return self._payload.get(key)

    @property
    def graph(self):
        return self._graph

    def node_ids(self):
        return [n["id"] for n in self.nodes]

    def is_connected(self):
        return not self.nodes or nx.is_connected(self._graph)

    def components(self):
        return [sorted(c) for c in nx.connected_components(self._graph)]

    def path(self, u, v):
        """Moves along a shortest path from `u` to `v`, or None."""
        try:
            nodes = nx.shortest_path(self._graph, u, v)
        except nx.NetworkXNoPath:
            return None
        return [self._graph[x][y]["move"] for x, y in zip(nodes, nodes[1:])]


### cut lattice


def cut_lattice(qp, selfinjective=None, degree_bound=None, isomorphism_classes=False):
    """All cuts of `qp` joined by cut-mutations at strict sources and sinks.

    With `isomorphism_classes` a node stands for all cuts mapped onto each
    other by automorphisms of the quiver preserving the terms of W; it is
    named after the first such cut in enumeration order.

    A disconnected lattice of a fully compatible QP with enough cuts is
    checked against selfinjectivity; `selfinjective` skips that computation
    when already known.

    Raises:
        InvariantViolation: the lattice of a selfinjective, fully compatible
            QP with enough cuts is disconnected.
    """
    lattice = LatticeGraph("cut", qp.name)
    cuts = enumerate_cuts(qp)
    node = {c: c for c in cuts}
    if isomorphism_classes:
        from .isomorphism import cut_canonical_form
        first = {}
        for c in cuts:
            node[c] = first.setdefault(cut_canonical_form(qp, c), c)
        log.info(f"{len(cuts)} cuts of {qp.name or 'QP'} in {len(first)} isomorphism classes")
    seeds = [c for c in cuts if node[c] == c]
    for c in seeds:
        lattice.add_node(format_cut(c), payload=c)
    for c in seeds:
        for x in strict_sources(qp.quiver, c):
            d = _plus(qp.quiver, c, x)
            if d in node:
                lattice.add_edge(format_cut(c), format_cut(node[d]), f"+{x}")
            else:
                log.debug(f"μ⁺_{x}{format_cut(c)} uses arrows outside the potential")
        for x in strict_sinks(qp.quiver, c):
            d = _minus(qp.quiver, c, x)
            if d in node:
                lattice.add_edge(format_cut(c), format_cut(node[d]), f"-{x}")
    if not lattice.is_connected():
        log.info(f"cut lattice of {qp.name or 'QP'} has {len(lattice.components())} components")
        if is_fully_compatible(qp) and has_enough_cuts(qp):
            if selfinjective is None:
                selfinjective = _selfinjective(qp, degree_bound)
            if selfinjective:
                raise InvariantViolation(f"cut lattice of the selfinjective QP {qp.name} is disconnected")
    return lattice


def _selfinjective(qp, degree_bound):
    from .selfinjective import is_selfinjective
    try:
        return is_selfinjective(qp, degree_bound).selfinjective
    except UndeterminedDimension as e:
        log.warning(f"selfinjectivity undetermined: {e}")
        return None


### planar mutation lattice


def _label(qp):
    return f"{len(qp.vertices)}v{len(qp.arrows)}a{len(qp.potential.terms)}c"


def _sigma_orbits(sigma, vertices):
    seen, out = set(), []
    for v in vertices:
        if v not in seen:
            o = orbit(sigma, v)
            seen.update(o)
            out.append(o)
    return out


def planar_mutation_lattice(pqp, size_bound=None, unrestricted=False, degree_bound=None, check=True):
    """Breadth first exploration of the planar mutation class of `pqp`.

    By default every node is verified selfinjective and mutated at each full
    orbit of its Nakayama permutation. With `unrestricted`, single vertex
    planar mutations are used and selfinjectivity is not computed.

    Raises:
        SizeBoundExceeded: more than `size_bound` nodes; ``partial`` holds
            the lattice found so far, flagged incomplete.
        InvariantViolation: a node reached from a selfinjective seed is not
            selfinjective.
    """
    from .isomorphism import qp_canonical_form, qp_signature
    from .planar import planar_mutate, planar_orbit_mutate
    from .selfinjective import is_selfinjective

    bound = size_bound or DEFAULTS["lattice_size_bound"]
    lattice = LatticeGraph("planar", pqp.name)
    forms = {}
    found = set()

    def visit(node):
        form = qp_canonical_form(node.qp)
        new = form not in forms
        if new:
            forms[form] = qp_signature(node.qp)
            lattice.add_node(forms[form], _label(node.qp), node)
        return forms[form], form, new

    frontier = [visit(pqp)[0]]
    while frontier:
        layer = []
        for key in frontier:
            node = lattice.payload(key)
            if unrestricted:
                moves = [[v] for v in node.quiver.vertices]
                sigma = None
            else:
                report = is_selfinjective(node.qp, degree_bound)
                if not report.selfinjective:
                    raise InvariantViolation(f"lattice node {key} is not selfinjective")
                sigma = report.nakayama
                moves = _sigma_orbits(sigma, node.quiver.vertices)
            for move in moves:
                try:
                    if unrestricted:
                        image = planar_mutate(node, move[0], check=check)
                    else:
                        image = planar_orbit_mutate(node, sigma, move[0], check=check)
                except (NotPlanarMutable, OrbitPreconditionViolated, TwoCycleAtVertex) as e:
                    log.debug(f"{key}: no mutation at {move}: {e}")
                    continue
                target, form, new = visit(image)
                found.add((key, target))
                lattice.add_edge(key, target, "μ(" + ",".join(move) + ")")
                if new:
                    layer.append((form, target))
                if len(lattice) > bound:
                    lattice.complete = False
                    raise SizeBoundExceeded(f"planar mutation lattice exceeds {bound} nodes", partial=lattice)
        frontier = [t for _, t in sorted(layer)]
        log.info(f"planar lattice of {pqp.name or 'QP'}: {len(lattice)} nodes, {len(frontier)} new")
    one_way = [(u, v) for u, v in found if u != v and (v, u) not in found]
    if one_way:
        log.warning(f"{len(one_way)} mutations were not found in reverse, e.g. {one_way[0]}")
    return lattice


### transitivity


class TransitivityReport(Parsable):
    """Outcome of :py:func:`transitivity_report`."""

    def __init__(self, name=None):
        self.name = name
        self.selfinjective = None
        self.fully_compatible = None
        self.enough_cuts = None
        self.hypotheses_met = False
        self.cuts = []
        self.paths = {}
        self.conclusion = "hypotheses not met, no claim"


def transitivity_report(qp, degree_bound=None):
    """Check that all cuts are joined by cut-mutations under the standing hypotheses.

    When the QP is selfinjective, fully compatible and has enough cuts, every
    pair of cuts gets an explicit cut-mutation path. Each step is a 2-APR
    tilt of truncated Jacobian algebras, so all of them are derived equivalent.

    Raises:
        InvariantViolation: the hypotheses hold but some pair is not joined.
    """
    report = TransitivityReport(qp.name)
    report.selfinjective = _selfinjective(qp, degree_bound)
    report.fully_compatible = is_fully_compatible(qp)
    report.enough_cuts = has_enough_cuts(qp)
    report.cuts = [format_cut(c) for c in enumerate_cuts(qp)]
    report.hypotheses_met = bool(report.selfinjective and report.fully_compatible and report.enough_cuts)
    if not report.hypotheses_met:
        log.info(f"{qp.name or 'QP'}: hypotheses not met")
        return report
    lattice = cut_lattice(qp, selfinjective=True)
    for u, v in itertools.combinations(report.cuts, 2):
        moves = lattice.path(u, v)
        if moves is None:
            raise InvariantViolation(f"cuts {u} and {v} are not joined by cut-mutations")
        report.paths[f"{u} -> {v}"] = moves
    report.conclusion = ("all truncated Jacobian algebras are iterated 2-APR tilts of each other "
                         "and hence derived equivalent")
    return report


### export


def _quote(text):
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(lattice, name="lattice"):
    lines = [f"graph {name} {{"]
    lines += [f"  {_quote(n['id'])} [label={_quote(n['label'])}];" for n in lattice.nodes]
    lines += [f"  {_quote(e['source'])} -- {_quote(e['target'])} [label={_quote(e['move'])}];"
              for e in lattice.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(lattice):
    return json.dumps(lattice.get_dict(), indent=2, sort_keys=True) + "\n"


def lattice_from_json(text):
    d = json.loads(text)
    lattice = LatticeGraph(d.get("kind", "cut"), d.get("seed"))
    for n in d.get("nodes", []):
        lattice.add_node(n["id"], n.get("label"))
    for e in d.get("edges", []):
        lattice.add_edge(e["source"], e["target"], e["move"])
    lattice.complete = d.get("complete", True)
    return lattice
