"""Labeled embedded graphs: fat vertices with endpoint labels, signed edges.

This is the member-level view of an intersection graph: every vertex is a
boundary circle carrying ``delta * n_opposite`` endpoint slots in rotation
order, each slot labelled by the opposite boundary circle met there.  Around
every vertex the labels advance by a constant step of +1 or -1 mod
``n_opposite`` (the opposite circles are parallel and coherently oriented, so
a traversal of the vertex circle meets them periodically); the step direction
is the vertex parity.  Edge signs are parity products, which makes every loop
edge positive.
"""
from __future__ import annotations

from dataclasses import dataclass

from toruscert.errors import (
    LabelBlockViolation,
    NotCellular,
    ParityContradiction,
    SlotCollision,
)
from toruscert.fatgraph import FatGraph


@dataclass(frozen=True)
class EdgeEnd:
    vertex: int
    slot: int
    label: int


@dataclass(frozen=True)
class Edge:
    end_a: EdgeEnd
    end_b: EdgeEnd
    sign: int
    family: int | None = None

    @property
    def is_loop(self):
        return self.end_a.vertex == self.end_b.vertex

    @property
    def labels(self):
        return (self.end_a.label, self.end_b.label)


@dataclass(frozen=True)
class FatVertex:
    id: int
    parity: int
    labels: tuple[int, ...]  # endpoint labels in rotation (slot) order

    @property
    def degree(self):
        return len(self.labels)


@dataclass(frozen=True)
class Face:
    """A face of the embedding: edge sides alternating with vertex corners.

    ``sides[i]`` is ``(edge_index, direction)`` with direction 0 when the
    side runs from ``end_a`` to ``end_b``; ``corners[i]`` is ``(vertex,
    (label_from, label_to))`` for the corner crossed right after side ``i``.
    A disk n-face has n sides and n corners.
    """

    sides: tuple
    corners: tuple

    def __len__(self):
        return len(self.sides)

    @property
    def corner_labels(self):
        return tuple(lab for _, lab in self.corners)


@dataclass(frozen=True)
class ParallelFamily:
    """A maximal family of parallel, consecutive, same-sign edges.

    ``label_seq_a[k]`` and ``label_seq_b[k]`` are the endpoint labels of the
    k-th member at the two ends of the band; both sequences are consecutive
    runs mod the opposite vertex count.
    """

    index: int
    size: int
    sign: int
    endpoints: tuple[int, int]
    label_seq_a: tuple[int, ...]
    label_seq_b: tuple[int, ...]

    @property
    def is_loop(self):
        return self.endpoints[0] == self.endpoints[1]


class EmbeddedGraph:
    """A validated labeled fat graph; see :func:`build_graph`."""

    def __init__(self, vertices, edges, delta, n_opposite, fat):
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self.delta = delta
        self.n_opposite = n_opposite
        self.fat = fat

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_edges(self):
        return len(self.edges)

    def __repr__(self):
        return (
            f"<EmbeddedGraph V={self.num_vertices} E={self.num_edges}"
            f" delta={self.delta} n_opposite={self.n_opposite}>"
        )


def _label_step(labels, n):
    """Constant cyclic step of a label sequence, or None if not constant."""
    if n == 1:
        return 1 if all(x == 1 for x in labels) else None
    steps = set()
    m = len(labels)
    for k in range(m):
        steps.add((labels[(k + 1) % m] - labels[k]) % n)
    if len(steps) != 1:
        return None
    step = steps.pop()
    if step == 1 % n:
        return 1
    if step == (-1) % n:
        return -1
    return None


def _run_step(labels, n):
    """Constant non-cyclic step (+1 or -1 mod n) of a label run, or None."""
    if n == 1:
        return 1
    steps = {(labels[k + 1] - labels[k]) % n for k in range(len(labels) - 1)}
    if len(steps) != 1:
        return None
    step = steps.pop()
    if step == 1 % n:
        return 1
    if step == (-1) % n:
        return -1
    return None


def build_graph(parities, edge_specs, params=None, side="S", *, delta=None, n_opposite=None):
    """Validate and assemble an :class:`EmbeddedGraph`.

    ``parities`` lists the vertex parities (+1 or -1).  Each edge spec is
    ``((v1, slot1, label1), (v2, slot2, label2))`` or the same with a trailing
    sign; labels are 1-based in ``1..n_opposite``.  The distance and opposite
    count come either from ``params`` (a :class:`toruscert.params.CaseParams`,
    read for side ``"S"`` or ``"T"``) or from the keyword arguments.

    Raises :class:`SlotCollision` when the slots of a vertex are not covered
    exactly once, :class:`LabelBlockViolation` when a vertex label cycle is
    not a periodic +-1 run (equivalently, when it does not consist of
    ``delta`` consecutive blocks), and :class:`ParityContradiction` when a
    given sign differs from the parity product.
    """
    if params is not None:
        delta = params.delta
        n_opposite = params.t if side == "S" else params.s
        expected_vertices = params.s if side == "S" else params.t
        if len(parities) != expected_vertices:
            raise ValueError(
                f"side {side} expects {expected_vertices} vertices, got {len(parities)}"
            )
    if delta is None or n_opposite is None:
        raise ValueError("delta and n_opposite are required")
    parities = tuple(parities)
    if any(p not in (1, -1) for p in parities):
        raise ValueError("parities must be +1 or -1")
    nv = len(parities)
    deg = delta * n_opposite

    slot_label = [[None] * deg for _ in range(nv)]
    ends_seen = set()
    normalized = []
    for spec in edge_specs:
        if len(spec) == 3:
            ea, eb, sign = spec
        else:
            ea, eb = spec
            sign = None
        ea = EdgeEnd(*ea)
        eb = EdgeEnd(*eb)
        for end in (ea, eb):
            if not 0 <= end.vertex < nv:
                raise ValueError(f"vertex {end.vertex} out of range")
            if not 0 <= end.slot < deg:
                raise SlotCollision(
                    f"slot {end.slot} out of range 0..{deg - 1} at vertex {end.vertex}"
                )
            if not 1 <= end.label <= n_opposite:
                raise ValueError(f"label {end.label} out of range 1..{n_opposite}")
            if (end.vertex, end.slot) in ends_seen:
                raise SlotCollision(f"slot {end.slot} of vertex {end.vertex} used twice")
            ends_seen.add((end.vertex, end.slot))
            slot_label[end.vertex][end.slot] = end.label
        expected = parities[ea.vertex] * parities[eb.vertex]
        if sign is None:
            sign = expected
        elif sign != expected:
            raise ParityContradiction(
                f"edge {(ea, eb)} has sign {sign}, parity classes force {expected}"
            )
        normalized.append(Edge(ea, eb, sign))

    if len(ends_seen) != nv * deg:
        missing = [
            (v, k) for v in range(nv) for k in range(deg) if slot_label[v][k] is None
        ]
        raise SlotCollision(f"unused endpoint slots: {missing[:4]}...")

    for v in range(nv):
        if _label_step(slot_label[v], n_opposite) is None:
            raise LabelBlockViolation(
                f"label cycle at vertex {v} is not {delta} consecutive blocks:"
                f" {slot_label[v]}"
            )

    matching = [-1] * (nv * deg)
    for e in normalized:
        a = e.end_a.vertex * deg + e.end_a.slot
        b = e.end_b.vertex * deg + e.end_b.slot
        matching[a] = b
        matching[b] = a
    fat = FatGraph([deg] * nv, matching)
    vertices = tuple(
        FatVertex(v, parities[v], tuple(slot_label[v])) for v in range(nv)
    )
    return EmbeddedGraph(vertices, tuple(normalized), delta, n_opposite, fat)


def trace_faces(g: EmbeddedGraph):
    """Faces of the embedding, with edge sides and labeled corners.

    Every edge side appears in exactly one face, so the face sizes sum to
    twice the edge count.
    """
    deg = g.delta * g.n_opposite
    edge_of = {}
    for i, e in enumerate(g.edges):
        edge_of[e.end_a.vertex * deg + e.end_a.slot] = (i, 0)
        edge_of[e.end_b.vertex * deg + e.end_b.slot] = (i, 1)
    out = []
    for orbit in g.fat.faces():
        sides = []
        corners = []
        for d in orbit:
            sides.append(edge_of[d])
            m = g.fat.matching[d]
            nxt = g.fat.rotation_next(m)
            v = g.fat.vertex_of(m)
            lab_from = g.vertices[v].labels[m - v * deg]
            lab_to = g.vertices[v].labels[nxt - v * deg]
            corners.append((v, (lab_from, lab_to)))
        out.append(Face(tuple(sides), tuple(corners)))
    return tuple(out)


def euler_characteristic(g: EmbeddedGraph):
    """``V - E + F`` of the derived surface."""
    return g.fat.euler_characteristic()


def assert_cellular_torus(g):
    """Raise :class:`NotCellular` unless the derived surface is a torus."""
    fat = g.fat if isinstance(g, EmbeddedGraph) else g
    if not fat.is_connected() or fat.euler_characteristic() != 0:
        raise NotCellular(
            f"derived surface has chi={fat.euler_characteristic()},"
            f" connected={fat.is_connected()}; expected a torus"
        )


@dataclass(frozen=True)
class ReducedGraph:
    """Result of amalgamating parallel families: a reduced fat graph whose
    edge ``i`` carries ``families[i]``."""

    graph: FatGraph
    parities: tuple
    families: tuple
    delta: int
    n_opposite: int

    def family_sizes(self):
        return tuple(f.size for f in self.families)


def reduce_graph(g: EmbeddedGraph) -> ReducedGraph:
    """Amalgamate every maximal parallel family into a single edge.

    The output graph has no two parallel edges; each of its edges carries the
    size and the member label sequences of its source family.
    """
    reduced_fat, fam_members = g.fat.amalgamate_parallel()
    deg = g.delta * g.n_opposite
    darts = g.fat.edge_darts()
    families = []
    for i in sorted(fam_members):
        members = fam_members[i]
        rep = g.edges[members[0]]
        signs = {g.edges[m].sign for m in members}
        if len(signs) != 1:
            raise ParityContradiction(f"family {i} mixes signs {signs}")
        u, v = rep.end_a.vertex, rep.end_b.vertex
        # align member ends: side a holds the ends in the block containing
        # the representative's end_a slot
        a_dart = rep.end_a.vertex * deg + rep.end_a.slot
        block_a = _block_darts(g, members, a_dart)
        seq_a, seq_b = [], []
        for m in members:
            e = g.edges[m]
            da = e.end_a.vertex * deg + e.end_a.slot
            if da in block_a:
                seq_a.append(e.end_a.label)
                seq_b.append(e.end_b.label)
            else:
                seq_a.append(e.end_b.label)
                seq_b.append(e.end_a.label)
        for seq in (seq_a, seq_b):
            if len(seq) > 1 and _run_step(seq, g.n_opposite) is None:
                raise LabelBlockViolation(
                    f"family {i} label sequence {seq} is not a consecutive run"
                )
        families.append(
            ParallelFamily(
                index=i,
                size=len(members),
                sign=signs.pop(),
                endpoints=(u, v),
                label_seq_a=tuple(seq_a),
                label_seq_b=tuple(seq_b),
            )
        )
    parities = tuple(v.parity for v in g.vertices)
    return ReducedGraph(
        graph=reduced_fat,
        parities=parities,
        families=tuple(families),
        delta=g.delta,
        n_opposite=g.n_opposite,
    )


def _block_darts(g: EmbeddedGraph, members, seed_dart):
    """Darts of the family ``members`` in the same consecutive block as
    ``seed_dart`` at its vertex.

    A block contains one dart per member.  For a loop family whose two blocks
    happen to be adjacent in the rotation, the one-dart-per-member rule is
    what stops the walk at the junction.
    """
    deg = g.delta * g.n_opposite
    member_of_dart = {}
    for m in members:
        e = g.edges[m]
        member_of_dart[e.end_a.vertex * deg + e.end_a.slot] = m
        member_of_dart[e.end_b.vertex * deg + e.end_b.slot] = m
    v = seed_dart // deg
    base = v * deg
    block = {seed_dart}
    covered = {member_of_dart[seed_dart]}
    for step in (1, -1):
        k = seed_dart - base
        while len(block) < len(members):
            k2 = (k + step) % deg
            d2 = base + k2
            m2 = member_of_dart.get(d2)
            if m2 is None or m2 in covered:
                break
            block.add(d2)
            covered.add(m2)
            k = k2
    return block


def canonical_form(g):
    """Canonical key of the underlying rotation system (labels ignored)."""
    if isinstance(g, EmbeddedGraph):
        return g.fat.canonical_key()
    if isinstance(g, ReducedGraph):
        return g.graph.canonical_key()
    return g.canonical_key()


def expand_decorated(reduced: FatGraph, size, parities, offsets, delta=None):
    """Materialize the member-level labeled graph of a decorated reduced graph.

    Every edge of ``reduced`` becomes a band of ``size`` parallel members.
    Vertex ``v`` reads its endpoint labels as the arithmetic progression
    ``offsets[v] + parity * slot`` (mod ``size``, 1-based), so each rotation
    position of the reduced graph turns into one consecutive label block.
    The inverse of :func:`reduce_graph` on the graphs this engine enumerates.
    """
    t = int(size)
    degs = set(reduced.degrees)
    if len(degs) != 1:
        raise ValueError("expand_decorated requires a regular reduced graph")
    deg = degs.pop()
    if delta is None:
        delta = deg
    if delta != deg:
        raise ValueError("delta must equal the reduced degree")
    expanded, blocks = reduced.expand_edges(t)

    def label(vertex, slot):
        return (offsets[vertex] + parities[vertex] * slot) % t + 1

    edge_specs = []
    for a, b in reduced.edge_darts():
        va, vb = reduced.vertex_of(a), reduced.vertex_of(b)
        for k in range(t):
            da = blocks[a][k]
            db = blocks[b][t - 1 - k]
            sa = da - va * deg * t
            sb = db - vb * deg * t
            edge_specs.append(
                ((va, sa, label(va, sa)), (vb, sb, label(vb, sb)))
            )
    return build_graph(parities, edge_specs, delta=delta, n_opposite=t)
