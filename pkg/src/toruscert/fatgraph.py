"""Fat graphs as rotation systems on darts.

A fat graph is stored as a degree sequence plus a perfect matching of darts;
darts are numbered consecutively vertex by vertex and the rotation at each
vertex is the standard cyclic order of its darts (every fat graph can be
relabelled into this form, see :mod:`toruscert._kernel_py`).  Faces are orbits
of ``d -> rho[M[d]]``, and the derived closed orientable surface has Euler
characteristic ``V - E + F``.
"""
from __future__ import annotations

import random
from fractions import Fraction

from toruscert import _kernel_py
from toruscert.errors import NotCellular


class FatGraph:
    """An embedded graph given by a rotation system."""

    __slots__ = ("degrees", "matching", "_vert", "_rho", "_rho_inv", "_faces")

    def __init__(self, degrees, matching, check=True):
        self.degrees = tuple(degrees)
        self.matching = tuple(matching)
        self._vert, self._rho, self._rho_inv = _kernel_py.standard_rotation(self.degrees)
        self._faces = None
        if check:
            n = sum(self.degrees)
            if len(self.matching) != n:
                raise ValueError("matching length must equal the number of darts")
            for a, b in enumerate(self.matching):
                if not 0 <= b < n or b == a or self.matching[b] != a:
                    raise ValueError("matching must be a fixed-point-free involution")

    @classmethod
    def from_vertex_cycles(cls, cycles):
        """Build a fat graph from per-vertex cyclic edge-name sequences.

        Each name must occur exactly twice overall; the two occurrences are
        the two ends of one edge.

        >>> g = FatGraph.from_vertex_cycles([["a", "b", "a", "b"]])
        >>> g.num_vertices, g.num_edges, len(g.faces())
        (1, 2, 1)
        """
        degrees = tuple(len(c) for c in cycles)
        flat = [name for c in cycles for name in c]
        n = len(flat)
        where = {}
        matching = [-1] * n
        for d, name in enumerate(flat):
            if name in where:
                other = where.pop(name)
                matching[d] = other
                matching[other] = d
            else:
                where[name] = d
        if where:
            raise ValueError(f"unpaired edge names: {sorted(where)}")
        return cls(degrees, matching)

    # -- basic counts -----------------------------------------------------

    @property
    def num_vertices(self):
        return len(self.degrees)

    @property
    def num_darts(self):
        return len(self.matching)

    @property
    def num_edges(self):
        return len(self.matching) // 2

    def vertex_of(self, dart):
        return self._vert[dart]

    def rotation_next(self, dart):
        return self._rho[dart]

    def edge_darts(self):
        """Darts ``(a, b)`` with ``a < b``, one pair per edge, in order of a."""
        return tuple(
            (a, b) for a, b in enumerate(self.matching) if a < b
        )

    def edge_index_of_dart(self):
        """Map dart -> edge index, edges ordered as in :meth:`edge_darts`."""
        idx = {}
        out = [0] * self.num_darts
        for i, (a, b) in enumerate(self.edge_darts()):
            idx[a] = idx[b] = i
        for d in range(self.num_darts):
            out[d] = idx[d]
        return out

    def loop_edges(self):
        """Edge indices whose two ends share a vertex."""
        return tuple(
            i
            for i, (a, b) in enumerate(self.edge_darts())
            if self._vert[a] == self._vert[b]
        )

    def loops_at(self, vertex):
        return tuple(
            i
            for i, (a, b) in enumerate(self.edge_darts())
            if self._vert[a] == vertex and self._vert[b] == vertex
        )

    def endpoints(self, edge_index):
        a, b = self.edge_darts()[edge_index]
        return self._vert[a], self._vert[b]

    # -- faces and the derived surface ------------------------------------

    def faces(self):
        """Face orbits of the rotation system, each a tuple of darts.

        Every dart lies in exactly one face; the face size (number of edge
        sides) is the orbit length.
        """
        if self._faces is None:
            n = self.num_darts
            seen = [False] * n
            rho, M = self._rho, self.matching
            out = []
            for d0 in range(n):
                if seen[d0]:
                    continue
                face = []
                d = d0
                while not seen[d]:
                    seen[d] = True
                    face.append(d)
                    d = rho[M[d]]
                out.append(tuple(face))
            self._faces = tuple(out)
        return self._faces

    def face_sizes(self):
        return tuple(len(f) for f in self.faces())

    def euler_characteristic(self):
        """``V - E + F`` of the derived closed surface."""
        return self.num_vertices - self.num_edges + len(self.faces())

    def is_connected(self):
        nv = self.num_vertices
        if nv <= 1:
            return True
        adj = [set() for _ in range(nv)]
        for a, b in enumerate(self.matching):
            adj[self._vert[a]].add(self._vert[b])
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == nv

    def genus(self):
        """Genus of the derived surface; the graph must be connected."""
        if not self.is_connected():
            raise ValueError("genus is only defined for connected graphs")
        chi = self.euler_characteristic()
        return (2 - chi) // 2

    def require_torus(self):
        """Raise :class:`NotCellular` unless the derived surface is a torus."""
        if not self.is_connected() or self.euler_characteristic() != 0:
            raise NotCellular(
                f"derived surface is not a torus (chi={self.euler_characteristic()},"
                f" connected={self.is_connected()})"
            )

    # -- homology of edge cycles ------------------------------------------

    def _face_boundaries(self):
        """Integer boundary vectors of the faces in the edge basis."""
        edge_of = self.edge_index_of_dart()
        first_dart = {}
        for i, (a, b) in enumerate(self.edge_darts()):
            first_dart[i] = a
        rows = []
        for face in self.faces():
            row = [0] * self.num_edges
            for d in face:
                e = edge_of[d]
                row[e] += 1 if d == first_dart[e] else -1
            rows.append(row)
        return rows

    def cycle_is_null_homologous(self, cycle_vector):
        """Whether an integer edge cycle bounds in the derived surface.

        ``cycle_vector`` is a coefficient list over the edges (oriented from
        their lower dart).  The cycle must be closed; membership in the span
        of the face boundaries is decided by exact rational elimination,
        which is equivalent to integral membership here because the first
        homology of a closed orientable surface is torsion free.
        """
        rows = [
            [Fraction(x) for x in row] for row in self._face_boundaries()
        ]
        target = [Fraction(x) for x in cycle_vector]
        ncols = self.num_edges
        pivot_col = []
        reduced = []
        for row in rows:
            for prow, pcol in zip(reduced, pivot_col):
                if row[pcol]:
                    f = row[pcol] / prow[pcol]
                    row = [x - f * y for x, y in zip(row, prow)]
            for c in range(ncols):
                if row[c]:
                    reduced.append(row)
                    pivot_col.append(c)
                    break
        for prow, pcol in zip(reduced, pivot_col):
            if target[pcol]:
                f = target[pcol] / prow[pcol]
                target = [x - f * y for x, y in zip(target, prow)]
        return not any(target)

    def parallel_edge_pairs(self):
        """Pairs of distinct edges that are parallel in the derived surface.

        Two edges with the same endpoints are parallel when the closed curve
        formed by one followed by the reverse of the other bounds, i.e. the
        cycle ``e - e'`` (with compatible orientations) is null homologous.
        """
        darts = self.edge_darts()
        out = []
        for i in range(len(darts)):
            for j in range(i + 1, len(darts)):
                ai, bi = darts[i]
                aj, bj = darts[j]
                vi = (self._vert[ai], self._vert[bi])
                vj = (self._vert[aj], self._vert[bj])
                if vi == vj:
                    sign = 1
                elif vi == (vj[1], vj[0]):
                    sign = -1
                else:
                    continue
                vec = [0] * self.num_edges
                vec[i] = 1
                vec[j] = -sign
                if self.cycle_is_null_homologous(vec):
                    out.append((i, j))
        return tuple(out)

    def trivial_loops(self):
        """Loop edges that bound a disk in the derived surface."""
        out = []
        for i in self.loop_edges():
            vec = [0] * self.num_edges
            vec[i] = 1
            if self.cycle_is_null_homologous(vec):
                out.append(i)
        return tuple(out)

    def is_reduced(self):
        """No monogon or bigon faces, no parallel pair, no trivial loop."""
        if any(len(f) < 3 for f in self.faces()):
            return False
        return not self.parallel_edge_pairs() and not self.trivial_loops()

    # -- reduction and expansion ------------------------------------------

    def amalgamate_parallel(self):
        """Amalgamate maximal bigon-parallel families into single edges.

        Returns ``(reduced graph, families)`` where ``families`` maps each
        edge index of the reduced graph to the tuple of source edge indices
        it absorbed (in member order along the band).  Families are read off
        the bigon faces: consecutive parallel edges cobound bigons, so the
        transitive closure of the bigon relation groups each maximal family.
        """
        edge_of = self.edge_index_of_dart()
        parent = list(range(self.num_edges))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for face in self.faces():
            if len(face) == 2:
                e1, e2 = edge_of[face[0]], edge_of[face[1]]
                if e1 != e2:
                    parent[find(e1)] = find(e2)
        classes = {}
        for e in range(self.num_edges):
            classes.setdefault(find(e), []).append(e)

        darts = self.edge_darts()
        keep = {}
        for members in classes.values():
            members = self._order_family(members)
            keep[members[0]] = tuple(members)

        kept_darts = set()
        for e in keep:
            kept_darts.update(darts[e])
        new_id = {}
        new_cycles = []
        base = 0
        for v, deg in enumerate(self.degrees):
            cyc = []
            for k in range(deg):
                d = base + k
                if d in kept_darts:
                    new_id[d] = (v, len(cyc))
                    cyc.append(d)
            base += deg
            new_cycles.append(cyc)
        new_degrees = tuple(len(c) for c in new_cycles)
        offsets = []
        acc = 0
        for deg in new_degrees:
            offsets.append(acc)
            acc += deg
        new_matching = [-1] * acc
        for e in keep:
            a, b = darts[e]
            va, ka = new_id[a]
            vb, kb = new_id[b]
            na, nb = offsets[va] + ka, offsets[vb] + kb
            new_matching[na] = nb
            new_matching[nb] = na
        reduced = FatGraph(new_degrees, new_matching)
        # dart renumbering is monotone, so reduced edge i is the i-th kept
        # edge in original dart order
        families = {}
        kept_sorted = sorted(keep, key=lambda e: min(darts[e]))
        for i, e in enumerate(kept_sorted):
            families[i] = keep[e]
        return reduced, families

    def _order_family(self, members):
        """Order the edges of one parallel class along its band of bigons."""
        if len(members) == 1:
            return members
        edge_of = self.edge_index_of_dart()
        neighbors = {e: [] for e in members}
        mset = set(members)
        for face in self.faces():
            if len(face) == 2:
                e1, e2 = edge_of[face[0]], edge_of[face[1]]
                if e1 in mset and e2 in mset and e1 != e2:
                    neighbors[e1].append(e2)
                    neighbors[e2].append(e1)
        ends = [e for e in members if len(neighbors[e]) == 1]
        if not ends:
            # cyclic band (a sphere chain); break at the smallest member
            start = min(members)
        else:
            start = min(ends)
        order = [start]
        prev = None
        cur = start
        while len(order) < len(members):
            nxts = [x for x in neighbors[cur] if x != prev]
            if not nxts:
                break
            prev, cur = cur, nxts[0]
            order.append(cur)
        if len(order) != len(members):
            raise ValueError("parallel family is not a single band")
        return order

    def expand_edges(self, size):
        """Blow every edge up into ``size`` parallel members.

        Returns ``(graph, blocks)`` where ``blocks[d]`` lists the member
        darts replacing dart ``d``, in rotation order.  Members are paired in
        reverse across the two ends, which is what makes consecutive members
        cobound bigons.
        """
        t = int(size)
        if t < 1:
            raise ValueError("size must be >= 1")
        new_degrees = tuple(d * t for d in self.degrees)
        base_old = []
        acc = 0
        for d in self.degrees:
            base_old.append(acc)
            acc += d
        base_new = []
        acc = 0
        for d in new_degrees:
            base_new.append(acc)
            acc += d
        blocks = {}
        for d in range(self.num_darts):
            v = self._vert[d]
            pos = d - base_old[v]
            start = base_new[v] + pos * t
            blocks[d] = tuple(range(start, start + t))
        new_matching = [-1] * (self.num_darts * t)
        for a, b in self.edge_darts():
            for k in range(t):
                x = blocks[a][k]
                y = blocks[b][t - 1 - k]
                new_matching[x] = y
                new_matching[y] = x
        return FatGraph(new_degrees, new_matching), blocks

    # -- canonical form ----------------------------------------------------

    def canonical_key(self):
        """Canonical key, equal for graphs related by vertex relabelling,
        rotation of the cyclic orders, or global reflection."""
        return _kernel_py.canonical_code(self.degrees, self.matching)

    def relabelled(self, vertex_order=None, rotations=None, reflect=False):
        """A combinatorially equal graph with permuted labels.

        ``vertex_order`` permutes vertices, ``rotations[v]`` rotates the dart
        cycle at vertex ``v``, and ``reflect`` mirrors all rotations.  Used by
        the canonical-form tests.
        """
        nv = self.num_vertices
        vertex_order = list(vertex_order) if vertex_order else list(range(nv))
        rotations = list(rotations) if rotations else [0] * nv
        base_old = []
        acc = 0
        for d in self.degrees:
            base_old.append(acc)
            acc += d
        new_degrees = tuple(self.degrees[v] for v in vertex_order)
        base_new = []
        acc = 0
        for d in new_degrees:
            base_new.append(acc)
            acc += d
        old_to_new = {}
        for new_v, old_v in enumerate(vertex_order):
            deg = self.degrees[old_v]
            for k in range(deg):
                kk = (k + rotations[new_v]) % deg
                if reflect:
                    kk = (deg - kk) % deg
                old_to_new[base_old[old_v] + k] = base_new[new_v] + kk
        new_matching = [-1] * self.num_darts
        for a, b in enumerate(self.matching):
            new_matching[old_to_new[a]] = old_to_new[b]
        return FatGraph(new_degrees, new_matching)

    def __eq__(self, other):
        return (
            isinstance(other, FatGraph)
            and self.degrees == other.degrees
            and self.matching == other.matching
        )

    def __hash__(self):
        return hash((self.degrees, self.matching))

    def __repr__(self):
        return f"FatGraph(degrees={self.degrees}, matching={self.matching})"


def random_fat_graph(rng: random.Random, max_vertices=4, max_degree=8):
    """A uniformly sloppy random rotation system (no surface constraints)."""
    nv = rng.randint(1, max_vertices)
    while True:
        degrees = [rng.randint(1, max_degree) for _ in range(nv)]
        if sum(degrees) % 2 == 0 and sum(degrees) > 0:
            break
    n = sum(degrees)
    darts = list(range(n))
    rng.shuffle(darts)
    matching = [-1] * n
    for i in range(0, n, 2):
        a, b = darts[i], darts[i + 1]
        matching[a] = b
        matching[b] = a
    return FatGraph(degrees, matching)
