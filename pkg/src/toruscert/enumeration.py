"""Exhaustive enumeration of reduced cellular torus graphs.

The kernel enumerates dart matchings over standard rotations per degree
sequence (see :mod:`toruscert.kernel`); this module drives it over degree
sequences, applies the reducedness filters that need exact homology (no
parallel pair, no trivial loop), deduplicates by canonical key and optionally
partitions the search across worker processes.  A pruning-free brute-force
generator doubles as the completeness oracle at small scale.
"""
from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

from toruscert import _kernel_py, kernel
from toruscert.errors import ScaleLimit
from toruscert.fatgraph import FatGraph
from toruscert.params import max_s


@dataclass(frozen=True)
class GraphClass:
    """One canonical class of embedded graphs."""

    degrees: tuple
    matching: tuple
    key: bytes

    def graph(self) -> FatGraph:
        return FatGraph(self.degrees, self.matching)

    @property
    def num_edges(self):
        return len(self.matching) // 2


def degree_sequences(num_vertices, num_edges):
    """Non-increasing degree sequences with the given vertex and edge count."""
    total = 2 * num_edges

    def parts(remaining, slots, cap):
        if slots == 1:
            if 1 <= remaining <= cap:
                yield (remaining,)
            return
        for first in range(min(cap, remaining - (slots - 1)), 0, -1):
            for rest in parts(remaining - first, slots - 1, first):
                yield (first,) + rest

    return list(parts(total, num_vertices, total))


def _search_task(args):
    degrees, triangles_only, min_face, first = args
    return kernel.search_matchings(
        degrees,
        triangles_only=triangles_only,
        min_face=min_face,
        require_torus=True,
        require_connected=True,
        first_partner=first,
    )


def _merge(dicts):
    out = {}
    for d in dicts:
        for key, matching in d.items():
            prev = out.get(key)
            if prev is None or matching < prev:
                out[key] = matching
    return out


def _search(degrees, triangles_only, min_face, workers):
    if workers <= 1:
        return _search_task((degrees, triangles_only, min_face, -1))
    n = sum(degrees)
    tasks = [
        (degrees, triangles_only, min_face, b) for b in range(1, n)
    ]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(workers) as pool:
        results = pool.map(_search_task, tasks)
    return _merge(results)


def enumerate_reduced_torus_graphs(
    num_vertices,
    *,
    degrees=None,
    max_edges=None,
    triangles_only=False,
    loop_edges_per_vertex=None,
    workers=1,
):
    """One representative per canonical class of reduced cellular torus graphs.

    With ``degrees`` the enumeration is restricted to that degree sequence;
    otherwise all sequences with at most ``max_edges`` edges are swept (the
    cap defaults to ``3 * num_vertices``, which no reduced cellular torus
    graph can exceed since its faces have at least three sides).  With
    ``triangles_only`` every face must be a triangle.
    ``loop_edges_per_vertex`` keeps only classes with that many loop edges at
    every vertex.  Classes are returned sorted for deterministic output.

    Raises :class:`ScaleLimit` when ``num_vertices`` exceeds the configured
    cap.
    """
    cap = max_s()
    if num_vertices > cap:
        raise ScaleLimit(f"{num_vertices} vertices exceeds the configured cap {cap}")
    if num_vertices < 1:
        raise ValueError("need at least one vertex")

    euler_cap = 3 * num_vertices
    if max_edges is None:
        max_edges = euler_cap
    max_edges = min(max_edges, euler_cap)

    if degrees is not None:
        seqs = [tuple(degrees)]
    else:
        seqs = []
        for ne in range(num_vertices + 1, max_edges + 1):
            seqs.extend(degree_sequences(num_vertices, ne))

    classes = []
    for seq in sorted(seqs):
        if sum(seq) % 2:
            continue  # handshake parity: no matching exists
        # at the Euler-maximal edge count every face is forced to be a
        # triangle, so the much stronger triangle pruning is equivalent
        tri = triangles_only or sum(seq) == 6 * num_vertices
        found = _search(seq, tri, 3, workers)
        for key in sorted(found):
            cls = GraphClass(degrees=seq, matching=found[key], key=key)
            g = cls.graph()
            if g.parallel_edge_pairs() or g.trivial_loops():
                continue
            if loop_edges_per_vertex is not None and any(
                len(g.loops_at(v)) != loop_edges_per_vertex
                for v in range(num_vertices)
            ):
                continue
            classes.append(cls)
    classes.sort(key=lambda c: (c.degrees, c.key))
    return tuple(classes)


def brute_force_torus_classes(
    num_vertices, *, degrees=None, max_edges=None, triangles_only=False
):
    """Pruning-free oracle for :func:`enumerate_reduced_torus_graphs`.

    Generates every matching outright, then filters with the full face trace
    of :class:`FatGraph`, an independent code path from the kernel's
    incremental pruning.  Only run this at small scale.
    """
    euler_cap = 3 * num_vertices
    if max_edges is None:
        max_edges = euler_cap
    max_edges = min(max_edges, euler_cap)
    if degrees is not None:
        seqs = [tuple(degrees)]
    else:
        seqs = []
        for ne in range(num_vertices + 1, max_edges + 1):
            seqs.extend(degree_sequences(num_vertices, ne))

    classes = {}
    for seq in sorted(seqs):
        n = sum(seq)
        matching = [-1] * n

        def rec():
            try:
                a = matching.index(-1)
            except ValueError:
                g = FatGraph(seq, matching)
                if not g.is_connected() or g.euler_characteristic() != 0:
                    return
                sizes = g.face_sizes()
                if triangles_only:
                    if any(s != 3 for s in sizes):
                        return
                elif any(s < 3 for s in sizes):
                    return
                if g.parallel_edge_pairs() or g.trivial_loops():
                    return
                key = _kernel_py.canonical_code(seq, tuple(matching))
                cand = tuple(matching)
                prev = classes.get((seq, key))
                if prev is None or cand < prev:
                    classes[(seq, key)] = cand
                return
            for b in range(a + 1, n):
                if matching[b] >= 0:
                    continue
                matching[a] = b
                matching[b] = a
                rec()
                matching[a] = -1
                matching[b] = -1

        rec()
    out = [
        GraphClass(degrees=seq, matching=m, key=key)
        for (seq, key), m in classes.items()
    ]
    out.sort(key=lambda c: (c.degrees, c.key))
    return tuple(out)
