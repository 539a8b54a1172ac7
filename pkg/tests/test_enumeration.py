"""Enumeration driver: completeness, determinism, worker partitioning."""
import pytest

from toruscert.enumeration import (
    brute_force_torus_classes,
    degree_sequences,
    enumerate_reduced_torus_graphs,
)
from toruscert.errors import ScaleLimit


def test_degree_sequences():
    assert degree_sequences(1, 2) == [(4,)]
    assert degree_sequences(2, 3) == [(5, 1), (4, 2), (3, 3)]
    assert all(sum(s) == 10 for s in degree_sequences(3, 5))


def test_known_triangulation_class_counts():
    for s, expected in [(1, 1), (2, 1), (3, 2), (4, 3)]:
        classes = enumerate_reduced_torus_graphs(
            s, degrees=(6,) * s, triangles_only=True
        )
        assert len(classes) == expected
        for cls in classes:
            g = cls.graph()
            assert g.face_sizes() == (3,) * (2 * s)
            assert g.euler_characteristic() == 0
            assert g.is_reduced()


def test_completeness_against_brute_force_small():
    # one- and two-vertex scale: the pruning search must find exactly the
    # classes of the pruning-free generator
    for nv in (1, 2):
        fast = enumerate_reduced_torus_graphs(nv)
        slow = brute_force_torus_classes(nv)
        assert [(c.degrees, c.key) for c in fast] == [(c.degrees, c.key) for c in slow]
    fast = enumerate_reduced_torus_graphs(2, degrees=(6, 6), triangles_only=True)
    slow = brute_force_torus_classes(2, degrees=(6, 6), triangles_only=True)
    assert [(c.degrees, c.key) for c in fast] == [(c.degrees, c.key) for c in slow]


def test_general_class_counts_small():
    assert len(enumerate_reduced_torus_graphs(1)) == 2
    assert len(enumerate_reduced_torus_graphs(2)) == 20


def test_edge_cap_is_eulerian():
    # no reduced cellular torus graph exceeds 3 edges per vertex
    classes = enumerate_reduced_torus_graphs(2, max_edges=12)
    assert max(c.num_edges for c in classes) <= 6


def test_loop_filter():
    classes = enumerate_reduced_torus_graphs(
        2, degrees=(6, 6), triangles_only=True, loop_edges_per_vertex=1
    )
    assert len(classes) == 1
    g = classes[0].graph()
    assert len(g.loops_at(0)) == 1 and len(g.loops_at(1)) == 1


def test_workers_produce_identical_classes():
    one = enumerate_reduced_torus_graphs(3, degrees=(6, 6, 6), triangles_only=True)
    two = enumerate_reduced_torus_graphs(
        3, degrees=(6, 6, 6), triangles_only=True, workers=2
    )
    assert [(c.degrees, c.matching, c.key) for c in one] == [
        (c.degrees, c.matching, c.key) for c in two
    ]


def test_odd_degree_spec_is_empty():
    # a lone vertex of degree 5 admits no pairing of its dart ends
    assert enumerate_reduced_torus_graphs(1, degrees=(5,)) == ()


def test_scale_limit():
    with pytest.raises(ScaleLimit):
        enumerate_reduced_torus_graphs(9)
