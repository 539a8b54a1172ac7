"""Gluing-matrix algebra and the punctured Klein bottle classification."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toruscert.errors import NonPrimitive, WrongFrame
from toruscert.homology import (
    GluingMatrix,
    HomologyClass,
    apply_gluing,
    check_fiber_distance,
    scan_klein_slopes,
    slope_distance,
    solve_klein_slopes,
    verify_relations,
)


def test_gluing_on_frame_generators():
    for m in range(-6, 7):
        g = GluingMatrix(m)
        assert apply_gluing(g, HomologyClass("T1", 1, 0)) == HomologyClass("T2", -1, 0)
        assert apply_gluing(g, HomologyClass("T1", 0, 1)) == HomologyClass("T2", m, 1)


def test_gluing_preserves_the_klein_boundary_class():
    for m, sol in scan_klein_slopes(10):
        g = GluingMatrix(m)
        image = apply_gluing(g, sol.boundary_1)
        assert (image.mu_coeff, image.lambda_coeff) == (
            sol.boundary_2.mu_coeff,
            sol.boundary_2.lambda_coeff,
        )


def test_gluing_wrong_frame():
    with pytest.raises(WrongFrame):
        apply_gluing(GluingMatrix(1), HomologyClass("T2", 1, 0))


@settings(max_examples=200, deadline=None)
@given(
    m=st.integers(-10, 10),
    a=st.integers(-10, 10),
    b=st.integers(-10, 10),
    c=st.integers(-10, 10),
    d=st.integers(-10, 10),
)
def test_gluing_reverses_intersection_sign(m, a, b, c, d):
    g = GluingMatrix(m)
    assert g.determinant == -1
    x = HomologyClass("T1", a, b)
    y = HomologyClass("T1", c, d)
    assert apply_gluing(g, x).intersect(apply_gluing(g, y)) == -x.intersect(y)


def test_verify_relations_examples():
    q, b0 = 2, -3
    b1, b2 = 4, 2
    assert q * b0 == -(b1 + b2)
    ok = verify_relations(
        HomologyClass("T0", q, q * b0),
        HomologyClass("T1", q, b1),
        HomologyClass("T2", q, b2),
        q=q,
    )
    assert ok
    bad = verify_relations(
        HomologyClass("T0", q, q * b0),
        HomologyClass("T1", q + 1, b1),
        HomologyClass("T2", q, b2),
    )
    assert not bad
    assert bad.witness["mu1_coefficient"] == 1
    assert verify_relations(
        HomologyClass("T0", 0, 0), HomologyClass("T1", 0, 0), HomologyClass("T2", 0, 0)
    )


def test_klein_solutions_table():
    assert solve_klein_slopes(0) is None
    assert solve_klein_slopes(3) is None
    s1 = solve_klein_slopes(1)
    assert (s1.q, s1.distance) == (1, 4)
    assert (s1.alpha.mu_coeff, s1.alpha.lambda_coeff) == (1, -4)
    s2 = solve_klein_slopes(2)
    assert (s2.q, s2.distance) == (1, 2)
    s4 = solve_klein_slopes(4)
    assert (s4.q, s4.distance) == (2, 1)
    # the two gluing signs give the same manifold
    assert solve_klein_slopes(-4) == s4


def test_klein_scan_is_exactly_1_2_4():
    hits = dict(scan_klein_slopes(100))
    assert sorted(hits) == [1, 2, 4]
    assert {m: (s.q, s.distance) for m, s in hits.items()} == {
        1: (1, 4),
        2: (1, 2),
        4: (2, 1),
    }


def test_solution_distances():
    mu0 = HomologyClass("T0", 1, 0)
    lam0 = HomologyClass("T0", 0, 1)
    for _, sol in scan_klein_slopes(10):
        assert slope_distance(sol.alpha, mu0) == sol.distance == 4 // sol.m
        assert slope_distance(sol.alpha, lam0) == 1


def test_slope_distance_examples():
    mu0 = HomologyClass("T0", 1, 0)
    assert slope_distance(HomologyClass("T0", 1, -4), mu0) == 4
    assert slope_distance(mu0, mu0) == 0
    assert slope_distance(HomologyClass("T0", 1, -2), mu0) == 2
    with pytest.raises(NonPrimitive):
        slope_distance(HomologyClass("T0", 2, 4), mu0)
    with pytest.raises(WrongFrame):
        slope_distance(mu0, HomologyClass("T1", 1, 0))


def test_fiber_distance():
    assert check_fiber_distance(1, 2)
    assert check_fiber_distance(1, 1)
    assert not check_fiber_distance(2, 1)
