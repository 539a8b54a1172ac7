"""The two kernel backends must agree bit for bit."""
import pytest

from toruscert import _kernel_py

try:
    from toruscert import _kernel as _compiled
except ImportError:
    _compiled = None

needs_compiled = pytest.mark.skipif(_compiled is None, reason="compiled kernel not built")

SHAPES = [
    ((6,), True),
    ((6, 6), True),
    ((6, 6, 6), True),
    ((2, 2), False),
    ((4, 4), False),
    ((4, 2), False),
    ((5, 3), False),
    ((6, 4, 2), False),
    ((6, 6, 4), False),
    ((8, 4, 2), False),
    ((3, 2, 1), False),
]


@needs_compiled
@pytest.mark.parametrize("degrees,tri", SHAPES)
def test_backends_agree(degrees, tri):
    pure = _kernel_py.search_matchings(degrees, triangles_only=tri)
    fast = _compiled.search_matchings(degrees, triangles_only=tri)
    assert pure == fast


@needs_compiled
@pytest.mark.parametrize("degrees,tri", SHAPES[:6])
def test_canonical_codes_agree(degrees, tri):
    for matching in _kernel_py.search_matchings(degrees, triangles_only=tri).values():
        assert _kernel_py.canonical_code(degrees, matching) == _compiled.canonical_code(
            degrees, matching
        )


@pytest.mark.parametrize("degrees,tri", [((6, 6), True), ((6, 4, 2), False)])
def test_first_partner_partitions_the_search(degrees, tri):
    whole = _kernel_py.search_matchings(degrees, triangles_only=tri)
    merged = {}
    n = sum(degrees)
    for b in range(1, n):
        part = _kernel_py.search_matchings(degrees, triangles_only=tri, first_partner=b)
        for key, matching in part.items():
            prev = merged.get(key)
            if prev is None or matching < prev:
                merged[key] = matching
    assert merged == whole


def test_min_face_documented_semantics():
    # the square torus map lives at min_face 4, dies in triangle mode
    res = _kernel_py.search_matchings((4,), min_face=4)
    assert len(res) == 1
    assert not _kernel_py.search_matchings((4,), triangles_only=True)


def test_rejects_bad_inputs():
    with pytest.raises(ValueError):
        _kernel_py.search_matchings((3,))
    with pytest.raises(ValueError):
        _kernel_py.search_matchings((6,), require_connected=False)
    with pytest.raises(ValueError):
        _kernel_py.search_matchings((6,), first_partner=99)
