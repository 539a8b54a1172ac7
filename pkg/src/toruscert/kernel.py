"""Backend selection for the search kernel.

The compiled extension is used when importable; setting ``TORUSCERT_PURE=1``
in the environment forces the pure-Python fallback (used by the benchmark and
by tests that compare the two backends).
"""
import os

if os.environ.get("TORUSCERT_PURE"):
    from toruscert import _kernel_py as _impl
else:
    try:
        from toruscert import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from toruscert import _kernel_py as _impl

BACKEND = _impl.BACKEND
search_matchings = _impl.search_matchings
canonical_code = _impl.canonical_code
standard_rotation = _impl.standard_rotation
