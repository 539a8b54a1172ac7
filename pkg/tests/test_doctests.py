"""Doctests embedded in the library modules."""
import doctest

import pytest

import toruscert.fatgraph
import toruscert.homology
import toruscert.perms


@pytest.mark.parametrize(
    "module",
    [toruscert.fatgraph, toruscert.homology, toruscert.perms],
    ids=lambda m: m.__name__,
)
def test_module_doctests(module):
    failures, _ = doctest.testmod(module)
    assert failures == 0
