"""Shared fixtures: verification mode on, and the standard example hypergraphs."""

import pytest

from hypergraph import build, complete, vset
from settings import override


@pytest.fixture(autouse=True)
def verify_mode():
    with override(verify=True):
        yield


def _edges(*groups):
    return [vset(g) for g in groups]


@pytest.fixture
def c5():
    return build(5, _edges((0, 1), (1, 2), (2, 3), (3, 4), (0, 4)))


@pytest.fixture
def p5():
    return build(5, _edges((0, 1), (1, 2), (2, 3), (3, 4)))


@pytest.fixture
def star():
    return build(4, _edges((0, 1), (0, 2), (0, 3)))


@pytest.fixture
def no_split():
    """{abe, ade, bce, cde}: no edge splits."""
    return build(5, _edges((0, 1, 4), (0, 3, 4), (1, 2, 4), (2, 3, 4)), list("abcde"))


@pytest.fixture
def three_leaves():
    """{abf, bcd, def}: every edge is a v-leaf, none is an f-leaf."""
    return build(6, _edges((0, 1, 5), (1, 2, 3), (3, 4, 5)), list("abcdef"))


@pytest.fixture
def six_edge():
    """Properly-connected 3-uniform hypergraph whose edge x1x2x3 splits without a free vertex."""
    return build(5, _edges((0, 1, 2), (0, 1, 3), (0, 2, 4), (1, 2, 3), (1, 2, 4), (2, 3, 4)))


@pytest.fixture
def long_chain():
    """4-uniform, five edges: the ends meet yet sit at distance 4."""
    return build(8, _edges((0, 1, 2, 3), (0, 1, 2, 6), (0, 1, 5, 6), (0, 4, 5, 6), (0, 4, 5, 7)))


@pytest.fixture
def k35_minus_two():
    full = complete(5, 3)
    return full.remove_edge(vset((0, 1, 2))).remove_edge(vset((2, 3, 4)))
