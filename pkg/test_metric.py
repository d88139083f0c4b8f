"""Edge distance, proper connectivity and the sets measured with them."""

from itertools import combinations, permutations, product

import pytest

from hypergraph import HypergraphError, NoEdges, build, members, vset
from metric import (
    INFINITE, ChainCertificate, NotProperlyConnected, count_pairwise_t_disjoint, diameter, dist,
    distance, distance_table, far_subhypergraph, is_properly_connected, max_pairwise_t_disjoint,
    neighbor_set, require_properly_connected,
)
from settings import override


def test_distance_on_cycle(c5):
    e, f = vset((0, 1)), vset((2, 3))
    value, cert = distance(c5, e, f)
    assert value == 2
    assert cert.is_valid()
    assert cert.edges[0] == e and cert.edges[-1] == f
    assert distance(c5, e, e)[0] == 0


def test_long_chain(long_chain):
    first, last = long_chain.edges[0], long_chain.edges[4]
    value, cert = distance(long_chain, first, last)
    assert value == 4
    assert cert.is_valid()
    assert len(set(cert.links)) == 4
    assert not is_properly_connected(long_chain)[0]
    with pytest.raises(NotProperlyConnected):
        require_properly_connected(long_chain)


def test_unreachable():
    h = build(4, [(0, 1), (2, 3)])
    assert dist(h, h.edges[0], h.edges[1]) == INFINITE
    assert is_properly_connected(h) == (True, None)
    assert diameter(h) == INFINITE


def test_distance_needs_larger_edge_first():
    h = build(4, [(0, 1), (1, 2, 3)])
    with pytest.raises(HypergraphError):
        distance(h, vset((0, 1)), vset((1, 2, 3)))


def test_properly_connected(c5, six_edge, k35_minus_two):
    assert require_properly_connected(c5) == 2
    assert require_properly_connected(six_edge) == 3
    assert is_properly_connected(build(3, [])) == (True, None)
    # removing x1x2x3 leaves x1x2x4 and x1x3x5 meeting without a short chain
    rest = six_edge.remove_edge(vset((0, 1, 2)))
    ok, witness = is_properly_connected(rest)
    assert not ok
    assert set(witness) == {vset((0, 1, 3)), vset((0, 2, 4))}


def test_diameter(c5, p5):
    assert diameter(c5) == 2
    assert diameter(p5) == 3
    with pytest.raises(NoEdges):
        diameter(build(2, []))


def test_neighbor_and_far(c5, p5):
    assert neighbor_set(c5, vset((0, 1))) == vset((2, 4))
    far = far_subhypergraph(p5, vset((0, 1)))
    assert far.edges == (vset((3, 4)),)
    assert far_subhypergraph(c5, vset((0, 1))).is_edgeless()


def test_pairwise_disjoint(p5, c5):
    c, witness = max_pairwise_t_disjoint(p5, 3)
    assert c == 2
    assert witness == (vset((0, 1)), vset((3, 4)))
    assert count_pairwise_t_disjoint(p5, 3) == {1: 4, 2: 1}
    assert max_pairwise_t_disjoint(c5, 3)[0] == 1
    assert max_pairwise_t_disjoint(build(3, []), 3) == (0, ())


def test_two_disjoint_means_matching(c5, p5):
    for g in (c5, p5):
        assert max_pairwise_t_disjoint(g, 2)[0] == 2


def _proper_chains(h, e, f, middle_pool=None):
    """Every valid proper chain from e to f, by brute force."""
    pool = [g for g in (middle_pool if middle_pool is not None else h.edges) if g not in (e, f)]
    for k in range(len(pool) + 1):
        for middle in permutations(pool, k):
            edges = (e, *middle, f)
            steps = [members(a & b) for a, b in zip(edges, edges[1:])]
            for links in product(*steps):
                cert = ChainCertificate(edges, links)
                if cert.is_valid():
                    yield cert


def _irredundant(h, cert):
    inner = cert.edges[1:-1]
    for k in range(len(inner)):
        for keep in combinations(inner, k):
            for shorter in _proper_chains(h, cert.edges[0], cert.edges[-1], keep):
                if shorter.edges[1:-1] == keep:
                    return False
    return True


@pytest.mark.parametrize("name", ["c5", "six_edge", "long_chain", "no_split"])
def test_distance_matches_exhaustive_enumeration(name, request):
    h = request.getfixturevalue(name)
    for e in h.edges:
        for f in h.edges:
            if e == f:
                continue
            chains = list(_proper_chains(h, e, f))
            best = min((c.length for c in chains), default=INFINITE)
            best_irredundant = min(
                (c.length for c in chains if _irredundant(h, c)), default=INFINITE
            )
            assert distance(h, e, f)[0] == best == best_irredundant


def test_graphs_skip_the_chain_search(c5):
    distance_table.cache_clear()
    with override(verify=False):
        assert is_properly_connected(c5) == (True, None)
    assert distance_table.cache_info().currsize == 0
    assert is_properly_connected(c5) == (True, None)
    assert distance_table.cache_info().currsize == 1
