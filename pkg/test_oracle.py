"""Taylor-complex Betti tables against known values."""

import pytest

from hypergraph import build, complete, vset
from ideal import MonomialIdeal, edge_ideal
from modp import is_prime, rank_mod_p
from oracle import (
    BettiTable, NotPrime, TooManyGenerators, TooManyVariables, char_compare,
    degree_bound_violations, euler_characteristics, has_linear_first_syzygies,
    has_linear_resolution, table_invariants, taylor_betti,
)
from settings import override

C5_TABLE = {(0, 2): 5, (1, 3): 5, (2, 5): 1}
P5_TABLE = {(0, 2): 4, (1, 3): 3, (1, 4): 1, (2, 5): 1}
K4_TABLE = {(0, 2): 6, (1, 3): 8, (2, 4): 3}


def test_rank_mod_p():
    assert rank_mod_p([[1, 2], [3, 4]], 2) == 1
    assert rank_mod_p([[1, 2], [3, 4]], 3) == 2
    assert rank_mod_p([[1, -1, 0], [0, 1, -1], [-1, 0, 1]], 32003) == 2
    assert rank_mod_p([], 2) == 0
    assert is_prime(32003) and not is_prime(32001)


def test_cycle(c5):
    table = taylor_betti(edge_ideal(c5))
    assert table == BettiTable(C5_TABLE)
    assert table_invariants(table) == (3, 2)
    assert not has_linear_resolution(table, 2)
    assert has_linear_first_syzygies(table, 2)


def test_path(p5):
    table = taylor_betti(edge_ideal(p5), 32003)
    assert table == BettiTable(P5_TABLE)
    assert table_invariants(table) == (3, 2)


def test_complete_graph():
    table = taylor_betti(edge_ideal(complete(4, 2)))
    assert table == BettiTable(K4_TABLE)
    assert has_linear_resolution(table, 2)


def test_k35_minus_two(k35_minus_two):
    table = taylor_betti(edge_ideal(k35_minus_two))
    assert table == BettiTable({(0, 3): 8, (1, 4): 11, (2, 5): 4})
    assert has_linear_resolution(table, 3)


def test_small_ideals():
    assert taylor_betti(MonomialIdeal([], 3)).is_empty()
    assert table_invariants(BettiTable()) == (1, -1)
    single = taylor_betti(MonomialIdeal([vset((0, 1, 2))], 3))
    assert single == BettiTable({(0, 3): 1})
    pair = taylor_betti(edge_ideal(build(3, [(0, 1), (1, 2)])))
    assert pair == BettiTable({(0, 2): 2, (1, 3): 1})


@pytest.mark.parametrize("reduce", [True, False])
def test_reduction_keeps_homology(c5, p5, reduce):
    assert taylor_betti(edge_ideal(c5), reduce=reduce) == BettiTable(C5_TABLE)
    assert taylor_betti(edge_ideal(p5), reduce=reduce) == BettiTable(P5_TABLE)


def test_characteristics_agree(c5, k35_minus_two):
    assert char_compare(edge_ideal(c5), 2, 3) == (True, [])
    assert char_compare(edge_ideal(k35_minus_two), 2, 32003) == (True, [])


def test_errors(c5):
    with pytest.raises(NotPrime):
        taylor_betti(edge_ideal(c5), 4)
    with override(generator_cap=3):
        with pytest.raises(TooManyGenerators) as err:
            taylor_betti(edge_ideal(c5))
    assert err.value.count == 5


def test_table_helpers(c5):
    table = taylor_betti(edge_ideal(c5))
    assert euler_characteristics(table) == {2: 5, 3: -5, 5: 1}
    assert degree_bound_violations(table, 2, 5) == []
    assert degree_bound_violations(BettiTable({(1, 2): 1}), 2, 5) == [(1, 2)]
    assert table.total(1) == 5
    assert table.strand(2) == {5: 1}
    assert table.diff(BettiTable({(0, 2): 5})) == [(1, 3, 5, 0), (2, 5, 1, 0)]


def test_high_vertex_indices():
    h = build(70, [(0, 1), (65, 69)])
    assert taylor_betti(edge_ideal(h)) == BettiTable({(0, 2): 2, (1, 4): 1})
    shifted = build(80, [(60, 61), (61, 72), (72, 79)])
    assert taylor_betti(edge_ideal(shifted)) == taylor_betti(edge_ideal(build(4, [(0, 1), (1, 2), (2, 3)])))


def test_too_many_variables():
    blocks = [range(k, k + 16) for k in range(0, 64, 16)]
    with pytest.raises(TooManyVariables) as err:
        taylor_betti(edge_ideal(build(64, blocks)))
    assert err.value.count == 64
