"""Monomial ideals, the intersection decomposition and Alexander duality."""

import pytest

from hypergraph import HypergraphError, build, members, vset
from ideal import (
    MonomialIdeal, alexander_dual, edge_ideal, height, intersect_principal,
    intersection_decomposition, is_unmixed, matching_number, min_vertex_covers,
    minimal_transversals, minimalize,
)
from metric import NotProperlyConnected


def test_generators_are_minimalized():
    ideal = MonomialIdeal([vset((0, 1, 2)), vset((0, 1)), vset((0, 1))], 3)
    assert ideal.gens == (vset((0, 1)),)
    assert ideal.format() == "(x1x2)"
    assert MonomialIdeal([], 3).format() == "(0)"


def test_intersect_principal():
    ideal = edge_ideal(build(3, [(0, 1), (1, 2)]))
    meet = intersect_principal(vset((0, 1)), ideal)
    assert meet.gens == (vset((0, 1)),)


def test_intersection_decomposition(six_edge):
    e = vset((0, 1, 2))
    nbrs, far, ideal = intersection_decomposition(six_edge, e)
    assert nbrs == vset((3, 4))
    assert far.is_edgeless()
    assert ideal.gens == (vset((0, 1, 2, 3)), vset((0, 1, 2, 4)))


def test_intersection_decomposition_with_far_part(p5):
    nbrs, far, ideal = intersection_decomposition(p5, vset((0, 1)))
    assert nbrs == vset((2,))
    assert far.edges == (vset((3, 4)),)
    assert ideal.gens == (vset((0, 1, 2)), vset((0, 1, 3, 4)))


def test_intersection_decomposition_needs_pc(long_chain):
    with pytest.raises(NotProperlyConnected):
        intersection_decomposition(long_chain, long_chain.edges[0])


def test_minimal_transversals():
    covers = minimal_transversals([vset((0, 1)), vset((1, 2))])
    assert sorted(members(c) for c in covers) == [(0, 2), (1,)]


def test_alexander_dual(c5):
    dual = alexander_dual(edge_ideal(c5))
    assert len(dual) == 5
    assert set(dual.degrees()) == {3}
    with pytest.raises(HypergraphError):
        alexander_dual(MonomialIdeal([], 3))


def test_dual_of_path():
    dual = alexander_dual(edge_ideal(build(3, [(0, 1), (1, 2)], labels="abc")))
    assert dual.format(["a", "b", "c"]) == "(b, ac)"


def test_covers_and_matching(c5, six_edge, p5):
    assert height(edge_ideal(c5)) == 3
    assert is_unmixed(c5)
    assert not is_unmixed(build(3, [(0, 1), (1, 2)]))
    assert len(min_vertex_covers(c5)) == 5
    assert matching_number(c5) == 2
    assert matching_number(p5) == 2
    assert matching_number(six_edge) == 1
    assert matching_number(build(2, [])) == 0


def test_double_dual(c5, six_edge):
    for h in (c5, six_edge):
        ideal = edge_ideal(h)
        assert alexander_dual(alexander_dual(ideal)) == ideal


def test_minimalize_drops_multiples():
    labels = list("abcde")
    abde, abce, abcde = vset((0, 1, 3, 4)), vset((0, 1, 2, 4)), vset((0, 1, 2, 3, 4))
    ideal = minimalize([abde, abce, abcde])
    assert set(ideal.gens) == {abde, abce}
    assert ideal.n == 5
    assert minimalize([]).format() == "(0)"
    # (abe) meets (ade, bce, cde) in the same two generators
    meet = intersect_principal(
        vset((0, 1, 4)), MonomialIdeal([vset((0, 3, 4)), vset((1, 2, 4)), vset((2, 3, 4))], 5)
    )
    assert meet.format(labels) in ("(abde, abce)", "(abce, abde)")
