"""Splitting-edge recursion and the checks built on it."""

import pytest

from betti import (
    RecursionStuck, _split, duality_check, ek_identity_check, froberg_check, konig_check, linearity_report,
    matching_bound_check, recursive_betti, reg_bounds, reg_pdim,
    reg_pdim_step_bounds, split_step, strand_count_check,
)
from hypergraph import NoEdges, build, complete, vset
from ideal import edge_ideal
from oracle import BettiTable, taylor_betti
from structure import NotASplittingEdge, NotTriangulated

# chordal graph: a triangle 0-1-2 with a pendant path 2-3-4
TRIANGLE_WITH_TAIL = [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]


def test_star_recursion(star):
    table, trace = recursive_betti(star)
    assert table == BettiTable({(0, 2): 3, (1, 3): 3, (2, 4): 1})
    assert trace.split.t == 2
    assert trace.split.z == 1
    assert trace.split.far.is_edgeless()
    assert any("split" in line for line in trace.lines())


def test_path_recursion(p5):
    table, _ = recursive_betti(p5)
    assert table == taylor_betti(edge_ideal(p5))
    assert table.get(1, 4) == 1


def test_recursion_matches_oracle():
    for h in (build(5, TRIANGLE_WITH_TAIL), complete(4, 2), complete(5, 3)):
        table, _ = recursive_betti(h)
        assert table == taylor_betti(edge_ideal(h))
        assert table == taylor_betti(edge_ideal(h), 32003)


def test_recursion_edge_cases():
    table, trace = recursive_betti(build(3, []))
    assert table.is_empty()
    table, _ = recursive_betti(build(3, [(0, 1, 2)]))
    assert table == BettiTable({(0, 3): 1})


def test_recursion_needs_triangulated(c5):
    with pytest.raises(NotTriangulated):
        recursive_betti(c5)


def test_split_step():
    h = build(3, [(0, 1, 2)])
    s = split_step(h)
    assert s.t == 0
    assert s.rest.is_edgeless() and s.far.is_edgeless()
    with pytest.raises(NoEdges):
        split_step(build(3, []))


def test_ek_identity(six_edge, c5, p5):
    assert ek_identity_check(six_edge, vset((0, 1, 2)))
    assert ek_identity_check(p5, vset((0, 1)), 32003)
    with pytest.raises(NotASplittingEdge):
        ek_identity_check(c5, vset((0, 1)))
    with pytest.raises(NotASplittingEdge):
        ek_identity_check(build(2, [(0, 1)]), vset((0, 1)))


def test_reg_pdim(c5, p5):
    assert reg_pdim(c5) == (3, 2)
    assert reg_pdim(p5, "recursive") == reg_pdim(p5, "oracle") == (3, 2)
    assert reg_pdim(build(3, []), "recursive") == (1, -1)
    with pytest.raises(ValueError):
        reg_pdim(p5, "guess")


def test_reg_bounds(c5, p5):
    assert reg_bounds(c5) == (2, 3)
    assert reg_bounds(p5) == (3, 3)
    assert reg_bounds(build(2, [])) == (1, None)


def test_step_bounds(p5, c5):
    bounds = reg_pdim_step_bounds(p5, vset((0, 1)))
    assert bounds.splitting
    assert bounds.ok
    assert (bounds.reg, bounds.pdim) == (bounds.reg_bound, bounds.pdim_bound)
    loose = reg_pdim_step_bounds(c5, vset((0, 1)))
    assert not loose.splitting
    assert loose.ok


def test_strand_count(c5, p5, six_edge):
    assert strand_count_check(c5)
    assert strand_count_check(p5)
    assert strand_count_check(six_edge)


def test_linearity(c5, star):
    report = linearity_report(c5)
    assert report.linear_first_syzygies
    assert not report.linear_resolution
    assert report.diameter == 2
    assert report.triangulated is False
    report = linearity_report(star)
    assert report.linear_resolution and report.triangulated
    assert linearity_report(build(2, [])) == (True, True, 0, True)


def test_graph_checks(c5, p5, star):
    for g in (c5, p5, star, complete(4, 2), build(4, [])):
        assert froberg_check(g)
        assert konig_check(g)
        assert matching_bound_check(g)
        assert duality_check(g)


def test_duality_hypergraph(k35_minus_two, six_edge):
    assert duality_check(k35_minus_two)
    assert duality_check(six_edge)


@pytest.mark.parametrize("n", [4, 5])
def test_complete_three_uniform_recursion(n):
    # no vertex is free, and after the first split no vertex has a complete neighborhood
    k = complete(n, 3)
    table, trace = recursive_betti(k)
    assert table == taylor_betti(edge_ideal(k))
    assert reg_pdim(k, "recursive") == reg_pdim(k, "oracle")
    assert trace.rest.split is not None


def test_split_needs_a_splitting_edge(no_split):
    with pytest.raises(RecursionStuck):
        _split(no_split, 3)
