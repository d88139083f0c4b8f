"""Seeded generators and the property suites they feed."""

import pytest

from generators import CapExceeded, GenSpec, gen
from hypergraph import HypergraphError, complete
from metric import is_properly_connected
from oracle import BettiTable, taylor_betti
from structure import is_chordal, is_triangulated_exact
from suites import SUITES, SuiteUsageError, run_suite, shrink


def test_same_seed_same_stream():
    spec = GenSpec("graph", 6, seed=42, count=5)
    assert list(gen(spec)) == list(gen(spec))
    other = list(gen(GenSpec("graph", 6, seed=43, count=5)))
    assert len(other) == 5


def test_exact_edge_count():
    for h in gen(GenSpec("graph", 5, edges=4, seed=1, count=3)):
        assert len(h) == 4


def test_exhaustive_graphs():
    stream = gen(GenSpec("exhaustive-graphs", 4))
    graphs = list(stream)
    assert len(graphs) == 64
    assert len(set(graphs)) == 64
    assert stream.stats.produced == 64
    with pytest.raises(CapExceeded):
        gen(GenSpec("exhaustive-graphs", 8))


def test_chordal_generator():
    for h in gen(GenSpec("chordal", 7, density=0.7, seed=5, count=10)):
        assert is_chordal(h)


def test_v_tree_generator():
    stream = gen(GenSpec("v-tree", 6, d=3, seed=2, count=4))
    for h in stream:
        assert h.uniformity().d == 3
        assert is_properly_connected(h)[0]
        assert is_triangulated_exact(h)
    assert stream.stats.produced == 4


def test_pc_uniform_generator():
    for h in gen(GenSpec("pc-uniform", 5, d=3, edges=3, seed=9, count=3)):
        assert len(h) == 3
        assert is_properly_connected(h)[0]


def test_bad_specs():
    with pytest.raises(HypergraphError):
        gen(GenSpec("lattice", 4))
    with pytest.raises(HypergraphError):
        gen(GenSpec("v-tree", 3, d=4))


def test_suites_pass():
    for name in ("recursion-vs-oracle", "ek-identity", "strand-count", "reg-bounds",
                 "linearity-iff", "duality", "char-independence"):
        result = run_suite(name, n=5, trials=8, seed=11)
        assert result.ok, result.violations
        assert result.checked + result.skipped == 8


def test_graph_suites_exhaustive():
    for name in ("froberg", "konig", "matching-bound"):
        result = run_suite(name, n=4, exhaustive=True)
        assert result.ok
        assert result.checked + result.skipped == 64


def test_hypergraph_suites():
    result = run_suite("recursion-vs-oracle", n=6, trials=6, seed=3, kind="v-tree", d=3)
    assert result.ok
    assert result.checked == 6


def test_mutant_oracle_is_caught():
    def inflated(ideal, p=2):
        table = dict(taylor_betti(ideal, p).entries)
        if table:
            table[min(table)] += 1
        return BettiTable(table)

    result = run_suite("recursion-vs-oracle", n=5, trials=20, seed=4, oracle=inflated)
    assert not result.ok
    reproducer = result.violations[0].reproducer
    assert len(reproducer) == 1
    assert reproducer.n == 2


def test_shrink_keeps_failure():
    def fails_with_triangle(h, ctx):
        return "triangle" if len(h) >= 3 else None

    small = shrink(fails_with_triangle, complete(5, 2), None)
    assert len(small) == 3


def test_suite_usage():
    assert len(SUITES) == 10
    with pytest.raises(SuiteUsageError):
        run_suite("nonsense")
    with pytest.raises(SuiteUsageError):
        run_suite("froberg", kind="v-tree")


@pytest.mark.parametrize("name, kind", [
    ("ek-identity", "pc-uniform"),
    ("ek-identity", "v-tree"),
    ("strand-count", "v-tree"),
    ("recursion-vs-oracle", "pc-uniform"),
])
def test_suites_on_hypergraphs(name, kind):
    result = run_suite(name, n=5, trials=5, seed=7, kind=kind, d=3)
    assert result.ok, result.violations
    assert result.checked + result.skipped == 5


def test_degree_bounds_are_checked():
    def low_degree(ideal, p=2):
        table = dict(taylor_betti(ideal, p).entries)
        table[(0, 1)] = 1
        return BettiTable(table)

    for name in ("konig", "ek-identity"):
        result = run_suite(name, n=4, exhaustive=True, oracle=low_degree)
        assert not result.ok
        assert "degree bounds" in result.violations[0].message
