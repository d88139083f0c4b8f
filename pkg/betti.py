"""Splitting-edge recursion for Betti numbers, and the checks built on it.

For a splitting edge E of a properly-connected d-uniform H with
t = |N(E)| and H' the edges at distance >= d+1 from E:

    beta_{i,j}(I(H)) = beta_{i,j}(I(H \\ E))
                       + sum_{l=0}^{i} C(t,l) beta_{i-1-l, j-d-l}(I(H'))

with beta_{-1,0}(I(H')) = 1, so an empty H' still contributes
C(t,i) to beta_{i,d+i}.  Tables are ideal-indexed (see oracle).
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import NamedTuple

from hypergraph import NoEdges, TooFewEdges, VerificationError, size
from ideal import (
    alexander_dual, edge_ideal, height, intersect_principal,
    is_unmixed, matching_number, principal,
)
from metric import (
    count_pairwise_t_disjoint, diameter, far_subhypergraph, is_properly_connected,
    max_pairwise_t_disjoint, neighbor_set, require_properly_connected,
)
from oracle import (
    BettiTable, has_linear_first_syzygies, has_linear_resolution,
    table_invariants, taylor_betti,
)
from settings import get_settings
from structure import (
    NotASplittingEdge, NotTriangulated, complete_neighborhood_vertices, is_chordal,
    is_splitting_edge, is_splitting_edge_pc, is_triangulated_exact, require_triangulated,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplitDecomposition:
    edge: int
    z: int
    t: int
    rest: object
    far: object


@dataclass
class RecursionTrace:
    """One node of the recursion: the hypergraph, its table and how it was split.

    Leaves are edgeless hypergraphs; cached marks a node answered from the
    memo without descending.
    """

    hypergraph: object
    table: BettiTable
    split: SplitDecomposition = None
    rest: "RecursionTrace" = None
    far: "RecursionTrace" = None
    cached: bool = False

    def lines(self, depth=0):
        pad = "  " * depth
        h = self.hypergraph
        if self.split is None:
            note = " (memo)" if self.cached else ""
            yield f"{pad}{len(h)} edges{note}: {self.table!r}"
            return
        s = self.split
        yield (f"{pad}split {h.edge_label(s.edge)} (z={h.vertex_label(s.z)}, t={s.t}): "
               f"{self.table!r}")
        yield from self.rest.lines(depth + 1)
        yield from self.far.lines(depth + 1)


def _memo_key(hypergraph):
    c = hypergraph.compressed()
    return c.n, c.edges


class RecursionStuck(NotTriangulated):
    """No edge of a sub-hypergraph splits it with a properly-connected remainder."""


def _candidate_edges(hypergraph):
    """Edges through complete-neighborhood vertices first, then the rest, canonical order."""
    ordered = []
    for x in complete_neighborhood_vertices(hypergraph):
        ordered.extend(e for e in hypergraph.edges if e >> x & 1 and e not in ordered)
    ordered.extend(e for e in hypergraph.edges if e not in ordered)
    return ordered


def _split(hypergraph, d):
    """First candidate edge that splits H and leaves H \\ E properly-connected.

    H' is always properly-connected, so these two conditions are all the
    recursion needs at the next level.
    """
    for e in _candidate_edges(hypergraph):
        ok, witness = is_splitting_edge_pc(hypergraph, e)
        if not ok:
            continue
        rest = hypergraph.remove_edge(e)
        if not is_properly_connected(rest)[0]:
            log.debug("skip %s: remainder is not properly-connected", hypergraph.edge_label(e))
            continue
        t = size(neighbor_set(hypergraph, e))
        far = far_subhypergraph(hypergraph, e)
        log.debug("split %s at %s: t=%d, |H\\E|=%d, |H'|=%d",
                  hypergraph.edge_label(e), hypergraph.vertex_label(witness.z), t, len(rest), len(far))
        if get_settings().verify:
            _verify_split(hypergraph, e, rest, far)
        return SplitDecomposition(e, witness.z, t, rest, far)
    raise RecursionStuck(f"No edge of {hypergraph!r} splits it with a properly-connected remainder")


def _verify_split(hypergraph, e, rest, far):
    if len(hypergraph) >= 2 and not is_splitting_edge(hypergraph, e)[0]:
        raise VerificationError(f"{hypergraph.edge_label(e)} does not split", hypergraph)
    for part in (rest, far):
        if not is_properly_connected(part)[0]:
            raise VerificationError("recursion produced a part that is not properly-connected", part)


def split_step(hypergraph):
    """One decomposition step of a triangulated hypergraph."""
    d = require_triangulated(hypergraph)
    if hypergraph.is_edgeless():
        raise NoEdges("Nothing to split in an edgeless hypergraph")
    return _split(hypergraph, d)


def _combine(rest, far, t, d):
    entries = dict(rest.entries)
    shifted = dict(far.entries)
    shifted[(-1, 0)] = 1
    for (a, b), v in shifted.items():
        for l in range(t + 1):
            key = (a + 1 + l, b + d + l)
            entries[key] = entries.get(key, 0) + comb(t, l) * v
    return BettiTable(entries)


def recursive_betti(hypergraph):
    """(BettiTable, RecursionTrace) of I(H) for a triangulated H.

    Sub-hypergraphs are memoized on their compressed form, so repeated
    H' subproblems are computed once.
    """
    d = require_triangulated(hypergraph)
    memo = {}

    def run(h):
        if h.is_edgeless():
            return RecursionTrace(h, BettiTable())
        key = _memo_key(h)
        if key in memo:
            return RecursionTrace(h, memo[key], cached=True)
        s = _split(h, d)
        rest = run(s.rest)
        far = run(s.far)
        table = _combine(rest.table, far.table, s.t, d)
        memo[key] = table
        return RecursionTrace(h, table, s, rest, far)

    trace = run(hypergraph)
    log.debug("recursion for %r used %d memo entries", hypergraph, len(memo))
    return trace.table, trace


def ek_identity_check(hypergraph, e, p=2):
    """Check beta(I) = beta(J) + beta(K) + beta_{i-1}(J & K) entrywise.

    J = (x^E), K = I(H \\ E).  E must split H.
    """
    e = hypergraph.require_edge(e)
    try:
        splits, _ = is_splitting_edge(hypergraph, e)
    except TooFewEdges:
        splits = False
    if not splits:
        raise NotASplittingEdge(f"{hypergraph.edge_label(e)} is not a splitting edge")
    k = edge_ideal(hypergraph.remove_edge(e))
    whole = taylor_betti(edge_ideal(hypergraph), p)
    parts = [taylor_betti(principal(e, hypergraph.n), p), taylor_betti(k, p)]
    meet = taylor_betti(intersect_principal(e, k), p)
    expected = {}
    for table in parts:
        for key, v in table.entries.items():
            expected[key] = expected.get(key, 0) + v
    for (i, j), v in meet.entries.items():
        expected[(i + 1, j)] = expected.get((i + 1, j), 0) + v
    diff = whole.diff(BettiTable(expected))
    if diff:
        log.warning("EK identity fails for %s in %r: %s", hypergraph.edge_label(e), hypergraph, diff)
    return not diff


def _reg_pdim_recursive(hypergraph):
    d = require_triangulated(hypergraph)
    memo = {}

    def run(h):
        if h.is_edgeless():
            return 1, -1
        key = _memo_key(h)
        if key not in memo:
            s = _split(h, d)
            reg_rest, pdim_rest = run(s.rest)
            reg_far, pdim_far = run(s.far)
            memo[key] = (max(reg_rest, reg_far + d - 1), max(pdim_rest, pdim_far + s.t + 1))
        return memo[key]

    return run(hypergraph)


def reg_pdim(hypergraph, strategy="oracle", p=2):
    """(reg, pdim) of I(H).

    Args:
        hypergraph: any hypergraph for 'oracle'; triangulated for 'recursive'.
        strategy: 'oracle' or 'recursive'.  The recursive strategy carries
            only the pair through the split, never a full table.
        p: field characteristic for the oracle.
    """
    if strategy == "oracle":
        return table_invariants(taylor_betti(edge_ideal(hypergraph), p))
    if strategy == "recursive":
        return _reg_pdim_recursive(hypergraph)
    raise ValueError(f"Unknown strategy {strategy!r}; use 'oracle' or 'recursive'")


def reg_bounds(hypergraph):
    """(lower, upper): (d-1)c + 1 from pairwise (d+1)-disjoint edges, alpha'+1 for graphs."""
    d = require_properly_connected(hypergraph)
    if d is None:
        return 1, None
    c, _ = max_pairwise_t_disjoint(hypergraph, d + 1)
    upper = matching_number(hypergraph) + 1 if d == 2 else None
    return (d - 1) * c + 1, upper


@dataclass(frozen=True)
class StepBounds:
    """Oracle (reg, pdim) of I(H) against the one-step bounds through edge E."""

    reg: int
    pdim: int
    reg_bound: int
    pdim_bound: int
    splitting: bool

    @property
    def ok(self):
        if self.reg > self.reg_bound or self.pdim > self.pdim_bound:
            return False
        if self.splitting:
            return self.reg == self.reg_bound and self.pdim == self.pdim_bound
        return True


def reg_pdim_step_bounds(hypergraph, e, p=2):
    """reg(I(H)) <= max{reg(I(H\\E)), reg(I(H')) + d - 1} and the pdim analogue.

    Both bounds are attained when E splits.
    """
    e = hypergraph.require_edge(e)
    d = require_properly_connected(hypergraph)
    t = size(neighbor_set(hypergraph, e))
    reg, pdim = reg_pdim(hypergraph, "oracle", p)
    reg_rest, pdim_rest = reg_pdim(hypergraph.remove_edge(e), "oracle", p)
    reg_far, pdim_far = reg_pdim(far_subhypergraph(hypergraph, e), "oracle", p)
    splitting = len(hypergraph) >= 2 and is_splitting_edge(hypergraph, e)[0]
    return StepBounds(
        reg, pdim,
        max(reg_rest, reg_far + d - 1),
        max(pdim_rest, pdim_far + t + 1),
        splitting or len(hypergraph) == 1,
    )


def strand_count_check(hypergraph, p=2):
    """beta_{i-1, d*i} equals the number of i-sets of pairwise (d+1)-disjoint edges."""
    d = require_properly_connected(hypergraph)
    if d is None:
        return True
    table = taylor_betti(edge_ideal(hypergraph), p)
    counts = count_pairwise_t_disjoint(hypergraph, d + 1)
    top = max(max(counts, default=0), table.max_index() + 1)
    ok = True
    for i in range(1, top + 1):
        if table.get(i - 1, d * i) != counts.get(i, 0):
            log.warning("strand mismatch at i=%d: beta=%d, count=%d",
                        i, table.get(i - 1, d * i), counts.get(i, 0))
            ok = False
    return ok


class LinearityReport(NamedTuple):
    linear_first_syzygies: bool
    linear_resolution: bool
    diameter: float
    triangulated: bool = None


def linearity_report(hypergraph, p=2, triangulated=None):
    """Linear first syzygies, linear resolution and edge diameter.

    Linear first syzygies iff diam <= d is always asserted; when H is
    triangulated the resolution must also be linear exactly then.
    """
    d = require_properly_connected(hypergraph)
    if d is None:
        return LinearityReport(True, True, 0, True)
    table = taylor_betti(edge_ideal(hypergraph), p)
    first = has_linear_first_syzygies(table, d)
    linear = has_linear_resolution(table, d)
    diam = diameter(hypergraph)
    if first != (diam <= d):
        raise VerificationError(
            f"linear first syzygies = {first} but diam = {diam} with d = {d}", hypergraph
        )
    if triangulated is None and size(hypergraph.support) <= get_settings().exhaustive_cap:
        triangulated = is_triangulated_exact(hypergraph)
    if triangulated and not (linear == first == (diam <= d)):
        raise VerificationError(
            f"triangulated but linear={linear}, first syzygies={first}, diam={diam}", hypergraph
        )
    return LinearityReport(first, linear, diam, triangulated)


def froberg_check(graph, p=2):
    """I(G) has a linear resolution iff the complement of G is chordal."""
    graph.require_graph()
    linear = has_linear_resolution(taylor_betti(edge_ideal(graph), p), 2)
    return linear == is_chordal(graph.complement(2))


@dataclass
class _DualPair:
    reg: int
    pdim: int
    dual_reg: int
    dual_pdim: int
    height: int
    unmixed: bool


def _dual_pair(hypergraph, p):
    ideal = edge_ideal(hypergraph)
    reg, pdim = table_invariants(taylor_betti(ideal, p))
    dual_reg, dual_pdim = table_invariants(taylor_betti(alexander_dual(ideal), p))
    return _DualPair(reg, pdim, dual_reg, dual_pdim, height(ideal), is_unmixed(hypergraph))


def konig_check(graph, p=2):
    """reg(I) <= ht + 1 <= reg(I^v) (+1 when G is unmixed), and the same chain for pdim."""
    graph.require_graph()
    if graph.is_edgeless():
        return True
    v = _dual_pair(graph, p)
    slack = 1 if v.unmixed else 0
    reg_chain = v.reg <= v.height + 1 <= v.dual_reg + slack
    pdim_chain = v.dual_pdim + 1 <= v.height + 1 <= v.pdim + 1 + slack
    if not (reg_chain and pdim_chain):
        log.warning("Konig chain fails for %r: %s", graph, v)
    return reg_chain and pdim_chain


def duality_check(hypergraph, p=2):
    """reg(I) = pdim(I^v) + 1 and reg(I^v) = pdim(I) + 1."""
    if hypergraph.is_edgeless():
        return True
    v = _dual_pair(hypergraph, p)
    return v.reg == v.dual_pdim + 1 and v.dual_reg == v.pdim + 1


def matching_bound_check(graph, p=2):
    """reg(I(G)) - 1 <= alpha'(G)."""
    graph.require_graph()
    reg, _ = reg_pdim(graph, "oracle", p)
    return reg - 1 <= matching_number(graph)
