"""Leaves, splitting edges, and triangulated / chordal recognition."""

import logging
from dataclasses import dataclass
from math import comb

import networkx as nx

from hypergraph import (
    HypergraphError, TooFewEdges, TooLarge, VerificationError,
    members, size,
)
from ideal import edge_ideal, intersect_principal
from metric import neighbor_set, require_properly_connected
from settings import get_settings

log = logging.getLogger(__name__)


class NotTriangulated(HypergraphError):
    pass


class NotASplittingEdge(HypergraphError):
    pass


@dataclass(frozen=True)
class SplitWitness:
    """Edge E with the vertex z that certifies it splits.

    partners maps each minimal generator L of (x^E) & I(H \\ E) to the
    lexicographically largest edge G avoiding z with L = E | G; it is
    filled in by the general criterion only.
    """

    edge: int
    z: int
    partners: tuple = ()


# ---------------------------------------------------------------------------
# Leaves
# ---------------------------------------------------------------------------

def free_vertices(hypergraph, e):
    """Vertices of E that lie in no other edge."""
    e = hypergraph.require_edge(e)
    others = 0
    for f in hypergraph.edges:
        if f != e:
            others |= f
    return e & ~others


def is_v_leaf(hypergraph, e):
    return bool(free_vertices(hypergraph, e))


def is_f_leaf(hypergraph, e):
    """E is the only edge, or one other edge dominates every intersection with E."""
    e = hypergraph.require_edge(e)
    others = [f for f in hypergraph.edges if f != e]
    if not others:
        return True
    for h in others:
        cap = e & h
        if all((e & f) & ~cap == 0 for f in others):
            return True
    return False


def _subsets_of(mask):
    """Every nonempty submask of mask."""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def _require_small(hypergraph):
    cap = get_settings().exhaustive_cap
    if size(hypergraph.support) > cap:
        raise TooLarge(
            f"{size(hypergraph.support)} non-isolated vertices exceed the exhaustive cap of {cap}"
        )


def _is_forest(hypergraph, leaf_test):
    _require_small(hypergraph)
    for y in _subsets_of(hypergraph.support):
        sub = hypergraph.induced(y)
        if sub.edges and not any(leaf_test(sub, f) for f in sub.edges):
            return False
    return True


def is_v_forest(hypergraph):
    """Every induced sub-hypergraph with an edge has a v-leaf."""
    return _is_forest(hypergraph, is_v_leaf)


def is_f_forest(hypergraph):
    """Every induced sub-hypergraph with an edge has an f-leaf."""
    return _is_forest(hypergraph, is_f_leaf)


# ---------------------------------------------------------------------------
# Splitting edges
# ---------------------------------------------------------------------------

def _partners(hypergraph, e, z, gens):
    bit = 1 << z
    out = []
    for g in gens:
        candidates = [h for h in hypergraph.edges if not h & bit and (e | h) == g]
        out.append((g, max(candidates, key=members)))
    return tuple(out)


def is_splitting_edge(hypergraph, e):
    """(flag, witness) from the ideal containment criterion.

    E splits H iff some z in E has (x^E) & I(H\\E) inside (x^E) & I(H\\{z}).
    The first such z in vertex order is reported.
    """
    e = hypergraph.require_edge(e)
    if len(hypergraph) < 2:
        raise TooFewEdges("The splitting criterion needs two or more edges")
    left = intersect_principal(e, edge_ideal(hypergraph.remove_edge(e)))
    for z in members(e):
        right = intersect_principal(e, edge_ideal(hypergraph.remove_vertex(z)))
        if left.is_subideal_of(right):
            return True, SplitWitness(e, z, _partners(hypergraph, e, z, left.gens))
    return False, None


def is_splitting_edge_pc(hypergraph, e):
    """(flag, witness) from the swap criterion on a properly-connected H.

    E splits iff some z in E has (E \\ {z}) | {z_i} an edge for every z_i in N(E).
    """
    e = hypergraph.require_edge(e)
    require_properly_connected(hypergraph)
    nbrs = members(neighbor_set(hypergraph, e))
    result = (False, None)
    for z in members(e):
        base = e & ~(1 << z)
        if all((base | (1 << w)) in hypergraph for w in nbrs):
            result = (True, SplitWitness(e, z))
            break
    if get_settings().verify and len(hypergraph) >= 2:
        general, _ = is_splitting_edge(hypergraph, e)
        if general != result[0]:
            raise VerificationError(
                f"Splitting criteria disagree on {hypergraph.edge_label(e)}", hypergraph
            )
    return result


def splitting_edges(hypergraph):
    """[(edge, witness)] for every splitting edge, in canonical edge order."""
    if len(hypergraph) < 2:
        return []
    found = []
    for e in hypergraph.edges:
        ok, witness = is_splitting_edge(hypergraph, e)
        if ok:
            found.append((e, witness))
    return found


# ---------------------------------------------------------------------------
# Triangulated hypergraphs
# ---------------------------------------------------------------------------

def _closed_neighborhood(edges, x):
    bit = 1 << x
    closed = bit
    for f in edges:
        if f & bit:
            closed |= f
    return closed


def _complete_around(edges, x, d):
    """The induced hypergraph on N(x) | {x} is d-complete."""
    closed = _closed_neighborhood(edges, x)
    k = size(closed)
    if k < d:
        return True
    inside = sum(1 for f in edges if f & closed == f)
    return inside == comb(k, d)


def complete_neighborhood_vertices(hypergraph):
    """Non-isolated vertices whose closed neighborhood induces a d-complete hypergraph."""
    d = hypergraph.uniformity().d
    if d is None:
        return []
    return [x for x in members(hypergraph.support) if _complete_around(hypergraph.edges, x, d)]


def elimination_order(hypergraph):
    """Vertex order removing, at each step, a vertex with a d-complete neighborhood.

    Lowest admissible index first with full backtracking; None if no
    order exists.
    """
    d = require_properly_connected(hypergraph)
    if d is None:
        return list(range(hypergraph.n))
    failed = set()

    def search(edges, remaining):
        if not remaining:
            return []
        if remaining in failed:
            return None
        for x in members(remaining):
            if not _complete_around(edges, x, d):
                continue
            bit = 1 << x
            rest = search(tuple(f for f in edges if not f & bit), remaining & ~bit)
            if rest is not None:
                return [x] + rest
        failed.add(remaining)
        return None

    return search(hypergraph.edges, hypergraph.vertex_mask)


def is_triangulated_exact(hypergraph):
    """Check every nonempty vertex subset Y for a vertex with d-complete neighborhood in H_Y.

    Subsets holding a vertex outside every edge pass trivially, so only
    subsets of the non-isolated vertices are enumerated.
    """
    d = require_properly_connected(hypergraph)
    if d is None:
        return True
    _require_small(hypergraph)
    for y in _subsets_of(hypergraph.support):
        edges = [f for f in hypergraph.edges if f & y == f]
        if not any(_complete_around(edges, x, d) for x in members(y)):
            return False
    return True


@dataclass(frozen=True)
class TriangulationReport:
    triangulated: bool
    method: str
    order: tuple = None
    discrepancy: bool = False


def triangulated_report(hypergraph):
    """Run the elimination search and, when small enough, the exhaustive check.

    The exhaustive answer wins; a disagreement is logged and flagged.
    """
    order = elimination_order(hypergraph)
    if size(hypergraph.support) > get_settings().exhaustive_cap:
        return TriangulationReport(order is not None, "elimination",
                                   tuple(order) if order is not None else None)
    exact = is_triangulated_exact(hypergraph)
    discrepancy = exact != (order is not None)
    if discrepancy:
        log.warning("Elimination search (%s) and exhaustive check (%s) disagree on %r",
                    order is not None, exact, hypergraph)
    return TriangulationReport(exact, "exhaustive",
                               tuple(order) if order is not None else None, discrepancy)


def require_triangulated(hypergraph):
    """d for a properly-connected triangulated H; NotTriangulated otherwise."""
    d = require_properly_connected(hypergraph)
    if not triangulated_report(hypergraph).triangulated:
        raise NotTriangulated("Hypergraph is not triangulated")
    return d


# ---------------------------------------------------------------------------
# Chordal graphs
# ---------------------------------------------------------------------------

def is_chordal(graph):
    """Chordality by repeatedly deleting a simplicial vertex."""
    graph.require_graph()
    adjacency = {v: 0 for v in range(graph.n)}
    for e in graph.edges:
        a, b = members(e)
        adjacency[a] |= 1 << b
        adjacency[b] |= 1 << a
    remaining = graph.vertex_mask
    result = True
    while remaining:
        for v in members(remaining):
            nbrs = adjacency[v] & remaining
            if all(adjacency[u] & nbrs | (1 << u) == nbrs | (1 << u) for u in members(nbrs)):
                remaining &= ~(1 << v)
                break
        else:
            result = False
            break
    if get_settings().verify:
        other = nx.Graph()
        other.add_nodes_from(range(graph.n))
        other.add_edges_from(members(e) for e in graph.edges)
        if nx.is_chordal(other) != result:
            raise VerificationError("Simplicial elimination disagrees with networkx", graph)
    return result
