"""Edge distance via proper chains, and everything measured with it.

A chain (E_0, x_1, E_1, ..., x_l, E_l) uses distinct edges and distinct
link vertices with x_k in E_{k-1} and E_k.  It is proper when
|E_i & E_{i+1}| = |E_{i+1}| - 1 at every step.  The distance between two
edges is the shortest proper chain joining them; since a shortest chain is
automatically irredundant, no separate irredundancy test is needed.
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from hypergraph import (
    HypergraphError, NoEdges, NotUniform, VerificationError,
    members, size,
)
from settings import get_settings

log = logging.getLogger(__name__)

INFINITE = float("inf")


class NotProperlyConnected(HypergraphError):
    def __init__(self, witness=None, message=None):
        self.witness = witness
        super().__init__(message or "Hypergraph is not properly-connected")


@dataclass(frozen=True)
class ChainCertificate:
    """A proper chain: edges E_0..E_l interleaved with link vertices x_1..x_l."""

    edges: tuple
    links: tuple

    @property
    def length(self):
        return len(self.links)

    def is_valid(self):
        edges, links = self.edges, self.links
        if len(edges) != len(links) + 1:
            return False
        if len(set(edges)) != len(edges) or len(set(links)) != len(links):
            return False
        for k, x in enumerate(links, start=1):
            bit = 1 << x
            if not (edges[k - 1] & bit and edges[k] & bit):
                return False
        return all(
            size(edges[i] & edges[i + 1]) == size(edges[i + 1]) - 1
            for i in range(len(edges) - 1)
        )

    def describe(self, hypergraph):
        parts = [hypergraph.edge_label(self.edges[0])]
        for x, e in zip(self.links, self.edges[1:]):
            parts.append(f"-[{hypergraph.vertex_label(x)}]-")
            parts.append(hypergraph.edge_label(e))
        return " ".join(parts)


def uniform_degree(hypergraph):
    """d for a uniform hypergraph, None when edgeless; NotUniform otherwise."""
    u = hypergraph.uniformity()
    if u.kind == "non-uniform":
        raise NotUniform("A uniform hypergraph is required")
    return u.d


def _properly_adjacent(a, b):
    return a != b and size(a & b) == size(b) - 1


def _lower_bounds(edges, target):
    """Shortest proper-adjacency path length from every edge to target, ignoring labels."""
    bound = {target: 0}
    queue = deque([target])
    while queue:
        b = queue.popleft()
        for a in edges:
            if a not in bound and _properly_adjacent(a, b):
                bound[a] = bound[b] + 1
                queue.append(a)
    return bound


def _search(edges, source, target, bound=None):
    """Iterative deepening over proper chains with distinct link vertices.

    bound may carry a precomputed _lower_bounds(edges, target).
    """
    if bound is None:
        bound = _lower_bounds(edges, target)
    if source not in bound:
        return INFINITE, None

    def extend(chain, links, used_links, budget):
        current = chain[-1]
        for nxt in edges:
            if nxt in chain or not _properly_adjacent(current, nxt):
                continue
            if bound.get(nxt, INFINITE) > budget - 1:
                continue
            for x in members(current & nxt & ~used_links):
                chain.append(nxt)
                links.append(x)
                if nxt == target:
                    return ChainCertificate(tuple(chain), tuple(links))
                found = extend(chain, links, used_links | (1 << x), budget - 1)
                if found:
                    return found
                chain.pop()
                links.pop()
        return None

    for length in range(bound[source], len(edges)):
        cert = extend([source], [], 0, length)
        if cert is not None:
            return length, cert
    return INFINITE, None


def distance(hypergraph, e, f):
    """Distance from E to F (|E| >= |F|) with a witnessing chain.

    Returns (distance, certificate); distance is INFINITE and the
    certificate None when no proper chain exists.
    """
    e = hypergraph.require_edge(e)
    f = hypergraph.require_edge(f)
    if size(e) < size(f):
        raise HypergraphError("Distance is defined from the larger edge: need |E| >= |F|")
    if e == f:
        return 0, ChainCertificate((e,), ())
    return _search(hypergraph.edges, e, f)


@lru_cache(maxsize=512)
def distance_table(hypergraph):
    """All defined pairwise distances, keyed by (E, F) bit masks."""
    table = {}
    edges = hypergraph.edges
    uniform = hypergraph.uniformity().is_uniform
    bounds = {}
    for i, e in enumerate(edges):
        table[(e, e)] = (0, ChainCertificate((e,), ()))
        for f in edges[i + 1:]:
            if uniform:
                if f not in bounds:
                    bounds[f] = _lower_bounds(edges, f)
                dist, cert = _search(edges, e, f, bounds[f])
                table[(e, f)] = (dist, cert)
                rev = None
                if cert is not None:
                    rev = ChainCertificate(cert.edges[::-1], cert.links[::-1])
                table[(f, e)] = (dist, rev)
            else:
                # canonical order puts smaller edges first
                table[(f, e)] = _search(edges, f, e)
                if size(e) == size(f):
                    table[(e, f)] = _search(edges, e, f)
    return table


def dist(hypergraph, e, f):
    """Cached distance value only, for uniform hypergraphs."""
    return distance_table(hypergraph)[(e, f)][0]


def chain_shape_ok(cert, d):
    """Shortest chains of length t <= d swap one vertex of E_0 per step.

    E_i = {y_1..y_i, x_{i+1}..x_d} with y_i outside every earlier edge.
    """
    e0 = cert.edges[0]
    for i in range(1, len(cert.edges)):
        new = cert.edges[i] & ~cert.edges[i - 1]
        if size(new) != 1:
            return False
        if any(earlier & new for earlier in cert.edges[:i]):
            return False
        if size(e0 & cert.edges[i]) != d - i:
            return False
    return True


def is_properly_connected(hypergraph):
    """(flag, witness): intersecting edges must satisfy dist = d - |E & F|.

    Edgeless hypergraphs are vacuously properly-connected, and so is every
    graph: two meeting edges are properly adjacent.  Verification mode still
    runs the full search on graphs.
    """
    d = uniform_degree(hypergraph)
    if d is None:
        return True, None
    if d == 2 and not get_settings().verify:
        return True, None
    table = distance_table(hypergraph)
    edges = hypergraph.edges
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            common = size(e & f)
            if common and table[(e, f)][0] != d - common:
                return False, (e, f)
    if get_settings().verify:
        for (e, f), (value, cert) in table.items():
            if cert is not None and value <= d and not chain_shape_ok(cert, d):
                raise VerificationError(
                    f"Shortest chain {cert.describe(hypergraph)} does not swap one vertex per step",
                    hypergraph,
                )
    return True, None


def require_properly_connected(hypergraph):
    ok, witness = is_properly_connected(hypergraph)
    if not ok:
        e, f = witness
        raise NotProperlyConnected(
            witness,
            f"Hypergraph is not properly-connected: "
            f"{hypergraph.edge_label(e)} and {hypergraph.edge_label(f)} meet "
            f"but dist = {dist(hypergraph, e, f)}",
        )
    return uniform_degree(hypergraph)


def diameter(hypergraph):
    """Largest pairwise edge distance (INFINITE if some pair is unreachable)."""
    if hypergraph.is_edgeless():
        raise NoEdges("Diameter needs at least one edge")
    return max(value for value, _ in distance_table(hypergraph).values())


def neighbor_set(hypergraph, e):
    """N(E): vertices F \\ E over the edges F at distance 1 from E."""
    e = hypergraph.require_edge(e)
    d = uniform_degree(hypergraph)
    mask = 0
    for f in hypergraph.edges:
        if size(e & f) == d - 1:
            mask |= f & ~e
    if get_settings().verify:
        table = distance_table(hypergraph)
        by_distance = 0
        for f in hypergraph.edges:
            if table[(e, f)][0] == 1:
                by_distance |= f & ~e
        if by_distance != mask:
            raise VerificationError("distance-1 edges differ from edges sharing d-1 vertices", hypergraph)
    return mask


def far_subhypergraph(hypergraph, e):
    """H': the edges at distance at least d+1 from E (unreachable ones included)."""
    e = hypergraph.require_edge(e)
    d = uniform_degree(hypergraph)
    table = distance_table(hypergraph)
    far = [f for f in hypergraph.edges if table[(e, f)][0] >= d + 1]
    result = hypergraph.restrict(far)
    if get_settings().verify and is_properly_connected(hypergraph)[0]:
        if not is_properly_connected(result)[0]:
            raise VerificationError("far sub-hypergraph lost proper connectivity", hypergraph)
    return result


def _conflict_complement(hypergraph, t):
    """Graph on edge indices joining pairs that ARE t-disjoint."""
    table = distance_table(hypergraph)
    edges = hypergraph.edges
    graph = nx.Graph()
    graph.add_nodes_from(range(len(edges)))
    for i, e in enumerate(edges):
        for j in range(i + 1, len(edges)):
            if table[(e, edges[j])][0] >= t:
                graph.add_edge(i, j)
    return graph


def max_pairwise_t_disjoint(hypergraph, t):
    """(c, witness): the largest set of edges with all pairwise distances >= t."""
    uniform_degree(hypergraph)
    if hypergraph.is_edgeless():
        return 0, ()
    graph = _conflict_complement(hypergraph, t)
    clique, weight = nx.max_weight_clique(graph, weight=None)
    witness = tuple(hypergraph.edges[i] for i in sorted(clique))
    return len(witness), witness


def count_pairwise_t_disjoint(hypergraph, t):
    """{i: number of i-element pairwise t-disjoint edge sets} for i >= 1."""
    uniform_degree(hypergraph)
    counts = {}
    if hypergraph.is_edgeless():
        return counts
    graph = _conflict_complement(hypergraph, t)
    for clique in nx.enumerate_all_cliques(graph):
        counts[len(clique)] = counts.get(len(clique), 0) + 1
    return counts
