"""Squarefree monomial ideals.

A squarefree monomial is stored as the bit mask of its support, so
divisibility is subset inclusion and lcm is bitwise or.
"""

import logging

import networkx as nx

from hypergraph import HypergraphError, VerificationError, edge_sort_key, members, size
from metric import (
    far_subhypergraph, neighbor_set, require_properly_connected,
)
from settings import get_settings

log = logging.getLogger(__name__)


def format_monomial(mask, labels=None):
    if not mask:
        return "1"
    if labels is None:
        return "".join(f"x{v + 1}" for v in members(mask))
    return "".join(labels[v] for v in members(mask))


def _minimal(masks):
    """Divisibility-minimal subset of the masks, in canonical order."""
    kept = []
    for m in sorted(set(masks), key=edge_sort_key):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(kept)


class MonomialIdeal:
    """Ideal generated by squarefree monomials in n variables."""

    __slots__ = ("gens", "n")

    def __init__(self, gens, n):
        self.gens = _minimal(gens)
        self.n = n

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        return f"MonomialIdeal({self.format()})"

    def __len__(self):
        return len(self.gens)

    def format(self, labels=None):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(format_monomial(g, labels) for g in self.gens) + ")"

    def is_zero(self):
        return not self.gens

    def degrees(self):
        return [size(g) for g in self.gens]

    def contains(self, monomial):
        return any(g & monomial == g for g in self.gens)

    def is_subideal_of(self, other):
        return all(other.contains(g) for g in self.gens)

    def multiply(self, monomial):
        """m * I, for a monomial m whose support misses every generator."""
        return MonomialIdeal((g | monomial for g in self.gens), self.n)

    def plus(self, other):
        return MonomialIdeal(self.gens + other.gens, max(self.n, other.n))


def edge_ideal(hypergraph):
    """I(H): one generator x^E per edge; the zero ideal when edgeless."""
    return MonomialIdeal(hypergraph.edges, hypergraph.n)


def minimalize(gens, n=0):
    if not n:
        n = max((g.bit_length() for g in gens), default=0)
    return MonomialIdeal(gens, n)


def principal(monomial, n):
    return MonomialIdeal([monomial], n)


def intersect_principal(monomial, ideal):
    """(m) & I, generated by the lcms of m with each generator of I."""
    return MonomialIdeal((monomial | g for g in ideal.gens), ideal.n)


def intersection_decomposition(hypergraph, e):
    """(N(E), H', x^E((z_1..z_t) + I(H'))) for a properly-connected H.

    In verification mode the ideal is compared with the direct
    intersection (x^E) & I(H \\ E).
    """
    e = hypergraph.require_edge(e)
    require_properly_connected(hypergraph)
    nbrs = neighbor_set(hypergraph, e)
    far = far_subhypergraph(hypergraph, e)
    gens = [e | (1 << z) for z in members(nbrs)] + [e | h for h in far.edges]
    ideal = MonomialIdeal(gens, hypergraph.n)
    if get_settings().verify:
        direct = intersect_principal(e, edge_ideal(hypergraph.remove_edge(e)))
        if direct != ideal:
            raise VerificationError(
                f"(x^E) & I(H\\E) = {direct.format()} but decomposition gave {ideal.format()}",
                hypergraph,
            )
        if any(h & (e | nbrs) for h in far.edges):
            raise VerificationError("far edge meets E or N(E)", hypergraph)
    return nbrs, far, ideal


def minimal_transversals(supports):
    """All inclusion-minimal vertex sets meeting every support.

    Edges are folded in one at a time; after each step the candidate
    family is reduced to its minimal members.
    """
    family = (0,)
    for s in supports:
        grown = set()
        for t in family:
            if t & s:
                grown.add(t)
            else:
                for v in members(s):
                    grown.add(t | (1 << v))
        family = _minimal(grown)
    return family


def alexander_dual(ideal):
    """I^v: intersection of the variable primes of the generators."""
    if ideal.is_zero():
        raise HypergraphError("The Alexander dual of the zero ideal is the unit ideal")
    return MonomialIdeal(minimal_transversals(ideal.gens), ideal.n)


def min_vertex_covers(hypergraph):
    """Every minimal vertex cover, in canonical order."""
    return list(minimal_transversals(hypergraph.edges))


def height(ideal):
    """Smallest generator degree of the dual, i.e. the smallest vertex cover."""
    if ideal.is_zero():
        return 0
    return min(size(t) for t in minimal_transversals(ideal.gens))


def is_unmixed(hypergraph):
    return len({size(c) for c in min_vertex_covers(hypergraph)}) <= 1


def matching_number(hypergraph):
    """alpha'(H): the most pairwise disjoint edges."""
    edges = hypergraph.edges
    if not edges:
        return 0
    if hypergraph.is_graph():
        graph = nx.Graph()
        graph.add_edges_from(members(e) for e in edges)
        return len(nx.max_weight_matching(graph, maxcardinality=True))
    disjoint = nx.Graph()
    disjoint.add_nodes_from(range(len(edges)))
    for i, a in enumerate(edges):
        for j in range(i + 1, len(edges)):
            if not a & edges[j]:
                disjoint.add_edge(i, j)
    clique, _ = nx.max_weight_clique(disjoint, weight=None)
    return len(clique)
