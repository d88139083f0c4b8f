"""Finite simple hypergraphs on vertices 0..n-1.

Vertex sets are encoded as integer bit masks (bit v set <=> vertex v is a
member).  Every Hypergraph is immutable and keeps its edges in canonical
order: by cardinality, then lexicographically on the sorted members.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------

class HypergraphError(ValueError):
    """Root of every input/precondition error raised by this package."""


class LoopEdge(HypergraphError):
    def __init__(self, edge, position=None):
        self.edge = edge
        self.position = position
        super().__init__(f"Edge {format_set(edge)} has fewer than 2 vertices")


class ContainedEdge(HypergraphError):
    def __init__(self, inner, outer, positions=None):
        self.inner = inner
        self.outer = outer
        self.positions = positions
        if inner == outer:
            msg = f"Edge {format_set(inner)} appears more than once"
        else:
            msg = f"Edge {format_set(inner)} is contained in edge {format_set(outer)}"
        super().__init__(msg)


class VertexOutOfRange(HypergraphError):
    def __init__(self, vertex, n, position=None):
        self.vertex = vertex
        self.n = n
        self.position = position
        super().__init__(f"Vertex {vertex} is outside 0..{n - 1}")


class NoSuchEdge(HypergraphError):
    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"{format_set(edge)} is not an edge of the hypergraph")


class NotUniform(HypergraphError):
    pass


class NoEdges(HypergraphError):
    pass


class TooFewEdges(HypergraphError):
    pass


class NotAGraph(HypergraphError):
    pass


class TooLarge(HypergraphError):
    pass


class VerificationError(AssertionError):
    """A checked identity or lemma failed in verification mode."""

    def __init__(self, message, hypergraph=None):
        self.hypergraph = hypergraph
        super().__init__(message)


# ---------------------------------------------------------------------------
# Vertex-set helpers
# ---------------------------------------------------------------------------

def vset(vertices):
    """Bit mask of an iterable of vertex indices (an int is returned as-is)."""
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        if v < 0:
            raise VertexOutOfRange(v, 0)
        mask |= 1 << v
    return mask


def members(mask):
    """Sorted tuple of the vertices in a bit mask."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def size(mask):
    return bin(mask).count("1")


def lowest(mask):
    """Index of the lowest set bit (mask must be nonzero)."""
    return (mask & -mask).bit_length() - 1


def format_set(mask, labels=None):
    if not isinstance(mask, int):
        mask = vset(mask)
    if labels:
        return "{" + ",".join(labels[v] for v in members(mask)) + "}"
    return "{" + ",".join(str(v) for v in members(mask)) + "}"


def edge_sort_key(mask):
    return (size(mask), members(mask))


def default_labels(n):
    return tuple(f"x{v + 1}" for v in range(n))


# ---------------------------------------------------------------------------
# Hypergraph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Uniformity:
    """Common edge cardinality; kind is 'uniform', 'non-uniform' or 'empty'."""

    kind: str
    d: int = None

    @property
    def is_uniform(self):
        return self.kind == "uniform"

    def __str__(self):
        if self.kind == "uniform":
            return str(self.d)
        if self.kind == "empty":
            return "no edges"
        return "non-uniform"


class Hypergraph:
    """Represents a validated simple hypergraph with canonically ordered edges."""

    __slots__ = ("n", "edges", "labels", "_edge_set")

    def __init__(self, n, edges, labels=None):
        # Callers outside this module go through build(), which validates.
        self.n = n
        self.edges = tuple(sorted(edges, key=edge_sort_key))
        self.labels = tuple(labels) if labels is not None else default_labels(n)
        self._edge_set = frozenset(self.edges)

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        body = ", ".join(self.edge_label(e) for e in self.edges)
        return f"Hypergraph(n={self.n}, edges=[{body}])"

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, edge):
        return vset(edge) in self._edge_set

    # -- display ---------------------------------------------------------

    def edge_label(self, edge):
        """Juxtaposed vertex labels, e.g. 'abe' or 'x1x2x3'."""
        return "".join(self.labels[v] for v in members(vset(edge)))

    def vertex_label(self, v):
        return self.labels[v]

    # -- basic queries ---------------------------------------------------

    @property
    def vertex_mask(self):
        return (1 << self.n) - 1

    @property
    def support(self):
        """Vertices lying in at least one edge."""
        mask = 0
        for e in self.edges:
            mask |= e
        return mask

    def is_edgeless(self):
        return not self.edges

    def require_edge(self, edge):
        edge = vset(edge)
        if edge not in self._edge_set:
            raise NoSuchEdge(edge)
        return edge

    def require_vertex(self, x):
        if not 0 <= x < self.n:
            raise VertexOutOfRange(x, self.n)
        return x

    def degree(self, x):
        bit = 1 << x
        return sum(1 for e in self.edges if e & bit)

    def uniformity(self):
        if not self.edges:
            return Uniformity("empty")
        sizes = {size(e) for e in self.edges}
        if len(sizes) == 1:
            return Uniformity("uniform", sizes.pop())
        return Uniformity("non-uniform")

    def is_graph(self):
        return all(size(e) == 2 for e in self.edges)

    def require_graph(self):
        if not self.is_graph():
            raise NotAGraph("A simple graph (every edge of size 2) is required")

    # -- derived hypergraphs ---------------------------------------------

    def _derive(self, edges):
        return Hypergraph(self.n, edges, self.labels)

    def remove_edge(self, edge):
        """H \\ E: the same vertex set with one edge deleted."""
        edge = self.require_edge(edge)
        return self._derive(e for e in self.edges if e != edge)

    def remove_vertex(self, x):
        """H \\ {x}: drop every edge through x; x stays as an isolated vertex."""
        self.require_vertex(x)
        bit = 1 << x
        return self._derive(e for e in self.edges if not e & bit)

    def induced(self, subset):
        """H_Y: edges lying entirely inside Y (n is unchanged)."""
        subset = vset(subset)
        return self._derive(e for e in self.edges if e & subset == e)

    def restrict(self, edges):
        """Sub-hypergraph on the given subset of this hypergraph's edges."""
        return self._derive(edges)

    def neighborhood(self, x):
        """N(x): all vertices other than x sharing an edge with x."""
        self.require_vertex(x)
        bit = 1 << x
        mask = 0
        for e in self.edges:
            if e & bit:
                mask |= e
        return mask & ~bit

    def complement(self, d):
        """H^c: every d-subset of the vertex set that is not an edge."""
        u = self.uniformity()
        if u.kind == "non-uniform" or (u.is_uniform and u.d != d):
            raise NotUniform(f"Complement in degree {d} needs a {d}-uniform hypergraph, got {u}")
        new_edges = []
        for combo in combinations(range(self.n), d):
            mask = vset(combo)
            if mask not in self._edge_set:
                new_edges.append(mask)
        if d < 2 and new_edges:
            raise LoopEdge(new_edges[0])
        return self._derive(new_edges)

    def is_d_complete(self, subset, d):
        """True iff the induced hypergraph on Y contains every d-subset of Y."""
        subset = vset(subset)
        k = size(subset)
        if k < d:
            return True
        inside = sum(1 for e in self.edges if e & subset == e and size(e) == d)
        return inside == comb(k, d)

    def compressed(self):
        """Same edge structure on the vertices actually used, renumbered in order."""
        used = members(self.support)
        index = {v: i for i, v in enumerate(used)}
        edges = [vset(index[v] for v in members(e)) for e in self.edges]
        return Hypergraph(len(used), edges, [self.labels[v] for v in used])


def build(n, edges, labels=None):
    """Validate and canonicalize a hypergraph.

    Args:
        n: vertex count.
        edges: iterable of edges, each a bit mask or an iterable of indices.
        labels: optional list of n distinct display strings.

    Raises LoopEdge, ContainedEdge or VertexOutOfRange on invalid input.
    """
    if n < 0:
        raise HypergraphError("Vertex count must be non-negative")
    masks = []
    for position, edge in enumerate(edges):
        if not isinstance(edge, int):
            edge = list(edge)
            for v in edge:
                if not 0 <= v < n:
                    raise VertexOutOfRange(v, n, position)
            edge = vset(edge)
        elif edge >> n:
            raise VertexOutOfRange(edge.bit_length() - 1, n, position)
        if size(edge) < 2:
            raise LoopEdge(edge, position)
        masks.append(edge)

    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if i != j and a & b == a and (a != b or i > j):
                raise ContainedEdge(a, b, (i, j))

    if labels is not None:
        labels = [str(label) for label in labels]
        if len(labels) != n:
            raise HypergraphError(f"Expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise HypergraphError("Vertex labels must be distinct")
    return Hypergraph(n, masks, labels)


def complete(n, d):
    """K^d_n: every d-subset of n vertices."""
    return build(n, [vset(c) for c in combinations(range(n), d)])
