"""Seeded random and exhaustive instance streams for the property suites."""

import logging
import random
from dataclasses import dataclass
from itertools import combinations

from hypergraph import HypergraphError, build, members, vset
from metric import is_properly_connected
from settings import get_settings

log = logging.getLogger(__name__)

KINDS = ("graph", "chordal", "v-tree", "pc-uniform", "exhaustive-graphs")

MAX_VERTICES = 62
MAX_EXHAUSTIVE_VERTICES = 7


class CapExceeded(HypergraphError):
    pass


@dataclass(frozen=True)
class GenSpec:
    """What to generate.

    kind: one of KINDS.  d applies to v-tree and pc-uniform (graphs use 2).
    Either density (edge probability) or edges (exact edge count) sets
    how many edges a random instance gets.  count bounds the stream;
    None means endless for the random kinds.
    """

    kind: str
    n: int
    d: int = 2
    density: float = 0.5
    edges: int = None
    seed: int = 0
    count: int = None


@dataclass
class GenStats:
    produced: int = 0
    rejected: int = 0
    attempts: int = 0

    @property
    def acceptance_rate(self):
        return self.produced / self.attempts if self.attempts else 1.0


def new_seed():
    return random.SystemRandom().getrandbits(64)


def _shuffled_labels(rng, n, masks):
    """Apply a random vertex permutation to the edge masks."""
    perm = list(range(n))
    rng.shuffle(perm)
    return [vset(perm[v] for v in members(m)) for m in masks]


def _random_graph(spec, rng):
    pairs = [vset(p) for p in combinations(range(spec.n), 2)]
    if spec.edges is not None:
        chosen = rng.sample(pairs, min(spec.edges, len(pairs)))
    else:
        chosen = [p for p in pairs if rng.random() < spec.density]
    return build(spec.n, chosen)


def _random_chordal(spec, rng):
    """Add vertices one at a time, each joined to a clique of the graph so far."""
    adjacency = [0] * spec.n
    for v in range(1, spec.n):
        if rng.random() >= spec.density:
            continue
        u = rng.randrange(v)
        clique = 1 << u
        for w in rng.sample(members(adjacency[u]), len(members(adjacency[u]))):
            if adjacency[w] & clique == clique and rng.random() < spec.density:
                clique |= 1 << w
        for w in members(clique):
            adjacency[w] |= 1 << v
        adjacency[v] = clique
    masks = [(1 << v) | (1 << w) for v in range(spec.n) for w in members(adjacency[v]) if w < v]
    return build(spec.n, _shuffled_labels(rng, spec.n, masks))


def _random_v_tree(spec, rng):
    """Start from one d-edge; each new edge keeps d-1 vertices of an old one plus a fresh vertex."""
    d = spec.d
    edges = [vset(range(d))]
    for v in range(d, spec.n):
        base = members(rng.choice(edges))
        kept = rng.sample(base, d - 1)
        edges.append(vset(kept) | (1 << v))
    return build(spec.n, _shuffled_labels(rng, spec.n, edges))


def _random_uniform(spec, rng):
    candidates = [vset(c) for c in combinations(range(spec.n), spec.d)]
    if spec.edges is not None:
        m = min(spec.edges, len(candidates))
    else:
        m = max(1, round(spec.density * len(candidates)))
    return build(spec.n, rng.sample(candidates, m))


def _check(spec):
    if spec.kind not in KINDS:
        raise HypergraphError(f"Unknown generator kind {spec.kind!r}; expected one of {', '.join(KINDS)}")
    if spec.kind == "exhaustive-graphs" and spec.n > MAX_EXHAUSTIVE_VERTICES:
        raise CapExceeded(f"Exhaustive graphs are capped at n={MAX_EXHAUSTIVE_VERTICES}")
    if spec.n > MAX_VERTICES:
        raise CapExceeded(f"n={spec.n} exceeds the generator cap of {MAX_VERTICES}")
    if spec.kind in ("v-tree", "pc-uniform") and not 2 <= spec.d <= spec.n:
        raise HypergraphError(f"Edge size d={spec.d} must lie in 2..n")


class Stream:
    """Iterable over generated hypergraphs; stats fill in as it is consumed."""

    def __init__(self, spec):
        _check(spec)
        self.spec = spec
        self.stats = GenStats()

    def __iter__(self):
        spec = self.spec
        if spec.kind == "exhaustive-graphs":
            yield from self._exhaustive()
            return
        rng = random.Random(spec.seed)
        while spec.count is None or self.stats.produced < spec.count:
            h = self._next(rng)
            self.stats.produced += 1
            yield h
        if spec.kind in ("pc-uniform", "v-tree"):
            log.info("%s(d=%d, n=%d): %d accepted out of %d attempts (%.1f%%)",
                     spec.kind, spec.d, spec.n, self.stats.produced, self.stats.attempts,
                     100 * self.stats.acceptance_rate)

    def _exhaustive(self):
        pairs = [vset(p) for p in combinations(range(self.spec.n), 2)]
        for subset in range(1 << len(pairs)):
            self.stats.attempts += 1
            self.stats.produced += 1
            yield build(self.spec.n, [pairs[k] for k in members(subset)])

    def _next(self, rng):
        spec = self.spec
        if spec.kind == "graph":
            self.stats.attempts += 1
            return _random_graph(spec, rng)
        if spec.kind == "chordal":
            self.stats.attempts += 1
            return _random_chordal(spec, rng)
        sample = _random_v_tree if spec.kind == "v-tree" else _random_uniform
        cap = get_settings().rejection_attempts
        for _ in range(cap):
            self.stats.attempts += 1
            h = sample(spec, rng)
            if is_properly_connected(h)[0]:
                return h
            self.stats.rejected += 1
            if spec.kind == "v-tree":
                log.warning("v-tree instance is not properly-connected, excluded: %r", h)
        raise CapExceeded(
            f"No properly-connected {spec.kind} instance on {spec.n} vertices "
            f"after {cap} attempts"
        )


def gen(spec):
    """Stream of hypergraphs for spec; identical specs give identical streams."""
    return Stream(spec)
