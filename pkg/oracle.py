"""Graded Betti numbers of squarefree monomial ideals from the Taylor complex.

Ground truth for everything else in the package.  The Taylor complex
tensored with k = R/m has a basis e_S for the nonempty subsets S of
generators; the induced differential keeps only the faces S \\ {g} with
lcm(S \\ {g}) = lcm(S), so the complex splits into one strand per
multidegree m = lcm(S).  Then beta_{i-1,j}(I) = dim H_i, summed over the
strands with |m| = j.

Indexing is ideal-indexed throughout: beta_{0,j}(I) counts generators of
degree j.  For R/I shift by one: beta_{i,j}(R/I) = beta_{i-1,j}(I).
"""

import logging
from collections import defaultdict

import numpy as np

from hypergraph import HypergraphError, members, size, vset
from modp import MAX_PRIME, is_prime, rank_mod_p
from settings import get_settings

log = logging.getLogger(__name__)


class TooManyGenerators(HypergraphError):
    def __init__(self, count, cap):
        self.count = count
        self.cap = cap
        super().__init__(f"Ideal has {count} generators; the Taylor oracle is capped at {cap}")


class NotPrime(HypergraphError):
    pass


# lcm masks live in signed 64-bit arrays
MAX_VARIABLES = 62


class TooManyVariables(HypergraphError):
    def __init__(self, count):
        self.count = count
        super().__init__(
            f"Generators involve {count} variables; the Taylor oracle handles at most {MAX_VARIABLES}"
        )


class BettiTable:
    """Nonzero graded Betti numbers beta_{i,j}(I), keyed by (i, j)."""

    __slots__ = ("entries",)

    def __init__(self, entries=None):
        self.entries = {
            (int(i), int(j)): int(v) for (i, j), v in (entries or {}).items() if v
        }

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        body = ", ".join(f"b{i},{j}={v}" for (i, j), v in self.items())
        return f"BettiTable({body})"

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def get(self, i, j):
        return self.entries.get((i, j), 0)

    def items(self):
        return sorted(self.entries.items())

    def is_empty(self):
        return not self.entries

    def max_index(self):
        return max((i for i, _ in self.entries), default=-1)

    def degrees(self):
        return sorted({j for _, j in self.entries})

    def total(self, i):
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def strand(self, i):
        """{j: beta_{i,j}} for one homological index."""
        return {j: v for (a, j), v in self.entries.items() if a == i}

    def diff(self, other):
        """[(i, j, mine, theirs)] wherever the two tables disagree."""
        keys = sorted(set(self.entries) | set(other.entries))
        return [(i, j, self[(i, j)], other[(i, j)])
                for i, j in keys if self[(i, j)] != other[(i, j)]]


def _check_prime(p):
    if not is_prime(p) or p >= MAX_PRIME:
        raise NotPrime(f"{p} is not a supported prime characteristic")


def _packed(gens):
    """gens renumbered onto the variables they actually use, in order."""
    support = 0
    for g in gens:
        support |= g
    used = members(support)
    if len(used) > MAX_VARIABLES:
        raise TooManyVariables(len(used))
    index = {v: k for k, v in enumerate(used)}
    return [vset(index[v] for v in members(g)) for g in gens]


def _subset_arrays(gens):
    """lcm and cardinality of every subset of generators, indexed by bit mask."""
    lcm = np.zeros(1, dtype=np.int64)
    count = np.zeros(1, dtype=np.int64)
    for g in gens:
        lcm = np.concatenate([lcm, lcm | np.int64(g)])
        count = np.concatenate([count, count + 1])
    return lcm, count


def _strand_cells(gens, lcm, reduce):
    """Subset masks kept for the homology computation.

    With reduce, each strand m keeps only the subsets S that contain the
    lowest-index generator g dividing m and satisfy lcm(S \\ g) != m.  The
    discarded cells form a cone on g, which is acyclic, and the kept ones
    form a subcomplex with the same homology.
    """
    idx = np.arange(lcm.size, dtype=np.int64)
    if not reduce:
        return idx[1:]
    pivot = np.full(lcm.size, -1, dtype=np.int64)
    for k in range(len(gens) - 1, -1, -1):
        pivot[(np.int64(gens[k]) & ~lcm) == 0] = k
    pivot[0] = 0
    has_pivot = ((idx >> pivot) & 1) == 1
    without = lcm[idx ^ (np.int64(1) << pivot)]
    keep = has_pivot & (without != lcm)
    keep[0] = False
    return idx[keep]


def _strand_homology(by_size, p):
    """{i: dim H_i} for one strand, given {i: [subset masks of size i]}."""
    position = {}
    for cells in by_size.values():
        for col, mask in enumerate(cells):
            position[mask] = col
    ranks = {}
    for i, cells in by_size.items():
        faces = by_size.get(i - 1)
        if i < 2 or not faces:
            ranks[i] = 0
            continue
        face_set = set(faces)
        matrix = np.zeros((len(faces), len(cells)), dtype=np.int64)
        for col, mask in enumerate(cells):
            sign = 1
            rest = mask
            while rest:
                bit = rest & -rest
                face = mask ^ bit
                if face in face_set:
                    matrix[position[face], col] = sign
                sign = -sign
                rest ^= bit
        ranks[i] = rank_mod_p(matrix, p)
    homology = {}
    for i, cells in by_size.items():
        h = len(cells) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        if h:
            homology[i] = h
    return homology


def taylor_betti(ideal, p=2, reduce=None):
    """Exact graded Betti table of a squarefree monomial ideal over GF(p).

    Args:
        ideal: MonomialIdeal with at most settings.generator_cap generators.
        p: prime characteristic of the coefficient field.
        reduce: drop the acyclic cone of every strand first (defaults to
            settings.reduce_strands).
    """
    _check_prime(p)
    settings = get_settings()
    if reduce is None:
        reduce = settings.reduce_strands
    gens = list(ideal.gens)
    if len(gens) > settings.generator_cap:
        raise TooManyGenerators(len(gens), settings.generator_cap)

    entries = defaultdict(int)
    for g in gens:
        entries[(0, size(g))] += 1
    if len(gens) < 2:
        return BettiTable(entries)

    gens = _packed(gens)
    lcm, count = _subset_arrays(gens)
    cells = _strand_cells(gens, lcm, reduce)
    strands = defaultdict(lambda: defaultdict(list))
    for mask, m, c in zip(cells.tolist(), lcm[cells].tolist(), count[cells].tolist()):
        strands[m][c].append(mask)
    log.debug("Taylor complex: %d generators, %d cells in %d strands (p=%d)",
              len(gens), cells.size, len(strands), p)

    for m, by_size in strands.items():
        if max(by_size) < 2:
            continue
        degree = size(m)
        for i, h in _strand_homology(by_size, p).items():
            if i >= 2:
                entries[(i - 1, degree)] += h
    return BettiTable(entries)


def table_invariants(table):
    """(reg, pdim); the zero ideal has reg 1 and pdim -1 by convention."""
    if table.is_empty():
        return 1, -1
    reg = max(j - i for i, j in table.entries)
    pdim = max(i for i, _ in table.entries)
    return reg, pdim


def char_compare(ideal, p1, p2):
    """(equal, diff) between the tables of one ideal in two characteristics."""
    first = taylor_betti(ideal, p1)
    second = taylor_betti(ideal, p2)
    diff = first.diff(second)
    return not diff, diff


def has_linear_resolution(table, d):
    return all(j == i + d for i, j in table.entries)


def has_linear_first_syzygies(table, d):
    return all(j == d + 1 for j in table.strand(1))


def degree_bound_violations(table, d, n):
    """Entries outside i + d <= j <= min(n, d(i+1)) for a d-uniform ideal."""
    return [(i, j) for i, j in sorted(table.entries)
            if not i + d <= j <= min(n, d * (i + 1))]


def euler_characteristics(table):
    """{j: sum_i (-1)^i beta_{i,j}}, which does not depend on the field."""
    chi = defaultdict(int)
    for (i, j), v in table.entries.items():
        chi[j] += -v if i % 2 else v
    return {j: v for j, v in sorted(chi.items()) if v}
