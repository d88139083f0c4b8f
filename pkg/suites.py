"""Randomized and exhaustive property suites with counterexample shrinking."""

import logging
import random
from dataclasses import dataclass, field

from betti import (
    RecursionStuck, duality_check, ek_identity_check, froberg_check, konig_check,
    linearity_report, matching_bound_check, recursive_betti, reg_bounds,
    reg_pdim, strand_count_check,
)
from generators import GenSpec, gen
from hypergraph import TooLarge, VerificationError
from ideal import edge_ideal
from metric import is_properly_connected
from oracle import (
    TooManyGenerators, TooManyVariables, degree_bound_violations, table_invariants,
    taylor_betti,
)
from structure import (
    is_splitting_edge, is_splitting_edge_pc, is_v_leaf, triangulated_report,
)

log = logging.getLogger(__name__)


class SuiteUsageError(Exception):
    pass


class Skip(Exception):
    """The instance does not meet the suite's hypothesis."""


@dataclass
class Context:
    primes: tuple
    oracle: object = taylor_betti

    @property
    def p(self):
        return self.primes[0]


@dataclass
class Violation:
    trial: int
    hypergraph: object
    message: str
    reproducer: object = None


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


# ---------------------------------------------------------------------------
# Hypotheses
# ---------------------------------------------------------------------------

def _uniform_pc(h):
    u = h.uniformity()
    if not u.is_uniform:
        raise Skip("not uniform")
    if not is_properly_connected(h)[0]:
        raise Skip("not properly-connected")
    return u.d


def _graph(h):
    if not h.is_graph():
        raise Skip("not a graph")


def _triangulated(h):
    d = _uniform_pc(h)
    if not triangulated_report(h).triangulated:
        raise Skip("not triangulated")
    return d


def _degree_bounds(h, table):
    d = h.uniformity().d
    if d is None:
        return None
    bad = degree_bound_violations(table, d, h.n)
    if bad:
        return f"entries outside the degree bounds: {bad}"
    return None


# ---------------------------------------------------------------------------
# Properties: each returns None when the instance passes, else a message
# ---------------------------------------------------------------------------

def recursion_vs_oracle(h, ctx):
    _triangulated(h)
    try:
        table, _ = recursive_betti(h)
    except RecursionStuck as err:
        log.warning("recursion cannot continue on %r: %s", h, err)
        raise Skip("no usable splitting edge") from err
    for p in ctx.primes:
        expected = ctx.oracle(edge_ideal(h), p)
        diff = table.diff(expected)
        if diff:
            return f"recursion and oracle (p={p}) differ at (i, j, recursion, oracle): {diff}"
    pair = reg_pdim(h, "recursive")
    if pair != table_invariants(table):
        return f"(reg, pdim) recursion {pair} != table {table_invariants(table)}"
    return _degree_bounds(h, table)


def char_independence(h, ctx):
    _triangulated(h)
    tables = [ctx.oracle(edge_ideal(h), p) for p in ctx.primes]
    for p, table in zip(ctx.primes[1:], tables[1:]):
        diff = tables[0].diff(table)
        if diff:
            return f"tables at p={ctx.primes[0]} and p={p} differ: {diff}"
    return None


def ek_identity(h, ctx):
    if len(h) < 2:
        raise Skip("fewer than two edges")
    pc = h.uniformity().is_uniform and is_properly_connected(h)[0]
    for e in h.edges:
        splits, _ = is_splitting_edge(h, e)
        if pc and is_splitting_edge_pc(h, e)[0] != splits:
            return f"splitting criteria disagree on {h.edge_label(e)}"
        if is_v_leaf(h, e) and not splits:
            return f"v-leaf {h.edge_label(e)} is not a splitting edge"
        if splits and not ek_identity_check(h, e, ctx.p):
            return f"EK identity fails for {h.edge_label(e)}"
    return _degree_bounds(h, ctx.oracle(edge_ideal(h), ctx.p))


def strand_count(h, ctx):
    _uniform_pc(h)
    if not strand_count_check(h, ctx.p):
        return "top strand differs from the count of pairwise (d+1)-disjoint edge sets"
    return _degree_bounds(h, ctx.oracle(edge_ideal(h), ctx.p))


def reg_bound(h, ctx):
    _uniform_pc(h)
    lower, upper = reg_bounds(h)
    reg, _ = reg_pdim(h, "oracle", ctx.p)
    if reg < lower:
        return f"reg {reg} below the lower bound {lower}"
    if upper is not None and reg > upper:
        return f"reg {reg} above the matching bound {upper}"
    if triangulated_report(h).triangulated and reg != lower:
        return f"triangulated but reg {reg} != (d-1)c+1 = {lower}"
    return None


def matching_bound(h, ctx):
    _graph(h)
    if not matching_bound_check(h, ctx.p):
        return "reg(I) - 1 exceeds the matching number"
    return None


def froberg(h, ctx):
    _graph(h)
    if not froberg_check(h, ctx.p):
        return "linear resolution does not match chordality of the complement"
    return None


def konig(h, ctx):
    _graph(h)
    if h.is_edgeless():
        raise Skip("no edges")
    if not konig_check(h, ctx.p):
        return "height inequality chain fails"
    return _degree_bounds(h, ctx.oracle(edge_ideal(h), ctx.p))


def linearity_iff(h, ctx):
    _uniform_pc(h)
    try:
        linearity_report(h, ctx.p)
    except VerificationError as err:
        return str(err)
    return None


def duality(h, ctx):
    if h.is_edgeless():
        raise Skip("no edges")
    if not duality_check(h, ctx.p):
        return "reg/pdim duality with the Alexander dual fails"
    return None


# name -> (property, default generator kind, graphs only)
SUITES = {
    "recursion-vs-oracle": (recursion_vs_oracle, "chordal", False),
    "ek-identity": (ek_identity, "graph", False),
    "strand-count": (strand_count, "graph", False),
    "reg-bounds": (reg_bound, "graph", False),
    "matching-bound": (matching_bound, "graph", True),
    "froberg": (froberg, "graph", True),
    "konig": (konig, "graph", True),
    "char-independence": (char_independence, "chordal", False),
    "linearity-iff": (linearity_iff, "graph", False),
    "duality": (duality, "graph", False),
}


# ---------------------------------------------------------------------------
# Running
# ---------------------------------------------------------------------------

def _evaluate(prop, h, ctx):
    """'skip', None (pass) or a failure message."""
    try:
        return prop(h, ctx)
    except Skip:
        return "skip"
    except (TooManyGenerators, TooManyVariables, TooLarge):
        return "skip"
    except VerificationError as err:
        return f"verification failed: {err}"


def shrink(prop, h, ctx):
    """Greedily delete edges while the property keeps failing, then drop unused vertices."""
    changed = True
    while changed:
        changed = False
        for e in h.edges:
            smaller = h.remove_edge(e)
            result = _evaluate(prop, smaller, ctx)
            if result not in (None, "skip"):
                h = smaller
                changed = True
                break
    return h.compressed()


def instances(kind, n, trials, seed, d=3, exhaustive=False):
    """Seeded instance stream; sizes cycle through the allowed vertex counts up to n.

    With exhaustive, every labeled graph on exactly n vertices instead.
    """
    if exhaustive:
        yield from gen(GenSpec("exhaustive-graphs", n))
        return
    low = d if kind in ("v-tree", "pc-uniform") else 2
    sizes = list(range(low, n + 1)) or [n]
    rng = random.Random(seed)
    for trial in range(trials):
        spec = GenSpec(kind, sizes[trial % len(sizes)], d=d if kind in ("v-tree", "pc-uniform") else 2,
                       density=rng.choice((0.3, 0.5, 0.7)), seed=rng.getrandbits(64), count=1)
        yield from gen(spec)


def run_suite(name, n=6, trials=50, seed=0, primes=(2, 32003), kind=None, d=3,
              exhaustive=False, oracle=taylor_betti):
    """Run one named suite and return its SuiteResult."""
    if name not in SUITES:
        raise SuiteUsageError(f"Unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    prop, default_kind, graphs_only = SUITES[name]
    kind = kind or default_kind
    if graphs_only and kind not in ("graph", "chordal"):
        raise SuiteUsageError(f"Suite {name} needs graphs, not {kind}")
    ctx = Context(tuple(primes), oracle)
    result = SuiteResult(name)
    for trial, h in enumerate(instances(kind, n, trials, seed, d, exhaustive)):
        outcome = _evaluate(prop, h, ctx)
        if outcome == "skip":
            result.skipped += 1
            continue
        result.checked += 1
        if outcome is not None:
            log.warning("%s: trial %d fails: %s", name, trial, outcome)
            result.violations.append(Violation(trial, h, outcome, shrink(prop, h, ctx)))
        if (trial + 1) % 100 == 0:
            log.info("%s: %d instances done", name, trial + 1)
    return result


def run_all(**kwargs):
    kwargs.pop("kind", None)
    return [run_suite(name, **kwargs) for name in SUITES]
