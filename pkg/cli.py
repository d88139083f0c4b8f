"""Command line: Betti tables, invariant reports and property suites.

Exit codes: 0 success, 1 usage, 2 invalid input, 3 property violation,
4 method inapplicable.
"""

import argparse
import logging
import sys

from betti import RecursionStuck, recursive_betti
from generators import KINDS, new_seed
from hypergraph import HypergraphError, VerificationError, size, vset
from hypergraph_io import load, render_text
from ideal import alexander_dual, edge_ideal, height, is_unmixed, matching_number
from metric import (
    INFINITE, NotProperlyConnected, diameter, distance,
    is_properly_connected, max_pairwise_t_disjoint,
)
from oracle import (
    BettiTable, TooManyGenerators, TooManyVariables, has_linear_resolution,
    table_invariants, taylor_betti,
)
from report_writer import (
    InvariantsReport, SplitEntry, render_betti, render_invariants, write_workbook,
)
from settings import get_settings, override
from structure import (
    NotTriangulated, is_f_forest, is_f_leaf, is_v_forest, is_v_leaf,
    splitting_edges, triangulated_report,
)
from suites import SUITES, SuiteUsageError, run_suite

log = logging.getLogger("betti")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_VIOLATION = 3
EXIT_INAPPLICABLE = 4

METHODS = ("auto", "recursive", "oracle")


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _inapplicable(hypergraph):
    """Why the recursion cannot run on H, or None."""
    u = hypergraph.uniformity()
    if u.kind == "non-uniform":
        return "hypergraph is not uniform"
    try:
        if u.is_uniform and not triangulated_report(hypergraph).triangulated:
            return "hypergraph is not triangulated"
    except NotProperlyConnected as err:
        return str(err)
    return None


def compute_table(hypergraph, method, p):
    """(table, method actually used); NotTriangulated when recursion is impossible."""
    if method == "oracle":
        return taylor_betti(edge_ideal(hypergraph), p), "oracle"
    reason = _inapplicable(hypergraph)
    if reason is None:
        try:
            table, trace = recursive_betti(hypergraph)
        except RecursionStuck as err:
            if method == "recursive":
                raise
            reason = str(err)
        else:
            for line in trace.lines():
                log.debug("%s", line)
            return table, "recursive"
    if method == "recursive":
        raise NotTriangulated(f"Recursive method needs a triangulated hypergraph: {reason}")
    log.info("falling back to the oracle: %s", reason)
    return taylor_betti(edge_ideal(hypergraph), p), "oracle"


def parse_edge(hypergraph, text):
    """An edge given by canonical index or by comma-separated vertex labels."""
    text = text.strip()
    if text.isdigit():
        k = int(text)
        if k >= len(hypergraph):
            raise HypergraphError(f"Edge index {k} out of range (hypergraph has {len(hypergraph)} edges)")
        return hypergraph.edges[k]
    index = {label: v for v, label in enumerate(hypergraph.labels)}
    labels = [part for part in text.replace(",", " ").split() if part]
    unknown = [label for label in labels if label not in index]
    if unknown:
        raise HypergraphError(f"Unknown vertex {unknown[0]!r}")
    return hypergraph.require_edge(vset(index[label] for label in labels))


def collect_invariants(hypergraph, p):
    """Everything the invariants command reports, as an InvariantsReport."""
    h = hypergraph
    settings = get_settings()
    u = h.uniformity()
    notes = []
    pc = None
    if u.kind != "non-uniform":
        pc, witness = is_properly_connected(h)
        if not pc:
            e, f = witness
            notes.append(f"{h.edge_label(e)} and {h.edge_label(f)} meet but their distance "
                         f"is not d - |E & F|")
    triangulated = method = diam = c = None
    if pc and u.is_uniform:
        report = triangulated_report(h)
        triangulated, method = report.triangulated, report.method
        if report.discrepancy:
            notes.append("elimination search and exhaustive check disagree")
        value = diameter(h)
        diam = "inf" if value == INFINITE else str(value)
        c, _ = max_pairwise_t_disjoint(h, u.d + 1)

    ideal = edge_ideal(h)
    if len(ideal) <= settings.generator_cap:
        table = taylor_betti(ideal, p)
    else:
        table = None
        if triangulated:
            try:
                table, _ = recursive_betti(h)
            except RecursionStuck as err:
                notes.append(str(err))
        if table is None:
            notes.append(f"{len(ideal)} generators exceed the oracle cap; reg/pdim not computed")
    reg, pdim = table_invariants(table) if table is not None else (None, None)
    linear = None
    if table is not None and u.is_uniform:
        linear = has_linear_resolution(table, u.d)

    v_forest = f_forest = None
    if size(h.support) <= settings.exhaustive_cap:
        v_forest, f_forest = is_v_forest(h), is_f_forest(h)
    else:
        notes.append("forest checks skipped above the exhaustive cap")

    return InvariantsReport(
        n=h.n,
        d=u.d,
        uniformity=str(u),
        edges=len(h),
        properly_connected=pc,
        triangulated=triangulated,
        triangulated_method=method,
        diameter=diam,
        c=c,
        matching_number=matching_number(h),
        min_cover_size=height(ideal),
        unmixed=is_unmixed(h),
        reg=reg,
        pdim=pdim,
        linear_resolution=linear,
        splitting_edges=[SplitEntry(edge=h.edge_label(e), z=h.vertex_label(w.z))
                         for e, w in splitting_edges(h)],
        v_leaves=[h.edge_label(e) for e in h.edges if is_v_leaf(h, e)],
        f_leaves=[h.edge_label(e) for e in h.edges if is_f_leaf(h, e)],
        v_forest=v_forest,
        f_forest=f_forest,
        notes=notes,
    )


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _require_output(args):
    if args.format == "xlsx" and not args.output:
        raise UsageError("--format xlsx needs --output FILE")


def _emit(args, text):
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_betti(args):
    _require_output(args)
    h = load(args.file)
    try:
        table, used = compute_table(h, args.method, args.char)
    except NotTriangulated as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    if args.format == "xlsx":
        write_workbook(args.output, table=table)
        print(f"Wrote {args.output}")
    else:
        _emit(args, render_betti(table, args.format, used, args.char, h.n))
    return EXIT_OK


def cmd_invariants(args):
    _require_output(args)
    h = load(args.file)
    report = collect_invariants(h, args.char)
    if args.format == "xlsx":
        write_workbook(args.output, report=report)
        print(f"Wrote {args.output}")
    else:
        _emit(args, render_invariants(report, args.format))
    return EXIT_OK


def cmd_distance(args):
    h = load(args.file)
    e = parse_edge(h, args.e1)
    f = parse_edge(h, args.e2)
    if size(e) < size(f):
        e, f = f, e
    value, cert = distance(h, e, f)
    if value == INFINITE:
        print(f"distance inf: no proper chain from {h.edge_label(e)} to {h.edge_label(f)}")
    else:
        print(f"distance {value}")
        print(f"chain: {cert.describe(h)}")
    return EXIT_OK


def cmd_dual(args):
    h = load(args.file)
    dual = alexander_dual(edge_ideal(h))
    print(f"I^v = {dual.format(h.labels)}")
    print(f"{len(dual)} generators, degrees {sorted(dual.degrees())}")
    return EXIT_OK


def cmd_split(args):
    h = load(args.file)
    found = splitting_edges(h)
    if not found:
        print("no splitting edges")
        return EXIT_OK
    for e, witness in found:
        partners = "; ".join(f"{h.edge_label(g)} via {h.edge_label(other)}"
                             for g, other in witness.partners)
        line = f"{h.edge_label(e)} (z={h.vertex_label(witness.z)})"
        print(f"{line}: {partners}" if partners else line)
    return EXIT_OK


def _mutant(ideal, p=2):
    """Oracle with beta_{0,j} inflated by one, for harness self-tests."""
    table = taylor_betti(ideal, p)
    entries = dict(table.entries)
    if entries:
        key = min(entries)
        entries[key] += 1
    return BettiTable(entries)


def cmd_check(args):
    seed = args.seed
    if seed is None:
        seed = new_seed()
        print(f"seed: {seed}")
    primes = (args.char,) + tuple(p for p in get_settings().primes if p != args.char)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    status = EXIT_OK
    for name in names:
        result = run_suite(
            name, n=args.n, trials=args.trials, seed=seed, primes=primes,
            kind=args.kind if args.suite != "all" else None, d=args.d,
            exhaustive=args.exhaustive,
            oracle=_mutant if args.mutant else taylor_betti,
        )
        verdict = "ok" if result.ok else "FAILED"
        print(f"{name}: {verdict} ({result.checked} checked, {result.skipped} skipped, "
              f"{len(result.violations)} violations)")
        for v in result.violations[:1]:
            print(f"  trial {v.trial}: {v.message}")
            print("  reproducer:")
            for line in render_text(v.reproducer).splitlines():
                print(f"    {line}")
        if not result.ok:
            status = EXIT_VIOLATION
    return status


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def _prime(text):
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")


def build_parser():
    parser = ArgumentParser(prog="betti", description=__doc__.splitlines()[0])
    parser.add_argument("--verify", action="store_true",
                        help="re-check preconditions and lemmas at every step")
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    p = sub.add_parser("betti", help="graded Betti table of I(H)")
    p.add_argument("file")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--char", type=_prime, default=2)
    p.add_argument("--format", choices=("grid", "csv", "json", "xlsx"), default="grid")
    p.add_argument("--output", "-o")
    p.set_defaults(handler=cmd_betti)

    p = sub.add_parser("invariants", help="combinatorial and algebraic invariants")
    p.add_argument("file")
    p.add_argument("--char", type=_prime, default=2)
    p.add_argument("--format", choices=("grid", "json", "xlsx"), default="grid")
    p.add_argument("--output", "-o")
    p.set_defaults(handler=cmd_invariants)

    p = sub.add_parser("distance", help="edge distance with a chain certificate")
    p.add_argument("file")
    p.add_argument("e1", help="edge index (canonical order) or comma-separated labels")
    p.add_argument("e2")
    p.set_defaults(handler=cmd_distance)

    p = sub.add_parser("dual", help="generators of the Alexander dual")
    p.add_argument("file")
    p.set_defaults(handler=cmd_dual)

    p = sub.add_parser("split", help="splitting edges with witnesses")
    p.add_argument("file")
    p.set_defaults(handler=cmd_split)

    p = sub.add_parser("check", help="run property suites")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int)
    p.add_argument("--char", type=_prime, default=2)
    p.add_argument("--kind", choices=[k for k in KINDS if k != "exhaustive-graphs"])
    p.add_argument("--d", type=int, default=3, help="edge size for v-tree and pc-uniform")
    p.add_argument("--exhaustive", action="store_true", help="every graph on exactly n vertices")
    p.add_argument("--mutant", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(handler=cmd_check)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    verify = args.verify or get_settings().verify
    try:
        with override(verify=verify):
            return args.handler(args)
    except (UsageError, SuiteUsageError) as err:
        print(f"usage error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as err:
        print(f"verification failed: {err}", file=sys.stderr)
        if err.hypergraph is not None:
            sys.stderr.write(render_text(err.hypergraph))
        return EXIT_VIOLATION
    except (TooManyGenerators, TooManyVariables) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except (HypergraphError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
