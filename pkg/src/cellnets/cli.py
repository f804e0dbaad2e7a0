"""Command-line surface.

Exit codes: 0 success, 1 failed check or negative predicate verdict,
2 input or parse error, 3 budget or cap exceeded.  Errors go to stderr
as one machine-parsable line: ``error:<kind>: <message>``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import architecture, fibration, formats, harness, network, semigroup, synchrony
from .errors import BudgetExceeded, CapExceeded, CellNetError, TooLarge
from .formats import NetworkDocument
from .harness import SweepSpec
from .semigroup import DEFAULT_CAP

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _cells_str(doc: NetworkDocument, cells) -> str:
    shift = 1 if doc.one_based else 0
    return "[" + ", ".join(str(c + shift) for c in sorted(cells)) + "]"


def _map_str(mapping, one_based: bool) -> str:
    shift = 1 if one_based else 0
    return "[" + " ".join(str(v + shift) for v in mapping) + "]"


def _sets_str(doc: NetworkDocument, sets) -> str:
    return " | ".join("{" + ",".join(str(c + (1 if doc.one_based else 0)) for c in s) + "}" for s in sets)


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_validate(args) -> int:
    doc = formats.load_network(args.file)
    sys.stdout.write(formats.dump_network(doc.network, doc.one_based, doc.labels))
    return EXIT_OK


def _cmd_fundamental(args) -> int:
    doc = formats.load_network(args.file)
    fund = semigroup.fundamental_network(doc.network, cap=args.cap)
    out_doc = formats.fundamental_document(fund)
    net = out_doc.network
    if doc.network.name:
        net = network.Network(net.n, net.k, net.sigma, name=f"fundamental of {doc.network.name}")
    _write_output(formats.dump_network(net, labels=out_doc.labels), args.out)
    return EXIT_OK


def _cmd_fibrations(args) -> int:
    doc_a = formats.load_network(args.source)
    doc_b = formats.load_network(args.target)
    if args.oracle:
        fibs = fibration.enumerate_fibrations_bruteforce(
            doc_a.network, doc_b.network, max_cells=args.brute_bound
        )
        fibs.sort(key=lambda f: f.mapping)
    else:
        fibs = fibration.enumerate_fibrations(doc_a.network, doc_b.network)
    sys.stdout.write(f"fibrations: {len(fibs)}\n")
    for f in fibs:
        sys.stdout.write(_map_str(f.mapping, doc_b.one_based) + "\n")
    return EXIT_OK


def _cmd_classify(args) -> int:
    doc = formats.load_network(args.file)
    net = doc.network
    if net.name:
        sys.stdout.write(f"name: {net.name}\n")
    sys.stdout.write(f"cells: {net.n}\nedge_types: {net.k}\n")
    backward = network.backward_connected_cells(net)
    transitive = fibration.transitive_cells(net)
    sys.stdout.write(f"backward_connected_for: {_cells_str(doc, backward)}\n")
    sys.stdout.write(f"transitive_for: {_cells_str(doc, transitive)}\n")
    self_fibs = fibration.enumerate_fibrations(net, net)
    bijective = sum(1 for f in self_fibs if f.is_bijective)
    sys.stdout.write(f"self_fibrations: {len(self_fibs)} (bijective: {bijective})\n")
    fund = semigroup.fundamental_network(net, cap=args.cap)
    iso = fibration.find_isomorphism(net, fund.net)
    sys.stdout.write(f"is_fundamental: {str(iso is not None).lower()}\n")
    report = architecture.group_structure(net, fund=fund)
    sys.stdout.write(
        "group_structure: "
        f"strongly_connected_fund={str(report.strongly_connected_fund).lower()} "
        f"all_permutations={str(report.all_permutations).lower()} "
        f"fund_is_group={str(report.fund_is_group).lower()}\n"
    )
    chain = architecture.loop_chain_classify(net)
    sys.stdout.write(f"loop_chain: {f'(l={chain[0]}, p={chain[1]})' if chain else 'none'}\n")
    return EXIT_OK


def _cmd_rings(args) -> int:
    doc = formats.load_network(args.file)
    net = doc.network
    for i in range(net.k):
        dec = architecture.ring_decomposition(net, i)
        sp = architecture.semiperiod(net, i)
        sys.stdout.write(
            f"type {i + 1}: components {_sets_str(doc, dec.components)}; "
            f"rings {_sets_str(doc, dec.rings)}; "
            f"component_depths {list(dec.component_depths)}; depth {dec.depth}; "
            f"semiperiod (a={sp.preperiod}, b={sp.period}); "
            f"singular {str(architecture.is_singular(net, i)).lower()}\n"
        )
    return EXIT_OK


def _cmd_quotients(args) -> int:
    doc = formats.load_network(args.file)
    net = doc.network
    colorings = synchrony.enumerate_balanced_colorings(net, max_cells=args.max_cells)
    sys.stdout.write(f"balanced_colorings: {len(colorings)}\n")
    for col in colorings:
        q, _ = synchrony.quotient(net, col)
        sigma = "; ".join(_map_str(row, doc.one_based) for row in q.sigma)
        sys.stdout.write(
            f"classes {_sets_str(doc, col.classes())} -> quotient on {q.n} cells: {sigma}\n"
        )
    return EXIT_OK


def _cmd_relate(args) -> int:
    doc_a = formats.load_network(args.a)
    doc_b = formats.load_network(args.b)
    a, b = doc_a.network, doc_b.network

    quotient_wit = synchrony.is_quotient_of(a, b)
    line = "A is a quotient of B: "
    line += f"yes, surjection B->A {_map_str(quotient_wit.mapping, doc_a.one_based)}" if quotient_wit else "no"
    sys.stdout.write(line + "\n")

    lift_wit = synchrony.is_quotient_of(b, a)
    line = "A is a lift of B: "
    line += f"yes, surjection A->B {_map_str(lift_wit.mapping, doc_b.one_based)}" if lift_wit else "no"
    sys.stdout.write(line + "\n")

    sub_wit = synchrony.is_subnetwork_of(a, b)
    line = "A is a subnetwork of B: "
    line += f"yes, injection A->B {_map_str(sub_wit.mapping, doc_b.one_based)}" if sub_wit else "no"
    sys.stdout.write(line + "\n")

    iso = fibration.find_isomorphism(a, b)
    line = "A is isomorphic to B: "
    line += f"yes, bijection A->B {_map_str(iso.mapping, doc_b.one_based)}" if iso else "no"
    sys.stdout.write(line + "\n")
    return EXIT_OK


def _cmd_check(args) -> int:
    doc = formats.load_network(args.file)
    results = harness.check_network(doc.network, cap=args.cap, brute_bound=args.brute_bound)
    failures = 0
    for r in results:
        if r.verdict == "pass":
            sys.stdout.write(f"pass {r.check_id}\n")
        elif r.verdict == "skip":
            sys.stdout.write(f"skip {r.check_id}: {r.witness}\n")
        else:
            failures += 1
            sys.stdout.write(f"FAIL {r.check_id}: {r.witness}\n")
    sys.stdout.write(f"result: {'FAIL' if failures else 'OK'} ({failures} failures)\n")
    return EXIT_NEGATIVE if failures else EXIT_OK


def _parse_mode(text: str) -> tuple[str, int] | None:
    if text == "exhaustive":
        return "exhaustive", 0
    if text.startswith("sampled:"):
        try:
            count = int(text.split(":", 1)[1])
        except ValueError:
            return None
        if count >= 1:
            return "sampled", count
    return None


def _cmd_check_sweep(args) -> int:
    parsed = _parse_mode(args.mode)
    if parsed is None:
        sys.stderr.write(
            f"error:invalid-mode: mode must be 'exhaustive' or 'sampled:<count>', got {args.mode!r}\n"
        )
        return EXIT_INPUT
    mode, count = parsed
    spec = SweepSpec(
        cells=args.cells,
        edge_types=args.types,
        mode=mode,
        sample_count=count,
        seed=args.seed,
        filter=args.filter,
    )
    report = harness.sweep(
        spec, budget=args.budget, cap=args.cap, brute_bound=args.brute_bound, jobs=args.jobs
    )
    formats.render_sweep_report(report, sys.stdout)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(formats.sweep_report_to_dict(report), fh, indent=2)
            fh.write("\n")
    return EXIT_NEGATIVE if report.failures else EXIT_OK


def _cmd_dot(args) -> int:
    doc = formats.load_network(args.file)
    labels = doc.labels
    if labels is None:
        shift = 1 if doc.one_based else 0
        labels = tuple(str(c + shift) for c in range(doc.network.n))
    _write_output(formats.export_dot(doc.network, labels), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cellnets",
        description="Analyze homogeneous coupled cell networks with asymmetric inputs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a network file")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("fundamental", help="write the fundamental network as a network file")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="semigroup element cap")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(fn=_cmd_fundamental)

    p = sub.add_parser("fibrations", help="list all fibrations from one network to another")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)
    p.add_argument("--brute-bound", type=int, default=harness.DEFAULT_BRUTE_BOUND,
                   help=argparse.SUPPRESS)
    p.set_defaults(fn=_cmd_fibrations)

    p = sub.add_parser("classify", help="connectivity, transitivity and structure summary")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("rings", help="per-edge-type ring decomposition and depth")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_rings)

    p = sub.add_parser("quotients", help="balanced colorings and their quotient networks")
    p.add_argument("file")
    p.add_argument("--max-cells", type=int, default=synchrony.DEFAULT_MAX_CELLS)
    p.set_defaults(fn=_cmd_quotients)

    p = sub.add_parser("relate", help="quotient / lift / subnetwork / isomorphism verdicts")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(fn=_cmd_relate)

    p = sub.add_parser("check", help="run every proposition check on one network")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--brute-bound", type=int, default=harness.DEFAULT_BRUTE_BOUND,
                   help=argparse.SUPPRESS)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("check-sweep", help="run the checks over all networks of a given size")
    p.add_argument("--cells", type=int, required=True)
    p.add_argument("--types", type=int, required=True)
    p.add_argument("--mode", default="exhaustive", help="exhaustive or sampled:<count>")
    p.add_argument("--seed", type=int, default=None, help="seed for sampled mode")
    p.add_argument("--filter", choices=sorted(harness.FILTERS), default=None)
    p.add_argument("--budget", type=int, default=harness.DEFAULT_BUDGET)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--json", help="also write a JSON summary to this path")
    p.add_argument("--brute-bound", type=int, default=harness.DEFAULT_BRUTE_BOUND,
                   help=argparse.SUPPRESS)
    p.set_defaults(fn=_cmd_check_sweep)

    p = sub.add_parser("dot", help="export a network as graphviz DOT")
    p.add_argument("file")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(fn=_cmd_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (CapExceeded, BudgetExceeded, TooLarge) as exc:
        sys.stderr.write(f"error:{exc.kind}: {exc}\n")
        return EXIT_BUDGET
    except CellNetError as exc:
        sys.stderr.write(f"error:{exc.kind}: {exc}\n")
        return EXIT_INPUT
    except OSError as exc:
        sys.stderr.write(f"error:io: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
