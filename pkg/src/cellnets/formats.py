"""Network files, DOT export, and report rendering.

The JSON network file mirrors bracket notation directly: the sigma arrays
are the value vectors of the representative maps, optionally 1-based so
drawn figures can be transcribed without reindexing.  All output here is
byte-stable for a fixed input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import TextIO

from .errors import MalformedNetwork
from .harness import SweepReport
from .network import Network, validate
from .semigroup import FundamentalNetwork, word_label

#: edge styles by type; types beyond the third cycle through the palette.
_EDGE_STYLES = ("solid", "dashed", "dotted")
_EDGE_PALETTE = ("red", "blue", "green", "orange", "purple", "brown", "cyan", "magenta")


@dataclass(frozen=True)
class NetworkDocument:
    """A parsed network file: the network plus its presentation choices."""

    network: Network
    one_based: bool
    labels: tuple[str, ...] | None


def parse_network(data: dict) -> NetworkDocument:
    """Validate a decoded network-file object."""
    if not isinstance(data, dict):
        raise MalformedNetwork("network file must be a JSON object")
    for key in ("cells", "edge_types", "sigma"):
        if key not in data:
            raise MalformedNetwork(f"missing required key {key!r}")
    n, k, sigma = data["cells"], data["edge_types"], data["sigma"]
    if not isinstance(n, int) or not isinstance(k, int):
        raise MalformedNetwork("cells and edge_types must be integers")
    if not isinstance(sigma, list) or not all(isinstance(row, list) for row in sigma):
        raise MalformedNetwork("sigma must be an array of arrays")
    one_based = bool(data.get("one_based", False))
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise MalformedNetwork("name must be a string")
    labels = data.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise MalformedNetwork("labels must be an array of strings")
        if len(labels) != n:
            raise MalformedNetwork(f"labels has {len(labels)} entries for {n} cells")
        labels = tuple(labels)
    net = validate(n, k, sigma, name=name, one_based=one_based)
    return NetworkDocument(network=net, one_based=one_based, labels=labels)


def load_network(path: str) -> NetworkDocument:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedNetwork(f"{path}: {exc}") from exc
    return parse_network(data)


def network_to_dict(
    net: Network, one_based: bool = False, labels: tuple[str, ...] | None = None
) -> dict:
    """Serializable form, inverse of parse_network."""
    shift = 1 if one_based else 0
    data: dict = {}
    if net.name is not None:
        data["name"] = net.name
    data["cells"] = net.n
    data["edge_types"] = net.k
    if one_based:
        data["one_based"] = True
    data["sigma"] = [[v + shift for v in row] for row in net.sigma]
    if labels is not None:
        data["labels"] = list(labels)
    return data


def dump_network(
    net: Network, one_based: bool = False, labels: tuple[str, ...] | None = None
) -> str:
    return json.dumps(network_to_dict(net, one_based, labels), ensure_ascii=False, indent=2) + "\n"


def fundamental_document(fund: FundamentalNetwork) -> NetworkDocument:
    """Present a fundamental network with canonical words as cell labels."""
    labels = tuple(word_label(e.word) for e in fund.elements)
    return NetworkDocument(network=fund.net, one_based=False, labels=labels)


def export_dot(net: Network, labels: tuple[str, ...] | None = None) -> str:
    """Directed DOT text: one node per cell, one styled edge per (type, cell).

    Type 0 edges are solid, type 1 dashed, type 2 dotted, further types
    colored from a fixed palette.  Nodes and edges are emitted in index
    order, so the output is byte-stable.
    """
    def label(c: int) -> str:
        return labels[c] if labels is not None else str(c)

    lines = ["digraph network {"]
    for c in range(net.n):
        lines.append(f'  n{c} [label="{label(c)}"];')
    for i in range(net.k):
        if i < len(_EDGE_STYLES):
            attr = f"style={_EDGE_STYLES[i]}"
        else:
            attr = f"style=solid, color={_EDGE_PALETTE[(i - len(_EDGE_STYLES)) % len(_EDGE_PALETTE)]}"
        for c in range(net.n):
            lines.append(f"  n{net.sigma[i][c]} -> n{c} [{attr}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def sweep_report_to_dict(report: SweepReport) -> dict:
    """Machine-readable sweep summary; timings are deliberately excluded so
    identical specs produce identical bytes."""
    spec = report.spec
    spec_obj: dict = {
        "cells": spec.cells,
        "edge_types": spec.edge_types,
        "mode": spec.mode,
    }
    if spec.mode == "sampled":
        spec_obj["sample_count"] = spec.sample_count
        spec_obj["seed"] = spec.seed
    if spec.filter:
        spec_obj["filter"] = spec.filter
    per_check = []
    for s in report.per_check:
        entry: dict = {
            "id": s.check_id,
            "pass": s.passed,
            "fail": s.failed,
            "skip": s.skipped,
        }
        if s.first_counterexample is not None:
            entry["first_counterexample"] = s.first_counterexample
        per_check.append(entry)
    return {
        "spec": spec_obj,
        "totals": {
            "enumerated": report.enumerated,
            "checked": report.checked,
            "checks_run": report.checks_run,
            "failures": report.failures,
            "skips": report.skips,
        },
        "per_check": per_check,
    }


def render_sweep_report(report: SweepReport, out: TextIO) -> None:
    """Line-oriented text report, one line per check."""
    spec = report.spec
    header = f"sweep cells={spec.cells} edge_types={spec.edge_types} mode={spec.mode}"
    if spec.mode == "sampled":
        header += f" count={spec.sample_count} seed={spec.seed}"
    if spec.filter:
        header += f" filter={spec.filter}"
    out.write(header + "\n")
    out.write(f"networks: enumerated={report.enumerated} checked={report.checked}\n")
    for s in report.per_check:
        line = f"{s.check_id}: pass={s.passed} fail={s.failed} skip={s.skipped}"
        if s.first_counterexample is not None:
            line += f" first_counterexample={s.first_counterexample}"
        out.write(line + "\n")
    verdict = "FAIL" if report.failures else "OK"
    out.write(f"result: {verdict} ({report.checks_run} checks, {report.failures} failures)\n")
