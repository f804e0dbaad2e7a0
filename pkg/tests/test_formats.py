"""Network files, DOT export, sweep report rendering."""

from __future__ import annotations

import io
import json

import pytest

from cellnets import MalformedNetwork, OutOfRangeCell, fundamental_network, sweep, validate
from cellnets.formats import (
    dump_network,
    export_dot,
    fundamental_document,
    load_network,
    network_to_dict,
    parse_network,
    render_sweep_report,
    sweep_report_to_dict,
)
from cellnets.harness import SweepSpec

from conftest import FIXTURES, all_networks


class TestNetworkFiles:
    def test_load_fig1c(self):
        doc = load_network(str(FIXTURES / "fig1c.json"))
        assert doc.network.n == 5 and doc.network.k == 2
        assert doc.one_based
        assert doc.network.sigma[0] == (0, 1, 1, 4, 3)

    def test_roundtrip_all_sweep_networks(self):
        for net in all_networks(2, 2):
            doc = parse_network(json.loads(dump_network(net)))
            assert doc.network == net

    def test_roundtrip_preserves_presentation(self):
        net = validate(3, 1, [[1, 2, 0]], name="ring")
        text = dump_network(net, one_based=True, labels=("a", "b", "c"))
        doc = parse_network(json.loads(text))
        assert doc.network == net
        assert doc.one_based and doc.labels == ("a", "b", "c")

    def test_one_based_and_zero_based_agree(self):
        one = parse_network(
            {"cells": 4, "edge_types": 1, "one_based": True, "sigma": [[2, 1, 2, 1]]}
        )
        zero = parse_network({"cells": 4, "edge_types": 1, "sigma": [[1, 0, 1, 0]]})
        assert one.network.sigma == zero.network.sigma

    def test_missing_key(self):
        with pytest.raises(MalformedNetwork):
            parse_network({"cells": 2, "sigma": [[0, 1]]})

    def test_out_of_range(self):
        with pytest.raises(OutOfRangeCell):
            parse_network({"cells": 2, "edge_types": 1, "sigma": [[0, 2]]})

    def test_one_based_zero_entry_rejected(self):
        with pytest.raises(OutOfRangeCell):
            parse_network(
                {"cells": 2, "edge_types": 1, "one_based": True, "sigma": [[0, 1]]}
            )

    def test_wrong_label_count(self):
        with pytest.raises(MalformedNetwork):
            parse_network(
                {"cells": 2, "edge_types": 1, "sigma": [[0, 1]], "labels": ["only-one"]}
            )

    def test_sigma_shape_checked(self):
        with pytest.raises(MalformedNetwork):
            parse_network({"cells": 2, "edge_types": 2, "sigma": [[0, 1]]})

    def test_fundamental_document_labels(self, fig5a):
        doc = fundamental_document(fundamental_network(fig5a))
        assert doc.labels == ("Id", "σ1", "σ2", "σ1∘σ2")


class TestDot:
    def test_fig1b_edge_styles(self, fig1b):
        dot = export_dot(fig1b)
        assert dot.count("style=solid") == 4
        assert dot.count("style=dashed") == 4
        assert dot.count("[label=") == 4

    def test_single_cell_self_loop(self, single_cell):
        dot = export_dot(single_cell)
        assert 'n0 [label="0"];' in dot
        assert "n0 -> n0 [style=solid];" in dot

    def test_byte_stable(self, fig1c):
        assert export_dot(fig1c) == export_dot(fig1c)

    def test_palette_beyond_three_types(self):
        net = validate(1, 4, [[0], [0], [0], [0]])
        dot = export_dot(net)
        assert "style=dotted" in dot and "color=red" in dot

    def test_fund_labels(self, fig5a):
        doc = fundamental_document(fundamental_network(fig5a))
        dot = export_dot(doc.network, doc.labels)
        for label in ("Id", "σ1", "σ2", "σ1∘σ2"):
            assert f'[label="{label}"]' in dot


class TestSweepReports:
    def test_json_schema(self):
        report = sweep(SweepSpec(cells=2, edge_types=1))
        data = sweep_report_to_dict(report)
        assert set(data) == {"spec", "totals", "per_check"}
        assert data["totals"]["checked"] == 4
        assert data["totals"]["failures"] == 0
        for entry in data["per_check"]:
            assert {"id", "pass", "fail", "skip"} <= set(entry)
            assert "first_counterexample" not in entry  # nothing failed

    def test_text_rendering_deterministic(self):
        report = sweep(SweepSpec(cells=2, edge_types=1))
        first, second = io.StringIO(), io.StringIO()
        render_sweep_report(report, first)
        render_sweep_report(report, second)
        assert first.getvalue() == second.getvalue()
        assert "result: OK" in first.getvalue()

    def test_sampled_header_records_seed(self):
        report = sweep(SweepSpec(cells=3, edge_types=1, mode="sampled", sample_count=5, seed=9))
        out = io.StringIO()
        render_sweep_report(report, out)
        assert "seed=9" in out.getvalue()
        data = sweep_report_to_dict(report)
        assert data["spec"]["seed"] == 9

    def test_network_to_dict_key_order(self):
        net = validate(2, 1, [[0, 1]], name="x")
        assert list(network_to_dict(net)) == ["name", "cells", "edge_types", "sigma"]
