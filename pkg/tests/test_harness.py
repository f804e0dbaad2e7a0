"""Theorem harness: per-network checks and exhaustive sweeps."""

from __future__ import annotations

import pytest

from cellnets import BudgetExceeded, check_network, enumerate_networks, sweep, validate
from cellnets.harness import CHECK_IDS, SweepSpec


def verdicts(results):
    return {r.check_id: r.verdict for r in results}


class TestCheckNetwork:
    def test_fig1c_all_pass_not_fundamental(self, fig1c):
        results = check_network(fig1c)
        expected = {check_id: "pass" for check_id in CHECK_IDS}
        expected["loop-chain"] = "skip"  # two edge types
        expected["fibration-enumeration-oracle"] = "skip"  # five cells > brute bound
        assert verdicts(results) == expected
        characterization = next(r for r in results if r.check_id == "fundamental-characterization")
        assert "is_fundamental=False" in characterization.witness

    def test_fig3_all_pass_is_fundamental(self, fig3):
        results = check_network(fig3)
        nonskip = {r.check_id: r.verdict for r in results if r.verdict != "skip"}
        assert all(v == "pass" for v in nonskip.values())
        characterization = next(r for r in results if r.check_id == "fundamental-characterization")
        assert "is_fundamental=True" in characterization.witness
        # loop-chain does not apply to a two-type network
        loop = next(r for r in results if r.check_id == "loop-chain")
        assert loop.verdict == "skip"

    def test_fig1a_all_pass_negative_lift_branch(self, fig1a):
        results = check_network(fig1a)
        assert all(r.verdict == "pass" for r in results)
        lift = next(r for r in results if r.check_id == "lift-iff-backward-connected")
        assert "lift=False" in lift.witness

    def test_cap_exhaustion_becomes_skips(self, fig1c):
        results = check_network(fig1c, cap=5)
        by_id = verdicts(results)
        assert by_id["fundamental-backward-connected-for-id"] == "skip"
        assert by_id["double-fundamental-isomorphic"] == "skip"
        assert all(v in {"pass", "fail", "skip"} for v in by_id.values())
        assert not any(v == "fail" for v in by_id.values())

    def test_every_check_reports_elapsed(self, single_cell):
        for r in check_network(single_cell):
            assert r.elapsed >= 0.0


class TestEnumerateNetworks:
    def test_exhaustive_order_and_count(self):
        nets = list(enumerate_networks(SweepSpec(cells=2, edge_types=1)))
        assert [n.sigma for n in nets] == [((0, 0),), ((0, 1),), ((1, 0),), ((1, 1),)]

    def test_two_types(self):
        nets = list(enumerate_networks(SweepSpec(cells=2, edge_types=2)))
        assert len(nets) == 16
        assert nets[0].sigma == ((0, 0), (0, 0))
        assert nets[-1].sigma == ((1, 1), (1, 1))

    def test_budget(self):
        spec = SweepSpec(cells=4, edge_types=2)
        with pytest.raises(BudgetExceeded):
            list(enumerate_networks(spec, budget=1000))

    def test_sampled_is_seeded(self):
        spec = SweepSpec(cells=5, edge_types=2, mode="sampled", sample_count=10, seed=42)
        first = [n.sigma for n in enumerate_networks(spec)]
        second = [n.sigma for n in enumerate_networks(spec)]
        assert first == second
        other = SweepSpec(cells=5, edge_types=2, mode="sampled", sample_count=10, seed=43)
        assert [n.sigma for n in enumerate_networks(other)] != first


class TestSweep:
    def test_three_cells_one_type(self):
        report = sweep(SweepSpec(cells=3, edge_types=1))
        assert report.checked == 27
        assert report.failures == 0
        assert report.skips == 0

    def test_two_cells_two_types(self):
        report = sweep(SweepSpec(cells=2, edge_types=2))
        assert report.checked == 16
        assert report.failures == 0
        # loop-chain does not apply when k != 1
        loop = next(s for s in report.per_check if s.check_id == "loop-chain")
        assert loop.skipped == 16

    def test_single_network_universe(self):
        report = sweep(SweepSpec(cells=1, edge_types=1))
        assert report.checked == 1 and report.failures == 0

    def test_deterministic_reports(self):
        spec = SweepSpec(cells=2, edge_types=2)
        assert sweep(spec) == sweep(spec)

    def test_filter_backward_connected(self):
        report = sweep(SweepSpec(cells=3, edge_types=1, filter="backward-connected"))
        assert report.enumerated == 27
        # sigma = [c c c] style networks and cycles are backward connected
        assert 0 < report.checked < 27
        assert report.failures == 0

    def test_parallel_matches_serial(self):
        spec = SweepSpec(cells=2, edge_types=2)
        assert sweep(spec, jobs=2) == sweep(spec, jobs=1)

    def test_sampled_sweep(self):
        spec = SweepSpec(cells=5, edge_types=1, mode="sampled", sample_count=25, seed=11)
        report = sweep(spec)
        assert report.checked == 25
        assert report.failures == 0
