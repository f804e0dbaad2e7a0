"""Named, witness-producing checks for every structural proposition.

check_network bundles the propositions about a network and its
fundamental network into independent checks; sweep runs them over every
network of a given size (or a seeded sample) and aggregates verdicts.
The propositions are theorems, so any failure on a sweep is an
implementation bug -- which is exactly what makes the sweep a useful
acceptance engine.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from dataclasses import dataclass
from functools import cached_property
from multiprocessing import Pool
from typing import Callable, Iterator

from . import architecture, fibration, network, semigroup, synchrony
from .errors import BudgetExceeded, CapExceeded
from .network import Network
from .semigroup import DEFAULT_CAP, FundamentalNetwork

DEFAULT_BUDGET = 1_000_000
DEFAULT_BRUTE_BOUND = 4
_PARTITION_BOUND = 10
_SUBSET_BOUND = 12


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    verdict: str  # "pass" | "fail" | "skip"
    witness: str
    elapsed: float


@dataclass(frozen=True)
class SweepSpec:
    """What to sweep: all n^(n*k) networks, or a seeded uniform sample."""

    cells: int
    edge_types: int
    mode: str = "exhaustive"  # "exhaustive" | "sampled"
    sample_count: int = 0
    seed: int | None = None
    filter: str | None = None


@dataclass(frozen=True)
class CheckSummary:
    check_id: str
    passed: int
    failed: int
    skipped: int
    first_counterexample: str | None


@dataclass(frozen=True)
class SweepReport:
    spec: SweepSpec
    enumerated: int
    checked: int
    per_check: tuple[CheckSummary, ...]

    @property
    def failures(self) -> int:
        return sum(s.failed for s in self.per_check)

    @property
    def skips(self) -> int:
        return sum(s.skipped for s in self.per_check)

    @property
    def checks_run(self) -> int:
        return sum(s.passed + s.failed + s.skipped for s in self.per_check)


def net_literal(net: Network) -> str:
    """Compact reconstructable witness form of a network."""
    return json.dumps(
        {"cells": net.n, "edge_types": net.k, "sigma": [list(r) for r in net.sigma]},
        separators=(",", ":"),
    )


def _word_table(net: Network, word: tuple[int, ...]) -> tuple[int, ...]:
    """Value table of a word evaluated with net's maps (letter 0 applied last)."""
    table = tuple(range(net.n))
    for letter in reversed(word):
        table = semigroup.compose(net.sigma[letter], table)
    return table


class _Analysis:
    """Per-network memo so checks share one closure and one fibration search."""

    def __init__(self, net: Network, cap: int, brute_bound: int):
        self.net = net
        self.cap = cap
        self.brute_bound = brute_bound

    @cached_property
    def fund(self) -> FundamentalNetwork:
        return semigroup.fundamental_network(self.net, self.cap)

    @cached_property
    def fund2(self) -> FundamentalNetwork:
        return semigroup.fundamental_network(self.fund.net, self.cap)

    @cached_property
    def backward_cells(self) -> set[int]:
        return network.backward_connected_cells(self.net)

    @cached_property
    def transitive_cells(self) -> set[int]:
        return fibration.transitive_cells(self.net)

    @cached_property
    def balanced_colorings(self) -> list[synchrony.Coloring]:
        return synchrony.enumerate_balanced_colorings(self.net, max_cells=_PARTITION_BOUND)

    @cached_property
    def closed_subsets(self) -> list[tuple[int, ...]]:
        cells = range(self.net.n)
        out = []
        for mask in range(1, 2**self.net.n):
            subset = [c for c in cells if mask >> c & 1]
            members = set(subset)
            if all(self.net.sigma[i][c] in members for c in subset for i in range(self.net.k)):
                out.append(tuple(subset))
        return out


def _check_fund_backward_connected(a: _Analysis) -> tuple[str, str]:
    """Every fundamental network is backward connected for its identity cell."""
    fund = a.fund
    if network.is_backward_connected_for(fund.net, fund.id_index):
        return "pass", f"{fund.net.n} elements all reach Id"
    return "fail", f"net={net_literal(a.net)} fund={net_literal(fund.net)}"


def _check_double_fundamental(a: _Analysis) -> tuple[str, str]:
    """The fundamental network of a fundamental network is the same network."""
    iso = fibration.find_isomorphism(a.fund2.net, a.fund.net)
    if iso is not None:
        return "pass", f"isomorphism {list(iso.mapping)}"
    return "fail", f"net={net_literal(a.net)} fund={net_literal(a.fund.net)} has fund2 not isomorphic"


def _check_fundamental_fibrations(a: _Analysis) -> tuple[str, str]:
    """The fibrations fund -> net are exactly the n evaluation maps, with
    image equal to the corresponding input network."""
    net, fund = a.net, a.fund
    evals = [semigroup.evaluation_fibration(fund, c) for c in range(net.n)]
    mappings = {f.mapping for f in evals}
    if len(mappings) != net.n:
        return "fail", f"net={net_literal(net)}: evaluation maps not pairwise distinct"
    for c, f in enumerate(evals):
        if not fibration.is_fibration(fund.net, net, f.mapping):
            return "fail", f"net={net_literal(net)}: evaluation map at cell {c} not a fibration"
        _, embedded = network.input_network(net, c)
        if f.image() != set(embedded):
            return "fail", (
                f"net={net_literal(net)}: image of evaluation map at {c} is "
                f"{sorted(f.image())}, input network is {sorted(embedded)}"
            )
    enumerated = {f.mapping for f in fibration.enumerate_fibrations(fund.net, net)}
    if enumerated != mappings:
        return "fail", (
            f"net={net_literal(net)}: fibration set {sorted(enumerated)} != "
            f"evaluation maps {sorted(mappings)}"
        )
    return "pass", f"{net.n} evaluation fibrations, no others"


def _check_lift_iff_backward_connected(a: _Analysis) -> tuple[str, str]:
    """fund is a lift of net exactly when net is backward connected."""
    witness = synchrony.is_quotient_of(a.net, a.fund.net)
    has_lift = witness is not None
    connected = bool(a.backward_cells)
    if has_lift == connected:
        return "pass", f"lift={has_lift}, backward connected for {sorted(a.backward_cells)}"
    return "fail", (
        f"net={net_literal(a.net)}: lift={has_lift} but backward-connected "
        f"cells={sorted(a.backward_cells)}"
    )


def _check_quotient_preservation(a: _Analysis) -> tuple[str, str]:
    """Quotients lift to quotients of the fundamental networks, and the
    evaluation squares commute for every base cell."""
    if a.net.n > _PARTITION_BOUND:
        return "skip", f"{a.net.n} cells exceeds the partition bound {_PARTITION_BOUND}"
    net, fund = a.net, a.fund
    for col in a.balanced_colorings:
        q, proj = synchrony.quotient(net, col)
        fund_q = semigroup.fundamental_network(q, a.cap)
        lifted = tuple(fund_q.index_of(_word_table(q, e.word)) for e in fund.elements)
        where = f"net={net_literal(net)} coloring={list(col.class_of)}"
        if not fibration.is_fibration(fund.net, fund_q.net, lifted):
            return "fail", f"{where}: lifted map is not a fibration"
        if len(set(lifted)) != fund_q.net.n:
            return "fail", f"{where}: lifted map is not surjective"
        for c in range(net.n):
            eval_n = semigroup.evaluation_fibration(fund, c).mapping
            eval_q = semigroup.evaluation_fibration(fund_q, proj.mapping[c]).mapping
            for e in fund.elements:
                if eval_q[lifted[e.index]] != proj.mapping[eval_n[e.index]]:
                    return "fail", f"{where}: square does not commute at cell {c}, element {e.word}"
    return "pass", f"{len(a.balanced_colorings)} balanced colorings preserved"


def _check_subnetwork_to_quotient(a: _Analysis) -> tuple[str, str]:
    """The fundamental of every subnetwork is a quotient of the fundamental."""
    if a.net.n > _SUBSET_BOUND:
        return "skip", f"{a.net.n} cells exceeds the subset bound {_SUBSET_BOUND}"
    net, fund = a.net, a.fund
    for subset in a.closed_subsets:
        sub, members = network.induced_subnetwork(net, subset)
        fund_s = semigroup.fundamental_network(sub, a.cap)
        position = {c: j for j, c in enumerate(members)}
        restricted = tuple(
            fund_s.index_of(tuple(position[e.table[c]] for c in members)) for e in fund.elements
        )
        where = f"net={net_literal(net)} subset={list(subset)}"
        if not fibration.is_fibration(fund.net, fund_s.net, restricted):
            return "fail", f"{where}: restriction map is not a fibration"
        if len(set(restricted)) != fund_s.net.n:
            return "fail", f"{where}: restriction map is not surjective"
    return "pass", f"{len(a.closed_subsets)} closed subsets transformed"


def _check_backward_connected_subnetwork_lift(a: _Analysis) -> tuple[str, str]:
    """fund is a lift of every backward connected subnetwork."""
    if a.net.n > _SUBSET_BOUND:
        return "skip", f"{a.net.n} cells exceeds the subset bound {_SUBSET_BOUND}"
    count = 0
    for subset in a.closed_subsets:
        sub, _ = network.induced_subnetwork(a.net, subset)
        if not network.backward_connected_cells(sub):
            continue
        count += 1
        if synchrony.is_quotient_of(sub, a.fund.net) is None:
            return "fail", f"net={net_literal(a.net)} subset={list(subset)}: no surjection from fund"
    return "pass", f"{count} backward connected subnetworks lifted"


def _check_lift_transitive_subnetwork_chain(a: _Analysis) -> tuple[str, str]:
    """net a lift of its fundamental => net transitive => fund embeds in net."""
    lift_of_fund = synchrony.is_quotient_of(a.fund.net, a.net) is not None
    transitive = bool(a.transitive_cells)
    embeds = synchrony.is_subnetwork_of(a.fund.net, a.net) is not None
    if lift_of_fund and not transitive:
        return "fail", f"net={net_literal(a.net)}: lift of fundamental but not transitive"
    if transitive and not embeds:
        return "fail", f"net={net_literal(a.net)}: transitive but fund is not a subnetwork"
    return "pass", f"lift_of_fund={lift_of_fund} transitive={transitive} fund_embeds={embeds}"


def _check_fibration_into_fundamental(a: _Analysis) -> tuple[str, str]:
    """Any fibration net -> fund collapses elements agreeing at a
    backward-connected root: e'(c) == e''(c) forces e' o phi(c) == e'' o phi(c)."""
    if not a.backward_cells:
        return "pass", "vacuous: not backward connected"
    net, fund = a.net, a.fund
    fibs = fibration.enumerate_fibrations(net, fund.net)
    for fib in fibs:
        for c in sorted(a.backward_cells):
            anchor = fund.elements[fib.mapping[c]]
            translated: dict[int, tuple[int, ...]] = {}
            for e in fund.elements:
                t = semigroup.compose(e.table, anchor.table)
                prev = translated.setdefault(e.table[c], t)
                if prev != t:
                    return "fail", (
                        f"net={net_literal(net)}: fibration {list(fib.mapping)} at root {c} "
                        f"violates the agreement condition for element {e.word}"
                    )
    return "pass", f"{len(fibs)} fibrations into the fundamental network checked"


def _check_fundamental_characterization(a: _Analysis) -> tuple[str, str]:
    """net is isomorphic to fund iff some cell is both a backward-connectivity
    and a transitivity witness."""
    roots = a.backward_cells & a.transitive_cells
    iso = fibration.find_isomorphism(a.net, a.fund.net) is not None
    if bool(roots) == iso:
        return "pass", f"is_fundamental={iso}, witness cells {sorted(roots)}"
    return "fail", (
        f"net={net_literal(a.net)}: iso-to-fund={iso} but backward+transitive "
        f"cells={sorted(roots)}"
    )


def _check_depth_equality(a: _Analysis) -> tuple[str, str]:
    """depth_i(net) == depth_i(fund) for every edge type."""
    depths = []
    for i in range(a.net.k):
        d_net = architecture.depth(a.net, i)
        d_fund = architecture.depth(a.fund.net, i)
        if d_net != d_fund:
            return "fail", f"net={net_literal(a.net)} type {i}: depth {d_net} vs fund {d_fund}"
        depths.append(d_net)
    return "pass", f"depths {depths}"


def _check_singularity_equivalence(a: _Analysis) -> tuple[str, str]:
    """Adjacency singularity agrees between net and its fundamental network."""
    for i in range(a.net.k):
        s_net = architecture.is_singular(a.net, i)
        s_fund = architecture.is_singular(a.fund.net, i)
        if s_net != s_fund:
            return "fail", f"net={net_literal(a.net)} type {i}: singular {s_net} vs fund {s_fund}"
    return "pass", "singularity matches on every type"


def _check_ring_lcm(a: _Analysis) -> tuple[str, str]:
    """Fundamental ring sizes are the stated lcms of base ring sizes."""
    for i in range(a.net.k):
        report = architecture.ring_lcm_check(a.net, i, fund=a.fund)
        if not report.ok:
            return "fail", f"net={net_literal(a.net)}: {'; '.join(report.failures)}"
    return "pass", "ring sizes match lcm formula on every type"


def _check_group_structure(a: _Analysis) -> tuple[str, str]:
    """Strong connectivity of fund == closure is a group == maps are permutations;
    and a connected net with strongly connected fund is strongly connected."""
    report = architecture.group_structure(a.net, fund=a.fund)
    if not report.agree:
        return "fail", f"net={net_literal(a.net)}: disagreeing views {report}"
    if len(network.connected_components(a.net)) == 1 and report.strongly_connected_fund:
        if len(network.strongly_connected_components(a.net)) != 1:
            return "fail", f"net={net_literal(a.net)}: connected, fund strongly connected, net not"
    return "pass", f"group={report.fund_is_group}"


def _check_loop_chain(a: _Analysis) -> tuple[str, str]:
    """For one edge type, fund classifies as the predicted (lcm, depth) loop-chain."""
    if a.net.k != 1:
        return "skip", "loop-chain structure is defined for a single edge type"
    predicted = architecture.loop_chain_prediction(a.net)
    classified = architecture.loop_chain_classify(a.fund.net)
    if classified == predicted:
        return "pass", f"loop-chain {predicted}"
    return "fail", f"net={net_literal(a.net)}: predicted {predicted}, classified {classified}"


def _check_fibration_enumeration_oracle(a: _Analysis) -> tuple[str, str]:
    """Propagation search equals the brute-force map filter on small pairs."""
    if a.net.n > a.brute_bound:
        return "skip", f"{a.net.n} cells exceeds the brute-force bound {a.brute_bound}"
    pairs = [(a.net, a.net)]
    if a.fund.net.n <= a.brute_bound:
        pairs += [(a.fund.net, a.net), (a.net, a.fund.net)]
    for src, dst in pairs:
        fast = [f.mapping for f in fibration.enumerate_fibrations(src, dst)]
        slow = [f.mapping for f in fibration.enumerate_fibrations_bruteforce(src, dst, a.brute_bound)]
        if fast != sorted(slow):
            return "fail", (
                f"src={net_literal(src)} dst={net_literal(dst)}: search {fast} vs brute {sorted(slow)}"
            )
    return "pass", f"{len(pairs)} pairs agree with brute force"


def _check_depth_formula_oracle(a: _Analysis) -> tuple[str, str]:
    """Power-iteration depth equals BFS decomposition depth, on net and fund."""
    for label, net in (("net", a.net), ("fund", a.fund.net)):
        for i in range(net.k):
            formula = architecture.depth(net, i)
            decomposed = architecture.ring_decomposition(net, i).depth
            if formula != decomposed:
                return "fail", (
                    f"net={net_literal(a.net)} {label} type {i}: formula {formula} "
                    f"vs decomposition {decomposed}"
                )
    return "pass", "both depth routes agree"


def _check_singularity_determinant_oracle(a: _Analysis) -> tuple[str, str]:
    """Depth, bijectivity and exact determinant agree about singularity."""
    for label, net in (("net", a.net), ("fund", a.fund.net)):
        for i in range(net.k):
            routes = architecture.singularity_routes(net, i)
            if len(set(routes)) != 1:
                return "fail", f"net={net_literal(a.net)} {label} type {i}: routes {routes}"
    return "pass", "all three singularity routes agree"


def _check_balance_projection_oracle(a: _Analysis) -> tuple[str, str]:
    """A coloring is balanced iff the forced quotient maps are consistent,
    iff the class projection is a fibration onto the quotient."""
    if a.net.n > _PARTITION_BOUND:
        return "skip", f"{a.net.n} cells exceeds the partition bound {_PARTITION_BOUND}"
    net = a.net
    balanced_count = 0
    for string in synchrony.partition_strings(net.n):
        col = synchrony.Coloring(string)
        balanced = synchrony.is_balanced(net, col)
        forced = synchrony.attempt_quotient_maps(net, col)
        if balanced != (forced is not None):
            return "fail", (
                f"net={net_literal(net)} coloring={list(string)}: balanced={balanced} "
                f"but forced maps {'exist' if forced else 'are inconsistent'}"
            )
        if balanced:
            balanced_count += 1
            q, proj = synchrony.quotient(net, col)
            if not fibration.is_fibration(net, q, proj.mapping):
                return "fail", f"net={net_literal(net)} coloring={list(string)}: projection fails"
    return "pass", f"{balanced_count} balanced colorings, predicate matches fibration route"


def _check_ring_cycle_structure(a: _Analysis) -> tuple[str, str]:
    """Each ring is one sigma_i cycle; the semiperiod is (depth, lcm of ring sizes)."""
    for label, net in (("net", a.net), ("fund", a.fund.net)):
        for i in range(net.k):
            decomposition = architecture.ring_decomposition(net, i)
            for ring in decomposition.rings:
                cell = ring[0]
                seen = [cell]
                for _ in range(net.n):
                    cell = net.sigma[i][cell]
                    if cell == ring[0]:
                        break
                    seen.append(cell)
                if sorted(seen) != list(ring):
                    return "fail", (
                        f"net={net_literal(a.net)} {label} type {i}: ring {list(ring)} "
                        f"is not a single cycle"
                    )
            sp = architecture.semiperiod(net, i)
            want_period = math.lcm(*(len(r) for r in decomposition.rings))
            if sp.preperiod != decomposition.depth or sp.period != want_period:
                return "fail", (
                    f"net={net_literal(a.net)} {label} type {i}: semiperiod "
                    f"({sp.preperiod},{sp.period}) vs depth {decomposition.depth}, "
                    f"lcm {want_period}"
                )
    return "pass", "rings are cycles; semiperiod is (depth, ring lcm)"


#: registry: order matters only for report layout, every check is independent.
CHECKS: tuple[tuple[str, Callable[[_Analysis], tuple[str, str]]], ...] = (
    ("fundamental-backward-connected-for-id", _check_fund_backward_connected),
    ("double-fundamental-isomorphic", _check_double_fundamental),
    ("fundamental-fibrations-complete", _check_fundamental_fibrations),
    ("lift-iff-backward-connected", _check_lift_iff_backward_connected),
    ("quotient-preservation", _check_quotient_preservation),
    ("subnetwork-to-quotient", _check_subnetwork_to_quotient),
    ("backward-connected-subnetwork-lift", _check_backward_connected_subnetwork_lift),
    ("lift-transitive-subnetwork-chain", _check_lift_transitive_subnetwork_chain),
    ("fibration-into-fundamental-condition", _check_fibration_into_fundamental),
    ("fundamental-characterization", _check_fundamental_characterization),
    ("depth-equality", _check_depth_equality),
    ("singularity-equivalence", _check_singularity_equivalence),
    ("ring-lcm", _check_ring_lcm),
    ("group-structure", _check_group_structure),
    ("loop-chain", _check_loop_chain),
    ("fibration-enumeration-oracle", _check_fibration_enumeration_oracle),
    ("depth-formula-oracle", _check_depth_formula_oracle),
    ("singularity-determinant-oracle", _check_singularity_determinant_oracle),
    ("balance-projection-oracle", _check_balance_projection_oracle),
    ("ring-cycle-structure", _check_ring_cycle_structure),
)

CHECK_IDS = tuple(check_id for check_id, _ in CHECKS)


def check_network(
    net: Network, cap: int = DEFAULT_CAP, brute_bound: int = DEFAULT_BRUTE_BOUND
) -> list[CheckResult]:
    """Run every proposition check on one network.

    CapExceeded inside a check is recorded as a skip with the reason; any
    other exception is a bug and propagates.
    """
    analysis = _Analysis(net, cap, brute_bound)
    results = []
    for check_id, fn in CHECKS:
        start = time.perf_counter()
        try:
            verdict, witness = fn(analysis)
        except CapExceeded as exc:
            verdict, witness = "skip", f"cap exceeded: {exc}"
        results.append(CheckResult(check_id, verdict, witness, time.perf_counter() - start))
    return results


FILTERS: dict[str, Callable[[Network], bool]] = {
    "backward-connected": lambda net: bool(network.backward_connected_cells(net)),
    "connected": lambda net: len(network.connected_components(net)) == 1,
    "transitive": lambda net: bool(fibration.transitive_cells(net)),
}


def enumerate_networks(spec: SweepSpec, budget: int = DEFAULT_BUDGET) -> Iterator[Network]:
    """All networks of the spec, in lexicographic sigma order (or sampled)."""
    n, k = spec.cells, spec.edge_types
    if spec.mode == "exhaustive":
        total = n ** (n * k)
        if total > budget:
            raise BudgetExceeded(total, budget)
        for flat in itertools.product(range(n), repeat=n * k):
            sigma = tuple(flat[i * n : (i + 1) * n] for i in range(k))
            yield Network(n=n, k=k, sigma=sigma)
    elif spec.mode == "sampled":
        # a fixed default keeps unseeded runs reproducible
        rng = random.Random(0 if spec.seed is None else spec.seed)
        for _ in range(spec.sample_count):
            sigma = tuple(
                tuple(rng.randrange(n) for _ in range(n)) for _ in range(k)
            )
            yield Network(n=n, k=k, sigma=sigma)
    else:
        raise ValueError(f"unknown sweep mode {spec.mode!r}")


def _run_checks_for_sweep(args: tuple[Network, int, int]) -> list[tuple[str, str, str]]:
    net, cap, brute_bound = args
    return [(r.check_id, r.verdict, r.witness) for r in check_network(net, cap, brute_bound)]


def sweep(
    spec: SweepSpec,
    budget: int = DEFAULT_BUDGET,
    cap: int = DEFAULT_CAP,
    brute_bound: int = DEFAULT_BRUTE_BOUND,
    jobs: int = 1,
) -> SweepReport:
    """check_network over every network of the spec, merged in enumeration order.

    Networks are independent, so jobs > 1 fans them out over processes;
    results are still merged in enumeration order, keeping the report
    deterministic for a fixed spec.
    """
    predicate = FILTERS[spec.filter] if spec.filter else None
    passed = {check_id: 0 for check_id in CHECK_IDS}
    failed = dict(passed)
    skipped = dict(passed)
    first_counterexample: dict[str, str | None] = {check_id: None for check_id in CHECK_IDS}
    enumerated = 0
    checked = 0

    def networks() -> Iterator[Network]:
        nonlocal enumerated
        for net in enumerate_networks(spec, budget):
            enumerated += 1
            if predicate is None or predicate(net):
                yield net

    def consume(rows: list[tuple[str, str, str]]) -> None:
        nonlocal checked
        checked += 1
        for check_id, verdict, witness in rows:
            if verdict == "pass":
                passed[check_id] += 1
            elif verdict == "fail":
                failed[check_id] += 1
                if first_counterexample[check_id] is None:
                    first_counterexample[check_id] = witness
            else:
                skipped[check_id] += 1

    if jobs > 1:
        args = ((net, cap, brute_bound) for net in networks())
        with Pool(jobs) as pool:
            for rows in pool.imap(_run_checks_for_sweep, args, chunksize=16):
                consume(rows)
    else:
        for net in networks():
            consume(_run_checks_for_sweep((net, cap, brute_bound)))

    summaries = tuple(
        CheckSummary(
            check_id=check_id,
            passed=passed[check_id],
            failed=failed[check_id],
            skipped=skipped[check_id],
            first_counterexample=first_counterexample[check_id],
        )
        for check_id in CHECK_IDS
    )
    return SweepReport(spec=spec, enumerated=enumerated, checked=checked, per_check=summaries)
