"""Rings, depth, semi-periodicity, adjacency matrices and loop-chains.

Restricted to one edge type, every connected component is a unique
directed cycle (the ring) with trees hanging off it.  The ring of a
component is the image of the component under sigma^a for the semiperiod
preperiod a, and the depth is the farthest any cell sits from its ring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import MultipleEdgeTypes
from .network import (
    Network,
    connected_components,
    restrict_to_edge_type,
    sources,
    strongly_connected_components,
)
from .semigroup import DEFAULT_CAP, FundamentalNetwork, compose, fundamental_network


@dataclass(frozen=True)
class SemiPeriod:
    """Minimal (preperiod a, period b) with sigma^a == sigma^(a+b)."""

    preperiod: int
    period: int


@dataclass(frozen=True)
class RingDecomposition:
    """Per-edge-type structure: components, their rings, distances and depths."""

    edge_type: int
    components: tuple[tuple[int, ...], ...]
    rings: tuple[tuple[int, ...], ...]
    component_depths: tuple[int, ...]
    depth: int
    distances: tuple[int, ...]


@dataclass(frozen=True)
class AdjacencyMatrix:
    """0/1 matrix with entry (c, c') = number of type-i edges from c' to c."""

    entries: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GroupStructureReport:
    """Three independently computed views of the same property.

    The fundamental network is strongly connected iff the closure is a
    group iff every representative map is a permutation; the harness
    asserts the three agree on every network it sweeps.
    """

    strongly_connected_fund: bool
    all_permutations: bool
    fund_is_group: bool

    @property
    def agree(self) -> bool:
        return self.strongly_connected_fund == self.all_permutations == self.fund_is_group


@dataclass(frozen=True)
class RingLcmReport:
    """Outcome of checking fundamental ring sizes against base ring lcms."""

    edge_type: int
    ok: bool
    global_lcm: int
    global_lcm_attained: bool
    failures: tuple[str, ...]


def _power(table: tuple[int, ...], p: int) -> tuple[int, ...]:
    out = tuple(range(len(table)))
    for _ in range(p):
        out = compose(table, out)
    return out


def semiperiod(net: Network, i: int) -> SemiPeriod:
    """Minimal (a, b) with sigma_i^a == sigma_i^(a+b), by first-repeat detection."""
    table = net.sigma[i]
    seen: dict[tuple[int, ...], int] = {}
    current = tuple(range(net.n))
    step = 0
    while current not in seen:
        seen[current] = step
        current = compose(table, current)
        step += 1
    first = seen[current]
    return SemiPeriod(preperiod=first, period=step - first)


def _cycle_cells(net: Network, i: int) -> set[int]:
    """Cells lying on a sigma_i cycle: iterating sigma_i from c returns to c."""
    table = net.sigma[i]
    out = set()
    for c in range(net.n):
        d = table[c]
        for _ in range(net.n):
            if d == c:
                out.add(c)
                break
            d = table[d]
    return out


def ring_decomposition(net: Network, i: int) -> RingDecomposition:
    """Components, rings and distances of the type-i restriction.

    Rings are computed as sigma_i^a(component) for the semiperiod
    preperiod a; distances by multi-source BFS from ring cells along the
    reversed type-i edges (each non-ring cell has a unique parent, so the
    region below the rings is a forest and distances are unambiguous).
    """
    restricted = restrict_to_edge_type(net, i)
    comps = connected_components(restricted)
    a = semiperiod(net, i).preperiod
    power_a = _power(net.sigma[i], a)
    rings = tuple(tuple(sorted({power_a[c] for c in comp})) for comp in comps)

    # successors of d under type i: the cells d feeds
    succ: list[list[int]] = [[] for _ in range(net.n)]
    for c in range(net.n):
        succ[net.sigma[i][c]].append(c)
    dist = [-1] * net.n
    frontier = [c for ring in rings for c in ring]
    for c in frontier:
        dist[c] = 0
    d = 0
    while frontier:
        nxt = []
        d += 1
        for c in frontier:
            for e in succ[c]:
                if dist[e] == -1:
                    dist[e] = d
                    nxt.append(e)
        frontier = nxt

    comp_depths = tuple(max(dist[c] for c in comp) for comp in comps)
    return RingDecomposition(
        edge_type=i,
        components=comps,
        rings=rings,
        component_depths=comp_depths,
        depth=max(comp_depths),
        distances=tuple(dist),
    )


def depth(net: Network, i: int) -> int:
    """Depth of the type-i restriction: least p with sigma_i^p(C) inside the rings.

    Computed from iterated powers and the cycle cells only, independently
    of the component/BFS decomposition, so the two routes cross-check.
    """
    rings = _cycle_cells(net, i)
    current = tuple(range(net.n))
    table = net.sigma[i]
    p = 0
    while not set(current) <= rings:
        current = compose(table, current)
        p += 1
    return p


def adjacency_matrix(net: Network, i: int) -> AdjacencyMatrix:
    """Row c carries a single 1 in column sigma_i(c)."""
    rows = tuple(
        tuple(1 if net.sigma[i][c] == cc else 0 for cc in range(net.n)) for c in range(net.n)
    )
    return AdjacencyMatrix(entries=rows)


def _integer_determinant(matrix: tuple[tuple[int, ...], ...]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for col in range(n - 1):
        pivot_row = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = m[col][col]
    return sign * m[n - 1][n - 1]


def singularity_routes(net: Network, i: int) -> tuple[bool, bool, bool]:
    """(by depth, by non-bijectivity, by zero determinant): three routes to 'singular'."""
    by_depth = depth(net, i) != 0
    by_bijection = len(set(net.sigma[i])) != net.n
    by_determinant = _integer_determinant(adjacency_matrix(net, i).entries) == 0
    return by_depth, by_bijection, by_determinant


def is_singular(net: Network, i: int) -> bool:
    """True iff the type-i adjacency matrix is singular, i.e. depth != 0.

    The depth, bijectivity and exact-determinant routes are all computed
    and must agree; a mismatch would be an implementation bug.
    """
    routes = singularity_routes(net, i)
    if len(set(routes)) != 1:
        raise RuntimeError(f"singularity routes disagree on type {i}: {routes}")
    return routes[0]


def loop_chain_classify(net: Network) -> tuple[int, int] | None:
    """(l, p) when the network is a loop-chain: one l-cell source, depth p, n == l + p.

    Multi-edge-type networks return None rather than erroring so the
    classifier composes in pipelines.
    """
    if net.k != 1:
        return None
    srcs = sources(net)
    if len(srcs) != 1:
        return None
    l = len(srcs[0])
    p = depth(net, 0)
    if net.n != l + p:
        return None
    return l, p


def loop_chain_prediction(net: Network) -> tuple[int, int]:
    """(lcm of ring sizes, depth): the loop-chain its fundamental network must be."""
    if net.k != 1:
        raise MultipleEdgeTypes(net.k)
    decomposition = ring_decomposition(net, 0)
    l = math.lcm(*(len(ring) for ring in decomposition.rings))
    return l, depth(net, 0)


def group_structure(
    net: Network, cap: int = DEFAULT_CAP, fund: FundamentalNetwork | None = None
) -> GroupStructureReport:
    """Report the three equivalent group-structure views, each computed directly.

    fund_is_group checks that every closure element has a two-sided
    inverse inside the closure (non-bijective tables cannot have one).
    """
    if fund is None:
        fund = fundamental_network(net, cap)
    strongly_connected = len(strongly_connected_components(fund.net)) == 1
    all_permutations = all(len(set(net.sigma[i])) == net.n for i in range(net.k))

    identity = tuple(range(net.n))
    is_group = True
    for e in fund.elements:
        if len(set(e.table)) != net.n:
            is_group = False
            break
        inverse = [0] * net.n
        for c, v in enumerate(e.table):
            inverse[v] = c
        other = fund.table_index.get(tuple(inverse))
        if other is None or compose(e.table, tuple(inverse)) != identity:
            is_group = False
            break
    return GroupStructureReport(
        strongly_connected_fund=strongly_connected,
        all_permutations=all_permutations,
        fund_is_group=is_group,
    )


def ring_lcm_check(
    net: Network, i: int, cap: int = DEFAULT_CAP, fund: FundamentalNetwork | None = None
) -> RingLcmReport:
    """Verify fundamental ring sizes against the base network's ring lcms.

    For every element gamma of a fundamental component, the component's
    ring size must equal lcm{|ring of base component D|: D meets
    gamma(C)}; the component of Id attains the lcm of all base ring
    sizes.
    """
    if fund is None:
        fund = fundamental_network(net, cap)
    base = ring_decomposition(net, i)
    fund_dec = ring_decomposition(fund.net, i)

    comp_of_cell = {}
    for j, comp in enumerate(base.components):
        for c in comp:
            comp_of_cell[c] = j
    base_ring_sizes = [len(r) for r in base.rings]

    failures: list[str] = []
    id_component_ring: int | None = None
    for j, comp in enumerate(fund_dec.components):
        ring_size = len(fund_dec.rings[j])
        for cell in comp:
            gamma = fund.elements[cell]
            touched = sorted({comp_of_cell[v] for v in gamma.table})
            expected = math.lcm(*(base_ring_sizes[t] for t in touched))
            if expected != ring_size:
                failures.append(
                    f"type {i}: element {gamma.word} in component {j}: "
                    f"ring size {ring_size} != lcm {expected}"
                )
        if fund.id_index in comp:
            id_component_ring = ring_size

    global_lcm = math.lcm(*base_ring_sizes)
    attained = id_component_ring == global_lcm and global_lcm in {
        len(r) for r in fund_dec.rings
    }
    if not attained:
        failures.append(
            f"type {i}: global lcm {global_lcm} not attained by the Id component "
            f"(ring sizes {[len(r) for r in fund_dec.rings]})"
        )
    return RingLcmReport(
        edge_type=i,
        ok=not failures,
        global_lcm=global_lcm,
        global_lcm_attained=attained,
        failures=tuple(failures),
    )
