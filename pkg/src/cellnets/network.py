"""Core network model: immutable maps, reachability and component structure.

A homogeneous network with asymmetric inputs on cells 0..n-1 is fully
described by one self-map per edge type: sigma[i][c] is the source of the
unique type-i edge targeting c.  All analyses are pure functions over the
frozen Network value, so everything here is safe to share across threads
and to memoize.

Cells are 0-based internally.  Fixtures written 1-based, the way drawn
figures are usually labeled, can be entered verbatim through
``validate(..., one_based=True)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyNetwork, MalformedNetwork, NotClosed, OutOfRangeCell

#: a word is a sequence of edge-type indices; () is the identity.
#: evaluate_word composes left-to-right as function composition, i.e.
#: word (i, j) means sigma_i o sigma_j (letter 0 applied last).
Word = tuple[int, ...]


@dataclass(frozen=True)
class Network:
    """Immutable homogeneous network with asymmetric inputs.

    sigma[i][c] = source cell of the unique type-i edge into c.  Having one
    entry per (type, cell) pair is exactly the asymmetric-inputs condition.
    """

    n: int
    k: int
    sigma: tuple[tuple[int, ...], ...]
    name: str | None = None

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise EmptyNetwork(self.n, self.k)
        if len(self.sigma) != self.k:
            raise MalformedNetwork(f"expected {self.k} maps, got {len(self.sigma)}")
        for i, row in enumerate(self.sigma):
            if len(row) != self.n:
                raise MalformedNetwork(f"sigma[{i}] has length {len(row)}, expected {self.n}")
            for c, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.n:
                    raise OutOfRangeCell(i, c, v, self.n)

    def cells(self) -> range:
        return range(self.n)

    def edge_types(self) -> range:
        return range(self.k)


def validate(
    n: int,
    k: int,
    sigma: Sequence[Sequence[int]],
    name: str | None = None,
    one_based: bool = False,
) -> Network:
    """Build a Network from a raw description, rejecting anything malformed.

    With one_based=True every entry is expected in [1, n] and shifted down,
    so 1-based figure transcriptions go in unchanged.
    """
    rows = []
    for row in sigma:
        if one_based:
            row = [v - 1 if isinstance(v, int) and not isinstance(v, bool) else v for v in row]
        rows.append(tuple(row))
    return Network(n=n, k=k, sigma=tuple(rows), name=name)


def evaluate_word(net: Network, word: Sequence[int], c: int) -> int:
    """Apply the composed map of a word to cell c; the empty word is the identity.

    Letters compose as functions: word (i, j) applied to c is sigma_i(sigma_j(c)).
    """
    for letter in reversed(word):
        c = net.sigma[letter][c]
    return c


def _backward_closure(net: Network, target: int) -> set[int]:
    """Cells with a directed path of length >= 1 into target.

    Walking sigma from the target visits exactly the path sources;
    target itself appears iff it lies on a cycle.
    """
    seen: set[int] = set()
    frontier = [net.sigma[i][target] for i in range(net.k)]
    while frontier:
        nxt = []
        for c in frontier:
            if c not in seen:
                seen.add(c)
                nxt.extend(net.sigma[i][c] for i in range(net.k))
        frontier = nxt
    return seen


def reaches(net: Network, source: int, target: int) -> bool:
    """True iff a directed path (length >= 1) runs from source to target.

    reaches(c, c) is true exactly when c lies on a cycle.
    """
    return source in _backward_closure(net, target)


def is_backward_connected_for(net: Network, c: int) -> bool:
    """True iff every other cell has a directed path to c."""
    closure = _backward_closure(net, c)
    return all(d in closure for d in range(net.n) if d != c)


def backward_connected_cells(net: Network) -> set[int]:
    """All cells the network is backward connected for; nonempty iff backward connected."""
    return {c for c in range(net.n) if is_backward_connected_for(net, c)}


def induced_subnetwork(net: Network, cells: Iterable[int]) -> tuple[Network, tuple[int, ...]]:
    """Restrict the network to a sigma-closed cell set.

    Returns the subnetwork (cells renumbered in ascending original order)
    and the embedding that sends each new index to its original cell.
    """
    members = sorted(set(cells))
    position = {c: j for j, c in enumerate(members)}
    rows = []
    for i in range(net.k):
        row = []
        for c in members:
            image = net.sigma[i][c]
            if image not in position:
                raise NotClosed(frozenset(members), c, i, image)
            row.append(position[image])
        rows.append(tuple(row))
    sub = Network(n=len(members), k=net.k, sigma=tuple(rows))
    return sub, tuple(members)


def input_network(net: Network, c: int) -> tuple[Network, tuple[int, ...]]:
    """Subnetwork of all cells that feed c (directly or indirectly), plus c.

    The result is backward connected for c by construction.  The second
    return value embeds the subnetwork's cells back into net.
    """
    return induced_subnetwork(net, _backward_closure(net, c) | {c})


def restrict_to_edge_type(net: Network, i: int) -> Network:
    """Single-edge-type network keeping only the type-i edges."""
    return Network(n=net.n, k=1, sigma=(net.sigma[i],))


def connected_components(net: Network) -> tuple[tuple[int, ...], ...]:
    """Partition of cells into undirected components (edges of every type)."""
    parent = list(range(net.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(net.k):
        for c in range(net.n):
            a, b = find(net.sigma[i][c]), find(c)
            if a != b:
                parent[b] = a
    groups: dict[int, list[int]] = {}
    for c in range(net.n):
        groups.setdefault(find(c), []).append(c)
    return tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))


def strongly_connected_components(net: Network) -> tuple[tuple[int, ...], ...]:
    """SCC partition of the directed graph with edges sigma_i(c) -> c.

    Iterative Tarjan; components are returned sorted by smallest member.
    """
    # successor lists: cells fed by d
    succ: list[list[int]] = [[] for _ in range(net.n)]
    for i in range(net.k):
        for c in range(net.n):
            succ[net.sigma[i][c]].append(c)

    index = [-1] * net.n
    low = [0] * net.n
    on_stack = [False] * net.n
    stack: list[int] = []
    counter = 0
    components: list[tuple[int, ...]] = []

    for start in range(net.n):
        if index[start] != -1:
            continue
        work = [(start, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for j in range(pi, len(succ[v])):
                w = succ[v][j]
                if index[w] == -1:
                    work[-1] = (v, j + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                components.append(tuple(sorted(comp)))
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])
    return tuple(sorted(components, key=min))


def sources(net: Network) -> list[tuple[int, ...]]:
    """SCCs that receive no edge from outside, i.e. sigma-closed SCCs."""
    out = []
    for comp in strongly_connected_components(net):
        members = set(comp)
        if all(net.sigma[i][c] in members for c in comp for i in range(net.k)):
            out.append(comp)
    return out


def terminal_components(net: Network) -> list[tuple[int, ...]]:
    """SCCs with no outgoing edge: nothing outside is fed from them.

    Every cell has a directed path into some terminal component, so the
    input networks of one representative per terminal component cover the
    whole network.  Used as the root set for fibration search.
    """
    sccs = strongly_connected_components(net)
    scc_of = [0] * net.n
    for idx, comp in enumerate(sccs):
        for c in comp:
            scc_of[c] = idx
    has_out = [False] * len(sccs)
    for i in range(net.k):
        for c in range(net.n):
            d = net.sigma[i][c]
            if scc_of[d] != scc_of[c]:
                has_out[scc_of[d]] = True
    return [comp for idx, comp in enumerate(sccs) if not has_out[idx]]


def union_subnetworks(
    net: Network, cell_sets: Sequence[Iterable[int]]
) -> tuple[Network, tuple[int, ...]]:
    """Subnetwork induced on a union of sigma-closed cell sets.

    Each set is checked for closure on its own; the union of closed sets
    is closed, so the induced restriction always succeeds afterwards.
    """
    union: set[int] = set()
    for cells in cell_sets:
        members = set(cells)
        for c in members:
            for i in range(net.k):
                image = net.sigma[i][c]
                if image not in members:
                    raise NotClosed(frozenset(members), c, i, image)
        union |= members
    return induced_subnetwork(net, union)
