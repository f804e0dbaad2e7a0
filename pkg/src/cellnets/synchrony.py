"""Balanced colorings, quotient networks, and quotient/subnetwork relations.

With one input per edge type, a coloring is balanced exactly when cells of
the same class have type-i inputs of the same class, for every type; the
general input-set-bijection definition collapses to this.  Balanced
colorings, surjective fibrations and quotient networks are three views of
the same data.

Quotients here are always witnessed by *surjective* fibrations.  A looser
convention sometimes found elsewhere accepts any fibration net -> q as a
quotient witness; that notion is deliberately not modeled.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotBackwardConnected, NotBalanced, SizeMismatch, TooLarge
from .fibration import Fibration, enumerate_fibrations, is_fibration
from .network import Network, backward_connected_cells
from .semigroup import FundamentalNetwork, SemigroupElement, compose

#: Bell(10) = 115,975 partitions; beyond that enumeration is refused.
DEFAULT_MAX_CELLS = 10


@dataclass(frozen=True)
class Coloring:
    """A partition of cells in canonical encoding.

    class_of[c] is the class index of cell c; classes are numbered
    0..m-1 in order of first occurrence, so equal partitions have equal
    encodings and encodings compare lexicographically.
    """

    class_of: tuple[int, ...]

    def __post_init__(self):
        seen = 0
        for v in self.class_of:
            if v > seen:
                raise ValueError(f"not canonical: class {v} appears before {seen}")
            seen = max(seen, v + 1)
        if seen != self.num_classes:
            raise ValueError("class indices are not contiguous")

    @property
    def num_classes(self) -> int:
        return max(self.class_of) + 1 if self.class_of else 0

    def classes(self) -> tuple[tuple[int, ...], ...]:
        groups: list[list[int]] = [[] for _ in range(self.num_classes)]
        for c, v in enumerate(self.class_of):
            groups[v].append(c)
        return tuple(tuple(g) for g in groups)


def canonical_coloring(labels: Sequence[object]) -> Coloring:
    """Relabel arbitrary class labels into the canonical first-occurrence form."""
    relabel: dict[object, int] = {}
    out = []
    for v in labels:
        if v not in relabel:
            relabel[v] = len(relabel)
        out.append(relabel[v])
    return Coloring(tuple(out))


def coloring_from_classes(cell_sets: Iterable[Iterable[int]], n: int) -> Coloring:
    """Coloring whose classes are the given disjoint cell sets covering 0..n-1."""
    labels: list[int] = [-1] * n
    for j, cells in enumerate(cell_sets):
        for c in cells:
            if labels[c] != -1:
                raise ValueError(f"cell {c} appears in two classes")
            labels[c] = j
    if any(v == -1 for v in labels):
        raise ValueError("classes do not cover every cell")
    return canonical_coloring(labels)


def _balance_witness(net: Network, col: Coloring) -> tuple[int, int, int] | None:
    """First (c, d, i) violating balance, scanning one class representative at a time."""
    if len(col.class_of) != net.n:
        raise SizeMismatch(len(col.class_of), net.n)
    for members in col.classes():
        rep = members[0]
        for d in members[1:]:
            for i in range(net.k):
                if col.class_of[net.sigma[i][rep]] != col.class_of[net.sigma[i][d]]:
                    return rep, d, i
    return None


def is_balanced(net: Network, col: Coloring) -> bool:
    """True iff same-class cells have same-class type-i inputs for every i."""
    return _balance_witness(net, col) is None


def quotient(net: Network, col: Coloring) -> tuple[Network, Fibration]:
    """Quotient network of a balanced coloring, with the class projection.

    The quotient's type-i map sends a class to the class of its members'
    type-i input (well defined by balance); the projection is a surjective
    fibration onto it.
    """
    witness = _balance_witness(net, col)
    if witness is not None:
        raise NotBalanced(*witness)
    reps = [members[0] for members in col.classes()]
    rows = tuple(
        tuple(col.class_of[net.sigma[i][rep]] for rep in reps) for i in range(net.k)
    )
    q = Network(n=col.num_classes, k=net.k, sigma=rows)
    projection = Fibration(net, q, col.class_of)
    assert is_fibration(net, q, col.class_of)
    return q, projection


def finest_balanced_coarsening(net: Network, col: Coloring) -> Coloring:
    """Finest balanced coloring whose classes are unions of col's classes.

    Union-find congruence closure: whenever c and d are merged, merge
    sigma_i(c) and sigma_i(d) for every type, to fixpoint.
    """
    if len(col.class_of) != net.n:
        raise SizeMismatch(len(col.class_of), net.n)
    parent = list(range(net.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pending: list[tuple[int, int]] = []
    for members in col.classes():
        rep = members[0]
        pending.extend((rep, d) for d in members[1:])
    while pending:
        a, b = pending.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[rb] = ra
        pending.extend((net.sigma[i][a], net.sigma[i][b]) for i in range(net.k))
    result = canonical_coloring([find(c) for c in range(net.n)])
    assert is_balanced(net, result)
    return result


def partition_strings(n: int) -> Iterable[tuple[int, ...]]:
    """All set partitions of 0..n-1 as canonical class arrays, in lexicographic order."""
    string = [0] * n

    def rec(pos: int, max_used: int):
        if pos == n:
            yield tuple(string)
            return
        for v in range(max_used + 2):
            string[pos] = v
            yield from rec(pos + 1, max(max_used, v))

    yield from rec(1, 0) if n > 1 else iter([(0,) * n])


def enumerate_balanced_colorings(
    net: Network, max_cells: int = DEFAULT_MAX_CELLS
) -> list[Coloring]:
    """All balanced colorings in canonical encoding, lexicographically ordered."""
    if net.n > max_cells:
        raise TooLarge(net.n, max_cells)
    out = []
    for string in partition_strings(net.n):
        col = Coloring(string)
        if is_balanced(net, col):
            out.append(col)
    return out


def is_quotient_of(q: Network, net: Network) -> Fibration | None:
    """A surjective fibration net -> q if one exists (then q is a quotient of net
    and net is a lift of q), else None."""
    if q.k != net.k or q.n > net.n:
        return None
    for fib in enumerate_fibrations(net, q):
        if fib.is_surjective:
            return fib
    return None


def is_subnetwork_of(s: Network, net: Network) -> Fibration | None:
    """An injective fibration s -> net if one exists, else None."""
    if s.k != net.k or s.n > net.n:
        return None
    fibs = enumerate_fibrations(s, net, injective_only=True)
    return fibs[0] if fibs else None


def _left_translation_criterion(
    elements: tuple[SemigroupElement, ...], sigma: SemigroupElement, c: int
) -> bool:
    """Check: e' o sigma == e'' o sigma  iff  e'(c) == e''(c), over all pairs.

    Grouping by the value at c reduces the pairwise condition to: right
    translation by sigma is constant on each group and distinct across
    groups.
    """
    by_value: dict[int, tuple[int, ...]] = {}
    for e in elements:
        translated = compose(e.table, sigma.table)
        prev = by_value.setdefault(e.table[c], translated)
        if prev != translated:
            return False
    tables = list(by_value.values())
    return len(set(tables)) == len(tables)


def subnetwork_of_fundamental_criterion(
    net: Network, fund: FundamentalNetwork
) -> tuple[int, SemigroupElement] | None:
    """Witness (c, sigma) that net embeds in its fundamental network, if any.

    For a backward-connected root c, net is a subnetwork of its
    fundamental network iff some element sigma satisfies
    e' o sigma == e'' o sigma <=> e'(c) == e''(c) for all element pairs.
    The verdict is cross-checked against the injective-fibration search.
    """
    roots = sorted(backward_connected_cells(net))
    if not roots:
        raise NotBackwardConnected(None)
    witness = None
    for c in roots:
        for sigma in fund.elements:
            if _left_translation_criterion(fund.elements, sigma, c):
                witness = (c, sigma)
                break
        if witness:
            break
    embedding = is_subnetwork_of(net, fund.net)
    assert (witness is None) == (embedding is None), "criterion disagrees with embedding search"
    return witness


def attempt_quotient_maps(net: Network, col: Coloring) -> tuple[tuple[int, ...], ...] | None:
    """Quotient maps forced by the projection-is-a-fibration constraints.

    Returns the per-type class maps when they are consistent, else None.
    Consistency holds exactly when the coloring is balanced, which makes
    this an independent oracle for the balance predicate.
    """
    if len(col.class_of) != net.n:
        raise SizeMismatch(len(col.class_of), net.n)
    m = col.num_classes
    rows: list[list[int]] = [[-1] * m for _ in range(net.k)]
    for i in range(net.k):
        for c in range(net.n):
            cls, want = col.class_of[c], col.class_of[net.sigma[i][c]]
            if rows[i][cls] == -1:
                rows[i][cls] = want
            elif rows[i][cls] != want:
                return None
    return tuple(tuple(row) for row in rows)
