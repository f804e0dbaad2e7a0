"""Network fibrations: decision, search, transitivity and isomorphism.

A fibration between networks with the same edge types is a cell map phi
with phi(sigma_i(c)) = sigma'_i(phi(c)) for every cell and type.  Fixing
the image of a cell therefore fixes the image of everything that reaches
it, which turns the search into propagation from a small set of roots.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotBackwardConnected, TooLarge, TypeMismatch
from .network import (
    Network,
    backward_connected_cells,
    is_backward_connected_for,
    terminal_components,
)


@dataclass(frozen=True)
class Fibration:
    """A cell map from source to target, carrier for relation witnesses.

    Instances produced by this module always satisfy the commutation
    criterion; use is_fibration to vet an untrusted mapping.
    """

    source: Network
    target: Network
    mapping: tuple[int, ...]

    def __call__(self, c: int) -> int:
        return self.mapping[c]

    @property
    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    @property
    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.n

    @property
    def is_bijective(self) -> bool:
        return self.source.n == self.target.n and self.is_injective

    def image(self) -> set[int]:
        return set(self.mapping)

    def inverse(self) -> "Fibration":
        if not self.is_bijective:
            raise ValueError("only bijective fibrations invert")
        inv = [0] * self.target.n
        for c, d in enumerate(self.mapping):
            inv[d] = c
        return Fibration(self.target, self.source, tuple(inv))


def is_fibration(src: Network, dst: Network, mapping: tuple[int, ...] | list[int]) -> bool:
    """Commutation check: mapping[sigma_i(c)] == sigma'_i(mapping[c]) for all c, i."""
    if src.k != dst.k:
        raise TypeMismatch(src.k, dst.k)
    if len(mapping) != src.n or any(not 0 <= v < dst.n for v in mapping):
        return False
    for i in range(src.k):
        si, di = src.sigma[i], dst.sigma[i]
        for c in range(src.n):
            if mapping[si[c]] != di[mapping[c]]:
                return False
    return True


def _propagate(
    src: Network,
    dst: Network,
    assignment: list[int],
    start: int,
    image: int,
    used: list[int] | None,
) -> list[int] | None:
    """Assign images over the backward closure of start, checking consistency.

    Returns the list of newly assigned cells for the caller to undo later,
    or None on conflict (after rolling back its own partial assignments).
    `used` tracks image multiplicity when injective maps are required.
    """
    newly: list[int] = []

    def undo() -> None:
        for c in newly:
            if used is not None:
                used[assignment[c]] -= 1
            assignment[c] = -1

    if assignment[start] == -1:
        if used is not None:
            if used[image]:
                return None
            used[image] += 1
        assignment[start] = image
        newly.append(start)
    elif assignment[start] != image:
        return None

    stack = [start]
    while stack:
        c = stack.pop()
        img = assignment[c]
        for i in range(src.k):
            parent = src.sigma[i][c]
            want = dst.sigma[i][img]
            got = assignment[parent]
            if got == -1:
                if used is not None:
                    if used[want]:
                        undo()
                        return None
                    used[want] += 1
                assignment[parent] = want
                newly.append(parent)
                stack.append(parent)
            elif got != want:
                undo()
                return None
    return newly


def propagate_from_root(src: Network, dst: Network, root: int, image: int) -> Fibration | None:
    """The unique fibration with phi(root) = image, if one exists.

    Requires src backward connected for root, so the image of every cell
    is forced by commutation; returns None when the forced map is not
    consistent.
    """
    if src.k != dst.k:
        raise TypeMismatch(src.k, dst.k)
    if not is_backward_connected_for(src, root):
        raise NotBackwardConnected(root)
    assignment = [-1] * src.n
    if _propagate(src, dst, assignment, root, image, used=None) is None:
        return None
    mapping = tuple(assignment)
    if not is_fibration(src, dst, mapping):
        return None
    return Fibration(src, dst, mapping)


def enumerate_fibrations(
    src: Network, dst: Network, *, injective_only: bool = False
) -> list[Fibration]:
    """All fibrations src -> dst, in lexicographic mapping order.

    The search picks one representative cell per terminal SCC of src
    (their input networks cover every cell), enumerates root images
    jointly and propagates with consistency pruning.  With
    injective_only=True, assignments repeating an image are pruned; the
    result equals filtering the full list by injectivity.
    """
    if src.k != dst.k:
        raise TypeMismatch(src.k, dst.k)
    roots = sorted(comp[0] for comp in terminal_components(src))
    assignment = [-1] * src.n
    used: list[int] | None = [0] * dst.n if injective_only else None
    found: list[tuple[int, ...]] = []

    def search(idx: int) -> None:
        if idx == len(roots):
            found.append(tuple(assignment))
            return
        root = roots[idx]
        for image in range(dst.n):
            newly = _propagate(src, dst, assignment, root, image, used)
            if newly is None:
                continue
            search(idx + 1)
            for c in newly:
                if used is not None:
                    used[assignment[c]] -= 1
                assignment[c] = -1

    search(0)
    fibs = []
    for mapping in sorted(found):
        assert is_fibration(src, dst, mapping)
        fibs.append(Fibration(src, dst, mapping))
    return fibs


def enumerate_fibrations_bruteforce(
    src: Network, dst: Network, max_cells: int = 4
) -> list[Fibration]:
    """Oracle: filter all dst.n ** src.n maps through is_fibration.

    Exists solely to cross-check the propagation search on small inputs.
    """
    if src.k != dst.k:
        raise TypeMismatch(src.k, dst.k)
    if src.n > max_cells:
        raise TooLarge(src.n, max_cells)
    out = []
    for mapping in itertools.product(range(dst.n), repeat=src.n):
        if is_fibration(src, dst, mapping):
            out.append(Fibration(src, dst, mapping))
    return out


def is_transitive_for(net: Network, c: int) -> bool:
    """True iff every cell is the image of c under some self-fibration."""
    if is_backward_connected_for(net, c):
        return all(
            propagate_from_root(net, net, c, d) is not None for d in range(net.n)
        )
    fibs = enumerate_fibrations(net, net)
    return {f.mapping[c] for f in fibs} == set(range(net.n))


def transitive_cells(net: Network) -> set[int]:
    """All cells the network is transitive for; nonempty iff transitive."""
    backward = backward_connected_cells(net)
    result = {c for c in backward if is_transitive_for(net, c)}
    rest = [c for c in range(net.n) if c not in backward]
    if rest:
        fibs = enumerate_fibrations(net, net)
        images: list[set[int]] = [set() for _ in range(net.n)]
        for f in fibs:
            for c in rest:
                images[c].add(f.mapping[c])
        result |= {c for c in rest if len(images[c]) == net.n}
    return result


def find_isomorphism(a: Network, b: Network) -> Fibration | None:
    """A bijective fibration a -> b if one exists, else None."""
    if a.n != b.n or a.k != b.k:
        return None
    backward = backward_connected_cells(a)
    if backward:
        root = min(backward)
        for image in range(b.n):
            fib = propagate_from_root(a, b, root, image)
            if fib is not None and fib.is_bijective:
                return fib
        return None
    for fib in enumerate_fibrations(a, b, injective_only=True):
        if fib.is_bijective:
            return fib
    return None


def compose(outer: Fibration, inner: Fibration) -> Fibration:
    """Composite fibration inner.source -> outer.target (outer after inner)."""
    if inner.target != outer.source:
        raise ValueError("fibrations do not compose: target/source mismatch")
    mapping = tuple(outer.mapping[v] for v in inner.mapping)
    return Fibration(inner.source, outer.target, mapping)
