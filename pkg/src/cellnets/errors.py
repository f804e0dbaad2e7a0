"""Typed errors raised by the library.

Every error carries the offending data so callers (and the CLI) can report
a concrete witness instead of a bare message.
"""

from __future__ import annotations


class CellNetError(Exception):
    """Base class for all library errors."""

    #: short machine-parsable kind, used in CLI error lines
    kind = "error"


class EmptyNetwork(CellNetError):
    kind = "empty-network"

    def __init__(self, n: int, k: int):
        self.n, self.k = n, k
        super().__init__(f"network needs at least one cell and one edge type, got n={n}, k={k}")


class MalformedNetwork(CellNetError):
    kind = "malformed-network"


class OutOfRangeCell(CellNetError):
    kind = "out-of-range-cell"

    def __init__(self, edge_type: int, cell: int, value: object, n: int):
        self.edge_type, self.cell, self.value, self.n = edge_type, cell, value, n
        super().__init__(
            f"sigma[{edge_type}][{cell}] = {value!r} is not a cell index in [0, {n})"
        )


class CapExceeded(CellNetError):
    kind = "cap-exceeded"

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"semigroup closure grew past the element cap {cap}")


class TypeMismatch(CellNetError):
    kind = "type-mismatch"

    def __init__(self, src_k: int, dst_k: int):
        self.src_k, self.dst_k = src_k, dst_k
        super().__init__(f"edge-type counts differ: {src_k} vs {dst_k}")


class NotBackwardConnected(CellNetError):
    kind = "not-backward-connected"

    def __init__(self, root: int | None = None):
        self.root = root
        where = "any cell" if root is None else f"cell {root}"
        super().__init__(f"network is not backward connected for {where}")


class NotClosed(CellNetError):
    kind = "not-closed"

    def __init__(self, cells: frozenset[int], cell: int, edge_type: int, image: int):
        self.cells, self.cell, self.edge_type, self.image = cells, cell, edge_type, image
        super().__init__(
            f"cell set {sorted(cells)} is not closed: sigma[{edge_type}]({cell}) = {image} escapes"
        )


class SizeMismatch(CellNetError):
    kind = "size-mismatch"

    def __init__(self, coloring_size: int, n: int):
        self.coloring_size, self.n = coloring_size, n
        super().__init__(f"coloring covers {coloring_size} cells but the network has {n}")


class NotBalanced(CellNetError):
    kind = "not-balanced"

    def __init__(self, c: int, d: int, edge_type: int):
        self.c, self.d, self.edge_type = c, d, edge_type
        super().__init__(
            f"coloring is not balanced: cells {c} and {d} share a class but their "
            f"type-{edge_type} inputs do not"
        )


class TooLarge(CellNetError):
    kind = "too-large"

    def __init__(self, n: int, bound: int):
        self.n, self.bound = n, bound
        super().__init__(f"{n} cells exceeds the brute-force bound {bound}")


class BudgetExceeded(CellNetError):
    kind = "budget-exceeded"

    def __init__(self, total: int, budget: int):
        self.total, self.budget = total, budget
        super().__init__(f"exhaustive sweep of {total} networks exceeds the budget {budget}")


class MultipleEdgeTypes(CellNetError):
    kind = "multiple-edge-types"

    def __init__(self, k: int):
        self.k = k
        super().__init__(f"operation is defined for single-edge-type networks only, got k={k}")
