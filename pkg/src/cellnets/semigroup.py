"""Semigroup closure of the representative maps and the fundamental network.

The fundamental network lives on the semigroup generated by the identity
and the maps sigma_i, with edges given by left composition: the type-i
input of an element e is sigma_i o e.  It is the Cayley graph that makes
the hidden symmetries of the base network explicit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import CapExceeded
from .fibration import Fibration
from .network import Network, Word

#: n^n explodes quickly; the cap turns a runaway closure into a typed error.
DEFAULT_CAP = 1_000_000


def compose(outer: tuple[int, ...], inner: tuple[int, ...]) -> tuple[int, ...]:
    """Table of outer o inner (inner applied first)."""
    return tuple(outer[v] for v in inner)


@dataclass(frozen=True)
class SemigroupElement:
    """One element of the closure: its value table, canonical word and position.

    Equality of elements is equality of tables; the word is the shortest
    one evaluating to the table (ties broken lexicographically by
    generator index) and is kept for labels and reports only.
    """

    table: tuple[int, ...]
    word: Word
    index: int

    @property
    def is_identity(self) -> bool:
        return all(v == c for c, v in enumerate(self.table))


@dataclass(frozen=True)
class FundamentalNetwork:
    """The network on the semigroup closure of a base network.

    Cell j of `net` is elements[j]; the type-i edge into it comes from the
    element with table sigma_i o elements[j].table.  id_index locates the
    identity (always cell 0 in discovery order).
    """

    net: Network
    elements: tuple[SemigroupElement, ...]
    id_index: int
    base: Network

    @cached_property
    def table_index(self) -> dict[tuple[int, ...], int]:
        return {e.table: e.index for e in self.elements}

    def index_of(self, table: tuple[int, ...]) -> int:
        return self.table_index[table]


def semigroup_closure(net: Network, cap: int = DEFAULT_CAP) -> tuple[SemigroupElement, ...]:
    """All distinct maps generated by Id and the sigma_i, in discovery order.

    BFS over words by length, then lexicographically by generator index,
    composing one generator on the left per step and deduplicating by
    table.  The order (and therefore every element index) is deterministic.
    Raises CapExceeded as soon as the closure would grow past ``cap``.
    """
    identity = tuple(range(net.n))
    elements = [SemigroupElement(table=identity, word=(), index=0)]
    index_of = {identity: 0}
    frontier = [elements[0]]
    while frontier:
        nxt = []
        for i in range(net.k):
            gen = net.sigma[i]
            for elem in frontier:
                table = compose(gen, elem.table)
                if table in index_of:
                    continue
                if len(elements) >= cap:
                    raise CapExceeded(cap)
                new = SemigroupElement(table=table, word=(i,) + elem.word, index=len(elements))
                index_of[table] = new.index
                elements.append(new)
                nxt.append(new)
        frontier = nxt
    return tuple(elements)


def fundamental_network(net: Network, cap: int = DEFAULT_CAP) -> FundamentalNetwork:
    """Build the fundamental network of a base network.

    Cell order is the closure's discovery order, so repeated runs build
    the identical object; cross-checks against drawn figures should go
    through isomorphism, not label equality.
    """
    elements = semigroup_closure(net, cap)
    index_of = {e.table: e.index for e in elements}
    rows = []
    for i in range(net.k):
        gen = net.sigma[i]
        rows.append(tuple(index_of[compose(gen, e.table)] for e in elements))
    fund_net = Network(n=len(elements), k=net.k, sigma=tuple(rows))
    return FundamentalNetwork(net=fund_net, elements=elements, id_index=0, base=net)


def evaluation_fibration(fund: FundamentalNetwork, c: int) -> Fibration:
    """The fibration fund.net -> base sending each element e to e(c).

    Its image is the input network of c; as c ranges over the base cells
    these are exactly the fibrations from the fundamental network down to
    the base.
    """
    if not 0 <= c < fund.base.n:
        raise IndexError(f"cell {c} not in base network with {fund.base.n} cells")
    mapping = tuple(e.table[c] for e in fund.elements)
    return Fibration(fund.net, fund.base, mapping)


def word_label(word: Word) -> str:
    """Human-readable label for a canonical word, e.g. () -> 'Id', (1,0,0) -> 'σ2∘σ1^2'."""
    if not word:
        return "Id"
    parts = []
    run_letter, run_len = word[0], 1
    for letter in word[1:]:
        if letter == run_letter:
            run_len += 1
        else:
            parts.append((run_letter, run_len))
            run_letter, run_len = letter, 1
    parts.append((run_letter, run_len))
    return "∘".join(
        f"σ{letter + 1}" if count == 1 else f"σ{letter + 1}^{count}" for letter, count in parts
    )
