"""Core model: validation, words, reachability, components, subnetworks."""

from __future__ import annotations

import pytest

from cellnets import (
    EmptyNetwork,
    NotClosed,
    OutOfRangeCell,
    backward_connected_cells,
    connected_components,
    evaluate_word,
    input_network,
    is_backward_connected_for,
    is_fibration,
    reaches,
    restrict_to_edge_type,
    sources,
    strongly_connected_components,
    union_subnetworks,
    validate,
)
from cellnets.network import induced_subnetwork, terminal_components

from conftest import all_networks


def reaches_oracle(net, a, b):
    """Directed path a -> b of length >= 1, by boolean closure of the edge relation.

    The closure stabilizes long before the generous n*k*n word-length
    bound, and monotonicity makes the two formulations equivalent.
    """
    n = net.n
    edge = [[any(net.sigma[i][y] == x for i in range(net.k)) for y in range(n)] for x in range(n)]
    reach = [row[:] for row in edge]
    for _ in range(n * net.k * n):
        step = [
            [reach[x][y] or any(reach[x][m] and edge[m][y] for m in range(n)) for y in range(n)]
            for x in range(n)
        ]
        if step == reach:
            break
        reach = step
    return reach[a][b]


class TestValidate:
    def test_fig1a_is_valid(self):
        net = validate(4, 1, [[1, 0, 1, 0]])
        assert net.sigma == ((1, 0, 1, 0),)

    def test_single_self_loop(self):
        net = validate(1, 1, [[0]])
        assert net.n == 1 and net.k == 1

    def test_out_of_range_entry(self):
        with pytest.raises(OutOfRangeCell):
            validate(2, 1, [[2, 0]])

    def test_empty_network_rejected(self):
        with pytest.raises(EmptyNetwork):
            validate(0, 1, [])
        with pytest.raises(EmptyNetwork):
            validate(3, 0, [])

    def test_one_based_shift(self, fig1a):
        assert fig1a.sigma == ((1, 0, 1, 0),)

    def test_immutable(self, fig1a):
        with pytest.raises(AttributeError):
            fig1a.n = 5


class TestEvaluateWord:
    def test_fig1a_two_steps(self, fig1a):
        # sigma(sigma(0)) with sigma = [2 1 2 1] lands back on 0
        assert evaluate_word(fig1a, (0, 0), 0) == 0

    def test_empty_word_is_identity(self, fig1c):
        for c in range(fig1c.n):
            assert evaluate_word(fig1c, (), c) == c

    def test_fig1c_mixed_word(self, fig1c):
        # sigma_2 o sigma_1 applied to cell 3 (1-based) gives cell 1
        assert evaluate_word(fig1c, (1, 0), 2) == 0

    def test_letter_zero_applied_last(self, fig1c):
        # word (i, j) must equal sigma_i(sigma_j(c)) for every cell
        for i in range(fig1c.k):
            for j in range(fig1c.k):
                for c in range(fig1c.n):
                    want = fig1c.sigma[i][fig1c.sigma[j][c]]
                    assert evaluate_word(fig1c, (i, j), c) == want


class TestReaches:
    def test_fig1c_reaches_cell3(self, fig1c):
        for c in (0, 1, 3, 4):
            assert reaches(fig1c, c, 2)

    def test_fig1a_cell4_reaches_nothing_upstream(self, fig1a):
        assert not reaches(fig1a, 3, 0)
        assert not reaches(fig1a, 3, 1)
        assert not reaches(fig1a, 3, 2)

    def test_self_loop_reaches_itself(self, single_cell):
        assert reaches(single_cell, 0, 0)

    def test_self_reachability_needs_a_cycle(self, fig1a):
        # cells 3 and 4 hang off the ring: no cycle through them
        assert not reaches(fig1a, 2, 2)
        assert not reaches(fig1a, 3, 3)
        assert reaches(fig1a, 0, 0)

    def test_matches_word_search_oracle(self, mini_sweep):
        for net in mini_sweep:
            for a in range(net.n):
                for b in range(net.n):
                    assert reaches(net, a, b) == reaches_oracle(net, a, b)


class TestBackwardConnectivity:
    def test_fig1c_only_cell3(self, fig1c):
        assert is_backward_connected_for(fig1c, 2)
        assert backward_connected_cells(fig1c) == {2}

    def test_fig1a_none(self, fig1a):
        assert backward_connected_cells(fig1a) == set()

    def test_fig1b_none(self, fig1b):
        assert backward_connected_cells(fig1b) == set()

    def test_single_cell_vacuous(self, single_cell):
        assert backward_connected_cells(single_cell) == {0}


class TestInputNetwork:
    def test_fig1c_cell1_gives_identity_and_swap(self, fig1c):
        sub, embedding = input_network(fig1c, 0)
        assert embedding == (0, 1)
        assert sub.sigma == ((0, 1), (1, 0))

    def test_fig1c_cell3_gives_whole_network(self, fig1c):
        sub, embedding = input_network(fig1c, 2)
        assert embedding == (0, 1, 2, 3, 4)
        assert sub.sigma == fig1c.sigma

    def test_single_cell_identity(self, single_cell):
        sub, embedding = input_network(single_cell, 0)
        assert sub == single_cell and embedding == (0,)

    def test_always_backward_connected_for_the_cell(self, mini_sweep):
        for net in mini_sweep:
            for c in range(net.n):
                sub, embedding = input_network(net, c)
                assert is_backward_connected_for(sub, embedding.index(c))
                assert is_fibration(sub, net, embedding)


class TestRestrictToEdgeType:
    def test_fig1c_solid_edges(self, fig1c):
        restricted = restrict_to_edge_type(fig1c, 0)
        assert restricted.k == 1
        assert restricted.sigma == ((0, 1, 1, 4, 3),)

    def test_fig1b_dashed_edges(self, fig1b):
        assert restrict_to_edge_type(fig1b, 1).sigma == ((1, 1, 0, 1),)

    def test_single_type_unchanged(self, fig1a):
        assert restrict_to_edge_type(fig1a, 0).sigma == fig1a.sigma


class TestComponents:
    def test_fig1c_solid_components(self, fig1c):
        restricted = restrict_to_edge_type(fig1c, 0)
        assert connected_components(restricted) == ((0,), (1, 2), (3, 4))

    def test_fig1a_single_component(self, fig1a):
        assert connected_components(fig1a) == ((0, 1, 2, 3),)

    def test_single_cell(self, single_cell):
        assert connected_components(single_cell) == ((0,),)

    def test_fig1a_sccs(self, fig1a):
        assert strongly_connected_components(fig1a) == ((0, 1), (2,), (3,))

    def test_fig1c_sccs(self, fig1c):
        assert strongly_connected_components(fig1c) == ((0, 1), (2,), (3, 4))

    def test_cycle_is_one_scc(self):
        net = validate(3, 1, [[2, 3, 1]], one_based=True)
        assert strongly_connected_components(net) == ((0, 1, 2),)

    def test_scc_refines_components(self, mini_sweep):
        for net in mini_sweep:
            comp_of = {}
            for comp in connected_components(net):
                for c in comp:
                    comp_of[c] = comp
            for scc in strongly_connected_components(net):
                assert len({comp_of[c] for c in scc}) == 1

    def test_scc_matches_mutual_reachability(self, mini_sweep):
        for net in mini_sweep:
            scc_of = {}
            for scc in strongly_connected_components(net):
                for c in scc:
                    scc_of[c] = scc
            for a in range(net.n):
                for b in range(net.n):
                    mutual = a == b or (reaches(net, a, b) and reaches(net, b, a))
                    assert (scc_of[a] is scc_of[b]) == mutual


class TestSources:
    def test_fig1a(self, fig1a):
        assert sources(fig1a) == [(0, 1)]

    def test_fig4_ring(self, fig4):
        assert sources(fig4) == [(3, 4, 6)]

    def test_identity_network_all_singletons(self):
        net = validate(3, 1, [[0, 1, 2]])
        assert sources(net) == [(0,), (1,), (2,)]

    def test_sources_are_exactly_closed_sccs(self, mini_sweep):
        for net in mini_sweep:
            expected = []
            for scc in strongly_connected_components(net):
                members = set(scc)
                if all(net.sigma[i][c] in members for c in scc for i in range(net.k)):
                    expected.append(scc)
            assert sources(net) == expected

    def test_every_cell_reaches_a_terminal_component(self, mini_sweep):
        # root coverage behind the fibration search
        for net in mini_sweep:
            roots = [comp[0] for comp in terminal_components(net)]
            for c in range(net.n):
                assert any(reaches(net, c, r) or c == r for r in roots)


class TestUnionSubnetworks:
    def test_fig1c_union_of_input_networks(self, fig1c):
        sets = [input_network(fig1c, c)[1] for c in (0, 1, 3, 4)]
        sub, embedding = union_subnetworks(fig1c, sets)
        assert embedding == (0, 1, 3, 4)
        assert sub.n == 4

    def test_all_cells_gives_whole_network(self, fig1c):
        sub, embedding = union_subnetworks(fig1c, [range(fig1c.n)])
        assert sub.sigma == fig1c.sigma and embedding == (0, 1, 2, 3, 4)

    def test_not_closed_set_rejected(self, fig1a):
        with pytest.raises(NotClosed):
            union_subnetworks(fig1a, [{2}])

    def test_induced_requires_closure(self, fig1a):
        with pytest.raises(NotClosed):
            induced_subnetwork(fig1a, {2, 3})


def test_exhaustive_counts():
    assert len(list(all_networks(2, 1))) == 4
    assert len(list(all_networks(3, 1))) == 27
    assert len(list(all_networks(2, 2))) == 16
