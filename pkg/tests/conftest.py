"""Shared fixtures: the worked example networks, transcribed 1-based."""

from __future__ import annotations

import itertools
from pathlib import Path

import pytest

from cellnets import Network, validate

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fig1a() -> Network:
    return validate(4, 1, [[2, 1, 2, 1]], name="fig1a", one_based=True)


@pytest.fixture
def fig1b() -> Network:
    return validate(4, 2, [[1, 1, 1, 2], [2, 2, 1, 2]], name="fig1b", one_based=True)


@pytest.fixture
def fig1c() -> Network:
    return validate(5, 2, [[1, 2, 2, 5, 4], [2, 1, 4, 4, 5]], name="fig1c", one_based=True)


@pytest.fixture
def fig3() -> Network:
    # input network of fig1c for cell 1: identity plus swap
    return validate(2, 2, [[1, 2], [2, 1]], name="fig3", one_based=True)


@pytest.fixture
def fig4() -> Network:
    # 3-ring with feed-forward tails hanging off it
    return validate(9, 1, [[2, 5, 6, 7, 4, 8, 5, 7, 8]], name="fig4", one_based=True)


@pytest.fixture
def fig5a() -> Network:
    return validate(2, 2, [[2, 1], [1, 1]], name="fig5a", one_based=True)


@pytest.fixture
def fund_fig1c_drawn() -> Network:
    # fundamental network of fig1c in the drawn figure's cell order
    return validate(
        9,
        2,
        [[6, 7, 2, 5, 4, 1, 2, 9, 8], [2, 1, 4, 8, 9, 7, 6, 4, 5]],
        name="fund_fig1c",
        one_based=True,
    )


@pytest.fixture
def single_cell() -> Network:
    return validate(1, 1, [[0]])


def all_networks(n: int, k: int):
    """Every homogeneous asymmetric-inputs network on n cells and k types."""
    for flat in itertools.product(range(n), repeat=n * k):
        yield Network(n=n, k=k, sigma=tuple(flat[i * n : (i + 1) * n] for i in range(k)))


@pytest.fixture(scope="session")
def mini_sweep() -> list[Network]:
    """Small exhaustive universe used by the property tests."""
    nets = list(all_networks(2, 1)) + list(all_networks(3, 1)) + list(all_networks(2, 2))
    return nets
