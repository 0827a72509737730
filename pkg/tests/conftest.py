"""Shared fixtures and random-instance helpers."""

import random

import pytest

from burling import Graph, Graft


def make_random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.uniform(0.1, 0.7)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


def make_random_graft(rng: random.Random, max_n: int = 10) -> Graft:
    n = rng.randint(2, max_n)
    g = make_random_graph(rng, n)
    k = rng.randint(1, max(1, n // 2))
    return Graft(g, frozenset(rng.sample(range(n), k)))


@pytest.fixture
def c5() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


@pytest.fixture
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


@pytest.fixture
def wheel6() -> Graph:
    # C5 rim plus hub 5 with three rim neighbors
    return Graph.from_edges(
        6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 1), (5, 2)])
