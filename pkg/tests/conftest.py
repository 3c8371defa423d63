"""Shared corpus builders for the test suite.

All random corpora are seeded, so every run sees the same graphs and the
frozen expected values stay valid.
"""

from __future__ import annotations

import random

import pytest

from cyclekit.graph import Graph, from_edge_list


def seeded_gnp(n: int, p: float, count: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        out.append(from_edge_list(n, edges))
    return out


def mixed_corpus(seed: int = 7, per_cell: int = 25, ns=range(1, 9)) -> list[Graph]:
    """Small graphs across densities, including degenerate orders."""
    out = []
    for n in ns:
        for p in (0.15, 0.4, 0.7, 0.95):
            out.extend(seeded_gnp(n, p, per_cell, seed + 97 * n + int(100 * p)))
    return out


@pytest.fixture(scope="session")
def small_corpus() -> list[Graph]:
    return mixed_corpus()


def to_networkx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h
