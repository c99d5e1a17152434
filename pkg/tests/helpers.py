"""Named small graphs and seeded random corpora shared by the test modules."""

from __future__ import annotations

import random
from itertools import combinations

from fourecc.generators import k4_chain
from fourecc.graph import Multigraph, parse_graph
from fourecc.oracle import is_k_edge_connected

K4_TEXT = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3"


def k4() -> Multigraph:
    return parse_graph(K4_TEXT)


def complete(n: int) -> Multigraph:
    return Multigraph(n, list(combinations(range(n), 2)))


def triple_edge() -> Multigraph:
    return Multigraph(2, [(0, 1)] * 3)


def cycle(n: int) -> Multigraph:
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Multigraph:
    return Multigraph(n, [(i, i + 1) for i in range(n - 1)])


def two_k4_join() -> Multigraph:
    """Two K4s on 0..3 and 4..7 joined by (1,4), (2,5), (3,6); m = 15."""
    return k4_chain(8)


def random_multigraph(rng: random.Random, n_max: int = 8, m_max: int = 16,
                      loops: bool = True) -> Multigraph:
    n = rng.randint(1, n_max)
    m = rng.randint(0, m_max) if loops or n > 1 else 0
    edges = []
    while len(edges) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if loops or u != v:
            edges.append((u, v))
    return Multigraph(n, edges)


def random_3ecc(rng: random.Random, n_max: int = 8) -> Multigraph:
    """Loop-free 3-edge-connected multigraph with 2..n_max vertices (rejection sampling)."""
    while True:
        n = rng.randint(2, n_max)
        m = rng.randint((3 * n + 1) // 2, (3 * n + 1) // 2 + 6)
        edges = []
        while len(edges) < m:
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v:
                edges.append((u, v))
        g = Multigraph(n, edges)
        if is_k_edge_connected(g, 3):
            return g


def random_2ecc(rng: random.Random, n_max: int = 9) -> Multigraph:
    """Loop-free 2-edge-connected multigraph, sparse enough to have many 2-cuts."""
    while True:
        n = rng.randint(2, n_max)
        m = rng.randint(n, n + 5)
        edges = []
        while len(edges) < m:
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v:
                edges.append((u, v))
        g = Multigraph(n, edges)
        if is_k_edge_connected(g, 2):
            return g


def corpus_3ecc(count: int, seed: int, n_max: int = 8) -> list[Multigraph]:
    rng = random.Random(seed)
    return [random_3ecc(rng, n_max) for _ in range(count)]


def shuffled(g: Multigraph, rng: random.Random) -> Multigraph:
    """Same graph under a random vertex renaming and edge order."""
    perm = list(range(g.n))
    rng.shuffle(perm)
    edges = [(perm[u], perm[v]) for u, v in g.edges]
    rng.shuffle(edges)
    return Multigraph(g.n, edges)
