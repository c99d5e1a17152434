"""Seeded graph families for tests and benchmarks."""

from __future__ import annotations

import random

from .graph import Multigraph

FAMILIES = ("three_cycles", "k4_chain", "random_multi")


def three_cycles(n: int, seed: int = 0) -> Multigraph:
    """Union of three random Hamiltonian cycles (parallel edges kept)."""
    if n < 2:
        raise ValueError("three_cycles needs n >= 2")
    rng = random.Random(seed)
    edges = []
    for _ in range(3):
        perm = list(range(n))
        rng.shuffle(perm)
        edges.extend(zip(perm, perm[1:] + perm[:1]))
    return Multigraph(n, edges)


def k4_chain(n: int) -> Multigraph:
    """``n // 4`` copies of K4 in a row, consecutive copies joined by three edges.

    Every joining bundle and every degree-3 vertex gives a 3-edge cut.
    """
    blocks = n // 4
    if blocks < 1:
        raise ValueError("k4_chain needs n >= 4")
    edges = []
    for i in range(blocks):
        b = 4 * i
        edges += [(b, b + 1), (b, b + 2), (b, b + 3), (b + 1, b + 2), (b + 1, b + 3), (b + 2, b + 3)]
        if i + 1 < blocks:
            edges += [(b + 1, b + 4), (b + 2, b + 5), (b + 3, b + 6)]
    return Multigraph(4 * blocks, edges)


def random_multi(n: int, degree: int = 3, seed: int = 0) -> Multigraph:
    """Configuration model: ``degree`` stubs per vertex, paired uniformly at random.

    Loops and parallel edges are kept.
    """
    if n < 1 or degree < 0 or (n * degree) % 2:
        raise ValueError("need n >= 1 and n * degree even")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(degree)]
    rng.shuffle(stubs)
    return Multigraph(n, list(zip(stubs[::2], stubs[1::2])))


def generate(family: str, n: int, seed: int = 0, degree: int = 3) -> Multigraph:
    if family == "three_cycles":
        return three_cycles(n, seed)
    if family == "k4_chain":
        return k4_chain(n)
    if family == "random_multi":
        return random_multi(n, degree, seed)
    raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def sized(family: str, m: int, seed: int = 0) -> Multigraph:
    """A member of ``family`` with roughly ``m`` edges."""
    if family == "three_cycles":
        return three_cycles(max(2, m // 3), seed)
    if family == "k4_chain":
        return k4_chain(4 * max(1, (m + 3) // 9))
    if family == "random_multi":
        return random_multi(max(2, (2 * m) // 3 // 2 * 2), 3, seed)
    raise ValueError(f"unknown family {family!r}")
