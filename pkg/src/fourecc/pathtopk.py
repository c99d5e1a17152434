"""For every tree edge, the k lightest of a family of weighted tree paths covering it."""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .dsu import RootedTree


class WeightedPath(NamedTuple):
    u: int
    v: int
    w: int


def bucket_order(weights: Sequence[int], max_weight: int) -> list[int]:
    """Indices sorted by weight, stable; counting sort over ``0..max_weight``."""
    buckets: list[list[int]] = [[] for _ in range(max_weight + 1)]
    for i, w in enumerate(weights):
        buckets[w].append(i)
    return [i for b in buckets for i in b]


def top_k_min_paths(tree: RootedTree, paths: Sequence[tuple[int, int, int]], k: int,
                    max_weight: int, stats: dict | None = None) -> list[list[int]]:
    """Return ``R`` with ``R[v]`` = indices of the k lightest paths using edge ``(v, parent[v])``.

    Lists are in increasing weight order, ties by path index. ``R[root]`` is
    always empty. Runs in O(nk + p + C) up to the inverse-Ackermann factor
    of the DSU.
    """
    if k <= 0:
        raise ValueError("k must be positive")
    weights = []
    for i, (_, _, w) in enumerate(paths):
        if not 0 <= w <= max_weight:
            raise ValueError(f"path {i} has weight {w} outside 0..{max_weight}")
        weights.append(w)

    parent = tree.parent
    pre, post = tree.pre, tree.post
    # union-tree DSU kept inline: this loop dominates the running time
    up = list(range(tree.n))
    top = list(range(tree.n))
    size = [1] * tree.n
    cover: list[list[int]] = [[] for _ in range(tree.n)]
    steps = 0

    def lowest(x: int) -> int:
        r = x
        while up[r] != r:
            r = up[r]
        while up[x] != r:
            up[x], x = r, up[x]
        return top[r]

    for i in bucket_order(weights, max_weight):
        a, b, _ = paths[i]
        for x, y in ((a, b), (b, a)):
            pre_y, post_y = pre[y], post[y]
            x = lowest(x)
            # climb until x is an ancestor of y, i.e. x reached lca(a, b)
            while not (pre[x] <= pre_y and post_y <= post[x]):
                bucket = cover[x]
                bucket.append(i)
                steps += 1
                px = parent[x]
                if len(bucket) == k:
                    # edge (x, px) is saturated: merge x's set into its parent's
                    rx, rp = x, px
                    while up[rx] != rx:
                        rx = up[rx]
                    while up[rp] != rp:
                        rp = up[rp]
                    t = top[rp]
                    if size[rx] < size[rp]:
                        rx, rp = rp, rx
                    up[rp] = rx
                    size[rx] += size[rp]
                    top[rx] = t
                x = lowest(px)

    if stats is not None:
        stats["steps"] = stats.get("steps", 0) + steps
    return cover
