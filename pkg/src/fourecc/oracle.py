"""Brute-force references for every stage. Only meant for small graphs (n <= 12, m <= 60)."""

from __future__ import annotations

import hashlib
import json
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Labeling, Multigraph


def edge_connectivity_pair(g: Multigraph, u: int, v: int, k: int) -> bool:
    """True iff ``u`` and ``v`` stay connected after deleting any ``k - 1`` edges.

    Finds up to ``k`` edge-disjoint paths by unit-capacity augmentation.
    """
    if u == v:
        raise ValueError("endpoints must differ")
    flow = [0] * g.m  # +1: pushed from edges[e][0] to edges[e][1]
    edges, adj = g.edges, g.adj
    for _ in range(k):
        prev: dict[int, tuple[int, int]] = {u: (-1, -1)}
        queue = deque([u])
        while queue and v not in prev:
            x = queue.popleft()
            for y, e in adj[x]:
                if y == x or y in prev:
                    continue
                cap = 1 - flow[e] if edges[e][0] == x else 1 + flow[e]
                if cap > 0:
                    prev[y] = (x, e)
                    queue.append(y)
        if v not in prev:
            return False
        y = v
        while y != u:
            x, e = prev[y]
            flow[e] += 1 if edges[e][0] == x else -1
            y = x
    return True


def is_k_edge_connected(g: Multigraph, k: int) -> bool:
    if g.n == 0:
        return False
    return all(edge_connectivity_pair(g, 0, v, k) for v in range(1, g.n))


def _connected_without(g: Multigraph, removed: set[int]) -> bool:
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for y, e in g.adj[x]:
            if not seen[y] and e not in removed:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == g.n


def brute_3cuts(g: Multigraph) -> list[tuple[int, int, int]]:
    """Every edge triple whose removal disconnects ``g``, in lexicographic order.

    On a graph that is not 3-edge-connected this also lists triples that
    merely contain a smaller cut.
    """
    return [t for t in combinations(range(g.m), 3) if not _connected_without(g, set(t))]


def brute_small_cuts(g: Multigraph, size: int) -> list[tuple[int, ...]]:
    return [t for t in combinations(range(g.m), size) if not _connected_without(g, set(t))]


def brute_partition(g: Multigraph, k: int) -> Labeling:
    """k-edge-connected components from all pairwise connectivity tests."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = g.n
    related = [[False] * n for _ in range(n)]
    for u in range(n):
        related[u][u] = True
        for v in range(u + 1, n):
            related[u][v] = related[v][u] = edge_connectivity_pair(g, u, v, k)
    label = list(range(n))
    for u in range(n):
        for v in range(u):
            if related[u][v]:
                label[u] = label[v]
                break
    # the relation is an equivalence, so no transitive closure should be needed
    for u in range(n):
        for v in range(n):
            if (label[u] == label[v]) != related[u][v]:
                raise AssertionError(f"{k}-edge-connectivity not transitive at ({u}, {v})")
    return Labeling.from_labels(label)


def uncompressed_hash(g: Multigraph, dfs, e: int) -> frozenset[int]:
    """Back edges leaping over tree edge ``e``; ``{e}`` for a back edge."""
    if not dfs.is_tree[e]:
        return frozenset((e,))
    below = dfs.head[e]

    def inside(x):
        return dfs.pre[below] <= dfs.pre[x] and dfs.post[x] <= dfs.post[below]

    return frozenset(b for b in range(g.m)
                     if not dfs.is_tree[b] and inside(dfs.tail[b]) and not inside(dfs.head[b]))


def digest(payload) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


@dataclass
class OracleReport:
    stage: str
    expected_digest: str
    actual_digest: str
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {"stage": self.stage, "expected": self.expected_digest,
                "actual": self.actual_digest, "ok": self.ok, "mismatches": self.mismatches}


def compare(stage: str, expected, actual) -> OracleReport:
    """Digest both payloads and list the differing entries (sequences compared as sets)."""
    report = OracleReport(stage, digest(expected), digest(actual))
    if report.expected_digest != report.actual_digest:
        exp = {json.dumps(x) for x in expected}
        act = {json.dumps(x) for x in actual}
        report.mismatches += [f"missing {x}" for x in sorted(exp - act)]
        report.mismatches += [f"unexpected {x}" for x in sorted(act - exp)]
        if not report.mismatches:
            report.mismatches.append("same items, different order or multiplicity")
    return report
