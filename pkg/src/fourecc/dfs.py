"""Rooted DFS trees over multigraphs and the low-style tables built on them.

Per-tree-edge data is indexed by the tree edge's deeper endpoint (its
head): the entry for vertex ``v`` describes the edge ``(parent[v], v)``.
Missing values are ``-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dsu import RootedTree
from .graph import Multigraph
from .pathtopk import top_k_min_paths

NONE = -1


class GraphPreconditionError(ValueError):
    """The graph lacks a structural property an algorithm requires.

    ``cut`` holds offending edge ids when one is known (a bridge, a 2-cut).
    """

    def __init__(self, message: str, cut: Sequence[int] = ()):
        super().__init__(message)
        self.cut = tuple(cut)


@dataclass
class DfsStructure:
    root: int
    parent: list[int]
    parent_edge: list[int]
    pre: list[int]
    post: list[int]
    depth: list[int]
    size: list[int]
    order: list[int]  # vertices in preorder
    is_tree: list[bool]
    tail: list[int]
    head: list[int]

    @property
    def n(self) -> int:
        return len(self.parent)

    def is_ancestor(self, x: int, y: int) -> bool:
        """``x <= y`` in tree order (ancestor or equal)."""
        return self.pre[x] <= self.pre[y] and self.post[y] <= self.post[x]

    def rooted_tree(self) -> RootedTree:
        return RootedTree(self.parent, self.root, self.pre, self.post, self.depth)

    def tree_edges(self) -> list[int]:
        pe = self.parent_edge
        return [pe[v] for v in self.order if pe[v] >= 0]

    def back_edges(self) -> list[int]:
        return [e for e, t in enumerate(self.is_tree) if not t]


def build_dfs(g: Multigraph, root: int = 0) -> DfsStructure:
    """Iterative DFS from ``root`` following adjacency (file) order.

    Tree edges point away from the root, back edges toward it. Raises
    ``GraphPreconditionError`` on a disconnected graph and ``ValueError``
    on a self-loop.
    """
    n, m = g.n, g.m
    if not 0 <= root < n:
        raise ValueError(f"root {root} outside 0..{n - 1}")
    adj = g.adj
    parent = [NONE] * n
    parent_edge = [NONE] * n
    pre = [0] * n
    post = [0] * n
    depth = [0] * n
    size = [1] * n
    order = [root]
    kind = [0] * m  # 0 unseen, 1 tree, 2 back
    tail = [0] * m
    head = [0] * m
    ptr = [0] * n

    clock = 1
    pre[root] = 1
    stack = [root]
    while stack:
        v = stack[-1]
        nbrs = adj[v]
        i = ptr[v]
        pushed = False
        while i < len(nbrs):
            y, e = nbrs[i]
            i += 1
            if kind[e]:
                continue
            if y == v:
                raise ValueError(f"self-loop on edge {e}; strip loops first")
            if pre[y] == 0:
                kind[e] = 1
                tail[e], head[e] = v, y
                parent[y], parent_edge[y] = v, e
                depth[y] = depth[v] + 1
                clock += 1
                pre[y] = clock
                order.append(y)
                stack.append(y)
                pushed = True
                break
            # y is visited and e unclassified, so y is an open ancestor
            kind[e] = 2
            tail[e], head[e] = v, y
        ptr[v] = i
        if not pushed:
            stack.pop()
            clock += 1
            post[v] = clock
            if stack:
                size[stack[-1]] += size[v]

    if len(order) != n:
        raise GraphPreconditionError("graph is disconnected")
    return DfsStructure(root, parent, parent_edge, pre, post, depth, size, order,
                        [k == 1 for k in kind], tail, head)


def relabel_preorder(g: Multigraph, dfs: DfsStructure) -> tuple[Multigraph, list[int]]:
    """Copy of ``g`` with vertex ``v`` renamed ``rank[v]``, its DFS preorder index.

    Edge ids and adjacency order survive, so a DFS of the copy from 0 finds
    the same tree. Tree walks on the copy touch nearby list slots.
    """
    rank = [0] * g.n
    for i, v in enumerate(dfs.order):
        rank[v] = i
    return Multigraph(g.n, [(rank[u], rank[v]) for u, v in g.edges]), rank


def leaps_over(dfs: DfsStructure, back: int, tree: int) -> bool:
    """Whether back edge ``back`` has its tail below ``tree`` and its head above it."""
    if dfs.is_tree[back]:
        raise ValueError(f"edge {back} is a tree edge")
    if not dfs.is_tree[tree]:
        raise ValueError(f"edge {tree} is a back edge")
    v = dfs.head[tree]
    return dfs.is_ancestor(v, dfs.tail[back]) and not dfs.is_ancestor(v, dfs.head[back])


@dataclass
class LowTables:
    """Extremal leaping back edges for each tree edge (indexed by head vertex).

    ``low1..3``: smallest head preorders; ``maxup1..2``: largest head
    preorders; ``mindn1..2`` / ``maxdn1..2``: smallest / largest tail
    preorders. Ties go to the smaller edge id.
    """

    low1: list[int]
    low2: list[int]
    low3: list[int]
    maxup1: list[int]
    maxup2: list[int]
    mindn1: list[int]
    mindn2: list[int]
    maxdn1: list[int]
    maxdn2: list[int]


def compute_lows(g: Multigraph, dfs: DfsStructure, count: int = 3) -> list[list[int]]:
    """The ``count`` leaping back edges with smallest head preorder, per vertex.

    One bottom-up pass: the candidates for ``(parent[v], v)`` are the back
    edges leaving ``v`` and the kept candidates of ``v``'s children.
    """
    n, m = g.n, g.m
    pre, head, is_tree = dfs.pre, dfs.head, dfs.is_tree
    parent = dfs.parent
    stride = m + 1
    # candidate keys encode (pre[head], edge id) as one int
    pending: list[list[int]] = [[] for _ in range(n)]
    for e in range(m):
        if not is_tree[e]:
            pending[dfs.tail[e]].append(pre[head[e]] * stride + e)
    lows: list[list[int]] = [[] for _ in range(n)]
    for v in reversed(dfs.order):
        p = parent[v]
        if p < 0:
            continue
        limit = pre[v] * stride
        cands = [k for k in pending[v] if k < limit]
        if len(cands) > count:
            cands.sort()
            del cands[count:]
        elif len(cands) > 1:
            cands.sort()
        lows[v] = [k % stride for k in cands]
        pending[p].extend(cands)
        pending[v] = []
    return lows


def compute_low_tables(g: Multigraph, dfs: DfsStructure, stats: dict | None = None) -> LowTables:
    """All tables used by the cut enumerators.

    Raises ``GraphPreconditionError`` naming the bridge if some tree edge
    has no leaping back edge.
    """
    n = g.n
    lows = compute_lows(g, dfs, 3)
    low1, low2, low3 = [NONE] * n, [NONE] * n, [NONE] * n
    for v in range(n):
        row = lows[v]
        if dfs.parent[v] < 0:
            continue
        if not row:
            raise GraphPreconditionError(
                f"tree edge {dfs.parent_edge[v]} is a bridge", (dfs.parent_edge[v],))
        low1[v] = row[0]
        if len(row) > 1:
            low2[v] = row[1]
        if len(row) > 2:
            low3[v] = row[2]

    pre, tail, head = dfs.pre, dfs.tail, dfs.head
    backs = dfs.back_edges()
    top = 2 * n
    tree = dfs.rooted_tree()

    def two_best(weight) -> tuple[list[int], list[int]]:
        paths = [(tail[b], head[b], weight(b)) for b in backs]
        cover = top_k_min_paths(tree, paths, 2, top, stats)
        first, second = [NONE] * n, [NONE] * n
        for v in range(n):
            r = cover[v]
            if r:
                first[v] = backs[r[0]]
                if len(r) > 1:
                    second[v] = backs[r[1]]
        return first, second

    maxup1, maxup2 = two_best(lambda b: top - pre[head[b]])
    mindn1, mindn2 = two_best(lambda b: pre[tail[b]])
    maxdn1, maxdn2 = two_best(lambda b: top - pre[tail[b]])
    return LowTables(low1, low2, low3, maxup1, maxup2, mindn1, mindn2, maxdn1, maxdn2)


def batch_lca(tree: RootedTree, queries: Sequence[tuple[int, int]]) -> list[int]:
    """Offline lowest common ancestors (Tarjan), driven by a union-tree DSU."""
    n = tree.n
    post, parent = tree.post, tree.parent
    at: list[list[int]] = [[] for _ in range(n)]
    for qi, (a, b) in enumerate(queries):
        at[a].append(qi)
        at[b].append(qi)
    by_post = sorted(range(n), key=post.__getitem__)
    # union-tree DSU inlined; every union is (v, parent[v]) and keeps the parent's top
    up = list(range(n))
    top = list(range(n))
    size = [1] * n
    answer = [NONE] * len(queries)
    for v in by_post:
        pv = post[v]
        for qi in at[v]:
            a, b = queries[qi]
            w = b if a == v else a
            if post[w] <= pv:
                r = w
                while up[r] != r:
                    r = up[r]
                while up[w] != r:
                    up[w], w = r, up[w]
                answer[qi] = top[r]
        p = parent[v]
        if p >= 0:
            rv, rp = v, p
            while up[rv] != rv:
                rv = up[rv]
            while up[rp] != rp:
                rp = up[rp]
            t = top[rp]
            if size[rv] < size[rp]:
                rv, rp = rp, rv
            up[rp] = rv
            size[rv] += size[rp]
            top[rv] = t
    return answer
