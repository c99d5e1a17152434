"""Disjoint-set union restricted to the edges of a fixed rooted tree.

Every set is a connected subtree, so it has a unique shallowest member;
``lowest`` reports it in O(1) on top of the usual find.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class RootedTree:
    """Rooted tree on ``0..n-1`` given by a parent array (``parent[root] == -1``).

    ``pre``/``post`` come from one shared clock, so ``x`` is an ancestor of
    ``y`` (or equal) iff ``pre[x] <= pre[y]`` and ``post[y] <= post[x]``.
    """

    parent: list[int]
    root: int
    pre: list[int]
    post: list[int]
    depth: list[int]

    @classmethod
    def from_parents(cls, parent: list[int], root: int | None = None) -> "RootedTree":
        n = len(parent)
        roots = [v for v in range(n) if parent[v] < 0]
        if len(roots) != 1:
            raise ValueError(f"expected exactly one root, found {len(roots)}")
        if root is not None and roots[0] != root:
            raise ValueError(f"vertex {root} is not the root")
        root = roots[0]
        children: list[list[int]] = [[] for _ in range(n)]
        for v in range(n):
            if parent[v] >= 0:
                children[parent[v]].append(v)
        pre = [0] * n
        post = [0] * n
        depth = [0] * n
        clock = 1
        pre[root] = clock
        stack = [(root, iter(children[root]))]
        seen = 1
        while stack:
            v, it = stack[-1]
            c = next(it, None)
            if c is None:
                stack.pop()
                clock += 1
                post[v] = clock
            else:
                clock += 1
                pre[c] = clock
                depth[c] = depth[v] + 1
                seen += 1
                stack.append((c, iter(children[c])))
        if seen != n:
            raise ValueError("parent array contains a cycle")
        return cls(list(parent), root, pre, post, depth)

    @property
    def n(self) -> int:
        return len(self.parent)

    def is_ancestor(self, x: int, y: int) -> bool:
        return self.pre[x] <= self.pre[y] and self.post[y] <= self.post[x]


class UnionTreeDsu:
    """Union by size with path compression over a fixed union tree.

    ``union(x, y)`` is only legal for a union-tree edge ``xy``.
    """

    def __init__(self, tree: RootedTree):
        n = tree.n
        self.tree = tree
        self._up = list(range(n))
        self._size = [1] * n
        self._top = list(range(n))  # valid at set representatives only

    def find(self, x: int) -> int:
        up = self._up
        root = x
        while up[root] != root:
            root = up[root]
        while up[x] != root:
            up[x], x = root, up[x]
        return root

    def lowest(self, x: int) -> int:
        up = self._up
        root = x
        while up[root] != root:
            root = up[root]
        while up[x] != root:
            up[x], x = root, up[x]
        return self._top[root]

    def union(self, x: int, y: int) -> None:
        par = self.tree.parent
        if par[x] == y:
            upper = y
        elif par[y] == x:
            upper = x
        else:
            raise ValueError(f"({x}, {y}) is not an edge of the union tree")
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        # the merged subtree's top is the top of the set holding the parent end
        top = self._top[rx if upper == x else ry]
        size = self._size
        if size[rx] < size[ry]:
            rx, ry = ry, rx
        self._up[ry] = rx
        size[rx] += size[ry]
        self._top[rx] = top
