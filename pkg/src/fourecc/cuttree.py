"""The tree of all 3-edge cuts of a 3-edge-connected graph, and its 4ecc fibers.

Each cut is one edge of the tree; every graph vertex sits on a tree node,
and the vertices sharing a node form one 4-edge-connected component.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .dfs import DfsStructure
from .graph import Labeling, Multigraph


class CutTreeError(RuntimeError):
    """The cut list handed to the builder is not the complete set of 3-edge cuts."""


def part_sizes(dfs: DfsStructure, cuts: Sequence[Sequence[int]]) -> list[int]:
    """Size of the side of each cut that avoids the DFS root.

    A vertex is cut off from the root iff an odd number of the cut's tree
    edges lie above it, which turns the count into a signed sum of at most
    three subtree sizes.
    """
    is_tree, head, size = dfs.is_tree, dfs.head, dfs.size
    pre, post = dfs.pre, dfs.post
    out = []
    for cut in cuts:
        heads = [head[e] for e in cut if is_tree[e]]
        if not heads:
            raise ValueError(f"cut {tuple(cut)} has no tree edge")
        total = 0
        for v in heads:
            above = sum(1 for a in heads if pre[a] <= pre[v] and post[v] <= post[a])
            total += size[v] if above % 2 else -size[v]
        out.append(total)
    return out


@dataclass
class CutTree:
    """Rooted tree with node 0 as root.

    ``node_cut[x]`` is the cut labelling the edge from ``x`` to its parent
    (``-1`` at the root); ``phi[c]`` is the child node of cut ``c``'s edge;
    ``psi[v]`` is the node holding graph vertex ``v``.
    """

    node_parent: list[int]
    node_cut: list[int]
    phi: list[int]
    psi: list[int]
    cuts: list[tuple[int, ...]]
    sizes: list[int]
    visits: list[int] = field(default_factory=list)  # edge traversals per cut while building

    @property
    def node_count(self) -> int:
        return len(self.node_parent)

    def fibers(self) -> list[list[int]]:
        groups: list[list[int]] = [[] for _ in range(self.node_count)]
        for v, x in enumerate(self.psi):
            groups[x].append(v)
        return groups

    def below(self, node: int) -> list[int]:
        """Nodes of the subtree rooted at ``node``."""
        kids: list[list[int]] = [[] for _ in range(self.node_count)]
        for x, p in enumerate(self.node_parent):
            if p >= 0:
                kids[p].append(x)
        out, stack = [], [node]
        while stack:
            x = stack.pop()
            out.append(x)
            stack.extend(kids[x])
        return out

    def to_dict(self, edge_names: Sequence[int] | None = None) -> dict:
        def name(e):
            return edge_names[e] if edge_names is not None else e

        fibers = self.fibers()
        return {
            "root": 0,
            "nodes": [{"id": x, "vertices": fibers[x]} for x in range(self.node_count)],
            "edges": [{"parent": self.node_parent[x], "child": x,
                       "cut": sorted(name(e) for e in self.cuts[c]), "size": self.sizes[c]}
                      for x, c in enumerate(self.node_cut) if c >= 0],
        }

    def to_json(self, edge_names: Sequence[int] | None = None) -> str:
        return json.dumps(self.to_dict(edge_names))

    def to_dot(self, edge_names: Sequence[int] | None = None) -> str:
        doc = self.to_dict(edge_names)
        lines = ["graph cut_tree {"]
        for node in doc["nodes"]:
            label = ",".join(map(str, node["vertices"])) or "-"
            lines.append(f'  n{node["id"]} [label="{label}"];')
        for edge in doc["edges"]:
            cut = ",".join(map(str, edge["cut"]))
            lines.append(f'  n{edge["parent"]} -- n{edge["child"]} [label="{cut} |{edge["size"]}|"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_cut_tree(g: Multigraph, dfs: DfsStructure, cuts: Sequence[Sequence[int]],
                   sizes: Sequence[int] | None = None) -> CutTree:
    """Grow the tree one DFS tree edge at a time.

    For tree edge ``(u, v)``, the cuts containing it form the tree path from
    ``psi(u)`` to ``psi(v)``: climb while the edge above the current node is
    such a cut, then descend through the remaining ones in decreasing
    part-size order, creating edges as needed.
    """
    cuts = [tuple(c) for c in cuts]
    if sizes is None:
        sizes = part_sizes(dfs, cuts)
    n = g.n
    is_tree, head = dfs.is_tree, dfs.head

    # per tree edge (by head), its cuts sorted by decreasing size; counting sort
    buckets: list[list[int]] = [[] for _ in range(n + 1)]
    for c, s in enumerate(sizes):
        buckets[s].append(c)
    through: list[list[int]] = [[] for _ in range(n)]
    for bucket in reversed(buckets):
        for c in bucket:
            for e in cuts[c]:
                if is_tree[e]:
                    through[head[e]].append(c)

    node_parent, node_cut = [-1], [-1]
    phi = [-1] * len(cuts)
    touched = [-1] * len(cuts)
    visits = [0] * len(cuts)
    psi = [-1] * n
    psi[dfs.root] = 0
    for v in dfs.order:
        e = dfs.parent_edge[v]
        if e < 0:
            continue
        x = psi[dfs.parent[v]]
        while node_cut[x] >= 0 and e in cuts[node_cut[x]]:
            c = node_cut[x]
            touched[c] = e
            visits[c] += 1
            x = node_parent[x]
        for c in through[v]:
            if touched[c] == e:
                continue
            if phi[c] < 0:
                phi[c] = len(node_parent)
                node_parent.append(x)
                node_cut.append(c)
            elif node_parent[phi[c]] != x:
                raise CutTreeError(
                    f"cut {cuts[c]} hangs below node {node_parent[phi[c]]}, expected {x}")
            visits[c] += 1
            x = phi[c]
        psi[v] = x
    if any(p < 0 for p in phi):
        missing = [cuts[c] for c, p in enumerate(phi) if p < 0]
        raise CutTreeError(f"cuts never placed: {missing[:5]}")
    return CutTree(node_parent, node_cut, phi, psi, cuts, list(sizes), visits)


def four_ecc_from_tree(tree: CutTree) -> Labeling:
    """Non-empty fibers of ``psi``, numbered by smallest vertex."""
    return Labeling.from_labels(tree.psi)
