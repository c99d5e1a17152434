"""From an arbitrary multigraph down to independent 3-edge-connected instances and back.

connected components -> bridges -> 2-edge-connected pieces -> 3-edge-connected
classes and their cactus of 2-cuts -> one auxiliary 3-edge-connected graph per
class -> cut tree per auxiliary graph -> global 4-edge-connected labels.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .cuts import DEFAULT_SEED, DETERMINISTIC, enumerate_3cuts_report
from .cuttree import CutTree, build_cut_tree, four_ecc_from_tree
from .dfs import (DfsStructure, GraphPreconditionError, build_dfs, compute_lows,
                  relabel_preorder)
from .graph import (Labeling, Multigraph, connected_components, induced_parts,
                    is_connected_without, strip_self_loops)
from .hashing import assign_compressed_hashes


def two_ecc_split(g: Multigraph) -> tuple[list[int], Labeling]:
    """Bridges of a loop-free graph and its 2-edge-connected classes."""
    bridges = []
    for part in induced_parts(g, connected_components(g)):
        if part.graph.m == 0:
            continue
        dfs = build_dfs(part.graph, 0)
        lows = compute_lows(part.graph, dfs, 1)
        for v in dfs.order:
            if dfs.parent[v] >= 0 and not lows[v]:
                bridges.append(part.edge_ids[dfs.parent_edge[v]])
    bridges.sort()
    cut = set(bridges)
    kept = Multigraph(g.n, [uv for i, uv in enumerate(g.edges) if i not in cut])
    return bridges, connected_components(kept)


def find_small_cut(g: Multigraph, seed: int = DEFAULT_SEED,
                   paranoid: bool = False) -> tuple[int, ...] | None:
    """Edges of some cut with at most two edges in loop-free ``g``, else ``None``.

    ``()`` means ``g`` is disconnected. Checks run from cheap to less cheap:
    connectivity, degree below 3, zero tree-edge hash (a bridge), equal
    hashes (a 2-cut). A hash hit is a real cut unless 64-bit hashes collide;
    ``paranoid`` confirms each hit by search, which makes the answer exact.
    """
    if g.n <= 1:
        return None
    if connected_components(g).class_count > 1:
        return ()
    for v in range(g.n):
        if g.degree(v) < 3:
            return tuple(sorted(e for _, e in g.adj[v]))
    dfs = build_dfs(g, 0)
    ch = assign_compressed_hashes(g, dfs, seed).ch
    for v in dfs.order:
        e = dfs.parent_edge[v]
        if e >= 0 and ch[e] == 0 and not (paranoid and is_connected_without(g, (e,))):
            return (e,)
    groups: dict[int, list[int]] = defaultdict(list)
    for e, w in enumerate(ch):
        groups[w].append(e)
    for grp in groups.values():
        for i, a in enumerate(grp):
            for b in grp[i + 1:]:
                if not (paranoid and is_connected_without(g, (a, b))):
                    return (a, b)
    return None


def two_cut_classes(g: Multigraph, dfs: DfsStructure, seed: int = DEFAULT_SEED) -> list[list[int]]:
    """Groups of two or more edges with equal xor hash.

    In a 2-edge-connected graph two edges form a 2-cut iff their hashes are
    equal, so each group is one family of pairwise 2-cuts (up to 64-bit
    collisions). Groups are sorted by smallest edge id, members ascending.
    """
    ch = assign_compressed_hashes(g, dfs, seed).ch
    groups: dict[int, list[int]] = defaultdict(list)
    for e, w in enumerate(ch):
        groups[w].append(e)
    return sorted((grp for grp in groups.values() if len(grp) > 1), key=lambda grp: grp[0])


def three_ecc_components(g2: Multigraph, seed: int = DEFAULT_SEED, paranoid: bool = False) -> Labeling:
    """3-edge-connected classes of a connected, loop-free, 2-edge-connected graph.

    Endpoints of an edge outside every 2-cut are equivalent. Removing a
    family of mutually 2-cutting edges leaves its pieces in a cyclic order,
    and inside each piece the two family edges touch the same class; those
    endpoint pairs supply the remaining merges.
    """
    if g2.n <= 1:
        return Labeling((0,) * g2.n, g2.n)
    dfs = build_dfs(g2, 0)
    classes = two_cut_classes(g2, dfs, seed)
    in_family = [False] * g2.m
    merges: list[tuple[int, int]] = []
    tail, head, depth = dfs.tail, dfs.head, dfs.depth
    for family in classes:
        trees = sorted((e for e in family if dfs.is_tree[e]), key=lambda e: depth[head[e]])
        backs = [e for e in family if not dfs.is_tree[e]]
        if not trees:
            raise GraphPreconditionError(f"no bridge-free 2-cut structure for edges {family}")
        if len(backs) > 1 or any(not dfs.is_ancestor(head[a], tail[b])
                                 for a, b in zip(trees, trees[1:])):
            raise GraphPreconditionError(f"inconsistent 2-cut family {family} (hash collision?)")
        if paranoid:
            for a, b in zip(family, family[1:]):
                if is_connected_without(g2, (a, b)):
                    raise GraphPreconditionError(f"edges {a}, {b} do not form a 2-cut")
        for e in family:
            in_family[e] = True
        for a, b in zip(trees, trees[1:]):
            merges.append((head[a], tail[b]))
        if backs:
            merges.append((tail[trees[0]], head[backs[0]]))
            merges.append((head[trees[-1]], tail[backs[0]]))
        else:
            merges.append((tail[trees[0]], head[trees[-1]]))
    merges.extend(uv for e, uv in enumerate(g2.edges) if not in_family[e])
    return Labeling.from_labels(connected_components(Multigraph(g2.n, merges)).label)


@dataclass
class CactusOf2Cuts:
    """Quotient of a 2-edge-connected graph by its 3-edge-connected classes.

    Quotient edge ``q`` is graph edge ``edge_ids[q]`` joining nodes
    ``ends[q]``. ``cycles[c]`` lists the quotient edges of cycle ``c`` in
    cyclic order and ``cycle_nodes[c][i]`` is the node between edges
    ``i - 1`` and ``i``.
    """

    node_count: int
    edge_ids: list[int]
    ends: list[tuple[int, int]]
    cycle_of: list[int]
    cycles: list[list[int]] = field(default_factory=list)
    cycle_nodes: list[list[int]] = field(default_factory=list)


def build_cactus(g2: Multigraph, labels3: Labeling) -> CactusOf2Cuts:
    lab = labels3.label
    ids = [e for e, (u, v) in enumerate(g2.edges) if lab[u] != lab[v]]
    ends = [(lab[g2.edges[e][0]], lab[g2.edges[e][1]]) for e in ids]
    cactus = CactusOf2Cuts(labels3.class_count, ids, ends, [-1] * len(ids))
    if not ids:
        return cactus
    quotient = Multigraph(labels3.class_count, ends)
    dfs = build_dfs(quotient, 0)
    for b in range(quotient.m):
        if dfs.is_tree[b]:
            continue
        top, x = dfs.head[b], dfs.tail[b]
        path, nodes = [], []
        while x != top:
            q = dfs.parent_edge[x]
            if cactus.cycle_of[q] >= 0:
                raise GraphPreconditionError(f"quotient edge {q} lies on two cycles")
            nodes.append(x)
            path.append(q)
            x = dfs.parent[x]
        cid = len(cactus.cycles)
        path.reverse()
        nodes.reverse()
        for q in path + [b]:
            cactus.cycle_of[q] = cid
        cactus.cycles.append(path + [b])
        cactus.cycle_nodes.append([top] + nodes)
    if any(c < 0 for c in cactus.cycle_of):
        raise GraphPreconditionError("a quotient edge lies on no cycle; 3ecc labels are wrong")
    return cactus


@dataclass
class AuxGraph:
    """The 3-edge-connected stand-in for one class.

    ``edge_origin[i]`` is the parent-graph edge id, or ``-1`` for a special
    edge, whose ``(cycle, a, b)`` is in ``specials[i]``.
    """

    graph: Multigraph
    vertices: list[int]
    edge_origin: list[int]
    specials: dict[int, tuple[int, int, int]] = field(default_factory=dict)


def build_aux_graphs(g2: Multigraph, labels3: Labeling, cactus: CactusOf2Cuts) -> list[AuxGraph]:
    """One graph per class: its induced edges plus one special edge per incident cycle."""
    lab = labels3.label
    parts = induced_parts(g2, labels3)
    local = [0] * g2.n
    for part in parts:
        for i, v in enumerate(part.vertices):
            local[v] = i
    extra: list[list[tuple[int, int, int]]] = [[] for _ in parts]
    for cid, (cycle, nodes) in enumerate(zip(cactus.cycles, cactus.cycle_nodes)):
        for i, x in enumerate(nodes):
            a = _end_in(g2, cactus.edge_ids[cycle[i - 1]], lab, x)
            b = _end_in(g2, cactus.edge_ids[cycle[i]], lab, x)
            if a != b:  # a loop cannot affect any cut
                extra[x].append((cid, a, b))
    out = []
    for part, specials in zip(parts, extra):
        edges = list(part.graph.edges)
        origin = list(part.edge_ids)
        tags = {}
        for cid, a, b in specials:
            tags[len(edges)] = (cid, a, b)
            edges.append((local[a], local[b]))
            origin.append(-1)
        out.append(AuxGraph(Multigraph(part.graph.n, edges), part.vertices, origin, tags))
    return out


def _end_in(g: Multigraph, e: int, lab, node: int) -> int:
    u, v = g.edges[e]
    return u if lab[u] == node else v


@dataclass
class Solved3ecc:
    """``tree`` is built on a DFS from vertex 0; its ``psi`` uses the input's vertex ids."""

    cuts: list[tuple[int, int, int]]
    tree: CutTree | None
    labels: Labeling
    levels: list[tuple[int, int]] = field(default_factory=list)  # (n, m) per contraction level


def solve_3ecc(g: Multigraph, mode: str = DETERMINISTIC, seed: int = DEFAULT_SEED,
               paranoid: bool = False) -> Solved3ecc:
    """Cuts, cut tree and 4ecc labels of one loop-free 3-edge-connected graph."""
    if g.n <= 1:
        return Solved3ecc([], None, Labeling((0,) * g.n, g.n))
    h, rank = relabel_preorder(g, build_dfs(g, 0))
    dfs = build_dfs(h, 0)
    report = enumerate_3cuts_report(h, mode, seed, paranoid, dfs)
    tree = build_cut_tree(h, dfs, report.cuts)
    tree.psi = [tree.psi[r] for r in rank]
    return Solved3ecc(report.cuts, tree, four_ecc_from_tree(tree), report.levels)


def four_ecc(g: Multigraph, mode: str = DETERMINISTIC, seed: int = DEFAULT_SEED,
             paranoid: bool = False) -> Labeling:
    """4-edge-connected components of any multigraph."""
    h, _ = strip_self_loops(g)
    label = [-1] * h.n
    fresh = 0
    _, two = two_ecc_split(h)
    for block in induced_parts(h, two):
        g2 = block.graph
        labels3 = three_ecc_components(g2, seed, paranoid)
        cactus = build_cactus(g2, labels3)
        for aux in build_aux_graphs(g2, labels3, cactus):
            sub = solve_3ecc(aux.graph, mode, seed, paranoid).labels
            for i, v in enumerate(aux.vertices):
                label[block.vertices[v]] = fresh + sub.label[i]
            fresh += sub.class_count
    return Labeling.from_labels(label)


def three_ecc_labels(g: Multigraph, seed: int = DEFAULT_SEED) -> Labeling:
    """Global 3-edge-connected classes of any multigraph."""
    h, _ = strip_self_loops(g)
    label = [-1] * h.n
    fresh = 0
    _, two = two_ecc_split(h)
    for block in induced_parts(h, two):
        sub = three_ecc_components(block.graph, seed)
        for i, v in enumerate(block.vertices):
            label[v] = fresh + sub.label[i]
        fresh += sub.class_count
    return Labeling.from_labels(label)
