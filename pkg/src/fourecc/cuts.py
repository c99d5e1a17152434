"""All 3-edge cuts of a 3-edge-connected multigraph.

Cuts are classified against a DFS tree by how many tree edges they hold.
One and two tree edges are solved directly, either with xor hashes
(``randomized``) or with the extremal-back-edge tables (``deterministic``).
Cuts made of three tree edges survive contracting every back edge, so the
same procedure is repeated on the contracted graph, which has at most 2/3
of the edges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .dfs import (NONE, DfsStructure, GraphPreconditionError, LowTables, batch_lca,
                  build_dfs, compute_low_tables, relabel_preorder)
from .dsu import RootedTree, UnionTreeDsu
from .graph import Multigraph, is_connected_without
from .hashing import CompressedHashes, assign_compressed_hashes, derive_seed, offline_membership
from .pathtopk import top_k_min_paths

DETERMINISTIC = "deterministic"
RANDOMIZED = "randomized"
MODES = (DETERMINISTIC, RANDOMIZED)
DEFAULT_SEED = 0xC0FFEE

Cut3 = tuple[int, int, int]


def canonical(cut: Iterable[int]) -> Cut3:
    a, b, c = sorted(cut)
    return a, b, c


def verify_cut(g: Multigraph, cut: Iterable[int]) -> bool:
    """True iff deleting ``cut`` disconnects ``g``."""
    return not is_connected_without(g, cut)


# ---------------------------------------------------------------- one tree edge

def case_one_tree_edge(dfs: DfsStructure, tables: LowTables,
                       hashes: CompressedHashes | None = None) -> list[Cut3]:
    """Cuts whose only tree edge is ``e``: ``e`` with exactly two leaping edges.

    With ``hashes`` the third edge is looked up by ``ch(e) ^ ch(low1(e))``.
    """
    pe = dfs.parent_edge
    low1, low2, low3 = tables.low1, tables.low2, tables.low3
    out = []
    if hashes is None:
        for v in dfs.order:
            e = pe[v]
            if e >= 0 and low3[v] == NONE and low2[v] != NONE:
                out.append((e, low1[v], low2[v]))
        return out

    ch = hashes.ch
    heads = [v for v in dfs.order if pe[v] >= 0]
    hits = _lookup(ch, [ch[pe[v]] ^ ch[low1[v]] for v in heads])
    for v, g in zip(heads, hits):
        if g is not None and not dfs.is_tree[g] and g != low1[v]:
            out.append((pe[v], low1[v], g))
    return out


def _lookup(ch: list[int], queries: list[int]) -> list[int | None]:
    return offline_membership(queries, [(w, e) for e, w in enumerate(ch)])


# ------------------------------------------------------------- deepest down cut

@dataclass
class DeepestDnCuts:
    """Per tree edge (by head vertex), the head vertex of the deepest down cut.

    ``full`` considers all leaping edges, ``no_min`` ignores ``mindn1`` and
    ``no_max`` ignores ``maxdn1``.
    """

    full: list[int]
    no_min: list[int]
    no_max: list[int]


def deepest_dn_cuts(dfs: DfsStructure, tables: LowTables) -> DeepestDnCuts:
    """All three variants for every tree edge, via one batch of offline LCA queries."""
    n = dfs.n
    tail = dfs.tail
    mn1, mn2, mx1, mx2 = tables.mindn1, tables.mindn2, tables.maxdn1, tables.maxdn2
    queries = []
    slots = []
    for v in range(n):
        if dfs.parent[v] < 0:
            continue
        if mn1[v] == NONE or mx1[v] == NONE:
            raise GraphPreconditionError(
                f"tree edge {dfs.parent_edge[v]} is a bridge", (dfs.parent_edge[v],))
        for which, (a, b) in enumerate(((mn1[v], mx1[v]), (mn2[v], mx1[v]), (mn1[v], mx2[v]))):
            if a != NONE and b != NONE:
                slots.append((which, v))
                queries.append((tail[a], tail[b]))
    found = batch_lca(dfs.rooted_tree(), queries)
    out = DeepestDnCuts([NONE] * n, [NONE] * n, [NONE] * n)
    cols = (out.full, out.no_min, out.no_max)
    for (which, v), w in zip(slots, found):
        cols[which][v] = w
    return out


def deepest_dn_cut(dfs: DfsStructure, tables: LowTables, e: int, skip: str | None = None) -> int:
    """The deepest down cut of tree edge ``e`` as an edge id.

    ``skip`` is ``None``, ``"min"`` or ``"max"`` for the variant that ignores
    ``mindn1(e)`` or ``maxdn1(e)``.
    """
    if not dfs.is_tree[e]:
        raise ValueError(f"edge {e} is not a tree edge")
    v = dfs.head[e]
    lo = tables.mindn2[v] if skip == "min" else tables.mindn1[v]
    hi = tables.maxdn2[v] if skip == "max" else tables.maxdn1[v]
    if lo == NONE or hi == NONE:
        raise GraphPreconditionError(f"tree edge {e} has too few leaping edges", (e,))
    a, b = dfs.tail[lo], dfs.tail[hi]
    depth, parent = dfs.depth, dfs.parent
    while depth[a] > depth[b]:
        a = parent[a]
    while depth[b] > depth[a]:
        b = parent[b]
    while a != b:
        a, b = parent[a], parent[b]
    return dfs.parent_edge[a]


# ----------------------------------------------------- two tree edges, lower case

def case_two_lower(dfs: DfsStructure, tables: LowTables, hashes: CompressedHashes | None = None,
                   dn: DeepestDnCuts | None = None) -> list[Cut3]:
    """Cuts ``{e, f, g}`` with ``e`` above ``f`` and ``g`` leaving the subtree of ``f`` into
    the band between them. ``g`` is forced to be ``maxup1(f)``.
    """
    pe, head = dfs.parent_edge, dfs.head
    maxup1, maxup2 = tables.maxup1, tables.maxup2
    lower = [v for v in dfs.order if pe[v] >= 0]
    out = []
    if hashes is not None:
        ch = hashes.ch
        hits = _lookup(ch, [ch[pe[v]] ^ ch[maxup1[v]] for v in lower])
        for v, e in zip(lower, hits):
            if e is not None and dfs.is_tree[e] and e != pe[v]:
                out.append((e, pe[v], maxup1[v]))
        return out

    if dn is None:
        dn = deepest_dn_cuts(dfs, tables)
    n = dfs.n
    depth = dfs.depth
    # path from e's head down to its deepest down cut, lighter when deeper
    owners = [v for v in lower if dn.full[v] != v]
    paths = [(v, dn.full[v], n - depth[v]) for v in owners]
    cover = top_k_min_paths(dfs.rooted_tree(), paths, 1, n)
    pre, post = dfs.pre, dfs.post
    for x in lower:
        if not cover[x]:
            continue
        v = owners[cover[x][0]]
        second = maxup2[x]
        if second == NONE:
            continue
        h = head[second]
        # maxup2(f) must leap over e as well
        if not (pre[v] <= pre[h] and post[h] <= post[v]):
            out.append((pe[v], pe[x], maxup1[x]))
    return out


# ----------------------------------------------------- two tree edges, upper case

def build_jump_tree(dfs: DfsStructure, tables: LowTables) -> RootedTree:
    """Jump tree over tree edges (by head vertex); the DFS root stands for the virtual root.

    The parent of edge ``e`` is the tree edge whose head is the head of
    ``maxup1(e)``.
    """
    head = dfs.head
    parent = [NONE] * dfs.n
    for v in range(dfs.n):
        if dfs.parent[v] >= 0:
            up = tables.maxup1[v]
            if up == NONE:
                raise GraphPreconditionError(
                    f"tree edge {dfs.parent_edge[v]} is a bridge", (dfs.parent_edge[v],))
            parent[v] = head[up]
    return RootedTree.from_parents(parent, dfs.root)


def case_two_upper(dfs: DfsStructure, tables: LowTables, hashes: CompressedHashes | None = None,
                   dn: DeepestDnCuts | None = None) -> list[Cut3]:
    """Cuts ``{e, f, g}`` with ``e`` above ``f`` and ``g`` leaving the band between them
    over ``e``. ``g`` is ``mindn1(e)`` or ``maxdn1(e)``.
    """
    pe = dfs.parent_edge
    mn1, mx1 = tables.mindn1, tables.maxdn1
    upper = [v for v in dfs.order if pe[v] >= 0]
    out = []
    if hashes is not None:
        ch = hashes.ch
        asks = []
        for v in upper:
            asks.append((v, mn1[v]))
            if mx1[v] != mn1[v]:
                asks.append((v, mx1[v]))
        hits = _lookup(ch, [ch[pe[v]] ^ ch[g] for v, g in asks])
        for (v, g), f in zip(asks, hits):
            if f is not None and dfs.is_tree[f] and f != pe[v]:
                out.append((pe[v], f, g))
        return out

    if dn is None:
        dn = deepest_dn_cuts(dfs, tables)
    jump = build_jump_tree(dfs, tables)
    kids: list[list[int]] = [[] for _ in range(dfs.n)]
    for v in upper:
        kids[jump.parent[v]].append(v)
    by_depth: list[list[int]] = [[] for _ in range(dfs.n)]
    for v in upper:
        by_depth[dfs.depth[v]].append(v)
    forest = UnionTreeDsu(jump)
    for level in reversed(by_depth):
        for v in level:
            for c in kids[v]:
                forest.union(v, c)
            for g, f0 in ((mn1[v], dn.no_min[v]), (mx1[v], dn.no_max[v])):
                if f0 == NONE:
                    continue
                f = forest.lowest(f0)
                if f != v:
                    out.append((pe[v], pe[f], g))
    return out


# ------------------------------------------------------------------- recursion

@dataclass
class Discovery:
    level: int
    case: str
    cut: Cut3  # original edge ids
    tree_edges: int  # how many of the three are tree edges at ``level``


@dataclass
class EnumerationReport:
    cuts: list[Cut3]
    levels: list[tuple[int, int]] = field(default_factory=list)  # (n, m) per generation
    discoveries: list[Discovery] = field(default_factory=list)
    rejected: list[Cut3] = field(default_factory=list)  # failed --paranoid verification


def contract_back_edges(g: Multigraph, dfs: DfsStructure) -> tuple[Multigraph, list[int]]:
    """Identify the vertices of each component of ``g`` minus its tree edges.

    Returns the contracted graph and, per new edge, the id of the tree edge
    it came from. Tree edges that become loops are dropped; parallels stay.
    """
    # union-find over the back edges; classes numbered by smallest vertex
    up = list(range(g.n))
    size = [1] * g.n
    tail, head = dfs.tail, dfs.head
    for e, t in enumerate(dfs.is_tree):
        if t:
            continue
        x, y = tail[e], head[e]
        while up[x] != x:
            up[x] = x = up[up[x]]
        while up[y] != y:
            up[y] = y = up[up[y]]
        if x != y:
            if size[x] < size[y]:
                x, y = y, x
            up[y] = x
            size[x] += size[y]
    comp = [0] * g.n
    fresh: dict[int, int] = {}
    for v in range(g.n):
        r = v
        while up[r] != r:
            r = up[r]
        comp[v] = fresh.setdefault(r, len(fresh))
    edges, ids = [], []
    for v in dfs.order:
        e = dfs.parent_edge[v]
        if e >= 0:
            a, b = comp[dfs.tail[e]], comp[v]
            if a != b:
                edges.append((a, b))
                ids.append(e)
    return Multigraph(max(comp) + 1 if comp else 0, edges), ids


def enumerate_3cuts_report(g: Multigraph, mode: str = DETERMINISTIC, seed: int = DEFAULT_SEED,
                           paranoid: bool = False, dfs: DfsStructure | None = None) -> EnumerationReport:
    """Enumerate 3-edge cuts, keeping per-level bookkeeping.

    ``g`` must be loop-free and 3-edge-connected; bridges are reported as
    ``GraphPreconditionError``, other violations give unspecified output.
    ``dfs``, if given, is ``build_dfs(g, 0)`` and is reused at the top level.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    report = EnumerationReport([])
    found: set[Cut3] = set()
    cur, orig = g, list(range(g.m))
    level = 0
    while cur.n > 1 and cur.m > 0:
        report.levels.append((cur.n, cur.m))
        if level > 0 or dfs is None:
            dfs = build_dfs(cur, 0)
        if dfs.order != list(range(cur.n)):
            cur, _ = relabel_preorder(cur, dfs)
            dfs = build_dfs(cur, 0)
        tables = compute_low_tables(cur, dfs)
        if mode == RANDOMIZED:
            hashes = assign_compressed_hashes(cur, dfs, derive_seed(seed, level))
            dn = None
        else:
            hashes = None
            dn = deepest_dn_cuts(dfs, tables)
        for case, solver in (("one_tree_edge", case_one_tree_edge),
                             ("two_lower", case_two_lower),
                             ("two_upper", case_two_upper)):
            if solver is case_one_tree_edge:
                local = solver(dfs, tables, hashes)
            else:
                local = solver(dfs, tables, hashes, dn)
            for cut in local:
                if paranoid and not verify_cut(cur, cut):
                    report.rejected.append(canonical(orig[e] for e in cut))
                    continue
                key = canonical(orig[e] for e in cut)
                trees = sum(dfs.is_tree[e] for e in cut)
                report.discoveries.append(Discovery(level, case, key, trees))
                found.add(key)

        nxt, ids = contract_back_edges(cur, dfs)
        if nxt.m > math.ceil(2 * cur.m / 3):
            raise GraphPreconditionError(
                f"contraction kept {nxt.m} of {cur.m} edges; input is not 3-edge-connected")
        cur, orig = nxt, [orig[e] for e in ids]
        level += 1
    report.cuts = sorted(found)
    return report


def enumerate_3cuts(g: Multigraph, mode: str = DETERMINISTIC, seed: int = DEFAULT_SEED,
                    paranoid: bool = False) -> list[Cut3]:
    """Sorted, deduplicated list of all 3-edge cuts of a 3-edge-connected ``g``."""
    return enumerate_3cuts_report(g, mode, seed, paranoid).cuts
