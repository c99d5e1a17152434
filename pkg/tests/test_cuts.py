import math
import random

import pytest

from fourecc.cuts import (DETERMINISTIC, RANDOMIZED, build_jump_tree, case_one_tree_edge, case_two_lower,
                          case_two_upper, canonical, contract_back_edges, deepest_dn_cut, deepest_dn_cuts,
                          enumerate_3cuts, enumerate_3cuts_report, verify_cut)
from fourecc.dfs import NONE, GraphPreconditionError, build_dfs, compute_low_tables, leaps_over
from fourecc.graph import Multigraph, connected_components
from fourecc.hashing import assign_compressed_hashes
from fourecc.oracle import brute_3cuts

from helpers import complete, corpus_3ecc, k4, random_3ecc, triple_edge, two_k4_join

# brute_3cuts on the named instances, frozen
K4_CUTS = [(0, 1, 2), (0, 3, 4), (1, 3, 5), (2, 4, 5)]
TRIPLE_EDGE_CUTS = [(0, 1, 2)]
TWO_K4_JOIN_CUTS = [(0, 1, 2), (6, 7, 8), (11, 13, 14)]
# path 0-1-2 plus back edges 1->0, 2->0, 2->0
FAN3 = Multigraph(3, [(0, 1), (1, 2), (1, 0), (2, 0), (2, 0)])
FAN3_CUTS = [(0, 1, 2), (1, 3, 4)]
# its cut (0, 1, 2) has three tree edges under the DFS from 0
DEEP4 = Multigraph(4, [(2, 3), (3, 0), (2, 1), (0, 2), (3, 1), (3, 1), (0, 2)])
DEEP4_CUTS = [(0, 1, 2), (1, 3, 6), (2, 4, 5)]


def setup(g):
    d = build_dfs(g, 0)
    return d, compute_low_tables(g, d)


def tree_count(d, cut):
    return sum(d.is_tree[e] for e in cut)


def classify(d, cut):
    """Which enumeration case a cut falls under for the DFS ``d``."""
    trees = sorted((e for e in cut if d.is_tree[e]), key=lambda e: d.depth[d.head[e]])
    if len(trees) == 1:
        return "one"
    if len(trees) == 3:
        return "three"
    (g,) = [x for x in cut if not d.is_tree[x]]
    upper, lower = trees
    return "upper" if leaps_over(d, g, upper) else "lower"


def test_named_instances_match_brute_force():
    for g, want in ((k4(), K4_CUTS), (triple_edge(), TRIPLE_EDGE_CUTS), (complete(5), []),
                    (two_k4_join(), TWO_K4_JOIN_CUTS), (FAN3, FAN3_CUTS), (DEEP4, DEEP4_CUTS)):
        assert brute_3cuts(g) == want
        for mode in (DETERMINISTIC, RANDOMIZED):
            assert enumerate_3cuts(g, mode) == want


def test_one_tree_edge_case():
    g = triple_edge()
    assert [canonical(c) for c in case_one_tree_edge(*setup(g))] == [(0, 1, 2)]
    d, t = setup(k4())
    # deepest tree edge (2,3) with leaping edges 3->0, 3->1
    assert (2, 4, 5) in [canonical(c) for c in case_one_tree_edge(d, t)]
    assert case_one_tree_edge(*setup(complete(5))) == []


def test_lower_case_on_k4():
    d, t = setup(k4())
    assert [canonical(c) for c in case_two_lower(d, t)] == [(0, 3, 4)]
    assert classify(d, (0, 3, 4)) == "lower"


def test_upper_case_on_k4():
    d, t = setup(k4())
    assert [canonical(c) for c in case_two_upper(d, t)] == [(1, 3, 5)]
    assert classify(d, (1, 3, 5)) == "upper"


def test_fan_cut_is_upper_case():
    # the back edge 1->0 leaps over the upper tree edge (0,1) but not (1,2)
    d, t = setup(FAN3)
    assert classify(d, (0, 1, 2)) == "upper"
    assert [canonical(c) for c in case_two_upper(d, t)] == [(0, 1, 2)]
    assert case_two_lower(d, t) == []


def test_two_edge_cases_silent_without_candidates():
    for g in (triple_edge(), complete(5)):
        d, t = setup(g)
        assert case_two_lower(d, t) == [] and case_two_upper(d, t) == []


def naive_deepest_dn_cut(d, v, skip=NONE):
    """Deepest head w in the subtree of v whose subtree holds every leaping tail."""
    tails = [d.tail[b] for b in d.back_edges()
             if b != skip and d.is_ancestor(v, d.tail[b]) and not d.is_ancestor(v, d.head[b])]
    best = v
    for w in range(len(d.parent)):
        if d.is_ancestor(v, w) and all(d.is_ancestor(w, x) for x in tails) and d.depth[w] > d.depth[best]:
            best = w
    return best


def test_deepest_dn_cut_examples():
    d, t = setup(triple_edge())
    assert deepest_dn_cuts(d, t).full[1] == 1
    d, t = setup(k4())
    # edge (0,1): the leaping tails are 2 and 3, whose lowest common ancestor is 2
    assert deepest_dn_cuts(d, t).full[1] == 2
    assert naive_deepest_dn_cut(d, 1) == 2
    # path 0-1-2-3-4-5; only 5->0 and 4->0 leap over (0,1), both from the subtree of 4
    chain = Multigraph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (4, 0), (3, 1), (2, 1), (5, 3)])
    d, t = setup(chain)
    assert deepest_dn_cuts(d, t).full[1] == naive_deepest_dn_cut(d, 1) == 4


def test_deepest_dn_cuts_against_definition():
    rng = random.Random(21)
    for _ in range(300):
        g = random_3ecc(rng, 8)
        d, t = setup(g)
        dn = deepest_dn_cuts(d, t)
        for v in range(1, g.n):
            if d.parent[v] < 0:
                continue
            e = d.parent_edge[v]
            assert dn.full[v] == naive_deepest_dn_cut(d, v) == d.head[deepest_dn_cut(d, t, e)]
            assert dn.no_min[v] == naive_deepest_dn_cut(d, v, t.mindn1[v])
            assert dn.no_max[v] == naive_deepest_dn_cut(d, v, t.maxdn1[v])


def test_jump_tree_triple_edge():
    d, t = setup(triple_edge())
    jump = build_jump_tree(d, t)
    assert jump.parent[1] == d.root


def test_jump_tree_structure():
    rng = random.Random(22)
    for _ in range(1000):
        g = random_3ecc(rng, 8)
        d, t = setup(g)
        jump = build_jump_tree(d, t)
        assert sum(1 for v in range(g.n) if jump.parent[v] >= 0) == g.n - 1
        for v in range(g.n):
            if d.parent[v] >= 0:
                assert jump.parent[v] == d.head[t.maxup1[v]]
                assert d.depth[jump.parent[v]] < d.depth[v]


def test_contraction_to_single_vertex():
    g = k4()
    h, ids = contract_back_edges(g, build_dfs(g, 0))
    assert (h.n, h.m, ids) == (1, 0, [])
    assert enumerate_3cuts_report(g).levels == [(4, 6)]


def test_contraction_matches_back_edge_components():
    rng = random.Random(26)
    for _ in range(300):
        g = random_3ecc(rng, 9)
        d = build_dfs(g, 0)
        comp = connected_components(Multigraph(g.n, [g.edges[e] for e in d.back_edges()])).label
        want = [(comp[d.tail[e]], comp[d.head[e]]) for e in d.tree_edges() if comp[d.tail[e]] != comp[d.head[e]]]
        h, ids = contract_back_edges(g, d)
        assert h.n == max(comp) + 1
        assert list(h.edges) == want
        assert all(d.is_tree[e] for e in ids)


def test_three_tree_edge_cut_found_after_contraction():
    d, _ = setup(DEEP4)
    assert classify(d, (0, 1, 2)) == "three"
    report = enumerate_3cuts_report(DEEP4)
    assert report.cuts == DEEP4_CUTS
    assert {x.cut: x.level for x in report.discoveries}[(0, 1, 2)] == 1


def test_two_k4_join_reports_joining_triple():
    assert (6, 7, 8) in enumerate_3cuts(two_k4_join())


def test_verify_cut_examples():
    g = k4()
    assert verify_cut(g, (0, 1, 2))
    assert not verify_cut(g, (0, 1, 3))  # (0,1), (0,2), (1,2): vertex 3 keeps it connected
    k5 = complete(5)
    assert not any(verify_cut(k5, (a, b, c)) for a in range(10) for b in range(a) for c in range(b))


def test_bridge_raises():
    two_triangles = Multigraph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
    with pytest.raises(GraphPreconditionError):
        enumerate_3cuts(two_triangles)


def test_unknown_mode():
    with pytest.raises(ValueError):
        enumerate_3cuts(k4(), "fast")


def test_cases_partition_the_cut_set():
    """Deterministic mode: each level-0 case emits exactly the cuts of its shape."""
    rng = random.Random(23)
    for _ in range(400):
        g = random_3ecc(rng, 8)
        d, t = setup(g)
        expected = {"one": set(), "lower": set(), "upper": set(), "three": set()}
        for cut in brute_3cuts(g):
            expected[classify(d, cut)].add(cut)
        assert {canonical(c) for c in case_one_tree_edge(d, t)} == expected["one"]
        assert {canonical(c) for c in case_two_lower(d, t)} == expected["lower"]
        assert {canonical(c) for c in case_two_upper(d, t)} == expected["upper"]


def test_hashed_cases_are_sound_and_cover():
    """Randomized mode: a hash lookup may land on a cut of the other two-edge
    shape, so only soundness and joint coverage are exact."""
    rng = random.Random(25)
    for _ in range(400):
        g = random_3ecc(rng, 8)
        d, t = setup(g)
        cuts = brute_3cuts(g)
        h = assign_compressed_hashes(g, d, rng.getrandbits(64))
        found = set()
        for case in (case_one_tree_edge, case_two_lower, case_two_upper):
            emitted = {canonical(c) for c in case(d, t, h)}
            assert emitted <= set(cuts)
            found |= emitted
        assert found == {c for c in cuts if classify(d, c) != "three"}


def test_enumeration_report_bookkeeping():
    for g in corpus_3ecc(150, 24):
        report = enumerate_3cuts_report(g, paranoid=True)
        assert report.rejected == []
        assert report.cuts == brute_3cuts(g)
        assert len(report.cuts) <= g.n - 1
        for (_, m0), (_, m1) in zip(report.levels, report.levels[1:]):
            assert m1 <= math.ceil(2 * m0 / 3)
        assert {x.cut for x in report.discoveries} == set(report.cuts)
