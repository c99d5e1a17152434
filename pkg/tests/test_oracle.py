from fourecc.graph import Multigraph
from fourecc.oracle import (brute_3cuts, brute_partition, brute_small_cuts, compare, edge_connectivity_pair,
                            is_k_edge_connected, uncompressed_hash)
from fourecc.dfs import build_dfs

from helpers import complete, cycle, k4, path, triple_edge


def test_pair_connectivity():
    g = triple_edge()
    assert edge_connectivity_pair(g, 0, 1, 3)
    assert not edge_connectivity_pair(g, 0, 1, 4)
    k5 = complete(5)
    assert all(edge_connectivity_pair(k5, u, v, 4) for u in range(5) for v in range(u + 1, 5))
    assert not edge_connectivity_pair(path(3), 0, 2, 2)


def test_global_connectivity():
    assert is_k_edge_connected(k4(), 3) and not is_k_edge_connected(k4(), 4)
    assert not is_k_edge_connected(Multigraph(2, []), 1)


def test_cut_scans():
    assert len(brute_3cuts(k4())) == 4
    assert brute_3cuts(complete(5)) == []
    assert brute_3cuts(triple_edge()) == [(0, 1, 2)]
    assert len(brute_small_cuts(cycle(4), 2)) == 6


def test_partitions():
    assert brute_partition(k4(), 4).class_count == 4
    assert brute_partition(complete(5), 4).class_count == 1
    assert brute_partition(cycle(4), 3).class_count == 4


def test_uncompressed_hash():
    g = k4()
    d = build_dfs(g, 0)
    assert uncompressed_hash(g, d, 1) == {1}
    assert uncompressed_hash(g, d, 5) == {2, 4}
    t = triple_edge()
    assert uncompressed_hash(t, build_dfs(t, 0), 0) == {1, 2}


def test_compare_reports():
    ok = compare("x", [[0, 1], [2]], [[0, 1], [2]])
    assert ok.ok and ok.expected_digest == ok.actual_digest
    bad = compare("x", [[0, 1], [2]], [[0], [1], [2]])
    assert not bad.ok
    assert "missing [0, 1]" in bad.mismatches and "unexpected [0]" in bad.mismatches
    assert bad.to_dict()["ok"] is False
