import random

import pytest

from fourecc.dsu import RootedTree
from fourecc.pathtopk import bucket_order, top_k_min_paths


def naive_top_k(tree: RootedTree, paths, k):
    """Per tree edge (by child vertex): the k lightest covering paths, ties by index."""
    out = []
    for v in range(tree.n):
        if tree.parent[v] < 0:
            out.append([])
            continue
        covering = [i for i, (a, b, _) in enumerate(paths)
                    if tree.is_ancestor(v, a) != tree.is_ancestor(v, b)]
        covering.sort(key=lambda i: (paths[i][2], i))
        out.append(covering[:k])
    return out


def test_single_path_covers_both_edges():
    tree = RootedTree.from_parents([-1, 0, 1])  # a=0, b=1, c=2
    assert top_k_min_paths(tree, [(0, 2, 5)], 1, 10) == [[], [0], [0]]


def test_lighter_path_wins():
    tree = RootedTree.from_parents([-1, 0, 1])
    # P0 = (a, c, 3), P1 = (a, b, 1)
    assert top_k_min_paths(tree, [(0, 2, 3), (0, 1, 1)], 1, 10) == [[], [1], [0]]


def test_star_k2():
    # center s=0, leaves x=1, y=2, z=3; paths (x,y,2), (x,z,1), (y,z,3)
    tree = RootedTree.from_parents([-1, 0, 0, 0])
    paths = [(1, 2, 2), (1, 3, 1), (2, 3, 3)]
    cover = top_k_min_paths(tree, paths, 2, 3)
    assert cover[1] == [1, 0]  # sx: (x,z), (x,y)
    assert cover[2] == [0, 2]  # sy: (x,y), (y,z)
    assert cover[3] == [1, 2]  # sz: (x,z), (y,z)
    assert cover == naive_top_k(tree, paths, 2)


def test_argument_checks():
    tree = RootedTree.from_parents([-1, 0])
    with pytest.raises(ValueError):
        top_k_min_paths(tree, [(0, 1, 1)], 0, 5)
    with pytest.raises(ValueError):
        top_k_min_paths(tree, [(0, 1, 9)], 1, 5)


def test_bucket_order_is_stable():
    assert bucket_order([2, 0, 2, 1, 0], 2) == [1, 4, 3, 0, 2]


def random_instance(rng: random.Random):
    n = rng.randint(1, 25)
    tree = RootedTree.from_parents([-1] + [rng.randrange(i) for i in range(1, n)])
    max_w = rng.randint(0, 12)
    paths = [(rng.randrange(n), rng.randrange(n), rng.randint(0, max_w))
             for _ in range(rng.randint(0, 30))]
    return tree, paths, rng.randint(1, 4), max_w


def test_against_naive_enumeration():
    rng = random.Random(8)
    for _ in range(400):
        tree, paths, k, max_w = random_instance(rng)
        assert top_k_min_paths(tree, paths, k, max_w) == naive_top_k(tree, paths, k)


def test_step_count_is_bounded():
    rng = random.Random(9)
    for _ in range(100):
        tree, paths, k, max_w = random_instance(rng)
        stats = {}
        top_k_min_paths(tree, paths, k, max_w, stats)
        assert stats["steps"] <= k * tree.n
