"""64-bit xor hashes of edges and an offline, radix-sorted equality join."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .dfs import DfsStructure
from .graph import Multigraph

BITS = 64
_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(seed: int, count: int) -> np.ndarray:
    """``count`` consecutive outputs of the splitmix64 generator seeded with ``seed``."""
    state = np.arange(1, count + 1, dtype=np.uint64) * np.uint64(_GAMMA)
    state += np.uint64(seed & _MASK)
    z = state
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def derive_seed(seed: int, salt: int) -> int:
    """A fresh 64-bit seed for an independent stream (e.g. a recursion level)."""
    return int(splitmix64((seed ^ (salt * _GAMMA)) & _MASK, 1)[0])


@dataclass
class CompressedHashes:
    ch: list[int]
    seed: int
    bits: int = BITS


def assign_compressed_hashes(g: Multigraph, dfs: DfsStructure, seed: int) -> CompressedHashes:
    """Random words on back edges; each tree edge gets the xor over its leaping set.

    The tree-edge value is accumulated bottom-up: xor-ing a back edge's word
    into both endpoints cancels it exactly where it does not leap.
    """
    draws = splitmix64(seed, g.m).tolist()
    n = g.n
    acc = [0] * n
    ch = [0] * g.m
    is_tree, tail, head = dfs.is_tree, dfs.tail, dfs.head
    for e in range(g.m):
        if not is_tree[e]:
            w = draws[e]
            ch[e] = w
            acc[tail[e]] ^= w
            acc[head[e]] ^= w
    parent, parent_edge = dfs.parent, dfs.parent_edge
    for v in reversed(dfs.order):
        p = parent[v]
        if p >= 0:
            ch[parent_edge[v]] = acc[v]
            acc[p] ^= acc[v]
    return CompressedHashes(ch, seed)


def radix_argsort(words: np.ndarray) -> np.ndarray:
    """Stable LSD radix sort of unsigned 64-bit words, 8 passes of 8-bit digits.

    Each pass is a stable counting sort on one byte (numpy's stable sort on
    ``uint8`` keys is a counting/radix sort).
    """
    words = np.asarray(words, dtype=np.uint64)
    perm = np.arange(len(words), dtype=np.int64)
    for shift in range(0, BITS, 8):
        digit = ((words[perm] >> np.uint64(shift)) & np.uint64(0xFF)).astype(np.uint8)
        perm = perm[np.argsort(digit, kind="stable")]
    return perm


def offline_membership(queries: Sequence[int], keys: Sequence[tuple[int, int]]) -> list[int | None]:
    """For each query word, the smallest edge id whose key equals it, else ``None``.

    Queries and keys are sorted together by word and answered in one sweep.
    """
    nq, nk = len(queries), len(keys)
    if nq == 0:
        return []
    key_words = np.fromiter((k for k, _ in keys), dtype=np.uint64, count=nk)
    key_ids = np.fromiter((e for _, e in keys), dtype=np.int64, count=nk)
    by_id = np.argsort(key_ids, kind="stable")
    # keys (in id order) precede queries, so after a stable sort the first
    # record of every equal-word run is its smallest-id key, if any
    words = np.concatenate([key_words[by_id], np.fromiter(queries, dtype=np.uint64, count=nq)])
    ids = np.concatenate([key_ids[by_id], np.full(nq, -1, dtype=np.int64)])
    perm = radix_argsort(words)
    w = words[perm]
    pos = np.arange(len(w))
    new_run = np.ones(len(w), dtype=bool)
    new_run[1:] = w[1:] != w[:-1]
    run_start = np.maximum.accumulate(np.where(new_run, pos, 0))
    first_id = ids[perm][run_start]

    out: list[int | None] = [None] * nq
    is_query = perm >= nk
    for q, hit in zip((perm[is_query] - nk).tolist(), first_id[is_query].tolist()):
        if hit >= 0:
            out[q] = hit
    return out
