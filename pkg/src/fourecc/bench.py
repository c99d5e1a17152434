"""Timing of the 3-cut pipeline (enumeration plus cut tree) on generated families."""

from __future__ import annotations

import gc
import multiprocessing as mp
import re
import time
from dataclasses import asdict, dataclass

from .cuts import DEFAULT_SEED, DETERMINISTIC
from .generators import sized
from .reduction import solve_3ecc


@dataclass
class BenchRow:
    family: str
    n: int
    m: int
    seconds: float  # best of all rounds
    cuts: int
    levels: list[tuple[int, int]]

    def to_dict(self) -> dict:
        return asdict(self)


def parse_sizes(text: str) -> list[int]:
    """``"2^14..2^17"`` -> powers of two in range; ``"1000,2^12"`` -> explicit list."""
    out: list[int] = []
    for token in text.replace(" ", "").split(","):
        if not token:
            continue
        if ".." in token:
            lo, hi = (_size(x) for x in token.split("..", 1))
            k = max(0, lo.bit_length() - 1)
            while 2 ** k <= hi:
                if 2 ** k >= lo:
                    out.append(2 ** k)
                k += 1
        else:
            out.append(_size(token))
    if not out:
        raise ValueError(f"no sizes in {text!r}")
    return out


def _size(token: str) -> int:
    hit = re.fullmatch(r"2\^(\d+)", token)
    value = 2 ** int(hit.group(1)) if hit else int(token)
    if value < 1:
        raise ValueError(f"size must be positive: {token!r}")
    return value


def time_once(family: str, m: int, seed: int = 0, mode: str = DETERMINISTIC,
              hash_seed: int = DEFAULT_SEED) -> BenchRow:
    """Generate ``sized(family, m)`` and time one ``solve_3ecc`` call on it."""
    g = sized(family, m, seed)
    gc.collect()
    gc.disable()
    try:
        start = time.perf_counter()
        solved = solve_3ecc(g, mode, hash_seed)
        seconds = time.perf_counter() - start
    finally:
        gc.enable()
    return BenchRow(family, g.n, g.m, seconds, len(solved.cuts), solved.levels)


def run_bench(family: str, sizes: list[int], rounds: int = 3, seed: int = 0,
              mode: str = DETERMINISTIC, hash_seed: int = DEFAULT_SEED,
              isolate: bool = True) -> list[BenchRow]:
    """Time ``solve_3ecc`` on ``sized(family, m)`` for each edge budget ``m``.

    Sizes are interleaved within each round so a slow spell on a shared
    machine hits every size alike; the minimum per size is reported. With
    ``isolate`` each measurement runs in a fresh process, so heap left over
    from earlier sizes does not slow the later ones.
    """
    best: list[BenchRow | None] = [None] * len(sizes)
    pool = mp.get_context("spawn").Pool(1, maxtasksperchild=1) if isolate else None
    try:
        for _ in range(max(1, rounds)):
            for i, m in enumerate(sizes):
                args = (family, m, seed, mode, hash_seed)
                row = pool.apply(time_once, args) if pool else time_once(*args)
                if best[i] is None or row.seconds < best[i].seconds:
                    best[i] = row
    finally:
        if pool:
            pool.close()
            pool.join()
    return best


def format_table(rows: list[BenchRow]) -> str:
    lines = [f"{'family':<14}{'n':>10}{'m':>10}{'seconds':>10}{'cuts':>10}{'levels':>8}"]
    for r in rows:
        lines.append(f"{r.family:<14}{r.n:>10}{r.m:>10}{r.seconds:>10.3f}{r.cuts:>10}{len(r.levels):>8}")
    return "\n".join(lines) + "\n"
