"""Exact minimum ratio cut by exhaustive enumeration, for small graphs.

Ground truth for everything else: certificates are checked against the true
minimizer and rounding heuristics are compared with the exact optimum. The
search space is every partition of the vertices into exactly k nonempty
unlabeled blocks, walked once via restricted-growth strings, so the count
is the Stirling number of the second kind and no relabeled duplicates are
ever scored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import InputError, SizeError
from .graphs import Partition, WeightedGraph, ratio_cut
from .tolerances import DEFAULT as TOL

MAX_ENUM_N = 14


def enumerate_partitions(n: int, k: int) -> Iterator[Partition]:
    """Yield each partition of n items into exactly k nonempty blocks once.

    Encoded as restricted-growth strings in lexicographic order: position 0
    is always block 0, and a position may open at most one new block beyond
    those already seen. Capped at n <= 14; the count grows as the Stirling
    number S(n, k).
    """
    if n > MAX_ENUM_N:
        raise SizeError(f"enumeration is capped at n <= {MAX_ENUM_N}, got {n}")
    if not 1 <= k <= n:
        raise InputError(f"k must be in [1, {n}], got {k}")

    labels = np.zeros(n, dtype=int)

    def grow(pos: int, used: int) -> Iterator[Partition]:
        if pos == n:
            yield Partition(labels.copy(), k)
            return
        # blocks still to open must fit in the remaining positions
        remaining = n - pos
        top = min(used, k - 1)
        for b in range(top + 1):
            opened = used + 1 if b == used else used
            if k - opened <= remaining - 1:
                labels[pos] = b
                yield from grow(pos + 1, opened)

    return grow(1, 1) if n > 1 else iter([Partition(np.zeros(1, dtype=int), 1)])


@dataclass(frozen=True)
class OracleResult:
    """Exact minimizer with uniqueness information.

    ``unique`` means no other enumerated partition came within 1e-9 of the
    optimum. ``runner_up`` is the best strictly-worse value encountered
    (None when only one partition exists).
    """

    best: Partition
    value: float
    unique: bool
    partitions_examined: int
    runner_up: float | None

    def to_dict(self) -> dict:
        return {
            "best": self.best.labels,
            "k": self.best.k,
            "value": self.value,
            "unique": self.unique,
            "partitions_examined": self.partitions_examined,
            "runner_up": self.runner_up,
        }


def min_ratio_cut_bruteforce(g: WeightedGraph, k: int) -> OracleResult:
    """Scan every k-way partition and return the exact ratio cut minimizer.

    Deterministic: ties keep the first partition in enumeration order. The
    reported value is exactly the ratio cut the scoring function computes
    on the winning partition.
    """
    best_p = None
    best_v = np.inf
    second_v = np.inf
    examined = 0
    for p in enumerate_partitions(g.n, k):
        examined += 1
        v = ratio_cut(g, p)
        if v < best_v:
            second_v = best_v
            best_v = v
            best_p = p
        elif v < second_v:
            second_v = v
    unique = second_v > best_v + TOL.inequality_slack
    runner_up = None if np.isinf(second_v) else float(second_v)
    return OracleResult(
        best=best_p,
        value=float(best_v),
        unique=unique,
        partitions_examined=examined,
        runner_up=runner_up,
    )
