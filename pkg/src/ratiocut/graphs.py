"""Weighted undirected graphs, partitions, cuts and the deterministic generators.

The graph is stored as a dense symmetric weight matrix with a zero diagonal;
all spectral quantities downstream are derived from its Laplacian ``L = D - W``.
Vertex indices are 0-based throughout.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .tolerances import DEFAULT as TOL


@dataclass(frozen=True)
class WeightedGraph:
    """Symmetric nonnegative weight matrix with zero diagonal.

    Parameters
    ----------
    weights : (n, n) array_like
        Edge weights. Must be square and symmetric up to ``1e-10``; the
        diagonal is forced to zero on construction (self-loops never
        contribute to the Laplacian) and the matrix is exactly symmetrized.

    Raises
    ------
    InputError
        If the matrix is not square, not symmetric, or has negative entries.
    """

    weights: np.ndarray

    def __post_init__(self):
        w = np.array(self.weights, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1] or w.shape[0] < 1:
            raise InputError(f"weights must be a square matrix, got shape {w.shape}")
        if not np.all(np.isfinite(w)):
            raise InputError("weights must be finite")
        if np.max(np.abs(w - w.T), initial=0.0) > TOL.symmetry:
            raise InputError("weight matrix is not symmetric")
        w = 0.5 * (w + w.T)
        np.fill_diagonal(w, 0.0)
        if np.any(w < 0):
            raise InputError("edge weights must be nonnegative")
        w.flags.writeable = False
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    def degrees(self) -> np.ndarray:
        """Weighted degree of every vertex, ``d_i = sum_j w_ij``."""
        return self.weights.sum(axis=1)

    def is_unweighted(self) -> bool:
        """True when every weight is exactly 0 or 1."""
        w = self.weights
        return bool(np.all((w == 0.0) | (w == 1.0)))


@dataclass(frozen=True)
class Partition:
    """A k-way labeling of the vertices ``0..n-1``.

    Every label in ``[0, k)`` must occur at least once (no empty block).
    """

    labels: np.ndarray
    k: int

    def __post_init__(self):
        labels = np.array(self.labels, dtype=int)
        if labels.ndim != 1 or labels.size < 1:
            raise InputError("labels must be a nonempty 1-d integer vector")
        if self.k < 1:
            raise InputError("k must be at least 1")
        if labels.min() < 0 or labels.max() >= self.k:
            raise InputError(f"labels must lie in [0, {self.k})")
        counts = np.bincount(labels, minlength=self.k)
        if np.any(counts == 0):
            empty = int(np.flatnonzero(counts == 0)[0])
            raise InputError(f"block {empty} is empty")
        labels.flags.writeable = False
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.labels.size

    def sizes(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.k)

    def block(self, j: int) -> np.ndarray:
        """Ascending vertex indices of block ``j``."""
        return np.flatnonzero(self.labels == j)

    def blocks(self) -> list[np.ndarray]:
        return [self.block(j) for j in range(self.k)]

    def canonical_labels(self) -> np.ndarray:
        """Relabel blocks by first occurrence (restricted-growth form)."""
        mapping: dict[int, int] = {}
        out = np.empty(self.n, dtype=int)
        for i, lab in enumerate(self.labels):
            lab = int(lab)
            if lab not in mapping:
                mapping[lab] = len(mapping)
            out[i] = mapping[lab]
        return out


def same_partition(p: Partition, q: Partition) -> bool:
    """True when the two partitions agree up to block relabeling."""
    return p.n == q.n and p.k == q.k and np.array_equal(p.canonical_labels(), q.canonical_labels())


def laplacian(g: WeightedGraph) -> np.ndarray:
    """Graph Laplacian ``L = D - W``.

    Symmetric, positive semidefinite, zero row sums; off-diagonal entries
    are ``-w_ij``.
    """
    lap = -np.array(g.weights)
    np.fill_diagonal(lap, g.degrees())
    return lap


def _check_subset(n: int, subset) -> np.ndarray:
    idx = np.asarray(list(subset), dtype=int)
    if idx.size == 0:
        return idx
    if idx.min() < 0 or idx.max() >= n:
        raise InputError(f"vertex index out of range [0, {n})")
    if np.unique(idx).size != idx.size:
        raise InputError("subset contains duplicate vertices")
    return idx


def cut_weight(g: WeightedGraph, subset) -> float:
    """Total weight crossing from ``subset`` to its complement.

    Equals the quadratic form of the indicator vector of the subset against
    the Laplacian.
    """
    idx = _check_subset(g.n, subset)
    if idx.size == 0 or idx.size == g.n:
        return 0.0
    mask = np.zeros(g.n, dtype=bool)
    mask[idx] = True
    return float(g.weights[np.ix_(mask, ~mask)].sum())


def ratio_cut(g: WeightedGraph, p: Partition) -> float:
    """Sum over blocks of the boundary weight divided by the block size."""
    if p.n != g.n:
        raise InputError(f"partition covers {p.n} vertices but the graph has {g.n}")
    total = 0.0
    for j in range(p.k):
        mask = p.labels == j
        size = int(mask.sum())
        total += float(g.weights[np.ix_(mask, ~mask)].sum()) / size
    return total


def induced_subgraph(g: WeightedGraph, subset) -> WeightedGraph:
    """Restriction of the graph to a nonempty vertex subset.

    Vertices keep their ascending original order.
    """
    idx = _check_subset(g.n, subset)
    if idx.size == 0:
        raise InputError("induced subgraph needs a nonempty vertex subset")
    idx = np.sort(idx)
    return WeightedGraph(g.weights[np.ix_(idx, idx)])


def connected_components(g: WeightedGraph) -> np.ndarray:
    """Component label per vertex via breadth-first search on positive weights."""
    n = g.n
    comp = np.full(n, -1, dtype=int)
    current = 0
    for start in range(n):
        if comp[start] >= 0:
            continue
        comp[start] = current
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in np.flatnonzero(g.weights[v] > 0):
                if comp[u] < 0:
                    comp[u] = current
                    queue.append(int(u))
        current += 1
    return comp


def is_connected(g: WeightedGraph) -> bool:
    return int(connected_components(g).max()) == 0


def bfs_distances(g: WeightedGraph, source: int) -> np.ndarray:
    """Hop distance from ``source`` to every vertex; -1 where unreachable."""
    if not 0 <= source < g.n:
        raise InputError("source vertex out of range")
    dist = np.full(g.n, -1, dtype=int)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in np.flatnonzero(g.weights[v] > 0):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(int(u))
    return dist


def diameter(g: WeightedGraph) -> int:
    """Longest shortest-path hop count; requires a connected graph."""
    best = 0
    for v in range(g.n):
        dist = bfs_distances(g, v)
        if dist.min() < 0:
            raise InputError("diameter of a disconnected graph is undefined")
        best = max(best, int(dist.max()))
    return best


# ---------------------------------------------------------------------------
# deterministic instance generators


def gen_example_blocks(n: int, c: float) -> tuple[WeightedGraph, Partition]:
    """Four equal blocks of size ``n`` probing the certificate threshold.

    Adjacent block pairs (1,2) and (3,4) are joined completely at weight 1;
    the pairs (1,3) and (2,4) are joined completely at weight ``c``; the
    diagonal is zero.  The planted bisection puts blocks 1-2 against
    blocks 3-4, and its certificate ratio is exactly ``c/2``: the planted
    split is certified optimal iff ``c <= 1``.
    """
    if n < 1:
        raise InputError("block size n must be >= 1")
    if c < 0:
        raise InputError("cross weight c must be >= 0")
    ones = np.ones((n, n))
    zero = np.zeros((n, n))
    w = np.block(
        [
            [ones, ones, c * ones, zero],
            [ones, ones, zero, c * ones],
            [c * ones, zero, ones, ones],
            [zero, c * ones, ones, ones],
        ]
    )
    labels = np.repeat([0, 1], 2 * n)
    return WeightedGraph(w), Partition(labels, 2)


def gen_unbalanced_example() -> tuple[WeightedGraph, Partition]:
    """Three planted clusters of sizes 3, 300, 300 with two weak cross edges.

    Within cluster ``i`` every pair carries weight ``1/|V_i|`` so each block's
    algebraic connectivity is exactly 1.  One cross edge of weight 0.5 joins
    the first vertex of cluster 1 to the first vertex of cluster 2, another
    joins the first vertex of cluster 3 to the second vertex of cluster 2.
    """
    sizes = [3, 300, 300]
    n = sum(sizes)
    w = np.zeros((n, n))
    offset = 0
    starts = []
    for m in sizes:
        w[offset : offset + m, offset : offset + m] = 1.0 / m
        starts.append(offset)
        offset += m
    np.fill_diagonal(w, 0.0)
    v1_first, v2_first, v3_first = starts[0], starts[1], starts[2]
    w[v1_first, v2_first] = w[v2_first, v1_first] = 0.5
    w[v3_first, v2_first + 1] = w[v2_first + 1, v3_first] = 0.5
    labels = np.repeat([0, 1, 2], sizes)
    return WeightedGraph(w), Partition(labels, 3)


def gen_planted_blocks(
    sizes, intra: float, cross: float, seed: int = 0
) -> tuple[WeightedGraph, Partition]:
    """Complete blocks at weight ``intra`` joined by one cross edge per consecutive pair.

    The cross edge for the pair ``(i, i+1)`` joins the last vertex of block
    ``i`` to the first vertex of block ``i+1``, so for blocks of size >= 2 the
    maximum boundary degree is exactly ``cross`` and the smallest intra-block
    algebraic connectivity is ``intra * min(sizes)``.  ``seed`` is accepted
    for a future randomized variant; the construction itself is deterministic.
    """
    sizes = [int(s) for s in sizes]
    if len(sizes) == 0:
        raise InputError("sizes must be nonempty")
    if any(s < 1 for s in sizes):
        raise InputError("every block size must be >= 1")
    if intra < 0 or cross < 0:
        raise InputError("weights must be >= 0")
    del seed  # reserved
    n = sum(sizes)
    w = np.zeros((n, n))
    starts = np.concatenate([[0], np.cumsum(sizes)])
    for lo, hi in zip(starts[:-1], starts[1:]):
        w[lo:hi, lo:hi] = intra
    np.fill_diagonal(w, 0.0)
    if cross > 0:
        for i in range(len(sizes) - 1):
            last_of_i = starts[i + 1] - 1
            first_of_next = starts[i + 1]
            w[last_of_i, first_of_next] = w[first_of_next, last_of_i] = cross
    labels = np.repeat(np.arange(len(sizes)), sizes)
    return WeightedGraph(w), Partition(labels, len(sizes))
