"""Exact walk counts from integer powers of the adjacency matrix."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

_INT64_LIMIT = 1 << 62
_FLOAT_EXACT = 1 << 53


@dataclass(frozen=True)
class WalkCounts:
    """``counts[k-1]`` is C_k, the number of closed walks of length k."""

    counts: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        if not 1 <= k <= len(self.counts):
            raise IndexError(f"closed-walk length {k} outside 1..{len(self.counts)}")
        return self.counts[k - 1]

    def __len__(self):
        return len(self.counts)

    def tolist(self) -> list[int]:
        return list(self.counts)


def _exact_dtype(n: int, k: int):
    # every entry of A^j, j <= k, is at most (n-1)^j; int64 suffices below that
    return np.int64 if n * max(n - 1, 1) ** k < _INT64_LIMIT else object


def _powers(g: Graph, k: int):
    dtype = _exact_dtype(g.order, k)
    a = g.adjacency(dtype=np.int64).astype(dtype)
    p = a.copy()
    yield 1, p
    for j in range(2, k + 1):
        p = p @ a
        yield j, p


def walk_count_matrix(g: Graph, k: int) -> list[list[int]]:
    """Entry ``[i][j]`` is the number of length-k walks from vertex i to vertex j."""
    if k < 1:
        raise ValueError(f"walk length must be positive, got {k}")
    for _, p in _powers(g, k):
        pass
    return [[int(x) for x in row] for row in p]


def closed_walk_counts(g: Graph, d: int) -> WalkCounts:
    """C_1..C_d from a single pass of matrix products."""
    return WalkCounts(tuple(int(np.trace(p)) for _, p in _powers(g, d)) if d >= 1 else ())


def closed_walk_count(g: Graph, k: int) -> int:
    """tr(A^k), exact."""
    if k < 1:
        raise ValueError(f"walk length must be positive, got {k}")
    return closed_walk_counts(g, k)[k]


def batch_closed_walk_counts(adj: np.ndarray, d: int) -> np.ndarray:
    """Exact C_1..C_d for a stack of adjacency matrices, shape ``(B, d)``.

    Products run in float64 while every partial sum stays below 2**53 (so
    they are exact integers), then int64, then Python integers.
    """
    b, n, _ = adj.shape
    dtype = _exact_dtype(n, d)
    fast = dtype is np.int64 and n * max(n - 1, 1) ** d < _FLOAT_EXACT
    a = adj.astype(float if fast else dtype)
    out = np.zeros((b, d), dtype=a.dtype)
    p = a
    for j in range(d):
        if j:
            p = np.matmul(p, a)
        out[:, j] = np.trace(p, axis1=1, axis2=2)
    return np.rint(out).astype(np.int64) if fast else out
