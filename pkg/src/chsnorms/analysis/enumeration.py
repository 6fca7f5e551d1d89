"""Labeled enumeration of connected graphs (edge bitmasks) and trees (Prüfer codes).

Both search spaces are integer ranges, so a shard is a contiguous slice
``[s*N//c, (s+1)*N//c)``. The ``batch_*`` helpers work on numpy stacks of
adjacency matrices and back the exhaustive sweeps; the ``enumerate_*``
generators yield :class:`Graph` objects one at a time.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from ..errors import OrderTooLarge, InvalidParameter
from ..graph import Graph, pair_count

MAX_CONNECTED_ORDER = 8
MAX_TREE_ORDER = 10
DEFAULT_CHUNK = 1 << 15


def shard_range(total: int, shard_index: int, shard_count: int) -> range:
    if shard_count < 1 or not 0 <= shard_index < shard_count:
        raise InvalidParameter(f"bad shard {shard_index}/{shard_count}")
    return range(shard_index * total // shard_count, (shard_index + 1) * total // shard_count)


def _pairs(n: int) -> tuple[np.ndarray, np.ndarray]:
    ii, jj = [], []
    for j in range(1, n):
        for i in range(j):
            ii.append(i)
            jj.append(j)
    return np.array(ii, dtype=np.intp), np.array(jj, dtype=np.intp)


def masks_to_adjacency(n: int, masks: np.ndarray) -> np.ndarray:
    """``(B, n, n)`` int64 adjacency stack from pair bitmasks."""
    masks = np.asarray(masks, dtype=np.int64)
    adj = np.zeros((len(masks), n, n), dtype=np.int64)
    ii, jj = _pairs(n)
    for k in range(len(ii)):
        bit = (masks >> k) & 1
        adj[:, ii[k], jj[k]] = bit
        adj[:, jj[k], ii[k]] = bit
    return adj


def batch_is_connected(adj: np.ndarray) -> np.ndarray:
    b, n, _ = adj.shape
    if n == 1:
        return np.ones(b, dtype=bool)
    reach = (adj + np.eye(n, dtype=adj.dtype)).astype(float)
    span = 1
    while span < n - 1:
        reach = np.minimum(np.matmul(reach, reach), 1.0)
        span *= 2
    return np.all(reach[:, 0, :] > 0, axis=1)


def connected_mask_batches(n: int, shard_index: int = 0, shard_count: int = 1,
                           chunk: int = DEFAULT_CHUNK) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield ``(masks, adjacency)`` for the connected graphs of one shard, in mask order."""
    _check_connected_order(n)
    rng = shard_range(1 << pair_count(n), shard_index, shard_count)
    for lo in range(rng.start, rng.stop, chunk):
        masks = np.arange(lo, min(lo + chunk, rng.stop), dtype=np.int64)
        adj = masks_to_adjacency(n, masks)
        keep = batch_is_connected(adj)
        if keep.any():
            yield masks[keep], adj[keep]


def tree_count(n: int) -> int:
    return n ** (n - 2) if n >= 2 else 1


def prufer_codes(n: int, indices: np.ndarray) -> np.ndarray:
    """Base-n digits of each index, most significant first, shape ``(B, n-2)``."""
    indices = np.asarray(indices, dtype=np.int64)
    out = np.zeros((len(indices), max(n - 2, 0)), dtype=np.int64)
    rest = indices.copy()
    for pos in reversed(range(n - 2)):
        out[:, pos] = rest % n
        rest //= n
    return out


def prufer_to_adjacency(n: int, codes: np.ndarray) -> np.ndarray:
    """Decode a stack of Prüfer sequences (0-based labels) into adjacency matrices."""
    b = len(codes)
    adj = np.zeros((b, n, n), dtype=np.int64)
    if n == 1:
        return adj
    rows = np.arange(b)
    degree = np.ones((b, n), dtype=np.int64)
    for pos in range(n - 2):
        np.add.at(degree, (rows, codes[:, pos]), 1)
    for pos in range(n - 2):
        leaf = np.argmax(degree == 1, axis=1)
        parent = codes[:, pos]
        adj[rows, leaf, parent] = 1
        adj[rows, parent, leaf] = 1
        degree[rows, leaf] -= 1
        degree[rows, parent] -= 1
    # the two vertices left with degree 1
    first = np.argmax(degree == 1, axis=1)
    masked = degree.copy()
    masked[rows, first] = 0
    second = np.argmax(masked == 1, axis=1)
    adj[rows, first, second] = 1
    adj[rows, second, first] = 1
    return adj


def tree_batches(n: int, shard_index: int = 0, shard_count: int = 1,
                 chunk: int = DEFAULT_CHUNK) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield ``(prufer_indices, adjacency)`` for one shard of the labeled trees."""
    _check_tree_order(n)
    rng = shard_range(tree_count(n), shard_index, shard_count)
    for lo in range(rng.start, rng.stop, chunk):
        idx = np.arange(lo, min(lo + chunk, rng.stop), dtype=np.int64)
        yield idx, prufer_to_adjacency(n, prufer_codes(n, idx))


def adjacency_to_graph(a: np.ndarray) -> Graph:
    n = a.shape[0]
    bits = 0
    for j in range(1, n):
        for i in range(j):
            if a[i, j]:
                bits |= 1 << (j * (j - 1) // 2 + i)
    return Graph(n, bits)


def tree_from_index(n: int, index: int) -> Graph:
    return adjacency_to_graph(prufer_to_adjacency(n, prufer_codes(n, np.array([index])))[0])


def _check_connected_order(n: int) -> None:
    if n < 1:
        raise InvalidParameter(f"order must be positive, got {n}")
    if n > MAX_CONNECTED_ORDER:
        raise OrderTooLarge(f"connected enumeration is capped at n={MAX_CONNECTED_ORDER}, got {n}")


def _check_tree_order(n: int) -> None:
    if n < 1:
        raise InvalidParameter(f"order must be positive, got {n}")
    if n > MAX_TREE_ORDER:
        raise OrderTooLarge(f"tree enumeration is capped at n={MAX_TREE_ORDER}, got {n}")


def enumerate_connected(n: int, shard_index: int = 0, shard_count: int = 1) -> Iterator[Graph]:
    """Every labeled connected graph on ``n`` vertices, in bitmask order."""
    for masks, _ in connected_mask_batches(n, shard_index, shard_count):
        for mask in masks.tolist():
            yield Graph(n, mask)


def enumerate_trees(n: int, shard_index: int = 0, shard_count: int = 1) -> Iterator[Graph]:
    """Every labeled tree on ``n`` vertices, in Prüfer-code order."""
    for _, adj in tree_batches(n, shard_index, shard_count):
        for a in adj:
            yield adjacency_to_graph(a)
