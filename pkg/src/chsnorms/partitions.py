"""Integer partitions, centralizer sizes and the partition-counting recurrence."""

from __future__ import annotations

import math
import threading
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        p = self.parts
        if any(x < 1 for x in p) or any(a < b for a, b in zip(p, p[1:])):
            raise ValueError(f"not a partition: {p}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    @property
    def z(self) -> int:
        return z_of(self)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def _generate(d: int, largest: int) -> Iterator[tuple[int, ...]]:
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), 0, -1):
        for rest in _generate(d - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(d: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _generate(d, d))


def partitions_of(d: int) -> list[Partition]:
    """All partitions of ``d`` in reverse lexicographic order."""
    if d < 0:
        return []
    return list(_partitions_cached(d))


def partitions_without_ones(d: int) -> list[Partition]:
    return [p for p in partitions_of(d) if 1 not in p.parts]


def z_of(p: Partition) -> int:
    """Centralizer size ``prod_i i**m_i * m_i!``."""
    return math.prod(i ** m * math.factorial(m) for i, m in Counter(p.parts).items())


_counts = [1]
_counts_lock = threading.Lock()


def _pentagonal_offsets(d: int) -> Iterator[tuple[int, int]]:
    """``(sign, g_k)`` for k = 1, -1, 2, -2, ... while ``g_k <= d``."""
    k = 1
    while True:
        sign = 1 if k % 2 else -1
        g_pos = k * (3 * k - 1) // 2
        if g_pos > d:
            return
        yield sign, g_pos
        g_neg = k * (3 * k + 1) // 2
        if g_neg <= d:
            yield sign, g_neg
        k += 1


def partition_count(d: int) -> int:
    """P(d) by Euler's pentagonal-number recurrence."""
    if d < 0:
        return 0
    if d >= len(_counts):
        with _counts_lock:
            while len(_counts) <= d:
                e = len(_counts)
                _counts.append(sum(s * _counts[e - g] for s, g in _pentagonal_offsets(e)))
    return _counts[d]
