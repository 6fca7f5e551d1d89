"""Majorization of real vectors."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import LengthMismatch


@dataclass(frozen=True)
class MajorizationWitness:
    x: tuple[float, ...]
    y: tuple[float, ...]
    prefix_sums: tuple[tuple[float, float], ...]
    holds: bool

    def __bool__(self):
        return self.holds


def majorizes(y, x, tol: float = 1e-9) -> MajorizationWitness:
    """Decide whether ``y`` majorizes ``x`` (``x`` is majorized by ``y``).

    Both vectors are sorted nonincreasing; every proper prefix sum of ``x``
    must not exceed that of ``y`` and the totals must agree, all to ``tol``.
    """
    xs = np.sort(np.asarray(x, dtype=float))[::-1]
    ys = np.sort(np.asarray(y, dtype=float))[::-1]
    if xs.shape != ys.shape:
        raise LengthMismatch(f"lengths differ: {len(xs)} vs {len(ys)}")
    px, py = np.cumsum(xs), np.cumsum(ys)
    holds = bool(np.all(px[:-1] <= py[:-1] + tol)) and abs(px[-1] - py[-1]) <= tol
    return MajorizationWitness(
        x=tuple(xs.tolist()),
        y=tuple(ys.tolist()),
        prefix_sums=tuple(zip(px.tolist(), py.tolist())),
        holds=holds,
    )
