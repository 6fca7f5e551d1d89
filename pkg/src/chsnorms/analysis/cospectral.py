"""Noncospectral singularly cospectral pairs and the even degree that tells them apart."""

from __future__ import annotations

import warnings

import numpy as np

from .. import spectra
from ..chs import dth_power_from_walks
from ..errors import BipartiteInput, NotSingularlyCospectral, OrderMismatch, OrderTooSmall
from ..graph import Graph, disjoint_union, is_bipartite, tensor_with_k2
from ..walks import closed_walk_counts


def make_pair(f: Graph) -> tuple[Graph, Graph]:
    """``(F ⊔ F, F × K2)`` for a nonbipartite ``f`` of order at least 3."""
    if f.order < 3:
        raise OrderTooSmall(f"need order >= 3, got {f.order}")
    if is_bipartite(f):
        raise BipartiteInput("F x K2 and F ⊔ F are cospectral when F is bipartite")
    return disjoint_union(f, f), tensor_with_k2(f)


def distinguish(g: Graph, h: Graph, d_max: int = 20) -> int | None:
    """Smallest even d at which the CHS norms of a singularly cospectral pair differ.

    Even closed-walk counts must agree up to ``d_max`` (exact), otherwise
    :class:`NotSingularlyCospectral` is raised. Norms up to degree d depend
    only on C_1..C_d, so nothing can differ before ``j + 3`` where ``j`` is
    the smallest odd length with ``tr(A_g^j) != tr(A_h^j)``. When
    ``tr(A^3)`` is nonzero the term ``p_j p_3`` makes ``j + 3`` itself
    separate the pair; for triangle-free graphs that term vanishes and the
    search continues (``2j`` always works when shorter odd traces are zero).
    Returns ``None`` if no even ``d <= d_max`` separates them.
    """
    if g.order != h.order:
        raise OrderMismatch(f"orders differ: {g.order} vs {h.order}")
    cg = closed_walk_counts(g, d_max)
    ch = closed_walk_counts(h, d_max)
    for k in range(2, d_max + 1, 2):
        if cg[k] != ch[k]:
            raise NotSingularlyCospectral(
                f"tr(A^{k}) differs: {cg[k]} vs {ch[k]}", power=k)
    sg = spectra.eigenvalues(g).singular_values
    sh = spectra.eigenvalues(h).singular_values
    if not np.allclose(sg, sh, atol=1e-8):
        warnings.warn("even traces agree but singular values differ numerically", RuntimeWarning,
                      stacklevel=2)
    odd = [j for j in range(3, d_max + 1, 2) if cg[j] != ch[j]]
    if not odd:
        return None
    for d in range(odd[0] + 3, d_max + 1, 2):
        if dth_power_from_walks(cg.counts, d) != dth_power_from_walks(ch.counts, d):
            return d
    return None
