"""Adjacency spectra and the singular-value norms built on them."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure, InvalidK, InvalidP, UnsupportedFamily
from .graph import FamilyId, Graph


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted nonincreasing, plus the accuracy bound they meet."""

    values: np.ndarray
    tolerance: float = 0.0

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values.tolist())

    @property
    def singular_values(self) -> np.ndarray:
        return _sort_desc(np.abs(self.values))

    def tolist(self) -> list[float]:
        return self.values.tolist()


def _sort_desc(v: np.ndarray) -> np.ndarray:
    # stable on the negated values, so ties keep their original order
    return v[np.argsort(-v, kind="stable")]


def jacobi_eigenvalues(a: np.ndarray, tol: float = 1e-14, max_sweeps: int = 60) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by the cyclic Jacobi method.

    Each sweep annihilates every off-diagonal entry once with a two-sided
    plane rotation. Raises :class:`ConvergenceFailure` if the off-diagonal
    Frobenius norm has not dropped below ``tol * ||a||_F`` after
    ``max_sweeps`` sweeps.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy()
    scale = max(np.linalg.norm(a), 1.0)
    for _ in range(max_sweeps):
        off = math.sqrt(max(np.sum(a * a) - np.sum(a.diagonal() ** 2), 0.0))
        if off <= tol * scale:
            return a.diagonal().copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
    raise ConvergenceFailure(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def eigenvalues(g: Graph, method: str = "lapack") -> Spectrum:
    """Spectrum of A(g), each value within ``1e-10 * max(1, ||A||)`` of exact.

    ``method`` is ``"lapack"`` (numpy's symmetric driver) or ``"jacobi"``.
    """
    a = g.adjacency(dtype=float)
    if method == "lapack":
        vals = np.linalg.eigvalsh(a)
    elif method == "jacobi":
        vals = jacobi_eigenvalues(a)
    else:
        raise ValueError(f"unknown eigenvalue method {method!r}")
    tol = 1e-10 * max(1.0, float(np.linalg.norm(a, 2)) if g.order > 1 else 0.0)
    return Spectrum(_sort_desc(np.asarray(vals, dtype=float)), tol)


def batch_eigenvalues(adj: np.ndarray) -> np.ndarray:
    """Nonincreasing eigenvalues for a stack of symmetric matrices ``(B, n, n)``."""
    return np.linalg.eigvalsh(adj.astype(float))[:, ::-1]


def family_spectrum(fid: FamilyId) -> Spectrum:
    kind, params = fid.kind, fid.params
    if kind == "Path":
        (n,) = params
        vals = [2 * math.cos(k * math.pi / (n + 1)) for k in range(1, n + 1)]
    elif kind == "Complete":
        (n,) = params
        vals = [float(n - 1)] + [-1.0] * (n - 1) if n > 1 else [0.0]
    elif kind in ("CompleteBipartite", "Star"):
        a, b = params if kind == "CompleteBipartite" else (params[0] - 1, 1)
        if a == 0:
            vals = [0.0]
        else:
            r = math.sqrt(a * b)
            vals = [r] + [0.0] * (a + b - 2) + [-r]
    else:
        raise UnsupportedFamily(f"no closed-form spectrum for {kind}")
    return Spectrum(_sort_desc(np.array(vals, dtype=float)), 0.0)


def _singular(x) -> np.ndarray:
    if isinstance(x, Graph):
        x = eigenvalues(x)
    if isinstance(x, Spectrum):
        return x.singular_values
    return _sort_desc(np.abs(np.asarray(x, dtype=float)))


def spectral_norm(x) -> float:
    return float(_singular(x)[0])


def energy(x) -> float:
    return float(_singular(x).sum())


def ky_fan(x, k: int) -> float:
    s = _singular(x)
    if not 1 <= k <= len(s):
        raise InvalidK(f"Ky Fan index k={k} outside 1..{len(s)}")
    return float(s[:k].sum())


def schatten(x, p: float) -> float:
    if not p >= 1:
        raise InvalidP(f"Schatten exponent must be >= 1, got {p}")
    s = _singular(x)
    if math.isinf(p):
        return float(s[0])
    return float(np.sum(s ** p) ** (1.0 / p))
