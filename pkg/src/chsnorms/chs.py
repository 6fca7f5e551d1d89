"""Complete homogeneous symmetric (CHS) polynomials and graph d-norms.

``h_d`` is evaluated three ways: the power-sum expansion over partitions,
the truncated product of geometric series (kept deliberately naive, used as
the oracle), and the Newton-type recurrence ``d*h_d = sum_k p_k h_{d-k}``.
The graph norm has an exact route through closed-walk counts and a
floating-point route through the adjacency spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Sequence

from . import graphio, spectra, walks
from .errors import DegreeTooSmall, OddDegree, UnsupportedDegree
from .graph import Graph
from .partitions import partitions_of, partitions_without_ones, z_of

ExactRational = Fraction


def _check_degree(d: int) -> None:
    if d < 2:
        raise DegreeTooSmall(f"CHS norms need d >= 2, got {d}")
    if d % 2:
        raise OddDegree(f"CHS norms need an even d, got {d}")


def _as_scalars(values) -> list:
    # numpy scalars -> Python numbers so Fractions stay exact
    return [v.item() if hasattr(v, "item") else v for v in values]


def power_sums(values, d: int) -> list:
    """``[p_1, ..., p_d]`` with ``p_k = sum(x**k)``."""
    xs = _as_scalars(values)
    return [sum(x ** k for x in xs) for k in range(1, d + 1)]


def h_via_partitions(values, d: int, allow_odd: bool = False):
    """``h_d = sum over partitions pi of d of p_pi / z_pi``."""
    if d < 0:
        raise ValueError(f"degree must be nonnegative, got {d}")
    if d % 2 and not allow_odd:
        raise OddDegree(f"h_via_partitions takes even d unless allow_odd is set, got {d}")
    p = power_sums(values, d)
    exact = all(isinstance(x, Rational) for x in p)
    total = Fraction(0) if exact else 0.0
    for pi in partitions_of(d):
        term = math.prod(p[k - 1] for k in pi.parts)
        total += Fraction(term, z_of(pi)) if exact else term / z_of(pi)
    return total


def h_via_series(values, d: int):
    """Coefficient of t^d in ``prod_i (1 + x_i t + x_i^2 t^2 + ... + x_i^d t^d)``."""
    if d < 0:
        raise ValueError(f"degree must be nonnegative, got {d}")
    coeffs = [1] + [0] * d
    for x in _as_scalars(values):
        geometric = [x ** j for j in range(d + 1)]
        coeffs = [sum(coeffs[k - j] * geometric[j] for j in range(k + 1)) for k in range(d + 1)]
    return coeffs[d]


def h_via_recurrence(powersums: Sequence, d: int):
    """h_d from ``p_1..p_d``; exact when the power sums are integers or Fractions."""
    p = _as_scalars(powersums)
    if len(p) < d:
        raise ValueError(f"need {d} power sums, got {len(p)}")
    exact = all(isinstance(x, Rational) for x in p[:d])
    h = [Fraction(1) if exact else 1.0]
    for j in range(1, d + 1):
        acc = sum(p[k - 1] * h[j - k] for k in range(1, j + 1))
        h.append(Fraction(acc, j) if exact else acc / j)
    return h[d]


@lru_cache(maxsize=None)
def scaled_terms(d: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """``(parts, d!/z_pi)`` for every partition of d with no part equal to 1.

    ``d! * ||G||_d^d = sum(coef * prod(C_k for k in parts))``; z_pi divides d!
    so every coefficient is an integer.
    """
    f = math.factorial(d)
    return tuple((pi.parts, f // z_of(pi)) for pi in partitions_without_ones(d))


def dth_power_from_walks(counts: Sequence[int], d: int) -> Fraction:
    """Exact ``||G||_d^d`` from closed-walk counts ``C_1..C_d`` (C_1 must be 0)."""
    total = sum(coef * math.prod(counts[k - 1] for k in parts) for parts, coef in scaled_terms(d))
    return Fraction(total, math.factorial(d))


@dataclass(frozen=True)
class NormReport:
    graph_id: str
    d: int
    exact_dth_power: Fraction
    float_norm: float
    route_agreement: float

    @property
    def float_dth_power(self) -> float:
        return self.float_norm ** self.d


def chs_norm(g: Graph, d: int, graph_id: str | None = None) -> NormReport:
    """CHS d-norm of ``g`` by the exact walk route and the eigenvalue route."""
    _check_degree(d)
    exact = dth_power_from_walks(walks.closed_walk_counts(g, d).counts, d)
    lam = spectra.eigenvalues(g).values
    approx = h_via_recurrence(power_sums(lam.tolist(), d), d)
    # h_d of a real spectrum is nonnegative for even d; clip rounding noise
    approx = max(approx, 0.0)
    return NormReport(
        graph_id=graph_id if graph_id is not None else graphio.emit_graph6(g),
        d=d,
        exact_dth_power=exact,
        float_norm=approx ** (1.0 / d),
        route_agreement=abs(approx - float(exact)),
    )


def chs_norm_246(g: Graph, d: int) -> Fraction:
    """Exact ``||G||_d^d`` for d in {2, 4, 6} from m, tr(A^3), tr(A^4), tr(A^6)."""
    if d not in (2, 4, 6):
        raise UnsupportedDegree(f"closed trace formula only for d in (2, 4, 6), got {d}")
    m = Fraction(g.edge_count)
    if d == 2:
        return m
    c = walks.closed_walk_counts(g, d)
    if d == 4:
        return Fraction(c[4], 4) + m ** 2 / 2
    return Fraction(c[6], 6) + m * Fraction(c[4], 4) + Fraction(c[3] ** 2, 18) + m ** 3 / 6


def complete_norm_closed_form(n: int, d: int) -> Fraction:
    """``||K_n||_d^d = sum_k (-1)^k (n-1)^(d-k) C(k+n-2, n-2)``.

    The binomial comes from expanding ``(1+t)^-(n-1)``, one factor per
    eigenvalue -1 of K_n.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n == 1:
        return Fraction(1 if d == 0 else 0)
    return Fraction(sum((-1) ** k * (n - 1) ** (d - k) * math.comb(k + n - 2, n - 2)
                        for k in range(d + 1)))


def complete_norm_printed_formula(n: int, d: int) -> Fraction:
    """The variant with ``C(k+n-1, n-1)``; it expands ``(1+t)^-n`` and overcounts.

    Kept to document the discrepancy: it gives 11 instead of 9 at n=3, d=4.
    """
    return Fraction(sum((-1) ** k * (n - 1) ** (d - k) * math.comb(k + n - 1, n - 1)
                        for k in range(d + 1)))


def bipartite_dth_power(m: int, n: int, d: int) -> Fraction:
    _check_degree(d)
    return Fraction((m * n) ** (d // 2))


def bipartite_norm_closed_form(m: int, n: int, d: int) -> float:
    """``||K_{m,n}||_d = sqrt(mn)`` for every even d."""
    _check_degree(d)
    return math.sqrt(m * n)


def star_norm(n: int, d: int) -> float:
    """``||S_n||_d = sqrt(n-1)``."""
    _check_degree(d)
    return math.sqrt(n - 1)
