"""Exhaustive extremal sweeps and the spectral/energy bounds on CHS norms.

Sweeps work with the scaled integer ``d! * ||G||_d^d`` so that minima and
maxima are compared exactly; the bounds are evaluated in floating point.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .. import chs, spectra
from ..errors import ExtremalViolation, InvalidParameter
from ..graph import Graph, complete, is_connected, path
from ..graphio import emit_graph6
from ..walks import batch_closed_walk_counts, closed_walk_counts
from . import enumeration

MODES = ("connected", "trees")
BOUND_RTOL = 1e-9


@dataclass(frozen=True)
class BoundCheck:
    graph_id: str
    d: int
    energy_bound_ok: bool
    spectral_lower_ok: bool
    spectral_upper_ok: bool
    energy_slack: float
    spectral_lower_slack: float
    spectral_upper_slack: float

    @property
    def ok(self) -> bool:
        return self.energy_bound_ok and self.spectral_lower_ok and self.spectral_upper_ok


@dataclass
class ExtremalReport:
    n: int
    d: int
    mode: str
    min_value: Fraction
    max_value: Fraction
    argmin: list[str]
    argmax: list[str]
    argmin_count: int
    argmax_count: int
    argmin_path_count: int
    argmax_top_count: int
    path_value: Fraction
    top_value: Fraction
    scanned: int
    bound_violations: int | None = None
    min_bound_slack: float | None = None

    @property
    def top_family(self) -> str:
        return "complete" if self.mode == "connected" else "star"

    @property
    def argmin_all_paths(self) -> bool:
        return self.argmin_count == self.argmin_path_count

    @property
    def argmax_all_top(self) -> bool:
        return self.argmax_count == self.argmax_top_count


def upper_binomial(n: int, d: int) -> int:
    """``C(floor((n+d)/2) - 1, d/2)``: h_d of ``(1,..,1,[0,]-1,..,-1)``."""
    return math.comb((n + d) // 2 - 1, d // 2)


def bound_slacks(norm, energy, sigma1, n: int, d: int):
    """Slack ``rhs - lhs`` of the three inequalities, vectorised over graphs.

    energy:          ||G||_d <= energy / 2
    spectral lower:  ||K_n||_d / (n-1) * ||G|| <= ||G||_d
    spectral upper:  ||G||_d <= C(floor((n+d)/2)-1, d/2)^(1/d) * ||G||

    The upper bound is the d-th root of the sharp inequality
    ``||G||_d^d <= C * ||G||^d``; it implies the weaker ``||G||_d <= C * ||G||``.
    """
    norm = np.asarray(norm, dtype=float)
    energy = np.asarray(energy, dtype=float)
    sigma1 = np.asarray(sigma1, dtype=float)
    s_energy = energy / 2 - norm
    if n >= 2:
        kn = float(chs.complete_norm_closed_form(n, d)) ** (1.0 / d)
        s_lower = norm - kn / (n - 1) * sigma1
    else:
        s_lower = np.zeros_like(norm)
    s_upper = upper_binomial(n, d) ** (1.0 / d) * sigma1 - norm
    return s_energy, s_lower, s_upper


def _tolerance(energy) -> np.ndarray:
    return BOUND_RTOL * np.maximum(1.0, np.asarray(energy, dtype=float))


def check_theorem3(g: Graph, d: int, graph_id: str | None = None) -> BoundCheck:
    """Evaluate the energy bound and both spectral bounds for one graph."""
    if d < 2 or d % 2:
        raise InvalidParameter(f"d must be even and >= 2, got {d}")
    exact = chs.dth_power_from_walks(closed_walk_counts(g, d).counts, d)
    norm = float(exact) ** (1.0 / d)
    spec = spectra.eigenvalues(g)
    en, s1 = spectra.energy(spec), spectra.spectral_norm(spec)
    se, sl, su = (float(s) for s in bound_slacks(norm, en, s1, g.order, d))
    tol = float(_tolerance(en))
    return BoundCheck(
        graph_id=graph_id if graph_id is not None else emit_graph6(g),
        d=d,
        energy_bound_ok=se >= -tol,
        spectral_lower_ok=sl >= -tol,
        spectral_upper_ok=su >= -tol,
        energy_slack=se,
        spectral_lower_slack=sl,
        spectral_upper_slack=su,
    )


def scaled_norms(counts: np.ndarray, d: int) -> np.ndarray:
    """``d! * ||G||_d^d`` per row of a closed-walk count table ``(B, >=d)``."""
    total = np.zeros(len(counts), dtype=counts.dtype)
    for parts, coef in chs.scaled_terms(d):
        term = np.full(len(counts), coef, dtype=counts.dtype)
        for k in parts:
            term = term * counts[:, k - 1]
        total = total + term
    return total


def _count_dtype(n: int, ds: Sequence[int]):
    # C_k(G) <= C_k(K_n) termwise, so d! * ||K_n||_d^d bounds every sum
    worst = max(math.factorial(d) * chs.complete_norm_closed_form(n, d) for d in ds)
    return np.int64 if worst < (1 << 62) else object


@dataclass
class _Extreme:
    """Running optimum on one side: value, how many graphs attain it, how many
    of those are extremal-family labelings, and the smallest keys attaining it."""

    sign: int
    value: int | None = None
    count: int = 0
    family: int = 0
    keys: list[int] = field(default_factory=list)

    def offer(self, value, count: int, family: int, keys: list[int], limit: int) -> None:
        if self.value is None or self.sign * (value - self.value) > 0:
            self.value, self.count, self.family, self.keys = value, 0, 0, []
        elif value != self.value:
            return
        self.count += count
        self.family += family
        self.keys = sorted(self.keys + keys)[:limit]


@dataclass
class _Partial:
    limit: int
    low: _Extreme = field(default_factory=lambda: _Extreme(-1))
    high: _Extreme = field(default_factory=lambda: _Extreme(+1))
    scanned: int = 0
    violations: int = 0
    min_slack: float = math.inf

    def absorb(self, keys, values, low_family, high_family) -> None:
        self.scanned += len(values)
        for side, best, fam in ((self.low, values.min(), low_family),
                                (self.high, values.max(), high_family)):
            hit = values == best
            side.offer(best, int(hit.sum()), int((hit & fam).sum()),
                       keys[hit][:self.limit].tolist(), self.limit)

    def merge(self, other: "_Partial") -> None:
        self.scanned += other.scanned
        self.violations += other.violations
        self.min_slack = min(self.min_slack, other.min_slack)
        for mine, theirs in ((self.low, other.low), (self.high, other.high)):
            if theirs.value is not None:
                mine.offer(theirs.value, theirs.count, theirs.family, theirs.keys, self.limit)


def _batches(n: int, mode: str, shard_index: int, shard_count: int):
    if mode == "connected":
        return enumeration.connected_mask_batches(n, shard_index, shard_count)
    if mode == "trees":
        return enumeration.tree_batches(n, shard_index, shard_count)
    raise InvalidParameter(f"mode must be one of {MODES}, got {mode!r}")


def scan_shard(n: int, ds: Sequence[int], mode: str, shard_index: int = 0, shard_count: int = 1,
               check_bounds: bool = True, limit: int = 100) -> dict[int, _Partial]:
    """Scan one shard and return per-d partial extremal data.

    Keys identify graphs: edge bitmasks for connected mode, Prüfer-code
    indices for trees.
    """
    ds = list(ds)
    dmax = max(ds)
    dtype = _count_dtype(n, ds)
    parts = {d: _Partial(limit) for d in ds}
    for keys, adj in _batches(n, mode, shard_index, shard_count):
        deg = adj.sum(axis=2)
        m = deg.sum(axis=1) // 2
        is_path = (m == n - 1) & (deg.max(axis=1) <= 2)
        if mode == "connected":
            is_top = m == n * (n - 1) // 2
        else:
            is_top = deg.max(axis=1) == max(n - 1, 0)
        counts = batch_closed_walk_counts(adj, dmax).astype(dtype)
        if check_bounds:
            lam = spectra.batch_eigenvalues(adj)
            absl = np.abs(lam)
            en, s1 = absl.sum(axis=1), absl.max(axis=1)
            tol = _tolerance(en)
        for d in ds:
            values = scaled_norms(counts, d)
            parts[d].absorb(keys, values, is_path, is_top)
            if check_bounds:
                norm = (values.astype(float) / math.factorial(d)) ** (1.0 / d)
                slack = np.minimum.reduce(bound_slacks(norm, en, s1, n, d))
                parts[d].violations += int(np.count_nonzero(slack < -tol))
                parts[d].min_slack = min(parts[d].min_slack, float(slack.min()))
    return parts


def _scan_job(args):
    return scan_shard(*args)


def _keys_to_graph6(n: int, mode: str, keys: list[int]) -> list[str]:
    keys = sorted(keys)
    if mode == "connected":
        return [emit_graph6(Graph(n, k)) for k in keys]
    adj = enumeration.prufer_to_adjacency(n, enumeration.prufer_codes(n, np.array(keys)))
    return [emit_graph6(enumeration.adjacency_to_graph(a)) for a in adj]


def family_values(n: int, d: int, mode: str) -> tuple[Fraction, Fraction]:
    """Exact ``(||P_n||_d^d, ||K_n||_d^d or ||S_n||_d^d)``."""
    low = chs.dth_power_from_walks(closed_walk_counts(path(n), d).counts, d)
    if mode == "connected":
        top = chs.complete_norm_closed_form(n, d)
    else:
        top = Fraction((n - 1) ** (d // 2))
    return low, top


def verify_theorem2_multi(n: int, ds: Iterable[int], mode: str = "connected", jobs: int = 1,
                          shard_count: int | None = None, shard_index: int | None = None,
                          check_bounds: bool = True, limit: int = 100) -> dict[int, ExtremalReport]:
    """Sweep every labeled connected graph (or tree) of order ``n`` for each d.

    Closed-walk counts are computed once per graph and shared across the
    requested degrees. With ``shard_index`` set, only that shard is scanned
    and the extremal assertions are skipped (the partial cannot see the
    global optimum); otherwise all ``shard_count`` shards are scanned,
    ``jobs`` at a time, and merged. Raises :class:`ExtremalViolation` if a
    full sweep finds a value below the path or above the complete
    graph / star.

    Ties are common (at d=2 every tree attains the minimum), so a report
    lists at most ``limit`` extremal graphs, those with the smallest keys,
    alongside exact tie counts.
    """
    ds = sorted(set(ds))
    for d in ds:
        if d < 2 or d % 2:
            raise InvalidParameter(f"d must be even and >= 2, got {d}")
    if mode not in MODES:
        raise InvalidParameter(f"mode must be one of {MODES}, got {mode!r}")
    shard_count = shard_count or max(jobs, 1)
    shards = [shard_index] if shard_index is not None else list(range(shard_count))
    tasks = [(n, ds, mode, s, shard_count, check_bounds, limit) for s in shards]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_job, tasks))
    else:
        results = [_scan_job(t) for t in tasks]

    reports = {}
    for d in ds:
        total = _Partial(limit)
        for r in results:
            total.merge(r[d])
        if total.low.value is None:
            raise InvalidParameter(f"shard {shard_index}/{shard_count} contains no graphs")
        scale = math.factorial(d)
        low, top = family_values(n, d, mode)
        rep = ExtremalReport(
            n=n, d=d, mode=mode,
            min_value=Fraction(int(total.low.value), scale),
            max_value=Fraction(int(total.high.value), scale),
            argmin=_keys_to_graph6(n, mode, total.low.keys),
            argmax=_keys_to_graph6(n, mode, total.high.keys),
            argmin_count=total.low.count,
            argmax_count=total.high.count,
            argmin_path_count=total.low.family,
            argmax_top_count=total.high.family,
            path_value=low,
            top_value=top,
            scanned=total.scanned,
            bound_violations=total.violations if check_bounds else None,
            min_bound_slack=total.min_slack if check_bounds else None,
        )
        if shard_index is None and (rep.min_value != low or rep.max_value != top):
            raise ExtremalViolation(
                f"n={n} d={d} {mode}: range [{rep.min_value}, {rep.max_value}] "
                f"but family values are [{low}, {top}]")
        reports[d] = rep
    return reports


def verify_theorem2(n: int, d: int, mode: str = "connected", jobs: int = 1,
                    shard_count: int | None = None, shard_index: int | None = None,
                    check_bounds: bool = True, limit: int = 100) -> ExtremalReport:
    return verify_theorem2_multi(n, [d], mode, jobs, shard_count, shard_index, check_bounds,
                                 limit)[d]


def is_path_labeling(g: Graph) -> bool:
    return g.edge_count == g.order - 1 and max(g.degrees(), default=0) <= 2 and is_connected(g)


def is_star_labeling(g: Graph) -> bool:
    return g.edge_count == g.order - 1 and (g.order == 1 or max(g.degrees()) == g.order - 1)


def is_complete(g: Graph) -> bool:
    return g == complete(g.order)

