"""Simple undirected graphs stored as an upper-triangle bitset.

Pair ``(i, j)`` with ``i < j`` (0-based) lives at bit ``j*(j-1)//2 + i``,
which is the column-major order graph6 uses, so a graph's ``bits`` value
is also its index in the labeled-graph enumeration.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .errors import IndexOutOfRange, InvalidParameter, LoopRejected

FAMILY_KINDS = ("Path", "Complete", "Star", "CompleteBipartite", "Cycle")


def pair_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..order-1``."""

    order: int
    bits: int = 0
    edge_count: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.order < 1:
            raise InvalidParameter(f"graph order must be positive, got {self.order}")
        if self.bits < 0 or self.bits >> pair_count(self.order):
            raise IndexOutOfRange("pair bits exceed the order of the graph")
        object.__setattr__(self, "edge_count", self.bits.bit_count())

    @property
    def n(self) -> int:
        return self.order

    @property
    def m(self) -> int:
        return self.edge_count

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return bool(self.bits >> pair_index(i, j) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """0-based edges ``(i, j)``, ``i < j``, sorted lexicographically."""
        out = []
        for j in range(1, self.order):
            base = j * (j - 1) // 2
            for i in range(j):
                if self.bits >> (base + i) & 1:
                    out.append((i, j))
        out.sort()
        return out

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for i, j in self.edges():
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def degrees(self) -> list[int]:
        return [len(a) for a in self.neighbors()]

    def adjacency(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.order, self.order), dtype=dtype)
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1
        return a

    def __repr__(self):
        return f"Graph(order={self.order}, m={self.edge_count})"


@dataclass(frozen=True)
class FamilyId:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise InvalidParameter(f"unknown family kind {self.kind!r}")
        want = 2 if self.kind == "CompleteBipartite" else 1
        if len(self.params) != want:
            raise InvalidParameter(f"{self.kind} takes {want} parameter(s)")
        if any(p < 1 for p in self.params):
            raise InvalidParameter(f"family parameters must be positive: {self.params}")
        if self.kind == "Cycle" and self.params[0] < 3:
            raise InvalidParameter("cycles need at least 3 vertices")

    def label(self) -> str:
        letter = {"Path": "P", "Complete": "K", "Star": "S",
                  "CompleteBipartite": "K", "Cycle": "C"}[self.kind]
        return letter + ",".join(str(p) for p in self.params)


def from_bits(n: int, bits: int) -> Graph:
    return Graph(n, bits)


def from_edges(n: int, edges: Iterable[tuple[int, int]], *, one_based: bool = True) -> Graph:
    """Build a graph from unordered vertex pairs, 1-based unless told otherwise.

    Duplicate pairs collapse to a single edge.
    """
    if n < 1:
        raise InvalidParameter(f"graph order must be positive, got {n}")
    lo = 1 if one_based else 0
    bits = 0
    for u, v in edges:
        if u == v:
            raise LoopRejected(f"loop at vertex {u}")
        for w in (u, v):
            if not lo <= w < n + lo:
                raise IndexOutOfRange(f"vertex {w} outside {lo}..{n + lo - 1}")
        bits |= 1 << pair_index(u - lo, v - lo)
    return Graph(n, bits)


def _from_zero_based(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return from_edges(n, edges, one_based=False)


def path(n: int) -> Graph:
    return family(FamilyId("Path", (n,)))


def complete(n: int) -> Graph:
    return family(FamilyId("Complete", (n,)))


def star(n: int) -> Graph:
    return family(FamilyId("Star", (n,)))


def complete_bipartite(m: int, n: int) -> Graph:
    return family(FamilyId("CompleteBipartite", (m, n)))


def cycle(n: int) -> Graph:
    return family(FamilyId("Cycle", (n,)))


def empty(n: int) -> Graph:
    return Graph(n, 0)


def family(fid: FamilyId) -> Graph:
    """Construct P_n, K_n, S_n (= K_{n-1,1}), K_{m,n} or C_n."""
    kind, params = fid.kind, fid.params
    if kind == "Path":
        (n,) = params
        return _from_zero_based(n, ((i, i + 1) for i in range(n - 1)))
    if kind == "Complete":
        (n,) = params
        return Graph(n, (1 << pair_count(n)) - 1)
    if kind == "Star":
        (n,) = params
        # centre is the last vertex, matching K_{n-1,1}
        return _from_zero_based(n, ((i, n - 1) for i in range(n - 1)))
    if kind == "CompleteBipartite":
        a, b = params
        return _from_zero_based(a + b, ((i, a + j) for i in range(a) for j in range(b)))
    (n,) = params
    return _from_zero_based(n, ((i, (i + 1) % n) for i in range(n)))


_FAMILY_RE = re.compile(r"^\s*([PKSC])\s*(\d+)\s*(?:,\s*(\d+))?\s*$")


def parse_family(spec: str) -> FamilyId:
    """Parse an ASCII family spec such as ``"P5"``, ``"K7"``, ``"S4"``, ``"K2,3"``, ``"C5"``."""
    mt = _FAMILY_RE.match(spec)
    if not mt:
        raise InvalidParameter(f"cannot parse family spec {spec!r}")
    letter, a, b = mt.group(1), int(mt.group(2)), mt.group(3)
    if b is not None:
        if letter != "K":
            raise InvalidParameter(f"only K takes two parameters: {spec!r}")
        return FamilyId("CompleteBipartite", (a, int(b)))
    kind = {"P": "Path", "K": "Complete", "S": "Star", "C": "Cycle"}[letter]
    return FamilyId(kind, (a,))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.order
    edges = g.edges() + [(i + shift, j + shift) for i, j in h.edges()]
    return _from_zero_based(g.order + h.order, edges)


def tensor_with_k2(g: Graph) -> Graph:
    """Bipartite double cover: adjacency ``[[0, A], [A, 0]]``."""
    n = g.order
    edges = []
    for i, j in g.edges():
        edges.append((i, n + j))
        edges.append((j, n + i))
    return _from_zero_based(2 * n, edges)


def _bfs(adj: list[list[int]], start: int, colour: list[int]) -> Iterator[tuple[int, int]]:
    colour[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            yield u, v
            if colour[v] < 0:
                colour[v] = 1 - colour[u]
                queue.append(v)


def is_connected(g: Graph) -> bool:
    adj = g.neighbors()
    colour = [-1] * g.order
    for _ in _bfs(adj, 0, colour):
        pass
    return all(c >= 0 for c in colour)


def is_tree(g: Graph) -> bool:
    return g.edge_count == g.order - 1 and is_connected(g)


def is_bipartite(g: Graph) -> bool:
    adj = g.neighbors()
    colour = [-1] * g.order
    for s in range(g.order):
        if colour[s] >= 0:
            continue
        for u, v in _bfs(adj, s, colour):
            if colour[v] == colour[u]:
                return False
    return True
