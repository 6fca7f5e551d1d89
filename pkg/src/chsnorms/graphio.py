"""graph6 and plain edge-list reading and writing.

graph6 layout: an order prefix N(n) followed by the upper triangle of the
adjacency matrix in column-major order ``(0,1),(0,2),(1,2),(0,3),...``,
packed big-endian six bits per character, each character being its value
plus 63. Vertices in edge lists are 1-based.
"""

from __future__ import annotations

import warnings
from pathlib import Path

from .errors import (
    CharacterOutOfRange,
    CountMismatch,
    InvalidParameter,
    MalformedHeader,
    NonIntegerToken,
    TrailingGarbage,
    TruncatedBits,
)
from .graph import Graph, from_edges, pair_count

HEADER = ">>graph6<<"
_LO, _HI = 63, 126
_MAX_ORDER = (1 << 36) - 1


class Graph6PaddingWarning(UserWarning):
    """Nonzero padding bits after the last pair bit."""


def _check_chars(text: str, offset: int = 0) -> list[int]:
    vals = []
    for pos, ch in enumerate(text):
        c = ord(ch)
        if not _LO <= c <= _HI:
            raise CharacterOutOfRange(f"character {ch!r} at position {pos + offset} outside 63..126")
        vals.append(c - _LO)
    return vals


def _decode_order(vals: list[int]) -> tuple[int, int]:
    """Return ``(n, prefix_length)``."""
    if not vals:
        raise MalformedHeader("empty graph6 record")
    if vals[0] != 63:
        return vals[0], 1
    if len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise MalformedHeader("truncated 8-byte order prefix")
        width, start = 6, 2
    else:
        if len(vals) < 4:
            raise MalformedHeader("truncated 4-byte order prefix")
        width, start = 3, 1
    n = 0
    for v in vals[start:start + width]:
        n = n << 6 | v
    return n, start + width


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + _LO)
    if n <= 258047:
        width, prefix = 3, "~"
    elif n <= _MAX_ORDER:
        width, prefix = 6, "~~"
    else:
        raise InvalidParameter(f"order {n} too large for graph6")
    return prefix + "".join(chr((n >> (6 * k) & 63) + _LO) for k in reversed(range(width)))


def parse_graph6(text: str) -> Graph:
    record = text.strip("\r\n")
    if record.startswith(HEADER):
        record = record[len(HEADER):]
    vals = _check_chars(record)
    n, start = _decode_order(vals)
    if n < 1:
        raise MalformedHeader("graph6 record of order 0")
    npairs = pair_count(n)
    need = -(-npairs // 6)
    body = vals[start:]
    if len(body) < need:
        raise TruncatedBits(f"order {n} needs {need} body characters, got {len(body)}")
    if len(body) > need:
        raise TrailingGarbage(f"{len(body) - need} extra character(s) after the body")
    stream = 0
    for v in body:
        stream = stream << 6 | v
    pad = 6 * need - npairs
    if pad and stream & ((1 << pad) - 1):
        warnings.warn("nonzero graph6 padding bits ignored", Graph6PaddingWarning, stacklevel=2)
    stream >>= pad
    # stream holds pair 0 at its most significant bit; Graph wants it at bit 0
    bits = int(format(stream, f"0{npairs}b")[::-1], 2) if npairs else 0
    return Graph(n, bits)


def emit_graph6(g: Graph) -> str:
    npairs = pair_count(g.order)
    need = -(-npairs // 6)
    s = format(g.bits, f"0{npairs}b")[::-1] if npairs else ""
    s += "0" * (6 * need - npairs)
    body = "".join(chr(int(s[k:k + 6], 2) + _LO) for k in range(0, len(s), 6))
    return _encode_order(g.order) + body


def _int_token(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise NonIntegerToken(f"line {lineno}: {tok!r} is not an integer") from None


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"i j"`` (1-based)."""
    lines = [(k + 1, ln.split()) for k, ln in enumerate(text.splitlines()) if ln.strip()]
    if not lines:
        raise MalformedHeader("empty edge list")
    lineno, head = lines[0]
    if len(head) != 2:
        raise MalformedHeader(f"line {lineno}: header must be 'n m'")
    n, m = (_int_token(t, lineno) for t in head)
    edges = []
    for lineno, toks in lines[1:]:
        if len(toks) != 2:
            raise NonIntegerToken(f"line {lineno}: expected two integers, got {len(toks)} token(s)")
        edges.append(tuple(_int_token(t, lineno) for t in toks))
    if len(edges) != m:
        raise CountMismatch(f"header declares {m} edges but {len(edges)} lines follow")
    return from_edges(n, edges)


def emit_edge_list(g: Graph) -> str:
    rows = [f"{g.order} {g.edge_count}"]
    rows += [f"{i + 1} {j + 1}" for i, j in g.edges()]
    return "\n".join(rows) + "\n"


def read_graph6_file(path) -> list[Graph]:
    text = Path(path).read_text(encoding="utf-8")
    return [parse_graph6(ln) for ln in text.splitlines() if ln.strip()]


def write_graph6_file(path, graphs) -> None:
    Path(path).write_text("".join(emit_graph6(g) + "\n" for g in graphs), encoding="utf-8")
