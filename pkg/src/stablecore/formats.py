"""Edge-list, graph6 and DOT serialization."""

from __future__ import annotations

from typing import TYPE_CHECKING

from .graph import Graph, GraphError, pendant_vertices

if TYPE_CHECKING:
    from .core import CoreReport


class ParseError(ValueError):
    """Malformed input text.  ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def to_edge_list(g: Graph) -> str:
    """Canonical text: ``n m`` then one ``u v`` line per edge, ``u < v``, sorted."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format.  Blank lines and ``#`` comments are ignored."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {raw!r}", lineno)
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"expected two integers, got {raw!r}", lineno) from None
    if not rows:
        raise ParseError("empty input: missing 'n m' header")
    hline, n, m = rows[0]
    if n < 0 or m < 0:
        raise ParseError("header values must be non-negative", hline)
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}", hline)
    seen = set()
    for lineno, u, v in body:
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range [0, {n})", lineno)
        if u == v:
            raise ParseError(f"self-loop at {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", lineno)
        seen.add(key)
    return Graph(n, [(u, v) for _, u, v in body])


# graph6: https://users.cecs.anu.edu.au/~bdm/data/formats.txt

_G6_HEADER = ">>graph6<<"


def _g6_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 68719476736:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise GraphError("graph too large for graph6")


def to_graph6(g: Graph, header: bool = False) -> str:
    """graph6 encoding (no trailing newline)."""
    bits = []
    for j in range(1, g.n):
        mj = g.masks[j]
        bits.extend(mj >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3 | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5])
        for k in range(0, len(bits), 6)
    )
    out = (_g6_size(g.n) + body).decode("ascii")
    return _G6_HEADER + out if header else out


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    data = s.encode("ascii")
    if not data or any(not 63 <= b <= 126 for b in data):
        raise ParseError("invalid graph6 characters")
    vals = [b - 63 for b in data]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) > 1 and vals[1] < 63:
        if len(vals) < 4:
            raise ParseError("truncated graph6 size field")
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    else:
        if len(vals) < 8:
            raise ParseError("truncated graph6 size field")
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - pos != need:
        raise ParseError(f"graph6 body has {len(vals) - pos} bytes, expected {need}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = vals[pos + k // 6]
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def to_dot(g: Graph, report: CoreReport | None = None, name: str = "G") -> str:
    """DOT text.  Pendant vertices get ``shape=box``; with a report, core vertices are filled."""
    pend = pendant_vertices(g)
    core = report.core if report is not None else frozenset()
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        attrs = []
        if v in pend:
            attrs.append("shape=box")
        if v in core:
            attrs.append("style=filled")
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}];" if attrs else ";"))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
