"""graph6, DIMACS edge-list, and JSON readers and writers.

graph6 is the standard printable encoding: a size prefix, then the upper
triangle packed six bits per character with a 63 offset, columns ordered
(0,1), (0,2), (1,2), (0,3), ...  DIMACS uses the classic ``p edge n m``
header with 1-based ``e u v`` lines.  JSON is ``{"n": ..., "edges":
[[u, v], ...]}`` with 0-based endpoints.  Parsers fail loudly: malformed
headers, truncated payloads, and trailing garbage all raise
GraphFormatError rather than producing a best-effort graph.
"""

from __future__ import annotations

import json

from .errors import GraphFormatError
from .graph import Graph, from_edges

_G6_HEADER = ">>graph6<<"


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    elif n <= 68719476735:
        head = "~~" + "".join(
            chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    else:
        raise GraphFormatError(f"graph6 cannot encode n={n}")
    chunks = []
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                chunks.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        chunks.append(chr(acc + 63))
    return head + "".join(chunks)


def _g6_take_size(s: str) -> tuple[int, int]:
    """Decode the size prefix; returns (n, chars consumed)."""
    if s[0] != "~":
        return ord(s[0]) - 63, 1
    if len(s) >= 2 and s[1] == "~":
        if len(s) < 8:
            raise GraphFormatError("graph6 size prefix truncated")
        vals = [ord(c) - 63 for c in s[2:8]]
        n = 0
        for v in vals:
            n = (n << 6) | v
        return n, 8
    if len(s) < 4:
        raise GraphFormatError("graph6 size prefix truncated")
    vals = [ord(c) - 63 for c in s[1:4]]
    n = 0
    for v in vals:
        n = (n << 6) | v
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line; tolerates the optional >>graph6<< header."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):].lstrip()
    if not s:
        raise GraphFormatError("empty graph6 string")
    for ch in s:
        if not (63 <= ord(ch) <= 126):
            raise GraphFormatError(f"invalid graph6 character {ch!r}")
    n, used = _g6_take_size(s)
    payload = s[used:]
    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    if len(payload) < want:
        raise GraphFormatError(
            f"graph6 payload truncated: need {want} characters, got {len(payload)}")
    if len(payload) > want:
        raise GraphFormatError(
            f"trailing garbage after graph6 payload: {payload[want:]!r}")
    rows = [0] * n
    idx = 0
    for ch in payload:
        val = ord(ch) - 63
        for k in range(5, -1, -1):
            bit = (val >> k) & 1
            if idx < nbits:
                if bit:
                    i, j = _g6_cell(idx)
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            elif bit:
                raise GraphFormatError("nonzero padding bits in graph6 payload")
            idx += 1
    return Graph(n, tuple(rows))


def _g6_cell(idx: int) -> tuple[int, int]:
    """Map a flat upper-triangle bit index back to its (i, j) cell."""
    j = 1
    block = 0
    while block + j <= idx:
        block += j
        j += 1
    return idx - block, j


def parse_graph6_lines(text: str) -> list[Graph]:
    """Parse a whole graph6 file: one graph per nonblank line."""
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


# ----------------------------------------------------------------------
# DIMACS


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.num_edges}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate header")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise GraphFormatError(
                    f"line {lineno}: expected 'p edge n m', got {line!r}")
            try:
                n = int(tokens[2])
                int(tokens[3])
            except ValueError as exc:
                raise GraphFormatError(
                    f"line {lineno}: non-integer header field") from exc
            if n < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count")
        elif tokens[0] == "e":
            if n is None:
                raise GraphFormatError(
                    f"line {lineno}: edge before 'p edge' header")
            if len(tokens) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'e u v'")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError as exc:
                raise GraphFormatError(
                    f"line {lineno}: non-integer endpoint") from exc
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise GraphFormatError(
                    f"line {lineno}: endpoint out of range ({u}, {v}) for n={n}")
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop at {u}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(
                f"line {lineno}: unexpected line type {tokens[0]!r}")
    if n is None:
        raise GraphFormatError("missing 'p edge n m' header")
    return from_edges(n, edges)


# ----------------------------------------------------------------------
# JSON


def graph_to_json_obj(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def to_json(g: Graph) -> str:
    return json.dumps(graph_to_json_obj(g))


def graph_from_json_obj(obj) -> Graph:
    if not isinstance(obj, dict):
        raise GraphFormatError("graph JSON must be an object")
    if "n" not in obj or "edges" not in obj:
        raise GraphFormatError("graph JSON needs 'n' and 'edges' fields")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphFormatError("'n' must be an integer")
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise GraphFormatError("'edges' must be a list of pairs")
    pairs = []
    for e in edges:
        if (not isinstance(e, (list, tuple)) or len(e) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise GraphFormatError(f"bad edge entry {e!r}")
        pairs.append((e[0], e[1]))
    try:
        return from_edges(n, pairs)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def parse_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    return graph_from_json_obj(obj)
