"""graph6, DOT and JSON serialisation."""

from __future__ import annotations

from typing import Any

from htgaut.graph import Graph, build_graph
from htgaut.htg import ColoredHtg

GRAPH6_HEADER = ">>graph6<<"


def _encode_size(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    if n <= 68719476735:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise ValueError(f"graph6 cannot encode {n} vertices")


def to_graph6(g: Graph, header: bool = False) -> str:
    """graph6 string: size header, then the upper triangle column by column."""
    edges = g.edge_set
    bits = [
        1 if (i, j) in edges else 0 for j in range(1, g.order) for i in range(j)
    ]
    bits.extend([0] * (-len(bits) % 6))
    groups = [
        int("".join(map(str, bits[k : k + 6])), 2) for k in range(0, len(bits), 6)
    ]
    body = "".join(chr(v + 63) for v in _encode_size(g.order) + groups)
    return GRAPH6_HEADER + body if header else body


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= v <= 63 for v in data):
        raise ValueError("invalid graph6 character")
    if data[:2] == [63, 63]:
        n = 0
        for v in data[2:8]:
            n = (n << 6) | v
        data = data[8:]
    elif data[:1] == [63]:
        n = 0
        for v in data[1:4]:
            n = (n << 6) | v
        data = data[4:]
    else:
        n, data = data[0], data[1:]
    need = n * (n - 1) // 2
    if len(data) != -(-need // 6):
        raise ValueError(f"graph6 body has {len(data)} bytes, expected {-(-need // 6)}")
    bits = [(v >> s) & 1 for v in data for s in range(5, -1, -1)]
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def to_dot(htg: ColoredHtg, name: str | None = None) -> str:
    title = name or (str(htg.params) if htg.params else "G")
    lines = [f'graph "{title}" {{']
    for (u, v), c in sorted(htg.colors.items()):
        lines.append(f"  {u} -- {v} [color={c.value}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(htg: ColoredHtg) -> dict[str, Any]:
    p = htg.params
    return {
        "params": None if p is None else {"m": p.m, "n": p.n, "ell": p.ell},
        "order": htg.graph.order,
        "adjacency": [list(a) for a in htg.graph.adjacency],
        "edges": [[u, v, c.value] for (u, v), c in sorted(htg.colors.items())],
        "labels": [[g.j, g.i, g.eps] for g in htg.elements],
    }
