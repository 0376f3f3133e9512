"""Simple undirected graphs and the structural queries used throughout."""

from __future__ import annotations

import math
from array import array
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from htgaut.errors import (
    DuplicateEdgeError,
    IndexOutOfRangeError,
    NotAnEdgeError,
    SelfLoopError,
)

INFINITY = math.inf
MAX_CYCLE_LENGTH = 12

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..order-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.
    """

    order: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.order:
            raise IndexOutOfRangeError("adjacency length differs from order")
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if v not in self.adjacency[u]:
                    raise ValueError(f"asymmetric adjacency at {v}-{u}")

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((u, v) for u in range(self.order) for v in self.adjacency[u] if u < v)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def csr(self) -> tuple[array, array]:
        """Compressed adjacency ``(offsets, neighbours)`` as C int arrays."""
        offsets = array("i", [0])
        nbrs = array("i")
        for adj in self.adjacency:
            nbrs.extend(adj)
            offsets.append(len(nbrs))
        return offsets, nbrs

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edge_set

    def __len__(self) -> int:
        return self.order


def build_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph, rejecting loops, repeated edges and bad indices."""
    adj: list[set[int]] = [set() for _ in range(order)]
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise IndexOutOfRangeError(f"edge {{{u},{v}}} outside 0..{order - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if v in adj[u]:
            raise DuplicateEdgeError(f"duplicate edge {{{u},{v}}}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(order, tuple(tuple(sorted(a)) for a in adj))


def girth(g: Graph) -> float:
    """Length of a shortest cycle (``math.inf`` for forests).

    BFS from every vertex; a non-tree edge closing at depths ``d(u), d(w)``
    witnesses a closed walk of length ``d(u) + d(w) + 1`` through the root, and
    the minimum over all roots is the girth.
    """
    best = INFINITY
    adj = g.adjacency
    for root in range(g.order):
        dist = [-1] * g.order
        parent = [-1] * g.order
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    seen = [False] * g.order
    seen[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    return all(seen)


def bipartition(g: Graph) -> list[int] | None:
    """Return a proper 2-colouring as a list of 0/1, or None if not bipartite."""
    side = [-1] * g.order
    for start in range(g.order):
        if side[start] >= 0:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def structural_profile(g: Graph) -> dict[str, bool]:
    return {
        "is_cubic": all(len(a) == 3 for a in g.adjacency),
        "is_connected": is_connected(g),
        "is_bipartite": bipartition(g) is not None,
    }


def _canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    # rotate to the smallest vertex, then pick the lexicographically smaller direction
    k = cycle.index(min(cycle))
    fwd = cycle[k:] + cycle[:k]
    rev = [fwd[0]] + fwd[:0:-1]
    return tuple(min(fwd, rev))


def cycles_through_edge(g: Graph, e: tuple[int, int], length: int) -> int:
    """Number of distinct cycles of exactly ``length`` edges containing ``e``."""
    u, v = e
    if not g.has_edge(u, v):
        raise NotAnEdgeError(f"{{{u},{v}}} is not an edge")
    if length > MAX_CYCLE_LENGTH:
        raise ValueError(f"cycle length {length} exceeds guard {MAX_CYCLE_LENGTH}")
    if length < 3:
        return 0
    found: set[tuple[int, ...]] = set()
    path = [u, v]
    on_path = {u, v}

    def extend() -> None:
        last = path[-1]
        if len(path) == length:
            if u in g.adjacency[last]:
                found.add(_canonical_cycle(path))
            return
        for w in g.adjacency[last]:
            if w not in on_path:
                path.append(w)
                on_path.add(w)
                extend()
                on_path.discard(w)
                path.pop()

    extend()
    return len(found)
