"""Honeycomb toroidal graphs HTG(m, n, l): parameters, construction, colouring."""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from functools import cached_property
from math import gcd

from htgaut import group as grp
from htgaut.errors import (
    DegenerateMultigraphError,
    EllRangeError,
    NOddError,
    NotNormalFormError,
    NTooSmallError,
    ParamError,
    ParityMismatchError,
)
from htgaut.graph import Edge, Graph, build_graph, edge_key
from htgaut.group import GroupElement, GroupSpec

log = logging.getLogger(__name__)


class Color(enum.Enum):
    RED = "red"  # g ~ gt
    BLUE = "blue"  # g ~ gtx
    GREEN = "green"  # g ~ gty


@dataclass(frozen=True, order=True)
class HtgParams:
    m: int
    n: int
    ell: int

    @property
    def order(self) -> int:
        return self.m * self.n

    @property
    def is_normal(self) -> bool:
        return self.ell <= self.n // 2

    def __str__(self) -> str:
        return f"HTG({self.m},{self.n},{self.ell})"


def validate_params(m: int, n: int, ell: int) -> HtgParams:
    if n % 2:
        raise NOddError(f"n={n} must be even")
    if n < 4:
        raise NTooSmallError(f"n={n} must be at least 4")
    if m < 1:
        raise ParamError(f"m={m} must be positive")
    if not 0 <= ell <= n - 1:
        raise EllRangeError(f"l={ell} outside 0..{n - 1}")
    if (ell - m) % 2:
        raise ParityMismatchError(f"l={ell} and m={m} differ in parity")
    if m == 1 and ell in (1, n - 1):
        # the wrap chord <0,j>~<0,j+l> would repeat a cycle edge
        raise DegenerateMultigraphError(f"HTG(1,{n},{ell}) is a multigraph")
    return HtgParams(m, n, ell)


def normal_form(p: HtgParams) -> HtgParams:
    if p.is_normal:
        return p
    q = HtgParams(p.m, p.n, p.n - p.ell)
    log.info("normalised %s to %s", p, q)
    return q


def raw_edges(m: int, n: int, ell: int) -> list[Edge]:
    """Edge list of the three adjacency rules, without any simplicity check.

    Vertex <i, j> has index ``i * n + j``.
    """
    edges = []
    for i in range(m):
        for j in range(n):
            edges.append(edge_key(i * n + j, i * n + (j + 1) % n))
            if i != m - 1 and (i - j) % 2:
                edges.append(edge_key(i * n + j, (i + 1) * n + j))
            # wrap rule ranges over j in Z_n (reading Z_m there leaves vertices of degree 2)
            if i == m - 1 and (j - m) % 2 == 0:
                edges.append(edge_key(i * n + j, (j + ell) % n))
    return edges


@dataclass(frozen=True, eq=False)
class ColoredHtg:
    """A cubic graph with a proper 3-edge-colouring and group labels.

    ``elements[v]`` is the group element of vertex ``v``; ``colors`` maps each
    edge (as a sorted pair) to its colour.
    """

    graph: Graph
    colors: dict[Edge, Color]
    elements: tuple[GroupElement, ...]
    params: HtgParams | None = None

    @cached_property
    def vertex_of(self) -> dict[GroupElement, int]:
        return {g: v for v, g in enumerate(self.elements)}

    def color(self, u: int, v: int) -> Color:
        return self.colors[edge_key(u, v)]

    @cached_property
    def color_classes(self) -> dict[Color, frozenset[Edge]]:
        classes: dict[Color, set[Edge]] = {c: set() for c in Color}
        for e, c in self.colors.items():
            classes[c].add(e)
        return {c: frozenset(s) for c, s in classes.items()}

    def neighbor(self, v: int, color: Color) -> int:
        for w in self.graph.adjacency[v]:
            if self.color(v, w) is color:
                return w
        raise KeyError(f"vertex {v} has no {color.value} edge")


def vertex_element(p: HtgParams, v: int) -> GroupElement:
    """Group element of vertex ``<i, (i + 2j + eps) mod n>``, i.e. ``x^j y^i t^eps``."""
    i, c = divmod(v, p.n)
    d = (c - i) % p.n
    return GroupElement(d // 2, i, d % 2)


def build_htg(p: HtgParams, check: bool = True) -> ColoredHtg:
    graph = build_graph(p.order, raw_edges(p.m, p.n, p.ell))
    spec = grp.group_spec(p)
    elements = tuple(vertex_element(p, v) for v in range(p.order))
    t, tx, ty = grp.generators(spec)
    color_of_gen = {t: Color.RED, tx: Color.BLUE, ty: Color.GREEN}
    colors = {}
    for u, v in graph.edges:
        s = grp.multiply(spec, grp.inverse(spec, elements[u]), elements[v])
        if s not in color_of_gen:
            raise AssertionError(f"{p}: edge {u}-{v} is not a Cayley edge ({s})")
        colors[(u, v)] = color_of_gen[s]
    htg = ColoredHtg(graph, colors, elements, p)
    if check:
        _check_against_cayley(htg, spec)
    return htg


def _check_against_cayley(htg: ColoredHtg, spec: GroupSpec) -> None:
    cay = grp.cayley_colored_graph(spec)
    where = htg.vertex_of
    mapped = {}
    for (a, b), c in cay.colors.items():
        mapped[edge_key(where[cay.elements[a]], where[cay.elements[b]])] = c
    if mapped != htg.colors:
        raise AssertionError(f"{htg.params}: construction differs from the Cayley graph")


def girth_by_parameters(p: HtgParams) -> int:
    if not p.is_normal:
        raise NotNormalFormError(f"{p} is not in normal form")
    m, n, ell = p.m, p.n, p.ell
    if (
        n == 4
        or (m == 1 and n >= 6 and ell == 3)
        or (m == 1 and n >= 6 and n % 4 == 2 and ell == n // 2)
        or (m == 1 and n >= 8 and n % 4 == 0 and ell == (n - 2) // 2)
        or (m == 2 and n >= 6 and ell in (0, 2))
    ):
        return 4
    return 6


def color_cycle_lengths(p: HtgParams) -> tuple[int, int, int]:
    """Cycle lengths of the red-blue, red-green and blue-green subgraphs."""
    m, n, ell = p.m, p.n, p.ell
    return (
        n,
        2 * m * n // gcd(n, (ell + m) % n),
        2 * m * n // gcd(n, (ell - m) % n),
    )
