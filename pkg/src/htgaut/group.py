"""Arithmetic in the generalized dihedral group behind HTG(m, n, l).

The group is generated by ``t, x, y`` subject to ``t^2 = x^(n/2) = 1``,
``y^m = x^((l+m)/2)``, ``xy = yx`` and ``t`` inverting both ``x`` and ``y``.
Every element has a unique normal form ``x^j y^i t^eps`` with
``0 <= j < n/2``, ``0 <= i < m`` and ``eps`` in ``{0, 1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator

if TYPE_CHECKING:
    from htgaut.htg import ColoredHtg, HtgParams


@dataclass(frozen=True)
class GroupSpec:
    m: int
    half_n: int
    carry: int

    def __post_init__(self) -> None:
        if self.half_n < 2 or self.m < 1 or not 0 <= self.carry < self.half_n:
            raise ValueError(f"invalid group spec {self}")

    @property
    def order(self) -> int:
        return 2 * self.m * self.half_n

    def elements(self) -> Iterator[GroupElement]:
        """All elements, ordered by ``(eps, i, j)``."""
        for eps in (0, 1):
            for i in range(self.m):
                for j in range(self.half_n):
                    yield GroupElement(j, i, eps)

    def reduce(self, j: int, i: int, eps: int) -> GroupElement:
        """Normal form of ``x^j y^i t^eps`` for arbitrary integer exponents."""
        q, r = divmod(i, self.m)
        return GroupElement((j + self.carry * q) % self.half_n, r, eps % 2)


@dataclass(frozen=True, order=True)
class GroupElement:
    j: int
    i: int
    eps: int


IDENTITY = GroupElement(0, 0, 0)
T = GroupElement(0, 0, 1)


def group_spec(params: HtgParams) -> GroupSpec:
    half_n = params.n // 2
    return GroupSpec(params.m, half_n, ((params.ell + params.m) // 2) % half_n)


def multiply(spec: GroupSpec, a: GroupElement, b: GroupElement) -> GroupElement:
    # t x^j y^i = x^-j y^-i t, so a's t-part inverts b's abelian part
    if a.eps:
        return spec.reduce(a.j - b.j, a.i - b.i, 1 + b.eps)
    return spec.reduce(a.j + b.j, a.i + b.i, b.eps)


def inverse(spec: GroupSpec, a: GroupElement) -> GroupElement:
    if a.eps:
        return a  # every element outside <x, y> is an involution
    return spec.reduce(-a.j, -a.i, 0)


def power(spec: GroupSpec, a: GroupElement, k: int) -> GroupElement:
    result = IDENTITY
    base = a if k >= 0 else inverse(spec, a)
    for _ in range(abs(k)):
        result = multiply(spec, result, base)
    return result


def element_order(spec: GroupSpec, a: GroupElement) -> int:
    k, cur = 1, a
    while cur != IDENTITY:
        cur = multiply(spec, cur, a)
        k += 1
    return k


def generators(spec: GroupSpec) -> tuple[GroupElement, GroupElement, GroupElement]:
    """The connection set ``(t, tx, ty)`` in normal form."""
    x = spec.reduce(1, 0, 0)
    y = spec.reduce(0, 1, 0)
    return T, multiply(spec, T, x), multiply(spec, T, y)


def cayley_colored_graph(spec: GroupSpec, params: HtgParams | None = None) -> ColoredHtg:
    """Cay(G; {t, tx, ty}) with red/blue/green edges for t/tx/ty.

    Vertices are numbered by the order of :meth:`GroupSpec.elements`.
    """
    from htgaut.errors import DuplicateEdgeError
    from htgaut.graph import build_graph
    from htgaut.htg import Color, ColoredHtg

    elements = tuple(spec.elements())
    index = {g: k for k, g in enumerate(elements)}
    colors = {}
    edges = []
    for color, s in zip(Color, generators(spec)):
        for g in elements:
            u, v = index[g], index[multiply(spec, g, s)]
            key = (u, v) if u < v else (v, u)
            if key not in colors:
                colors[key] = color
                edges.append(key)
            elif colors[key] is not color:
                raise DuplicateEdgeError(f"generators {colors[key].name} and {color.name} share an edge")
    return ColoredHtg(build_graph(len(elements), edges), colors, elements, params)
