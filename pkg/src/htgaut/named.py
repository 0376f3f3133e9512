"""Named cubic graphs and recognition of the exceptional HTG triples."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from htgaut.errors import BadParameterError, NotNormalFormError
from htgaut.graph import Graph, build_graph
from htgaut.htg import HtgParams


class Kind(enum.Enum):
    GPR = "GPr"
    WREATH = "W"
    PRISM = "Pr"
    MOEBIUS_LADDER = "Ml"
    K33 = "K33"
    CUBE = "Cube"
    HEAWOOD = "Heawood"
    PAPPUS = "Pappus"
    MOEBIUS_KANTOR = "MoebiusKantor"


# K_{3,3}: parts {0,1,2} and {3,4,5}
K33_EDGES = [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]

# Q3 on 3-bit words, adjacent when differing in one bit
CUBE_EDGES = [
    (0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3),
    (2, 6), (3, 7), (4, 5), (4, 6), (5, 7), (6, 7),
]  # fmt: skip

# incidence graph of the Fano plane, LCF [5,-5]^7
HEAWOOD_EDGES = [
    (0, 1), (0, 5), (0, 13), (1, 2), (1, 10), (2, 3), (2, 7),
    (3, 4), (3, 12), (4, 5), (4, 9), (5, 6), (6, 7), (6, 11),
    (7, 8), (8, 9), (8, 13), (9, 10), (10, 11), (11, 12), (12, 13),
]  # fmt: skip

# Levi graph of the Pappus configuration, LCF [5,7,-7,7,-7,-5]^3
PAPPUS_EDGES = [
    (0, 1), (0, 5), (0, 17), (1, 2), (1, 8), (2, 3), (2, 13), (3, 4), (3, 10),
    (4, 5), (4, 15), (5, 6), (6, 7), (6, 11), (7, 8), (7, 14), (8, 9), (9, 10),
    (9, 16), (10, 11), (11, 12), (12, 13), (12, 17), (13, 14), (14, 15), (15, 16),
    (16, 17),
]  # fmt: skip

# generalized Petersen graph GP(8,3): outer rim 0..7, spokes i~i+8, inner i~i+3
MOEBIUS_KANTOR_EDGES = [
    (0, 1), (0, 7), (0, 8), (1, 2), (1, 9), (2, 3), (2, 10), (3, 4),
    (3, 11), (4, 5), (4, 12), (5, 6), (5, 13), (6, 7), (6, 14), (7, 15),
    (8, 11), (8, 13), (9, 12), (9, 14), (10, 13), (10, 15), (11, 14), (12, 15),
]  # fmt: skip

_SPORADIC = {
    Kind.K33: (6, K33_EDGES),
    Kind.CUBE: (8, CUBE_EDGES),
    Kind.HEAWOOD: (14, HEAWOOD_EDGES),
    Kind.PAPPUS: (18, PAPPUS_EDGES),
    Kind.MOEBIUS_KANTOR: (16, MOEBIUS_KANTOR_EDGES),
}

# s for which each sporadic exceptional graph is s-arc-regular
ARC_REGULARITY = {Kind.K33: 3, Kind.CUBE: 2, Kind.HEAWOOD: 4, Kind.MOEBIUS_KANTOR: 2, Kind.PAPPUS: 3}

_MIN_PARAMETER = {Kind.GPR: 2, Kind.WREATH: 3, Kind.PRISM: 3, Kind.MOEBIUS_LADDER: 3}


def _circulant_pairs(width: int, length: int, connections) -> list[tuple[int, int]]:
    # vertices (i, j) of Z_width x Z_length, index i * length + j
    edges = set()
    for i in range(width):
        for j in range(length):
            for di, dj in connections(i, j):
                u, v = i * length + j, ((i + di) % width) * length + (j + dj) % length
                edges.add((min(u, v), max(u, v)))
    return sorted(edges)


def generalized_prism(k: int) -> Graph:
    """GPr(k) on Z_2 x Z_2k: (i,j)~(i,j+-1), and (i,j)~(i+1,j+1) for even j."""
    return build_graph(
        4 * k,
        _circulant_pairs(2, 2 * k, lambda i, j: [(0, 1)] + ([(1, 1)] if j % 2 == 0 else [])),
    )


def named(kind: Kind | str, parameter: int | None = None) -> Graph:
    kind = Kind(kind)
    if kind in _SPORADIC:
        order, edges = _SPORADIC[kind]
        return build_graph(order, edges)
    if parameter is None or parameter < _MIN_PARAMETER[kind]:
        raise BadParameterError(f"{kind.value} needs parameter >= {_MIN_PARAMETER[kind]}")
    k = parameter
    if kind is Kind.GPR:
        return generalized_prism(k)
    if kind is Kind.WREATH:
        return build_graph(2 * k, _circulant_pairs(2, k, lambda i, j: [(0, 1), (1, 1), (1, -1)]))
    if kind is Kind.PRISM:
        return build_graph(2 * k, _circulant_pairs(2, k, lambda i, j: [(0, 1), (1, 0)]))
    # Moebius ladder: Cay(Z_2k; {+-1, k})
    edges = {(min(v, (v + d) % (2 * k)), max(v, (v + d) % (2 * k))) for v in range(2 * k) for d in (1, k)}
    return build_graph(2 * k, sorted(edges))


@dataclass(frozen=True)
class ExceptionalId:
    kind: Kind
    gpr_n: int | None = None

    @property
    def s_arc_regular(self) -> int | None:
        return ARC_REGULARITY.get(self.kind)

    @property
    def stabilizer_order(self) -> int:
        if self.kind is Kind.GPR:
            return 2 ** (self.gpr_n - 1)
        return 3 * 2 ** (self.s_arc_regular - 1)

    @property
    def name(self) -> str:
        if self.kind is Kind.GPR:
            return f"GPr({self.gpr_n})"
        return self.kind.value

    def graph(self) -> Graph:
        return named(self.kind, self.gpr_n)

    def __str__(self) -> str:
        return self.name


_SPORADIC_TRIPLES = {
    (1, 6, 3): Kind.K33,
    (2, 4, 0): Kind.CUBE,
    (2, 4, 2): Kind.CUBE,
    (1, 8, 3): Kind.CUBE,
    (1, 14, 5): Kind.HEAWOOD,
    (1, 16, 5): Kind.MOEBIUS_KANTOR,
    (2, 8, 4): Kind.MOEBIUS_KANTOR,
    (3, 6, 3): Kind.PAPPUS,
}


def recognize_exceptional(p: HtgParams) -> ExceptionalId | None:
    """Exceptional-list entry for a normal-form triple, or None."""
    if not p.is_normal:
        raise NotNormalFormError(f"{p} is not in normal form")
    m, n, ell = p.m, p.n, p.ell
    kind = _SPORADIC_TRIPLES.get((m, n, ell))
    if kind is not None:
        return ExceptionalId(kind)
    if (m * n) % 4 == 0 and m * n // 4 > 2:
        k = m * n // 4
        if n == 4 or (m == 1 and n == 4 * k and ell == 2 * k - 1) or (m == 2 and ell == 2):
            return ExceptionalId(Kind.GPR, k)
    return None


def exceptional_candidates(order: int) -> list[ExceptionalId]:
    """Every exceptional graph with ``order`` vertices."""
    found = [ExceptionalId(k) for k, (size, _) in _SPORADIC.items() if size == order]
    if order % 4 == 0 and order // 4 > 2:
        found.append(ExceptionalId(Kind.GPR, order // 4))
    return found
