"""Permutation groups with an explicit stabilizer chain.

A permutation of ``0..d-1`` is a tuple ``p`` with ``p[v]`` the image of ``v``.
``compose(p, q)`` applies ``q`` first, then ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import prod
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    return tuple(p[v] for v in q)


def invert(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for v, pv in enumerate(p):
        inv[pv] = v
    return tuple(inv)


def is_identity(p: Sequence[int]) -> bool:
    return all(v == pv for v, pv in enumerate(p))


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def orbit(point: int, generators: Iterable[Sequence[int]]) -> list[int]:
    gens = list(generators)
    seen = {point}
    frontier = [point]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = g[v]
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return sorted(seen)


def orbit_partition(degree: int, generators: Iterable[Sequence[int]]) -> list[int]:
    """Label every point with the smallest point of its orbit."""
    gens = list(generators)
    label = [-1] * degree
    for v in range(degree):
        if label[v] < 0:
            for w in orbit(v, gens):
                label[w] = v
    return label


def transversal(point: int, generators: Sequence[Perm], degree: int) -> dict[int, Perm]:
    """Map each orbit point ``q`` to a group element sending ``point`` to ``q``."""
    reps = {point: identity(degree)}
    frontier = [point]
    while frontier:
        nxt = []
        for v in frontier:
            u = reps[v]
            for g in generators:
                w = g[v]
                if w not in reps:
                    reps[w] = compose(g, u)
                    nxt.append(w)
        frontier = nxt
    return reps


@dataclass(frozen=True)
class PermGroup:
    """Group given by generators and a base with strong generating set.

    ``strong_generators[k]`` generates the pointwise stabilizer of
    ``base[:k]``; ``transversals[k]`` is the orbit of ``base[k]`` under it.
    """

    degree: int
    generators: tuple[Perm, ...]
    base: tuple[int, ...]
    strong_generators: tuple[tuple[Perm, ...], ...]
    transversals: tuple[dict[int, Perm], ...] = field(repr=False)

    @classmethod
    def from_chain(
        cls, degree: int, base: Sequence[int], strong: Sequence[Sequence[Perm]]
    ) -> PermGroup:
        strong = tuple(tuple(level) for level in strong)
        trans = tuple(transversal(b, s, degree) for b, s in zip(base, strong))
        gens = strong[0] if strong else ()
        return cls(degree, gens, tuple(base), strong, trans)

    @classmethod
    def from_generators(
        cls, degree: int, generators: Iterable[Sequence[int]], base_prefix: Sequence[int] = ()
    ) -> PermGroup:
        gens = tuple(tuple(g) for g in generators if not is_identity(g))
        for g in gens:
            if len(g) != degree or not is_permutation(g):
                raise ValueError("generator is not a permutation of the right degree")
        base, strong = _schreier_sims(degree, gens, list(base_prefix))
        group = cls.from_chain(degree, base, strong)
        return cls(degree, gens, group.base, group.strong_generators, group.transversals)

    def order(self) -> int:
        return prod(len(t) for t in self.transversals)

    def orbit(self, v: int) -> list[int]:
        return orbit(v, self.generators)

    def point_stabilizer_order(self, v: int) -> int:
        if self.base and self.base[0] == v:
            return self.order() // len(self.transversals[0])
        return self.order() // len(self.orbit(v))

    def rebase(self, base_prefix: Sequence[int]) -> PermGroup:
        return PermGroup.from_generators(self.degree, self.generators, base_prefix)

    def sift(self, p: Sequence[int]) -> tuple[Perm, int]:
        h = tuple(p)
        for k, (b, reps) in enumerate(zip(self.base, self.transversals)):
            u = reps.get(h[b])
            if u is None:
                return h, k
            h = compose(invert(u), h)
        return h, len(self.base)

    def __contains__(self, p: Sequence[int]) -> bool:
        h, _ = self.sift(p)
        return is_identity(h)

    def elements(self) -> Iterator[Perm]:
        """Every element once, as products of transversal representatives."""
        levels = [list(t.values()) for t in self.transversals]
        for reps in product(*levels):
            g = identity(self.degree)
            for u in reps:  # u_0 . u_1 . ... . u_k, deepest level applied first
                g = compose(g, u)
            yield g


def _schreier_sims(
    degree: int, gens: tuple[Perm, ...], base: list[int]
) -> tuple[list[int], list[list[Perm]]]:
    def moved_point(g: Perm) -> int:
        return next(v for v in range(degree) if g[v] != v)

    for g in gens:
        if all(g[b] == b for b in base):
            base.append(moved_point(g))
    strong = [[g for g in gens if all(g[b] == b for b in base[:k])] for k in range(len(base))]
    trans = [transversal(b, s, degree) for b, s in zip(base, strong)]

    def sift_from(h: Perm, start: int) -> tuple[Perm, int]:
        for k in range(start, len(base)):
            u = trans[k].get(h[base[k]])
            if u is None:
                return h, k
            h = compose(invert(u), h)
        return h, len(base)

    i = len(base) - 1
    while i >= 0:
        complete = True
        for b, u_b in list(trans[i].items()):
            for s in strong[i]:
                sb = s[b]
                schreier = compose(invert(trans[i][sb]), compose(s, u_b))
                if is_identity(schreier):
                    continue
                h, j = sift_from(schreier, i + 1)
                if is_identity(h):
                    continue
                if j == len(base):
                    base.append(moved_point(h))
                    strong.append([])
                    trans.append({})
                for level in range(i + 1, j + 1):
                    strong[level].append(h)
                    trans[level] = transversal(base[level], strong[level], degree)
                i = j
                complete = False
                break
            if not complete:
                break
        if complete:
            i -= 1
    return base, strong
