"""Automorphism classification of HTG(m, n, l) from its parameters alone.

A triple on the exceptional list is classified by that list. Otherwise the
graph is a normal Cayley graph, its automorphism group is the left regular
group extended by the colour-permuting group automorphisms, and the four
arithmetic conditions decide which permutations of the colours occur.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Iterator

import numpy as np

from htgaut import group as grp
from htgaut.htg import Color, HtgParams, girth_by_parameters, normal_form
from htgaut.named import ExceptionalId, recognize_exceptional


class Category(enum.Enum):
    EXCEPTIONAL = "Exceptional"
    TWO_ARC_REGULAR = "TwoArcRegular"
    ONE_ARC_REGULAR = "OneArcRegular"
    STABILIZER_TWO = "StabilizerTwo"
    REGULAR = "RegularAut"


class ColorGroup(enum.Enum):
    TRIVIAL = "Trivial"
    SWAP_FIX_RED = "SwapFixRed"
    SWAP_FIX_BLUE = "SwapFixBlue"
    SWAP_FIX_GREEN = "SwapFixGreen"
    CYCLIC3 = "Cyclic3"
    SYM3 = "Sym3"

    @property
    def order(self) -> int:
        return {"Trivial": 1, "Cyclic3": 3, "Sym3": 6}.get(self.value, 2)


@dataclass(frozen=True)
class ConditionFlags:
    c1: bool
    c2: bool
    c3: bool
    c4: bool

    def count(self) -> int:
        return self.c1 + self.c2 + self.c3 + self.c4

    def as_tuple(self) -> tuple[bool, bool, bool, bool]:
        return (self.c1, self.c2, self.c3, self.c4)


def _gcd_plus(p: HtgParams) -> int:
    return gcd(p.n, (p.ell + p.m) % p.n)


def _gcd_minus(p: HtgParams) -> int:
    return gcd(p.n, (p.ell - p.m) % p.n)


def condition(p: HtgParams, which: str) -> bool:
    """Arithmetic condition c1..c4 on the triple as given (no normalisation)."""
    m, n, ell = p.m, p.n, p.ell
    mod = 2 * m * n
    if which == "c1":
        return _gcd_plus(p) == 2 * m and (ell * ell + 2 * m * ell - 3 * m * m) % mod == 0
    if which == "c2":
        return _gcd_minus(p) == 2 * m and (ell * ell - 2 * m * ell - 3 * m * m) % mod == 0
    if which == "c3":
        return ell in (0, n // 2)
    if which == "c4":
        return (
            _gcd_plus(p) == 2 * m == _gcd_minus(p) and (ell * ell + 3 * m * m) % mod == 0
        )
    raise ValueError(f"unknown condition {which!r}")


def condition_flags(p: HtgParams) -> ConditionFlags:
    return ConditionFlags(*(condition(p, c) for c in ("c1", "c2", "c3", "c4")))


def color_aut_subgroup(p: HtgParams) -> ColorGroup:
    f = condition_flags(p)
    if f.count() == 4:
        return ColorGroup.SYM3
    if f.count() == 0:
        return ColorGroup.TRIVIAL
    if f.count() > 1:
        raise AssertionError(f"{p}: flags {f.as_tuple()} do not describe a subgroup of S3")
    if f.c4:
        return ColorGroup.CYCLIC3
    return (ColorGroup.SWAP_FIX_RED, ColorGroup.SWAP_FIX_BLUE, ColorGroup.SWAP_FIX_GREEN)[
        f.as_tuple().index(True)
    ]


# colour permutation -> condition guaranteeing it extends to a group automorphism
_SIGMA_CONDITION = {
    (Color.RED, Color.GREEN, Color.BLUE): "c1",
    (Color.GREEN, Color.BLUE, Color.RED): "c2",
    (Color.BLUE, Color.RED, Color.GREEN): "c3",
    (Color.BLUE, Color.GREEN, Color.RED): "c4",
    (Color.GREEN, Color.RED, Color.BLUE): "c4",
}


def color_map(
    p: HtgParams, sigma: dict[Color, Color]
) -> tuple[dict[grp.GroupElement, grp.GroupElement], grp.GroupSpec]:
    """The map x^j y^i t^e -> X^j Y^i T^e where T, TX, TY are the generators
    of colours sigma(red), sigma(blue), sigma(green).

    It is a group automorphism exactly when the images satisfy the defining
    relations; no check is made here.
    """
    spec = grp.group_spec(p)
    gens = dict(zip(Color, grp.generators(spec)))
    t_img, tx_img, ty_img = (gens[sigma[c]] for c in Color)
    x_img = grp.multiply(spec, t_img, tx_img)
    y_img = grp.multiply(spec, t_img, ty_img)
    x_pows, y_pows = [grp.IDENTITY], [grp.IDENTITY]
    for _ in range(spec.half_n - 1):
        x_pows.append(grp.multiply(spec, x_pows[-1], x_img))
    for _ in range(spec.m - 1):
        y_pows.append(grp.multiply(spec, y_pows[-1], y_img))
    mapping = {}
    for g in spec.elements():
        img = grp.multiply(spec, x_pows[g.j], y_pows[g.i])
        if g.eps:
            img = grp.multiply(spec, img, t_img)
        mapping[g] = img
    return mapping, spec


def color_automorphism(p: HtgParams, sigma: dict[Color, Color]) -> tuple[int, ...] | None:
    """Vertex permutation of build_htg(p) realising colour permutation ``sigma``
    and fixing the identity vertex, or None when no such automorphism exists."""
    from htgaut.htg import build_htg, vertex_element

    key = tuple(sigma[c] for c in Color)
    if key == tuple(Color):
        return tuple(range(p.order))
    which = _SIGMA_CONDITION.get(key)
    if which is None:
        raise ValueError(f"not a permutation of the colours: {sigma}")
    if not condition(p, which):
        return None
    mapping, _ = color_map(p, sigma)
    htg = build_htg(p, check=False)
    where = htg.vertex_of
    perm = tuple(where[mapping[vertex_element(p, v)]] for v in range(p.order))
    for (u, v), c in htg.colors.items():
        if htg.color(perm[u], perm[v]) is not sigma[c]:
            raise AssertionError(f"{p}: colour map for {which} is not an automorphism")
    return perm


@dataclass(frozen=True)
class ClassificationResult:
    params: HtgParams
    girth: int
    category: Category
    flags: ConditionFlags
    predicted_aut_order: int
    predicted_stabilizer: int
    is_normal_cayley: bool
    exceptional: ExceptionalId | None = None

    @property
    def arc_transitive_up_to(self) -> int:
        """Largest s with s-arc-transitivity (0: vertex- but not arc-transitive)."""
        if self.exceptional is not None:
            return self.exceptional.s_arc_regular or 0
        return {
            Category.TWO_ARC_REGULAR: 2,
            Category.ONE_ARC_REGULAR: 1,
        }.get(self.category, 0)

    @property
    def arc_regular_at(self) -> int | None:
        if self.exceptional is not None:
            return self.exceptional.s_arc_regular
        return {
            Category.TWO_ARC_REGULAR: 2,
            Category.ONE_ARC_REGULAR: 1,
            Category.REGULAR: 0,
        }.get(self.category)

    @property
    def label(self) -> str:
        if self.exceptional is not None:
            return f"Exceptional:{self.exceptional.name}"
        return self.category.value


_STABILIZER = {
    Category.TWO_ARC_REGULAR: 6,
    Category.ONE_ARC_REGULAR: 3,
    Category.STABILIZER_TWO: 2,
    Category.REGULAR: 1,
}


def classify(p_raw: HtgParams) -> ClassificationResult:
    p = normal_form(p_raw)
    flags = condition_flags(p)
    girth = girth_by_parameters(p)
    exc = recognize_exceptional(p)
    if exc is not None:
        stab = exc.stabilizer_order
        # normal iff Aut equals G_L extended by the colour-permuting group automorphisms
        normal = stab == color_aut_subgroup(p).order
        return ClassificationResult(p, girth, Category.EXCEPTIONAL, flags, p.order * stab, stab, normal, exc)
    n_swaps = flags.c1 + flags.c2 + flags.c3
    if flags.count() >= 2:
        if flags.count() != 4:
            raise AssertionError(f"{p}: two conditions hold but not all four")
        category = Category.TWO_ARC_REGULAR
    elif flags.c4:
        category = Category.ONE_ARC_REGULAR
    elif n_swaps == 1:
        category = Category.STABILIZER_TWO
    else:
        category = Category.REGULAR
    stab = _STABILIZER[category]
    return ClassificationResult(p, girth, category, flags, p.order * stab, stab, True)


def normal_form_triples(max_order: int, min_order: int = 1) -> Iterator[HtgParams]:
    """Valid normal-form triples with min_order <= mn <= max_order, ordered by (mn, m, n, l)."""
    found = []
    for m in range(1, max_order // 4 + 1):
        for n in range(4, max_order // m + 1, 2):
            if m * n < min_order:
                continue
            for ell in range(m % 2, n // 2 + 1, 2):
                if m == 1 and ell == 1:
                    continue
                found.append((m * n, m, n, ell))
    for _, m, n, ell in sorted(found):
        yield HtgParams(m, n, ell)


def flag_sweep(max_order: int, normal_only: bool = False) -> dict[str, np.ndarray]:
    """Evaluate c1..c4 on every valid triple with mn <= max_order at once.

    Returns arrays ``m, n, ell, c1, c2, c3, c4`` of equal length.
    """
    ms, ns, ells = [], [], []
    for m in range(1, max_order // 4 + 1):
        n = np.arange(4, max_order // m + 1, 2, dtype=np.int64)
        if n.size == 0:
            continue
        top = n // 2 + 1 if normal_only else n
        width = int(top.max())
        ell = np.arange(m % 2, width, 2, dtype=np.int64)
        nn, ll = np.meshgrid(n, ell, indexing="ij")
        keep = ll < top[:, None]
        if m == 1:
            keep &= (ll != 1) & (ll != nn - 1)
        ms.append(np.full(int(keep.sum()), m, dtype=np.int64))
        ns.append(nn[keep])
        ells.append(ll[keep])
    m = np.concatenate(ms)
    n = np.concatenate(ns)
    ell = np.concatenate(ells)
    mod = 2 * m * n
    g_plus = np.gcd(n, (ell + m) % n)
    g_minus = np.gcd(n, (ell - m) % n)
    c1 = (g_plus == 2 * m) & ((ell * ell + 2 * m * ell - 3 * m * m) % mod == 0)
    c2 = (g_minus == 2 * m) & ((ell * ell - 2 * m * ell - 3 * m * m) % mod == 0)
    c3 = (ell == 0) | (ell == n // 2)
    c4 = (g_plus == 2 * m) & (g_minus == 2 * m) & ((ell * ell + 3 * m * m) % mod == 0)
    return {"m": m, "n": n, "ell": ell, "c1": c1, "c2": c2, "c3": c3, "c4": c4}


def left_regular_generators(p: HtgParams) -> list[tuple[int, ...]]:
    """Vertex permutations g -> s g for s in (t, tx, ty) on build_htg(p).

    Left multiplications preserve every edge colour; for a graph with regular
    automorphism group they generate the whole group.
    """
    from htgaut.htg import vertex_element

    spec = grp.group_spec(p)
    where = {vertex_element(p, v): v for v in range(p.order)}
    elements = [vertex_element(p, v) for v in range(p.order)]
    return [
        tuple(where[grp.multiply(spec, s, g)] for g in elements) for s in grp.generators(spec)
    ]
