"""s-arc transitivity and regularity of cubic graphs."""

from __future__ import annotations

from dataclasses import dataclass

from htgaut.aut.perm import PermGroup
from htgaut.errors import NotCubicError
from htgaut.graph import Graph, is_connected

MAX_S = 8


@dataclass(frozen=True)
class SArcReport:
    """``s_transitive_up_to`` is -1 when the group is not even vertex-transitive;
    0 means vertex- but not arc-transitive. ``regular_at`` is the s at which the
    action on s-arcs is regular (0 for a regular action on vertices)."""

    s_transitive_up_to: int
    regular_at: int | None
    vertex_stabilizer_order: int


def arc_count(g: Graph, s: int) -> int:
    if s == 0:
        return g.order
    return g.order * 3 * 2 ** (s - 1)


def first_arc(g: Graph, s: int) -> tuple[int, ...]:
    arc = [0]
    prev = -1
    for _ in range(s):
        nxt = next(w for w in g.adjacency[arc[-1]] if w != prev)
        prev = arc[-1]
        arc.append(nxt)
    return tuple(arc)


def arc_orbit_size(group: PermGroup, arc: tuple[int, ...]) -> int:
    seen = {arc}
    frontier = [arc]
    while frontier:
        nxt = []
        for a in frontier:
            for p in group.generators:
                b = tuple(p[v] for v in a)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return len(seen)


def s_arc_regularity(g: Graph, group: PermGroup) -> SArcReport:
    if any(len(a) != 3 for a in g.adjacency) or not is_connected(g):
        raise NotCubicError("s-arc analysis needs a connected cubic graph")
    order = group.order()
    stab = group.point_stabilizer_order(0)
    up_to, regular = -1, None
    for s in range(MAX_S + 1):
        count = arc_count(g, s)
        # a transitive action needs at least as many elements as s-arcs
        if order < count or arc_orbit_size(group, first_arc(g, s)) != count:
            break
        up_to = s
        if order == count:
            regular = s
            break
    return SArcReport(up_to, regular, stab)
