"""Independent automorphism engine: refinement, search, stabilizer chains."""

from htgaut.aut import kernel
from htgaut.aut.arcs import SArcReport, s_arc_regularity
from htgaut.aut.perm import PermGroup
from htgaut.aut.search import (
    Partition,
    are_isomorphic,
    automorphisms,
    find_isomorphism,
    group_order,
    point_stabilizer_order,
    refine_partition,
)

__all__ = [
    "Partition",
    "PermGroup",
    "SArcReport",
    "are_isomorphic",
    "automorphisms",
    "find_isomorphism",
    "group_order",
    "kernel",
    "point_stabilizer_order",
    "refine_partition",
    "s_arc_regularity",
]
