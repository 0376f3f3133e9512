"""Automorphism groups and isomorphism by individualization-refinement.

The search follows one leftmost path of the refinement tree; its individualized
vertices form the base. Working from the deepest level upwards, every vertex
of the branching cell at level k that is not yet in the known orbit of the base
point is tested by a depth-first search of its subtree for a leaf equivalent
to the first leaf. Generators found at level k fix the first k base points, so
the generators of levels >= k generate the pointwise stabilizer of that prefix
and the group order is the product of the final orbit lengths.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

from htgaut.aut import kernel
from htgaut.aut.perm import Perm, PermGroup, orbit, orbit_partition
from htgaut.errors import TooLargeError
from htgaut.graph import Graph

MAX_ORDER = 500


@dataclass
class Node:
    lab: array
    pos: array
    cell: array
    clen: array
    ncells: int
    trace: int

    def cell_members(self, start: int) -> list[int]:
        return sorted(self.lab[start : start + self.clen[start]])


@dataclass(frozen=True)
class Partition:
    """Ordered partition of the vertex set; ``cells`` appear in refinement order."""

    cells: tuple[tuple[int, ...], ...]

    @property
    def cell_of(self) -> dict[int, int]:
        return {v: k for k, c in enumerate(self.cells) for v in c}

    @classmethod
    def unit(cls, order: int) -> Partition:
        return cls((tuple(range(order)),) if order else ())

    def is_discrete(self) -> bool:
        return all(len(c) == 1 for c in self.cells)


class Tree:
    """Refinement tree of one graph."""

    def __init__(self, g: Graph):
        self.graph = g
        self.n = g.order
        self.offsets, self.nbrs = g.csr

    def node_from_cells(self, cells) -> Node:
        n = self.n
        lab = array("i", [v for c in cells for v in c])
        if sorted(lab) != list(range(n)):
            raise ValueError("cells do not partition the vertex set")
        pos = array("i", [0] * n)
        cell = array("i", [0] * n)
        clen = array("i", [0] * n)
        starts = []
        start = 0
        for c in cells:
            if not c:
                continue
            starts.append(start)
            clen[start] = len(c)
            for k in range(start, start + len(c)):
                pos[lab[k]] = k
                cell[lab[k]] = start
            start += len(c)
        trace, added = kernel.refine(self.offsets, self.nbrs, lab, pos, cell, clen, starts, 0)
        return Node(lab, pos, cell, clen, len(starts) + added, trace)

    def root(self) -> Node:
        return self.node_from_cells([range(self.n)] if self.n else [])

    def child(self, node: Node, v: int) -> Node:
        lab, pos, cell, clen = node.lab[:], node.pos[:], node.cell[:], node.clen[:]
        x = cell[v]
        trace = kernel.individualize(lab, pos, cell, clen, v, node.trace)
        trace, added = kernel.refine(self.offsets, self.nbrs, lab, pos, cell, clen, [x], trace)
        return Node(lab, pos, cell, clen, node.ncells + 1 + added, trace)

    def target(self, node: Node) -> int:
        return kernel.target_cell(node.clen, self.n)

    def is_leaf(self, node: Node) -> bool:
        return node.ncells == self.n


class FirstPath:
    """Leftmost root-to-leaf path: base points, per-level nodes and traces."""

    def __init__(self, tree: Tree):
        self.tree = tree
        node = tree.root()
        self.nodes = [node]
        self.base: list[int] = []
        while not tree.is_leaf(node):
            v = node.cell_members(tree.target(node))[0]
            self.base.append(v)
            node = tree.child(node, v)
            self.nodes.append(node)
        self.leaf = node.lab

    def matches(self, node: Node, depth: int) -> bool:
        ref = self.nodes[depth]
        return node.trace == ref.trace and node.ncells == ref.ncells


def _check_size(g: Graph, limit: int) -> None:
    if g.order > limit:
        raise TooLargeError(f"graph has {g.order} vertices; limit is {limit}")


class AutSearch:
    def __init__(self, g: Graph, limit: int = MAX_ORDER):
        _check_size(g, limit)
        self.tree = Tree(g)
        self.path = FirstPath(self.tree)
        depth = len(self.path.base)
        self.level_gens: list[list[Perm]] = [[] for _ in range(depth)]
        self.leaves_visited = 0
        for k in reversed(range(depth)):
            self._complete_level(k)
        strong = [
            [p for level in self.level_gens[k:] for p in level] for k in range(depth)
        ]
        self.group = PermGroup.from_chain(g.order, self.path.base, strong)

    def gens_from(self, k: int) -> list[Perm]:
        return [p for level in self.level_gens[k:] for p in level]

    def _complete_level(self, k: int) -> None:
        node = self.path.nodes[k]
        b = self.path.base[k]
        cell = node.cell_members(node.cell[b])
        active = self.gens_from(k)
        label = orbit_partition(self.tree.n, active)
        failed: set[int] = set()
        for w in cell:
            if label[w] == label[b] or label[w] in failed:
                continue
            perm = self._search(node, k, w)
            if perm is None:
                failed.add(label[w])
                continue
            self.level_gens[k].append(perm)
            active.append(perm)
            label = orbit_partition(self.tree.n, active)
            failed = {label[f] for f in failed}

    def _search(self, node: Node, depth: int, v: int) -> Perm | None:
        tree = self.tree
        child = tree.child(node, v)
        if not self.path.matches(child, depth + 1):
            return None
        if tree.is_leaf(child):
            self.leaves_visited += 1
            perm = [0] * tree.n
            for a, b in zip(self.path.leaf, child.lab):
                perm[a] = b
            if kernel.is_automorphism(tree.offsets, tree.nbrs, array("i", perm)):
                return tuple(perm)
            return None
        for u in child.cell_members(tree.target(child)):
            found = self._search(child, depth + 1, u)
            if found is not None:
                return found
        return None


def automorphisms(g: Graph, limit: int = MAX_ORDER) -> PermGroup:
    """Full automorphism group of ``g`` with an exact stabilizer chain."""
    return AutSearch(g, limit).group


def group_order(group: PermGroup) -> int:
    return group.order()


def point_stabilizer_order(group: PermGroup, v: int) -> int:
    return group.point_stabilizer_order(v)


def refine_partition(g: Graph, initial: Partition | None = None) -> Partition:
    """Coarsest equitable refinement of ``initial`` (unit partition by default)."""
    tree = Tree(g)
    node = tree.root() if initial is None else tree.node_from_cells(initial.cells)
    cells = []
    x = 0
    while x < g.order:
        cells.append(tuple(node.cell_members(x)))
        x += node.clen[x]
    return Partition(tuple(cells))


def _invariant(g: Graph) -> tuple:
    return (g.order, len(g.edges), tuple(sorted(len(a) for a in g.adjacency)))


def find_isomorphism(g1: Graph, g2: Graph, limit: int = MAX_ORDER) -> Perm | None:
    """A vertex map ``iso`` with ``{iso[u], iso[v]}`` an edge of g2 for each edge of g1."""
    _check_size(g1, limit)
    _check_size(g2, limit)
    if _invariant(g1) != _invariant(g2):
        return None
    path1 = FirstPath(Tree(g1))
    aut2 = AutSearch(g2, limit)
    tree2 = aut2.tree
    if not path1.matches(tree2.root(), 0):
        return None
    target_edges = g2.edge_set

    def dfs(node: Node, depth: int, on_base: bool) -> Perm | None:
        if tree2.is_leaf(node):
            iso = [0] * g1.order
            for a, b in zip(path1.leaf, node.lab):
                iso[a] = b
            if all(
                ((iso[u], iso[v]) if iso[u] < iso[v] else (iso[v], iso[u])) in target_edges
                for u, v in g1.edges
            ):
                return tuple(iso)
            return None
        cands = node.cell_members(tree2.target(node))
        if on_base:
            # prefix equals g2's own base prefix, so its stabilizer is known
            b = aut2.path.base[depth]
            stab = aut2.gens_from(depth)
            reps, seen = [b], set(orbit(b, stab))
            for u in cands:
                if u not in seen:
                    reps.append(u)
                    seen.update(orbit(u, stab))
            cands = reps
        for u in cands:
            child = tree2.child(node, u)
            if not path1.matches(child, depth + 1):
                continue
            found = dfs(child, depth + 1, on_base and u == aut2.path.base[depth])
            if found is not None:
                return found
        return None

    return dfs(tree2.root(), 0, True)


def are_isomorphic(g1: Graph, g2: Graph, limit: int = MAX_ORDER) -> bool:
    return find_isomorphism(g1, g2, limit) is not None
